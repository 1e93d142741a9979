//! Standard families, the corona construction, and the figure fixtures.

use crate::{Error, Graph, Result, MAX_VERTICES};

pub fn complete(n: usize) -> Result<Graph> {
    let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    Graph::from_edges(n, edges)
}

/// Chordless path on `n` vertices; `path(1)` is `K1`.
pub fn path(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::TooSmall { family: "path", min: 1, n });
    }
    Graph::from_edges(n, (1..n).map(|v| (v - 1, v)))
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::TooSmall { family: "cycle", min: 3, n });
    }
    Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n)))
}

/// `K_{a,b}` with parts `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    let edges = (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v)));
    Graph::from_edges(a + b, edges)
}

/// Disjoint union, `first` keeping indices `0..first.n()`.
pub fn disjoint_union(first: &Graph, second: &Graph) -> Result<Graph> {
    let off = first.n();
    let edges = first
        .edges()
        .into_iter()
        .map(|e| e.endpoints())
        .chain(second.edges().into_iter().map(|e| (e.u() + off, e.v() + off)));
    Graph::from_edges(off + second.n(), edges.collect::<Vec<_>>())
}

/// The corona `X ∘ {H_1, ..., H_k}`: the disjoint union of `base` and every
/// `attached[i]`, with base vertex `i` joined to all vertices of `attached[i]`.
///
/// Base vertices keep indices `0..k`; the copies of the attached graphs follow
/// in order.
pub fn corona(base: &Graph, attached: &[Graph]) -> Result<Graph> {
    if attached.len() != base.n() {
        return Err(Error::CoronaArity {
            base: base.n(),
            attached: attached.len(),
        });
    }
    if attached.iter().any(|h| h.n() == 0) {
        return Err(Error::EmptyCoronaPart);
    }
    let total = base.n() + attached.iter().map(Graph::n).sum::<usize>();
    if total > MAX_VERTICES {
        return Err(Error::Capacity {
            requested: total,
            max: MAX_VERTICES,
        });
    }
    let mut edges: Vec<(usize, usize)> = base.edges().iter().map(|e| e.endpoints()).collect();
    let mut off = base.n();
    for (i, h) in attached.iter().enumerate() {
        edges.extend(h.edges().iter().map(|e| (e.u() + off, e.v() + off)));
        edges.extend((0..h.n()).map(|j| (i, off + j)));
        off += h.n();
    }
    Graph::from_edges(total, edges)
}

/// `X ∘ K1`: one pendant vertex hung on every vertex of `base`.
pub fn corona_k1(base: &Graph) -> Result<Graph> {
    let k1 = complete(1)?;
    corona(base, &vec![k1; base.n()])
}

/// Names accepted by [`fixture`].
pub const FIXTURE_NAMES: &[&str] = &[
    "fig1_G", "fig1_H", "fig2_G", "fig3_G", "fig3_H", "fig4_G", "fig4_H", "fig5_X", "fig5_G",
    "fig6_G1", "fig6_G2", "fig6b_G1", "fig6b_G2", "fig7_G1", "fig7_G2", "fig7_G3", "fig8_G1",
    "fig8_G2", "fig8_G3", "fig9_G1", "fig9_G2", "fig9_G3", "fig10_G",
];

fn labeled(labels: &str, edges: &str) -> Graph {
    let labels: Vec<&str> = labels.split_whitespace().collect();
    let index = |name: &str| {
        labels
            .iter()
            .position(|l| *l == name)
            .unwrap_or_else(|| panic!("fixture label {name}"))
    };
    let edges: Vec<(usize, usize)> = edges
        .split_whitespace()
        .map(|e| {
            let (a, b) = e.split_once('-').expect("fixture edge");
            (index(a), index(b))
        })
        .collect();
    Graph::from_edges(labels.len(), edges)
        .expect("fixture edges")
        .with_labels(labels)
}

fn square() -> Graph {
    labeled("a b c d", "a-b b-c c-d d-a")
}

// Two 6-vertex graphs appear under two figure names each.
fn three_fan() -> Graph {
    labeled("u v t y x w", "u-v v-t v-y y-x t-x x-w")
}

fn domino_tail() -> Graph {
    labeled("a b c d e f", "a-b a-d a-c c-e b-e d-e d-f")
}

/// Graphs drawn in the figures, with the figures' vertex names where they
/// have them. Unnamed vertices get fresh letters, or `b*`/`t*` for bottom
/// and top rows.
pub fn fixture(name: &str) -> Result<Graph> {
    let g = match name {
        "fig1_G" => labeled("a b c d e f g", "a-b b-e b-c e-f c-f c-d c-g"),
        "fig1_H" | "fig3_H" => three_fan(),
        "fig2_G" => labeled("a b c d e f g", "a-b b-c c-d d-g c-e e-f f-g"),
        "fig3_G" => labeled("a b c d e f", "a-b b-c c-d b-e c-f e-f"),
        "fig4_G" => labeled("a b c d e f g", "a-b a-c b-d c-e d-e e-f e-g"),
        "fig4_H" => labeled(
            "b1 b2 b3 b4 t1 t2 t3 t4",
            "b1-b2 b2-b3 b3-b4 t1-t2 t2-t3 t3-t4 b1-t2 b3-t3",
        ),
        "fig5_X" => labeled("v1 v2 v3 v4", "v1-v2 v2-v3 v3-v4 v1-v3"),
        "fig5_G" => {
            let parts = [complete(3)?, complete(2)?, path(3)?, cycle(4)?];
            let labels = "v1 v2 v3 v4 k1 k2 y u w x m z c1 t c2 c3";
            return Ok(corona(&fixture("fig5_X")?, &parts)?
                .with_labels(labels.split_whitespace()));
        }
        "fig6_G1" => labeled(
            "f a b c d e g h i j k l",
            "f-a a-c c-b c-i c-e c-h e-d d-i g-h h-i i-j i-l k-l",
        ),
        "fig6_G2" => labeled("x a b c d y e", "x-a a-b b-c x-d d-y b-y c-e"),
        "fig6b_G1" => labeled("p q v r x s t y", "p-q p-v q-v q-r r-x r-s x-t s-y t-y"),
        "fig6b_G2" => labeled(
            "a b c d e f u v w",
            "a-b b-e e-f f-u b-c c-d d-f u-v u-w",
        ),
        "fig7_G1" | "fig8_G2" => square(),
        "fig7_G2" | "fig8_G3" => domino_tail(),
        "fig7_G3" => labeled(
            "b1 b2 b3 t1 t2 t3",
            "b1-t1 t1-t2 t2-b2 b2-b3 b3-t3 t3-b1 b1-b2 t2-t3 t1-b3",
        ),
        "fig8_G1" => labeled(
            "r1 r2 p1 p2 p3 q1 q2 q3",
            "r1-r2 r2-p2 r2-q2 p1-p2 p2-p3 q1-q2 q2-q3 p2-q2 p3-q3",
        ),
        "fig9_G1" => labeled("b1 b2 b3 t1 t2 t3", "b1-b2 b2-b3 t1-t2 t2-t3 b1-t1 b2-t2 b3-t3"),
        "fig9_G2" => labeled("b1 b2 b3 b4 t1 t2", "b1-b2 b2-b3 b3-b4 b1-t1 b2-t1 t1-t2 b3-t2 t2-b4"),
        "fig9_G3" => labeled(
            "b1 b2 b3 b4 b5 t1 t2 t3 t4",
            "b1-b2 b2-b3 b3-b4 b4-b5 b1-t1 t1-t2 b3-t2 b4-t3 t3-t4 b4-t4 t3-b5 b5-t4",
        ),
        "fig10_G" => labeled(
            "x a b y c d e f g h",
            "x-b b-c c-d d-e e-g x-a a-y y-c d-f g-h f-h",
        ),
        _ => return Err(Error::UnknownFixture(name.to_string())),
    };
    Ok(g)
}

/// Edges named `e1, e2, ...` in a figure, as label pairs.
pub fn fixture_named_edges(name: &str) -> Option<&'static [(&'static str, &'static str)]> {
    let edges: &'static [(&str, &str)] = match name {
        "fig7_G3" => &[
            ("b1", "t1"),
            ("t1", "t2"),
            ("t2", "b2"),
            ("b2", "b3"),
            ("b3", "t3"),
            ("t3", "b1"),
        ],
        "fig9_G1" => &[("t1", "t2"), ("b1", "b2"), ("b3", "t3")],
        "fig9_G2" => &[("b1", "b2"), ("t1", "t2"), ("b3", "b4")],
        "fig9_G3" => &[("t1", "t2"), ("b2", "b3"), ("b4", "t3"), ("b5", "t4")],
        "fig10_G" => &[("a", "y"), ("x", "b"), ("c", "d"), ("e", "g"), ("f", "h")],
        _ => return None,
    };
    Some(edges)
}
