//! Structural predicates on graphs.

use crate::matching::{mu, Matching};
use crate::stability::{alpha, alpha_within, is_stable, psi_member_oracle};
use crate::{Error, Graph, Result, VertexSet};

/// Proof that a graph is very well-covered: no isolated vertices,
/// well-covered, and `α = n/2`.
///
/// Operations whose correctness depends on that class take this witness
/// instead of a bare graph.
#[derive(Clone, Copy, Debug)]
pub struct VeryWellCovered<'g> {
    graph: &'g Graph,
    alpha: usize,
}

impl<'g> VeryWellCovered<'g> {
    pub fn new(graph: &'g Graph) -> Result<Self> {
        if is_very_well_covered(graph) {
            Ok(VeryWellCovered {
                graph,
                alpha: graph.n() / 2,
            })
        } else {
            Err(Error::NotVeryWellCovered)
        }
    }

    pub fn graph(&self) -> &'g Graph {
        self.graph
    }

    pub fn alpha(&self) -> usize {
        self.alpha
    }
}

/// Every maximal stable set is maximum.
pub fn is_well_covered(g: &Graph) -> bool {
    let a = alpha(g);
    let all = g.universe();
    all.subsets()
        .filter(|&s| s.len() < a && is_stable(g, s))
        .all(|s| g.closed_nbhd(s) != all)
}

pub fn is_very_well_covered(g: &Graph) -> bool {
    g.n() > 0
        && g.n().is_multiple_of(2)
        && g.isolated_vertices().is_empty()
        && alpha(g) == g.n() / 2
        && is_well_covered(g)
}

/// `α(G) + μ(G) = |V(G)|`.
pub fn is_koenig_egervary(g: &Graph) -> bool {
    alpha(g) + mu(g) == g.n()
}

pub fn is_triangle_free(g: &Graph) -> bool {
    g.edges()
        .iter()
        .all(|e| g.neighbors(e.u()).is_disjoint(g.neighbors(e.v())))
}

/// A chordless 4-cycle `[a, b, c, d]`, smallest in lexicographic order of the
/// non-adjacent pair `(a, c)` and then `(b, d)`.
pub fn find_chordless_c4(g: &Graph) -> Option<[usize; 4]> {
    for a in 0..g.n() {
        for c in a + 1..g.n() {
            if g.has_edge(a, c) {
                continue;
            }
            let common = g.neighbors(a) & g.neighbors(c);
            for b in common.iter() {
                let rest = common - g.neighbors(b);
                if let Some(d) = rest.iter().find(|&d| d > b) {
                    return Some([a, b, c, d]);
                }
            }
        }
    }
    None
}

/// No induced `C4`.
pub fn is_c4_free(g: &Graph) -> bool {
    find_chordless_c4(g).is_none()
}

/// First `S ∈ Ψ(G)` in ascending order whose closed neighborhood does not
/// induce a König–Egerváry graph.
pub fn psi_neighborhood_ke_violation(g: &Graph) -> Option<VertexSet> {
    g.universe().subsets().find(|&s| {
        if !psi_member_oracle(g, s) {
            return false;
        }
        let closed = g.closed_nbhd(s);
        let (sub, _) = g.induced_subgraph(closed).expect("subset of the vertex set");
        alpha_within(g, closed) + mu(&sub) != closed.len()
    })
}

pub fn psi_neighborhoods_are_ke(g: &Graph) -> bool {
    psi_neighborhood_ke_violation(g).is_none()
}

pub fn is_bipartite(g: &Graph) -> bool {
    let mut side = [None::<bool>; crate::MAX_VERTICES];
    for root in 0..g.n() {
        if side[root].is_some() {
            continue;
        }
        side[root] = Some(false);
        let mut stack = vec![root];
        while let Some(u) = stack.pop() {
            let su = side[u].expect("visited");
            for w in g.neighbors(u).iter() {
                match side[w] {
                    None => {
                        side[w] = Some(!su);
                        stack.push(w);
                    }
                    Some(sw) if sw == su => return false,
                    Some(_) => {}
                }
            }
        }
    }
    true
}

pub fn component_count(g: &Graph) -> usize {
    let mut left = g.universe();
    let mut count = 0;
    while let Some(v) = left.first() {
        left = left - g.component_of(v);
        count += 1;
    }
    count
}

pub fn is_forest(g: &Graph) -> bool {
    g.edge_count() + component_count(g) == g.n()
}

pub fn is_tree(g: &Graph) -> bool {
    g.n() > 0 && g.is_connected() && is_forest(g)
}

/// The perfect matching made of pendant edges, when one exists: every vertex
/// is pendant or the unique neighbor of exactly one pendant vertex.
pub fn pendant_perfect_matching(g: &Graph) -> Option<Matching> {
    if g.n() == 0 || g.n() % 2 == 1 {
        return None;
    }
    let mut edges = Vec::with_capacity(g.n() / 2);
    let mut covered = VertexSet::EMPTY;
    for p in g.pendant_vertices().iter() {
        if covered.contains(p) {
            continue;
        }
        let q = g.neighbors(p).first().expect("pendant vertex has a neighbor");
        if covered.contains(q) {
            return None;
        }
        covered = covered.with(p).with(q);
        edges.push((p, q));
    }
    if covered != g.universe() {
        return None;
    }
    Matching::from_pairs(g, &edges).ok()
}
