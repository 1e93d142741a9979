//! Canonical labeling and isomorph-free generation of small graphs.
//!
//! The canonical key of a graph is the least upper-triangle adjacency string
//! over all orderings that respect a colour-refined degree partition. Two
//! graphs get the same key exactly when they are isomorphic.

use std::collections::HashSet;

use crate::classifiers::is_tree;
use crate::{Graph, VertexSet, MAX_VERTICES};

/// Upper-triangle adjacency bits, column by column: `(0,1), (0,2), (1,2), ...`
/// with the first pair most significant, plus the vertex count.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonKey {
    n: u8,
    bits: u128,
}

/// `g` relabeled so that old vertex `perm[i]` becomes vertex `i`.
pub fn permuted(g: &Graph, perm: &[usize]) -> Graph {
    assert_eq!(perm.len(), g.n(), "permutation length");
    let mut pos = [0usize; MAX_VERTICES];
    for (i, &v) in perm.iter().enumerate() {
        pos[v] = i;
    }
    let edges: Vec<(usize, usize)> = g.edges().iter().map(|e| (pos[e.u()], pos[e.v()])).collect();
    Graph::from_edges(g.n(), edges).expect("relabeling keeps the graph simple")
}

/// Key of `g` under the vertex order `perm`.
pub fn key_under(g: &Graph, perm: &[usize]) -> CanonKey {
    let mut bits = 0u128;
    for j in 1..perm.len() {
        for i in 0..j {
            bits = bits << 1 | u128::from(g.has_edge(perm[i], perm[j]));
        }
    }
    CanonKey {
        n: perm.len() as u8,
        bits,
    }
}

/// Stable colouring by iterated neighbour-colour refinement, starting from
/// degrees. Colours are ranks of sorted signatures, hence invariant.
fn refined_colours(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut colour: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut classes = 0;
    loop {
        let signatures: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut around: Vec<usize> = g.neighbors(v).iter().map(|w| colour[w]).collect();
                around.sort_unstable();
                (colour[v], around)
            })
            .collect();
        let mut distinct = signatures.clone();
        distinct.sort();
        distinct.dedup();
        let next: Vec<usize> = signatures
            .iter()
            .map(|s| distinct.binary_search(s).expect("present"))
            .collect();
        if distinct.len() == classes {
            return next;
        }
        classes = distinct.len();
        colour = next;
    }
}

struct Search<'g> {
    g: &'g Graph,
    /// Vertices allowed at each position.
    cells: Vec<VertexSet>,
    total_bits: u32,
    best: Option<(u128, Vec<usize>)>,
}

impl Search<'_> {
    fn run(&mut self, perm: &mut Vec<usize>, used: VertexSet, prefix: u128) {
        let depth = perm.len();
        if depth == self.g.n() {
            if self.best.as_ref().is_none_or(|(b, _)| prefix < *b) {
                self.best = Some((prefix, perm.clone()));
            }
            return;
        }
        let placed_bits = (depth * (depth + 1) / 2) as u32;
        for v in (self.cells[depth] - used).iter() {
            let mut next = prefix;
            for &u in perm.iter() {
                next = next << 1 | u128::from(self.g.has_edge(u, v));
            }
            if let Some((best, _)) = &self.best {
                let best_prefix = best >> (self.total_bits - placed_bits);
                if next > best_prefix {
                    continue;
                }
            }
            perm.push(v);
            self.run(perm, used.with(v), next);
            perm.pop();
        }
    }
}

/// The least-key ordering and its key.
fn canonical_order(g: &Graph) -> (CanonKey, Vec<usize>) {
    let n = g.n();
    let colour = refined_colours(g);
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (colour[v], v));
    let cells = order
        .iter()
        .map(|&v| (0..n).filter(|&w| colour[w] == colour[v]).collect())
        .collect();
    let mut search = Search {
        g,
        cells,
        total_bits: (n * n.saturating_sub(1) / 2) as u32,
        best: None,
    };
    search.run(&mut Vec::with_capacity(n), VertexSet::EMPTY, 0);
    let (bits, perm) = search.best.expect("some ordering exists");
    (CanonKey { n: n as u8, bits }, perm)
}

pub fn canonical_key(g: &Graph) -> CanonKey {
    canonical_order(g).0
}

/// The canonical representative of the isomorphism class of `g`, unlabeled.
pub fn canonical_form(g: &Graph) -> Graph {
    permuted(g, &canonical_order(g).1)
}

pub fn are_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.n() == b.n() && a.edge_count() == b.edge_count() && canonical_key(a) == canonical_key(b)
}

/// Adds one vertex to every class in `base` in every way allowed by
/// `neighbourhoods`, keeping one canonical graph per class.
fn extend_classes(base: &[Graph], neighbourhoods: impl Fn(&Graph) -> Vec<VertexSet>) -> Vec<Graph> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for g in base {
        let n = g.n();
        for s in neighbourhoods(g) {
            let edges = g
                .edges()
                .iter()
                .map(|e| e.endpoints())
                .chain(s.iter().map(|v| (v, n)))
                .collect::<Vec<_>>();
            let h = Graph::from_edges(n + 1, edges).expect("within capacity");
            let (key, perm) = canonical_order(&h);
            if seen.insert(key) {
                out.push((key, permuted(&h, &perm)));
            }
        }
    }
    out.sort_by_key(|(k, _)| *k);
    out.into_iter().map(|(_, g)| g).collect()
}

fn grow(n: usize, start: Graph, neighbourhoods: impl Fn(&Graph) -> Vec<VertexSet>) -> Vec<Graph> {
    assert!(n < MAX_VERTICES, "exhaustive generation is for small n");
    if n == 0 {
        return vec![Graph::empty(0).expect("empty graph")];
    }
    let mut level = vec![start];
    for _ in 1..n {
        level = extend_classes(&level, &neighbourhoods);
    }
    level
}

/// One graph per isomorphism class on `n` vertices, sorted by canonical key.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    grow(n, Graph::empty(1).expect("K1"), |g| g.universe().subsets().collect())
}

/// Connected classes on `n` vertices; every connected graph arises from a
/// connected one by adding a vertex with a non-empty neighbourhood.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    grow(n, Graph::empty(1).expect("K1"), |g| g.universe().subsets().skip(1).collect())
}

/// Trees on `n` vertices, grown by attaching leaves.
pub fn trees(n: usize) -> Vec<Graph> {
    let out = grow(n, Graph::empty(1).expect("K1"), |g| {
        g.universe().iter().map(VertexSet::singleton).collect()
    });
    debug_assert!(out.iter().all(is_tree));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{cycle, fixture, path};

    fn permutations(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in permutations(n - 1) {
            for i in 0..=p.len() {
                let mut q = p.clone();
                q.insert(i, n - 1);
                out.push(q);
            }
        }
        out
    }

    fn brute_key(g: &Graph) -> CanonKey {
        permutations(g.n())
            .iter()
            .map(|p| key_under(g, p))
            .min()
            .unwrap()
    }

    #[test]
    fn key_is_invariant_under_relabeling() {
        let g = fixture("fig2_G").unwrap().without_labels();
        let k = canonical_key(&g);
        for p in permutations(7).iter().step_by(97) {
            assert_eq!(canonical_key(&permuted(&g, p)), k);
        }
    }

    #[test]
    fn keys_separate_small_classes() {
        assert_ne!(canonical_key(&path(4).unwrap()), canonical_key(&cycle(4).unwrap()));
        assert!(are_isomorphic(
            &fixture("fig7_G1").unwrap().without_labels(),
            &cycle(4).unwrap()
        ));
    }

    #[test]
    fn class_counts() {
        let totals: Vec<usize> = (0..=6).map(|n| all_graphs(n).len()).collect();
        assert_eq!(totals, [1, 1, 2, 4, 11, 34, 156]);
        let connected: Vec<usize> = (1..=6).map(|n| connected_graphs(n).len()).collect();
        assert_eq!(connected, [1, 1, 2, 6, 21, 112]);
        let tree_counts: Vec<usize> = (1..=8).map(|n| trees(n).len()).collect();
        assert_eq!(tree_counts, [1, 1, 1, 2, 3, 6, 11, 23]);
    }

    #[test]
    fn canonical_forms_are_fixed_points() {
        for g in all_graphs(5) {
            assert_eq!(canonical_form(&g), g);
        }
    }

    #[test]
    fn refined_search_matches_full_permutation_minimum() {
        for n in 1..=6 {
            let classes = all_graphs(n);
            let brute: HashSet<CanonKey> = classes.iter().map(brute_key).collect();
            assert_eq!(brute.len(), classes.len(), "n = {n}");
        }
    }
}
