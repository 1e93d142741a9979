//! Matchings, alternating cycles, and unique perfect matchings.
//!
//! A matching `M` is *uniquely restricted* when it is the only perfect
//! matching of the subgraph induced by the vertices it saturates, which
//! happens exactly when no cycle alternates between edges in and out of `M`.

use std::fmt;

use crate::classifiers::VeryWellCovered;
use crate::{Edge, Error, Graph, Result, VertexSet, MAX_VERTICES};

/// A set of pairwise disjoint edges of a particular graph, edges sorted.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matching {
    edges: Vec<Edge>,
    mate: [Option<u8>; MAX_VERTICES],
}

impl Matching {
    /// Validates that every edge belongs to `g` and no two share a vertex.
    pub fn new(g: &Graph, edges: impl IntoIterator<Item = Edge>) -> Result<Matching> {
        let mut edges: Vec<Edge> = edges.into_iter().collect();
        edges.sort();
        let mut mate = [None; MAX_VERTICES];
        let mut owner: [Option<Edge>; MAX_VERTICES] = [None; MAX_VERTICES];
        for &e in &edges {
            let (u, v) = e.endpoints();
            g.check_vertex(v)?;
            if !g.has_edge(u, v) {
                return Err(Error::MissingEdge(e));
            }
            for x in [u, v] {
                if let Some(prev) = owner[x] {
                    return Err(Error::OverlappingEdges(prev, e));
                }
                owner[x] = Some(e);
            }
            mate[u] = Some(v as u8);
            mate[v] = Some(u as u8);
        }
        Ok(Matching { edges, mate })
    }

    pub fn from_pairs(g: &Graph, pairs: &[(usize, usize)]) -> Result<Matching> {
        let edges = pairs
            .iter()
            .map(|&(a, b)| Edge::new(a, b))
            .collect::<Result<Vec<_>>>()?;
        Matching::new(g, edges)
    }

    pub fn from_labels(g: &Graph, pairs: &[(&str, &str)]) -> Result<Matching> {
        let pairs = pairs
            .iter()
            .map(|&(a, b)| Ok((g.vertex(a)?, g.vertex(b)?)))
            .collect::<Result<Vec<_>>>()?;
        Matching::from_pairs(g, &pairs)
    }

    pub fn empty() -> Matching {
        Matching {
            edges: Vec::new(),
            mate: [None; MAX_VERTICES],
        }
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn mate(&self, v: usize) -> Option<usize> {
        self.mate.get(v).copied().flatten().map(usize::from)
    }

    pub fn contains(&self, u: usize, v: usize) -> bool {
        self.mate(u) == Some(v)
    }

    /// Vertices covered by the matching.
    pub fn saturated(&self) -> VertexSet {
        self.edges.iter().fold(VertexSet::EMPTY, |acc, e| acc | e.vertices())
    }

    pub fn is_perfect(&self, g: &Graph) -> bool {
        self.saturated() == g.universe()
    }

    /// Sorted `"u-v"` strings, using labels of `g`.
    pub fn labeled_pairs(&self, g: &Graph) -> Vec<String> {
        self.edges
            .iter()
            .map(|e| format!("{}-{}", g.label(e.u()), g.label(e.v())))
            .collect()
    }
}

impl fmt::Debug for Matching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set()
            .entries(self.edges.iter().map(|e| e.to_string()))
            .finish()
    }
}

/// Matching-number search with memoized `μ(G[free])`.
struct Search<'g> {
    g: &'g Graph,
    memo: Vec<u8>,
}

const UNKNOWN: u8 = u8::MAX;

impl<'g> Search<'g> {
    fn new(g: &'g Graph) -> Self {
        Search {
            g,
            memo: vec![UNKNOWN; 1 << g.n()],
        }
    }

    fn mu(&mut self, free: u16) -> usize {
        let cached = self.memo[free as usize];
        if cached != UNKNOWN {
            return cached as usize;
        }
        let best = if free.count_ones() < 2 {
            0
        } else {
            let v = free.trailing_zeros() as usize;
            let rest = free & !(1 << v);
            let cap = (free.count_ones() / 2) as usize;
            let mut best = self.mu(rest);
            for w in (self.g.neighbors(v) & VertexSet::from_bits(rest)).iter() {
                if best == cap {
                    break;
                }
                best = best.max(1 + self.mu(rest & !(1 << w)));
            }
            best
        };
        self.memo[free as usize] = best as u8;
        best
    }

    /// Calls `visit` on every matching of exactly `k` edges inside `free`.
    /// Returning `false` from `visit` stops the walk.
    fn each_of_size(
        &mut self,
        free: u16,
        k: usize,
        chosen: &mut Vec<Edge>,
        visit: &mut dyn FnMut(&[Edge]) -> bool,
    ) -> bool {
        if k == 0 {
            return visit(chosen);
        }
        if self.mu(free) < k {
            return true;
        }
        let v = free.trailing_zeros() as usize;
        let rest = free & !(1 << v);
        for w in (self.g.neighbors(v) & VertexSet::from_bits(rest)).iter() {
            chosen.push(Edge::new(v, w).expect("distinct endpoints"));
            let go_on = self.each_of_size(rest & !(1 << w), k - 1, chosen, visit);
            chosen.pop();
            if !go_on {
                return false;
            }
        }
        self.each_of_size(rest, k, chosen, visit)
    }
}

/// `μ(G)`, the size of a maximum matching.
pub fn mu(g: &Graph) -> usize {
    Search::new(g).mu(g.universe().bits())
}

fn collect_of_size(g: &Graph, k: usize, limit: Option<usize>) -> Vec<Matching> {
    let mut out = Vec::new();
    let mut search = Search::new(g);
    search.each_of_size(g.universe().bits(), k, &mut Vec::new(), &mut |edges| {
        out.push(Matching::new(g, edges.iter().copied()).expect("search yields matchings"));
        limit.is_none_or(|l| out.len() < l)
    });
    out.sort_by(|a, b| a.edges.cmp(&b.edges));
    out
}

/// Every matching, including the empty one, sorted by edge list.
pub fn enumerate_matchings(g: &Graph) -> Vec<Matching> {
    (0..=mu(g)).flat_map(|k| collect_of_size(g, k, None)).collect()
}

pub fn enumerate_maximum_matchings(g: &Graph) -> Vec<Matching> {
    collect_of_size(g, mu(g), None)
}

pub fn enumerate_perfect_matchings(g: &Graph) -> Vec<Matching> {
    if g.n() % 2 == 1 {
        return Vec::new();
    }
    collect_of_size(g, g.n() / 2, None)
}

pub fn count_perfect_matchings(g: &Graph) -> u64 {
    fn count(g: &Graph, free: u16, memo: &mut Vec<Option<u64>>) -> u64 {
        if free == 0 {
            return 1;
        }
        if let Some(c) = memo[free as usize] {
            return c;
        }
        let v = free.trailing_zeros() as usize;
        let rest = free & !(1 << v);
        let total = (g.neighbors(v) & VertexSet::from_bits(rest))
            .iter()
            .map(|w| count(g, rest & !(1 << w), memo))
            .sum();
        memo[free as usize] = Some(total);
        total
    }
    if g.n() % 2 == 1 {
        return 0;
    }
    count(g, g.universe().bits(), &mut vec![None; 1 << g.n()])
}

pub fn find_maximum_matching(g: &Graph) -> Matching {
    let mut search = Search::new(g);
    let k = search.mu(g.universe().bits());
    let mut found = None;
    search.each_of_size(g.universe().bits(), k, &mut Vec::new(), &mut |edges| {
        found = Some(edges.to_vec());
        false
    });
    Matching::new(g, found.expect("a matching of size μ exists")).expect("valid matching")
}

pub fn find_perfect_matching(g: &Graph) -> Option<Matching> {
    let m = find_maximum_matching(g);
    m.is_perfect(g).then_some(m)
}

/// A cycle whose edges alternate between a matching and its complement.
///
/// `vertices[0]–vertices[1]` is a matching edge; `in_matching[i]` tells
/// whether the edge from `vertices[i]` to the next vertex (cyclically) is
/// matched.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct AlternatingCycle {
    vertices: Vec<usize>,
    in_matching: Vec<bool>,
}

impl AlternatingCycle {
    fn from_vertices(vertices: Vec<usize>) -> Self {
        let in_matching = (0..vertices.len()).map(|i| i % 2 == 0).collect();
        AlternatingCycle {
            vertices,
            in_matching,
        }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn in_matching(&self) -> &[bool] {
        &self.in_matching
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.vertices.iter().copied().collect()
    }

    /// Cycle edges in traversal order.
    pub fn edges(&self) -> Vec<Edge> {
        let k = self.vertices.len();
        (0..k)
            .map(|i| Edge::new(self.vertices[i], self.vertices[(i + 1) % k]).expect("cycle edge"))
            .collect()
    }

    pub fn matched_edges(&self) -> Vec<Edge> {
        let edges = self.edges();
        edges
            .into_iter()
            .zip(&self.in_matching)
            .filter_map(|(e, &m)| m.then_some(e))
            .collect()
    }

    /// Edges of `g` joining two cycle vertices that are not cycle edges.
    pub fn chords(&self, g: &Graph) -> Vec<Edge> {
        let on_cycle = self.edges();
        let (sub, map) = g.induced_subgraph(self.vertex_set()).expect("cycle inside graph");
        sub.edges()
            .into_iter()
            .map(|e| Edge::new(map[e.u()], map[e.v()]).expect("distinct"))
            .filter(|e| !on_cycle.contains(e))
            .collect()
    }

    pub fn is_chordless(&self, g: &Graph) -> bool {
        self.chords(g).is_empty()
    }

    /// Checks the claimed structure against `g` and `m`: even length at
    /// least four, distinct vertices, consecutive vertices adjacent, flags
    /// alternating and agreeing with `m`.
    pub fn is_valid_for(&self, g: &Graph, m: &Matching) -> bool {
        let k = self.vertices.len();
        if k < 4 || k % 2 == 1 || self.in_matching.len() != k || self.vertex_set().len() != k {
            return false;
        }
        (0..k).all(|i| {
            let (a, b) = (self.vertices[i], self.vertices[(i + 1) % k]);
            a < g.n()
                && g.has_edge(a, b)
                && m.contains(a, b) == self.in_matching[i]
                && self.in_matching[i] != self.in_matching[(i + 1) % k]
        })
    }

    pub fn display(&self, g: &Graph) -> String {
        let names: Vec<_> = self.vertices.iter().map(|&v| g.label(v).into_owned()).collect();
        names.join("-")
    }
}

impl fmt::Debug for AlternatingCycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AlternatingCycle{:?}", self.vertices)
    }
}

/// Depth-first walk over `M`-alternating cycles.
///
/// Seeds are the matched edges in sorted order; a cycle is reported from its
/// smallest matched edge `(u, v)` as `u, v, ...`, so each cycle appears once.
fn each_alternating_cycle(g: &Graph, m: &Matching, visit: &mut dyn FnMut(&[usize]) -> bool) {
    for (i, seed) in m.edges().iter().enumerate() {
        let allowed: VertexSet = m.edges()[i..]
            .iter()
            .fold(VertexSet::EMPTY, |acc, e| acc | e.vertices());
        let (a, b) = seed.endpoints();
        let mut path = vec![a, b];
        if !extend(g, m, allowed, &mut path, visit) {
            return;
        }
    }

    fn extend(
        g: &Graph,
        m: &Matching,
        allowed: VertexSet,
        path: &mut Vec<usize>,
        visit: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        let start = path[0];
        let end = *path.last().expect("non-empty path");
        let on_path: VertexSet = path.iter().copied().collect();
        let mate_of_end = m.mate(end);
        for y in (g.neighbors(end) & allowed).iter() {
            if Some(y) == mate_of_end {
                continue;
            }
            if y == start {
                if !visit(path) {
                    return false;
                }
                continue;
            }
            if on_path.contains(y) {
                continue;
            }
            let z = m.mate(y).expect("allowed vertices are matched");
            path.push(y);
            path.push(z);
            let go_on = extend(g, m, allowed, path, visit);
            path.truncate(path.len() - 2);
            if !go_on {
                return false;
            }
        }
        true
    }
}

/// First alternating cycle in the walk order, if any.
pub fn find_alternating_cycle(g: &Graph, m: &Matching) -> Option<AlternatingCycle> {
    let mut found = None;
    each_alternating_cycle(g, m, &mut |p| {
        found = Some(p.to_vec());
        false
    });
    found.map(AlternatingCycle::from_vertices)
}

pub fn enumerate_alternating_cycles(g: &Graph, m: &Matching) -> Vec<AlternatingCycle> {
    let mut out = Vec::new();
    each_alternating_cycle(g, m, &mut |p| {
        out.push(AlternatingCycle::from_vertices(p.to_vec()));
        true
    });
    out
}

/// No `M`-alternating cycle. The empty matching qualifies.
pub fn is_uniquely_restricted(g: &Graph, m: &Matching) -> bool {
    find_alternating_cycle(g, m).is_none()
}

/// Uniquely restricted by definition: `M` is the only perfect matching of
/// the subgraph induced by `V(M)`.
pub fn is_uniquely_restricted_by_definition(g: &Graph, m: &Matching) -> bool {
    let (sub, _) = g.induced_subgraph(m.saturated()).expect("matched vertices");
    count_perfect_matchings(&sub) == 1
}

/// The perfect matching of `g` when there is exactly one.
pub fn has_unique_perfect_matching(g: &Graph) -> Option<Matching> {
    let m = find_perfect_matching(g)?;
    is_uniquely_restricted(g, &m).then_some(m)
}

/// Every alternating cycle of length four, chords allowed.
pub fn alternating_four_cycles(g: &Graph, m: &Matching) -> Vec<AlternatingCycle> {
    let mut out = Vec::new();
    let edges = m.edges();
    for (i, e) in edges.iter().enumerate() {
        let (a, b) = e.endpoints();
        for f in &edges[i + 1..] {
            let (c, d) = f.endpoints();
            for (x, y) in [(c, d), (d, c)] {
                // a-b, b-x, x-y, y-a
                if g.has_edge(b, x) && g.has_edge(y, a) {
                    out.push(AlternatingCycle::from_vertices(vec![a, b, x, y]));
                }
            }
        }
    }
    out
}

/// For a maximum matching: some chordless alternating `C4`, if one exists.
pub fn find_alternating_c4(g: &Graph, m: &Matching) -> Result<Option<AlternatingCycle>> {
    if m.len() != mu(g) {
        return Err(Error::NotMaximum);
    }
    Ok(alternating_four_cycles(g, m)
        .into_iter()
        .find(|c| c.is_chordless(g)))
}

/// First matched edge `xy` breaking property P: `N(x) ∩ N(y) = ∅` and every
/// other neighbor of `x` adjacent to every other neighbor of `y`.
pub fn property_p_violation(g: &Graph, m: &Matching) -> Result<Option<Edge>> {
    if !m.is_perfect(g) {
        return Err(Error::NotPerfect);
    }
    Ok(m.edges().iter().copied().find(|e| {
        let (x, y) = e.endpoints();
        let nx = g.neighbors(x).without(y);
        let ny = g.neighbors(y).without(x);
        !nx.is_disjoint(ny) || nx.iter().any(|v| !ny.is_subset(g.neighbors(v)))
    }))
}

pub fn check_property_p(g: &Graph, m: &Matching) -> Result<bool> {
    property_p_violation(g, m).map(|v| v.is_none())
}

/// A chordless cycle of length 3 or at least 5 through a matched edge, listed
/// from one endpoint of that edge around to the other.
pub fn matched_edge_on_forbidden_cycle(
    vwc: &VeryWellCovered<'_>,
    m: &Matching,
) -> Result<Option<Vec<usize>>> {
    let g = vwc.graph();
    if !m.is_perfect(g) {
        return Err(Error::NotPerfect);
    }
    for e in m.edges() {
        let (x, y) = e.endpoints();
        let mut path = vec![x];
        if let Some(c) = induced_cycle_through(g, y, &mut path) {
            return Ok(Some(c));
        }
    }
    Ok(None)
}

/// Grows an induced path from `path[0]`; a closure at `target` gives a
/// chordless cycle through the edge `path[0]–target`.
fn induced_cycle_through(g: &Graph, target: usize, path: &mut Vec<usize>) -> Option<Vec<usize>> {
    let k = path.len();
    let end = path[k - 1];
    let on_path: VertexSet = path.iter().copied().collect();
    if k >= 2 && g.has_edge(end, target) {
        // any longer path would leave the chord end-target
        let inner: VertexSet = path[1..k - 1].iter().copied().collect();
        let chordless = g.neighbors(target).is_disjoint(inner);
        return (chordless && k + 1 != 4).then(|| {
            let mut cycle = path.clone();
            cycle.push(target);
            cycle
        });
    }
    let earlier = on_path.without(end);
    for w in g.neighbors(end).iter() {
        if w == target || on_path.contains(w) || !g.neighbors(w).is_disjoint(earlier) {
            continue;
        }
        path.push(w);
        let found = induced_cycle_through(g, target, path);
        path.pop();
        if found.is_some() {
            return found;
        }
    }
    None
}

pub fn pm_edge_cycle_exclusion(vwc: &VeryWellCovered<'_>, m: &Matching) -> Result<bool> {
    matched_edge_on_forbidden_cycle(vwc, m).map(|c| c.is_none())
}
