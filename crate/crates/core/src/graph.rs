use std::borrow::Cow;
use std::collections::VecDeque;
use std::fmt;
use std::ops::{BitAnd, BitOr, Sub};

use crate::{Error, Result};

/// Largest supported vertex count; a [`VertexSet`] is one `u16`.
pub const MAX_VERTICES: usize = 16;

/// A set of vertices stored as a bitmask, bit `i` standing for vertex `i`.
///
/// Sets order by their bitmask value, which is the canonical enumeration order
/// used throughout the crate.
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexSet(u16);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub const fn from_bits(bits: u16) -> Self {
        VertexSet(bits)
    }

    pub const fn bits(self) -> u16 {
        self.0
    }

    /// All vertices `0..n`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        VertexSet(((1u32 << n) - 1) as u16)
    }

    pub fn singleton(v: usize) -> Self {
        debug_assert!(v < MAX_VERTICES);
        VertexSet(1 << v)
    }

    pub fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && self.0 >> v & 1 == 1
    }

    #[must_use]
    pub fn with(self, v: usize) -> Self {
        VertexSet(self.0 | 1 << v)
    }

    #[must_use]
    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1 << v))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: VertexSet) -> bool {
        self.0 & other.0 == 0
    }

    /// Smallest member.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Members in ascending order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                return None;
            }
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(v)
        })
    }

    /// Every subset of `self`, ascending by bitmask.
    pub fn subsets(self) -> impl Iterator<Item = VertexSet> {
        // Walk the submasks upward: next = ((cur | !mask) + 1) & mask.
        let mask = self.0 as u32;
        let mut cur = Some(0u32);
        std::iter::from_fn(move || {
            let out = cur?;
            cur = if out == mask {
                None
            } else {
                Some(((out | !mask) + 1) & mask)
            };
            Some(VertexSet(out as u16))
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        iter.into_iter().fold(VertexSet::EMPTY, VertexSet::with)
    }
}

impl BitOr for VertexSet {
    type Output = VertexSet;
    fn bitor(self, rhs: Self) -> Self {
        VertexSet(self.0 | rhs.0)
    }
}

impl BitAnd for VertexSet {
    type Output = VertexSet;
    fn bitand(self, rhs: Self) -> Self {
        VertexSet(self.0 & rhs.0)
    }
}

impl Sub for VertexSet {
    type Output = VertexSet;
    fn sub(self, rhs: Self) -> Self {
        VertexSet(self.0 & !rhs.0)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// An undirected edge with endpoints stored as `(min, max)`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Edge {
    u: usize,
    v: usize,
}

impl Edge {
    pub fn new(a: usize, b: usize) -> Result<Edge> {
        if a == b {
            return Err(Error::SelfLoop(a));
        }
        Ok(Edge {
            u: a.min(b),
            v: a.max(b),
        })
    }

    pub fn u(self) -> usize {
        self.u
    }

    pub fn v(self) -> usize {
        self.v
    }

    pub fn endpoints(self) -> (usize, usize) {
        (self.u, self.v)
    }

    pub fn vertices(self) -> VertexSet {
        VertexSet::singleton(self.u).with(self.v)
    }

    pub fn touches(self, x: usize) -> bool {
        self.u == x || self.v == x
    }

    /// The endpoint that is not `x`.
    pub fn other(self, x: usize) -> usize {
        if self.u == x {
            self.v
        } else {
            self.u
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

/// Immutable simple undirected graph on at most [`MAX_VERTICES`] vertices.
///
/// Vertices are `0..n`. Optional labels are display metadata only; two graphs
/// with equal adjacency but different labels compare unequal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: [u16; MAX_VERTICES],
    labels: Option<Vec<String>>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Graph> {
        if n > MAX_VERTICES {
            return Err(Error::Capacity {
                requested: n,
                max: MAX_VERTICES,
            });
        }
        Ok(Graph {
            n,
            adj: [0; MAX_VERTICES],
            labels: None,
        })
    }

    /// Builds a graph from vertex pairs. Repeated pairs collapse to one edge.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (a, b) in edges {
            for x in [a, b] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if a == b {
                return Err(Error::SelfLoop(a));
            }
            g.adj[a] |= 1 << b;
            g.adj[b] |= 1 << a;
        }
        Ok(g)
    }

    pub(crate) fn from_adjacency(n: usize, adj: [u16; MAX_VERTICES]) -> Graph {
        Graph {
            n,
            adj,
            labels: None,
        }
    }

    /// Attaches display labels, one per vertex.
    ///
    /// # Panics
    /// If the label count differs from the vertex count.
    #[must_use]
    pub fn with_labels<S: Into<String>>(mut self, labels: impl IntoIterator<Item = S>) -> Graph {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        assert_eq!(labels.len(), self.n, "one label per vertex");
        self.labels = Some(labels);
        self
    }

    #[must_use]
    pub fn without_labels(mut self) -> Graph {
        self.labels = None;
        self
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn universe(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    pub fn edge_count(&self) -> usize {
        self.adj[..self.n]
            .iter()
            .map(|a| a.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Edges in `(min, max)` lexicographic order.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in VertexSet(self.adj[u]).iter().filter(|&v| v > u) {
                out.push(Edge { u, v });
            }
        }
        out
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Display name of `v`: its label, or the index.
    pub fn label(&self, v: usize) -> Cow<'_, str> {
        match &self.labels {
            Some(l) => Cow::Borrowed(&l[v]),
            None => Cow::Owned(v.to_string()),
        }
    }

    /// Looks a vertex up by label, falling back to a numeric index.
    pub fn vertex(&self, label: &str) -> Result<usize> {
        if let Some(l) = &self.labels {
            if let Some(i) = l.iter().position(|x| x == label) {
                return Ok(i);
            }
        }
        match label.parse::<usize>() {
            Ok(i) if i < self.n => Ok(i),
            _ => Err(Error::UnknownLabel(label.to_string())),
        }
    }

    /// Vertex set from a list of labels.
    pub fn set_of(&self, labels: &[&str]) -> Result<VertexSet> {
        labels
            .iter()
            .map(|l| self.vertex(l))
            .collect::<Result<VertexSet>>()
    }

    /// Renders a set with vertex labels, e.g. `{a,d,f}`.
    pub fn display_set(&self, s: VertexSet) -> String {
        let names: Vec<_> = s.iter().map(|v| self.label(v).into_owned()).collect();
        format!("{{{}}}", names.join(","))
    }

    pub fn check_set(&self, s: VertexSet) -> Result<VertexSet> {
        if s.is_subset(self.universe()) {
            Ok(s)
        } else {
            Err(Error::SetOutOfRange {
                bits: s.bits(),
                n: self.n,
            })
        }
    }

    pub fn check_vertex(&self, v: usize) -> Result<usize> {
        if v < self.n {
            Ok(v)
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    /// `N(S)`: vertices outside `S` with a neighbor in `S`.
    pub fn neighborhood(&self, s: VertexSet) -> Result<VertexSet> {
        self.check_set(s).map(|s| self.open_nbhd(s))
    }

    /// `N[S] = S ∪ N(S)`.
    pub fn closed_neighborhood(&self, s: VertexSet) -> Result<VertexSet> {
        self.check_set(s).map(|s| s | self.open_nbhd(s))
    }

    pub(crate) fn open_nbhd(&self, s: VertexSet) -> VertexSet {
        let all = s.iter().fold(0u16, |acc, v| acc | self.adj[v]);
        VertexSet(all & !s.0)
    }

    pub(crate) fn closed_nbhd(&self, s: VertexSet) -> VertexSet {
        s | self.open_nbhd(s)
    }

    /// Subgraph induced by `s`, re-indexed in ascending order. The returned map
    /// sends each new index to the original vertex.
    pub fn induced_subgraph(&self, s: VertexSet) -> Result<(Graph, Vec<usize>)> {
        let s = self.check_set(s)?;
        let map = s.to_vec();
        let mut adj = [0u16; MAX_VERTICES];
        for (i, &old_i) in map.iter().enumerate() {
            for (j, &old_j) in map.iter().enumerate() {
                if self.has_edge(old_i, old_j) {
                    adj[i] |= 1 << j;
                }
            }
        }
        let mut g = Graph::from_adjacency(map.len(), adj);
        if let Some(labels) = &self.labels {
            g.labels = Some(map.iter().map(|&v| labels[v].clone()).collect());
        }
        Ok((g, map))
    }

    /// Length of a shortest cycle, `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        let mut dist = [usize::MAX; MAX_VERTICES];
        let mut parent = [usize::MAX; MAX_VERTICES];
        for root in 0..self.n {
            dist.fill(usize::MAX);
            parent.fill(usize::MAX);
            dist[root] = 0;
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                for w in self.neighbors(u).iter() {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        let len = dist[u] + dist[w] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        self.component_of(0) == self.universe()
    }

    pub(crate) fn component_of(&self, v: usize) -> VertexSet {
        let mut seen = VertexSet::singleton(v);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let next = self.open_nbhd(frontier) - seen;
            seen = seen | next;
            frontier = next;
        }
        seen
    }

    pub fn isolated_vertices(&self) -> VertexSet {
        (0..self.n).filter(|&v| self.adj[v] == 0).collect()
    }

    /// Vertices of degree one.
    pub fn pendant_vertices(&self) -> VertexSet {
        (0..self.n).filter(|&v| self.degree(v) == 1).collect()
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<String> = self
            .edges()
            .iter()
            .map(|e| format!("{}-{}", self.label(e.u), self.label(e.v)))
            .collect();
        write!(f, "Graph(n={}, [{}])", self.n, edges.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle, fixture, path};

    fn p4() -> Graph {
        path(4).unwrap().with_labels(["a", "b", "c", "d"])
    }

    #[test]
    fn neighborhood_of_pendant() {
        let g = p4();
        let s = g.set_of(&["a"]).unwrap();
        assert_eq!(g.neighborhood(s).unwrap(), g.set_of(&["b"]).unwrap());
        assert_eq!(g.closed_neighborhood(s).unwrap(), g.set_of(&["a", "b"]).unwrap());
    }

    #[test]
    fn neighborhood_of_empty_set_is_empty() {
        for g in [p4(), cycle(5).unwrap(), complete(4).unwrap()] {
            assert_eq!(g.neighborhood(VertexSet::EMPTY).unwrap(), VertexSet::EMPTY);
            assert_eq!(g.closed_neighborhood(VertexSet::EMPTY).unwrap(), VertexSet::EMPTY);
        }
    }

    #[test]
    fn neighborhood_fig2() {
        let g = fixture("fig2_G").unwrap();
        let s = g.set_of(&["b", "d"]).unwrap();
        assert_eq!(g.neighborhood(s).unwrap(), g.set_of(&["a", "c", "g"]).unwrap());
    }

    #[test]
    fn closed_neighborhood_fig3_h() {
        let h = fixture("fig3_H").unwrap();
        let s = h.set_of(&["y", "t"]).unwrap();
        assert_eq!(
            h.closed_neighborhood(s).unwrap(),
            h.set_of(&["y", "t", "v", "x"]).unwrap()
        );
    }

    #[test]
    fn set_outside_graph_is_rejected() {
        let g = p4();
        let s = VertexSet::singleton(7);
        assert!(matches!(g.neighborhood(s), Err(Error::SetOutOfRange { .. })));
        assert!(matches!(g.induced_subgraph(s), Err(Error::SetOutOfRange { .. })));
    }

    #[test]
    fn induced_subgraph_identity_and_empty() {
        let c4 = cycle(4).unwrap();
        let (sub, map) = c4.induced_subgraph(c4.universe()).unwrap();
        assert_eq!(sub, c4);
        assert_eq!(map, vec![0, 1, 2, 3]);
        let (sub, map) = c4.induced_subgraph(VertexSet::EMPTY).unwrap();
        assert_eq!(sub.n(), 0);
        assert!(map.is_empty());
    }

    #[test]
    fn induced_subgraph_fig3_h_is_c4() {
        let h = fixture("fig3_H").unwrap();
        let (sub, _) = h.induced_subgraph(h.set_of(&["y", "t", "v", "x"]).unwrap()).unwrap();
        assert_eq!(sub.edge_count(), 4);
        assert!((0..4).all(|v| sub.degree(v) == 2));
        assert!(sub.is_connected());
    }

    #[test]
    fn girth_examples() {
        assert_eq!(path(6).unwrap().girth(), None);
        assert_eq!(cycle(7).unwrap().girth(), Some(7));
        assert_eq!(complete(4).unwrap().girth(), Some(3));
        assert_eq!(fixture("fig8_G1").unwrap().girth(), Some(3));
        assert_eq!(fixture("fig3_G").unwrap().girth(), Some(4));
    }

    #[test]
    fn subsets_cover_in_ascending_order() {
        let s = VertexSet::from_bits(0b1011_0000_0001);
        let subs: Vec<_> = s.subsets().collect();
        assert_eq!(subs.len(), 16);
        assert!(subs.windows(2).all(|w| w[0] < w[1]));
        assert!(subs.iter().all(|x| x.is_subset(s)));
        assert_eq!(VertexSet::full(16).subsets().count(), 1 << 16);
        assert_eq!(VertexSet::EMPTY.subsets().collect::<Vec<_>>(), vec![VertexSet::EMPTY]);
    }

    #[test]
    fn capacity_and_simplicity() {
        assert!(matches!(Graph::empty(17), Err(Error::Capacity { .. })));
        assert_eq!(Graph::from_edges(3, [(1, 1)]), Err(Error::SelfLoop(1)));
        assert!(matches!(
            Graph::from_edges(3, [(0, 3)]),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        ));
        assert_eq!(Edge::new(2, 2), Err(Error::SelfLoop(2)));
        assert_eq!(Edge::new(5, 1).unwrap().endpoints(), (1, 5));
    }
}
