//! Stable sets, `α(G)`, maximum stable sets `Ω(G)`, and local maximum stable
//! sets `Ψ(G)`.
//!
//! `S ∈ Ψ(G)` when `S` is a maximum stable set of `G[N[S]]`. The definitional
//! test is [`psi_member_oracle`]. On very well-covered graphs membership
//! collapses to `|S| = |N(S)|`, exposed through [`VeryWellCovered`].

use crate::classifiers::VeryWellCovered;
use crate::{Error, Graph, Result, VertexSet};

/// A family of stable sets of one graph, in ascending bitmask order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StableSetFamily {
    n: usize,
    members: Vec<VertexSet>,
}

impl StableSetFamily {
    fn from_sorted(n: usize, members: Vec<VertexSet>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        StableSetFamily { n, members }
    }

    /// Vertex count of the graph the family belongs to.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn members(&self) -> &[VertexSet] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, s: VertexSet) -> bool {
        self.members.binary_search(&s).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = VertexSet> + '_ {
        self.members.iter().copied()
    }

    pub fn into_vec(self) -> Vec<VertexSet> {
        self.members
    }
}

/// How [`psi_enumerate`] decides membership.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PsiMode {
    /// Definition: `|S| = α(G[N[S]])`.
    Oracle,
    /// `|S| = |N(S)|` when the graph is very well-covered, the oracle otherwise.
    Auto,
}

pub fn is_stable(g: &Graph, s: VertexSet) -> bool {
    debug_assert!(s.is_subset(g.universe()));
    s.iter().all(|v| g.neighbors(v).is_disjoint(s))
}

pub fn alpha(g: &Graph) -> usize {
    alpha_within(g, g.universe())
}

/// `α(G[mask])` without building the induced subgraph.
pub fn alpha_within(g: &Graph, mask: VertexSet) -> usize {
    max_stable_within(g, mask).len()
}

/// One maximum stable set of `G[mask]`.
///
/// Exact branching: a vertex of degree at most one inside `mask` is always in
/// some maximum stable set, otherwise branch on a vertex of maximum degree.
pub fn max_stable_within(g: &Graph, mask: VertexSet) -> VertexSet {
    let mut mask = mask;
    let mut forced = VertexSet::EMPTY;
    loop {
        if mask.is_empty() {
            return forced;
        }
        let mut pick_low = None;
        let mut pick_high = (0, 0);
        for v in mask.iter() {
            let d = (g.neighbors(v) & mask).len();
            if d <= 1 {
                pick_low = Some(v);
                break;
            }
            if d > pick_high.1 {
                pick_high = (v, d);
            }
        }
        if let Some(v) = pick_low {
            forced = forced.with(v);
            mask = mask - g.neighbors(v).with(v);
            continue;
        }
        let v = pick_high.0;
        let with_v = max_stable_within(g, mask - g.neighbors(v).with(v)).with(v);
        let without_v = max_stable_within(g, mask.without(v));
        let best = if with_v.len() >= without_v.len() {
            with_v
        } else {
            without_v
        };
        return forced | best;
    }
}

/// Every stable set, ascending.
pub fn stable_sets(g: &Graph) -> Vec<VertexSet> {
    g.universe().subsets().filter(|&s| is_stable(g, s)).collect()
}

/// `Ω(G)`: stable sets of size `α(G)`.
pub fn omega_enumerate(g: &Graph) -> StableSetFamily {
    let a = alpha(g);
    let members = g
        .universe()
        .subsets()
        .filter(|&s| s.len() == a && is_stable(g, s))
        .collect();
    StableSetFamily::from_sorted(g.n(), members)
}

/// Inclusion-maximal stable sets, ascending.
pub fn maximal_stable_sets(g: &Graph) -> Vec<VertexSet> {
    let all = g.universe();
    all.subsets()
        .filter(|&s| is_stable(g, s) && g.closed_nbhd(s) == all)
        .collect()
}

/// `S ∈ Ψ(G)` by definition. The empty set is a member.
pub fn psi_member_oracle(g: &Graph, s: VertexSet) -> bool {
    is_stable(g, s) && s.len() == alpha_within(g, g.closed_nbhd(s))
}

/// `S ∈ Ψ(G)` through `|S| = |N(S)|`; fails unless `g` is very well-covered
/// and `s` is stable.
pub fn psi_member_vwc(g: &Graph, s: VertexSet) -> Result<bool> {
    VeryWellCovered::new(g)?.psi_member(s)
}

/// For very well-covered `g`, `b ∈ Ψ(g)` and stable `b ∪ {v}`: whether the
/// open neighborhood grows by exactly one.
pub fn check_chain_growth(g: &Graph, b: VertexSet, v: usize) -> Result<bool> {
    VeryWellCovered::new(g)?.chain_growth(b, v)
}

impl VeryWellCovered<'_> {
    pub fn psi_member(&self, s: VertexSet) -> Result<bool> {
        let g = self.graph();
        let s = g.check_set(s)?;
        if !is_stable(g, s) {
            return Err(Error::NotStable);
        }
        Ok(s.len() == g.open_nbhd(s).len())
    }

    pub fn chain_growth(&self, b: VertexSet, v: usize) -> Result<bool> {
        let g = self.graph();
        let b = g.check_set(b)?;
        g.check_vertex(v)?;
        if b.contains(v) {
            return Err(Error::AlreadyMember(v));
        }
        let a = b.with(v);
        if !is_stable(g, a) {
            return Err(Error::NotStable);
        }
        if !self.psi_member(b)? {
            return Err(Error::NotPsiMember);
        }
        Ok(g.open_nbhd(a).len() == g.open_nbhd(b).len() + 1)
    }
}

/// All of `Ψ(G)`, including the empty set, ascending.
pub fn psi_enumerate(g: &Graph, mode: PsiMode) -> StableSetFamily {
    let vwc = match mode {
        PsiMode::Oracle => None,
        PsiMode::Auto => VeryWellCovered::new(g).ok(),
    };
    let members = g
        .universe()
        .subsets()
        .filter(|&s| match &vwc {
            Some(_) => is_stable(g, s) && s.len() == g.open_nbhd(s).len(),
            None => psi_member_oracle(g, s),
        })
        .collect();
    StableSetFamily::from_sorted(g.n(), members)
}

/// A maximum stable set of `g` containing `s`, which must lie in `Ψ(g)`.
///
/// `Ok(None)` would mean no such set exists; for genuine members one always
/// does, and the test suite checks that it is found.
pub fn extends_to_maximum(g: &Graph, s: VertexSet) -> Result<Option<VertexSet>> {
    let s = g.check_set(s)?;
    if !psi_member_oracle(g, s) {
        return Err(Error::NotPsiMember);
    }
    let rest = max_stable_within(g, g.universe() - g.closed_nbhd(s));
    let candidate = s | rest;
    Ok((candidate.len() == alpha(g)).then_some(candidate))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle, fixture, path};

    fn set(g: &Graph, labels: &[&str]) -> VertexSet {
        g.set_of(labels).unwrap()
    }

    /// Reference α: largest stable subset by plain scan.
    fn alpha_scan(g: &Graph) -> usize {
        g.universe()
            .subsets()
            .filter(|&s| is_stable(g, s))
            .map(VertexSet::len)
            .max()
            .unwrap_or(0)
    }

    #[test]
    fn stability_basics() {
        let c4 = cycle(4).unwrap();
        assert!(is_stable(&c4, VertexSet::EMPTY));
        assert!(is_stable(&c4, VertexSet::from_bits(0b0101)));
        let k3 = complete(3).unwrap();
        for s in [0b011, 0b101, 0b110] {
            assert!(!is_stable(&k3, VertexSet::from_bits(s)));
        }
    }

    #[test]
    fn alpha_examples() {
        for n in 1..=6 {
            assert_eq!(alpha(&complete(n).unwrap()), 1);
        }
        assert_eq!(alpha(&fixture("fig10_G").unwrap()), 4);
        assert_eq!(alpha(&fixture("fig3_G").unwrap()), 3);
        assert_eq!(alpha(&fixture("fig3_H").unwrap()), 4);
        assert_eq!(alpha(&Graph::empty(0).unwrap()), 0);
    }

    #[test]
    fn alpha_matches_scan_on_fixtures() {
        for name in crate::generators::FIXTURE_NAMES {
            let g = fixture(name).unwrap();
            assert_eq!(alpha(&g), alpha_scan(&g), "{name}");
        }
    }

    #[test]
    fn omega_examples() {
        let k2 = complete(2).unwrap();
        assert_eq!(
            omega_enumerate(&k2).into_vec(),
            vec![VertexSet::from_bits(1), VertexSet::from_bits(2)]
        );
        let c4 = cycle(4).unwrap();
        assert_eq!(
            omega_enumerate(&c4).into_vec(),
            vec![VertexSet::from_bits(0b0101), VertexSet::from_bits(0b1010)]
        );
        let g = fixture("fig2_G").unwrap();
        let omega = omega_enumerate(&g);
        assert!(omega.contains(set(&g, &["a", "d", "f"])));
        assert!(omega.contains(set(&g, &["b", "e", "g"])));
    }

    #[test]
    fn psi_membership_fig2() {
        let g = fixture("fig2_G").unwrap();
        for (labels, expected) in [
            (&["a"][..], true),
            (&["b"], false),
            (&["e", "d"], true),
            (&["a", "e"], false),
            (&["a", "d", "f"], true),
            (&["c", "f"], false),
            (&["d", "f"], true),
            (&["e", "g"], true),
        ] {
            assert_eq!(psi_member_oracle(&g, set(&g, labels)), expected, "{labels:?}");
        }
    }

    #[test]
    fn psi_membership_fig3_h() {
        let h = fixture("fig3_H").unwrap();
        assert!(psi_member_oracle(&h, set(&h, &["y", "t"])));
        assert!(!psi_member_oracle(&h, set(&h, &["y"])));
        assert!(!psi_member_oracle(&h, set(&h, &["t"])));
        assert!(psi_member_oracle(&h, VertexSet::EMPTY));
    }

    #[test]
    fn psi_vwc_fig6() {
        let g = fixture("fig6_G1").unwrap();
        let vwc = VeryWellCovered::new(&g).unwrap();
        let be = set(&g, &["b", "e"]);
        let bd = set(&g, &["b", "d"]);
        assert!(vwc.psi_member(be).unwrap());
        assert_eq!(g.neighborhood(be).unwrap().len(), 2);
        assert!(!vwc.psi_member(bd).unwrap());
        assert_eq!(g.neighborhood(bd).unwrap().len(), 3);
        assert!(!psi_member_oracle(&g, bd));
    }

    #[test]
    fn psi_vwc_pendant_and_c4() {
        let g = fixture("fig8_G1").unwrap();
        assert!(psi_member_vwc(&g, set(&g, &["p1"])).unwrap());
        let c4 = cycle(4).unwrap();
        assert!(!psi_member_vwc(&c4, VertexSet::singleton(0)).unwrap());
    }

    #[test]
    fn psi_vwc_errors() {
        let c4 = cycle(4).unwrap();
        assert_eq!(
            psi_member_vwc(&c4, VertexSet::from_bits(0b11)),
            Err(Error::NotStable)
        );
        let p3 = path(3).unwrap();
        assert_eq!(
            psi_member_vwc(&p3, VertexSet::EMPTY),
            Err(Error::NotVeryWellCovered)
        );
    }

    #[test]
    fn psi_enumerate_examples() {
        let p4 = path(4).unwrap();
        let bits: Vec<u16> = psi_enumerate(&p4, PsiMode::Oracle)
            .iter()
            .map(VertexSet::bits)
            .collect();
        // {}, {a}, {d}, {a,c}, {b,d}, {a,d}
        assert_eq!(bits, vec![0b0000, 0b0001, 0b0101, 0b1000, 0b1001, 0b1010]);

        let c4 = cycle(4).unwrap();
        let bits: Vec<u16> = psi_enumerate(&c4, PsiMode::Auto)
            .iter()
            .map(VertexSet::bits)
            .collect();
        assert_eq!(bits, vec![0, 0b0101, 0b1010]);

        let k1 = complete(1).unwrap();
        assert_eq!(psi_enumerate(&k1, PsiMode::Oracle).len(), 2);
    }

    #[test]
    fn psi_modes_agree_on_fixtures() {
        for name in crate::generators::FIXTURE_NAMES {
            let g = fixture(name).unwrap();
            assert_eq!(
                psi_enumerate(&g, PsiMode::Oracle),
                psi_enumerate(&g, PsiMode::Auto),
                "{name}"
            );
        }
    }

    #[test]
    fn extension_examples() {
        let g = fixture("fig2_G").unwrap();
        let eg = set(&g, &["e", "g"]);
        let big = extends_to_maximum(&g, eg).unwrap().unwrap();
        assert!(eg.is_subset(big));
        assert_eq!(big.len(), 3);
        assert!(is_stable(&g, big));

        let h = fixture("fig3_H").unwrap();
        assert_eq!(
            extends_to_maximum(&h, set(&h, &["y", "t"])).unwrap(),
            Some(set(&h, &["u", "y", "t", "w"]))
        );

        let c5 = cycle(5).unwrap();
        let any = extends_to_maximum(&c5, VertexSet::EMPTY).unwrap().unwrap();
        assert!(omega_enumerate(&c5).contains(any));

        assert_eq!(
            extends_to_maximum(&h, set(&h, &["y"])),
            Err(Error::NotPsiMember)
        );
    }

    #[test]
    fn chain_growth_examples() {
        let g = fixture("fig6_G1").unwrap();
        let b = set(&g, &["b"]);
        let a = g.vertex("a").unwrap();
        assert!(check_chain_growth(&g, b, a).unwrap());
        assert!(psi_member_oracle(&g, b.with(a)));

        let g = fixture("fig8_G1").unwrap();
        let p1 = set(&g, &["p1"]);
        let q1 = g.vertex("q1").unwrap();
        assert!(check_chain_growth(&g, p1, q1).unwrap());
        assert!(psi_member_oracle(&g, p1.with(q1)));
    }

    #[test]
    fn chain_growth_preconditions() {
        let c4 = cycle(4).unwrap();
        let vwc = VeryWellCovered::new(&c4).unwrap();
        // {0} is not in Ψ(C4)
        assert_eq!(
            vwc.chain_growth(VertexSet::singleton(0), 2),
            Err(Error::NotPsiMember)
        );
        assert_eq!(
            vwc.chain_growth(VertexSet::singleton(0), 1),
            Err(Error::NotStable)
        );
        assert_eq!(
            vwc.chain_growth(VertexSet::singleton(0), 0),
            Err(Error::AlreadyMember(0))
        );
        let p3 = path(3).unwrap();
        assert_eq!(
            check_chain_growth(&p3, VertexSet::EMPTY, 0),
            Err(Error::NotVeryWellCovered)
        );
    }
}
