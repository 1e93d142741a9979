//! Set systems, the greedoid axioms, and the decision whether `Ψ(G)` is a
//! greedoid.

use std::collections::HashSet;

use crate::classifiers::VeryWellCovered;
use crate::matching::{find_alternating_cycle, find_perfect_matching, AlternatingCycle, Matching};
use crate::stability::{omega_enumerate, psi_enumerate, psi_member_oracle, PsiMode, StableSetFamily};
use crate::{Edge, Error, Graph, Result, VertexSet, MAX_VERTICES};

/// A family of subsets of `0..ground`. The empty set is always a member.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetSystem {
    ground: usize,
    members: Vec<VertexSet>,
    lookup: Vec<bool>,
}

impl SetSystem {
    pub fn new(ground: usize, members: impl IntoIterator<Item = VertexSet>) -> Result<SetSystem> {
        if ground > MAX_VERTICES {
            return Err(Error::Capacity {
                requested: ground,
                max: MAX_VERTICES,
            });
        }
        let universe = VertexSet::full(ground);
        let mut lookup = vec![false; 1 << ground];
        lookup[0] = true;
        for s in members {
            if !s.is_subset(universe) {
                return Err(Error::SetOutOfRange { bits: s.bits(), n: ground });
            }
            lookup[s.bits() as usize] = true;
        }
        let members = (0..lookup.len())
            .filter(|&b| lookup[b])
            .map(|b| VertexSet::from_bits(b as u16))
            .collect();
        Ok(SetSystem {
            ground,
            members,
            lookup,
        })
    }

    /// Every subset of `0..ground`.
    pub fn power_set(ground: usize) -> Result<SetSystem> {
        SetSystem::new(ground, VertexSet::full(ground.min(MAX_VERTICES)).subsets())
    }

    pub fn from_family(family: &StableSetFamily) -> SetSystem {
        SetSystem::new(family.n(), family.iter()).expect("family lies inside its graph")
    }

    pub fn ground(&self) -> usize {
        self.ground
    }

    /// Members in ascending bitmask order.
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
        self.lookup.get(s.bits() as usize).copied().unwrap_or(false)
    }

    /// First non-empty member with no element whose removal stays inside the
    /// system.
    pub fn accessibility_violation(&self) -> Option<VertexSet> {
        self.members
            .iter()
            .copied()
            .find(|&x| !x.is_empty() && !x.iter().any(|v| self.contains(x.without(v))))
    }

    /// First pair `(X, Y)` with `|X| = |Y| + 1` such that no `x ∈ X − Y`
    /// gives `Y ∪ {x}` in the system.
    pub fn exchange_violation(&self) -> Option<(VertexSet, VertexSet)> {
        let mut by_size: Vec<Vec<VertexSet>> = vec![Vec::new(); self.ground + 1];
        for &s in &self.members {
            by_size[s.len()].push(s);
        }
        let universe = VertexSet::full(self.ground);
        for k in 0..self.ground {
            for &y in &by_size[k] {
                let ext: VertexSet = (universe - y)
                    .iter()
                    .filter(|&v| self.contains(y.with(v)))
                    .collect();
                if let Some(&x) = by_size[k + 1].iter().find(|&&x| (x - y).is_disjoint(ext)) {
                    return Some((x, y));
                }
            }
        }
        None
    }

    pub fn is_accessible(&self) -> bool {
        self.accessibility_violation().is_none()
    }

    pub fn satisfies_exchange(&self) -> bool {
        self.exchange_violation().is_none()
    }

    pub fn is_greedoid(&self) -> bool {
        self.is_accessible() && self.satisfies_exchange()
    }
}

/// How [`psi_is_greedoid`] decides.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GreedoidMode {
    /// Enumerate `Ψ(G)` and test both axioms.
    BruteForce,
    /// Very well-covered graphs only: look for a unique perfect matching.
    Fast,
    /// `Fast` when the graph is very well-covered, `BruteForce` otherwise.
    Auto,
}

/// Evidence behind a [`GreedoidDecision`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    UniquePerfectMatching(Matching),
    AlternatingCycle {
        matching: Matching,
        cycle: AlternatingCycle,
    },
    NoPerfectMatching,
    InaccessibleMember(VertexSet),
    ExchangeFailure {
        larger: VertexSet,
        smaller: VertexSet,
    },
    AxiomsHold,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GreedoidDecision {
    pub is_greedoid: bool,
    /// `BruteForce` or `Fast`, never `Auto`.
    pub mode_used: GreedoidMode,
    pub certificate: Certificate,
}

pub fn psi_system(g: &Graph) -> SetSystem {
    SetSystem::from_family(&psi_enumerate(g, PsiMode::Auto))
}

fn brute_force_decision(g: &Graph) -> GreedoidDecision {
    let sys = SetSystem::from_family(&psi_enumerate(g, PsiMode::Oracle));
    let (is_greedoid, certificate) = if let Some(x) = sys.accessibility_violation() {
        (false, Certificate::InaccessibleMember(x))
    } else if let Some((larger, smaller)) = sys.exchange_violation() {
        (false, Certificate::ExchangeFailure { larger, smaller })
    } else {
        (true, Certificate::AxiomsHold)
    };
    GreedoidDecision {
        is_greedoid,
        mode_used: GreedoidMode::BruteForce,
        certificate,
    }
}

fn fast_decision(vwc: &VeryWellCovered<'_>) -> GreedoidDecision {
    let g = vwc.graph();
    let (is_greedoid, certificate) = match find_perfect_matching(g) {
        None => (false, Certificate::NoPerfectMatching),
        Some(matching) => match find_alternating_cycle(g, &matching) {
            Some(cycle) => (false, Certificate::AlternatingCycle { matching, cycle }),
            None => (true, Certificate::UniquePerfectMatching(matching)),
        },
    };
    GreedoidDecision {
        is_greedoid,
        mode_used: GreedoidMode::Fast,
        certificate,
    }
}

/// Whether `Ψ(g)` is a greedoid. `Fast` fails with
/// [`Error::NotVeryWellCovered`] outside its class.
pub fn psi_is_greedoid(g: &Graph, mode: GreedoidMode) -> Result<GreedoidDecision> {
    match mode {
        GreedoidMode::BruteForce => Ok(brute_force_decision(g)),
        GreedoidMode::Fast => Ok(fast_decision(&VeryWellCovered::new(g)?)),
        GreedoidMode::Auto => Ok(match VeryWellCovered::new(g) {
            Ok(vwc) => fast_decision(&vwc),
            Err(_) => brute_force_decision(g),
        }),
    }
}

/// For `Ψ(g)`: accessible implies the exchange axiom.
pub fn psi_accessibility_implies_greedoid_check(g: &Graph) -> bool {
    let sys = psi_system(g);
    !sys.is_accessible() || sys.satisfies_exchange()
}

/// `∅ ⊂ {x1} ⊂ {x1, x2} ⊂ ... ⊂ S` with every step inside a set system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AccessibilityChain {
    order: Vec<usize>,
}

impl AccessibilityChain {
    /// `x1, x2, ...` in insertion order.
    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    /// All prefixes, from `∅` to the full set.
    pub fn sets(&self) -> Vec<VertexSet> {
        let mut cur = VertexSet::EMPTY;
        let mut out = vec![cur];
        for &v in &self.order {
            cur = cur.with(v);
            out.push(cur);
        }
        out
    }

    pub fn target(&self) -> VertexSet {
        self.order.iter().copied().collect()
    }
}

/// Chain to `target` inside `member`, trying least vertices first.
pub fn chain_within(
    target: VertexSet,
    member: &dyn Fn(VertexSet) -> bool,
) -> Option<AccessibilityChain> {
    fn grow(
        cur: VertexSet,
        target: VertexSet,
        member: &dyn Fn(VertexSet) -> bool,
        dead: &mut HashSet<VertexSet>,
        order: &mut Vec<usize>,
    ) -> bool {
        if cur == target {
            return true;
        }
        for v in (target - cur).iter() {
            let next = cur.with(v);
            if dead.contains(&next) || !member(next) {
                continue;
            }
            order.push(v);
            if grow(next, target, member, dead, order) {
                return true;
            }
            order.pop();
            dead.insert(next);
        }
        false
    }
    let mut order = Vec::with_capacity(target.len());
    grow(VertexSet::EMPTY, target, member, &mut HashSet::new(), &mut order)
        .then_some(AccessibilityChain { order })
}

/// An accessibility chain for `s ∈ Ψ(g)` inside `Ψ(g)`, if one exists.
pub fn accessibility_chain(g: &Graph, s: VertexSet) -> Result<Option<AccessibilityChain>> {
    let s = g.check_set(s)?;
    if !psi_member_oracle(g, s) {
        return Err(Error::NotPsiMember);
    }
    Ok(chain_within(s, &|x| psi_member_oracle(g, x)))
}

/// Rebuilds the perfect matching from a chain: along the chain of the least
/// maximum stable set, each new vertex `x_i` sees exactly one vertex outside
/// `N[S_{i-1}]`, and `x_i` is matched to it.
pub fn matching_from_chains(vwc: &VeryWellCovered<'_>) -> Result<Matching> {
    let g = vwc.graph();
    let sys = psi_system(g);
    if !sys.is_greedoid() {
        return Err(Error::NotGreedoid);
    }
    let s = omega_enumerate(g)
        .iter()
        .next()
        .expect("every graph has a maximum stable set");
    let chain = chain_within(s, &|x| sys.contains(x)).ok_or(Error::NotGreedoid)?;
    let mut prev = VertexSet::EMPTY;
    let mut edges = Vec::with_capacity(chain.len());
    for &x in chain.order() {
        let fresh = g.neighbors(x) - g.closed_nbhd(prev);
        if fresh.len() != 1 {
            return Err(Error::ChainDefect(x));
        }
        let y = fresh.first().expect("one vertex");
        edges.push(Edge::new(x, y)?);
        prev = prev.with(x);
    }
    Matching::new(g, edges)
}
