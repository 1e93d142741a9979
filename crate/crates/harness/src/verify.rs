//! Theorem sweeps over corpora.

use std::collections::HashMap;

use lmsg_core::classifiers::{
    is_c4_free, is_forest, is_koenig_egervary, is_very_well_covered, is_well_covered,
    pendant_perfect_matching, psi_neighborhoods_are_ke, VeryWellCovered,
};
use lmsg_core::greedoid::{
    matching_from_chains, psi_accessibility_implies_greedoid_check, psi_is_greedoid,
};
use lmsg_core::matching::{
    check_property_p, count_perfect_matchings, enumerate_matchings, enumerate_maximum_matchings,
    enumerate_perfect_matchings, find_alternating_c4, find_alternating_cycle,
    has_unique_perfect_matching, is_uniquely_restricted, is_uniquely_restricted_by_definition,
    matched_edge_on_forbidden_cycle, mu,
};
use lmsg_core::stability::{
    extends_to_maximum, is_stable, omega_enumerate, psi_enumerate, psi_member_oracle,
    stable_sets, PsiMode,
};
use lmsg_core::{Graph, GreedoidMode};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::corpus::{CorpusSpec, Filter, Item, Source};

pub const SCHEMA: u32 = 1;
const MAX_COUNTEREXAMPLES: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, clap::ValueEnum)]
pub enum Theorem {
    /// Every local maximum stable set extends to a maximum stable set.
    #[value(name = "th1")]
    Th1,
    /// Forests give greedoids.
    #[value(name = "th2")]
    Th2,
    /// Very well-covered: every Ψ neighborhood is König–Egerváry.
    #[value(name = "th3")]
    Th3,
    /// König–Egerváry: maximum matchings cross every maximum stable set.
    #[value(name = "th4i")]
    Th4i,
    /// Accessibility of Ψ implies exchange.
    #[value(name = "th7")]
    Th7,
    /// Very well-covered: greedoid iff unique perfect matching.
    #[value(name = "th8")]
    Th8,
    /// Uniquely restricted iff no alternating cycle.
    #[value(name = "th9")]
    Th9,
    /// Corona greedoid iff every attached graph gives one.
    #[value(name = "th10iv")]
    Th10iv,
    /// Very well-covered iff perfect matchings with property P.
    #[value(name = "th11")]
    Th11,
    /// Bipartite: greedoid iff all maximum matchings uniquely restricted.
    #[value(name = "th22")]
    Th22,
    /// Triangle-free: greedoid iff uniquely restricted and KE neighborhoods.
    #[value(name = "th33")]
    Th33,
    /// Girth at least five: very well-covered iff a pendant perfect matching.
    #[value(name = "th88ii")]
    Th88ii,
    /// Very well-covered iff well-covered and König–Egerváry.
    #[value(name = "th88iii")]
    Th88iii,
    /// Corona well-covered iff every attached graph is complete.
    #[value(name = "th88iv")]
    Th88iv,
    /// Matched edges avoid chordless cycles of length 3 and at least 5.
    #[value(name = "lem1")]
    Lem1,
    /// Alternating cycle iff alternating chordless C4.
    #[value(name = "lem2")]
    Lem2,
    /// `|S| = |N(S)|` decides Ψ membership.
    #[value(name = "lem3")]
    Lem3,
    /// Chain growth by one neighbor decides Ψ membership.
    #[value(name = "lem65")]
    Lem65,
    /// The seven greedoid characterizations agree.
    #[value(name = "equiv7")]
    Equiv7,
    /// Very well-covered and C4-free: unique perfect matching and greedoid.
    #[value(name = "c4free-corollary")]
    C4freeCorollary,
}

impl Theorem {
    pub const ALL: [Theorem; 20] = [
        Theorem::Th1,
        Theorem::Th2,
        Theorem::Th3,
        Theorem::Th4i,
        Theorem::Th7,
        Theorem::Th8,
        Theorem::Th9,
        Theorem::Th10iv,
        Theorem::Th11,
        Theorem::Th22,
        Theorem::Th33,
        Theorem::Th88ii,
        Theorem::Th88iii,
        Theorem::Th88iv,
        Theorem::Lem1,
        Theorem::Lem2,
        Theorem::Lem3,
        Theorem::Lem65,
        Theorem::Equiv7,
        Theorem::C4freeCorollary,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Theorem::Th1 => "th1",
            Theorem::Th2 => "th2",
            Theorem::Th3 => "th3",
            Theorem::Th4i => "th4i",
            Theorem::Th7 => "th7",
            Theorem::Th8 => "th8",
            Theorem::Th9 => "th9",
            Theorem::Th10iv => "th10iv",
            Theorem::Th11 => "th11",
            Theorem::Th22 => "th22",
            Theorem::Th33 => "th33",
            Theorem::Th88ii => "th88ii",
            Theorem::Th88iii => "th88iii",
            Theorem::Th88iv => "th88iv",
            Theorem::Lem1 => "lem1",
            Theorem::Lem2 => "lem2",
            Theorem::Lem3 => "lem3",
            Theorem::Lem65 => "lem65",
            Theorem::Equiv7 => "equiv7",
            Theorem::C4freeCorollary => "c4free-corollary",
        }
    }
}

/// Sweep settings. Defaults give the full suite.
#[derive(Clone, Debug, PartialEq)]
pub struct VerifyConfig {
    /// Largest vertex count of the exhaustive connected corpus.
    pub max_n: usize,
    pub max_tree_n: usize,
    pub seed: u64,
    /// Very well-covered random graphs drawn per size in `random_sizes`.
    pub random_count: usize,
    pub random_sizes: Vec<usize>,
    /// Replaces every default corpus.
    pub corpus: Option<CorpusSpec>,
    pub parallel: bool,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            max_n: 8,
            max_tree_n: 9,
            seed: 42,
            random_count: 500,
            random_sizes: vec![10, 12],
            corpus: None,
            parallel: true,
        }
    }
}

impl VerifyConfig {
    /// The corpora a theorem runs on, before its own applicability test.
    pub fn corpora(&self, th: Theorem) -> Vec<CorpusSpec> {
        if let Some(c) = &self.corpus {
            return vec![c.clone()];
        }
        let connected = |max_n: usize| CorpusSpec::new(Source::Connected { min_n: 1, max_n });
        let n = self.max_n;
        let vwc = connected(n).filter(Filter::VeryWellCovered);
        let random: Vec<CorpusSpec> = self
            .random_sizes
            .iter()
            .map(|&size| {
                CorpusSpec::new(Source::RandomVwc {
                    count: self.random_count,
                    n: size,
                    seed: self.seed.wrapping_add(size as u64),
                })
            })
            .collect();
        let coronas = [(3, 3), (2, 4)].map(|(max_base, max_part)| {
            CorpusSpec::new(Source::Coronas { max_base, max_part })
        });
        match th {
            Theorem::Th8 | Theorem::Lem3 | Theorem::Lem65 => {
                std::iter::once(vwc).chain(random).collect()
            }
            Theorem::Th3 | Theorem::Lem1 | Theorem::Lem2 | Theorem::Equiv7 | Theorem::C4freeCorollary => {
                vec![vwc]
            }
            Theorem::Th1 | Theorem::Th7 | Theorem::Th11 | Theorem::Th88ii | Theorem::Th88iii => {
                vec![connected(n)]
            }
            Theorem::Th33 => vec![connected(n).filter(Filter::TriangleFree)],
            Theorem::Th4i => vec![connected(n.min(7)).filter(Filter::KoenigEgervary)],
            Theorem::Th9 => vec![connected(n.min(6))],
            Theorem::Th22 => vec![connected(n.min(7)).filter(Filter::Bipartite)],
            Theorem::Th2 => vec![CorpusSpec::new(Source::Trees {
                min_n: 1,
                max_n: self.max_tree_n,
            })],
            Theorem::Th10iv | Theorem::Th88iv => coronas.to_vec(),
        }
    }
}

/// Result of one theorem on one graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    /// Hypotheses not met.
    Skipped,
    /// The statement holds; `flag` records its main predicate, e.g. the
    /// greedoid verdict.
    Holds { flag: bool },
    Violated(String),
}

fn holds(flag: bool) -> Outcome {
    Outcome::Holds { flag }
}

fn brute_greedoid(g: &Graph) -> bool {
    psi_is_greedoid(g, GreedoidMode::BruteForce)
        .expect("brute force accepts every graph")
        .is_greedoid
}

fn no_isolated(g: &Graph) -> bool {
    g.n() > 0 && g.isolated_vertices().is_empty()
}

fn equal_or(cond: bool, flag: bool, detail: impl FnOnce() -> String) -> Outcome {
    if cond {
        holds(flag)
    } else {
        Outcome::Violated(detail())
    }
}

pub fn check(th: Theorem, item: &Item) -> Outcome {
    let g = &item.graph;
    match th {
        Theorem::Th1 => {
            for s in psi_enumerate(g, PsiMode::Auto).iter() {
                if !matches!(extends_to_maximum(g, s), Ok(Some(_))) {
                    return Outcome::Violated(format!("{} does not extend", g.display_set(s)));
                }
            }
            holds(true)
        }
        Theorem::Th2 => {
            if !is_forest(g) {
                return Outcome::Skipped;
            }
            let gr = brute_greedoid(g);
            equal_or(gr, true, || "forest without greedoid".into())
        }
        Theorem::Th3 => {
            if !is_very_well_covered(g) {
                return Outcome::Skipped;
            }
            equal_or(psi_neighborhoods_are_ke(g), true, || {
                "a Ψ neighborhood is not König–Egerváry".into()
            })
        }
        Theorem::Th4i => {
            if !is_koenig_egervary(g) {
                return Outcome::Skipped;
            }
            let omega = omega_enumerate(g);
            for m in enumerate_maximum_matchings(g) {
                for s in omega.iter() {
                    if let Some(e) = m.edges().iter().find(|e| (e.vertices() & s).len() != 1) {
                        return Outcome::Violated(format!(
                            "matching {:?} edge {e} vs {}",
                            m.labeled_pairs(g),
                            g.display_set(s)
                        ));
                    }
                }
            }
            holds(true)
        }
        Theorem::Th7 => equal_or(psi_accessibility_implies_greedoid_check(g), true, || {
            "accessible but exchange fails".into()
        }),
        Theorem::Th8 => {
            let Ok(vwc) = VeryWellCovered::new(g) else {
                return Outcome::Skipped;
            };
            let greedoid = brute_greedoid(g);
            let unique = has_unique_perfect_matching(g);
            if mu(g) * 2 != g.n() {
                return Outcome::Violated("no perfect matching".into());
            }
            if greedoid != unique.is_some() {
                return Outcome::Violated(format!(
                    "greedoid={greedoid} unique perfect matching={}",
                    unique.is_some()
                ));
            }
            if unique.is_some() != (count_perfect_matchings(g) == 1) {
                return Outcome::Violated("unique-matching test disagrees with count".into());
            }
            let fast = psi_is_greedoid(g, GreedoidMode::Fast).expect("graph is very well-covered");
            if fast.is_greedoid != greedoid {
                return Outcome::Violated("fast and brute-force verdicts differ".into());
            }
            if let Some(pm) = unique {
                match matching_from_chains(&vwc) {
                    Ok(m) if m == pm => {}
                    other => {
                        return Outcome::Violated(format!("chain matching {other:?} vs {pm:?}"))
                    }
                }
            }
            holds(greedoid)
        }
        Theorem::Th9 => {
            for m in enumerate_matchings(g) {
                if is_uniquely_restricted(g, &m) != is_uniquely_restricted_by_definition(g, &m) {
                    return Outcome::Violated(format!("matching {:?}", m.labeled_pairs(g)));
                }
            }
            holds(true)
        }
        Theorem::Th10iv => {
            let Some(parts) = &item.corona_parts else {
                return Outcome::Skipped;
            };
            let lhs = brute_greedoid(g);
            let rhs = parts.iter().all(brute_greedoid);
            equal_or(lhs == rhs, lhs, || format!("corona greedoid={lhs}, parts={rhs}"))
        }
        Theorem::Th11 => {
            if !no_isolated(g) {
                return Outcome::Skipped;
            }
            let vwc = is_very_well_covered(g);
            let pms = enumerate_perfect_matchings(g);
            let with_p: Vec<bool> = pms
                .iter()
                .map(|m| check_property_p(g, m).expect("perfect"))
                .collect();
            let some = with_p.iter().any(|&b| b);
            let every = !pms.is_empty() && with_p.iter().all(|&b| b);
            equal_or(vwc == some && vwc == every, vwc, || {
                format!("vwc={vwc} some-P={some} every-P={every}")
            })
        }
        Theorem::Th22 => {
            if !lmsg_core::classifiers::is_bipartite(g) {
                return Outcome::Skipped;
            }
            let lhs = brute_greedoid(g);
            let rhs = enumerate_maximum_matchings(g)
                .iter()
                .all(|m| is_uniquely_restricted(g, m));
            equal_or(lhs == rhs, lhs, || format!("greedoid={lhs} all-UR={rhs}"))
        }
        Theorem::Th33 => {
            if !lmsg_core::classifiers::is_triangle_free(g) {
                return Outcome::Skipped;
            }
            let lhs = brute_greedoid(g);
            let ur = enumerate_maximum_matchings(g)
                .iter()
                .all(|m| is_uniquely_restricted(g, m));
            let ke = psi_neighborhoods_are_ke(g);
            equal_or(lhs == (ur && ke), lhs, || {
                format!("greedoid={lhs} all-UR={ur} KE-neighborhoods={ke}")
            })
        }
        Theorem::Th88ii => {
            if g.n() == 0 || g.girth().is_some_and(|girth| girth < 5) {
                return Outcome::Skipped;
            }
            let vwc = is_very_well_covered(g);
            let pendant = pendant_perfect_matching(g).is_some();
            equal_or(vwc == pendant, vwc, || format!("vwc={vwc} pendant matching={pendant}"))
        }
        Theorem::Th88iii => {
            if !no_isolated(g) {
                return Outcome::Skipped;
            }
            let vwc = is_very_well_covered(g);
            let wc = is_well_covered(g);
            let ke = is_koenig_egervary(g);
            equal_or(vwc == (wc && ke), vwc, || format!("vwc={vwc} wc={wc} ke={ke}"))
        }
        Theorem::Th88iv => {
            let Some(parts) = &item.corona_parts else {
                return Outcome::Skipped;
            };
            let wc = is_well_covered(g);
            let complete = parts
                .iter()
                .all(|h| h.edge_count() * 2 == h.n() * (h.n() - 1));
            equal_or(wc == complete, wc, || format!("wc={wc} all complete={complete}"))
        }
        Theorem::Lem1 => {
            let Ok(vwc) = VeryWellCovered::new(g) else {
                return Outcome::Skipped;
            };
            for m in enumerate_perfect_matchings(g) {
                if let Some(c) = matched_edge_on_forbidden_cycle(&vwc, &m).expect("perfect") {
                    return Outcome::Violated(format!(
                        "matching {:?} on cycle {c:?}",
                        m.labeled_pairs(g)
                    ));
                }
            }
            holds(true)
        }
        Theorem::Lem2 => {
            if !is_very_well_covered(g) {
                return Outcome::Skipped;
            }
            for m in enumerate_maximum_matchings(g) {
                let cycle = find_alternating_cycle(g, &m).is_some();
                let c4 = find_alternating_c4(g, &m).expect("maximum").is_some();
                if cycle != c4 {
                    return Outcome::Violated(format!(
                        "matching {:?}: cycle={cycle} chordless C4={c4}",
                        m.labeled_pairs(g)
                    ));
                }
            }
            holds(true)
        }
        Theorem::Lem3 => {
            let Ok(vwc) = VeryWellCovered::new(g) else {
                return Outcome::Skipped;
            };
            for s in stable_sets(g) {
                if vwc.psi_member(s).expect("stable") != psi_member_oracle(g, s) {
                    return Outcome::Violated(format!("set {}", g.display_set(s)));
                }
            }
            holds(true)
        }
        Theorem::Lem65 => {
            let Ok(vwc) = VeryWellCovered::new(g) else {
                return Outcome::Skipped;
            };
            for b in psi_enumerate(g, PsiMode::Oracle).iter() {
                for v in (g.universe() - b).iter() {
                    let a = b.with(v);
                    if !is_stable(g, a) {
                        continue;
                    }
                    let grows = vwc.chain_growth(b, v).expect("preconditions hold");
                    if grows != psi_member_oracle(g, a) {
                        return Outcome::Violated(format!(
                            "B={} v={}",
                            g.display_set(b),
                            g.label(v)
                        ));
                    }
                }
            }
            holds(true)
        }
        Theorem::Equiv7 => {
            if !is_very_well_covered(g) {
                return Outcome::Skipped;
            }
            let maxs = enumerate_maximum_matchings(g);
            let ur: Vec<bool> = maxs
                .iter()
                .map(|m| is_uniquely_restricted_by_definition(g, m))
                .collect();
            let cycle_free: Vec<bool> = maxs
                .iter()
                .map(|m| find_alternating_cycle(g, m).is_none())
                .collect();
            let c4_free: Vec<bool> = maxs
                .iter()
                .map(|m| find_alternating_c4(g, m).expect("maximum").is_none())
                .collect();
            let any = |v: &[bool]| v.iter().any(|&b| b);
            let all = |v: &[bool]| !v.is_empty() && v.iter().all(|&b| b);
            let values = [
                brute_greedoid(g),
                any(&ur),
                any(&cycle_free),
                any(&c4_free),
                all(&cycle_free),
                all(&c4_free),
                all(&ur),
            ];
            equal_or(values.iter().all(|&v| v == values[0]), values[0], || {
                format!("predicates (i)-(vii) = {values:?}")
            })
        }
        Theorem::C4freeCorollary => {
            if !is_very_well_covered(g) || !is_c4_free(g) {
                return Outcome::Skipped;
            }
            let unique = has_unique_perfect_matching(g).is_some();
            let greedoid = brute_greedoid(g);
            equal_or(unique && greedoid, true, || {
                format!("unique perfect matching={unique} greedoid={greedoid}")
            })
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub graph: String,
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub graph: String,
    pub outcome: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremSummary {
    pub theorem: String,
    pub corpora: Vec<String>,
    pub graphs: usize,
    pub checked: usize,
    pub skipped: usize,
    /// Checked graphs whose main predicate came out true.
    pub positives: usize,
    pub violations: usize,
    pub counterexamples: Vec<Counterexample>,
    /// Per-graph outcomes, listed for fixture and file corpora only.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub verdicts: Vec<Verdict>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifySummary {
    pub schema: u32,
    pub seed: u64,
    pub max_n: usize,
    pub theorems: Vec<TheoremSummary>,
    pub total_checked: usize,
    pub total_violations: usize,
}

impl VerifySummary {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("summary serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for t in &self.theorems {
            let status = if t.violations == 0 { "ok" } else { "FAIL" };
            out.push_str(&format!(
                "{:<17} {status:<4} checked={} skipped={} positives={} violations={}\n",
                t.theorem, t.checked, t.skipped, t.positives, t.violations
            ));
            for c in &t.counterexamples {
                out.push_str(&format!("    {}: {} edges={:?}\n", c.graph, c.detail, c.edges));
            }
            for v in &t.verdicts {
                out.push_str(&format!("    {}: {}\n", v.graph, v.outcome));
            }
        }
        out.push_str(&format!(
            "total checked={} violations={}\n",
            self.total_checked, self.total_violations
        ));
        out
    }
}

/// Runs the selected theorems in order. Corpora are built once and shared.
pub fn run(theorems: &[Theorem], cfg: &VerifyConfig) -> anyhow::Result<VerifySummary> {
    // keyed by description, which names source and filters
    let mut cache: HashMap<String, Vec<Item>> = HashMap::new();
    let mut base_cache: HashMap<String, Vec<Item>> = HashMap::new();
    let mut summaries = Vec::new();
    for &th in theorems {
        let specs = cfg.corpora(th);
        let mut items: Vec<Item> = Vec::new();
        for spec in &specs {
            let key = spec.describe();
            if !cache.contains_key(&key) {
                let base = CorpusSpec::new(spec.source.clone());
                let base_key = base.describe();
                let unfiltered = match base_cache.get(&base_key) {
                    Some(v) => v.clone(),
                    None => {
                        let v = base.build()?;
                        base_cache.insert(base_key, v.clone());
                        v
                    }
                };
                let kept = filter_items(unfiltered, &spec.filters, cfg.parallel);
                cache.insert(key.clone(), kept);
            }
            items.extend(cache[&key].iter().cloned());
        }
        let outcomes: Vec<Outcome> = if cfg.parallel {
            items.par_iter().map(|it| check(th, it)).collect()
        } else {
            items.iter().map(|it| check(th, it)).collect()
        };
        let list_verdicts = specs
            .iter()
            .all(|s| matches!(s.source, Source::Fixtures(_) | Source::File(_)));
        summaries.push(summarize(th, &specs, &items, &outcomes, list_verdicts));
    }
    let total_checked = summaries.iter().map(|s| s.checked).sum();
    let total_violations = summaries.iter().map(|s| s.violations).sum();
    Ok(VerifySummary {
        schema: SCHEMA,
        seed: cfg.seed,
        max_n: cfg.max_n,
        theorems: summaries,
        total_checked,
        total_violations,
    })
}

fn filter_items(items: Vec<Item>, filters: &[Filter], parallel: bool) -> Vec<Item> {
    let keep = |it: &Item| filters.iter().all(|f| f.keeps(&it.graph));
    if parallel {
        items.into_par_iter().filter(keep).collect()
    } else {
        items.into_iter().filter(keep).collect()
    }
}

fn summarize(
    th: Theorem,
    specs: &[CorpusSpec],
    items: &[Item],
    outcomes: &[Outcome],
    list_verdicts: bool,
) -> TheoremSummary {
    let mut s = TheoremSummary {
        theorem: th.name().to_string(),
        corpora: specs.iter().map(CorpusSpec::describe).collect(),
        graphs: items.len(),
        checked: 0,
        skipped: 0,
        positives: 0,
        violations: 0,
        counterexamples: Vec::new(),
        verdicts: Vec::new(),
    };
    for (item, outcome) in items.iter().zip(outcomes) {
        match outcome {
            Outcome::Skipped => s.skipped += 1,
            Outcome::Holds { flag } => {
                s.checked += 1;
                s.positives += usize::from(*flag);
            }
            Outcome::Violated(detail) => {
                s.checked += 1;
                s.violations += 1;
                if s.counterexamples.len() < MAX_COUNTEREXAMPLES {
                    s.counterexamples.push(Counterexample {
                        graph: item.name.clone(),
                        n: item.graph.n(),
                        edges: item.graph.edges().iter().map(|e| [e.u(), e.v()]).collect(),
                        detail: detail.clone(),
                    });
                }
            }
        }
        if list_verdicts {
            let text = match outcome {
                Outcome::Skipped => "skipped".to_string(),
                Outcome::Holds { flag } => format!("holds ({flag})"),
                Outcome::Violated(d) => format!("violated: {d}"),
            };
            s.verdicts.push(Verdict {
                graph: item.name.clone(),
                outcome: text,
            });
        }
    }
    s
}
