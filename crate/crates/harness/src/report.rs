//! Single-graph classification reports.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::Instant;

use lmsg_core::classifiers::{
    find_chordless_c4, is_koenig_egervary, is_triangle_free, is_very_well_covered,
    is_well_covered, psi_neighborhood_ke_violation,
};
use lmsg_core::greedoid::{accessibility_chain, psi_is_greedoid, psi_system};
use lmsg_core::matching::{count_perfect_matchings, has_unique_perfect_matching, mu};
use lmsg_core::stability::{alpha, omega_enumerate};
use lmsg_core::{Certificate, Graph, GreedoidMode, VertexSet};
use serde::{Deserialize, Serialize};

pub const SCHEMA: u32 = 1;

/// How the greedoid verdict is computed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Mode {
    /// Enumerate Ψ and test the axioms.
    Oracle,
    /// Unique perfect matching test; very well-covered graphs only.
    Fast,
    /// Oracle always, plus the fast test when it applies.
    Auto,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDescriptor {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fixture: Option<String>,
}

impl GraphDescriptor {
    pub fn of(g: &Graph, fixture: Option<&str>) -> Self {
        GraphDescriptor {
            n: g.n(),
            edges: g.edges().iter().map(|e| [e.u(), e.v()]).collect(),
            labels: g.labels().map(<[String]>::to_vec),
            fixture: fixture.map(String::from),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Predicates {
    pub alpha: usize,
    pub mu: usize,
    pub well_covered: bool,
    pub very_well_covered: bool,
    pub koenig_egervary: bool,
    pub triangle_free: bool,
    pub c4_free: bool,
    pub perfect_matchings: u64,
    pub unique_perfect_matching: bool,
    pub psi_size: usize,
    pub accessible: bool,
    pub exchange: bool,
    pub greedoid_oracle: Option<bool>,
    pub greedoid_fast: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExchangeFailure {
    pub larger: Vec<String>,
    pub smaller: Vec<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificates {
    pub unique_perfect_matching: Option<Vec<String>>,
    pub alternating_cycle: Option<Vec<String>>,
    pub alternating_cycle_matching: Option<Vec<String>>,
    pub inaccessible_member: Option<Vec<String>>,
    pub exchange_failure: Option<ExchangeFailure>,
    pub ke_violation: Option<Vec<String>>,
    pub chordless_c4: Option<Vec<String>>,
    pub maximum_stable_set: Vec<String>,
    /// Chain to `maximum_stable_set` inside Ψ, when one exists.
    pub accessibility_chain: Option<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub schema: u32,
    pub graph: GraphDescriptor,
    pub predicates: Predicates,
    pub certificates: Certificates,
    /// Microseconds per computed item.
    pub timing_us: BTreeMap<String, u64>,
}

fn names(g: &Graph, s: VertexSet) -> Vec<String> {
    s.iter().map(|v| g.label(v).into_owned()).collect()
}

struct Clock(BTreeMap<String, u64>);

impl Clock {
    fn time<T>(&mut self, key: &str, f: impl FnOnce() -> T) -> T {
        let start = Instant::now();
        let out = f();
        let micros = u64::try_from(start.elapsed().as_micros()).unwrap_or(u64::MAX);
        self.0.insert(key.to_string(), micros);
        out
    }
}

fn absorb(g: &Graph, cert: Certificate, certs: &mut Certificates) {
    match cert {
        Certificate::UniquePerfectMatching(m) => {
            certs.unique_perfect_matching = Some(m.labeled_pairs(g));
        }
        Certificate::AlternatingCycle { matching, cycle } => {
            certs.alternating_cycle =
                Some(cycle.vertices().iter().map(|&v| g.label(v).into_owned()).collect());
            certs.alternating_cycle_matching = Some(matching.labeled_pairs(g));
        }
        Certificate::InaccessibleMember(s) => certs.inaccessible_member = Some(names(g, s)),
        Certificate::ExchangeFailure { larger, smaller } => {
            certs.exchange_failure = Some(ExchangeFailure {
                larger: names(g, larger),
                smaller: names(g, smaller),
            });
        }
        Certificate::NoPerfectMatching | Certificate::AxiomsHold => {}
    }
}

/// Builds the full report. `Mode::Fast` fails on graphs that are not very
/// well-covered.
pub fn analyze(g: &Graph, fixture: Option<&str>, mode: Mode) -> anyhow::Result<ClassificationReport> {
    let mut clock = Clock(BTreeMap::new());
    let mut certs = Certificates::default();

    let a = clock.time("alpha", || alpha(g));
    let m = clock.time("mu", || mu(g));
    let well_covered = clock.time("well_covered", || is_well_covered(g));
    let vwc = clock.time("very_well_covered", || is_very_well_covered(g));
    let ke = clock.time("koenig_egervary", || is_koenig_egervary(g));
    let triangle_free = clock.time("triangle_free", || is_triangle_free(g));
    let c4 = clock.time("c4_free", || find_chordless_c4(g));
    certs.chordless_c4 = c4.map(|c| c.iter().map(|&v| g.label(v).into_owned()).collect());
    let pm_count = clock.time("perfect_matchings", || count_perfect_matchings(g));
    let unique = clock.time("unique_perfect_matching", || has_unique_perfect_matching(g));
    if let Some(pm) = &unique {
        certs.unique_perfect_matching = Some(pm.labeled_pairs(g));
    }
    let psi = clock.time("psi", || psi_system(g));
    let accessible = psi.is_accessible();
    let exchange = psi.satisfies_exchange();
    certs.ke_violation = clock
        .time("ke_neighborhoods", || psi_neighborhood_ke_violation(g))
        .map(|s| names(g, s));

    let omega_first = omega_enumerate(g).iter().next().unwrap_or(VertexSet::EMPTY);
    certs.maximum_stable_set = names(g, omega_first);
    let chain = clock.time("accessibility_chain", || accessibility_chain(g, omega_first))?;
    certs.accessibility_chain =
        chain.map(|c| c.order().iter().map(|&v| g.label(v).into_owned()).collect());

    let mut greedoid_oracle = None;
    let mut greedoid_fast = None;
    if matches!(mode, Mode::Oracle | Mode::Auto) {
        let d = clock.time("greedoid_oracle", || psi_is_greedoid(g, GreedoidMode::BruteForce))?;
        greedoid_oracle = Some(d.is_greedoid);
        absorb(g, d.certificate, &mut certs);
    }
    if mode == Mode::Fast || (mode == Mode::Auto && vwc) {
        let d = clock.time("greedoid_fast", || psi_is_greedoid(g, GreedoidMode::Fast))?;
        greedoid_fast = Some(d.is_greedoid);
        absorb(g, d.certificate, &mut certs);
    }
    if let (Some(x), Some(y)) = (greedoid_oracle, greedoid_fast) {
        anyhow::ensure!(x == y, "oracle and fast greedoid verdicts disagree");
    }

    Ok(ClassificationReport {
        schema: SCHEMA,
        graph: GraphDescriptor::of(g, fixture),
        predicates: Predicates {
            alpha: a,
            mu: m,
            well_covered,
            very_well_covered: vwc,
            koenig_egervary: ke,
            triangle_free,
            c4_free: c4.is_none(),
            perfect_matchings: pm_count,
            unique_perfect_matching: unique.is_some(),
            psi_size: psi.len(),
            accessible,
            exchange,
            greedoid_oracle,
            greedoid_fast,
        },
        certificates: certs,
        timing_us: clock.0,
    })
}

impl ClassificationReport {
    /// The greedoid verdict from whichever mode ran.
    pub fn greedoid(&self) -> bool {
        self.predicates
            .greedoid_oracle
            .or(self.predicates.greedoid_fast)
            .expect("at least one mode runs")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let p = &self.predicates;
        let c = &self.certificates;
        let mut out = String::new();
        let title = self.graph.fixture.as_deref().unwrap_or("graph");
        let _ = writeln!(out, "{title}: n={} m={}", self.graph.n, self.graph.edges.len());
        let yn = |b: bool| if b { "yes" } else { "no" };
        let rows: [(&str, String); 12] = [
            ("alpha", p.alpha.to_string()),
            ("mu", p.mu.to_string()),
            ("well-covered", yn(p.well_covered).into()),
            ("very well-covered", yn(p.very_well_covered).into()),
            ("Koenig-Egervary", yn(p.koenig_egervary).into()),
            ("triangle-free", yn(p.triangle_free).into()),
            ("C4-free", yn(p.c4_free).into()),
            ("perfect matchings", p.perfect_matchings.to_string()),
            ("unique perfect matching", yn(p.unique_perfect_matching).into()),
            ("|Psi|", p.psi_size.to_string()),
            ("accessible", yn(p.accessible).into()),
            ("exchange", yn(p.exchange).into()),
        ];
        for (k, v) in rows {
            let _ = writeln!(out, "  {k:<24} {v}");
        }
        for (k, v) in [("greedoid (oracle)", p.greedoid_oracle), ("greedoid (fast)", p.greedoid_fast)] {
            if let Some(v) = v {
                let _ = writeln!(out, "  {k:<24} {}", yn(v));
            }
        }
        let list = |v: &[String]| v.join(" ");
        if let Some(m) = &c.unique_perfect_matching {
            let _ = writeln!(out, "  unique matching          {}", list(m));
        }
        if let Some(cyc) = &c.alternating_cycle {
            let _ = writeln!(out, "  alternating cycle        {}", cyc.join("-"));
        }
        if let Some(s) = &c.inaccessible_member {
            let _ = writeln!(out, "  inaccessible member      {{{}}}", s.join(","));
        }
        if let Some(e) = &c.exchange_failure {
            let _ = writeln!(
                out,
                "  exchange failure         {{{}}} vs {{{}}}",
                e.larger.join(","),
                e.smaller.join(",")
            );
        }
        if let Some(s) = &c.ke_violation {
            let _ = writeln!(out, "  non-KE neighborhood of   {{{}}}", s.join(","));
        }
        out
    }
}
