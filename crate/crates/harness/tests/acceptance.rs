use std::process::ExitCode;
use std::time::{Duration, Instant};

use lmsg_core::classifiers::{is_koenig_egervary, is_very_well_covered, is_well_covered};
use lmsg_core::generators::{fixture, fixture_named_edges};
use lmsg_core::greedoid::{psi_is_greedoid, GreedoidMode};
use lmsg_core::matching::{
    alternating_four_cycles, enumerate_alternating_cycles, find_alternating_c4,
    find_alternating_cycle, has_unique_perfect_matching, mu,
};
use lmsg_core::stability::{alpha, psi_member_oracle};
use lmsg_core::{Graph, Matching};
use lmsg_harness::verify::{self, Theorem, VerifyConfig};

type Criterion = dyn Fn() -> (bool, String);

struct Checks {
    failures: Vec<String>,
}

impl Checks {
    fn expect(&mut self, what: &str, ok: bool) {
        if !ok {
            self.failures.push(what.to_string());
        }
    }
}

fn fx(name: &str) -> Graph {
    fixture(name).unwrap()
}

fn greedoid(g: &Graph) -> bool {
    psi_is_greedoid(g, GreedoidMode::BruteForce).unwrap().is_greedoid
}

fn named(name: &str, picks: &[usize]) -> (Graph, Matching) {
    let g = fx(name);
    let all = fixture_named_edges(name).unwrap();
    let pairs: Vec<_> = picks.iter().map(|&i| all[i - 1]).collect();
    let m = Matching::from_labels(&g, &pairs).unwrap();
    (g, m)
}

fn figures(c: &mut Checks) {
    let g = fx("fig1_G");
    let m = Matching::from_labels(&g, &[("a", "b"), ("c", "d"), ("e", "f")]).unwrap();
    c.expect("fig1_G has no alternating cycle", find_alternating_cycle(&g, &m).is_none());
    let h = fx("fig1_H");
    let m = Matching::from_labels(&h, &[("y", "v"), ("t", "x")]).unwrap();
    c.expect(
        "fig1_H alternating cycle",
        find_alternating_cycle(&h, &m).is_some_and(|cy| cy.is_valid_for(&h, &m)),
    );

    let g = fx("fig2_G");
    for (labels, want) in [
        (&["a"][..], true),
        (&["b"], false),
        (&["e", "d"], true),
        (&["a", "e"], false),
        (&["c", "f"], false),
        (&["d", "f"], true),
        (&["e", "g"], true),
    ] {
        let s = g.set_of(labels).unwrap();
        c.expect(&format!("fig2 {labels:?}"), psi_member_oracle(&g, s) == want);
    }

    c.expect("fig3_G greedoid", greedoid(&fx("fig3_G")));
    c.expect("fig3_H not greedoid", !greedoid(&fx("fig3_H")));

    let g = fx("fig4_G");
    c.expect("fig4_G not greedoid", !greedoid(&g));
    let bc = g.set_of(&["b", "c"]).unwrap();
    let (sub, _) = g.induced_subgraph(g.closed_neighborhood(bc).unwrap()).unwrap();
    c.expect(
        "fig4_G {b,c} witness",
        psi_member_oracle(&g, bc) && !is_koenig_egervary(&sub),
    );

    for (name, want) in [("fig8_G1", true), ("fig8_G2", false), ("fig8_G3", false)] {
        let g = fx(name);
        c.expect(&format!("{name} very well-covered"), is_very_well_covered(&g));
        c.expect(&format!("{name} greedoid"), greedoid(&g) == want);
        c.expect(
            &format!("{name} unique perfect matching"),
            has_unique_perfect_matching(&g).is_some() == want,
        );
    }

    c.expect("fig9_G1 not well-covered", !is_well_covered(&fx("fig9_G1")));
    let (g, m) = named("fig9_G2", &[1, 2, 3]);
    let cycles = enumerate_alternating_cycles(&g, &m);
    c.expect(
        "fig9_G2 single alternating 6-cycle",
        cycles.len() == 1 && cycles[0].len() == 6,
    );
    c.expect(
        "fig9_G2 no alternating C4",
        matches!(find_alternating_c4(&g, &m), Ok(None)),
    );
    let (g, m) = named("fig9_G3", &[1, 2, 3, 4]);
    c.expect(
        "fig9_G3 alternating C4 with chords",
        m.len() == mu(&g)
            && alternating_four_cycles(&g, &m)
                .iter()
                .any(|cy| cy.is_valid_for(&g, &m) && !cy.is_chordless(&g)),
    );

    let g = fx("fig10_G");
    c.expect("fig10 well-covered", is_well_covered(&g));
    c.expect("fig10 unique perfect matching", has_unique_perfect_matching(&g).is_some());
    c.expect("fig10 alpha 4", alpha(&g) == 4);
    c.expect("fig10 not greedoid", !greedoid(&g));
}

fn criterion_figures() -> (bool, String) {
    let start = Instant::now();
    let mut checks = Checks { failures: vec![] };
    figures(&mut checks);
    let elapsed = start.elapsed();
    let ok = checks.failures.is_empty() && elapsed < Duration::from_secs(1);
    let detail = if checks.failures.is_empty() {
        format!("0 mismatches in {elapsed:.2?}")
    } else {
        format!("mismatches {:?} in {elapsed:.2?}", checks.failures)
    };
    (ok, detail)
}

fn sweep(theorems: &[Theorem], parallel: bool, limit: Option<Duration>) -> (bool, String) {
    let cfg = VerifyConfig {
        parallel,
        ..VerifyConfig::default()
    };
    let start = Instant::now();
    let summary = match verify::run(theorems, &cfg) {
        Ok(s) => s,
        Err(e) => return (false, format!("error: {e:#}")),
    };
    let elapsed = start.elapsed();
    let mut ok = limit.is_none_or(|l| elapsed < l);
    let mut parts = vec![];
    for t in &summary.theorems {
        ok &= t.violations == 0 && t.checked > 0;
        parts.push(format!(
            "{} checked={} positives={} violations={}",
            t.theorem, t.checked, t.positives, t.violations
        ));
    }
    (ok, format!("{} in {elapsed:.2?}", parts.join("; ")))
}

fn determinism() -> (bool, String) {
    let cfg = VerifyConfig::default();
    let first = verify::run(&Theorem::ALL, &cfg).map(|s| s.to_json());
    let second = verify::run(&Theorem::ALL, &cfg).map(|s| s.to_json());
    match (first, second) {
        (Ok(a), Ok(b)) => (a == b, format!("{} bytes, seed {}", a.len(), cfg.seed)),
        (Err(e), _) | (_, Err(e)) => (false, format!("error: {e:#}")),
    }
}

fn main() -> ExitCode {
    use Theorem::*;
    let criteria: Vec<(&str, Box<Criterion>)> = vec![
        ("figure regression", Box::new(criterion_figures)),
        (
            "greedoid iff unique perfect matching (single thread)",
            Box::new(|| sweep(&[Th8], false, Some(Duration::from_secs(300)))),
        ),
        ("fast membership and chain growth", Box::new(|| sweep(&[Lem3, Lem65], true, None))),
        ("uniquely restricted matchings", Box::new(|| sweep(&[Th9], true, None))),
        (
            "very well-covered suites",
            Box::new(|| sweep(&[Lem1, Lem2, Th11, Th3, Th7, Equiv7, C4freeCorollary], true, None)),
        ),
        ("coronas", Box::new(|| sweep(&[Th10iv, Th88iv], true, None))),
        ("forests and bipartite graphs", Box::new(|| sweep(&[Th2, Th22], true, None))),
        ("deterministic verify output", Box::new(determinism)),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let (ok, detail) = run();
        if !ok {
            failed += 1;
        }
        println!(
            "criterion {} {}: {name}: {detail}",
            i + 1,
            if ok { "PASS" } else { "FAIL" }
        );
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
