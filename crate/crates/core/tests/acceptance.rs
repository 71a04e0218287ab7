//! Acceptance criteria. Prints one PASS/FAIL line per criterion.
//!
//! Criterion 2 fails because three of the audited bounds are false on some
//! small factor pairs. That failure is expected only in the exact shape
//! described by `known_defect`; any violation outside it, or a failure of
//! another criterion, makes this binary exit non-zero.

mod common;

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use trd_core::bounds::{factor_profile, genlower_check, pair_bounds};
use trd_core::catalog::enumerate_catalog;
use trd_core::classify::{
    certify_regular_eod_product, classify_small_product, small_value_lower_bound,
};
use trd_core::construct::small_value_construction_auto;
use trd_core::harness::{verify_theorems, VerificationReport, VerifyOptions};
use trd_core::solve::{gamma_tr_bruteforce, gamma_tr_exact, gamma_tr_max_v2, Budget};
use trd_core::FamilySpec::{self, *};
use trd_core::{direct_product, emit_graph6, parse_graph6, Graph};

enum Status {
    Pass,
    /// Failed, and the failure matches a documented defect exactly.
    KnownFail,
    Fail,
}

struct Outcome {
    status: Status,
    summary: String,
    details: Vec<String>,
}

impl Outcome {
    fn new(ok: bool, summary: impl Into<String>, details: Vec<String>) -> Self {
        Self {
            status: if ok { Status::Pass } else { Status::Fail },
            summary: summary.into(),
            details,
        }
    }
}

fn fam(f: FamilySpec) -> Graph {
    f.generate().unwrap()
}

fn prism_c3() -> Graph {
    fam(Prism(Box::new(fam(Cycle(3)))))
}

fn exact_product(g: &Graph, h: &Graph, secs: u64) -> Result<u32, String> {
    let pg = direct_product(g, h).map_err(|e| e.to_string())?;
    gamma_tr_exact(pg.graph(), Budget::secs(secs))
        .map(|r| r.value)
        .map_err(|e| e.to_string())
}

/// Largest component of `G × H` is small enough for the enumeration oracle.
fn oracle_feasible(g: &Graph, h: &Graph) -> bool {
    let pg = direct_product(g, h).unwrap();
    pg.graph().components().iter().all(|c| c.count_ones() <= 12)
}

#[derive(Default)]
struct Checks {
    ok: bool,
    details: Vec<String>,
}

impl Checks {
    fn flag(&mut self, pass: bool, line: String) {
        self.ok &= pass;
        self.details
            .push(format!("{} {line}", if pass { "ok  " } else { "BAD " }));
    }

    fn value(&mut self, name: &str, got: Result<u32, String>, want: u32, oracle: Option<u32>) {
        let pass = got.as_ref() == Ok(&want) && oracle.is_none_or(|o| o == want);
        let oracle = oracle.map_or(String::new(), |o| format!(", enumeration {o}"));
        self.flag(
            pass,
            format!("{name}: expected {want}, got {got:?}{oracle}"),
        );
    }
}

fn criterion_1() -> Outcome {
    let mut c = Checks {
        ok: true,
        ..Checks::default()
    };

    let table: Vec<(&str, Graph, Graph, u32, u64)> = vec![
        ("K2 x K2", fam(Complete(2)), fam(Complete(2)), 4, 60),
        ("K3 x K3", fam(Complete(3)), fam(Complete(3)), 6, 60),
        ("K3 x K4", fam(Complete(3)), fam(Complete(4)), 6, 60),
        ("K1,2 x K1,2", fam(Star(2)), fam(Star(2)), 7, 60),
        ("K1,2 x K1,3", fam(Star(2)), fam(Star(3)), 7, 60),
        (
            "K2,2 x K2,2",
            fam(CompleteBipartite(2, 2)),
            fam(CompleteBipartite(2, 2)),
            8,
            60,
        ),
        ("C4 x C4", fam(Cycle(4)), fam(Cycle(4)), 8, 60),
        (
            "K3 x K2,2",
            fam(Complete(3)),
            fam(CompleteBipartite(2, 2)),
            8,
            60,
        ),
        ("P4 x P4", fam(Path(4)), fam(Path(4)), 8, 60),
        ("K3 x W6", fam(Complete(3)), fam(Wheel(6)), 7, 600),
        ("K3 x F6", fam(Complete(3)), fam(Fan(6)), 7, 600),
    ];
    for (name, g, h, want, secs) in &table {
        let oracle =
            oracle_feasible(g, h).then(|| common::gamma_tr(direct_product(g, h).unwrap().graph()));
        c.value(name, exact_product(g, h, *secs), *want, oracle);
    }

    // (K7 - M) x (K7 - M): certificate route only
    let k7m = fam(CompleteMinusMatching(7));
    let verdict = classify_small_product(&k7m, &k7m).unwrap();
    c.value(
        "(K7-M) x (K7-M) verdict",
        verdict.value.ok_or_else(|| "unknown".to_string()),
        6,
        None,
    );
    let built = verdict
        .case
        .ok_or_else(|| "no case".to_string())
        .and_then(|case| {
            small_value_construction_auto(case, &k7m, &k7m).map_err(|e| e.to_string())
        });
    c.value(
        "(K7-M) x (K7-M) construction weight",
        built.map(|f| f.weight()),
        6,
        None,
    );
    c.value(
        "(K7-M) x (K7-M) lower bound",
        small_value_lower_bound(&k7m, &k7m).map_err(|e| e.to_string()),
        6,
        None,
    );

    // C4 x C8: certificate plus the degree identity |V| = Δ|V2|
    let (c4, c8) = (fam(Cycle(4)), fam(Cycle(8)));
    match certify_regular_eod_product(&c4, &c8) {
        Some(cert) => {
            c.value("C4 x C8 certificate", Ok(cert.value), 16, None);
            let pg = direct_product(&c4, &c8).unwrap();
            let r = genlower_check(pg.graph(), cert.labeling().unwrap(), cert.value).unwrap();
            let identity = r.equality_case
                && r.order == 32
                && r.max_degree * r.v2 == 32
                && r.equality_holds == Some(true);
            c.flag(
                identity,
                format!(
                    "C4 x C8 genlower: |V| = {}, Δ|V2| + |V1| = {}·{} + {}, equality {:?}",
                    r.order, r.max_degree, r.v2, r.v1, r.equality_holds
                ),
            );
            c.value("C4 x C8 exact", exact_product(&c4, &c8, 60), 16, None);
        }
        None => c.value("C4 x C8 certificate", Err("none".into()), 16, None),
    }

    for (name, g, h, want) in [
        ("C4 x K2,2", c4.clone(), fam(CompleteBipartite(2, 2)), 8),
        ("C4 x prism(C3)", c4.clone(), prism_c3(), 8),
    ] {
        c.value(
            &format!("{name} certificate"),
            certify_regular_eod_product(&g, &h)
                .map(|c| c.value)
                .ok_or_else(|| "none".to_string()),
            want,
            None,
        );
        c.value(
            &format!("{name} exact"),
            exact_product(&g, &h, 600),
            want,
            None,
        );
    }

    let n = c.details.len();
    Outcome::new(
        c.ok,
        format!("known-value regression table, {n} checks"),
        c.details,
    )
}

fn run_harness(max_n: usize) -> (VerificationReport, Duration) {
    let catalog = enumerate_catalog(max_n).unwrap();
    let t = Instant::now();
    let opts = VerifyOptions {
        budget: Budget::secs(600),
        jobs: 1,
    };
    let r = verify_theorems(&catalog.graphs, opts).unwrap();
    (r, t.elapsed())
}

/// Why a reported violation is expected, if it is: each rule names a bound
/// that is false on the pair, checked with the test-side oracles.
fn known_defect(check: &str, g: &Graph, h: &Graph) -> Option<&'static str> {
    let tfb_orientation = |a: &Graph, b: &Graph| {
        common::is_triangle_free(a) && common::is_bipartite(b) && common::rho(a) >= 2
    };
    match check {
        "sandwich:UB_minus2" | "refinement" if common::is_two_k2(g) || common::is_two_k2(h) => {
            Some("gamma_tR(G) gamma_tR(H) - 2 with a 2K2 factor")
        }
        "sandwich:EXACT_regEOD" if common::is_one_regular(g) && common::is_one_regular(h) => {
            Some("regular EOD value with 1-regular factors")
        }
        "sandwich:LB_tfb" if tfb_orientation(g, h) || tfb_orientation(h, g) => {
            Some("2 rho(G) gamma_tR(H) with rho(G) >= 2")
        }
        _ => None,
    }
}

fn criterion_2(report: &VerificationReport, elapsed: Duration) -> Outcome {
    let mut explained: BTreeMap<String, usize> = BTreeMap::new();
    let mut details = Vec::new();
    let mut unexplained = 0;
    for (pair, v) in report.violations() {
        let g = parse_graph6(&pair.g).unwrap();
        let h = parse_graph6(&pair.h).unwrap();
        match known_defect(&v.check, &g, &h) {
            Some(why) => *explained.entry(format!("{} ({why})", v.check)).or_default() += 1,
            None => {
                unexplained += 1;
                details.push(format!(
                    "UNEXPECTED {} x {}: {}: {}",
                    pair.g, pair.h, v.check, v.detail
                ));
            }
        }
    }
    for (k, n) in &explained {
        details.push(format!("known {k}: {n}"));
    }
    let skipped = report.skipped_count();
    let total = report.violation_count();
    let summary = format!(
        "exhaustive harness on factors with at most 4 vertices: {} pairs, {skipped} skipped, \
         {total} violations ({unexplained} unexplained), {:.1?}",
        report.pairs.len(),
        elapsed
    );
    let status = if total == 0 && skipped == 0 {
        Status::Pass
    } else if unexplained == 0 && skipped == 0 && elapsed < Duration::from_secs(900) {
        Status::KnownFail
    } else {
        Status::Fail
    };
    Outcome {
        status,
        summary,
        details,
    }
}

fn criterion_3() -> Outcome {
    let catalog = enumerate_catalog(5).unwrap().graphs;
    let mut instances: Vec<(String, Graph)> = catalog
        .iter()
        .map(|g| (emit_graph6(g), g.clone()))
        .collect();
    for (i, g) in catalog.iter().enumerate() {
        for h in &catalog[i..] {
            if g.order() * h.order() <= 12 {
                let pg = direct_product(g, h).unwrap();
                instances.push((
                    format!("{} x {}", emit_graph6(g), emit_graph6(h)),
                    pg.into_graph(),
                ));
            }
        }
    }
    let mut details = Vec::new();
    let mut ok = true;
    for (name, g) in &instances {
        let bb = gamma_tr_exact(g, Budget::UNLIMITED).unwrap();
        let bf = gamma_tr_bruteforce(g).unwrap();
        let oracle = common::gamma_tr(g);
        if bb.value != bf.value || bb.witness != bf.witness || bb.value != oracle {
            ok = false;
            details.push(format!(
                "BAD {name}: branch and bound {}, brute force {}, enumeration {oracle}",
                bb.value, bf.value
            ));
        }
    }
    ok &= instances.len() >= 50;
    Outcome::new(
        ok,
        format!(
            "branch and bound equals brute force (value and witness) on {} instances",
            instances.len()
        ),
        details,
    )
}

fn criterion_4(reports: &[(usize, &VerificationReport)]) -> Outcome {
    let mut ok = true;
    let mut details = Vec::new();
    for (max_n, r) in reports {
        let t = r.constructions();
        let bad = r
            .violations()
            .filter(|(_, v)| v.check == "construction")
            .count();
        let pass = t.checked == t.valid
            && t.formula_checked == t.formula_ok
            && t.formula_checked > 0
            && bad == 0;
        ok &= pass;
        details.push(format!(
            "max-n {max_n}: {}/{} outputs valid, {}/{} factor-product weights match the formula",
            t.valid, t.checked, t.formula_ok, t.formula_checked
        ));
    }
    Outcome::new(ok, "construction outputs re-verified", details)
}

fn criterion_5(extended: &VerificationReport) -> Outcome {
    let mut ok = true;
    let mut details = Vec::new();
    let cases = [
        ("UB_minus2", fam(Star(2)), fam(Star(2))),
        (
            "UB_2gt",
            fam(CompleteBipartite(2, 2)),
            fam(CompleteBipartite(2, 2)),
        ),
        ("UB_half", fam(Cycle(4)), fam(Cycle(4))),
        ("LB_pack", fam(Path(4)), fam(Path(4))),
    ];
    for (name, g, h) in cases {
        let pg = factor_profile(&g, Budget::UNLIMITED).unwrap();
        let ph = factor_profile(&h, Budget::UNLIMITED).unwrap();
        let report = pair_bounds(&pg, &ph).unwrap();
        let exact = gamma_tr_max_v2(direct_product(&g, &h).unwrap().graph(), Budget::UNLIMITED)
            .unwrap()
            .value;
        let b = report.bound(name).unwrap();
        let tight = b.applicable && b.value == exact;
        ok &= tight;
        details.push(format!(
            "{} {name} on {} x {}: bound {}, exact {exact}",
            if tight { "ok  " } else { "BAD " },
            g.label(),
            h.label(),
            b.value
        ));
    }
    let opack_violations = extended
        .violations()
        .filter(|(_, v)| v.check == "sandwich:LB_opack")
        .count();
    ok &= opack_violations == 0;
    match extended.min_eod_slack() {
        Some((s, p)) => details.push(format!(
            "open-packing lower bound: minimum slack {s} on {} x {} (not asserted tight)",
            p.g, p.h
        )),
        None => details.push("open-packing lower bound never applicable".into()),
    }
    Outcome::new(ok, "sharpness reproductions", details)
}

fn criterion_6() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x6a09e667);
    let mut bad = Vec::new();
    let trials = 1000;
    for i in 0..trials {
        let n = rng.gen_range(1..=40);
        let p: f64 = rng.gen();
        let edges: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|_| rng.gen_bool(p))
            .collect();
        let g = Graph::from_edge_list(n, &edges).unwrap();
        let text = emit_graph6(&g);
        let back = parse_graph6(&text).unwrap();
        if back.adjacency() != g.adjacency() || text != common::graph6(&g) {
            bad.push(format!("trial {i}: n = {n}, {text}"));
        }
    }
    Outcome::new(
        bad.is_empty(),
        format!("graph6 round trip on {trials} seeded random graphs with at most 40 vertices"),
        bad,
    )
}

fn main() -> ExitCode {
    let (base, base_time) = run_harness(4);
    let (extended, _) = run_harness(5);
    let outcomes = [
        criterion_1(),
        criterion_2(&base, base_time),
        criterion_3(),
        criterion_4(&[(4, &base), (5, &extended)]),
        criterion_5(&extended),
        criterion_6(),
    ];
    let mut failed = false;
    for (i, o) in outcomes.iter().enumerate() {
        let tag = match o.status {
            Status::Pass => "PASS",
            Status::KnownFail => "FAIL (known bound defects, see below)",
            Status::Fail => {
                failed = true;
                "FAIL"
            }
        };
        println!("criterion {}: {tag}: {}", i + 1, o.summary);
        for d in &o.details {
            println!("    {d}");
        }
    }
    if failed {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}
