//! Exhaustive audit of every bound, classifier verdict and construction
//! against exact values of `γ_tR(G × H)` over a catalog of factors.

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::bounds::{
    factor_profile, genlower_check, pair_bounds, remark_bound, BoundEntry, FactorProfile,
};
use crate::classify::{certify_regular_eod_product, triangle_centered, CaseWitness, SmallCase};
use crate::construct::{
    product_eod_set, product_trdf_from_factors, product_trdf_from_total_dom_sets,
    small_value_construction_auto,
};
use crate::error::{Result, TrdError};
use crate::graph::{mask_from_vertices, Graph};
use crate::graph6::emit_graph6;
use crate::labeling::{is_total_roman_dominating, LabelFunction, VertexSet};
use crate::product::direct_product;
use crate::solve::{
    gamma_tr_bruteforce, gamma_tr_exact, gamma_tr_max_v2, gamma_tr_max_v2_bruteforce,
    trdf_pareto_frontier, Budget, ParetoPoint, BRUTE_FORCE_LIMIT,
};

#[derive(Clone, Copy, Debug)]
pub struct VerifyOptions {
    pub budget: Budget,
    /// Worker threads; 0 lets the pool choose.
    pub jobs: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            budget: Budget::UNLIMITED,
            jobs: 0,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub check: String,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ConstructionTally {
    pub checked: usize,
    pub valid: usize,
    /// Factor-product weights compared with `ω(g)ω(h) − 2|A2||B2|`.
    pub formula_checked: usize,
    pub formula_ok: usize,
}

impl ConstructionTally {
    fn add(&mut self, o: &ConstructionTally) {
        self.checked += o.checked;
        self.valid += o.valid;
        self.formula_checked += o.formula_checked;
        self.formula_ok += o.formula_ok;
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct PairRecord {
    pub g: String,
    pub h: String,
    pub skipped: Option<String>,
    pub exact: Option<u32>,
    pub max_v2: Option<usize>,
    pub bounds: Vec<BoundEntry>,
    pub verdict: Value,
    pub violations: Vec<Violation>,
    pub constructions: ConstructionTally,
    /// `Some(agreed)` when the product was small enough for brute force.
    pub oracle: Option<bool>,
    /// Remark bound with every TRDF weight allowed.
    pub remark_full_cap: Option<u32>,
    /// `exact − LB_opack` when that bound applies.
    pub eod_slack: Option<u32>,
}

impl PairRecord {
    pub fn bound(&self, name: &str) -> Option<&BoundEntry> {
        self.bounds.iter().find(|b| b.name == name)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub catalog_size: usize,
    pub pairs: Vec<PairRecord>,
}

impl VerificationReport {
    pub fn violations(&self) -> impl Iterator<Item = (&PairRecord, &Violation)> {
        self.pairs
            .iter()
            .flat_map(|p| p.violations.iter().map(move |v| (p, v)))
    }

    pub fn violation_count(&self) -> usize {
        self.pairs.iter().map(|p| p.violations.len()).sum()
    }

    pub fn skipped_count(&self) -> usize {
        self.pairs.iter().filter(|p| p.skipped.is_some()).count()
    }

    pub fn constructions(&self) -> ConstructionTally {
        let mut t = ConstructionTally::default();
        for p in &self.pairs {
            t.add(&p.constructions);
        }
        t
    }

    pub fn oracle_checked(&self) -> usize {
        self.pairs.iter().filter(|p| p.oracle.is_some()).count()
    }

    /// Smallest `exact − LB_opack` seen, with the pair attaining it.
    pub fn min_eod_slack(&self) -> Option<(u32, &PairRecord)> {
        self.pairs
            .iter()
            .filter_map(|p| p.eod_slack.map(|s| (s, p)))
            .min_by_key(|(s, _)| *s)
    }

    /// Pairs where the uncapped remark bound beats the capped one.
    pub fn remark_cap_sensitive(&self) -> usize {
        self.pairs
            .iter()
            .filter(|p| match (p.remark_full_cap, p.bound("UB_remark")) {
                (Some(full), Some(b)) if b.applicable => full < b.value,
                _ => false,
            })
            .count()
    }

    pub fn summary_line(&self) -> String {
        let t = self.constructions();
        format!(
            "{} pairs, {} skipped, {} violations, {}/{} constructions valid",
            self.pairs.len(),
            self.skipped_count(),
            self.violation_count(),
            t.valid,
            t.checked
        )
    }

    pub fn to_json(&self) -> Value {
        let t = self.constructions();
        json!({
            "catalog_size": self.catalog_size,
            "pairs": self.pairs,
            "summary": {
                "pairs": self.pairs.len(),
                "skipped": self.skipped_count(),
                "violations": self.violation_count(),
                "constructions": t,
                "oracle_checked": self.oracle_checked(),
                "min_eod_slack": self.min_eod_slack().map(|(s, p)| json!({"slack": s, "g": p.g, "h": p.h})),
                "remark_cap_sensitive": self.remark_cap_sensitive(),
            },
        })
    }

    /// One row per pair: factors, status, exact value, every bound value
    /// (empty when inapplicable) and the violation count.
    pub fn to_csv(&self) -> String {
        let names: Vec<&str> = self
            .pairs
            .first()
            .map(|p| p.bounds.iter().map(|b| b.name).collect())
            .unwrap_or_default();
        let mut out = format!("g,h,status,exact,verdict,{},violations\n", names.join(","));
        for p in &self.pairs {
            let status = if p.skipped.is_some() { "skipped" } else { "ok" };
            let cells: Vec<String> = names
                .iter()
                .map(|n| match p.bound(n) {
                    Some(b) if b.applicable => b.value.to_string(),
                    _ => String::new(),
                })
                .collect();
            out += &format!(
                "{},{},{},{},{},{},{}\n",
                csv_field(&p.g),
                csv_field(&p.h),
                status,
                p.exact.map(|v| v.to_string()).unwrap_or_default(),
                p.verdict["value"].to_string().trim_matches('"'),
                cells.join(","),
                p.violations.len()
            );
        }
        out
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

struct Factor {
    profile: FactorProfile,
    full_frontier: Vec<ParetoPoint>,
}

fn prepare(g: &Graph, budget: Budget) -> Result<Factor> {
    let profile = factor_profile(g, budget)?;
    let full_frontier = trdf_pareto_frontier(g, Some(2 * g.order() as u32))?;
    Ok(Factor {
        profile,
        full_frontier,
    })
}

/// Audits every unordered pair `{G, H}` (including `G = H`) of `catalog`.
pub fn verify_theorems(catalog: &[Graph], opts: VerifyOptions) -> Result<VerificationReport> {
    for g in catalog {
        g.require_no_isolated()?;
        if g.order() > BRUTE_FORCE_LIMIT {
            return Err(TrdError::Size {
                what: "harness factor",
                order: g.order(),
                limit: BRUTE_FORCE_LIMIT,
            });
        }
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.jobs)
        .build()
        .map_err(|e| TrdError::Internal(e.to_string()))?;
    pool.install(|| {
        let factors = catalog
            .par_iter()
            .map(|g| prepare(g, opts.budget))
            .collect::<Result<Vec<_>>>()?;
        let pairs: Vec<(usize, usize)> = (0..factors.len())
            .flat_map(|i| (i..factors.len()).map(move |j| (i, j)))
            .collect();
        let records = pairs
            .par_iter()
            .map(|&(i, j)| verify_pair(&factors[i], &factors[j], opts.budget))
            .collect::<Result<Vec<_>>>()?;
        Ok(VerificationReport {
            catalog_size: catalog.len(),
            pairs: records,
        })
    })
}

struct Audit {
    exact: u32,
    violations: Vec<Violation>,
    tally: ConstructionTally,
}

impl Audit {
    fn fail(&mut self, check: impl Into<String>, detail: impl Into<String>) {
        self.violations.push(Violation {
            check: check.into(),
            detail: detail.into(),
        });
    }

    /// Records one construction output: valid on the product, of the
    /// expected weight, and no lighter than the optimum.
    fn construction(
        &mut self,
        product: &Graph,
        name: &str,
        out: Result<LabelFunction>,
        expected: Option<u32>,
    ) {
        self.tally.checked += 1;
        let f = match out {
            Ok(f) => f,
            Err(e) => return self.fail("construction", format!("{name}: {e}")),
        };
        if !is_total_roman_dominating(product, &f).unwrap_or(false) {
            return self.fail("construction", format!("{name}: invalid labeling {f:?}"));
        }
        self.tally.valid += 1;
        if let Some(w) = expected {
            if f.weight() != w {
                self.fail(
                    "construction",
                    format!("{name}: weight {} != {w}", f.weight()),
                );
            }
        }
        if f.weight() < self.exact {
            self.fail(
                "construction",
                format!(
                    "{name}: weight {} below gamma_tR {}",
                    f.weight(),
                    self.exact
                ),
            );
        }
    }
}

fn verify_pair(a: &Factor, b: &Factor, budget: Budget) -> Result<PairRecord> {
    let (pg, ph) = (&a.profile, &b.profile);
    let (g, h) = (&pg.graph, &ph.graph);
    let mut report = pair_bounds(pg, ph)?;
    let mut record = PairRecord {
        g: emit_graph6(g),
        h: emit_graph6(h),
        skipped: None,
        exact: None,
        max_v2: None,
        bounds: report.bounds.clone(),
        verdict: report.verdict.to_json(),
        violations: Vec::new(),
        constructions: ConstructionTally::default(),
        oracle: None,
        remark_full_cap: remark_bound(&a.full_frontier, &b.full_frontier),
        eod_slack: None,
    };
    let prod = direct_product(g, h)?;
    let product = prod.graph();
    let exact = match gamma_tr_max_v2(product, budget) {
        Ok(r) => r,
        Err(TrdError::Timeout { lower, upper, .. }) => {
            record.skipped = Some(format!("timeout, {lower} <= gamma_tR <= {upper}"));
            return Ok(record);
        }
        Err(e) => return Err(e),
    };
    let value = exact.value;
    let witness = exact.labeling().expect("labeling witness").clone();
    record.exact = Some(value);
    record.max_v2 = exact.max_v2;
    report.exact = Some(exact);
    let mut audit = Audit {
        exact: value,
        violations: Vec::new(),
        tally: ConstructionTally::default(),
    };

    for bound in report.sandwich_violations() {
        audit.fail(
            format!("sandwich:{}", bound.name),
            format!("{:?} {} vs exact {value}", bound.kind, bound.value),
        );
    }
    if let Some(full) = record.remark_full_cap {
        if full < value {
            audit.fail("sandwich:UB_remark_full", format!("{full} < exact {value}"));
        }
    }
    let ub = |n: &str| report.bound(n).filter(|e| e.applicable).map(|e| e.value);
    if let (Some(r), Some(m), Some(c)) = (ub("UB_remark"), ub("UB_maxA2"), ub("UB_minus2")) {
        if !(r <= m && m <= c) {
            audit.fail(
                "refinement",
                format!("UB_remark {r}, UB_maxA2 {m}, UB_minus2 {c}"),
            );
        }
    }
    record.eod_slack = report
        .bound("LB_opack")
        .filter(|e| e.applicable && e.value <= value)
        .map(|e| value - e.value);

    // product form of the general lower bound
    if product.max_degree() != pg.max_degree * ph.max_degree {
        audit.fail(
            "degree_identity",
            format!(
                "{} != {} * {}",
                product.max_degree(),
                pg.max_degree,
                ph.max_degree
            ),
        );
    }
    match genlower_check(product, &witness, value) {
        Ok(r) if r.ok() => {}
        Ok(r) => audit.fail("lower1", format!("{r:?}")),
        Err(e) => audit.fail("lower1", e.to_string()),
    }

    if let Some(v) = report.verdict.value {
        if v != value {
            audit.fail(
                "classifier",
                format!("{} says {v}, exact {value}", report.verdict.rule()),
            );
        }
    }

    if pg.order >= 3 && ph.order >= 3 {
        let tc = triangle_centered(g).is_some() && triangle_centered(h).is_some();
        let six = value == 6;
        let three = witness.positive().count_ones() == 3;
        if !(tc == six && six == three) {
            audit.fail(
                "triangel",
                format!("triangle centered {tc}, value 6 {six}, |V1 u V2| = 3 {three}"),
            );
        }
    }

    if product.order() <= BRUTE_FORCE_LIMIT {
        let bb = gamma_tr_exact(product, budget)?;
        let bf = gamma_tr_bruteforce(product)?;
        let bf2 = gamma_tr_max_v2_bruteforce(product, BRUTE_FORCE_LIMIT)?;
        let agreed = bb.value == bf.value
            && bb.witness == bf.witness
            && value == bf2.value
            && record.max_v2 == bf2.max_v2
            && report.exact.as_ref().map(|r| &r.witness) == Some(&bf2.witness);
        if !agreed {
            audit.fail(
                "oracle",
                format!("branch and bound {} vs brute force {}", bb.value, bf.value),
            );
        }
        record.oracle = Some(agreed);
    }

    check_constructions(
        &mut audit,
        a,
        b,
        product,
        &report.verdict.witness,
        &report.verdict.clauses,
    );

    if let Some(cert) = certify_regular_eod_product(g, h) {
        if cert.value != value {
            audit.fail(
                "certificate",
                format!("certificate {} vs exact {value}", cert.value),
            );
        }
    }

    record.violations = audit.violations;
    record.constructions = audit.tally;
    Ok(record)
}

fn check_constructions(
    audit: &mut Audit,
    a: &Factor,
    b: &Factor,
    product: &Graph,
    verdict_witness: &Option<CaseWitness>,
    clauses: &[SmallCase],
) {
    let (pg, ph) = (&a.profile, &b.profile);
    let (g, h) = (&pg.graph, &ph.graph);

    let mut gf: Vec<&LabelFunction> = a.full_frontier.iter().map(|p| &p.witness).collect();
    gf.push(&pg.gamma_tr_witness);
    let mut hf: Vec<&LabelFunction> = b.full_frontier.iter().map(|p| &p.witness).collect();
    hf.push(&ph.gamma_tr_witness);
    for fg in &gf {
        for fh in &hf {
            let want = fg.weight() * fh.weight() - 2 * (fg.count_v2() * fh.count_v2()) as u32;
            let out = product_trdf_from_factors(g, h, fg, fh);
            audit.tally.formula_checked += 1;
            if out.as_ref().is_ok_and(|f| f.weight() == want) {
                audit.tally.formula_ok += 1;
            }
            audit.construction(product, "factors", out, Some(want));
        }
    }

    let out = product_trdf_from_total_dom_sets(g, h, &pg.gamma_t_set, &ph.gamma_t_set);
    audit.construction(
        product,
        "total_dom_sets",
        out,
        Some(2 * pg.gamma_t * ph.gamma_t),
    );

    for &case in clauses {
        match case {
            SmallCase::V => {
                if let Some(CaseWitness::TotalDominating { g: dg, h: dh }) = verdict_witness {
                    let dg = VertexSet::plain(mask_from_vertices(dg));
                    let dh = VertexSet::plain(mask_from_vertices(dh));
                    let out = product_trdf_from_total_dom_sets(g, h, &dg, &dh);
                    audit.construction(product, "v", out, Some(8));
                }
            }
            _ => {
                let out = small_value_construction_auto(case, g, h);
                audit.construction(product, case.as_str(), out, Some(case.value()));
            }
        }
    }

    if let (Some(sg), Some(sh)) = (&pg.eod_set, &ph.eod_set) {
        audit.tally.checked += 1;
        match product_eod_set(g, h, sg, sh) {
            Ok(_) => audit.tally.valid += 1,
            Err(e) => audit.fail("construction", format!("eod: {e}")),
        }
    }
}
