//! Factor profiles and the lower/upper bounds on `γ_tR(G × H)` they imply.

use serde::Serialize;
use serde_json::{json, Value};

use crate::classify::{
    classify_small_product, small_value_lower_bound, triangle_centered, universal_vertices,
    SmallVerdict, TriangleCenteredWitness,
};
use crate::error::{Result, TrdError};
use crate::graph::{bits, Graph, Mask};
use crate::graph6::emit_graph6;
use crate::labeling::{is_total_roman_dominating, LabelFunction, VertexSet};
use crate::solve::{
    all_maximum_open_packings, eod_set, gamma_t_exact, gamma_tr_max_v2, rho_exact, rho_o_exact,
    trdf_pareto_frontier, Budget, ParetoPoint, SolveResult, BRUTE_FORCE_LIMIT,
};

/// Exact invariants and structural flags of one factor.
#[derive(Clone, Debug)]
pub struct FactorProfile {
    pub graph: Graph,
    pub order: usize,
    pub max_degree: usize,
    pub gamma_t: u32,
    pub gamma_t_set: VertexSet,
    pub gamma_tr: u32,
    /// A `γ_tR`-function with the largest `|V2|`.
    pub gamma_tr_witness: LabelFunction,
    pub rho: u32,
    pub rho_o: u32,
    /// `max |V2|` over `γ_tR`-functions.
    pub max_a2: u32,
    /// Frontier up to weight `2γ_t`; absent above the brute-force limit.
    pub pareto: Option<Vec<ParetoPoint>>,
    pub bipartite: bool,
    pub triangle_free: bool,
    pub regular: bool,
    pub eod_set: Option<VertexSet>,
    pub total_roman: bool,
    pub universal_count: usize,
    pub triangle_centered: Option<TriangleCenteredWitness>,
    /// Some maximum open packing induces a perfect matching.
    pub rho_o_perfect_matching: bool,
}

impl FactorProfile {
    pub fn is_eod(&self) -> bool {
        self.eod_set.is_some()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "graph": emit_graph6(&self.graph),
            "name": self.graph.label(),
            "order": self.order,
            "max_degree": self.max_degree,
            "gamma_t": self.gamma_t,
            "gamma_tR": self.gamma_tr,
            "gamma_tR_witness": self.gamma_tr_witness.labels(),
            "rho": self.rho,
            "rho_o": self.rho_o,
            "max_a2": self.max_a2,
            "pareto": self.pareto.as_ref().map(|p| serde_json::to_value(p).expect("pareto serializes")),
            "bipartite": self.bipartite,
            "triangle_free": self.triangle_free,
            "regular": self.regular,
            "eod": self.is_eod(),
            "eod_set": self.eod_set.map(|s| s.vertices()),
            "total_roman": self.total_roman,
            "universal_count": self.universal_count,
            "triangle_centered": self.triangle_centered.map(|w| w.triangle.to_vec()),
            "rho_o_perfect_matching": self.rho_o_perfect_matching,
        })
    }
}

/// Every vertex of `s` has exactly one neighbour in `s`.
fn induces_perfect_matching(g: &Graph, s: Mask) -> bool {
    bits(s).all(|v| (g.adj(v) & s).count_ones() == 1)
}

pub fn factor_profile(g: &Graph, budget: Budget) -> Result<FactorProfile> {
    g.require_no_isolated()?;
    let tr = gamma_tr_max_v2(g, budget)?;
    let gt = gamma_t_exact(g)?;
    let witness = tr.labeling().expect("labeling witness").clone();
    let pareto = if g.order() <= BRUTE_FORCE_LIMIT {
        Some(trdf_pareto_frontier(g, None)?)
    } else {
        None
    };
    Ok(FactorProfile {
        graph: g.clone(),
        order: g.order(),
        max_degree: g.max_degree(),
        gamma_t: gt.value,
        gamma_t_set: *gt.set().expect("set witness"),
        gamma_tr: tr.value,
        max_a2: witness.count_v2() as u32,
        gamma_tr_witness: witness,
        rho: rho_exact(g)?.value,
        rho_o: rho_o_exact(g)?.value,
        pareto,
        bipartite: g.is_bipartite(),
        triangle_free: g.is_triangle_free(),
        regular: g.is_regular(),
        eod_set: eod_set(g)?,
        total_roman: tr.value == 2 * gt.value,
        universal_count: universal_vertices(g).len(),
        triangle_centered: triangle_centered(g),
        rho_o_perfect_matching: all_maximum_open_packings(g)
            .into_iter()
            .any(|s| induces_perfect_matching(g, s)),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundKind {
    Lower,
    Upper,
    Exact,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundEntry {
    pub name: &'static str,
    pub kind: BoundKind,
    /// Meaningful only when `applicable`.
    pub value: u32,
    pub applicable: bool,
    pub note: String,
}

impl BoundEntry {
    fn new(
        name: &'static str,
        kind: BoundKind,
        value: Option<u32>,
        note: impl Into<String>,
    ) -> Self {
        Self {
            name,
            kind,
            value: value.unwrap_or(0),
            applicable: value.is_some(),
            note: note.into(),
        }
    }

    /// Whether `exact` is consistent with this entry.
    pub fn admits(&self, exact: u32) -> bool {
        !self.applicable
            || match self.kind {
                BoundKind::Lower => self.value <= exact,
                BoundKind::Upper => exact <= self.value,
                BoundKind::Exact => exact == self.value,
            }
    }
}

/// All bounds for a factor pair, plus the small-value verdict and, when
/// computed, the exact value.
#[derive(Clone, Debug)]
pub struct PairReport {
    pub g: FactorProfile,
    pub h: FactorProfile,
    pub bounds: Vec<BoundEntry>,
    pub verdict: SmallVerdict,
    pub exact: Option<SolveResult>,
}

impl PairReport {
    pub fn bound(&self, name: &str) -> Option<&BoundEntry> {
        self.bounds.iter().find(|b| b.name == name)
    }

    /// Applicable entries that the exact value falls outside of.
    pub fn sandwich_violations(&self) -> Vec<&BoundEntry> {
        match &self.exact {
            Some(r) => self.bounds.iter().filter(|b| !b.admits(r.value)).collect(),
            None => Vec::new(),
        }
    }

    pub fn to_json(&self) -> Value {
        let mut v = json!({
            "g": self.g.to_json(),
            "h": self.h.to_json(),
            "bounds": self.bounds,
            "verdict": self.verdict.to_json(),
            "exact": null,
        });
        if let Some(r) = &self.exact {
            v["exact"] = json!(r.value);
            v["exact_max_v2"] = json!(r.max_v2);
            v["sandwich_violations"] = json!(self
                .sandwich_violations()
                .iter()
                .map(|b| b.name)
                .collect::<Vec<_>>());
        }
        v
    }
}

/// `min ω(g)ω(h) − 2|A2||B2|` over the given frontier points.
pub fn remark_bound(pg: &[ParetoPoint], ph: &[ParetoPoint]) -> Option<u32> {
    pg.iter()
        .flat_map(|a| {
            ph.iter()
                .map(move |b| a.weight * b.weight - 2 * a.max_v2 * b.max_v2)
        })
        .min()
}

fn oriented_max(
    g: &FactorProfile,
    h: &FactorProfile,
    f: impl Fn(&FactorProfile, &FactorProfile) -> Option<u32>,
) -> Option<u32> {
    match (f(g, h), f(h, g)) {
        (Some(a), Some(b)) => Some(a.max(b)),
        (a, b) => a.or(b),
    }
}

pub fn pair_bounds(g: &FactorProfile, h: &FactorProfile) -> Result<PairReport> {
    use BoundKind::*;
    let both_order3 = g.order >= 3 && h.order >= 3;
    let mut bounds = Vec::new();

    bounds.push(BoundEntry::new(
        "LB_pack",
        Lower,
        Some((h.rho * g.gamma_tr).max(g.rho * h.gamma_tr)),
        "max{rho(H) gamma_tR(G), rho(G) gamma_tR(H)}",
    ));
    let tfb = oriented_max(g, h, |a, b| {
        (a.triangle_free && b.bipartite && b.order >= 2).then_some(2 * a.rho * b.gamma_tr)
    });
    bounds.push(BoundEntry::new(
        "LB_tfb",
        Lower,
        tfb,
        "2 rho(G) gamma_tR(H); G triangle-free, H bipartite of order >= 2; better orientation",
    ));
    let opack = both_order3.then(|| (h.rho_o * g.gamma_tr).max(g.rho_o * h.gamma_tr).div_ceil(2));
    bounds.push(BoundEntry::new(
        "LB_opack",
        Lower,
        opack,
        "ceil(max{rho_o(H) gamma_tR(G), rho_o(G) gamma_tR(H)} / 2); both orders >= 3",
    ));
    let tfr = oriented_max(g, h, |a, b| {
        (a.triangle_free && a.rho_o_perfect_matching && b.bipartite && b.order >= 2)
            .then_some(a.rho_o * b.gamma_tr)
    });
    bounds.push(BoundEntry::new(
        "LB_tfr",
        Lower,
        tfr,
        "rho_o(G) gamma_tR(H); G triangle-free with a rho_o-set inducing a perfect matching, \
         H bipartite of order >= 2; better orientation",
    ));
    bounds.push(BoundEntry::new(
        "LB_small",
        Lower,
        Some(small_value_lower_bound(&g.graph, &h.graph)?),
        "4, and 6 unless both factors are K2",
    ));

    let gg = g.gamma_tr * h.gamma_tr;
    bounds.push(BoundEntry::new(
        "UB_maxA2",
        Upper,
        Some(gg - 2 * g.max_a2 * h.max_a2),
        "gamma_tR(G) gamma_tR(H) - 2|A2||B2| with |A2|, |B2| maximum",
    ));
    bounds.push(BoundEntry::new(
        "UB_minus2",
        Upper,
        both_order3.then(|| gg - 2),
        "gamma_tR(G) gamma_tR(H) - 2; both orders >= 3",
    ));
    let remark = match (&g.pareto, &h.pareto) {
        (Some(a), Some(b)) => remark_bound(a, b),
        _ => None,
    };
    bounds.push(BoundEntry::new(
        "UB_remark",
        Upper,
        remark,
        "min w(g)w(h) - 2|A2||B2| over TRDF pairs of weight <= 2 gamma_t",
    ));
    bounds.push(BoundEntry::new(
        "UB_2gt",
        Upper,
        Some(2 * g.gamma_t * h.gamma_t),
        "2 gamma_t(G) gamma_t(H)",
    ));
    bounds.push(BoundEntry::new(
        "UB_2rho_o",
        Upper,
        (g.is_eod() && h.is_eod()).then_some(2 * g.rho_o * h.rho_o),
        "2 rho_o(G) rho_o(H); both EOD graphs",
    ));
    bounds.push(BoundEntry::new(
        "UB_half",
        Upper,
        (g.total_roman && h.total_roman).then_some(gg / 2),
        "gamma_tR(G) gamma_tR(H) / 2; both total Roman graphs",
    ));
    bounds.push(BoundEntry::new(
        "EXACT_regEOD",
        Exact,
        (g.regular && g.is_eod() && h.regular && h.is_eod()).then_some(2 * g.gamma_t * h.gamma_t),
        "2 gamma_t(G) gamma_t(H); both regular EOD graphs",
    ));

    Ok(PairReport {
        verdict: classify_small_product(&g.graph, &h.graph)?,
        g: g.clone(),
        h: h.clone(),
        bounds,
        exact: None,
    })
}

/// The two inequalities `γ ≥ n − (Δ−2)|V2|` and `Δ|V2| ≥ n − |V1|` for a
/// `γ_tR`-function, and the equality case `n = Δ|V2| + |V1|`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GenlowerReport {
    pub order: usize,
    pub max_degree: usize,
    pub v1: usize,
    pub v2: usize,
    pub gamma: u32,
    pub weight_bound: i64,
    pub weight_bound_holds: bool,
    pub v2_bound_holds: bool,
    pub equality_case: bool,
    /// `Some` only in the equality case.
    pub equality_holds: Option<bool>,
}

impl GenlowerReport {
    pub fn ok(&self) -> bool {
        self.weight_bound_holds && self.v2_bound_holds && self.equality_holds != Some(false)
    }
}

/// `optimum` is `γ_tR` of the graph; `f` must be a TRDF of that weight.
pub fn genlower_check(g: &Graph, f: &LabelFunction, optimum: u32) -> Result<GenlowerReport> {
    if !is_total_roman_dominating(g, f)? {
        return Err(TrdError::Precondition(format!("{f:?} is not a TRDF")));
    }
    if f.weight() != optimum {
        return Err(TrdError::Precondition(format!(
            "labeling has weight {} but gamma_tR = {optimum}",
            f.weight()
        )));
    }
    let n = g.order() as i64;
    let delta = g.max_degree() as i64;
    let (v1, v2) = (f.count_v1() as i64, f.count_v2() as i64);
    let gamma = optimum as i64;
    let weight_bound = n - (delta - 2) * v2;
    let equality_case = n == delta * v2 + v1;
    Ok(GenlowerReport {
        order: g.order(),
        max_degree: g.max_degree(),
        v1: v1 as usize,
        v2: v2 as usize,
        gamma: optimum,
        weight_bound,
        weight_bound_holds: gamma >= weight_bound,
        v2_bound_holds: delta * v2 >= n - v1,
        equality_case,
        equality_holds: equality_case.then_some(gamma == weight_bound),
    })
}
