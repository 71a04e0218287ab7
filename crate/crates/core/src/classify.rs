//! Structural predicates and the small-value classifier for `G × H`.

use serde::Serialize;
use serde_json::{json, Value};

use crate::construct::product_eod_set;
use crate::error::{Result, TrdError};
use crate::graph::{bit, bits, mask_from_vertices, Graph, Mask};
use crate::labeling::{LabelFunction, SetRole, VertexSet};
use crate::product::direct_product;
use crate::solve::{
    eod_set, gamma_t_exact, gamma_tr_exact, Budget, Invariant, Method, SolveResult, Witness,
};

/// Vertices of degree `n - 1`.
pub fn universal_vertices(g: &Graph) -> VertexSet {
    let n = g.order();
    let m = (0..n)
        .filter(|&v| n > 1 && g.degree(v) == n - 1)
        .fold(0, |m, v| m | bit(v));
    VertexSet::plain(m)
}

/// A triangle `xyz` such that every vertex has at least two neighbours in it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TriangleCenteredWitness {
    pub triangle: [usize; 3],
}

impl TriangleCenteredWitness {
    pub fn mask(&self) -> Mask {
        mask_from_vertices(&self.triangle)
    }
}

fn is_central(g: &Graph, t: Mask) -> bool {
    (0..g.order()).all(|v| (g.adj(v) & t).count_ones() >= 2)
}

/// The lexicographically first central triangle, if any.
pub fn triangle_centered(g: &Graph) -> Option<TriangleCenteredWitness> {
    g.triangles()
        .into_iter()
        .find(|t| is_central(g, mask_from_vertices(t)))
        .map(|triangle| TriangleCenteredWitness { triangle })
}

/// `γ_tR(G) = 2γ_t(G)`.
pub fn is_total_roman_graph(g: &Graph, budget: Budget) -> Result<bool> {
    let tr = gamma_tr_exact(g, budget)?.value;
    Ok(tr == 2 * gamma_t_exact(g)?.value)
}

/// An efficient open dominating set, checked to be a `γ_t`-set.
pub fn is_eod_graph(g: &Graph) -> Result<Option<VertexSet>> {
    let Some(s) = eod_set(g)? else {
        return Ok(None);
    };
    let gt = gamma_t_exact(g)?.value as usize;
    if s.len() != gt {
        return Err(TrdError::Internal(format!(
            "EOD set of size {} but gamma_t = {gt}",
            s.len()
        )));
    }
    Ok(Some(s))
}

/// Which clause of the small-value characterisation applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SmallCase {
    Ii,
    IiiUniversal,
    IiiK2,
    IiiTriangle,
    Iv,
    V,
}

impl SmallCase {
    pub fn as_str(self) -> &'static str {
        match self {
            SmallCase::Ii => "ii",
            SmallCase::IiiUniversal => "iii_universal",
            SmallCase::IiiK2 => "iii_k2",
            SmallCase::IiiTriangle => "iii_triangle",
            SmallCase::Iv => "iv",
            SmallCase::V => "v",
        }
    }

    pub fn value(self) -> u32 {
        match self {
            SmallCase::Ii => 4,
            SmallCase::IiiUniversal | SmallCase::IiiK2 | SmallCase::IiiTriangle => 6,
            SmallCase::Iv => 7,
            SmallCase::V => 8,
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Some(match s {
            "ii" => SmallCase::Ii,
            "iii_universal" => SmallCase::IiiUniversal,
            "iii_k2" => SmallCase::IiiK2,
            "iii_triangle" => SmallCase::IiiTriangle,
            "iv" => SmallCase::Iv,
            "v" => SmallCase::V,
            _ => return None,
        })
    }
}

/// Which factor a vertex or property refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    G,
    H,
}

/// Vertices a small-value construction is built from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum CaseWitness {
    BothK2,
    /// Two universal vertices in each factor.
    TwoUniversal {
        g: [usize; 2],
        h: [usize; 2],
    },
    /// `k2` names the `K2` factor; `universal` and `neighbor` live in the other.
    K2Factor {
        k2: Side,
        universal: usize,
        neighbor: usize,
    },
    Triangles {
        g: [usize; 3],
        h: [usize; 3],
    },
    /// A universal vertex and one of its neighbours in each factor.
    OneUniversal {
        g: usize,
        g_neighbor: usize,
        h: usize,
        h_neighbor: usize,
    },
    TotalDominating {
        g: Vec<usize>,
        h: Vec<usize>,
    },
}

/// Outcome of the small-value decision procedure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmallVerdict {
    /// `None` when no clause applies.
    pub value: Option<u32>,
    pub case: Option<SmallCase>,
    /// Every clause whose hypotheses hold, in checking order.
    pub clauses: Vec<SmallCase>,
    pub witness: Option<CaseWitness>,
}

impl SmallVerdict {
    pub fn rule(&self) -> &'static str {
        self.case.map_or("unknown", SmallCase::as_str)
    }

    /// `{"value": int|"unknown", "rule": str, "witnesses": {...}}`
    pub fn to_json(&self) -> Value {
        json!({
            "value": self.value.map_or(json!("unknown"), |v| json!(v)),
            "rule": self.rule(),
            "clauses": self.clauses.iter().map(|c| c.as_str()).collect::<Vec<_>>(),
            "witnesses": self.witness.as_ref().map_or(json!({}), |w| serde_json::to_value(w).expect("witness serializes")),
        })
    }
}

fn two_least(m: Mask) -> Option<[usize; 2]> {
    let mut it = bits(m);
    Some([it.next()?, it.next()?])
}

fn first_neighbor(g: &Graph, v: usize) -> usize {
    g.adj(v).trailing_zeros() as usize
}

pub(crate) fn iii_universal_witness(g: &Graph, h: &Graph) -> Option<CaseWitness> {
    if g.order().max(h.order()) < 3 {
        return None;
    }
    Some(CaseWitness::TwoUniversal {
        g: two_least(universal_vertices(g).members())?,
        h: two_least(universal_vertices(h).members())?,
    })
}

pub(crate) fn iii_k2_witness(g: &Graph, h: &Graph) -> Option<CaseWitness> {
    let (k2, other) = if g.is_k2() {
        (Side::G, h)
    } else if h.is_k2() {
        (Side::H, g)
    } else {
        return None;
    };
    if other.order() < 3 {
        return None;
    }
    let u = bits(universal_vertices(other).members()).next()?;
    Some(CaseWitness::K2Factor {
        k2,
        universal: u,
        neighbor: first_neighbor(other, u),
    })
}

pub(crate) fn iii_triangle_witness(g: &Graph, h: &Graph) -> Option<CaseWitness> {
    Some(CaseWitness::Triangles {
        g: triangle_centered(g)?.triangle,
        h: triangle_centered(h)?.triangle,
    })
}

/// Literal reading: both factors have a universal vertex, one of them has
/// exactly one, the other is not `K2`, and they are not both triangle
/// centered.
pub(crate) fn iv_holds(g: &Graph, h: &Graph) -> bool {
    let (ug, uh) = (universal_vertices(g).len(), universal_vertices(h).len());
    let oriented = (ug == 1 && !h.is_k2()) || (uh == 1 && !g.is_k2());
    let both_tc = triangle_centered(g).is_some() && triangle_centered(h).is_some();
    ug >= 1 && uh >= 1 && oriented && !both_tc
}

pub(crate) fn iv_witness(g: &Graph, h: &Graph) -> Option<CaseWitness> {
    if !iv_holds(g, h) {
        return None;
    }
    let ug = bits(universal_vertices(g).members()).next()?;
    let uh = bits(universal_vertices(h).members()).next()?;
    Some(CaseWitness::OneUniversal {
        g: ug,
        g_neighbor: first_neighbor(g, ug),
        h: uh,
        h_neighbor: first_neighbor(h, uh),
    })
}

fn v_witness(g: &Graph, h: &Graph) -> Result<Option<CaseWitness>> {
    let (ug, uh) = (universal_vertices(g).len(), universal_vertices(h).len());
    if ug > 0 && uh > 0 {
        return Ok(None);
    }
    if triangle_centered(g).is_some() && triangle_centered(h).is_some() {
        return Ok(None);
    }
    let (tg, th) = (gamma_t_exact(g)?, gamma_t_exact(h)?);
    if tg.value != 2 || th.value != 2 {
        return Ok(None);
    }
    Ok(Some(CaseWitness::TotalDominating {
        g: tg.set().expect("set witness").vertices(),
        h: th.set().expect("set witness").vertices(),
    }))
}

type WitnessFn = fn(&Graph, &Graph) -> Option<CaseWitness>;

/// Applies the clauses in order: (ii), (iii), (iv), (v). Within (iii) the
/// reported rule is the first of triangle, universal, `K2` that holds.
pub fn classify_small_product(g: &Graph, h: &Graph) -> Result<SmallVerdict> {
    g.require_no_isolated()?;
    h.require_no_isolated()?;
    let mut found: Vec<(SmallCase, CaseWitness)> = Vec::new();
    if g.is_k2() && h.is_k2() {
        found.push((SmallCase::Ii, CaseWitness::BothK2));
    }
    let checks: [(SmallCase, WitnessFn); 4] = [
        (SmallCase::IiiTriangle, iii_triangle_witness),
        (SmallCase::IiiUniversal, iii_universal_witness),
        (SmallCase::IiiK2, iii_k2_witness),
        (SmallCase::Iv, iv_witness),
    ];
    for (case, check) in checks {
        if let Some(w) = check(g, h) {
            found.push((case, w));
        }
    }
    if let Some(w) = v_witness(g, h)? {
        found.push((SmallCase::V, w));
    }
    let clauses = found.iter().map(|(c, _)| *c).collect();
    Ok(match found.into_iter().next() {
        Some((case, w)) => SmallVerdict {
            value: Some(case.value()),
            case: Some(case),
            clauses,
            witness: Some(w),
        },
        None => SmallVerdict {
            value: None,
            case: None,
            clauses,
            witness: None,
        },
    })
}

/// `γ_tR(G × H) ≥ 4`, and `≥ 6` unless both factors are `K2`: the values
/// 1, 2, 3 and 5 never occur and 4 only occurs for `K2 × K2`.
pub fn small_value_lower_bound(g: &Graph, h: &Graph) -> Result<u32> {
    g.require_no_isolated()?;
    h.require_no_isolated()?;
    Ok(if g.is_k2() && h.is_k2() { 4 } else { 6 })
}

/// `γ_tR(G) = 2γ_t(G)` for a regular EOD graph, witnessed by label 2 on an
/// EOD set. Degree 1 is excluded: `mK2` is regular and EOD, yet
/// `γ_tR(mK2) = 2m < 4m = 2γ_t(mK2)`.
pub fn certify_regular_eod(g: &Graph) -> Option<SolveResult> {
    if g.min_degree() < 2 || !g.is_regular() {
        return None;
    }
    let s = is_eod_graph(g).ok()??;
    Some(SolveResult {
        invariant: Invariant::GammaTr,
        value: 2 * s.len() as u32,
        witness: Witness::Labeling(LabelFunction::from_masks(g.order(), 0, s.members())),
        method: Method::Certificate,
        max_v2: None,
        tie_break_note: None,
    })
}

/// `γ_tR(G × H) = 2γ_t(G)γ_t(H)` when both factors are regular EOD graphs.
/// The witness labels `S_G × S_H` with 2. `None` when the hypotheses fail or
/// the product is too large to represent.
pub fn certify_regular_eod_product(g: &Graph, h: &Graph) -> Option<SolveResult> {
    let cg = certify_regular_eod(g)?;
    let ch = certify_regular_eod(h)?;
    let sg = VertexSet::new(g, cg.labeling()?.v2(), SetRole::EfficientOpenDominating).ok()?;
    let sh = VertexSet::new(h, ch.labeling()?.v2(), SetRole::EfficientOpenDominating).ok()?;
    let pg = direct_product(g, h).ok()?;
    let s = product_eod_set(g, h, &sg, &sh).ok()?;
    Some(SolveResult {
        invariant: Invariant::GammaTr,
        value: 2 * s.len() as u32,
        witness: Witness::Labeling(LabelFunction::from_masks(
            pg.graph().order(),
            0,
            s.members(),
        )),
        method: Method::Certificate,
        max_v2: None,
        tie_break_note: None,
    })
}
