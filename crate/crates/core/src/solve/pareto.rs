use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Result, TrdError};
use crate::graph::{Graph, Mask};
use crate::labeling::LabelFunction;

use super::brute::{check_brute_size, for_each_trdf, BRUTE_FORCE_LIMIT};
use super::gamma_t_exact;

/// Largest `|V2|` over TRDFs of one weight, with the lexicographically
/// smallest labeling attaining it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ParetoPoint {
    pub weight: u32,
    pub max_v2: u32,
    #[serde(skip)]
    pub witness: LabelFunction,
}

/// For every weight `w` from `γ_tR(G)` up to `weight_cap` (default
/// `2γ_t(G)`), the maximum `|V2|` over TRDFs of weight exactly `w`. Weights
/// no TRDF attains are absent.
pub fn trdf_pareto_frontier(g: &Graph, weight_cap: Option<u32>) -> Result<Vec<ParetoPoint>> {
    check_brute_size(g, BRUTE_FORCE_LIMIT)?;
    let cap = match weight_cap {
        Some(c) => c,
        None => 2 * gamma_t_exact(g)?.value,
    };
    let mut best: BTreeMap<u32, (u32, Mask, Mask)> = BTreeMap::new();
    let mut min_weight = u32::MAX;
    for_each_trdf(g, |ones, twos| {
        let w = ones.count_ones() + 2 * twos.count_ones();
        min_weight = min_weight.min(w);
        if w > cap {
            return;
        }
        let k = twos.count_ones();
        let e = best.entry(w).or_insert((k, ones, twos));
        if k > e.0 {
            *e = (k, ones, twos);
        }
    });
    if cap < min_weight {
        return Err(TrdError::Precondition(format!(
            "weight cap {cap} is below gamma_tR = {min_weight}"
        )));
    }
    Ok(best
        .into_iter()
        .map(|(weight, (max_v2, ones, twos))| ParetoPoint {
            weight,
            max_v2,
            witness: LabelFunction::from_masks(g.order(), ones, twos),
        })
        .collect())
}
