//! Total domination, packings and efficient open domination by subset search.

use crate::error::Result;
use crate::graph::{bit, bits, Graph, Mask};
use crate::labeling::{SetRole, VertexSet};

use super::{Invariant, Method, SolveResult, Witness};

/// `γ_t(G)`: grows the cardinality `k` from a counting lower bound; for each
/// `k`, branches on the neighbours of the first vertex with no neighbour in
/// the partial set.
pub fn gamma_t_exact(g: &Graph) -> Result<SolveResult> {
    g.require_no_isolated()?;
    let n = g.order();
    let delta = g.max_degree();
    let mut k = n.div_ceil(delta);
    let set = loop {
        if let Some(s) = total_dom_search(g, 0, k, delta) {
            break s;
        }
        k += 1;
    };
    Ok(SolveResult {
        invariant: Invariant::GammaT,
        value: set.count_ones(),
        witness: Witness::Set(VertexSet::new(g, set, SetRole::TotalDominating)?),
        method: Method::BranchAndBound,
        max_v2: None,
        tie_break_note: None,
    })
}

fn total_dom_search(g: &Graph, chosen: Mask, budget: usize, delta: usize) -> Option<Mask> {
    let dominated = bits(chosen).fold(0, |m, w| m | g.adj(w));
    let open = g.vertex_mask() & !dominated;
    if open == 0 {
        return Some(chosen);
    }
    if budget == 0 || open.count_ones() as usize > budget * delta {
        return None;
    }
    let v = open.trailing_zeros() as usize;
    for w in bits(g.adj(v)) {
        if let Some(s) = total_dom_search(g, chosen | bit(w), budget - 1, delta) {
            return Some(s);
        }
    }
    None
}

/// Maximum independent set of the graph given by `conflict` rows,
/// restricted to `candidates`.
pub fn max_independent_set(conflict: &[Mask], candidates: Mask) -> Mask {
    fn go(conflict: &[Mask], cand: Mask, cur: Mask, best: &mut Mask) {
        if cand == 0 {
            if cur.count_ones() > best.count_ones() {
                *best = cur;
            }
            return;
        }
        if cur.count_ones() + cand.count_ones() <= best.count_ones() {
            return;
        }
        let v = cand.trailing_zeros() as usize;
        go(conflict, cand & !bit(v) & !conflict[v], cur | bit(v), best);
        go(conflict, cand & !bit(v), cur, best);
    }
    let mut best = 0;
    go(conflict, candidates, 0, &mut best);
    best
}

/// Vertices `u != v` conflict when their closed neighbourhoods meet.
fn packing_conflicts(g: &Graph) -> Vec<Mask> {
    (0..g.order())
        .map(|u| {
            (0..g.order())
                .filter(|&v| v != u && g.closed_adj(u) & g.closed_adj(v) != 0)
                .fold(0, |m, v| m | bit(v))
        })
        .collect()
}

/// Vertices `u != v` conflict when they have a common neighbour.
fn open_packing_conflicts(g: &Graph) -> Vec<Mask> {
    (0..g.order())
        .map(|u| {
            (0..g.order())
                .filter(|&v| v != u && g.adj(u) & g.adj(v) != 0)
                .fold(0, |m, v| m | bit(v))
        })
        .collect()
}

/// Packing number `ρ(G)`.
pub fn rho_exact(g: &Graph) -> Result<SolveResult> {
    let set = max_independent_set(&packing_conflicts(g), g.vertex_mask());
    Ok(SolveResult {
        invariant: Invariant::Rho,
        value: set.count_ones(),
        witness: Witness::Set(VertexSet::new(g, set, SetRole::Packing)?),
        method: Method::BranchAndBound,
        max_v2: None,
        tie_break_note: None,
    })
}

/// Open packing number `ρ_o(G)`.
pub fn rho_o_exact(g: &Graph) -> Result<SolveResult> {
    let set = max_independent_set(&open_packing_conflicts(g), g.vertex_mask());
    Ok(SolveResult {
        invariant: Invariant::RhoO,
        value: set.count_ones(),
        witness: Witness::Set(VertexSet::new(g, set, SetRole::OpenPacking)?),
        method: Method::BranchAndBound,
        max_v2: None,
        tie_break_note: None,
    })
}

/// Every open packing of maximum size, in increasing mask order.
pub fn all_maximum_open_packings(g: &Graph) -> Vec<Mask> {
    let conflict = open_packing_conflicts(g);
    let target = max_independent_set(&conflict, g.vertex_mask()).count_ones();
    let mut out = Vec::new();
    fn go(conflict: &[Mask], cand: Mask, cur: Mask, target: u32, out: &mut Vec<Mask>) {
        if cur.count_ones() == target {
            out.push(cur);
            return;
        }
        if cur.count_ones() + cand.count_ones() < target {
            return;
        }
        let v = cand.trailing_zeros() as usize;
        go(
            conflict,
            cand & !bit(v) & !conflict[v],
            cur | bit(v),
            target,
            out,
        );
        go(conflict, cand & !bit(v), cur, target, out);
    }
    go(&conflict, g.vertex_mask(), 0, target, &mut out);
    out.sort_unstable();
    out
}

/// An efficient open dominating set, if the graph has one.
///
/// Such a set `S` makes the open neighbourhoods `{N(s) : s ∈ S}` partition
/// `V`, so this is an exact-cover search: take the first uncovered vertex
/// and try each neighbour whose neighbourhood avoids everything covered.
pub fn eod_set(g: &Graph) -> Result<Option<VertexSet>> {
    g.require_no_isolated()?;
    fn go(g: &Graph, covered: Mask, chosen: Mask) -> Option<Mask> {
        let open = g.vertex_mask() & !covered;
        if open == 0 {
            return Some(chosen);
        }
        let v = open.trailing_zeros() as usize;
        for w in bits(g.adj(v)) {
            if chosen & bit(w) == 0 && g.adj(w) & covered == 0 {
                if let Some(s) = go(g, covered | g.adj(w), chosen | bit(w)) {
                    return Some(s);
                }
            }
        }
        None
    }
    go(g, 0, 0)
        .map(|s| VertexSet::new(g, s, SetRole::EfficientOpenDominating))
        .transpose()
}
