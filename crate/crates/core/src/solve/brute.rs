use crate::error::{Result, TrdError};
use crate::graph::{bit, Graph, Mask};
use crate::labeling::{total_roman_ok, LabelFunction};

use super::{Invariant, Method, SolveResult, Witness, LEX_NOTE};

/// Default order limit for the 3^n enumeration.
pub const BRUTE_FORCE_LIMIT: usize = 12;

/// Visits every labeling of `g` in lexicographic order (vertex 0 most
/// significant) and calls `visit(ones, twos)` for each valid TRDF.
pub(crate) fn for_each_trdf(g: &Graph, mut visit: impl FnMut(Mask, Mask)) {
    let n = g.order();
    let mut labels = vec![0u8; n];
    loop {
        let (mut ones, mut twos) = (0, 0);
        for (v, &l) in labels.iter().enumerate() {
            match l {
                1 => ones |= bit(v),
                2 => twos |= bit(v),
                _ => {}
            }
        }
        if total_roman_ok(g, ones, twos) {
            visit(ones, twos);
        }
        // odometer, last vertex fastest
        let mut i = n;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if labels[i] < 2 {
                labels[i] += 1;
                break;
            }
            labels[i] = 0;
        }
    }
}

pub(crate) fn check_brute_size(g: &Graph, limit: usize) -> Result<()> {
    g.require_no_isolated()?;
    if g.order() > limit {
        return Err(TrdError::Size {
            what: "exhaustive enumeration",
            order: g.order(),
            limit,
        });
    }
    Ok(())
}

/// Minimum TRDF weight by scanning all `3^n` labelings.
pub fn gamma_tr_bruteforce(g: &Graph) -> Result<SolveResult> {
    gamma_tr_bruteforce_with_limit(g, BRUTE_FORCE_LIMIT)
}

pub fn gamma_tr_bruteforce_with_limit(g: &Graph, limit: usize) -> Result<SolveResult> {
    check_brute_size(g, limit)?;
    let mut best: Option<(u32, Mask, Mask)> = None;
    for_each_trdf(g, |ones, twos| {
        let w = ones.count_ones() + 2 * twos.count_ones();
        if best.is_none_or(|(bw, _, _)| w < bw) {
            best = Some((w, ones, twos));
        }
    });
    let (value, ones, twos) = best.expect("the all-ones labeling is a TRDF");
    Ok(SolveResult {
        invariant: Invariant::GammaTr,
        value,
        witness: Witness::Labeling(LabelFunction::from_masks(g.order(), ones, twos)),
        method: Method::BruteForce,
        max_v2: None,
        tie_break_note: Some(LEX_NOTE.into()),
    })
}

/// Brute-force counterpart of the max-|V2| variant, used as a test oracle.
pub fn gamma_tr_max_v2_bruteforce(g: &Graph, limit: usize) -> Result<SolveResult> {
    check_brute_size(g, limit)?;
    let mut best: Option<(u32, u32, Mask, Mask)> = None;
    for_each_trdf(g, |ones, twos| {
        let w = ones.count_ones() + 2 * twos.count_ones();
        let k = twos.count_ones();
        if best.is_none_or(|(bw, bk, _, _)| w < bw || (w == bw && k > bk)) {
            best = Some((w, k, ones, twos));
        }
    });
    let (value, k, ones, twos) = best.expect("the all-ones labeling is a TRDF");
    Ok(SolveResult {
        invariant: Invariant::GammaTr,
        value,
        witness: Witness::Labeling(LabelFunction::from_masks(g.order(), ones, twos)),
        method: Method::BruteForce,
        max_v2: Some(k as usize),
        tie_break_note: Some(super::LEX_MAX_V2_NOTE.into()),
    })
}
