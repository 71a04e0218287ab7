//! Branch-and-bound over vertex labelings.
//!
//! The search minimises a per-label linear cost `cost[f(v)]` summed over
//! all vertices. With `cost = [0, 1, 2]` that is the TRDF weight; with
//! `cost = [0, n+1, 2n+1]` it orders labelings by weight first and by
//! `|V2|` (descending) second, which gives the max-|V2| variant.
//!
//! Pass one proves the optimum. It branches on a vertex that can still help
//! the neediest vertex (the one with the fewest remaining helpers), trying
//! the label that helps most first. Pass two fixes labels in index order,
//! taking the smallest label for which an optimal completion still exists,
//! which yields the lexicographically smallest optimal labeling.
//!
//! Lower bound: every vertex that still needs help is charged its cheapest
//! share of a future label that could provide it. Needy vertices are
//! assigned 0-vertices without a 2-neighbour, unassigned vertices without a
//! 2-neighbour (they must become positive or get one), and positive
//! vertices without a positive neighbour. A label `l` on an unassigned `w`
//! costs `cost[l]` and helps at most `s_l(w)` needy vertices, so each needy
//! vertex costs at least `min cost[l] / s_l(w)` over the labels that help it.

use std::time::Instant;

use crate::error::{Result, TrdError};
use crate::graph::{bit, bits, Graph, Mask};
use crate::labeling::{total_roman_ok, LabelFunction};

use super::{Budget, Invariant, Method, SolveResult, Witness, LEX_MAX_V2_NOTE, LEX_NOTE};

const WEIGHT: [u32; 3] = [0, 1, 2];

#[derive(Clone, Copy, Debug)]
struct State {
    ones: Mask,
    twos: Mask,
    zeros: Mask,
    /// vertices with a neighbour labelled 2
    dom2: Mask,
    /// vertices with a positive neighbour
    domp: Mask,
    cost: u32,
}

impl State {
    const EMPTY: State = State {
        ones: 0,
        twos: 0,
        zeros: 0,
        dom2: 0,
        domp: 0,
        cost: 0,
    };

    #[inline]
    fn assigned(&self) -> Mask {
        self.ones | self.twos | self.zeros
    }

    /// Assigns `label` to `v`, or `None` if that breaks a requirement that
    /// can no longer be repaired.
    fn assign(&self, g: &Graph, v: usize, label: u8, cost: [u32; 3]) -> Option<State> {
        let adj_v = g.adj(v);
        let mut ns = *self;
        ns.cost += cost[label as usize];
        match label {
            0 => ns.zeros |= bit(v),
            1 => {
                ns.ones |= bit(v);
                ns.domp |= adj_v;
            }
            _ => {
                ns.twos |= bit(v);
                ns.domp |= adj_v;
                ns.dom2 |= adj_v;
            }
        }
        let unassigned = g.vertex_mask() & !ns.assigned();
        locally_feasible(g, &ns, (adj_v | bit(v)) & ns.assigned(), unassigned).then_some(ns)
    }
}

struct Search<'a> {
    g: &'a Graph,
    cost: [u32; 3],
    /// only solutions strictly cheaper than this are accepted
    best_cost: u32,
    best: Option<(Mask, Mask)>,
    stop_at_first: bool,
    done: bool,
    deadline: Option<Instant>,
    timed_out: bool,
    nodes: u64,
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph, cost: [u32; 3]) -> Self {
        Self {
            g,
            cost,
            best_cost: u32::MAX,
            best: None,
            stop_at_first: false,
            done: false,
            deadline: None,
            timed_out: false,
            nodes: 0,
        }
    }

    fn run(&mut self, start: State) {
        self.done = false;
        self.dfs(start);
    }

    fn dfs(&mut self, s: State) {
        self.nodes += 1;
        if self.nodes & 0x3ff == 0 {
            if let Some(deadline) = self.deadline {
                if Instant::now() >= deadline {
                    self.timed_out = true;
                    self.done = true;
                }
            }
        }
        if self.done {
            return;
        }
        let g = self.g;
        let unassigned = g.vertex_mask() & !s.assigned();
        let Some(lb) = lower_bound(g, &s, unassigned, self.cost) else {
            return;
        };
        if lb >= self.best_cost {
            return;
        }
        let Some((v, labels)) = choose(g, &s, unassigned) else {
            // nothing is needy: the rest can be 0
            debug_assert!(total_roman_ok(g, s.ones, s.twos));
            self.best_cost = s.cost;
            self.best = Some((s.ones, s.twos));
            if self.stop_at_first {
                self.done = true;
            }
            return;
        };
        for label in labels {
            if s.cost + self.cost[label as usize] >= self.best_cost {
                continue;
            }
            if let Some(ns) = s.assign(g, v, label, self.cost) {
                self.dfs(ns);
            }
            if self.done {
                return;
            }
        }
    }
}

/// The branching vertex and its label order, or `None` when no vertex is
/// needy. The needy vertex with the fewest unassigned helpers is served by
/// the helper that would cover the most needy vertices.
fn choose(g: &Graph, s: &State, unassigned: Mask) -> Option<(usize, [u8; 3])> {
    let pos = s.ones | s.twos;
    let needy_zero = s.zeros & !s.dom2;
    let needy_free = unassigned & !s.dom2;
    let lonely = pos & !s.domp;
    let needy = needy_zero | needy_free | lonely;
    if needy == 0 {
        return None;
    }
    let mut target = None;
    let mut fewest = u32::MAX;
    for e in bits(needy) {
        let mut helpers = g.adj(e) & unassigned;
        if needy_free & bit(e) != 0 {
            helpers |= bit(e);
        }
        let k = helpers.count_ones();
        if k < fewest {
            fewest = k;
            target = Some((e, helpers));
        }
    }
    let (e, helpers) = target?;
    let v = bits(helpers)
        .max_by_key(|&w| ((g.adj(w) & needy).count_ones(), std::cmp::Reverse(w)))
        .expect("lower bound rejects needy vertices without helpers");
    let labels = if lonely & bit(e) != 0 && needy_free & bit(v) == 0 {
        [1, 2, 0]
    } else {
        [2, 0, 1]
    };
    Some((v, labels))
}

/// Every assigned vertex in `check` can still meet its requirement.
#[inline]
fn locally_feasible(g: &Graph, s: &State, check: Mask, unassigned: Mask) -> bool {
    let pos = s.ones | s.twos;
    bits(check).all(|x| {
        let nb = g.adj(x);
        if s.zeros & bit(x) != 0 {
            nb & (s.twos | unassigned) != 0
        } else {
            nb & (pos | unassigned) != 0
        }
    })
}

/// `s.cost` plus an admissible estimate of the remaining cost, or `None`
/// when some requirement can no longer be met.
fn lower_bound(g: &Graph, s: &State, unassigned: Mask, cost: [u32; 3]) -> Option<u32> {
    let pos = s.ones | s.twos;
    let needy_zero = s.zeros & !s.dom2;
    let needy_free = unassigned & !s.dom2;
    let lonely = pos & !s.domp;
    let needy = needy_zero | needy_free | lonely;
    if needy == 0 {
        return Some(s.cost);
    }
    let (c1, c2) = (cost[1] as f64, cost[2] as f64);

    // best share offered by a 1 or a 2 on each unassigned vertex
    let mut share1 = [f64::INFINITY; 64];
    let mut share2 = [f64::INFINITY; 64];
    for w in bits(unassigned) {
        let own = (needy_free >> w) as u32 & 1;
        let s1 = own + (g.adj(w) & lonely).count_ones();
        let s2 = own + (g.adj(w) & needy).count_ones();
        if s1 > 0 {
            share1[w] = c1 / s1 as f64;
        }
        if s2 > 0 {
            share2[w] = c2 / s2 as f64;
        }
    }

    let mut total = 0.0;
    for e in bits(needy) {
        let helpers = g.adj(e) & unassigned;
        let mut best = f64::INFINITY;
        if needy_free & bit(e) != 0 {
            best = share1[e].min(share2[e]);
            for w in bits(helpers) {
                best = best.min(share2[w]);
            }
        } else if needy_zero & bit(e) != 0 {
            for w in bits(helpers) {
                best = best.min(share2[w]);
            }
        } else {
            for w in bits(helpers) {
                best = best.min(share1[w]).min(share2[w]);
            }
        }
        if !best.is_finite() {
            return None;
        }
        total += best;
    }
    Some(s.cost + (total - 1e-9).ceil().max(0.0) as u32)
}

fn timeout_error(g: &Graph, budget: Budget, upper: u32) -> TrdError {
    let lower = lower_bound(g, &State::EMPTY, g.vertex_mask(), WEIGHT).unwrap_or(0);
    TrdError::Timeout {
        budget: budget.0.unwrap_or_default(),
        lower,
        upper,
    }
}

fn weight_of(ones: Mask, twos: Mask) -> u32 {
    ones.count_ones() + 2 * twos.count_ones()
}

/// Lexicographically smallest labeling minimising `cost`.
///
/// Components are solved separately: the cost is additive and the label
/// positions of different components are disjoint, so the union of the
/// per-component lex-least optima is the lex-least optimum of the whole.
fn solve_min_cost(g: &Graph, cost: [u32; 3], budget: Budget) -> Result<(Mask, Mask)> {
    g.require_no_isolated()?;
    let deadline = budget.0.map(|d| Instant::now() + d);
    let comps = g.components();
    if comps.len() == 1 {
        return solve_connected(g, cost, budget, deadline);
    }
    let (mut ones, mut twos) = (0, 0);
    for (i, &comp) in comps.iter().enumerate() {
        let (sub, ids) = g.induced(comp);
        match solve_connected(&sub, cost, budget, deadline) {
            Ok((o, t)) => {
                ones |= ids
                    .iter()
                    .enumerate()
                    .filter(|(j, _)| o & bit(*j) != 0)
                    .fold(0, |m, (_, &v)| m | bit(v));
                twos |= ids
                    .iter()
                    .enumerate()
                    .filter(|(j, _)| t & bit(*j) != 0)
                    .fold(0, |m, (_, &v)| m | bit(v));
            }
            Err(TrdError::Timeout { .. }) => {
                // finished components plus all ones elsewhere
                let rest: Mask = comps[i..].iter().fold(0, |m, c| m | c);
                return Err(timeout_error(g, budget, weight_of(ones | rest, twos)));
            }
            Err(e) => return Err(e),
        }
    }
    Ok((ones, twos))
}

fn solve_connected(
    g: &Graph,
    cost: [u32; 3],
    budget: Budget,
    deadline: Option<Instant>,
) -> Result<(Mask, Mask)> {
    let n = g.order();
    let mut search = Search::new(g, cost);
    search.deadline = deadline;
    search.best = Some((g.vertex_mask(), 0));
    search.best_cost = n as u32 * cost[1];
    search.run(State::EMPTY);
    let (ones, twos) = search.best.expect("all-ones labeling seeds the search");
    if search.timed_out {
        return Err(timeout_error(g, budget, weight_of(ones, twos)));
    }
    let optimum = search.best_cost;

    // fix labels in index order, keeping an optimal completion reachable
    search.stop_at_first = true;
    let mut prefix = State::EMPTY;
    let mut known = (ones, twos);
    for v in 0..n {
        let current = if known.0 & bit(v) != 0 {
            1
        } else if known.1 & bit(v) != 0 {
            2
        } else {
            0
        };
        let mut fixed = None;
        for label in 0..3u8 {
            let Some(ns) = prefix.assign(g, v, label, cost) else {
                continue;
            };
            if label == current {
                fixed = Some(ns);
                break;
            }
            search.best_cost = optimum + 1;
            search.best = None;
            search.run(ns);
            if search.timed_out {
                return Err(timeout_error(g, budget, weight_of(ones, twos)));
            }
            if let Some(found) = search.best {
                known = found;
                fixed = Some(ns);
                break;
            }
        }
        prefix =
            fixed.ok_or_else(|| TrdError::Internal("tie-break pass lost the optimum".into()))?;
    }
    debug_assert_eq!(prefix.cost, optimum);
    Ok((prefix.ones, prefix.twos))
}

/// Exact `γ_tR(G)` by branch-and-bound. The witness is the lexicographically
/// smallest optimal label vector.
pub fn gamma_tr_exact(g: &Graph, budget: Budget) -> Result<SolveResult> {
    let (ones, twos) = solve_min_cost(g, WEIGHT, budget)?;
    Ok(SolveResult {
        invariant: Invariant::GammaTr,
        value: weight_of(ones, twos),
        witness: Witness::Labeling(LabelFunction::from_masks(g.order(), ones, twos)),
        method: Method::BranchAndBound,
        max_v2: None,
        tie_break_note: Some(LEX_NOTE.into()),
    })
}

/// A `γ_tR(G)`-function with the largest possible `|V2|`.
pub fn gamma_tr_max_v2(g: &Graph, budget: Budget) -> Result<SolveResult> {
    let n1 = g.order() as u32 + 1;
    let (ones, twos) = solve_min_cost(g, [0, n1, 2 * n1 - 1], budget)?;
    Ok(SolveResult {
        invariant: Invariant::GammaTr,
        value: weight_of(ones, twos),
        witness: Witness::Labeling(LabelFunction::from_masks(g.order(), ones, twos)),
        method: Method::BranchAndBound,
        max_v2: Some(twos.count_ones() as usize),
        tie_break_note: Some(LEX_MAX_V2_NOTE.into()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::FamilySpec::*;
    use crate::product::direct_product;
    use crate::solve::brute::gamma_tr_max_v2_bruteforce;
    use crate::solve::gamma_tr_bruteforce;
    use std::time::Duration;

    fn fam(f: crate::families::FamilySpec) -> Graph {
        f.generate().unwrap()
    }

    #[test]
    fn agrees_with_brute_force_on_families() {
        let graphs = [
            fam(Path(2)),
            fam(Path(3)),
            fam(Path(7)),
            fam(Cycle(4)),
            fam(Cycle(7)),
            fam(Complete(5)),
            fam(Wheel(6)),
            fam(Fan(7)),
            fam(CompleteBipartite(2, 4)),
            fam(CompleteMinusMatching(6)),
            fam(Prism(Box::new(fam(Cycle(3))))),
            direct_product(&fam(Path(3)), &fam(Path(4)))
                .unwrap()
                .into_graph(),
            direct_product(&fam(Complete(2)), &fam(Cycle(5)))
                .unwrap()
                .into_graph(),
        ];
        for g in &graphs {
            let bf = gamma_tr_bruteforce(g).unwrap();
            let bb = gamma_tr_exact(g, Budget::UNLIMITED).unwrap();
            assert_eq!(bb.value, bf.value, "{}", g.label());
            assert_eq!(bb.witness, bf.witness, "{}", g.label());
            let bf2 = gamma_tr_max_v2_bruteforce(g, 12).unwrap();
            let bb2 = gamma_tr_max_v2(g, Budget::UNLIMITED).unwrap();
            assert_eq!(bb2.value, bf2.value, "{}", g.label());
            assert_eq!(bb2.max_v2, bf2.max_v2, "{}", g.label());
            assert_eq!(bb2.witness, bf2.witness, "{}", g.label());
        }
    }

    #[test]
    fn max_v2_examples() {
        let k2 = fam(Complete(2));
        let r = gamma_tr_max_v2(&k2, Budget::UNLIMITED).unwrap();
        assert_eq!((r.value, r.max_v2), (2, Some(0)));
        let c4 = fam(Cycle(4));
        let r = gamma_tr_max_v2(&c4, Budget::UNLIMITED).unwrap();
        assert_eq!((r.value, r.max_v2), (4, Some(2)));
        let k3 = fam(Complete(3));
        let pg = direct_product(&k3, &k3).unwrap();
        let r = gamma_tr_max_v2(pg.graph(), Budget::UNLIMITED).unwrap();
        assert_eq!((r.value, r.max_v2), (6, Some(3)));
        assert_eq!(r.labeling().unwrap().count_v1(), 0);
    }

    #[test]
    fn product_values() {
        let c4 = fam(Cycle(4));
        let p4 = fam(Path(4));
        let k12 = fam(Star(2));
        for (g, h, want) in [(&c4, &c4, 8), (&p4, &p4, 8), (&k12, &k12, 7)] {
            let pg = direct_product(g, h).unwrap();
            assert_eq!(
                gamma_tr_exact(pg.graph(), Budget::UNLIMITED).unwrap().value,
                want
            );
        }
    }

    #[test]
    fn timeout_is_an_error() {
        let g = fam(Cycle(40));
        match gamma_tr_exact(&g, Budget(Some(Duration::from_millis(1)))) {
            Err(TrdError::Timeout { lower, upper, .. }) => assert!(lower <= upper),
            Ok(_) => {} // fast machines may finish
            Err(e) => panic!("unexpected {e}"),
        }
    }

    #[test]
    fn rejects_isolated_vertices() {
        let g = Graph::from_edge_list(3, &[(0, 1)]).unwrap();
        assert!(matches!(
            gamma_tr_exact(&g, Budget::UNLIMITED),
            Err(TrdError::Hypothesis(_))
        ));
    }
}
