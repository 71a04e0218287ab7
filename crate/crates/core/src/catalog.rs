//! Isomorphism classes of small graphs without isolated vertices.

use std::collections::HashSet;

use crate::error::{Result, TrdError};
use crate::graph::Graph;

pub const CATALOG_MAX_ORDER: usize = 5;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provenance {
    Enumerated,
    Loaded,
}

#[derive(Clone, Debug)]
pub struct Catalog {
    pub max_order: usize,
    pub graphs: Vec<Graph>,
    pub provenance: Provenance,
}

impl Catalog {
    /// Wraps externally supplied graphs, rejecting isolated vertices.
    pub fn loaded(graphs: Vec<Graph>) -> Result<Self> {
        for g in &graphs {
            g.require_no_isolated()?;
        }
        Ok(Self {
            max_order: graphs.iter().map(Graph::order).max().unwrap_or(0),
            graphs,
            provenance: Provenance::Loaded,
        })
    }
}

/// Edge slots of `K_n` in a fixed order.
fn slots(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    fn go(k: usize, p: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == p.len() {
            out.push(p.clone());
            return;
        }
        for i in k..p.len() {
            p.swap(k, i);
            go(k + 1, p, out);
            p.swap(k, i);
        }
    }
    go(0, &mut p, &mut out);
    out
}

/// One graph per isomorphism class with `2 ≤ n ≤ max_n` and minimum degree
/// at least one, ordered by order and then by edge-mask.
pub fn enumerate_catalog(max_n: usize) -> Result<Catalog> {
    if max_n > CATALOG_MAX_ORDER {
        return Err(TrdError::Size {
            what: "catalog enumeration",
            order: max_n,
            limit: CATALOG_MAX_ORDER,
        });
    }
    let mut graphs = Vec::new();
    for n in 2..=max_n {
        let slots = slots(n);
        let index = |u: usize, v: usize| {
            let (a, b) = if u < v { (u, v) } else { (v, u) };
            slots.iter().position(|&s| s == (a, b)).unwrap()
        };
        let perms = permutations(n);
        let mut seen = HashSet::new();
        for code in 0u32..1 << slots.len() {
            let mut deg = vec![0; n];
            for (i, &(u, v)) in slots.iter().enumerate() {
                if code >> i & 1 == 1 {
                    deg[u] += 1;
                    deg[v] += 1;
                }
            }
            if deg.contains(&0) {
                continue;
            }
            let canon = perms
                .iter()
                .map(|p| {
                    slots
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| code >> i & 1 == 1)
                        .fold(0u32, |m, (_, &(u, v))| m | 1 << index(p[u], p[v]))
                })
                .min()
                .unwrap();
            if seen.insert(canon) {
                let edges: Vec<_> = slots
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| code >> i & 1 == 1)
                    .map(|(_, &e)| e)
                    .collect();
                graphs.push(Graph::from_edge_list(n, &edges)?);
            }
        }
    }
    Ok(Catalog {
        max_order: max_n,
        graphs,
        provenance: Provenance::Enumerated,
    })
}
