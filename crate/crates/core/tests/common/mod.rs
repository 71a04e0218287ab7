//! Reference implementations used as test oracles. They work on plain
//! adjacency lists and share no code with the library's solvers.

#![allow(dead_code)]

use trd_core::Graph;

pub fn adjacency(g: &Graph) -> Vec<Vec<usize>> {
    (0..g.order()).map(|v| g.neighbors(v).collect()).collect()
}

pub fn is_trdf(adj: &[Vec<usize>], labels: &[u8]) -> bool {
    adj.iter().enumerate().all(|(v, nb)| {
        if labels[v] == 0 {
            nb.iter().any(|&u| labels[u] == 2)
        } else {
            nb.iter().any(|&u| labels[u] > 0)
        }
    })
}

fn components(adj: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; adj.len()];
    let mut out = Vec::new();
    for s in 0..adj.len() {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut comp = vec![s];
        let mut i = 0;
        while i < comp.len() {
            for &u in &adj[comp[i]] {
                if !seen[u] {
                    seen[u] = true;
                    comp.push(u);
                }
            }
            i += 1;
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// Minimum weight of a TRDF by enumerating all `3^k` labelings of each
/// component separately. Components must have at most 14 vertices.
pub fn gamma_tr(g: &Graph) -> u32 {
    let adj = adjacency(g);
    components(&adj)
        .iter()
        .map(|comp| {
            let k = comp.len();
            assert!(
                k <= 14,
                "component of order {k} is too large for the oracle"
            );
            let index = |v: usize| comp.binary_search(&v).unwrap();
            let local: Vec<Vec<usize>> = comp
                .iter()
                .map(|&v| adj[v].iter().map(|&u| index(u)).collect())
                .collect();
            let mut labels = vec![0u8; k];
            let mut best = u32::MAX;
            for code in 0..3u32.pow(k as u32) {
                let mut c = code;
                let mut w = 0;
                for l in labels.iter_mut() {
                    *l = (c % 3) as u8;
                    w += *l as u32;
                    c /= 3;
                }
                if w < best && is_trdf(&local, &labels) {
                    best = w;
                }
            }
            best
        })
        .sum()
}

fn subsets(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0u32..1 << n).map(move |m| (0..n).filter(|&v| m >> v & 1 == 1).collect())
}

/// Largest set whose closed neighbourhoods are pairwise disjoint.
pub fn rho(g: &Graph) -> usize {
    let adj = adjacency(g);
    let closed = |v: usize| {
        let mut c = adj[v].clone();
        c.push(v);
        c
    };
    subsets(g.order())
        .filter(|s| {
            s.iter().enumerate().all(|(i, &a)| {
                s[i + 1..]
                    .iter()
                    .all(|&b| closed(a).iter().all(|x| !closed(b).contains(x)))
            })
        })
        .map(|s| s.len())
        .max()
        .unwrap_or(0)
}

/// Some set in which every vertex has exactly one neighbour.
pub fn has_eod_set(g: &Graph) -> bool {
    let adj = adjacency(g);
    subsets(g.order()).any(|s| {
        adj.iter()
            .all(|nb| nb.iter().filter(|u| s.contains(u)).count() == 1)
    })
}

pub fn is_two_k2(g: &Graph) -> bool {
    g.order() == 4 && g.edge_count() == 2 && adjacency(g).iter().all(|nb| nb.len() == 1)
}

pub fn is_one_regular(g: &Graph) -> bool {
    adjacency(g).iter().all(|nb| nb.len() == 1)
}

pub fn is_bipartite(g: &Graph) -> bool {
    let adj = adjacency(g);
    let mut colour = vec![None; adj.len()];
    for s in 0..adj.len() {
        if colour[s].is_some() {
            continue;
        }
        colour[s] = Some(false);
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            let c = colour[v].unwrap();
            for &u in &adj[v] {
                match colour[u] {
                    None => {
                        colour[u] = Some(!c);
                        stack.push(u);
                    }
                    Some(d) if d == c => return false,
                    _ => {}
                }
            }
        }
    }
    true
}

pub fn is_triangle_free(g: &Graph) -> bool {
    let adj = adjacency(g);
    adj.iter().enumerate().all(|(a, nb)| {
        nb.iter()
            .all(|&b| adj[b].iter().all(|c| *c == a || !nb.contains(c)))
    })
}

/// graph6 text written straight from the format description.
pub fn graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut bitstream = Vec::new();
    for j in 1..n {
        for i in 0..j {
            bitstream.push(g.has_edge(i, j));
        }
    }
    for chunk in bitstream.chunks(6) {
        let mut x = 0u8;
        for k in 0..6 {
            x = x << 1 | chunk.get(k).copied().unwrap_or(false) as u8;
        }
        out.push(x + 63);
    }
    String::from_utf8(out).unwrap()
}
