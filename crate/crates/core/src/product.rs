//! Direct (tensor) product of graphs.

use crate::error::{Result, TrdError};
use crate::graph::{bit, bits, Graph, Mask, MAX_ORDER};

/// `G × H` with row-major vertex numbering: `(g, h) ↦ g·|H| + h`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductGraph {
    base: Graph,
    gn: usize,
    hn: usize,
}

/// Builds `G × H`: `(g,h) ~ (g',h')` iff `gg' ∈ E(G)` and `hh' ∈ E(H)`.
pub fn direct_product(g: &Graph, h: &Graph) -> Result<ProductGraph> {
    let (gn, hn) = (g.order(), h.order());
    if gn == 0 || hn == 0 {
        return Err(TrdError::Input("direct product of an empty graph".into()));
    }
    if gn * hn > MAX_ORDER {
        return Err(TrdError::Size {
            what: "direct product",
            order: gn * hn,
            limit: MAX_ORDER,
        });
    }
    // Neighbour mask of (a,b) is N_G(a) × N_H(b).
    let mut adj = vec![0 as Mask; gn * hn];
    for a in 0..gn {
        for b in 0..hn {
            adj[a * hn + b] = g.neighbors(a).fold(0, |m, a2| m | (h.adj(b) << (a2 * hn)));
        }
    }
    let base = Graph::from_adjacency(adj)?.with_name(format!("{}x{}", g.label(), h.label()));
    Ok(ProductGraph { base, gn, hn })
}

impl ProductGraph {
    pub fn graph(&self) -> &Graph {
        &self.base
    }

    pub fn into_graph(self) -> Graph {
        self.base
    }

    pub fn g_order(&self) -> usize {
        self.gn
    }

    pub fn h_order(&self) -> usize {
        self.hn
    }

    #[inline]
    pub fn id(&self, g: usize, h: usize) -> usize {
        debug_assert!(g < self.gn && h < self.hn);
        g * self.hn + h
    }

    #[inline]
    pub fn coords(&self, id: usize) -> (usize, usize) {
        (id / self.hn, id % self.hn)
    }

    /// The G-layer `G^h = {(g, h) : g ∈ V(G)}`.
    pub fn g_layer(&self, h: usize) -> Mask {
        (0..self.gn).fold(0, |m, g| m | bit(self.id(g, h)))
    }

    /// The H-layer `H^g = {(g, h) : h ∈ V(H)}`.
    pub fn h_layer(&self, g: usize) -> Mask {
        (0..self.hn).fold(0, |m, h| m | bit(self.id(g, h)))
    }

    /// Mask of `A × B` for factor masks `A ⊆ V(G)`, `B ⊆ V(H)`.
    pub fn rectangle(&self, a: Mask, b: Mask) -> Mask {
        bits(a).fold(0, |m, g| m | (b << (g * self.hn)))
    }
}
