//! Immutable simple graphs with bitmask adjacency.
//!
//! Vertices are the integers `0..n`. Row `v` of the adjacency is a `u64`
//! whose bit `u` is set when `uv` is an edge, so graphs have at most
//! [`MAX_ORDER`] vertices. Isolated vertices are allowed here; operations
//! whose hypotheses exclude them call [`Graph::require_no_isolated`].

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Result, TrdError};

pub type Mask = u64;

/// Largest supported order (one machine word per adjacency row).
pub const MAX_ORDER: usize = Mask::BITS as usize;

/// Iterates the set bits of a mask in increasing order.
#[derive(Clone, Copy, Debug)]
pub struct Bits(Mask);

impl Iterator for Bits {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for Bits {}

#[inline]
pub fn bits(mask: Mask) -> Bits {
    Bits(mask)
}

#[inline]
pub fn bit(v: usize) -> Mask {
    1 << v
}

/// Mask with the low `n` bits set.
#[inline]
pub fn full_mask(n: usize) -> Mask {
    if n >= MAX_ORDER {
        Mask::MAX
    } else {
        (1 << n) - 1
    }
}

pub fn mask_from_vertices(vertices: &[usize]) -> Mask {
    vertices.iter().fold(0, |m, &v| m | bit(v))
}

#[derive(Clone)]
pub struct Graph {
    n: usize,
    adj: Vec<Mask>,
    name: Option<String>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.adj == other.adj
    }
}

impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("name", &self.name)
            .field("n", &self.n)
            .field("edges", &self.edges())
            .finish()
    }
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges are collapsed.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n > MAX_ORDER {
            return Err(TrdError::Size {
                what: "graph construction",
                order: n,
                limit: MAX_ORDER,
            });
        }
        let mut adj = vec![0; n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(TrdError::Input(format!(
                    "edge ({u},{v}) has an endpoint outside 0..{n}"
                )));
            }
            if u == v {
                return Err(TrdError::Input(format!("self-loop at vertex {u}")));
            }
            adj[u] |= bit(v);
            adj[v] |= bit(u);
        }
        Ok(Self { n, adj, name: None })
    }

    /// Builds a graph from adjacency rows, checking symmetry and loops.
    pub fn from_adjacency(adj: Vec<Mask>) -> Result<Self> {
        let n = adj.len();
        if n > MAX_ORDER {
            return Err(TrdError::Size {
                what: "graph construction",
                order: n,
                limit: MAX_ORDER,
            });
        }
        let full = full_mask(n);
        for (v, &row) in adj.iter().enumerate() {
            if row & !full != 0 {
                return Err(TrdError::Input(format!(
                    "row {v} references a vertex >= {n}"
                )));
            }
            if row & bit(v) != 0 {
                return Err(TrdError::Input(format!("self-loop at vertex {v}")));
            }
            for u in bits(row) {
                if adj[u] & bit(v) == 0 {
                    return Err(TrdError::Input(format!(
                        "asymmetric adjacency between {v} and {u}"
                    )));
                }
            }
        }
        Ok(Self { n, adj, name: None })
    }

    pub fn empty(n: usize) -> Result<Self> {
        Self::from_adjacency(vec![0; n])
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    /// Display label: the name if set, otherwise the graph6 encoding.
    pub fn label(&self) -> String {
        self.name
            .clone()
            .unwrap_or_else(|| crate::graph6::emit_graph6(self))
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn vertex_mask(&self) -> Mask {
        full_mask(self.n)
    }

    #[inline]
    pub fn adj(&self, v: usize) -> Mask {
        self.adj[v]
    }

    #[inline]
    pub fn closed_adj(&self, v: usize) -> Mask {
        self.adj[v] | bit(v)
    }

    pub fn adjacency(&self) -> &[Mask] {
        &self.adj
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] & bit(v) != 0
    }

    pub fn neighbors(&self, v: usize) -> Bits {
        bits(self.adj[v])
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        self.adj
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|u| bits(self.adj[u] & !full_mask(u + 1)).map(move |v| (u, v)))
            .collect()
    }

    pub fn has_isolated_vertex(&self) -> bool {
        self.adj.contains(&0)
    }

    /// Fails with a hypothesis error when some vertex has degree 0.
    pub fn require_no_isolated(&self) -> Result<()> {
        if self.n == 0 {
            return Err(TrdError::Hypothesis("graph has no vertices".into()));
        }
        match self.adj.iter().position(|&r| r == 0) {
            Some(v) => Err(TrdError::Hypothesis(format!(
                "vertex {v} of {} is isolated",
                self.label()
            ))),
            None => Ok(()),
        }
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen: Mask = 1;
        let mut frontier: Mask = 1;
        while frontier != 0 {
            let next = bits(frontier).fold(0, |m, v| m | self.adj[v]) & !seen;
            seen |= next;
            frontier = next;
        }
        seen == self.vertex_mask()
    }

    /// Vertex masks of the connected components, ordered by least vertex.
    pub fn components(&self) -> Vec<Mask> {
        let mut out = Vec::new();
        let mut rest = self.vertex_mask();
        while rest != 0 {
            let mut comp = rest & rest.wrapping_neg();
            let mut frontier = comp;
            while frontier != 0 {
                let next = bits(frontier).fold(0, |m, v| m | self.adj[v]) & !comp;
                comp |= next;
                frontier = next;
            }
            out.push(comp);
            rest &= !comp;
        }
        out
    }

    /// Subgraph induced by `mask`, relabelled in increasing vertex order.
    /// Also returns the original id of each new vertex.
    pub fn induced(&self, mask: Mask) -> (Graph, Vec<usize>) {
        let ids: Vec<usize> = bits(mask).collect();
        let mut pos = [usize::MAX; MAX_ORDER];
        for (i, &v) in ids.iter().enumerate() {
            pos[v] = i;
        }
        let adj = ids
            .iter()
            .map(|&v| bits(self.adj[v] & mask).fold(0, |m, u| m | bit(pos[u])))
            .collect();
        (
            Graph {
                n: ids.len(),
                adj,
                name: None,
            },
            ids,
        )
    }

    /// Proper 2-colouring, if one exists: bit `v` set means colour 1.
    pub fn bipartition(&self) -> Option<Mask> {
        let mut seen: Mask = 0;
        let mut side: Mask = 0;
        for root in 0..self.n {
            if seen & bit(root) != 0 {
                continue;
            }
            seen |= bit(root);
            let mut stack = vec![root];
            while let Some(v) = stack.pop() {
                let v_side = side & bit(v) != 0;
                for u in self.neighbors(v) {
                    if seen & bit(u) == 0 {
                        seen |= bit(u);
                        if !v_side {
                            side |= bit(u);
                        }
                        stack.push(u);
                    } else if (side & bit(u) != 0) == v_side {
                        return None;
                    }
                }
            }
        }
        Some(side)
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    pub fn is_triangle_free(&self) -> bool {
        self.edges()
            .iter()
            .all(|&(u, v)| self.adj[u] & self.adj[v] == 0)
    }

    /// All triangles `(x, y, z)` with `x < y < z`.
    pub fn triangles(&self) -> Vec<[usize; 3]> {
        let mut out = Vec::new();
        for (x, y) in self.edges() {
            for z in bits(self.adj[x] & self.adj[y] & !full_mask(y + 1)) {
                out.push([x, y, z]);
            }
        }
        out
    }

    pub fn is_regular(&self) -> bool {
        self.n == 0 || self.min_degree() == self.max_degree()
    }

    /// True when the graph is `K_2`.
    pub fn is_k2(&self) -> bool {
        self.n == 2 && self.has_edge(0, 1)
    }

    /// Relabels vertices: vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        let mut adj = vec![0; self.n];
        for v in 0..self.n {
            adj[perm[v]] = bits(self.adj[v]).fold(0, |m, u| m | bit(perm[u]));
        }
        Self {
            n: self.n,
            adj,
            name: self.name.clone(),
        }
    }

    pub fn to_edge_list_json(&self) -> EdgeListJson {
        EdgeListJson {
            n: self.n,
            edges: self.edges().into_iter().map(|(u, v)| [u, v]).collect(),
            name: self.name.clone(),
        }
    }
}

/// `{"n": int, "edges": [[u,v],...], "name": str}`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeListJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
}

impl TryFrom<EdgeListJson> for Graph {
    type Error = TrdError;

    fn try_from(value: EdgeListJson) -> Result<Self> {
        let edges: Vec<(usize, usize)> = value.edges.iter().map(|e| (e[0], e[1])).collect();
        let g = Graph::from_edge_list(value.n, &edges)?;
        Ok(match value.name {
            Some(name) => g.with_name(name),
            None => g,
        })
    }
}
