//! `{0,1,2}` vertex labelings and the vertex-set predicates built on
//! neighbourhood masks.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Result, TrdError};
use crate::graph::{bit, bits, Graph, Mask};
use crate::graph6::{emit_graph6, parse_graph6};

/// A labeling `f : V → {0,1,2}` stored per vertex. The classes
/// `V0, V1, V2` are computed on demand.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LabelFunction {
    labels: Vec<u8>,
}

impl fmt::Debug for LabelFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = self.labels.iter().map(|&l| char::from(b'0' + l)).collect();
        write!(f, "LabelFunction({s})")
    }
}

impl LabelFunction {
    pub fn new(labels: Vec<u8>) -> Result<Self> {
        if let Some(v) = labels.iter().position(|&l| l > 2) {
            return Err(TrdError::Input(format!(
                "label {} at vertex {v} is not in {{0,1,2}}",
                labels[v]
            )));
        }
        Ok(Self { labels })
    }

    /// Labeling with `V1 = ones`, `V2 = twos` on `n` vertices.
    pub fn from_masks(n: usize, ones: Mask, twos: Mask) -> Self {
        debug_assert_eq!(ones & twos, 0);
        let labels = (0..n)
            .map(|v| {
                if twos & bit(v) != 0 {
                    2
                } else if ones & bit(v) != 0 {
                    1
                } else {
                    0
                }
            })
            .collect();
        Self { labels }
    }

    pub fn constant(n: usize, label: u8) -> Self {
        assert!(label <= 2);
        Self {
            labels: vec![label; n],
        }
    }

    pub fn labels(&self) -> &[u8] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn get(&self, v: usize) -> u8 {
        self.labels[v]
    }

    fn class(&self, label: u8) -> Mask {
        self.labels
            .iter()
            .enumerate()
            .filter(|(_, &l)| l == label)
            .fold(0, |m, (v, _)| m | bit(v))
    }

    pub fn v0(&self) -> Mask {
        self.class(0)
    }

    pub fn v1(&self) -> Mask {
        self.class(1)
    }

    pub fn v2(&self) -> Mask {
        self.class(2)
    }

    pub fn positive(&self) -> Mask {
        self.v1() | self.v2()
    }

    pub fn weight(&self) -> u32 {
        self.labels.iter().map(|&l| l as u32).sum()
    }

    pub fn count_v1(&self) -> usize {
        self.labels.iter().filter(|&&l| l == 1).count()
    }

    pub fn count_v2(&self) -> usize {
        self.labels.iter().filter(|&&l| l == 2).count()
    }

    fn check_graph(&self, g: &Graph) -> Result<()> {
        if self.labels.len() != g.order() {
            return Err(TrdError::Input(format!(
                "labeling has {} entries for a graph of order {}",
                self.labels.len(),
                g.order()
            )));
        }
        g.require_no_isolated()
    }

    pub fn to_json(&self, g: &Graph) -> LabelingJson {
        LabelingJson {
            graph: emit_graph6(g),
            labels: self.labels.clone(),
        }
    }
}

/// Every 0-vertex has a neighbour in `twos`.
#[inline]
pub(crate) fn roman_ok(g: &Graph, ones: Mask, twos: Mask) -> bool {
    let zeros = g.vertex_mask() & !(ones | twos);
    bits(zeros).all(|v| g.adj(v) & twos != 0)
}

/// Roman condition plus: every positive vertex has a positive neighbour.
#[inline]
pub(crate) fn total_roman_ok(g: &Graph, ones: Mask, twos: Mask) -> bool {
    let pos = ones | twos;
    roman_ok(g, ones, twos) && bits(pos).all(|v| g.adj(v) & pos != 0)
}

pub fn is_roman_dominating(g: &Graph, f: &LabelFunction) -> Result<bool> {
    f.check_graph(g)?;
    Ok(roman_ok(g, f.v1(), f.v2()))
}

pub fn is_total_roman_dominating(g: &Graph, f: &LabelFunction) -> Result<bool> {
    f.check_graph(g)?;
    Ok(total_roman_ok(g, f.v1(), f.v2()))
}

/// Role attached to a vertex set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SetRole {
    Plain,
    Packing,
    OpenPacking,
    TotalDominating,
    EfficientOpenDominating,
}

impl SetRole {
    pub fn as_str(self) -> &'static str {
        match self {
            SetRole::Plain => "plain",
            SetRole::Packing => "packing",
            SetRole::OpenPacking => "open_packing",
            SetRole::TotalDominating => "total_dominating",
            SetRole::EfficientOpenDominating => "efficient_open_dominating",
        }
    }
}

/// Vertex subset tagged with the property it is known to satisfy.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct VertexSet {
    members: Mask,
    role: SetRole,
}

impl VertexSet {
    /// Tags `members` with `role`, checking the role's predicate.
    pub fn new(g: &Graph, members: Mask, role: SetRole) -> Result<Self> {
        if members & !g.vertex_mask() != 0 {
            return Err(TrdError::Input(
                "set contains vertices outside the graph".into(),
            ));
        }
        let ok = match role {
            SetRole::Plain => true,
            SetRole::Packing => is_packing(g, members),
            SetRole::OpenPacking => is_open_packing(g, members),
            SetRole::TotalDominating => is_total_dominating(g, members)?,
            SetRole::EfficientOpenDominating => is_efficient_open_dominating(g, members)?,
        };
        if !ok {
            return Err(TrdError::Precondition(format!(
                "set {:?} is not {}",
                bits(members).collect::<Vec<_>>(),
                role.as_str()
            )));
        }
        Ok(Self { members, role })
    }

    pub fn plain(members: Mask) -> Self {
        Self {
            members,
            role: SetRole::Plain,
        }
    }

    pub fn members(&self) -> Mask {
        self.members
    }

    pub fn vertices(&self) -> Vec<usize> {
        bits(self.members).collect()
    }

    pub fn len(&self) -> usize {
        self.members.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.members == 0
    }

    pub fn role(&self) -> SetRole {
        self.role
    }

    pub fn to_json(&self, g: &Graph) -> SetJson {
        SetJson {
            graph: emit_graph6(g),
            members: self.vertices(),
            role: self.role,
        }
    }
}

/// Pairwise disjoint closed neighbourhoods.
pub fn is_packing(g: &Graph, s: Mask) -> bool {
    let mut seen: Mask = 0;
    for v in bits(s) {
        let nb = g.closed_adj(v);
        if seen & nb != 0 {
            return false;
        }
        seen |= nb;
    }
    true
}

/// Pairwise disjoint open neighbourhoods.
pub fn is_open_packing(g: &Graph, s: Mask) -> bool {
    let mut seen: Mask = 0;
    for v in bits(s) {
        let nb = g.adj(v);
        if seen & nb != 0 {
            return false;
        }
        seen |= nb;
    }
    true
}

pub fn is_total_dominating(g: &Graph, s: Mask) -> Result<bool> {
    g.require_no_isolated()?;
    Ok((0..g.order()).all(|v| g.adj(v) & s != 0))
}

/// Total dominating and an open packing.
pub fn is_efficient_open_dominating(g: &Graph, s: Mask) -> Result<bool> {
    Ok(is_total_dominating(g, s)? && is_open_packing(g, s))
}

/// Independent form of the EOD test: every vertex has exactly one
/// neighbour in `s`.
pub fn has_unique_neighbor_in(g: &Graph, s: Mask) -> bool {
    (0..g.order()).all(|v| (g.adj(v) & s).count_ones() == 1)
}

/// `(V \ D, ∅, D)`: label 2 on a total dominating set, weight `2|D|`.
pub fn trdf_from_total_dominating_set(g: &Graph, d: Mask) -> Result<LabelFunction> {
    if !is_total_dominating(g, d)? {
        return Err(TrdError::Precondition(format!(
            "{:?} is not a total dominating set",
            bits(d).collect::<Vec<_>>()
        )));
    }
    Ok(LabelFunction::from_masks(g.order(), 0, d))
}

/// `{"graph": <graph6>, "labels": [0|1|2, ...]}`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabelingJson {
    pub graph: String,
    pub labels: Vec<u8>,
}

impl LabelingJson {
    pub fn decode(&self) -> Result<(Graph, LabelFunction)> {
        let g = parse_graph6(&self.graph)?;
        let f = LabelFunction::new(self.labels.clone())?;
        if f.len() != g.order() {
            return Err(TrdError::Input(
                "labels length differs from graph order".into(),
            ));
        }
        Ok((g, f))
    }
}

/// `{"graph": <graph6>, "members": [ids], "role": str}`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SetJson {
    pub graph: String,
    pub members: Vec<usize>,
    pub role: SetRole,
}
