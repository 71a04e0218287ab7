//! Total Roman domination of graphs and their direct products.
//!
//! A total Roman dominating function (TRDF) labels vertices with `0`, `1`
//! or `2` so that every 0-vertex has a 2-neighbour and the positive vertices
//! induce a subgraph without isolated vertices. This crate computes the
//! minimum weight `γ_tR` exactly, builds certified labelings of `G × H`
//! from factor data, evaluates the known bounds on `γ_tR(G × H)`, and audits
//! all of them against exact values on enumerated small graphs.

pub mod bounds;
pub mod catalog;
pub mod classify;
pub mod construct;
pub mod error;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod harness;
pub mod labeling;
pub mod product;
pub mod solve;

pub use error::{Result, TrdError};
pub use families::FamilySpec;
pub use graph::{Graph, Mask, MAX_ORDER};
pub use graph6::{emit_graph6, parse_graph6};
pub use labeling::{LabelFunction, SetRole, VertexSet};
pub use product::{direct_product, ProductGraph};
