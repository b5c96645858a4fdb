//! Exact workbench for degree-constrained graph factors.
//!
//! The crate decides existence of `[a,b]`-factors, `(g,f)`-factors and star
//! factors with self-verifying certificates, computes the isolated toughness
//! `I(G)` exactly, and checks whether factors survive the deletion of
//! vertices, edges or matchings. Every decision is made with integer or exact
//! rational arithmetic.

pub mod avoidance;
mod error;
pub mod factor;
mod fraction;
pub mod graph;
mod limits;
pub mod subsets;
pub mod toughness;

pub use error::{Error, Result};
pub use fraction::{Fraction, ParseFractionError};
pub use graph::{Edge, Graph, VertexSet};
pub use limits::Limits;
