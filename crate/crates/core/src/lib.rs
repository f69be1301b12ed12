//! Spanning trees without degree-two vertices, generalized Halin graphs, and
//! the constructions and searches around them.

pub mod certify;
pub mod constructive;
pub mod extremal;
pub mod gadgets;
pub mod hamiltonicity;
pub mod io;
pub mod reduction;
pub mod search;
mod error;
pub(crate) mod flow;
pub mod graph;
pub mod scalar;

pub use error::{Error, Result};
pub use graph::{Graph, Vertex, VertexSetPair};

/// Dense-HIST parameters with floating-point thresholds.
pub type DenseHistParamsF64 = constructive::DenseHistParams<f64>;
/// Dense-HIST parameters with exact rational thresholds.
pub type DenseHistParamsExact = constructive::DenseHistParams<num_rational::Rational64>;
