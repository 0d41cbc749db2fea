//! Forbidden induced pairs for perfectness and ω-colourability.

pub mod expr;
pub mod graph;
pub mod harness;
pub mod induced;
pub mod pairs;
pub mod perfect;
pub mod ramsey;
pub mod structure;

pub use graph::{Graph, GraphError};
