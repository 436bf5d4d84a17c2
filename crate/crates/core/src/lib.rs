//! Minimum spectral radius of connected graphs with a given number of
//! vertices and edges.
//!
//! The crate builds the graph families that are known or conjectured to
//! minimize the spectral radius, computes spectra and quotient matrices,
//! applies the spectral-monotone graph transformations, and enumerates all
//! connected graphs of a given order and size to certify minimizers.

pub mod cli;
pub mod constructions;
pub mod error;
pub mod formulas;
pub mod graph;
pub mod poly;
pub mod search;
pub mod spectral;
pub mod transforms;

pub use error::{Error, Result};
pub use graph::{CanonicalForm, DegreeSequence, Graph};
