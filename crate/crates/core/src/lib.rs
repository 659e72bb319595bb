//! Normalized-Laplacian spectra of simple graphs, chromatic-number bounds
//! derived from them, and a calculus of 1-sums for tracking the largest
//! eigenvalue and its multiplicity.

pub mod bounds;
pub mod coloring;
pub mod compose;
pub mod error;
pub mod exec;
pub mod families;
pub mod graph;
pub mod linalg;
pub mod random;
pub mod rational;
pub mod search;
pub mod spectral;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{Graph, PairKind, VertexSubset};
pub use rational::Rational;
pub use spectral::{Spectrum, VertexFunction};
