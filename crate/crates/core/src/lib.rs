//! Spectral workbench for weighted normalized graph Laplacians.
//!
//! The crate relates continuum Laplacian eigenvalues to normalized
//! Laplacians of two-fold covers and provides the pieces needed to test that
//! relation numerically:
//!
//! * [`linalg`], [`graph`] and [`laplacian`]: weighted graphs, standard and
//!   normalized Laplacians and a dense symmetric eigensolver;
//! * [`cover`]: two-fold covers given by their measure data, the cover
//!   Laplacian, the Gram matrix of normalized indicators and the transfer
//!   inequality checker;
//! * [`embedding`]: rotation systems, face tracing, embedding genus, the cone
//!   construction, open-star covers and the genus bound evaluator;
//! * [`metric`]: metric graph models, a Galerkin estimator for metric-graph
//!   spectra, an exact solver for metric stars and the bracketing checks;
//! * [`mesh`]: simplicial meshes, their facet-cone cover and Fiedler sweep
//!   partitioning.

pub mod cover;
pub mod embedding;
pub mod graph;
pub mod laplacian;
pub mod linalg;
pub mod mesh;
pub mod metric;
pub mod numfmt;

pub use graph::WeightedGraph;
pub use linalg::{Spectrum, SymMatrix};
