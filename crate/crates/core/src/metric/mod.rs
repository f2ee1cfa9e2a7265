//! Metric graph models, a Galerkin estimator for metric-graph spectra, an
//! exact solver for metric stars and the bound checks relating them to
//! weighted normalized spectra.

mod bounds;
mod fem;
mod model;
mod star;

pub use bounds::{
    dilation_check, lower_bound_check, sandwich_check, subdivision_stability, vertex_interpolation,
    DilationReport, DilationRow, InterpolationReport, LowerBoundReport, LowerBoundRow, SandwichReport,
    SandwichRow, StabilityReport,
};
pub use fem::{continuum_spectrum, ContinuumEstimate};
pub use model::{subdivide, weighted_normalized_laplacian, weighted_normalized_spectrum, MetricGraphModel};
pub use star::{star_secular_solve, MetricStar};

use thiserror::Error;

use crate::graph::GraphError;
use crate::laplacian::LaplacianError;
use crate::linalg::LinalgError;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum MetricError {
    #[error("model needs at least two vertices and one edge")]
    TooSmall,
    #[error("edge {edge} has length {value}; lengths must be positive and finite")]
    InvalidLength { edge: usize, value: f64 },
    #[error("edge ({u}, {v}) references a vertex outside 0..{n}")]
    VertexOutOfRange { u: usize, v: usize, n: usize },
    #[error("model is not simple: repeated edge ({0}, {1})")]
    NotSimple(usize, usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("model graph is not connected")]
    Disconnected,
    #[error("model is not length-balanced: l_max / l_min = {ratio} > 2")]
    NotLengthBalanced { ratio: f64 },
    #[error("subdivision count must be at least 1")]
    BadSubdivision,
    #[error("refinement level must be at least 1")]
    BadLevel,
    #[error("dilation factor {0} must be positive and finite")]
    BadBeta(f64),
    #[error("k = {k} exceeds the available eigenvalue index {available}")]
    KOutOfRange { k: usize, available: usize },
    #[error("no root bracketed in ({lo}, {hi}): sums {f_lo} and {f_hi}")]
    RootBracketFailure { lo: f64, hi: f64, f_lo: f64, f_hi: f64 },
    #[error("metric star needs at least one branch with positive finite length")]
    InvalidStar,
    #[error("vertex function has {got} values for {n} vertices")]
    FunctionLength { got: usize, n: usize },
    #[error(transparent)]
    Parse(#[from] GraphError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Laplacian(#[from] LaplacianError),
}
