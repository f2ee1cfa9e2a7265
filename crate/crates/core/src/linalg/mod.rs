//! Dense symmetric matrices and the eigensolver used by every spectral
//! computation in the crate.

mod eigen;
mod matrix;

pub use eigen::{
    eigen_decomposition, eigen_decomposition_with, eigenvalues, eigenvalues_with,
    selected_eigenpairs, SolverOptions, Spectrum, DEFAULT_ORDER_CAP, DEFAULT_TOLERANCE,
};
pub(crate) use eigen::fix_sign;
pub use matrix::{SymMatrix, SYMMETRY_TOLERANCE};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum LinalgError {
    #[error("matrix is not square: {rows} rows but a row of length {cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is not symmetric at ({row}, {col})")]
    NotSymmetric { row: usize, col: usize },
    #[error("non-finite entry at ({row}, {col})")]
    NonFinite { row: usize, col: usize },
    #[error("matrix order {order} exceeds the solver cap {cap}")]
    SizeCap { order: usize, cap: usize },
    #[error("QL iteration did not converge for eigenvalue {index}")]
    NoConvergence { index: usize },
    #[error("residual {residual:e} exceeds the allowed {allowed:e}")]
    Inaccurate { residual: f64, allowed: f64 },
    #[error("eigen index {index} out of range for order {order}")]
    IndexOutOfRange { index: usize, order: usize },
    #[error("mass matrix is not positive definite (pivot {pivot})")]
    NotPositiveDefinite { pivot: usize },
}
