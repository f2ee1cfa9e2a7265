//! Standard and normalized Laplacians, Rayleigh quotients and Fiedler pairs.

use thiserror::Error;

use crate::graph::WeightedGraph;
use crate::linalg::{self, LinalgError, SymMatrix};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum LaplacianError {
    #[error("vertex {0} has zero weighted degree")]
    ZeroDegreeVertex(usize),
    #[error("function vanishes identically")]
    ZeroFunction,
    #[error("function has {got} values for {n} vertices")]
    LengthMismatch { got: usize, n: usize },
    #[error("second eigenvalue {lambda1:e} is below the solver tolerance {threshold:e}: graph is disconnected")]
    Disconnected { lambda1: f64, threshold: f64 },
    #[error("need at least two vertices, got {0}")]
    TooSmall(usize),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// `Δ = S − W`: weighted degrees on the diagonal, `−w(u, v)` off it.
pub fn standard_laplacian(g: &WeightedGraph) -> SymMatrix {
    let mut m = SymMatrix::zeros(g.n());
    for e in g.edges() {
        m.set(e.u, e.v, -e.w);
    }
    for v in 0..g.n() {
        m.set(v, v, g.degree(v));
    }
    m
}

/// `𝓛 = I − S^{-1/2} W S^{-1/2}`.
pub fn normalized_laplacian(g: &WeightedGraph) -> Result<SymMatrix, LaplacianError> {
    let inv_sqrt = inverse_sqrt_degrees(g)?;
    let mut m = SymMatrix::identity(g.n());
    for e in g.edges() {
        m.set(e.u, e.v, -e.w * inv_sqrt[e.u] * inv_sqrt[e.v]);
    }
    Ok(m)
}

pub(crate) fn inverse_sqrt_degrees(g: &WeightedGraph) -> Result<Vec<f64>, LaplacianError> {
    (0..g.n())
        .map(|v| {
            let d = g.degree(v);
            if d > 0.0 {
                Ok(1.0 / d.sqrt())
            } else {
                Err(LaplacianError::ZeroDegreeVertex(v))
            }
        })
        .collect()
}

/// Normalized spectrum `λ_0^nr ≤ … ≤ λ_{n−1}^nr`.
pub fn normalized_spectrum(g: &WeightedGraph, tol: f64) -> Result<linalg::Spectrum, LaplacianError> {
    Ok(linalg::eigenvalues(&normalized_laplacian(g)?, tol)?)
}

pub fn standard_spectrum(g: &WeightedGraph, tol: f64) -> Result<linalg::Spectrum, LaplacianError> {
    Ok(linalg::eigenvalues(&standard_laplacian(g), tol)?)
}

/// `Σ_e w_e (f(u) − f(v))² / Σ_v d_v f(v)²`.
pub fn rayleigh_quotient(g: &WeightedGraph, f: &[f64]) -> Result<f64, LaplacianError> {
    if f.len() != g.n() {
        return Err(LaplacianError::LengthMismatch { got: f.len(), n: g.n() });
    }
    let den: f64 = (0..g.n()).map(|v| g.degree(v) * f[v] * f[v]).sum();
    if f.iter().all(|&x| x == 0.0) {
        return Err(LaplacianError::ZeroFunction);
    }
    if den == 0.0 {
        // f lives on zero-degree vertices only.
        return Err(LaplacianError::ZeroFunction);
    }
    let num: f64 = g.edges().iter().map(|e| e.w * (f[e.u] - f[e.v]).powi(2)).sum();
    Ok(num / den)
}

/// Second eigenpair of a Laplacian-type matrix.
#[derive(Clone, Debug)]
pub struct FiedlerPair {
    pub value: f64,
    /// Unit vector orthogonal to the ground-state vector, first
    /// non-negligible entry positive.
    pub vector: Vec<f64>,
    pub ground_value: f64,
    pub residual_bound: f64,
}

/// `λ_1` and a unit eigenvector orthogonal to the `λ_0` eigenvector.
pub fn fiedler_vector(m: &SymMatrix) -> Result<FiedlerPair, LaplacianError> {
    let n = m.order();
    if n < 2 {
        return Err(LaplacianError::TooSmall(n));
    }
    let (spec, mut vecs) = linalg::selected_eigenpairs(m, &[0, 1], linalg::DEFAULT_TOLERANCE)?;
    let threshold = (100.0 * f64::EPSILON * n as f64 * m.frobenius_norm()).max(spec.residual_bound);
    let lambda1 = spec.values[1];
    if lambda1 - spec.values[0] < threshold {
        return Err(LaplacianError::Disconnected { lambda1, threshold });
    }
    let ground = vecs.remove(0);
    let mut v = vecs.remove(0);
    let dot: f64 = ground.iter().zip(&v).map(|(a, b)| a * b).sum();
    v.iter_mut().zip(&ground).for_each(|(x, g)| *x -= dot * g);
    let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
    v.iter_mut().for_each(|x| *x /= norm);
    Ok(FiedlerPair {
        value: lambda1,
        vector: linalg::fix_sign(v),
        ground_value: spec.values[0],
        residual_bound: spec.residual_bound,
    })
}
