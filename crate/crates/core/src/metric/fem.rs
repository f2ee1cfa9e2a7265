use serde::Serialize;

use super::model::MetricGraphModel;
use super::MetricError;
use crate::linalg::{eigenvalues, SymMatrix, DEFAULT_TOLERANCE};

/// Galerkin estimate of `λ_0..=λ_{k_max}` of a metric graph.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ContinuumEstimate {
    pub level: usize,
    /// Number of unknowns at `level`.
    pub order: usize,
    /// Largest segment length at `level`.
    pub max_segment: f64,
    /// Estimates at `level`; each is an upper bound for the true eigenvalue.
    pub values: Vec<f64>,
    /// Estimates at `level − 1`.
    pub coarse: Vec<f64>,
    /// One Richardson step of order 2: `(4 λ_level − λ_{level−1}) / 3`.
    pub extrapolated: Vec<f64>,
    /// `|λ_{level−1} − λ_level|`.
    pub indicator: Vec<f64>,
    /// Eigensolver backward-error bound at `level`, an absolute accuracy
    /// for every entry of `values`.
    pub residual_bound: f64,
}

/// Segments per edge before refinement: the smallest count with segments of
/// length at most `ℓ_min / 4`. Depends only on length ratios, so the mesh
/// of a dilated model is the dilated mesh.
fn base_segments(length: f64, l_min: f64) -> usize {
    ((4.0 * length / l_min) - 1e-9).ceil().max(1.0) as usize
}

/// Piecewise-linear stiffness and consistent mass matrices with `2^level`
/// times the base segment count on every edge.
fn assemble(m: &MetricGraphModel, level: usize) -> (SymMatrix, SymMatrix, f64) {
    let l_min = m.l_min();
    let factor = 1usize << level;
    let counts: Vec<usize> = m.edges().iter().map(|e| base_segments(e.2, l_min) * factor).collect();
    let order = m.n() + counts.iter().map(|c| c - 1).sum::<usize>();
    let mut stiffness = SymMatrix::zeros(order);
    let mut mass = SymMatrix::zeros(order);
    let mut next = m.n();
    let mut max_segment = 0.0_f64;
    for (&(u, v, l), &count) in m.edges().iter().zip(&counts) {
        let h = l / count as f64;
        max_segment = max_segment.max(h);
        let node = |i: usize| match i {
            0 => u,
            i if i == count => v,
            i => next + i - 1,
        };
        for i in 0..count {
            let (a, b) = (node(i), node(i + 1));
            stiffness.add(a, a, 1.0 / h);
            stiffness.add(b, b, 1.0 / h);
            stiffness.add(a, b, -1.0 / h);
            mass.add(a, a, h / 3.0);
            mass.add(b, b, h / 3.0);
            mass.add(a, b, h / 6.0);
        }
        next += count - 1;
    }
    (stiffness, mass, max_segment)
}

fn solve_level(m: &MetricGraphModel, level: usize, k_max: usize) -> Result<(Vec<f64>, usize, f64, f64), MetricError> {
    let (stiffness, mass, max_segment) = assemble(m, level);
    let order = stiffness.order();
    if k_max >= order {
        return Err(MetricError::KOutOfRange { k: k_max, available: order - 1 });
    }
    let reduced = stiffness.reduce_pencil(&mass)?;
    let spec = eigenvalues(&reduced, DEFAULT_TOLERANCE)?;
    Ok((spec.values[..=k_max].to_vec(), order, max_segment, spec.residual_bound))
}

/// Eigenvalue estimates for `k = 0..=k_max` at `level` and `level − 1`.
///
/// Continuity at the vertices is built into the basis and the slope-sum
/// condition holds weakly, so the discrete values approximate the
/// Kirchhoff spectrum from above with error `O(h²)`.
pub fn continuum_spectrum(m: &MetricGraphModel, k_max: usize, level: usize) -> Result<ContinuumEstimate, MetricError> {
    if level == 0 {
        return Err(MetricError::BadLevel);
    }
    let (coarse, _, _, _) = solve_level(m, level - 1, k_max)?;
    let (values, order, max_segment, residual_bound) = solve_level(m, level, k_max)?;
    let extrapolated = values.iter().zip(&coarse).map(|(f, c)| (4.0 * f - c) / 3.0).collect();
    let indicator = values.iter().zip(&coarse).map(|(f, c)| (c - f).abs()).collect();
    Ok(ContinuumEstimate {
        level,
        order,
        max_segment,
        values,
        coarse,
        extrapolated,
        indicator,
        residual_bound,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn interval_first_eigenvalue() {
        let m = MetricGraphModel::path(2, 1.0).unwrap();
        let e = continuum_spectrum(&m, 3, 5).unwrap();
        assert!(e.max_segment <= 1.0 / 96.0);
        assert!(e.values[0].abs() < 1e-9);
        for k in 1..=3 {
            let exact = (PI * k as f64).powi(2);
            assert!((e.values[k] - exact).abs() / exact < 0.005);
            assert!(e.values[k] >= exact);
            assert!((e.extrapolated[k] - exact).abs() < (e.values[k] - exact).abs());
        }
    }

    #[test]
    fn circle_of_three_edges() {
        let m = MetricGraphModel::cycle(3, 1.0 / 3.0).unwrap();
        let e = continuum_spectrum(&m, 2, 3).unwrap();
        assert!(e.max_segment <= 1.0 / 96.0 + 1e-15);
        let exact = 4.0 * PI * PI;
        for k in 1..=2 {
            assert!((e.values[k] - exact).abs() / exact < 0.005);
        }
    }

    #[test]
    fn base_segments_are_scale_free() {
        for beta in [0.1, 0.5, 3.0, 7.0] {
            assert_eq!(base_segments(beta * 1.0, beta * 1.0), 4);
            assert_eq!(base_segments(beta * 1.7, beta * 1.0), 7);
        }
    }

    #[test]
    fn indicator_shrinks_fourfold() {
        let m = MetricGraphModel::path(2, 1.0).unwrap();
        let a = continuum_spectrum(&m, 1, 3).unwrap();
        let b = continuum_spectrum(&m, 1, 4).unwrap();
        let ratio = a.indicator[1] / b.indicator[1];
        assert!((3.0..=5.0).contains(&ratio), "{ratio}");
    }

    #[test]
    fn level_zero_is_rejected() {
        let m = MetricGraphModel::path(2, 1.0).unwrap();
        assert_eq!(continuum_spectrum(&m, 1, 0).unwrap_err(), MetricError::BadLevel);
        assert!(matches!(continuum_spectrum(&m, 100, 1), Err(MetricError::KOutOfRange { .. })));
    }
}
