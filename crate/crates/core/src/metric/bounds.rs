use std::f64::consts::PI;

use serde::Serialize;

use super::fem::continuum_spectrum;
use super::model::{subdivide, weighted_normalized_laplacian, weighted_normalized_spectrum, MetricGraphModel};
use super::MetricError;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LowerBoundRow {
    pub k: usize,
    /// Galerkin estimate of `λ_k(Γ)` at the finest level (an upper bound).
    pub continuum: f64,
    pub indicator: f64,
    /// `continuum − indicator − residual_bound`.
    pub continuum_lower: f64,
    pub normalized: f64,
    /// `π² λ_k^nr / (8 ℓ_max²)`.
    pub bound: f64,
    /// `continuum_lower / bound`.
    pub slack: f64,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LowerBoundReport {
    pub l_max: f64,
    pub level: usize,
    pub rows: Vec<LowerBoundRow>,
    pub all_hold: bool,
}

/// Checks `λ_k(Γ) ≥ π² λ_k^nr(G, ℓ) / (8 ℓ_max²)` for `k = 1..=min(k_max, n−1)`.
///
/// The continuum side is taken as the Galerkin value minus its error
/// indicator and the eigensolver residual, so a row only holds if it holds
/// with the error band.
pub fn lower_bound_check(m: &MetricGraphModel, k_max: usize, level: usize) -> Result<LowerBoundReport, MetricError> {
    let k_top = k_max.min(m.n() - 1);
    let nr = weighted_normalized_spectrum(m)?;
    let est = continuum_spectrum(m, k_top, level)?;
    let l_max = m.l_max();
    let rows: Vec<LowerBoundRow> = (1..=k_top)
        .map(|k| {
            let continuum_lower = est.values[k] - est.indicator[k] - est.residual_bound;
            let bound = PI * PI * nr.values[k] / (8.0 * l_max * l_max);
            LowerBoundRow {
                k,
                continuum: est.values[k],
                indicator: est.indicator[k],
                continuum_lower,
                normalized: nr.values[k],
                bound,
                slack: continuum_lower / bound,
                holds: continuum_lower >= bound,
            }
        })
        .collect();
    Ok(LowerBoundReport {
        l_max,
        level,
        all_hold: rows.iter().all(|r| r.holds),
        rows,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SandwichRow {
    pub k: usize,
    pub normalized: f64,
    /// Richardson-extrapolated `λ_k(Γ)`.
    pub continuum: f64,
    /// `λ_k^nr / (ℓ_min² λ_k(Γ))`.
    pub c1_hat: f64,
    /// `d_max λ_k^nr / (ℓ_min² λ_k(Γ))`.
    pub c2_hat: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SandwichReport {
    pub l_min: f64,
    pub d_max: usize,
    pub rows: Vec<SandwichRow>,
    pub c1_range: (f64, f64),
    pub c2_range: (f64, f64),
    /// Every ratio is positive and finite.
    pub bounded: bool,
}

/// Empirical constants in `c₂ ℓ_min² λ_k(Γ) / d_max ≤ λ_k^nr ≤ c₁ ℓ_min² λ_k(Γ)`.
pub fn sandwich_check(m: &MetricGraphModel, k_max: usize, level: usize) -> Result<SandwichReport, MetricError> {
    m.require_balanced()?;
    let k_top = k_max.min(m.n() - 1);
    let nr = weighted_normalized_spectrum(m)?;
    let est = continuum_spectrum(m, k_top, level)?;
    let l_min = m.l_min();
    let d_max = m.d_max();
    let rows: Vec<SandwichRow> = (1..=k_top)
        .map(|k| {
            let c1_hat = nr.values[k] / (l_min * l_min * est.extrapolated[k]);
            SandwichRow {
                k,
                normalized: nr.values[k],
                continuum: est.extrapolated[k],
                c1_hat,
                c2_hat: d_max as f64 * c1_hat,
            }
        })
        .collect();
    let range = |f: fn(&SandwichRow) -> f64| {
        rows.iter()
            .map(f)
            .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), x| (lo.min(x), hi.max(x)))
    };
    let c1_range = range(|r| r.c1_hat);
    let c2_range = range(|r| r.c2_hat);
    let bounded = rows
        .iter()
        .all(|r| r.c1_hat.is_finite() && r.c1_hat > 0.0 && r.c2_hat.is_finite() && r.c2_hat > 0.0);
    Ok(SandwichReport {
        l_min,
        d_max,
        rows,
        c1_range,
        c2_range,
        bounded,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct StabilityReport {
    pub k: usize,
    /// `(s, s² λ_k^nr(G_s))` for every subdivision count with `k < |V(G_s)|`.
    pub values: Vec<(usize, f64)>,
    /// Subdivision counts whose model has too few vertices for index `k`.
    pub skipped: Vec<usize>,
    /// `max / min` of the scaled values.
    pub spread: f64,
}

/// Scaled eigenvalues `s² λ_k^nr(G_s)` of the `s`-th subdivisions, one
/// report per requested `k`. Each subdivision is solved once.
pub fn subdivision_stability(
    m: &MetricGraphModel,
    ks: &[usize],
    counts: &[usize],
) -> Result<Vec<StabilityReport>, MetricError> {
    m.require_balanced()?;
    let mut reports: Vec<StabilityReport> = ks
        .iter()
        .map(|&k| StabilityReport {
            k,
            values: Vec::new(),
            skipped: Vec::new(),
            spread: f64::NAN,
        })
        .collect();
    for &s in counts {
        let spec = weighted_normalized_spectrum(&subdivide(m, s)?)?;
        for r in &mut reports {
            match spec.values.get(r.k) {
                Some(&lambda) if r.k > 0 => r.values.push((s, (s * s) as f64 * lambda)),
                _ => r.skipped.push(s),
            }
        }
    }
    for r in &mut reports {
        let (lo, hi) = r
            .values
            .iter()
            .fold((f64::INFINITY, 0.0_f64), |(lo, hi), &(_, x)| (lo.min(x), hi.max(x)));
        if !r.values.is_empty() {
            r.spread = hi / lo;
        }
    }
    Ok(reports)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DilationRow {
    pub k: usize,
    /// Galerkin `λ_k(βΓ)`.
    pub dilated: f64,
    /// Galerkin `λ_k(Γ) / β²`.
    pub predicted: f64,
    pub difference: f64,
    /// Error indicators plus solver residuals of both runs, in the units of
    /// `λ_k(βΓ)`.
    pub band: f64,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DilationReport {
    pub beta: f64,
    /// Max-norm difference of the weighted normalized Laplacians of `m` and `βm`.
    pub normalized_matrix_difference: f64,
    pub rows: Vec<DilationRow>,
    pub all_hold: bool,
}

/// Compares `λ_k(βΓ)` with `λ_k(Γ)/β²` and the normalized Laplacians of the
/// two models.
pub fn dilation_check(
    m: &MetricGraphModel,
    beta: f64,
    k_max: usize,
    level: usize,
) -> Result<DilationReport, MetricError> {
    let dilated_model = m.scaled(beta)?;
    let normalized_matrix_difference =
        weighted_normalized_laplacian(m).max_abs_diff(&weighted_normalized_laplacian(&dilated_model));
    let base = continuum_spectrum(m, k_max, level)?;
    let dilated = continuum_spectrum(&dilated_model, k_max, level)?;
    let b2 = beta * beta;
    let rows: Vec<DilationRow> = (0..=k_max)
        .map(|k| {
            let predicted = base.values[k] / b2;
            let difference = (dilated.values[k] - predicted).abs();
            let band = dilated.indicator[k] + dilated.residual_bound + (base.indicator[k] + base.residual_bound) / b2;
            DilationRow {
                k,
                dilated: dilated.values[k],
                predicted,
                difference,
                band,
                holds: difference <= band,
            }
        })
        .collect();
    Ok(DilationReport {
        beta,
        normalized_matrix_difference,
        all_hold: rows.iter().all(|r| r.holds),
        rows,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct InterpolationReport {
    /// The model was divided by this factor so that `ℓ_min = 1`.
    pub scale: f64,
    /// `Σ_e (g(u) − g(v))² / ℓ([u_e, v_e])`.
    pub dirichlet_energy: f64,
    /// `2 Σ_e (g(u) − g(v))²`.
    pub energy_bound: f64,
    /// `(1/4) Σ_v g(v)²`, the mass of the constant balls.
    pub l2_mass_lower: f64,
    /// Exact `∫ f²` of the interpolant.
    pub l2_mass: f64,
    pub energy_holds: bool,
    pub mass_holds: bool,
}

/// Interpolates a vertex function to the rescaled metric graph: constant
/// `g(v)` on the ball of radius `1/(4 d_v)` around `v`, affine in between.
pub fn vertex_interpolation(m: &MetricGraphModel, g: &[f64]) -> Result<InterpolationReport, MetricError> {
    m.require_balanced()?;
    if g.len() != m.n() {
        return Err(MetricError::FunctionLength { got: g.len(), n: m.n() });
    }
    let scale = m.l_min();
    let d = m.valences();
    let radius = |v: usize| 0.25 / d[v] as f64;
    let mut dirichlet_energy = 0.0;
    let mut energy_bound = 0.0;
    let mut l2_mass = 0.0;
    for &(u, v, l) in m.edges() {
        let len = l / scale - radius(u) - radius(v);
        let (a, b) = (g[u], g[v]);
        dirichlet_energy += (a - b).powi(2) / len;
        energy_bound += 2.0 * (a - b).powi(2);
        l2_mass += len * (a * a + a * b + b * b) / 3.0;
    }
    let l2_mass_lower = 0.25 * g.iter().map(|x| x * x).sum::<f64>();
    l2_mass += l2_mass_lower;
    let tol = 1e-12;
    Ok(InterpolationReport {
        scale,
        dirichlet_energy,
        energy_bound,
        l2_mass_lower,
        l2_mass,
        energy_holds: dirichlet_energy <= energy_bound * (1.0 + tol),
        mass_holds: l2_mass >= l2_mass_lower * (1.0 - tol),
    })
}
