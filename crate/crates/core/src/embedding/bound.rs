use std::f64::consts::PI;

use serde::Serialize;

use super::rotation::{euler_genus, RotationSystem};
use super::EmbeddingError;
use crate::graph::WeightedGraph;
use crate::laplacian::normalized_spectrum;
use crate::linalg::{Spectrum, DEFAULT_TOLERANCE};

/// Isosceles triangle with base 1 and legs `cone_length` whose base angles
/// are `π/(2 d_max)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct TriangleGeometry {
    pub d_max: usize,
    pub cone_length: f64,
    /// Base angle recovered from the side lengths by the law of cosines.
    pub base_angle: f64,
    pub apex_angle: f64,
    /// `|base_angle − π/(2 d_max)|`.
    pub base_angle_error: f64,
    pub area: f64,
}

pub fn triangle_geometry(d_max: usize) -> Result<TriangleGeometry, EmbeddingError> {
    if d_max < 2 {
        return Err(EmbeddingError::DegenerateValence(d_max));
    }
    let target = PI / (2.0 * d_max as f64);
    let l = 1.0 / (2.0 * target.cos());
    let base_angle = ((1.0 + l * l - l * l) / (2.0 * l)).clamp(-1.0, 1.0).acos();
    let apex_angle = ((2.0 * l * l - 1.0) / (2.0 * l * l)).clamp(-1.0, 1.0).acos();
    Ok(TriangleGeometry {
        d_max,
        cone_length: l,
        base_angle,
        apex_angle,
        base_angle_error: (base_angle - target).abs(),
        area: 0.25 * target.tan(),
    })
}

/// The star with `d` edges, each subdivided once: centre 0, midpoints
/// `1..=d`, leaves `d+1..=2d`.
pub fn subdivided_star(d: usize) -> WeightedGraph {
    let edges = (1..=d).flat_map(|i| [(0, i), (i, i + d)]);
    WeightedGraph::unweighted(2 * d + 1, edges).expect("valid star")
}

/// Normalized spectrum of the once-subdivided star with `d` edges.
pub fn subdivided_star_spectrum(d: usize) -> Result<Spectrum, EmbeddingError> {
    if d == 0 {
        return Err(EmbeddingError::NoEdges);
    }
    Ok(normalized_spectrum(&subdivided_star(d), DEFAULT_TOLERANCE)?)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GenusBoundRow {
    pub k: usize,
    pub lambda: f64,
    /// `λ_k n / (d_max (g + k))`.
    pub ratio: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GenusBoundReport {
    pub n: usize,
    pub d_max: usize,
    pub genus: usize,
    pub rows: Vec<GenusBoundRow>,
    /// Largest ratio over the table: the measured constant for this graph.
    pub sup_ratio: f64,
    pub sup_k: usize,
    pub residual_bound: f64,
}

/// Ratios `λ_k^nr(G) n / (d_max (g + k))` for `k = 1..=k_max`, with `g` the
/// genus of the given embedding.
pub fn genus_bound_evaluate(r: &RotationSystem, k_max: usize) -> Result<GenusBoundReport, EmbeddingError> {
    let n = r.vertex_count();
    if k_max == 0 || k_max > n - 1 {
        return Err(EmbeddingError::KOutOfRange { k_max, n });
    }
    let genus = euler_genus(r)?;
    let d_max = r.max_valence();
    let spec = normalized_spectrum(r.graph(), DEFAULT_TOLERANCE)?;
    let rows: Vec<GenusBoundRow> = (1..=k_max)
        .map(|k| {
            let lambda = spec.values[k];
            GenusBoundRow {
                k,
                lambda,
                ratio: (lambda * n as f64 / (d_max as f64 * (genus + k) as f64)).max(0.0),
            }
        })
        .collect();
    let sup = rows
        .iter()
        .fold(&rows[0], |best, row| if row.ratio > best.ratio { row } else { best });
    Ok(GenusBoundReport {
        n,
        d_max,
        genus,
        sup_ratio: sup.ratio,
        sup_k: sup.k,
        rows,
        residual_bound: spec.residual_bound,
    })
}
