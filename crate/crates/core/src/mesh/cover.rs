use std::collections::BTreeMap;

use super::SimplicialMesh;
use crate::cover::TwoFoldCover;
use crate::graph::WeightedGraph;

/// Facet-cone cover of a mesh and its dual graph.
///
/// Each simplex `σ` is split into `d+1` cones over its facets with apex at
/// the barycentre, each of volume `vol(σ)/(d+1)`. The cell `U_σ` is `σ`
/// together with the cones of its neighbours on the shared facets, so
/// adjacent cells meet in `(vol σ₁ + vol σ₂)/(d+1)`. Points in cones over
/// boundary facets lie in one cell only; such covers are flagged
/// almost-two-fold.
pub fn barycentric_cover(m: &SimplicialMesh) -> (TwoFoldCover, WeightedGraph) {
    let n = m.simplex_count();
    let share = 1.0 / (m.dim() + 1) as f64;
    let vol = m.volumes();
    let mut measures = vol.to_vec();
    let mut weights: BTreeMap<(usize, usize), f64> = BTreeMap::new();
    for adj in m.adjacency() {
        measures[adj.a] += vol[adj.b] * share;
        measures[adj.b] += vol[adj.a] * share;
        *weights.entry((adj.a.min(adj.b), adj.a.max(adj.b))).or_insert(0.0) += (vol[adj.a] + vol[adj.b]) * share;
    }
    let edges: Vec<(usize, usize, f64)> = weights.into_iter().map(|((a, b), w)| (a, b, w)).collect();
    let dual = WeightedGraph::new(n, edges.iter().copied()).expect("dual edges are valid");
    let mut cover = TwoFoldCover::from_measures(&measures, edges).expect("mesh volumes are positive");
    if m.has_boundary() {
        cover = cover.mark_almost_two_fold();
    }
    (cover, dual)
}

/// Volume of the cones over boundary facets in each simplex:
/// `vol(σ) · #boundary facets / (d+1)`. This is exactly `μ(U_σ) − d_σ`.
pub fn boundary_cone_volumes(m: &SimplicialMesh) -> Vec<f64> {
    let share = 1.0 / (m.dim() + 1) as f64;
    m.volumes()
        .iter()
        .zip(m.boundary_facet_counts())
        .map(|(v, &c)| v * c as f64 * share)
        .collect()
}

/// `κ`: largest volume ratio across a facet (1 without adjacencies);
/// `ε`: largest simplex diameter.
pub fn kappa_epsilon(m: &SimplicialMesh) -> (f64, f64) {
    let vol = m.volumes();
    let kappa = m
        .adjacency()
        .iter()
        .map(|a| {
            let (x, y) = (vol[a.a], vol[a.b]);
            x.max(y) / x.min(y)
        })
        .fold(1.0, f64::max);
    let epsilon = m.diameters().iter().copied().fold(0.0, f64::max);
    (kappa, epsilon)
}
