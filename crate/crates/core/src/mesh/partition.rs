use serde::Serialize;

use super::cover::{barycentric_cover, kappa_epsilon};
use super::{MeshError, SimplicialMesh};
use crate::graph::WeightedGraph;
use crate::laplacian::{fiedler_vector, inverse_sqrt_degrees, normalized_laplacian, LaplacianError};

pub const DEFAULT_BALANCE_FLOOR: f64 = 0.1;

/// Relative tolerance for treating two conductances as equal in the sweep.
const TIE_TOLERANCE: f64 = 1e-12;

/// Bipartition of the dual graph's vertices.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Partition {
    /// `false` for side A (the sweep prefix), `true` for side B.
    pub side: Vec<bool>,
    /// Dual edges crossing the cut, as `(u, v)` with `u < v`.
    pub cut_edges: Vec<(usize, usize)>,
    pub cut_weight: f64,
    /// Cut weight over the smaller side's weighted volume.
    pub conductance: f64,
    /// Smaller side's share of the total weighted volume.
    pub balance: f64,
    pub fiedler_value: f64,
    /// Size of side A.
    pub prefix: usize,
    /// False when no prefix met the balance floor and the most balanced
    /// prefix was returned instead.
    pub floor_met: bool,
}

/// Sweep cut along the Fiedler vector of the normalized Laplacian.
///
/// Vertices are ordered by `S^{-1/2} v₁` and every prefix is scored. Among
/// prefixes whose balance reaches `balance_floor`, the one with the lowest
/// conductance wins; ties go to the better balance, then the shorter
/// prefix. If no prefix reaches the floor, the most balanced one is used.
pub fn spectral_cut(dual: &WeightedGraph, balance_floor: f64) -> Result<Partition, MeshError> {
    if !(0.0..=0.5).contains(&balance_floor) {
        return Err(MeshError::BadBalanceFloor(balance_floor));
    }
    let n = dual.n();
    if n < 2 {
        return Err(MeshError::TooSmall(n));
    }
    if !dual.is_connected() {
        return Err(MeshError::Disconnected);
    }
    let lap = normalized_laplacian(dual)?;
    let fiedler = fiedler_vector(&lap).map_err(|e| match e {
        LaplacianError::Disconnected { .. } => MeshError::Disconnected,
        other => MeshError::Laplacian(other),
    })?;
    let scale = inverse_sqrt_degrees(dual)?;
    let embed: Vec<f64> = fiedler.vector.iter().zip(&scale).map(|(v, s)| v * s).collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| embed[a].total_cmp(&embed[b]).then(a.cmp(&b)));

    let total: f64 = dual.degrees().iter().sum();
    let mut in_prefix = vec![false; n];
    let (mut cut, mut vol) = (0.0, 0.0);
    // (conductance, balance, prefix)
    let mut scores = Vec::with_capacity(n - 1);
    for (i, &v) in order.iter().take(n - 1).enumerate() {
        in_prefix[v] = true;
        vol += dual.degree(v);
        for &(u, w) in dual.neighbors(v) {
            cut += if in_prefix[u] { -w } else { w };
        }
        let small = vol.min(total - vol);
        scores.push((cut.max(0.0) / small, small / total, i + 1));
    }
    let better = |a: &(f64, f64, usize), b: &(f64, f64, usize)| {
        if (a.0 - b.0).abs() > TIE_TOLERANCE * a.0.max(b.0) {
            a.0 < b.0
        } else if a.1 != b.1 {
            a.1 > b.1
        } else {
            a.2 < b.2
        }
    };
    let eligible: Vec<&(f64, f64, usize)> = scores.iter().filter(|s| s.1 >= balance_floor).collect();
    let floor_met = !eligible.is_empty();
    let best = if floor_met {
        *eligible.iter().fold(eligible[0], |acc, s| if better(s, acc) { s } else { acc })
    } else {
        scores
            .iter()
            .fold(scores[0], |acc, &s| if s.1 > acc.1 { s } else { acc })
    };
    let prefix = best.2;
    let mut side = vec![true; n];
    for &v in &order[..prefix] {
        side[v] = false;
    }
    Ok(finish(dual, side, fiedler.value, prefix, floor_met))
}

fn finish(dual: &WeightedGraph, side: Vec<bool>, fiedler_value: f64, prefix: usize, floor_met: bool) -> Partition {
    let cut: Vec<&crate::graph::Edge> = dual.edges().iter().filter(|e| side[e.u] != side[e.v]).collect();
    let cut_weight: f64 = cut.iter().map(|e| e.w).sum();
    let vol_a: f64 = (0..dual.n()).filter(|&v| !side[v]).map(|v| dual.degree(v)).sum();
    let total: f64 = dual.degrees().iter().sum();
    let small = vol_a.min(total - vol_a);
    Partition {
        cut_edges: cut.iter().map(|e| (e.u, e.v)).collect(),
        cut_weight,
        conductance: cut_weight / small,
        balance: small / total,
        side,
        fiedler_value,
        prefix,
        floor_met,
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PartitionReport {
    pub simplices: usize,
    pub cut_count: usize,
    /// Total `(d−1)`-measure of the cut facets.
    pub cut_measure: f64,
    pub balance: f64,
    /// Smaller side's share of the mesh volume.
    pub volume_balance: f64,
    pub conductance: f64,
    pub fiedler_value: f64,
    pub kappa: f64,
    pub epsilon: f64,
    pub lambda1_domain: Option<f64>,
    /// `fiedler / (κ² λ₁(D) ε²)`.
    pub fiedler_ratio: Option<f64>,
    /// `cut_count · ε / (κ √λ₁(D))`.
    pub cut_ratio: Option<f64>,
}

/// Quality figures of a partition of `m`'s dual graph.
pub fn partition_report(
    m: &SimplicialMesh,
    p: &Partition,
    lambda1_domain: Option<f64>,
) -> Result<PartitionReport, MeshError> {
    if p.side.len() != m.simplex_count() {
        return Err(MeshError::PartitionMismatch {
            got: p.side.len(),
            expected: m.simplex_count(),
        });
    }
    let (kappa, epsilon) = kappa_epsilon(m);
    let cut_measure = m
        .adjacency()
        .iter()
        .filter(|a| p.side[a.a] != p.side[a.b])
        .map(|a| a.measure)
        .sum();
    let total: f64 = m.volumes().iter().sum();
    let vol_a: f64 = m.volumes().iter().zip(&p.side).filter(|(_, &s)| !s).map(|(v, _)| v).sum();
    let cut_count = p.cut_edges.len();
    Ok(PartitionReport {
        simplices: m.simplex_count(),
        cut_count,
        cut_measure,
        balance: p.balance,
        volume_balance: vol_a.min(total - vol_a) / total,
        conductance: p.conductance,
        fiedler_value: p.fiedler_value,
        kappa,
        epsilon,
        lambda1_domain,
        fiedler_ratio: lambda1_domain.map(|l| p.fiedler_value / (kappa * kappa * l * epsilon * epsilon)),
        cut_ratio: lambda1_domain.map(|l| cut_count as f64 * epsilon / (kappa * l.sqrt())),
    })
}

/// Cover, dual graph and sweep cut of a mesh in one call.
pub fn partition_mesh(m: &SimplicialMesh, balance_floor: f64) -> Result<Partition, MeshError> {
    let (_, dual) = barycentric_cover(m);
    spectral_cut(&dual, balance_floor)
}
