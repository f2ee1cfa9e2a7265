use std::collections::HashSet;
use std::fmt::Write as _;

use serde::Serialize;

use super::MetricError;
use crate::graph::{parse_edge_records, WeightedGraph};
use crate::laplacian::{normalized_laplacian, normalized_spectrum};
use crate::linalg::{Spectrum, SymMatrix, DEFAULT_TOLERANCE};

/// Relative slack in the length-balance test `ℓ_e ≤ 2 ℓ_min`.
const BALANCE_SLACK: f64 = 1e-12;

/// A simple connected graph with positive edge lengths.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MetricGraphModel {
    n: usize,
    edges: Vec<(usize, usize, f64)>,
}

impl MetricGraphModel {
    pub fn new(n: usize, edges: Vec<(usize, usize, f64)>) -> Result<Self, MetricError> {
        Self::validate_edges(n, &edges)?;
        let mut seen = HashSet::new();
        for &(u, v, _) in &edges {
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(MetricError::NotSimple(u.min(v), u.max(v)));
            }
        }
        let model = MetricGraphModel { n, edges };
        if !model.graph().is_connected() {
            return Err(MetricError::Disconnected);
        }
        Ok(model)
    }

    fn validate_edges(n: usize, edges: &[(usize, usize, f64)]) -> Result<(), MetricError> {
        if n < 2 || edges.is_empty() {
            return Err(MetricError::TooSmall);
        }
        for (i, &(u, v, l)) in edges.iter().enumerate() {
            if u >= n || v >= n {
                return Err(MetricError::VertexOutOfRange { u, v, n });
            }
            if !(l.is_finite() && l > 0.0) {
                return Err(MetricError::InvalidLength { edge: i, value: l });
            }
        }
        Ok(())
    }

    /// Model of a metric graph given by a multigraph. If the input has
    /// parallel edges or loops, every edge is split at its midpoint (loops
    /// into thirds), which leaves the metric graph unchanged.
    pub fn from_multigraph(n: usize, edges: Vec<(usize, usize, f64)>) -> Result<Self, MetricError> {
        let mut seen = HashSet::new();
        let simple = edges
            .iter()
            .all(|&(u, v, _)| u != v && seen.insert((u.min(v), u.max(v))));
        if simple {
            return Self::new(n, edges);
        }
        Self::validate_edges(n, &edges)?;
        let mut next = n;
        let mut split = Vec::with_capacity(3 * edges.len());
        for &(u, v, l) in &edges {
            if u == v {
                split.extend([(u, next, l / 3.0), (next, next + 1, l / 3.0), (next + 1, v, l / 3.0)]);
                next += 2;
            } else {
                split.extend([(u, next, l / 2.0), (next, v, l / 2.0)]);
                next += 1;
            }
        }
        Self::new(next, split)
    }

    /// Parses the edge-list format with a length column: header `n m`, then
    /// `m` lines `u v ℓ` (length defaults to 1).
    pub fn parse(text: &str) -> Result<Self, MetricError> {
        let (n, records) = parse_edge_records(text, "length")?;
        Self::from_multigraph(n, records.into_iter().map(|(u, v, l)| (u, v, l.unwrap_or(1.0))).collect())
    }

    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.edges.len());
        for &(u, v, l) in &self.edges {
            let _ = writeln!(out, "{u} {v} {}", crate::numfmt::format_f64(l));
        }
        out
    }

    /// Cycle on `n ≥ 3` vertices with the given common length.
    pub fn cycle(n: usize, length: f64) -> Result<Self, MetricError> {
        Self::new(n, (0..n).map(|i| (i, (i + 1) % n, length)).collect())
    }

    /// Path on `n ≥ 2` vertices with the given common length.
    pub fn path(n: usize, length: f64) -> Result<Self, MetricError> {
        Self::new(n, (0..n.saturating_sub(1)).map(|i| (i, i + 1, length)).collect())
    }

    /// Star with centre 0 and one branch per length.
    pub fn star(lengths: &[f64]) -> Result<Self, MetricError> {
        Self::new(lengths.len() + 1, lengths.iter().enumerate().map(|(i, &l)| (0, i + 1, l)).collect())
    }

    /// Two vertices joined by three edges of the given length, subdivided
    /// once to obtain a simple model.
    pub fn theta(length: f64) -> Result<Self, MetricError> {
        Self::from_multigraph(2, vec![(0, 1, length); 3])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize, f64)] {
        &self.edges
    }

    pub fn lengths(&self) -> Vec<f64> {
        self.edges.iter().map(|e| e.2).collect()
    }

    pub fn l_min(&self) -> f64 {
        self.edges.iter().map(|e| e.2).fold(f64::INFINITY, f64::min)
    }

    pub fn l_max(&self) -> f64 {
        self.edges.iter().map(|e| e.2).fold(0.0, f64::max)
    }

    pub fn total_length(&self) -> f64 {
        self.edges.iter().map(|e| e.2).sum()
    }

    pub fn valences(&self) -> Vec<usize> {
        let mut d = vec![0; self.n];
        for &(u, v, _) in &self.edges {
            d[u] += 1;
            d[v] += 1;
        }
        d
    }

    pub fn d_max(&self) -> usize {
        self.valences().into_iter().max().unwrap_or(0)
    }

    /// `ℓ_e ≤ 2 ℓ_min` for every edge.
    pub fn is_length_balanced(&self) -> bool {
        self.l_max() <= 2.0 * self.l_min() * (1.0 + BALANCE_SLACK)
    }

    pub(crate) fn require_balanced(&self) -> Result<(), MetricError> {
        if self.is_length_balanced() {
            Ok(())
        } else {
            Err(MetricError::NotLengthBalanced { ratio: self.l_max() / self.l_min() })
        }
    }

    /// Graph with edge weights equal to the lengths.
    pub fn graph(&self) -> WeightedGraph {
        WeightedGraph::new(self.n, self.edges.iter().copied()).expect("model edges are valid")
    }

    /// All lengths multiplied by `beta`.
    pub fn scaled(&self, beta: f64) -> Result<Self, MetricError> {
        if !(beta.is_finite() && beta > 0.0) {
            return Err(MetricError::BadBeta(beta));
        }
        Ok(MetricGraphModel {
            n: self.n,
            edges: self.edges.iter().map(|&(u, v, l)| (u, v, l * beta)).collect(),
        })
    }
}

/// Every edge split into `k` edges of length `ℓ_e / k`. The new vertices of
/// edge `e` are `n + e(k−1) .. n + (e+1)(k−1)`, in order from `u` to `v`.
pub fn subdivide(m: &MetricGraphModel, k: usize) -> Result<MetricGraphModel, MetricError> {
    if k == 0 {
        return Err(MetricError::BadSubdivision);
    }
    if k == 1 {
        return Ok(m.clone());
    }
    let mut edges = Vec::with_capacity(k * m.edges.len());
    for (e, &(u, v, l)) in m.edges.iter().enumerate() {
        let h = l / k as f64;
        let inner = |i: usize| m.n + e * (k - 1) + i;
        edges.push((u, inner(0), h));
        for i in 0..k - 2 {
            edges.push((inner(i), inner(i + 1), h));
        }
        edges.push((inner(k - 2), v, h));
    }
    Ok(MetricGraphModel {
        n: m.n + (k - 1) * m.edges.len(),
        edges,
    })
}

/// Normalized Laplacian of the model graph with weights `w_e = ℓ_e`.
pub fn weighted_normalized_laplacian(m: &MetricGraphModel) -> SymMatrix {
    normalized_laplacian(&m.graph()).expect("connected models have positive degrees")
}

/// `λ_k^nr(G, ℓ)`: normalized spectrum with edge weights `w_e = ℓ_e`.
pub fn weighted_normalized_spectrum(m: &MetricGraphModel) -> Result<Spectrum, MetricError> {
    Ok(normalized_spectrum(&m.graph(), DEFAULT_TOLERANCE)?)
}
