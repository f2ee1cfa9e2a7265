//! Two-fold covers given by measure data, the cover Laplacian, the Gram
//! matrix of normalized indicators and the transfer inequality checker.
//!
//! A cover is a list of cells with positive measures and the measures of
//! pairwise intersections. Geometry is not stored; constructors that know
//! the geometry (arcs here, rotation systems, meshes) produce the numbers.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::WeightedGraph;
use crate::laplacian::{normalized_laplacian, LaplacianError};
use crate::linalg::{self, LinalgError, SymMatrix};

/// Relative defect below which a cover counts as exactly two-fold.
pub const EXACTNESS_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum CoverError {
    #[error("cover has no cells")]
    Empty,
    #[error("cell id {0} appears twice")]
    DuplicateCell(usize),
    #[error("intersection refers to unknown cell id {0}")]
    UnknownCell(usize),
    #[error("intersection of cell {0} with itself")]
    SelfIntersection(usize),
    #[error("intersection ({0}, {1}) listed twice")]
    DuplicateIntersection(usize, usize),
    #[error("cell {id} has measure {value}; cells need positive finite measure")]
    InvalidMeasure { id: usize, value: f64 },
    #[error("intersection ({a}, {b}) has measure {value}; need a finite value >= 0")]
    InvalidIntersection { a: usize, b: usize, value: f64 },
    #[error("cell {0} meets no other cell in positive measure")]
    IsolatedCell(usize),
    #[error("cover is not exactly two-fold (relative defect {defect:e})")]
    InexactCover { defect: f64 },
    #[error("Neumann lower bound eta = {0} must be positive")]
    BadEta(f64),
    #[error("Neumann profile has {got} entries for {expected} cells")]
    ProfileLength { got: usize, expected: usize },
    #[error("Neumann value {value} for cell {index} must be finite and >= 0")]
    InvalidNeumann { index: usize, value: f64 },
    #[error("continuum spectrum has {got} values, need at least {need}")]
    ContinuumTooShort { got: usize, need: usize },
    #[error("continuum spectrum is not ascending at index {0}")]
    ContinuumNotAscending(usize),
    #[error("point {point} is covered {count} times")]
    NotTwoFold { point: f64, count: usize },
    #[error("arc {index} is invalid: {reason}")]
    InvalidArc { index: usize, reason: String },
    #[error("total length {0} must be positive and finite")]
    InvalidLength(f64),
    #[error("malformed cover JSON: {0}")]
    Json(String),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Cell {
    pub id: usize,
    pub measure: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Intersection {
    pub a: usize,
    pub b: usize,
    pub measure: f64,
}

/// Measure data of a two-fold cover. Cells keep their input order; that
/// order is the vertex order of [`cover_graph`].
#[derive(Clone, Debug, PartialEq)]
pub struct TwoFoldCover {
    cells: Vec<Cell>,
    /// Pairs of cell positions `(i, j)` with `i < j`, sorted.
    pairs: BTreeMap<(usize, usize), f64>,
    exactness_defect: f64,
    almost_two_fold: bool,
}

#[derive(Serialize, Deserialize)]
struct CoverFile {
    cells: Vec<Cell>,
    #[serde(default)]
    intersections: Vec<Intersection>,
}

impl TwoFoldCover {
    pub fn new(cells: Vec<Cell>, intersections: Vec<Intersection>) -> Result<Self, CoverError> {
        if cells.is_empty() {
            return Err(CoverError::Empty);
        }
        let mut position = HashMap::with_capacity(cells.len());
        for (i, c) in cells.iter().enumerate() {
            if !(c.measure.is_finite() && c.measure > 0.0) {
                return Err(CoverError::InvalidMeasure { id: c.id, value: c.measure });
            }
            if position.insert(c.id, i).is_some() {
                return Err(CoverError::DuplicateCell(c.id));
            }
        }
        let mut pairs = BTreeMap::new();
        for x in &intersections {
            let pa = *position.get(&x.a).ok_or(CoverError::UnknownCell(x.a))?;
            let pb = *position.get(&x.b).ok_or(CoverError::UnknownCell(x.b))?;
            if pa == pb {
                return Err(CoverError::SelfIntersection(x.a));
            }
            if !(x.measure.is_finite() && x.measure >= 0.0) {
                return Err(CoverError::InvalidIntersection { a: x.a, b: x.b, value: x.measure });
            }
            if pairs.insert((pa.min(pb), pa.max(pb)), x.measure).is_some() {
                return Err(CoverError::DuplicateIntersection(x.a, x.b));
            }
        }
        let mut cover = TwoFoldCover {
            cells,
            pairs,
            exactness_defect: 0.0,
            almost_two_fold: false,
        };
        cover.exactness_defect = cover
            .intersection_sums()
            .iter()
            .zip(&cover.cells)
            .map(|(s, c)| (s - c.measure).abs() / c.measure)
            .fold(0.0, f64::max);
        Ok(cover)
    }

    /// Cells with ids `0..n` and the given measures.
    pub fn from_measures<I>(measures: &[f64], intersections: I) -> Result<Self, CoverError>
    where
        I: IntoIterator<Item = (usize, usize, f64)>,
    {
        let cells = measures
            .iter()
            .enumerate()
            .map(|(id, &measure)| Cell { id, measure })
            .collect();
        let xs = intersections
            .into_iter()
            .map(|(a, b, measure)| Intersection { a, b, measure })
            .collect();
        Self::new(cells, xs)
    }

    pub fn from_json(text: &str) -> Result<Self, CoverError> {
        let file: CoverFile = serde_json::from_str(text).map_err(|e| CoverError::Json(e.to_string()))?;
        Self::new(file.cells, file.intersections)
    }

    pub fn to_json(&self) -> String {
        crate::numfmt::to_json(&CoverFile {
            cells: self.cells.clone(),
            intersections: self.intersections(),
        })
    }

    /// Marks the cover as two-fold only away from a boundary region. Such
    /// covers are accepted by the graph and Laplacian builders but never
    /// pass the exactness gate.
    pub fn mark_almost_two_fold(mut self) -> Self {
        self.almost_two_fold = true;
        self
    }

    pub fn is_almost_two_fold(&self) -> bool {
        self.almost_two_fold
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn measures(&self) -> Vec<f64> {
        self.cells.iter().map(|c| c.measure).collect()
    }

    /// Intersections by cell id, in cell-position order.
    pub fn intersections(&self) -> Vec<Intersection> {
        self.pairs
            .iter()
            .map(|(&(i, j), &measure)| Intersection {
                a: self.cells[i].id,
                b: self.cells[j].id,
                measure,
            })
            .collect()
    }

    /// Intersection measure of the cells at positions `i` and `j`.
    pub fn intersection(&self, i: usize, j: usize) -> f64 {
        self.pairs.get(&(i.min(j), i.max(j))).copied().unwrap_or(0.0)
    }

    /// `max_v |Σ_u μ(U_u ∩ U_v) − μ(U_v)| / μ(U_v)`.
    pub fn exactness_defect(&self) -> f64 {
        self.exactness_defect
    }

    pub fn is_exact(&self) -> bool {
        !self.almost_two_fold && self.exactness_defect <= EXACTNESS_TOLERANCE
    }

    /// `Σ_{u≠v} μ(U_u ∩ U_v)` for every cell `v`.
    pub fn intersection_sums(&self) -> Vec<f64> {
        let mut sums = vec![0.0; self.cells.len()];
        for (&(i, j), &m) in &self.pairs {
            sums[i] += m;
            sums[j] += m;
        }
        sums
    }
}

/// Intersection graph: one vertex per cell, weight `μ(U_u ∩ U_v)` on every
/// strictly positive intersection.
pub fn cover_graph(c: &TwoFoldCover) -> WeightedGraph {
    let edges = c.pairs.iter().filter(|(_, &m)| m > 0.0).map(|(&(i, j), &m)| (i, j, m));
    WeightedGraph::new(c.len(), edges).expect("cover pairs are valid edges")
}

/// `𝓛_U = S^{-1/2} Δ S^{-1/2}` of the intersection graph.
pub fn cover_laplacian(c: &TwoFoldCover) -> Result<SymMatrix, CoverError> {
    normalized_laplacian(&cover_graph(c)).map_err(|e| match e {
        LaplacianError::ZeroDegreeVertex(v) => CoverError::IsolatedCell(c.cells[v].id),
        other => unreachable!("normalized_laplacian only fails on isolated vertices: {other}"),
    })
}

/// `[ΦΦ*]_{uv} = μ(U_u ∩ U_v) / (μ(U_u) μ(U_v))^{1/2}`, with unit diagonal.
pub fn gram_matrix(c: &TwoFoldCover) -> SymMatrix {
    let mut g = SymMatrix::identity(c.len());
    for (&(i, j), &m) in &c.pairs {
        g.set(i, j, m / (c.cells[i].measure * c.cells[j].measure).sqrt());
    }
    g
}

/// Max-norm of `(2I − ΦΦ*) − 𝓛_U`. Only defined for exact covers.
pub fn gram_identity_defect(c: &TwoFoldCover) -> Result<f64, CoverError> {
    if !c.is_exact() {
        return Err(CoverError::InexactCover { defect: c.exactness_defect });
    }
    let lap = cover_laplacian(c)?;
    let two_minus_gram = SymMatrix::identity(c.len()).scaled(2.0).sub(&gram_matrix(c));
    Ok(two_minus_gram.max_abs_diff(&lap))
}

/// Per-cell lower bounds on Neumann values.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct NeumannProfile {
    values: Vec<f64>,
}

impl NeumannProfile {
    pub fn new(values: Vec<f64>) -> Result<Self, CoverError> {
        if let Some((index, &value)) = values
            .iter()
            .enumerate()
            .find(|(_, v)| !(v.is_finite() && **v >= 0.0))
        {
            return Err(CoverError::InvalidNeumann { index, value });
        }
        Ok(NeumannProfile { values })
    }

    pub fn uniform(n: usize, value: f64) -> Result<Self, CoverError> {
        Self::new(vec![value; n])
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// `η = min_v λ(U_v)`; `+∞` for an empty profile.
    pub fn eta(&self) -> f64 {
        self.values.iter().copied().fold(f64::INFINITY, f64::min)
    }
}

/// Neumann value `π²/s²` of an interval of length `s`.
pub fn interval_neumann_value(s: f64) -> f64 {
    (std::f64::consts::PI / s).powi(2)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TransferRow {
    pub k: usize,
    /// `λ_k(𝓛_U)`.
    pub discrete: f64,
    /// `2 λ_k(M) / η`.
    pub bound: f64,
    pub holds: bool,
    /// `discrete / bound`; at most 1 when the inequality holds.
    pub ratio: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TransferReport {
    pub eta: f64,
    pub residual_bound: f64,
    pub rows: Vec<TransferRow>,
    pub all_hold: bool,
    pub max_ratio: f64,
}

/// Compares `λ_k(𝓛_U)` with `2 λ_k(M) / η` for `k = 1..=min(k_max, n − 1)`.
///
/// `continuum[k]` is `λ_k(M)` with `continuum[0] = 0`. A row holds when the
/// discrete value exceeds the bound by no more than the eigensolver residual.
pub fn check_transfer(
    c: &TwoFoldCover,
    continuum: &[f64],
    profile: &NeumannProfile,
    k_max: usize,
) -> Result<TransferReport, CoverError> {
    if profile.values.len() != c.len() {
        return Err(CoverError::ProfileLength { got: profile.values.len(), expected: c.len() });
    }
    let eta = profile.eta();
    if !(eta > 0.0 && eta.is_finite()) {
        return Err(CoverError::BadEta(eta));
    }
    if continuum.len() <= k_max {
        return Err(CoverError::ContinuumTooShort { got: continuum.len(), need: k_max + 1 });
    }
    if let Some(i) = (1..continuum.len()).find(|&i| continuum[i] < continuum[i - 1]) {
        return Err(CoverError::ContinuumNotAscending(i));
    }
    let spectrum = linalg::eigenvalues(&cover_laplacian(c)?, linalg::DEFAULT_TOLERANCE)?;
    let k_top = k_max.min(c.len().saturating_sub(1));
    let rows: Vec<TransferRow> = (1..=k_top)
        .map(|k| {
            let discrete = spectrum.values[k];
            let bound = 2.0 * continuum[k] / eta;
            TransferRow {
                k,
                discrete,
                bound,
                holds: discrete <= bound + spectrum.residual_bound,
                ratio: discrete / bound,
            }
        })
        .collect();
    Ok(TransferReport {
        eta,
        residual_bound: spectrum.residual_bound,
        all_hold: rows.iter().all(|r| r.holds),
        max_ratio: rows.iter().map(|r| r.ratio).fold(0.0, f64::max),
        rows,
    })
}

/// Sub-intervals shorter than this fraction of the total length are treated
/// as rounding artifacts by the coverage sweep and the overlap computation.
const SWEEP_RESOLUTION: f64 = 1e-12;

/// Cover of a circle (or a closed interval) of length `total_length` by
/// arcs `[center − half_width, center + half_width]`.
///
/// On a circle, arcs wrap around and an arc with `2·half_width ≥ total_length`
/// is the whole circle. On an interval, arcs are clipped to `[0, total_length]`.
/// Overlaps are computed exactly from the arc endpoints, and the arcs must
/// cover almost every point exactly twice.
pub fn interval_cover_builder(
    total_length: f64,
    arcs: &[(f64, f64)],
    circle: bool,
) -> Result<TwoFoldCover, CoverError> {
    if !(total_length.is_finite() && total_length > 0.0) {
        return Err(CoverError::InvalidLength(total_length));
    }
    if arcs.is_empty() {
        return Err(CoverError::Empty);
    }
    let segments: Vec<Vec<(f64, f64)>> = arcs
        .iter()
        .enumerate()
        .map(|(index, &(c, h))| arc_segments(index, c, h, total_length, circle))
        .collect::<Result<_, _>>()?;

    let resolution = SWEEP_RESOLUTION * total_length;
    let mut breaks: Vec<f64> = segments.iter().flatten().flat_map(|&(a, b)| [a, b]).collect();
    breaks.extend([0.0, total_length]);
    breaks.sort_by(f64::total_cmp);
    breaks.dedup();
    for w in breaks.windows(2) {
        if w[1] - w[0] <= resolution {
            continue;
        }
        let mid = 0.5 * (w[0] + w[1]);
        let count = segments
            .iter()
            .flatten()
            .filter(|&&(a, b)| a <= mid && mid <= b)
            .count();
        if count != 2 {
            return Err(CoverError::NotTwoFold { point: mid, count });
        }
    }

    let measures: Vec<f64> = segments
        .iter()
        .map(|s| s.iter().map(|(a, b)| b - a).sum())
        .collect();
    let mut xs = Vec::new();
    for i in 0..segments.len() {
        for j in (i + 1)..segments.len() {
            let overlap: f64 = segments[i]
                .iter()
                .flat_map(|&(a, b)| segments[j].iter().map(move |&(c, d)| (b.min(d) - a.max(c)).max(0.0)))
                .sum();
            if overlap > resolution {
                xs.push((i, j, overlap));
            }
        }
    }
    TwoFoldCover::from_measures(&measures, xs)
}

fn arc_segments(
    index: usize,
    center: f64,
    half_width: f64,
    total: f64,
    circle: bool,
) -> Result<Vec<(f64, f64)>, CoverError> {
    let bad = |reason: &str| CoverError::InvalidArc { index, reason: reason.to_string() };
    if !(center.is_finite() && half_width.is_finite()) {
        return Err(bad("non-finite center or half width"));
    }
    if half_width <= 0.0 {
        return Err(bad("half width must be positive"));
    }
    if circle {
        if 2.0 * half_width >= total {
            return Ok(vec![(0.0, total)]);
        }
        let start = (center - half_width).rem_euclid(total);
        let end = start + 2.0 * half_width;
        Ok(if end <= total {
            vec![(start, end)]
        } else {
            vec![(start, total), (0.0, end - total)]
        })
    } else {
        let (a, b) = ((center - half_width).max(0.0), (center + half_width).min(total));
        if b - a <= 0.0 {
            return Err(bad("arc misses the interval"));
        }
        Ok(vec![(a, b)])
    }
}
