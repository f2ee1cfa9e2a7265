//! Undirected graphs with nonnegative edge weights.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GraphError {
    #[error("edge ({u}, {v}) references a vertex outside 0..{n}")]
    VertexOutOfRange { u: usize, v: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("edge ({u}, {v}) has invalid weight {w}")]
    InvalidWeight { u: usize, v: usize, w: f64 },
    #[error("edge ({u}, {v}) has weight {w}; the Cartesian product needs unit weights")]
    WeightedInput { u: usize, v: usize, w: f64 },
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub w: f64,
}

/// Simple undirected graph on vertices `0..n` with weights `w ≥ 0`.
///
/// Parallel input edges are merged by summing their weights, so the stored
/// edge list is simple and sorted by `(min(u,v), max(u,v))`.
#[derive(Clone, Debug, PartialEq)]
pub struct WeightedGraph {
    n: usize,
    edges: Vec<Edge>,
    adjacency: Vec<Vec<(usize, f64)>>,
}

impl WeightedGraph {
    pub fn new<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize, f64)>,
    {
        let mut merged: BTreeMap<(usize, usize), f64> = BTreeMap::new();
        for (u, v, w) in edges {
            if u >= n || v >= n {
                return Err(GraphError::VertexOutOfRange { u, v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if !(w >= 0.0) || !w.is_finite() {
                return Err(GraphError::InvalidWeight { u, v, w });
            }
            *merged.entry((u.min(v), u.max(v))).or_insert(0.0) += w;
        }
        let edges: Vec<Edge> = merged.into_iter().map(|((u, v), w)| Edge { u, v, w }).collect();
        let mut adjacency = vec![Vec::new(); n];
        for e in &edges {
            adjacency[e.u].push((e.v, e.w));
            adjacency[e.v].push((e.u, e.w));
        }
        for list in &mut adjacency {
            list.sort_by_key(|&(x, _)| x);
        }
        Ok(WeightedGraph { n, edges, adjacency })
    }

    pub fn unweighted<I>(n: usize, pairs: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        Self::new(n, pairs.into_iter().map(|(u, v)| (u, v, 1.0)))
    }

    pub fn empty(n: usize) -> Self {
        WeightedGraph {
            n,
            edges: Vec::new(),
            adjacency: vec![Vec::new(); n],
        }
    }

    pub fn path(n: usize) -> Self {
        Self::unweighted(n, (1..n).map(|i| (i - 1, i))).expect("path is valid")
    }

    /// Cycle on `n ≥ 3` vertices; smaller `n` gives the path.
    pub fn cycle(n: usize) -> Self {
        if n < 3 {
            return Self::path(n);
        }
        Self::unweighted(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle is valid")
    }

    /// Star `K_{1,d}` with center `0`.
    pub fn star(d: usize) -> Self {
        Self::unweighted(d + 1, (1..=d).map(|i| (0, i))).expect("star is valid")
    }

    pub fn complete(n: usize) -> Self {
        Self::unweighted(n, (0..n).flat_map(|i| ((i + 1)..n).map(move |j| (i, j))))
            .expect("complete graph is valid")
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn neighbors(&self, v: usize) -> &[(usize, f64)] {
        &self.adjacency[v]
    }

    pub fn weight(&self, u: usize, v: usize) -> Option<f64> {
        self.adjacency[u]
            .binary_search_by_key(&v, |&(x, _)| x)
            .ok()
            .map(|i| self.adjacency[u][i].1)
    }

    /// Weighted degree `d_v^ω = Σ_{u∼v} w(u, v)`.
    pub fn degree(&self, v: usize) -> f64 {
        self.adjacency[v].iter().map(|&(_, w)| w).sum()
    }

    pub fn degrees(&self) -> Vec<f64> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    /// Number of incident edges.
    pub fn valence(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn max_valence(&self) -> usize {
        (0..self.n).map(|v| self.valence(v)).max().unwrap_or(0)
    }

    pub fn min_valence(&self) -> usize {
        (0..self.n).map(|v| self.valence(v)).min().unwrap_or(0)
    }

    pub fn is_unweighted(&self) -> bool {
        self.edges.iter().all(|e| e.w == 1.0)
    }

    /// Component label per vertex, labels in order of first appearance.
    pub fn components(&self) -> Vec<usize> {
        let mut label = vec![usize::MAX; self.n];
        let mut next = 0;
        let mut stack = Vec::new();
        for s in 0..self.n {
            if label[s] != usize::MAX {
                continue;
            }
            label[s] = next;
            stack.push(s);
            while let Some(x) = stack.pop() {
                for &(y, w) in &self.adjacency[x] {
                    if w > 0.0 && label[y] == usize::MAX {
                        label[y] = next;
                        stack.push(y);
                    }
                }
            }
            next += 1;
        }
        label
    }

    pub fn component_count(&self) -> usize {
        self.components().into_iter().max().map_or(0, |m| m + 1)
    }

    /// Connected through positive-weight edges (the empty graph is not).
    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.component_count() == 1
    }

    /// Disjoint union, `other` relabeled after `self`.
    pub fn disjoint_union(&self, other: &WeightedGraph) -> WeightedGraph {
        let shift = self.n;
        let edges = self
            .edges
            .iter()
            .map(|e| (e.u, e.v, e.w))
            .chain(other.edges.iter().map(|e| (e.u + shift, e.v + shift, e.w)));
        WeightedGraph::new(self.n + other.n, edges).expect("union of valid graphs")
    }

    /// Multiplies every weight by `factor > 0`.
    pub fn scaled(&self, factor: f64) -> Result<WeightedGraph, GraphError> {
        WeightedGraph::new(self.n, self.edges.iter().map(|e| (e.u, e.v, e.w * factor)))
    }

    /// Parses the edge-list format: a header `n m` followed by `m` lines
    /// `u v [w]` (0-indexed, weight defaults to 1). Blank lines and lines
    /// starting with `#` are skipped.
    pub fn parse_edge_list(text: &str) -> Result<Self, GraphError> {
        let (n, records) = parse_edge_records(text, "w")?;
        WeightedGraph::new(n, records.into_iter().map(|(u, v, w)| (u, v, w.unwrap_or(1.0))))
    }

    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.edges.len());
        for e in &self.edges {
            let _ = writeln!(out, "{} {} {}", e.u, e.v, crate::numfmt::format_f64(e.w));
        }
        out
    }
}

/// Header `n m` and `m` records `u v [x]` of the edge-list format.
pub(crate) fn parse_edge_records(
    text: &str,
    third: &str,
) -> Result<(usize, Vec<(usize, usize, Option<f64>)>), GraphError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (hline, header) = lines.next().ok_or(GraphError::Parse {
        line: 0,
        msg: "empty input".into(),
    })?;
    let head: Vec<&str> = header.split_whitespace().collect();
    if head.len() != 2 {
        return Err(GraphError::Parse {
            line: hline,
            msg: format!("expected header `n m`, found `{header}`"),
        });
    }
    let n = parse_field::<usize>(head[0], hline, "vertex count")?;
    let m = parse_field::<usize>(head[1], hline, "edge count")?;
    let mut records = Vec::with_capacity(m);
    for _ in 0..m {
        let (line, text) = lines.next().ok_or(GraphError::Parse {
            line: hline,
            msg: format!("expected {m} edge lines, found {}", records.len()),
        })?;
        let fields: Vec<&str> = text.split_whitespace().collect();
        if fields.len() != 2 && fields.len() != 3 {
            return Err(GraphError::Parse {
                line,
                msg: format!("expected `u v [{third}]`, found `{text}`"),
            });
        }
        let u = parse_field::<usize>(fields[0], line, "vertex")?;
        let v = parse_field::<usize>(fields[1], line, "vertex")?;
        let x = fields.get(2).map(|f| parse_field::<f64>(f, line, third)).transpose()?;
        records.push((u, v, x));
    }
    if let Some((line, extra)) = lines.next() {
        return Err(GraphError::Parse {
            line,
            msg: format!("unexpected trailing content `{extra}`"),
        });
    }
    Ok((n, records))
}

pub(crate) fn parse_field<T: std::str::FromStr>(
    s: &str,
    line: usize,
    what: &str,
) -> Result<T, GraphError> {
    s.parse::<T>().map_err(|_| GraphError::Parse {
        line,
        msg: format!("invalid {what} `{s}`"),
    })
}

/// Cartesian product `g1 □ g2` of unweighted graphs.
///
/// Vertex `(a, b)` is numbered `a * g2.n() + b`.
pub fn cartesian_product(g1: &WeightedGraph, g2: &WeightedGraph) -> Result<WeightedGraph, GraphError> {
    for g in [g1, g2] {
        if let Some(e) = g.edges.iter().find(|e| e.w != 1.0) {
            return Err(GraphError::WeightedInput { u: e.u, v: e.v, w: e.w });
        }
    }
    let n2 = g2.n;
    let mut edges = Vec::new();
    for a in 0..g1.n {
        for e in &g2.edges {
            edges.push((a * n2 + e.u, a * n2 + e.v));
        }
    }
    for e in &g1.edges {
        for b in 0..n2 {
            edges.push((e.u * n2 + b, e.v * n2 + b));
        }
    }
    WeightedGraph::unweighted(g1.n * n2, edges)
}
