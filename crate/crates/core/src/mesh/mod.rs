//! Simplicial meshes in two and three dimensions, their facet-cone cover
//! and dual graph, and Fiedler sweep bipartitioning.

mod cover;
pub mod generate;
mod partition;

pub use cover::{barycentric_cover, boundary_cone_volumes, kappa_epsilon};
pub use partition::{partition_mesh, partition_report, spectral_cut, Partition, PartitionReport, DEFAULT_BALANCE_FLOOR};

use std::collections::HashMap;
use std::fmt::Write as _;

use serde::Serialize;
use thiserror::Error;

use crate::graph::parse_field;
use crate::laplacian::LaplacianError;

/// Simplices with volume below this fraction of `ε^d` are degenerate.
pub const DEGENERACY_TOLERANCE: f64 = 1e-14;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum MeshError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("dimension {0} is not supported; use 2 or 3")]
    UnsupportedDimension(usize),
    #[error("mesh has no simplices")]
    Empty,
    #[error("simplex {simplex} references vertex {vertex} outside the mesh")]
    VertexOutOfRange { simplex: usize, vertex: usize },
    #[error("simplex {simplex} has {got} vertices")]
    SimplexArity { simplex: usize, got: usize },
    #[error("identification references vertex {0} outside the mesh")]
    IdentificationOutOfRange(usize),
    #[error("simplex {0} is degenerate")]
    DegenerateSimplex(usize),
    #[error("facet {0:?} is shared by more than two simplices")]
    NonManifoldFacet(Vec<usize>),
    #[error("need at least two simplices to partition, got {0}")]
    TooSmall(usize),
    #[error("dual graph is disconnected")]
    Disconnected,
    #[error("balance floor {0} must lie in [0, 0.5]")]
    BadBalanceFloor(f64),
    #[error("partition has {got} entries for {expected} simplices")]
    PartitionMismatch { got: usize, expected: usize },
    #[error(transparent)]
    Laplacian(#[from] LaplacianError),
}

/// Two simplices sharing a facet.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FacetAdjacency {
    pub a: usize,
    pub b: usize,
    /// Facet vertices after periodic identification, sorted.
    pub facet: Vec<usize>,
    /// `(d−1)`-dimensional measure of the facet.
    pub measure: f64,
}

/// A `d`-dimensional simplicial mesh, `d ∈ {2, 3}`.
///
/// Periodic meshes identify pairs of vertices; facets are matched after the
/// identification while volumes use the stored coordinates of each simplex.
#[derive(Clone, Debug, PartialEq)]
pub struct SimplicialMesh {
    dim: usize,
    coords: Vec<[f64; 3]>,
    simplices: Vec<Vec<usize>>,
    identifications: Vec<(usize, usize)>,
    volumes: Vec<f64>,
    diameters: Vec<f64>,
    adjacency: Vec<FacetAdjacency>,
    boundary_facets: Vec<usize>,
}

impl SimplicialMesh {
    pub fn new(
        dim: usize,
        coords: Vec<[f64; 3]>,
        simplices: Vec<Vec<usize>>,
        identifications: Vec<(usize, usize)>,
    ) -> Result<Self, MeshError> {
        if dim != 2 && dim != 3 {
            return Err(MeshError::UnsupportedDimension(dim));
        }
        if simplices.is_empty() {
            return Err(MeshError::Empty);
        }
        let nv = coords.len();
        for (i, s) in simplices.iter().enumerate() {
            if s.len() != dim + 1 {
                return Err(MeshError::SimplexArity { simplex: i, got: s.len() });
            }
            if let Some(&v) = s.iter().find(|&&v| v >= nv) {
                return Err(MeshError::VertexOutOfRange { simplex: i, vertex: v });
            }
        }
        let canon = canonical_vertices(nv, &identifications)?;

        let diameters: Vec<f64> = simplices
            .iter()
            .map(|s| {
                let mut d: f64 = 0.0;
                for i in 0..s.len() {
                    for j in (i + 1)..s.len() {
                        d = d.max(distance(&coords[s[i]], &coords[s[j]]));
                    }
                }
                d
            })
            .collect();
        let epsilon = diameters.iter().copied().fold(0.0, f64::max);
        let floor = DEGENERACY_TOLERANCE * epsilon.powi(dim as i32);
        let mut volumes = Vec::with_capacity(simplices.len());
        for (i, s) in simplices.iter().enumerate() {
            let pts: Vec<[f64; 3]> = s.iter().map(|&v| coords[v]).collect();
            let vol = simplex_volume(dim, &pts);
            let mut ids: Vec<usize> = s.iter().map(|&v| canon[v]).collect();
            ids.sort_unstable();
            ids.dedup();
            if !(vol > floor) || ids.len() != s.len() {
                return Err(MeshError::DegenerateSimplex(i));
            }
            volumes.push(vol);
        }

        let mut first_owner: HashMap<Vec<usize>, (usize, bool)> = HashMap::new();
        let mut adjacency = Vec::new();
        for (i, s) in simplices.iter().enumerate() {
            for skip in 0..s.len() {
                let local: Vec<usize> = s.iter().enumerate().filter(|&(j, _)| j != skip).map(|(_, &v)| v).collect();
                let mut key: Vec<usize> = local.iter().map(|&v| canon[v]).collect();
                key.sort_unstable();
                match first_owner.get_mut(&key) {
                    None => {
                        first_owner.insert(key, (i, false));
                    }
                    Some((_, true)) => return Err(MeshError::NonManifoldFacet(key)),
                    Some((owner, paired)) => {
                        *paired = true;
                        let pts: Vec<[f64; 3]> = local.iter().map(|&v| coords[v]).collect();
                        adjacency.push(FacetAdjacency {
                            a: *owner,
                            b: i,
                            facet: key,
                            measure: facet_measure(dim, &pts),
                        });
                    }
                }
            }
        }
        let mut boundary_facets = vec![0; simplices.len()];
        for &(owner, paired) in first_owner.values() {
            if !paired {
                boundary_facets[owner] += 1;
            }
        }
        Ok(SimplicialMesh {
            dim,
            coords,
            simplices,
            identifications,
            volumes,
            diameters,
            adjacency,
            boundary_facets,
        })
    }

    /// Parses the mesh format:
    ///
    /// ```text
    /// d nv ns [periodic np]
    /// x y [z]            (nv lines, d coordinates each)
    /// i j k [l]          (ns lines, d+1 vertex indices each)
    /// a b                (np lines, vertex b is identified with a)
    /// ```
    ///
    /// Blank lines and lines starting with `#` are ignored.
    pub fn parse(text: &str) -> Result<Self, MeshError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (hline, header) = lines.next().ok_or(MeshError::Parse {
            line: 0,
            msg: "empty input".into(),
        })?;
        let head: Vec<&str> = header.split_whitespace().collect();
        let np = match head.len() {
            3 => 0,
            5 if head[3] == "periodic" => field::<usize>(head[4], hline, "identification count")?,
            _ => {
                return Err(MeshError::Parse {
                    line: hline,
                    msg: format!("expected header `d nv ns [periodic np]`, found `{header}`"),
                })
            }
        };
        let dim = field::<usize>(head[0], hline, "dimension")?;
        if dim != 2 && dim != 3 {
            return Err(MeshError::UnsupportedDimension(dim));
        }
        let nv = field::<usize>(head[1], hline, "vertex count")?;
        let ns = field::<usize>(head[2], hline, "simplex count")?;
        let mut next_record = |what: &str, arity: usize| -> Result<(usize, Vec<&str>), MeshError> {
            let (line, text) = lines.next().ok_or(MeshError::Parse {
                line: hline,
                msg: format!("missing {what} line"),
            })?;
            let fields: Vec<&str> = text.split_whitespace().collect();
            if fields.len() != arity {
                return Err(MeshError::Parse {
                    line,
                    msg: format!("expected {arity} fields in {what} line, found `{text}`"),
                });
            }
            Ok((line, fields))
        };
        let mut coords = Vec::with_capacity(nv);
        for _ in 0..nv {
            let (line, f) = next_record("coordinate", dim)?;
            let mut p = [0.0; 3];
            for (slot, s) in p.iter_mut().zip(&f) {
                *slot = field::<f64>(s, line, "coordinate")?;
                if !slot.is_finite() {
                    return Err(MeshError::Parse { line, msg: "non-finite coordinate".into() });
                }
            }
            coords.push(p);
        }
        let mut simplices = Vec::with_capacity(ns);
        for _ in 0..ns {
            let (line, f) = next_record("simplex", dim + 1)?;
            simplices.push(f.iter().map(|s| field::<usize>(s, line, "vertex index")).collect::<Result<_, _>>()?);
        }
        let mut identifications = Vec::with_capacity(np);
        for _ in 0..np {
            let (line, f) = next_record("identification", 2)?;
            identifications.push((field::<usize>(f[0], line, "vertex")?, field::<usize>(f[1], line, "vertex")?));
        }
        if let Some((line, extra)) = lines.next() {
            return Err(MeshError::Parse {
                line,
                msg: format!("unexpected trailing content `{extra}`"),
            });
        }
        Self::new(dim, coords, simplices, identifications)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{} {} {}", self.dim, self.coords.len(), self.simplices.len());
        if !self.identifications.is_empty() {
            let _ = write!(out, " periodic {}", self.identifications.len());
        }
        out.push('\n');
        for p in &self.coords {
            let row: Vec<String> = p[..self.dim].iter().map(|&x| crate::numfmt::format_f64(x)).collect();
            let _ = writeln!(out, "{}", row.join(" "));
        }
        for s in &self.simplices {
            let row: Vec<String> = s.iter().map(usize::to_string).collect();
            let _ = writeln!(out, "{}", row.join(" "));
        }
        for &(a, b) in &self.identifications {
            let _ = writeln!(out, "{a} {b}");
        }
        out
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertex_count(&self) -> usize {
        self.coords.len()
    }

    pub fn simplex_count(&self) -> usize {
        self.simplices.len()
    }

    pub fn simplices(&self) -> &[Vec<usize>] {
        &self.simplices
    }

    pub fn coords(&self) -> &[[f64; 3]] {
        &self.coords
    }

    pub fn volumes(&self) -> &[f64] {
        &self.volumes
    }

    pub fn diameters(&self) -> &[f64] {
        &self.diameters
    }

    /// Facet-adjacent pairs in order of discovery.
    pub fn adjacency(&self) -> &[FacetAdjacency] {
        &self.adjacency
    }

    /// Number of facets of each simplex that lie on the boundary.
    pub fn boundary_facet_counts(&self) -> &[usize] {
        &self.boundary_facets
    }

    pub fn has_boundary(&self) -> bool {
        self.boundary_facets.iter().any(|&c| c > 0)
    }

    pub fn is_periodic(&self) -> bool {
        !self.identifications.is_empty()
    }
}

fn field<T: std::str::FromStr>(s: &str, line: usize, what: &str) -> Result<T, MeshError> {
    parse_field(s, line, what).map_err(|e| match e {
        crate::graph::GraphError::Parse { line, msg } => MeshError::Parse { line, msg },
        other => MeshError::Parse { line, msg: other.to_string() },
    })
}

/// Smallest vertex of each identification class.
fn canonical_vertices(nv: usize, pairs: &[(usize, usize)]) -> Result<Vec<usize>, MeshError> {
    let mut parent: Vec<usize> = (0..nv).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for &(a, b) in pairs {
        for v in [a, b] {
            if v >= nv {
                return Err(MeshError::IdentificationOutOfRange(v));
            }
        }
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra != rb {
            parent[ra.max(rb)] = ra.min(rb);
        }
    }
    Ok((0..nv).map(|v| find(&mut parent, v)).collect())
}

fn sub(a: &[f64; 3], b: &[f64; 3]) -> [f64; 3] {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

fn cross(a: &[f64; 3], b: &[f64; 3]) -> [f64; 3] {
    [a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]]
}

fn norm(a: &[f64; 3]) -> f64 {
    (a[0] * a[0] + a[1] * a[1] + a[2] * a[2]).sqrt()
}

fn distance(a: &[f64; 3], b: &[f64; 3]) -> f64 {
    norm(&sub(a, b))
}

/// `|det(v_1 − v_0, …, v_d − v_0)| / d!`.
fn simplex_volume(dim: usize, p: &[[f64; 3]]) -> f64 {
    let e1 = sub(&p[1], &p[0]);
    let e2 = sub(&p[2], &p[0]);
    if dim == 2 {
        (e1[0] * e2[1] - e1[1] * e2[0]).abs() / 2.0
    } else {
        let e3 = sub(&p[3], &p[0]);
        let c = cross(&e2, &e3);
        (e1[0] * c[0] + e1[1] * c[1] + e1[2] * c[2]).abs() / 6.0
    }
}

fn facet_measure(dim: usize, p: &[[f64; 3]]) -> f64 {
    if dim == 2 {
        distance(&p[0], &p[1])
    } else {
        norm(&cross(&sub(&p[1], &p[0]), &sub(&p[2], &p[0]))) / 2.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const TWO_TRIANGLES: &str = "2 4 2\n0 0\n1 0\n1 1\n0 1\n0 1 2\n0 2 3\n";

    #[test]
    fn unit_square_two_triangles() {
        let m = SimplicialMesh::parse(TWO_TRIANGLES).unwrap();
        assert_eq!(m.volumes(), &[0.5, 0.5]);
        assert_eq!(m.adjacency().len(), 1);
        assert_eq!(m.adjacency()[0].facet, vec![0, 2]);
        assert!((m.adjacency()[0].measure - 2f64.sqrt()).abs() < 1e-15);
        assert_eq!(m.boundary_facet_counts(), &[2, 2]);
    }

    #[test]
    fn right_tetrahedron_volume() {
        let m = SimplicialMesh::parse("3 4 1\n0 0 0\n1 0 0\n0 1 0\n0 0 1\n0 1 2 3\n").unwrap();
        assert!((m.volumes()[0] - 1.0 / 6.0).abs() < 1e-15);
    }

    #[test]
    fn three_triangles_on_one_edge() {
        let text = "2 5 3\n0 0\n1 0\n0.5 1\n0.5 -1\n2 0.5\n0 1 2\n0 1 3\n0 1 4\n";
        assert_eq!(SimplicialMesh::parse(text).unwrap_err(), MeshError::NonManifoldFacet(vec![0, 1]));
    }

    #[test]
    fn degenerate_and_malformed_input() {
        let flat = "2 3 1\n0 0\n1 0\n2 0\n0 1 2\n";
        assert_eq!(SimplicialMesh::parse(flat).unwrap_err(), MeshError::DegenerateSimplex(0));
        assert!(matches!(SimplicialMesh::parse(""), Err(MeshError::Parse { .. })));
        assert!(matches!(SimplicialMesh::parse("2 3 1\n0 0\n1 0\n"), Err(MeshError::Parse { .. })));
        assert!(matches!(
            SimplicialMesh::parse("2 3 1\n0 0\n1 0\n0 1\n0 1 5\n"),
            Err(MeshError::VertexOutOfRange { simplex: 0, vertex: 5 })
        ));
        assert_eq!(SimplicialMesh::parse("4 0 0\n").unwrap_err(), MeshError::UnsupportedDimension(4));
    }

    #[test]
    fn text_round_trip() {
        let m = SimplicialMesh::parse(TWO_TRIANGLES).unwrap();
        assert_eq!(SimplicialMesh::parse(&m.to_text()).unwrap(), m);
    }

    #[test]
    fn periodic_identification_closes_the_strip() {
        // Three unit squares in a row, the left edge identified with the right.
        let mut text = String::from("2 8 6 periodic 2\n");
        for j in 0..2 {
            for i in 0..4 {
                text += &format!("{i} {j}\n");
            }
        }
        for i in 0..3 {
            text += &format!("{} {} {}\n{} {} {}\n", i, i + 1, i + 5, i, i + 5, i + 4);
        }
        text += "0 3\n4 7\n";
        let m = SimplicialMesh::parse(&text).unwrap();
        assert!(m.is_periodic());
        assert_eq!(m.adjacency().len(), 6);
        assert_eq!(m.boundary_facet_counts().iter().sum::<usize>(), 6);
    }
}
