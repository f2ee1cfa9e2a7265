use serde::Serialize;

use super::bound::{triangle_geometry, TriangleGeometry};
use super::rotation::{trace_faces, CombinatorialMap, RotationSystem};
use crate::cover::TwoFoldCover;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum EdgeKind {
    Base,
    Cone,
}

/// One edge of the coned multigraph.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ConedEdge {
    pub u: usize,
    pub v: usize,
    pub kind: EdgeKind,
    pub length: f64,
}

/// Outcome of checking the coned map against its defining properties.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ConeInvariants {
    pub coned_faces: usize,
    pub all_faces_triangles: bool,
    pub one_base_edge_per_face: bool,
    pub valence_doubled: bool,
}

impl ConeInvariants {
    pub fn hold(&self) -> bool {
        self.all_faces_triangles && self.one_base_edge_per_face && self.valence_doubled
    }
}

/// A rotation system coned over its faces: one new vertex `v_F` per face,
/// joined to every occurrence of a vertex on the boundary walk of `F`.
///
/// Vertices `0..n` are the base vertices and `n + f` is the cone vertex of
/// face `f`. Darts `0..2E` are the base darts; cone edges follow.
#[derive(Clone, Debug)]
pub struct EmbeddedConedGraph {
    base: RotationSystem,
    faces: Vec<Vec<usize>>,
    coned: CombinatorialMap,
    coned_faces: Vec<Vec<usize>>,
    edges: Vec<ConedEdge>,
    geometry: TriangleGeometry,
}

/// Cones every face of `r`.
///
/// With base darts `x` at a vertex in rotation order, the coned rotation at
/// that vertex is `c_x, x` for each `x`, where `c_x` is the cone dart of the
/// face entered just before leaving along `x`. The rotation at `v_F` lists the
/// reverse cone darts in reversed walk order, so the coned face through base
/// dart `d_i` is the triangle `(d_i, c_{d_{i+1}}, c'_{d_i})`.
pub fn cone_construction(r: &RotationSystem) -> EmbeddedConedGraph {
    let base_map = r.map();
    let n = r.vertex_count();
    let base_darts = r.dart_count();
    let faces = trace_faces(r);
    // Cone dart pair for face occurrence of base dart d: c_d = 2E + 2d at the
    // tail of d, c'_d = 2E + 2d + 1 at v_F.
    let c = |d: usize| base_darts + 2 * d;
    let c_rev = |d: usize| base_darts + 2 * d + 1;
    let total = 3 * base_darts;
    let mut alpha = vec![0; total];
    for d in 0..base_darts {
        alpha[d] = base_map.alpha(d);
        alpha[c(d)] = c_rev(d);
        alpha[c_rev(d)] = c(d);
    }
    let mut rotations: Vec<Vec<usize>> = base_map
        .rotations()
        .iter()
        .map(|rot| rot.iter().flat_map(|&x| [c(x), x]).collect())
        .collect();
    rotations.extend(faces.iter().map(|walk| walk.iter().rev().map(|&d| c_rev(d)).collect()));
    let coned = CombinatorialMap::new(rotations, alpha).expect("coning preserves map validity");
    let coned_faces = coned.trace_faces();

    let dmax = r.max_valence();
    let geometry = triangle_geometry(dmax.max(2)).expect("d_max >= 2");
    let mut edges = Vec::with_capacity(base_darts / 2 + base_darts);
    for d in 0..base_darts {
        if d < base_map.alpha(d) {
            edges.push(ConedEdge {
                u: base_map.tail(d),
                v: base_map.head(d),
                kind: EdgeKind::Base,
                length: 1.0,
            });
        }
    }
    for (f, walk) in faces.iter().enumerate() {
        for &d in walk {
            edges.push(ConedEdge {
                u: base_map.tail(d),
                v: n + f,
                kind: EdgeKind::Cone,
                length: geometry.cone_length,
            });
        }
    }
    EmbeddedConedGraph {
        base: r.clone(),
        faces,
        coned,
        coned_faces,
        edges,
        geometry,
    }
}

impl EmbeddedConedGraph {
    pub fn base(&self) -> &RotationSystem {
        &self.base
    }

    /// Boundary walks of the base embedding; face `f` has cone vertex `n + f`.
    pub fn faces(&self) -> &[Vec<usize>] {
        &self.faces
    }

    pub fn base_vertex_count(&self) -> usize {
        self.base.vertex_count()
    }

    pub fn vertex_count(&self) -> usize {
        self.coned.vertex_count()
    }

    pub fn cone_vertex(&self, face: usize) -> usize {
        self.base.vertex_count() + face
    }

    /// Edges of the coned multigraph: base edges first, then one cone edge
    /// per vertex occurrence on each boundary walk.
    pub fn edges(&self) -> &[ConedEdge] {
        &self.edges
    }

    /// Number of cone edges between base vertex `v` and the cone vertex of
    /// `face`, i.e. the number of times `v` occurs on that boundary walk.
    pub fn cone_multiplicity(&self, v: usize, face: usize) -> usize {
        self.faces[face].iter().filter(|&&d| self.base.tail(d) == v).count()
    }

    /// Faces of the coned map, traced from its rotation system.
    pub fn coned_faces(&self) -> &[Vec<usize>] {
        &self.coned_faces
    }

    pub fn coned_valence(&self, v: usize) -> usize {
        self.coned.rotations()[v].len()
    }

    pub fn is_base_dart(&self, d: usize) -> bool {
        d < self.base.dart_count()
    }

    /// Vertices of coned face `f` as a walk.
    pub fn coned_face_vertices(&self, f: usize) -> Vec<usize> {
        self.coned_faces[f].iter().map(|&d| self.coned.tail(d)).collect()
    }

    pub fn geometry(&self) -> &TriangleGeometry {
        &self.geometry
    }

    pub fn cone_length(&self) -> f64 {
        self.geometry.cone_length
    }

    pub fn check_invariants(&self) -> ConeInvariants {
        let n = self.base.vertex_count();
        ConeInvariants {
            coned_faces: self.coned_faces.len(),
            all_faces_triangles: self.coned_faces.iter().all(|f| f.len() == 3),
            one_base_edge_per_face: self
                .coned_faces
                .iter()
                .all(|f| f.iter().filter(|&&d| self.is_base_dart(d)).count() == 1),
            valence_doubled: (0..n).all(|v| self.coned_valence(v) == 2 * self.base.graph().valence(v)),
        }
    }

    /// Euler genus of the coned map; equals that of the base embedding.
    pub fn coned_genus(&self) -> i64 {
        let v = self.coned.vertex_count() as i64;
        let e = self.coned.dart_count() as i64 / 2;
        let f = self.coned_faces.len() as i64;
        (2 - v + e - f) / 2
    }
}

/// Open stars of the base vertices as a two-fold cover.
///
/// Each coned triangle contains the two base vertices of its base edge, so
/// `μ(𝒮_v)` is the number of coned triangles at `v` times the triangle area
/// and adjacent stars share the two triangles on either side of their edge.
pub fn star_cover(e: &EmbeddedConedGraph) -> TwoFoldCover {
    let n = e.base_vertex_count();
    let area = e.geometry.area;
    let mut triangles_at = vec![0usize; n];
    let mut triangles_on = std::collections::BTreeMap::new();
    for face in &e.coned_faces {
        for &d in face.iter().filter(|&&d| e.is_base_dart(d)) {
            let (u, v) = (e.base.tail(d), e.base.head(d));
            triangles_at[u] += 1;
            triangles_at[v] += 1;
            *triangles_on.entry((u.min(v), u.max(v))).or_insert(0usize) += 1;
        }
    }
    let measures: Vec<f64> = triangles_at.iter().map(|&t| t as f64 * area).collect();
    let xs = triangles_on.into_iter().map(|((u, v), t)| (u, v, t as f64 * area));
    TwoFoldCover::from_measures(&measures, xs).expect("star measures are positive")
}
