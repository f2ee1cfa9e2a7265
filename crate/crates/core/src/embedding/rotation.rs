use std::collections::{HashMap, HashSet};

use serde::{Deserialize, Serialize};

use super::EmbeddingError;
use crate::graph::WeightedGraph;

/// Darts with a vertex rotation `σ` and an edge involution `α`. Parallel
/// edges are allowed; self-loops are not.
#[derive(Clone, Debug, PartialEq)]
pub(crate) struct CombinatorialMap {
    rotations: Vec<Vec<usize>>,
    vertex_of: Vec<usize>,
    alpha: Vec<usize>,
    sigma: Vec<usize>,
}

impl CombinatorialMap {
    pub(crate) fn new(rotations: Vec<Vec<usize>>, alpha: Vec<usize>) -> Result<Self, EmbeddingError> {
        let darts = alpha.len();
        let mut vertex_of = vec![usize::MAX; darts];
        let mut sigma = vec![usize::MAX; darts];
        for (v, rot) in rotations.iter().enumerate() {
            for (i, &d) in rot.iter().enumerate() {
                if d >= darts {
                    return Err(EmbeddingError::DartOutOfRange(d));
                }
                if vertex_of[d] != usize::MAX {
                    return Err(EmbeddingError::DartRepeated(d));
                }
                vertex_of[d] = v;
                sigma[d] = rot[(i + 1) % rot.len()];
            }
        }
        if let Some(d) = vertex_of.iter().position(|&v| v == usize::MAX) {
            return Err(EmbeddingError::DartMissing(d));
        }
        for d in 0..darts {
            let a = alpha[d];
            if a >= darts || a == d || alpha[a] != d {
                return Err(EmbeddingError::BadInvolution(d));
            }
            if vertex_of[a] == vertex_of[d] {
                return Err(EmbeddingError::SelfLoop(vertex_of[d]));
            }
        }
        Ok(CombinatorialMap {
            rotations,
            vertex_of,
            alpha,
            sigma,
        })
    }

    pub(crate) fn vertex_count(&self) -> usize {
        self.rotations.len()
    }

    pub(crate) fn dart_count(&self) -> usize {
        self.alpha.len()
    }

    pub(crate) fn rotations(&self) -> &[Vec<usize>] {
        &self.rotations
    }

    pub(crate) fn alpha(&self, d: usize) -> usize {
        self.alpha[d]
    }

    pub(crate) fn sigma(&self, d: usize) -> usize {
        self.sigma[d]
    }

    pub(crate) fn tail(&self, d: usize) -> usize {
        self.vertex_of[d]
    }

    pub(crate) fn head(&self, d: usize) -> usize {
        self.vertex_of[self.alpha[d]]
    }

    /// Face cycles of `φ = σ ∘ α`, each starting at its smallest dart, in
    /// order of that dart.
    pub(crate) fn trace_faces(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.dart_count()];
        let mut faces = Vec::new();
        for start in 0..self.dart_count() {
            if seen[start] {
                continue;
            }
            let mut walk = Vec::new();
            let mut d = start;
            while !seen[d] {
                seen[d] = true;
                walk.push(d);
                d = self.sigma[self.alpha[d]];
            }
            faces.push(walk);
        }
        faces
    }
}

/// Cyclic orders of darts around the vertices of a simple connected graph,
/// encoding a cellular embedding in an orientable surface.
///
/// Dart `d` leaves [`tail`](Self::tail)`(d)` and its reverse is
/// [`alpha`](Self::alpha)`(d)`. The face following `d` continues with
/// `σ(α(d))`, the successor of the reverse dart in the rotation at the head.
#[derive(Clone, Debug, PartialEq)]
pub struct RotationSystem {
    map: CombinatorialMap,
    graph: WeightedGraph,
}

#[derive(Serialize, Deserialize)]
struct RotationFile {
    rotations: Vec<Vec<usize>>,
    involution: Vec<[usize; 2]>,
}

impl RotationSystem {
    /// `rotations[v]` lists the darts at `v` in cyclic order; `involution`
    /// pairs every dart with its reverse.
    pub fn new(rotations: Vec<Vec<usize>>, involution: &[(usize, usize)]) -> Result<Self, EmbeddingError> {
        let darts: usize = rotations.iter().map(Vec::len).sum();
        let mut alpha = vec![usize::MAX; darts];
        for &(a, b) in involution {
            for d in [a, b] {
                if d >= darts {
                    return Err(EmbeddingError::DartOutOfRange(d));
                }
                if alpha[d] != usize::MAX {
                    return Err(EmbeddingError::BadInvolution(d));
                }
            }
            if a == b {
                return Err(EmbeddingError::BadInvolution(a));
            }
            alpha[a] = b;
            alpha[b] = a;
        }
        if let Some(d) = alpha.iter().position(|&x| x == usize::MAX) {
            return Err(EmbeddingError::BadInvolution(d));
        }
        Self::from_map(CombinatorialMap::new(rotations, alpha)?)
    }

    fn from_map(map: CombinatorialMap) -> Result<Self, EmbeddingError> {
        if map.vertex_count() < 2 || map.dart_count() == 0 {
            return Err(EmbeddingError::NoEdges);
        }
        let mut seen = HashSet::new();
        let mut edges = Vec::with_capacity(map.dart_count() / 2);
        for d in 0..map.dart_count() {
            let (u, v) = (map.tail(d), map.head(d));
            if u < v {
                if !seen.insert((u, v)) {
                    return Err(EmbeddingError::ParallelEdge(u, v));
                }
                edges.push((u, v));
            }
        }
        let graph = WeightedGraph::unweighted(map.vertex_count(), edges).expect("validated darts form a simple graph");
        if !graph.is_connected() {
            return Err(EmbeddingError::Disconnected);
        }
        Ok(RotationSystem { map, graph })
    }

    /// Rotation system from the cyclic order of neighbours at each vertex.
    pub fn from_neighbor_orders(orders: &[Vec<usize>]) -> Result<Self, EmbeddingError> {
        let n = orders.len();
        let mut dart_of = HashMap::new();
        let mut rotations = Vec::with_capacity(n);
        let mut next = 0;
        for (v, nbrs) in orders.iter().enumerate() {
            let mut rot = Vec::with_capacity(nbrs.len());
            for &u in nbrs {
                if u >= n {
                    return Err(EmbeddingError::VertexOutOfRange(u));
                }
                if u == v {
                    return Err(EmbeddingError::SelfLoop(v));
                }
                if dart_of.insert((v, u), next).is_some() {
                    return Err(EmbeddingError::ParallelEdge(v.min(u), v.max(u)));
                }
                rot.push(next);
                next += 1;
            }
            rotations.push(rot);
        }
        let mut alpha = vec![0; next];
        for (&(v, u), &d) in &dart_of {
            alpha[d] = *dart_of
                .get(&(u, v))
                .ok_or(EmbeddingError::Asymmetric { u: v, v: u })?;
        }
        Self::from_map(CombinatorialMap::new(rotations, alpha)?)
    }

    /// Rotation system whose faces are the given closed vertex walks.
    ///
    /// Every directed edge must occur exactly once over all walks, and the
    /// faces around each vertex must close up into a single cycle.
    pub fn from_oriented_faces(n: usize, faces: &[Vec<usize>]) -> Result<Self, EmbeddingError> {
        let mut dart_of: HashMap<(usize, usize), usize> = HashMap::new();
        let mut tails = Vec::new();
        for face in faces {
            for i in 0..face.len() {
                let (u, v) = (face[i], face[(i + 1) % face.len()]);
                if u >= n || v >= n {
                    return Err(EmbeddingError::VertexOutOfRange(u.max(v)));
                }
                if u == v {
                    return Err(EmbeddingError::SelfLoop(u));
                }
                if dart_of.insert((u, v), tails.len()).is_some() {
                    return Err(EmbeddingError::FaceEdgeRepeated { u, v });
                }
                tails.push(u);
            }
        }
        let darts = tails.len();
        let mut alpha = vec![0; darts];
        for (&(u, v), &d) in &dart_of {
            alpha[d] = *dart_of.get(&(v, u)).ok_or(EmbeddingError::FaceEdgeUnmatched { u, v })?;
        }
        // In a face ..., u, v, w, ... the rotation at v sends v→u to v→w.
        let mut sigma = vec![usize::MAX; darts];
        for face in faces {
            let k = face.len();
            for i in 0..k {
                let (u, v, w) = (face[i], face[(i + 1) % k], face[(i + 2) % k]);
                sigma[dart_of[&(v, u)]] = dart_of[&(v, w)];
            }
        }
        let mut at_vertex = vec![Vec::new(); n];
        for (d, &t) in tails.iter().enumerate() {
            at_vertex[t].push(d);
        }
        let mut rotations = Vec::with_capacity(n);
        for (v, darts_v) in at_vertex.iter().enumerate() {
            let Some(&first) = darts_v.iter().min() else {
                rotations.push(Vec::new());
                continue;
            };
            let mut rot = vec![first];
            let mut d = sigma[first];
            while d != first {
                rot.push(d);
                d = sigma[d];
            }
            if rot.len() != darts_v.len() {
                return Err(EmbeddingError::NotAManifold(v));
            }
            rotations.push(rot);
        }
        Self::from_map(CombinatorialMap::new(rotations, alpha)?)
    }

    pub fn from_json(text: &str) -> Result<Self, EmbeddingError> {
        let file: RotationFile = serde_json::from_str(text).map_err(|e| EmbeddingError::Json(e.to_string()))?;
        let pairs: Vec<(usize, usize)> = file.involution.iter().map(|p| (p[0], p[1])).collect();
        Self::new(file.rotations, &pairs)
    }

    pub fn to_json(&self) -> String {
        let involution = (0..self.dart_count())
            .filter(|&d| d < self.alpha(d))
            .map(|d| [d, self.alpha(d)])
            .collect();
        crate::numfmt::to_json(&RotationFile {
            rotations: self.map.rotations().to_vec(),
            involution,
        })
    }

    pub(crate) fn map(&self) -> &CombinatorialMap {
        &self.map
    }

    pub fn graph(&self) -> &WeightedGraph {
        &self.graph
    }

    pub fn vertex_count(&self) -> usize {
        self.map.vertex_count()
    }

    pub fn edge_count(&self) -> usize {
        self.map.dart_count() / 2
    }

    pub fn dart_count(&self) -> usize {
        self.map.dart_count()
    }

    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.map.rotations()[v]
    }

    pub fn alpha(&self, d: usize) -> usize {
        self.map.alpha(d)
    }

    pub fn sigma(&self, d: usize) -> usize {
        self.map.sigma(d)
    }

    pub fn tail(&self, d: usize) -> usize {
        self.map.tail(d)
    }

    pub fn head(&self, d: usize) -> usize {
        self.map.head(d)
    }

    /// Cyclic order of neighbours at `v`.
    pub fn neighbor_order(&self, v: usize) -> Vec<usize> {
        self.rotation(v).iter().map(|&d| self.head(d)).collect()
    }

    pub fn max_valence(&self) -> usize {
        self.graph.max_valence()
    }
}

/// Boundary walks of the faces, as dart sequences.
pub fn trace_faces(r: &RotationSystem) -> Vec<Vec<usize>> {
    r.map.trace_faces()
}

/// Vertex sequence of a boundary walk.
pub fn walk_vertices(r: &RotationSystem, walk: &[usize]) -> Vec<usize> {
    walk.iter().map(|&d| r.tail(d)).collect()
}

/// Genus `g` with `V − E + F = 2 − 2g` for the traced faces.
pub fn euler_genus(r: &RotationSystem) -> Result<usize, EmbeddingError> {
    let faces = trace_faces(r).len() as i64;
    let twice = 2 - r.vertex_count() as i64 + r.edge_count() as i64 - faces;
    if twice < 0 || twice % 2 != 0 {
        return Err(EmbeddingError::NonOrientableArtifact { euler_characteristic: 2 - twice });
    }
    Ok((twice / 2) as usize)
}
