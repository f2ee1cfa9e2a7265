//! Rotation systems, face tracing and embedding genus, the cone
//! construction over faces, open-star covers and the genus bound evaluator.

mod bound;
mod cone;
mod families;
mod rotation;

pub use bound::{
    genus_bound_evaluate, subdivided_star, subdivided_star_spectrum, triangle_geometry, GenusBoundReport,
    GenusBoundRow, TriangleGeometry,
};
pub use cone::{cone_construction, star_cover, ConeInvariants, ConedEdge, EdgeKind, EmbeddedConedGraph};
pub use families::{family_by_name, family_generator, Family};
pub use rotation::{euler_genus, trace_faces, walk_vertices, RotationSystem};

use thiserror::Error;

use crate::laplacian::LaplacianError;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum EmbeddingError {
    #[error("embedding needs at least two vertices and one edge")]
    NoEdges,
    #[error("dart {0} is out of range")]
    DartOutOfRange(usize),
    #[error("dart {0} appears in more than one rotation slot")]
    DartRepeated(usize),
    #[error("dart {0} appears in no rotation")]
    DartMissing(usize),
    #[error("involution is not a fixed-point-free pairing at dart {0}")]
    BadInvolution(usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("parallel edges between {0} and {1}")]
    ParallelEdge(usize, usize),
    #[error("graph is not connected")]
    Disconnected,
    #[error("vertex {0} is out of range")]
    VertexOutOfRange(usize),
    #[error("{u} lists {v} as a neighbour but not conversely")]
    Asymmetric { u: usize, v: usize },
    #[error("directed edge {u}->{v} occurs on more than one face")]
    FaceEdgeRepeated { u: usize, v: usize },
    #[error("directed edge {u}->{v} has no reverse on any face")]
    FaceEdgeUnmatched { u: usize, v: usize },
    #[error("faces around vertex {0} do not form a single disc")]
    NotAManifold(usize),
    #[error("Euler characteristic {euler_characteristic} does not give a nonnegative integer genus")]
    NonOrientableArtifact { euler_characteristic: i64 },
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
    #[error("family {family} needs size >= {min}, got {size}")]
    FamilySize { family: &'static str, size: usize, min: usize },
    #[error("cone triangles need d_max >= 2, got {0}")]
    DegenerateValence(usize),
    #[error("k_max = {k_max} must lie in 1..={}", .n.saturating_sub(1))]
    KOutOfRange { k_max: usize, n: usize },
    #[error("malformed rotation JSON: {0}")]
    Json(String),
    #[error(transparent)]
    Laplacian(#[from] LaplacianError),
}
