use spectral_transfer::cover::CoverError;
use spectral_transfer::embedding::EmbeddingError;
use spectral_transfer::graph::GraphError;
use spectral_transfer::laplacian::LaplacianError;
use spectral_transfer::mesh::MeshError;
use spectral_transfer::metric::MetricError;
use thiserror::Error;

/// Failures of a subcommand, each with its exit code.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("input: {0}")]
    Input(String),
    #[error("parse: {0}")]
    Parse(String),
    #[error("solver: {0}")]
    Solver(String),
    #[error("not length-balanced: {0}")]
    NotLengthBalanced(String),
    #[error("degenerate mesh: {0}")]
    DegenerateMesh(String),
    #[error("output: {0}")]
    Output(String),
}

impl CliError {
    pub fn code(&self) -> u8 {
        match self {
            CliError::Output(_) => 1,
            CliError::Usage(_) | CliError::Input(_) | CliError::Parse(_) => 2,
            CliError::Solver(_) => 3,
            CliError::NotLengthBalanced(_) => 4,
            CliError::DegenerateMesh(_) => 5,
        }
    }

    /// `error[N]: message` on a single line.
    pub fn line(&self) -> String {
        let msg = self.to_string().replace(['\n', '\r'], " ");
        format!("error[{}]: {msg}", self.code())
    }
}

impl From<GraphError> for CliError {
    fn from(e: GraphError) -> Self {
        CliError::Parse(e.to_string())
    }
}

impl From<LaplacianError> for CliError {
    fn from(e: LaplacianError) -> Self {
        CliError::Solver(e.to_string())
    }
}

impl From<CoverError> for CliError {
    fn from(e: CoverError) -> Self {
        match e {
            CoverError::Linalg(_) | CoverError::IsolatedCell(_) => CliError::Solver(e.to_string()),
            _ => CliError::Parse(e.to_string()),
        }
    }
}

impl From<EmbeddingError> for CliError {
    fn from(e: EmbeddingError) -> Self {
        match e {
            EmbeddingError::Laplacian(_) => CliError::Solver(e.to_string()),
            EmbeddingError::KOutOfRange { .. } => CliError::Usage(e.to_string()),
            _ => CliError::Parse(e.to_string()),
        }
    }
}

impl From<MetricError> for CliError {
    fn from(e: MetricError) -> Self {
        match e {
            MetricError::NotLengthBalanced { .. } => CliError::NotLengthBalanced(e.to_string()),
            MetricError::Linalg(_) | MetricError::Laplacian(_) | MetricError::RootBracketFailure { .. } => {
                CliError::Solver(e.to_string())
            }
            MetricError::KOutOfRange { .. } | MetricError::BadLevel | MetricError::BadBeta(_) => {
                CliError::Usage(e.to_string())
            }
            _ => CliError::Parse(e.to_string()),
        }
    }
}

impl From<MeshError> for CliError {
    fn from(e: MeshError) -> Self {
        match e {
            MeshError::Empty
            | MeshError::DegenerateSimplex(_)
            | MeshError::NonManifoldFacet(_)
            | MeshError::TooSmall(_)
            | MeshError::Disconnected => CliError::DegenerateMesh(e.to_string()),
            MeshError::Laplacian(_) | MeshError::PartitionMismatch { .. } => CliError::Solver(e.to_string()),
            MeshError::BadBalanceFloor(_) => CliError::Usage(e.to_string()),
            _ => CliError::Parse(e.to_string()),
        }
    }
}
