use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("zero vector has no primitive direction")]
    ZeroVector,
    #[error("invalid rational '{0}'")]
    InvalidRational(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("empty point set")]
    EmptyInput,
    #[error("not a polytope: the region is unbounded")]
    Unbounded,
    #[error("polytope is empty")]
    EmptyPolytope,
    #[error("polytope must be full-dimensional (dimension {dim} in R^{ambient})")]
    NotFullDimensional { dim: isize, ambient: usize },
    #[error("polytope is not a lattice polytope")]
    NotLattice,
    #[error("adjunction parameter must be nonnegative, got {0}")]
    NegativeParameter(String),
    #[error("point is not in the cone")]
    NotInCone,
    #[error("height is undefined at the origin")]
    ZeroPoint,
    #[error("vertex cone is not Q-Gorenstein")]
    NotGorenstein,
    #[error("{0} is not a vertex of the polytope")]
    NotAVertex(String),
    #[error("matrix is not unimodular")]
    NotUnimodular,
    #[error("lattice map is not surjective")]
    NotSurjective,
    #[error("{0}")]
    OutOfRange(String),
    #[error("survey too large: {0}")]
    InfeasibleScale(String),
    #[error("invalid document: {0}")]
    Document(String),
    #[error("internal invariant violated: {0}")]
    Invariant(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn parse(text: &str) -> Self {
        Error::InvalidRational(text.to_string())
    }

    pub(crate) fn invariant(msg: impl Into<String>) -> Self {
        Error::Invariant(msg.into())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
