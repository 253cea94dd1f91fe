use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("malformed rational `{0}`")]
    Rational(String),
    #[error("malformed partition `{0}`")]
    Partition(String),
    #[error("malformed expression `{0}`")]
    Expression(String),
    #[error("malformed JSON: {0}")]
    Json(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuiverError {
    #[error("quiver has a cycle through vertex `{0}`")]
    Cycle(String),
    #[error("arrow {index} has positive degree {deg}")]
    PositiveDegree { index: usize, deg: i64 },
    #[error("arrow {index} refers to unknown vertex `{vertex}`")]
    DanglingEndpoint { index: usize, vertex: String },
    #[error("duplicate vertex `{0}`")]
    DuplicateVertex(String),
    #[error("vector has {got} entries, quiver has {expected} vertices")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("slope of the zero dimension vector")]
    ZeroDimension,
    #[error("quiver is not quasi-smooth (arrow of degree below -1)")]
    NotQuasiSmooth,
    #[error("unknown builtin quiver `{0}`")]
    UnknownBuiltin(String),
}

impl QuiverError {
    /// Stable machine-readable code.
    pub fn code(&self) -> &'static str {
        match self {
            QuiverError::Cycle(_) => "cycle",
            QuiverError::PositiveDegree { .. } => "positive_degree",
            QuiverError::DanglingEndpoint { .. } => "dangling_endpoint",
            QuiverError::DuplicateVertex(_) => "duplicate_vertex",
            QuiverError::DimensionMismatch { .. } => "dimension_mismatch",
            QuiverError::UnknownVertex(_) => "unknown_vertex",
            QuiverError::ZeroDimension => "zero_dimension",
            QuiverError::NotQuasiSmooth => "not_quasi_smooth",
            QuiverError::UnknownBuiltin(_) => "unknown_builtin",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Quiver(#[from] QuiverError),
    #[error("Gram matrix is singular at partition {0}")]
    SingularGram(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("recursion does not determine the pairing with {0}")]
    Underdetermined(String),
}

pub type Result<T> = std::result::Result<T, Error>;
