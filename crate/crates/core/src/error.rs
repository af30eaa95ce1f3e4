use thiserror::Error;

/// Errors produced by graph construction, operator assembly, spectra and cuts.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    InvalidVertex { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),

    #[error("invalid generator spec: {0}")]
    InvalidSpec(String),

    #[error("vertex {0} is isolated; normalized operators are undefined")]
    IsolatedVertex(usize),

    #[error("graph has no interior vertices")]
    EmptyInterior,

    #[error("matrix is not symmetric: entry ({row}, {col}) differs from its transpose by {diff:e}")]
    NotSymmetric { row: usize, col: usize, diff: f64 },

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("Jacobi iteration did not converge after {sweeps} sweeps (off-diagonal norm {off_norm:e})")]
    NoConvergence { sweeps: usize, off_norm: f64 },

    #[error("eigenvalue clusters are ambiguous near {eigenvalue}: {detail}")]
    ClusteringAmbiguous { eigenvalue: f64, detail: String },

    #[error("reflection does not commute with the doubled Laplacian")]
    ReflectionMismatch,

    #[error("need at least {min} vertices, got {n}")]
    TooSmall { n: usize, min: usize },

    #[error("graph has {n} vertices, exhaustive search is capped at {max_n}")]
    TooLarge { n: usize, max_n: usize },

    /// The graph is disconnected; `component` is a nonempty proper vertex
    /// set with no edges leaving it, i.e. a cut of measure zero.
    #[error("graph is disconnected (component {component:?} has no outgoing edges)")]
    Disconnected { component: Vec<usize> },

    #[error("cut subset must be nonempty and proper")]
    ImproperSubset,

    #[error("expected a vector of length {expected}, got {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("tolerance must be positive and finite, got {0}")]
    InvalidTolerance(f64),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

impl Error {
    /// Stable short name of the variant, used in CLI error lines.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::InvalidVertex { .. } => "InvalidVertex",
            Error::SelfLoop(_) => "SelfLoop",
            Error::DuplicateEdge(..) => "DuplicateEdge",
            Error::InvalidSpec(_) => "InvalidSpec",
            Error::IsolatedVertex(_) => "IsolatedVertex",
            Error::EmptyInterior => "EmptyInterior",
            Error::NotSymmetric { .. } => "NotSymmetric",
            Error::NotSquare { .. } => "NotSquare",
            Error::NoConvergence { .. } => "NoConvergence",
            Error::ClusteringAmbiguous { .. } => "ClusteringAmbiguous",
            Error::ReflectionMismatch => "ReflectionMismatch",
            Error::TooSmall { .. } => "TooSmall",
            Error::TooLarge { .. } => "TooLarge",
            Error::Disconnected { .. } => "Disconnected",
            Error::ImproperSubset => "ImproperSubset",
            Error::LengthMismatch { .. } => "LengthMismatch",
            Error::InvalidTolerance(_) => "InvalidTolerance",
            Error::Parse { .. } => "ParseError",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
