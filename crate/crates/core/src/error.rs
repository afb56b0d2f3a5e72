use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("cross ratio is degenerate: {0}")]
    DegenerateCrossRatio(&'static str),

    #[error("point value must be finite, got {0}")]
    NonFinitePoint(f64),

    #[error("matrix must have finite entries and positive determinant (det = {det})")]
    InvalidMatrix { det: f64 },

    #[error("element is not hyperbolic: |tr| = {trace_abs} <= 2")]
    NotHyperbolic { trace_abs: f64 },

    #[error("coordinate {name} = {value} must be strictly positive and finite")]
    NonPositiveCoordinate { name: String, value: f64 },

    #[error("holonomy is not hyperbolic: |tr(f2)| = {trace_abs} must exceed 2")]
    DegenerateHolonomy { trace_abs: f64 },

    #[error("endpoint ordering x2 < x1 < x3 < 0 < 1 < x4 violated: {0}")]
    EndpointOrdering(String),

    #[error("twist parameter must be finite, got {0}")]
    NonFiniteTwist(f64),

    #[error("result out of floating-point range: {0}")]
    Range(String),

    #[error("surface needs at least 4 coordinates, got {0}")]
    SurfaceTooSmall(usize),

    #[error("invalid annulus embedding: {0}")]
    InvalidEmbedding(String),

    #[error("unknown twist method `{0}` (expected one of: closed, p-form, oracle)")]
    UnknownMethod(String),

    #[error("invalid projection `{0}` (expected Xi,Xj or logXi,logXj with i, j in 1..=4)")]
    InvalidProjection(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
