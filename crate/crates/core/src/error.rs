use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    #[error("length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("degenerate matrix: pivot {pivot:e} below threshold at column {column}")]
    DegenerateMatrix { column: usize, pivot: f64 },
    #[error("degenerate bilinear form G: {0}")]
    DegenerateForm(String),
    #[error("isotropic vector: {0}")]
    IsotropicVector(String),
    #[error("isotropic direction encountered while building an orthonormal basis")]
    IsotropicDirection,
    #[error("sampling exhausted after {0} attempts")]
    SamplingExhausted(usize),
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("unknown root system family: {0}")]
    UnknownFamily(String),
    #[error("invariant violation: {0}")]
    InvariantViolation(String),
    #[error("collinearity collision between entries {0} and {1} after projection")]
    CollinearityCollision(usize, usize),
    #[error("vector {0} does not lie in the hyperplane")]
    VectorOffPlane(usize),
    #[error("point lies on the hyperplane of entry {0}")]
    OnHyperplane(usize),
    #[error("wrong configuration kind: expected {expected}")]
    WrongKind { expected: &'static str },
    #[error("plane tests disagree on plane {plane}: {detail}")]
    CrossCheckDisagreement { plane: usize, detail: String },
    #[error("sampling oracle disagrees with plane verdict at pivot {pivot}, s = {order}")]
    OracleDisagreement { pivot: usize, order: u32 },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unknown catalog name: {0}")]
    UnknownCatalogName(String),
}
