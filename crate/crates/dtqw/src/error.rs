//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("layer {layer} has {found} nodes, expected {expected}")]
    LayerSizeMismatch {
        layer: usize,
        expected: usize,
        found: usize,
    },
    #[error("interlayer edge set pairs layer {0} with itself")]
    SelfPairing(usize),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("vertex {0} is isolated (degree 0)")]
    IsolatedVertex(usize),
    #[error("coin at vertex {vertex} is not unitary (residual {residual:.3e})")]
    NonUnitaryCoin { vertex: usize, residual: f64 },
    #[error("vertices {0} and {1} are not adjacent")]
    NotAdjacent(usize, usize),
    #[error("vertex {vertex} has degree {degree}, need at least 2")]
    DegreeTooSmall { vertex: usize, degree: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("state norm {norm} outside tolerance of 1")]
    NonNormalizedInput { norm: f64 },
    #[error("transition matrix row {row} sums to {sum}, not 1")]
    NotStochastic { row: usize, sum: f64 },
    #[error("positive transition probability ({from}, {to}) on a non-edge")]
    UnsupportedTransition { from: usize, to: usize },
    #[error("layer membership covers {found} nodes, expected {expected}")]
    MembershipMismatch { expected: usize, found: usize },
    #[error("sum-form estimate undefined: return probabilities sum to zero")]
    UndefinedEstimate,
    #[error("series of length {len} too short, need at least {min}")]
    SeriesTooShort { len: usize, min: usize },
    #[error("config error at `{field}`: {message}")]
    Config { field: String, message: String },
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn config(field: &str, message: impl Into<String>) -> Self {
        Error::Config {
            field: field.to_string(),
            message: message.into(),
        }
    }

    /// True for errors caused by bad user input (config files, parameters)
    /// rather than by a failure at run time. The CLI maps these to exit
    /// code 2, everything else to 3.
    pub fn is_config_error(&self) -> bool {
        !matches!(self, Error::Io(_))
    }
}
