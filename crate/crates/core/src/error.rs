use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("matrix must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix dimension {0} exceeds the dense limit of {limit}", limit = crate::numerics::MAX_DENSE_DIM)]
    TooLarge(usize),

    #[error("matrix contains non-finite entries")]
    NonFinite,

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("matrix norm {norm} exceeds the exponential limit {limit}")]
    ExpOverflow { norm: f64, limit: f64 },

    #[error("eigensolver failed to converge")]
    EigenFailure,

    #[error("elliptic modulus {0} outside [0, 1]")]
    EllipticDomain(f64),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("momentum {0} outside the open interval (0, pi)")]
    MomentumOutOfRange(f64),

    #[error("Fock space of {modes} modes exceeds the brute-force limit of {limit} modes")]
    FockTooLarge { modes: usize, limit: usize },

    #[error("closed-form spectrum requires mu = 0 (got mu = {0})")]
    NonzeroMu(f64),

    #[error("exceptional point: {0}")]
    ExceptionalPoint(String),

    #[error("singular resonance: {0}")]
    SingularResonance(String),

    #[error("evolution became non-finite at t = {time}")]
    NonFiniteEvolution { time: f64 },

    #[error("empty series")]
    EmptySeries,

    #[error("config error: {0}")]
    Config(String),

    #[error("I/O error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
