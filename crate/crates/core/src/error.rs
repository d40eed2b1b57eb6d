use thiserror::Error;

/// Errors raised by the numerical kernels, the channel machinery and the
/// file-format layer.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("matrix is not Hermitian (max |H - H^dagger| = {0:e})")]
    NotHermitian(f64),

    #[error("matrix is not positive semidefinite (min eigenvalue {0:e})")]
    NotPsd(f64),

    #[error("trace is not one (got {0})")]
    TraceNotOne(f64),

    #[error("non-finite matrix entry at ({0}, {1})")]
    NonFinite(usize, usize),

    #[error("invalid state: {0}")]
    InvalidState(String),

    #[error("invalid spin: 2j = {0} is not a nonnegative integer")]
    InvalidSpin(f64),

    #[error("group mismatch: {0}")]
    GroupMismatch(String),

    #[error("invalid group table: {0}")]
    InvalidGroup(String),

    #[error("not a representation: {0}")]
    NotRepresentation(String),

    #[error("Kraus operators are not trace preserving (max completeness deviation {0:e})")]
    NotTracePreserving(f64),

    #[error("invalid dilation: {0}")]
    InvalidDilation(String),

    #[error("invalid order s = {0}")]
    InvalidOrder(f64),

    #[error("state is symmetric under the generator; the bound is infinite")]
    ZeroAsymmetry,

    #[error("state is not pure (largest eigenvalue {0})")]
    NotPure(f64),

    #[error("numerical consistency failure: {0}")]
    Numerical(String),

    #[error("unknown instance: {0}")]
    UnknownInstance(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// True for errors that come from inconsistent numerics rather than from
    /// malformed or invalid input.
    pub fn is_numerical(&self) -> bool {
        matches!(self, Error::Numerical(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
