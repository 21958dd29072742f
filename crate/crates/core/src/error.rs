use thiserror::Error;

/// Errors raised by the exact-arithmetic kernel and everything built on it.
///
/// `NotDivisible` and `CertificateFailure` indicate internal mathematical
/// failures: a division that theory guarantees to be exact left a remainder,
/// or a produced witness failed its own check. Callers should abort on them.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operands live in different coefficient rings")]
    IncompatibleRings,
    #[error("division is not exact")]
    NotDivisible,
    #[error("zero divisor encountered; modulus has the factor {0}")]
    ZeroDivisor(String),
    #[error("operand must be nonzero")]
    ZeroOperand,
    #[error("element is not a root of unity of order dividing {0}")]
    NotRootOfUnity(u32),
    #[error("polynomial is not squarefree")]
    NotSquarefree,
    #[error("certificate failure: {0}")]
    CertificateFailure(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
