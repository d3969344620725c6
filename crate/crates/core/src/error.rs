use thiserror::Error;

/// Errors raised by the block-invariant computations and their front ends.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unsupported prime ell = 2: the block formulas require an odd prime ell")]
    EvenEll,
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("d = {d} does not divide ell - 1 = {}", .ell - 1)]
    OrderNotDividing { ell: u64, d: u64 },
    #[error("ell = {ell} divides q = {q}")]
    EllDividesQ { ell: u64, q: u64 },
    #[error("inexact division {numerator} / {denominator}")]
    InexactDivision {
        numerator: String,
        denominator: String,
    },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("unknown label {0:?}")]
    UnknownLabel(String),
    #[error("size cap exceeded: {0}")]
    CapExceeded(String),
    #[error("two-path mismatch: closed form gives {closed_form}, class-by-class count gives {proof_path}")]
    CrossCheckMismatch {
        closed_form: String,
        proof_path: String,
    },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
