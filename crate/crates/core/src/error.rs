use thiserror::Error;

/// Errors raised by evaluation, verification and I/O entry points.
#[derive(Debug, Error)]
pub enum Error {
    #[error("Bernoulli degree {n} exceeds table maximum {max}")]
    DegreeOverflow { n: usize, max: usize },

    #[error("pole at {what}")]
    Pole { what: String },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("wrong kernel: {0}")]
    WrongKernel(String),

    #[error("series does not converge: {0}")]
    NonConvergent(String),

    #[error("ill-conditioned near z = 1: |1 - z| = {dist:e} < {min:e}")]
    Conditioning { dist: f64, min: f64 },

    #[error("sigma = {0} is outside the supported range (-1, inf)")]
    OutOfRange(f64),

    #[error("unsupported modulus q = {0}")]
    UnsupportedModulus(u32),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
