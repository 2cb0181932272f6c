use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid dimension n={0}: need n >= {1}")]
    InvalidDimension(usize, usize),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("cap exceeded: {what} = {count} > {cap}")]
    CapExceeded { what: String, count: usize, cap: usize },
    #[error("point is not on the group: {0}")]
    NotOnGroup(String),
    #[error("coefficient domain cannot represent {0}")]
    Coefficient(String),
    #[error("straightening fuel exhausted after {0} steps")]
    FuelExhausted(usize),
    #[error("induction measure did not decrease: {0}")]
    InductionViolation(String),
    #[error("could not seed a generic point after {0} attempts")]
    Seeding(usize),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
