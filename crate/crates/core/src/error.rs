use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An input lies outside the domain of the operation (negative exponent on a
    /// non-invertible generator, non-unit where a unit is required, bad label).
    #[error("domain error: {0}")]
    Domain(String),
    /// A caller broke an operation contract (incoherent bindings, reused tags).
    #[error("contract error: {0}")]
    Contract(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("invalid object: {0}")]
    InvalidObject(String),
    #[error("parse error: {0}")]
    Parse(String),
    /// A simple factor could not be matched against the catalog, or it is not
    /// absolutely simple over F2.
    #[error("unidentified factor: {fingerprint}")]
    Unidentified { fingerprint: String },
    #[error("lattice not integral: {0}")]
    LatticeNotIntegral(String),
}

pub type Result<T> = std::result::Result<T, Error>;
