//! Error type shared by every module.

use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A weight that must be even was odd.
    #[error("weight {0} is odd")]
    OddWeight(i64),
    /// An argument is outside the documented domain.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    /// Two operands live in different bases.
    #[error("basis mismatch: {0}")]
    BasisMismatch(String),
    /// A coefficient survived on a positive power of `log q - log q̄`.
    #[error("non-modular residue at 𝕃^{k} D^{d} q^{m} q̄^{n}")]
    NonModularResidue { k: i32, d: u32, m: u32, n: u32 },
    /// A linear system that must be uniquely solvable was not.
    #[error("inconsistent system: {0}")]
    InconsistentSystem(String),
    /// A request exceeds a cost guard.
    #[error("cost guard: {0}")]
    CostGuard(String),
    /// A numeric evaluation was requested outside the convergent regime.
    #[error("out of regime: {0}")]
    OutOfRegime(String),
    /// Requested decimal precision exceeds what double precision can deliver.
    #[error("precision {0} exceeds 15 digits")]
    PrecisionTooHigh(u32),
    /// Inputs to a rank computation were not homogeneous of a common bidegree.
    #[error("inhomogeneous input: {0}")]
    Inhomogeneous(String),
    /// A derivation failed to annihilate `[a,b]`.
    #[error("derivation does not annihilate [a,b]")]
    NotThetaDerivation,
    /// Text could not be parsed.
    #[error("parse error: {0}")]
    Parse(String),
}

/// Result alias.
pub type Result<T> = std::result::Result<T, Error>;
