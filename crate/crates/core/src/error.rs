use thiserror::Error;

/// Errors raised by constructions and checks.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("structures are defined over different Hopf algebras: {0}")]
    HopfMismatch(String),
    #[error("comodule coalgebra compatibility fails: {0}")]
    CompatibilityFailure(String),
    #[error("coefficients are not stable anti-Yetter-Drinfeld: {0}")]
    NotSayd(String),
    #[error("module is not cyclic: {0}")]
    NotCyclic(String),
    #[error("identity fails: {0}")]
    IdentityFailure(String),
    #[error("pairing is not equivariant: {0}")]
    NotEquivariant(String),
    #[error("map does not descend: {0}")]
    DescentFailure(String),
    #[error("hypothesis fails: {0}")]
    HypothesisFailure(String),
    #[error("not a cocycle: {0}")]
    NotCocycle(String),
    #[error("computations disagree: {0}")]
    AgreementFailure(String),
    #[error("degree {degree} is outside the stable range 0..={stable}")]
    OutOfStableRange { degree: usize, stable: i64 },
    #[error("operator is not invertible: {0}")]
    InvertibilityFailure(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("validation failed: {0}")]
    Validation(String),
}

pub type Result<T> = std::result::Result<T, Error>;
