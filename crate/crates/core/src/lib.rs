//! Exact construction and verification of Hopf-cyclic complexes.

pub mod cyclic;
pub mod error;
pub mod fixtures;
pub mod format;
pub mod homology;
pub mod hopf;
pub mod linalg;
pub mod pairings;
pub mod report;

pub use error::{Error, Result};
pub use linalg::{Field, Fp, Matrix, Rational, SparseVec, Subspace};
pub use report::{Failure, Report};
