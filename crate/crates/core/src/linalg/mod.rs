//! Exact sparse linear algebra.

pub mod closure;
pub mod field;
pub mod matrix;
pub mod subspace;
pub mod tensor;

pub use closure::{GradedOperator, GradedOperatorSystem};
pub use field::{Field, Fp, Rational};
pub use matrix::{Matrix, SparseVec};
pub use subspace::{Quotient, Subspace};
pub use tensor::TensorShape;
