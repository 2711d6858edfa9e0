//! Hopf algebras and their actors.

pub mod expr;
pub mod ops;
pub mod structures;

pub use expr::{Op, Terms};
pub use ops::*;
pub use structures::*;
