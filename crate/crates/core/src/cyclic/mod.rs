//! Para-(co)cyclic modules and the constructions built on them.

pub mod covers;
pub mod hom;
pub mod module;
pub mod quotients;

pub use covers::*;
pub use hom::*;
pub use module::*;
pub use quotients::*;
