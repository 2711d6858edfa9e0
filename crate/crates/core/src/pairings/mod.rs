//! Characteristic morphisms and the cochain-level pairings they induce.

pub mod classes;
pub mod epi;
pub mod morphisms;
pub mod traces;

pub use classes::*;
pub use epi::*;
pub use morphisms::*;
pub use traces::*;
