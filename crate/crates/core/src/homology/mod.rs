//! Hochschild and cyclic cohomology of (co)cyclic modules through the
//! cyclic bicomplex and the `(b, B)` mixed complex.

pub mod bicomplex;
pub mod complex;
pub mod mixed;
pub mod table;

pub use bicomplex::*;
pub use complex::*;
pub use mixed::*;
pub use table::*;
