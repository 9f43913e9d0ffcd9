//! Exact symbolic workbench for reflection algebras of quantum affine
//! algebras and Yangians.

pub mod algebra;
pub mod boundary;
pub mod glinalg;
pub mod hseries;
pub mod limits;
pub mod scalars;
pub mod uqaff;
pub mod yang;

pub use scalars::{qbinom, qnum, Scalar, ScalarError, Symbol};
