//! Dense exact matrices, graded tensor products and fraction-field elimination.

mod constraints;
mod matrix;
mod nullspace;

pub use constraints::{determinant, param_constraints, ConstraintReport};
pub use matrix::{graded_permutation, grading_tensor, kron_graded, Grading, ScalarMatrix};
pub use nullspace::{complexity, nullspace, nullspace_from_echelon, primitive_vector, rank, row_reduce, Echelon};

use crate::scalars::ScalarError;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum LinalgError {
    #[error("ragged rows")]
    Ragged,
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("malformed matrix JSON: {0}")]
    Json(String),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error("inconsistent: {0}")]
    Inconsistent(String),
    #[error("underdetermined: {0}")]
    Underdetermined(String),
}
