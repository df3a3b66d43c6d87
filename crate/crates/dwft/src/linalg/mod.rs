//! Internal dense and sparse complex linear algebra.

mod dense;
mod sparse;

pub use dense::{DenseMatrix, LuFactors};
pub use sparse::{CscMatrix, SparseLu};

use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum LinalgError {
    #[error("matrix is numerically singular (pivot {pivot:.3e} at elimination step {step})")]
    Singular { step: usize, pivot: f64 },
}
