//! Exact field arithmetic and dense matrix kernels.
//!
//! Everything downstream (pencils, Hom spaces, reflection functors) reduces to
//! rank, kernel and solve over [`Scalar`]. No floating point is used anywhere.

mod matrix;
mod scalar;

pub use matrix::{Echelon, Matrix};
pub use scalar::{Field, Scalar};
