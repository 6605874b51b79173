//! Exact scalars and dense square matrices over them.

mod matrix;
mod scalar;

pub use matrix::SquareMatrix;
pub use scalar::{ExactComplex, ExactRational};
