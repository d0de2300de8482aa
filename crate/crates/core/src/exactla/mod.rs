//! Exact arithmetic over Q and number fields, and sparse exact linear
//! algebra used by every other module.

mod echelon;
mod field;
mod matrix;
mod poly;
mod rational;
mod scalar;

pub use echelon::{cokernel, rank, rank_bounded, rank_kernel, solve, to_dense, to_sparse, Quotient, Subspace};
pub use field::{cyclotomic_field, cyclotomic_polynomial, cyclotomic_root, Field, NumberField};
pub use matrix::{Matrix, RationalMatrix, SparseVec};
pub use poly::Poly;
pub use rational::Rational;
pub use scalar::{Algebraic, Scalar};
