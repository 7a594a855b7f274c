//! Finite fields and orthogonal arrays.

pub mod field;
pub mod oa;

pub use field::{prime_power, FiniteField};
pub use oa::{build_oa, row_blocks, OrthogonalArray, RowBlock};
