//! Exact arithmetic: finite fields, dense matrices, subspaces and Laurent
//! polynomial matrices.

pub mod field;
pub mod laurent;
pub mod matrix;
pub mod subspace;

pub use field::{canonical_modulus, Fe, Field, FieldInfo};
pub use laurent::{laurent_limit, LaurentMatrix, LaurentPoly, Limit};
pub use matrix::{jordan_partition, mat_rank, span_dimension, Mat, RowBasis};
pub use subspace::{projective_points, Subspace};
