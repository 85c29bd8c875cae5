//! Exact linear algebra over Q and GF(p): scalars, dense matrices, canonical
//! subspaces, quotients, and the vector-space pushout and pullback.

mod matrix;
mod ops;
mod scalar;
mod subspace;
pub mod vector;

pub use matrix::{apply_kron, apply_left, apply_right, swap_matrix, Matrix};
pub use ops::{kernel, pullback, pushout, sum_and_compare, tensor_map, Comparison, Pushout};
pub use scalar::{Field, Scalar};
pub use subspace::{QuotientPresentation, Subspace};
pub use vector::Vector;
