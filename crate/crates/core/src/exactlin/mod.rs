//! Exact linear algebra over `F_p` and the rationals.

pub mod field;
pub mod matrix;
pub mod poly;
pub mod subspace;

pub use field::{Field, Scalar, DEFAULT_PRIME};
pub use matrix::Matrix;
pub use poly::Poly;
pub use subspace::{quotient_basis, Subspace};
