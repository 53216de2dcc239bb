//! Exact arithmetic substrate: scalars, dense matrices, polynomials.

pub mod matrix;
pub mod poly;
pub mod poly_matrix;
pub mod scalar;

pub use matrix::{ComplexMatrix, Matrix, RealMatrix, Rref};
pub use poly::{Monomial, Poly};
pub use poly_matrix::{evaluation_matrix, PolyMatrix};
pub use scalar::{format_rational, int, parse_rational, rat, Field, GaussianRational, Rational};
