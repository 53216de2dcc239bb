//! Exact computation of the graded automorphism algebra of Siegel domains of
//! the second kind `S(Ω,H) = {(z,w) : Im z − H(w,w) ∈ Ω}`.
//!
//! All arithmetic is over the rationals and Gaussian rationals.

pub mod bounds;
pub mod catalog;
pub mod cli;
pub mod cones;
pub mod exact_linalg;
pub mod graded_algebra;
pub mod hermitian_forms;
pub mod homogeneity;
pub mod io;
pub mod vector_fields;

pub use cones::{catalog_cone, isotropy_bound, Boundary, CatalogCone, ConeMembership, ConeSpec, Functional};
pub use exact_linalg::{ComplexMatrix, GaussianRational, Matrix, Rational, RealMatrix};

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("invalid cone: {0}")]
    InvalidCone(String),
    #[error("unknown cone {0:?}")]
    UnknownCone(String),
    #[error("H is not Hermitian at {}", format_positions(.0))]
    NotHermitian(Vec<(usize, (usize, usize))>),
    #[error("H is not Omega-Hermitian: witness w = {0}")]
    NotOmegaHermitian(String),
    #[error("no positive-definite combination found")]
    NoCombinationFound,
    #[error("invalid domain: {0}")]
    InvalidDomain(String),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

fn format_positions(v: &[(usize, (usize, usize))]) -> String {
    v.iter()
        .map(|(c, (r, col))| format!("component {c} entry ({r},{col})"))
        .collect::<Vec<_>>()
        .join(", ")
}
