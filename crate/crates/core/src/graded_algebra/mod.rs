//! The graded algebra `g = g₋₁ ⊕ g₋½ ⊕ g₀ ⊕ g½ ⊕ g₁` of a Siegel domain.
//!
//! `g₋₁` and `g₋½` have fixed dimensions `k` and `2(n−k)`. The other three
//! components, and the space `L` of matrices skew-Hermitian for every `H_j`,
//! are kernels of exact real linear systems. Universally quantified
//! identities in `w ∈ C^m` are turned into equations either by
//! multilinearity (instantiating at `e_p`, `i·e_p`) or by matching
//! coefficients of monomials in `w̄`, `w′`, ... treated as independent.

mod g0;
mod g1;
mod g_half;
mod system;

use serde::{Deserialize, Serialize};

use crate::cones::ConeSpec;
use crate::exact_linalg::{ComplexMatrix, RealMatrix};
use crate::hermitian_forms::HermitianFamily;
use crate::Error;

pub use g0::{solve_g0, solve_l, G0Element, G0Solution, LSolution};
pub use g1::{solve_g1, GOneElement, GOneSolution};
pub use g_half::{solve_g_half, GHalfElement, GHalfSolution};

/// `S(Ω,H) = {(z,w) ∈ C^k × C^{n−k} : Im z − H(w,w) ∈ Ω}`.
#[derive(Clone, Debug, PartialEq)]
pub struct SiegelDomainSpec {
    pub n: usize,
    pub k: usize,
    pub cone: ConeSpec,
    pub h: HermitianFamily,
}

impl SiegelDomainSpec {
    pub fn new(n: usize, k: usize, cone: ConeSpec, h: HermitianFamily) -> Result<Self, Error> {
        if k == 0 || k > n {
            return Err(Error::InvalidDomain(format!("need 1 ≤ k ≤ n, got n={n}, k={k}")));
        }
        if cone.k != k {
            return Err(Error::Dimension(format!("cone dimension {} differs from k={k}", cone.k)));
        }
        if h.k != k || h.m != n - k {
            return Err(Error::Dimension(format!(
                "H has {} components on C^{}, expected {k} on C^{}",
                h.k,
                h.m,
                n - k
            )));
        }
        h.validate().map_err(Error::NotHermitian)?;
        Ok(SiegelDomainSpec { n, k, cone, h })
    }

    /// Dimension of the `w`-space.
    pub fn m(&self) -> usize {
        self.n - self.k
    }

    /// Tube domain `R^k + iΩ`.
    pub fn tube(cone: ConeSpec) -> Self {
        let k = cone.k;
        SiegelDomainSpec { n: k, k, cone, h: HermitianFamily::empty(k) }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedDims {
    #[serde(rename = "g_m1")]
    pub d_m1: usize,
    #[serde(rename = "g_mhalf")]
    pub d_mhalf: usize,
    #[serde(rename = "g_0")]
    pub d_0: usize,
    #[serde(rename = "g_half")]
    pub d_half: usize,
    #[serde(rename = "g_1")]
    pub d_1: usize,
    pub total: usize,
}

impl GradedDims {
    pub fn new(k: usize, m: usize, d_0: usize, d_half: usize, d_1: usize) -> Self {
        GradedDims { d_m1: k, d_mhalf: 2 * m, d_0, d_half, d_1, total: k + 2 * m + d_0 + d_half + d_1 }
    }

    /// Components in grade order `−1, −½, 0, ½, 1`.
    pub fn components(&self) -> [usize; 5] {
        [self.d_m1, self.d_mhalf, self.d_0, self.d_half, self.d_1]
    }
}

/// All solver outputs for one domain.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GradedAlgebra {
    pub g0: G0Solution,
    pub l: LSolution,
    pub g_half: GHalfSolution,
    pub g1: GOneSolution,
    #[serde(skip)]
    pub dims: GradedDims,
}

pub fn solve_all(spec: &SiegelDomainSpec) -> GradedAlgebra {
    let g0 = solve_g0(spec);
    let l = solve_l(spec);
    let g_half = solve_g_half(spec);
    let g1 = solve_g1(spec);
    let dims = GradedDims::new(spec.k, spec.m(), g0.dim, g_half.dim, g1.dim);
    GradedAlgebra { g0, l, g_half, g1, dims }
}

pub fn graded_dims(spec: &SiegelDomainSpec) -> GradedDims {
    solve_all(spec).dims
}

/// `Σ_l A_{jl} H_l` for every `j`: the left side of the association identity.
pub(crate) fn a_times_h(a: &RealMatrix, h: &HermitianFamily) -> Vec<ComplexMatrix> {
    (0..h.k)
        .map(|j| {
            h.components.iter().enumerate().fold(ComplexMatrix::zeros(h.m, h.m), |acc, (l, hl)| {
                acc.add(&hl.scale(&a[(j, l)].clone().into()))
            })
        })
        .collect()
}

/// Checks `Σ_l A_{jl} H_l = B†H_j + H_jB` for every `j`.
pub fn is_associated(a: &RealMatrix, b: &ComplexMatrix, h: &HermitianFamily) -> bool {
    let lhs = a_times_h(a, h);
    let bd = b.conj_transpose();
    h.components.iter().zip(lhs).all(|(hj, l)| l == bd.mul(hj).add(&hj.mul(b)))
}
