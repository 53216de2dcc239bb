use num_traits::Zero;
use serde::Serialize;

use super::g0::{complex_matrix_vars, exprs, values, ExprMatrix};
use super::system::{ComplexVar, LinExpr, LinPoly, System};
use super::SiegelDomainSpec;
use crate::exact_linalg::{ComplexMatrix, GaussianRational, Monomial};

/// `2iH(Φ(z̄),w)·∂/∂z + (Φ(z) + c(w,w))·∂/∂w`.
///
/// `phi` is `m×k`. `c[l]` is the symmetric matrix of the `l`-th component,
/// `c_l(w,w) = Σ_{i,j} c[l][(i,j)] w_i w_j`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GHalfElement {
    pub phi: ComplexMatrix,
    pub c: Vec<ComplexMatrix>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GHalfSolution {
    pub basis: Vec<GHalfElement>,
    pub dim: usize,
}

pub(crate) struct SymmetricVars {
    n: usize,
    vars: Vec<Vec<ComplexVar>>,
}

impl SymmetricVars {
    /// One complex unknown per component and index pair `i ≤ j`.
    pub fn new(sys: &mut System, components: usize, n: usize) -> Self {
        let vars = (0..components).map(|_| (0..n * (n + 1) / 2).map(|_| sys.complex_var()).collect()).collect();
        SymmetricVars { n, vars }
    }

    fn slot(&self, i: usize, j: usize) -> usize {
        let (i, j) = if i <= j { (i, j) } else { (j, i) };
        i * self.n - i * (i + 1) / 2 + j
    }

    pub fn get(&self, l: usize, i: usize, j: usize) -> ComplexVar {
        self.vars[l][self.slot(i, j)]
    }

    pub fn values(&self, x: &[crate::exact_linalg::Rational]) -> Vec<ComplexMatrix> {
        (0..self.vars.len())
            .map(|l| ComplexMatrix::from_fn(self.n, self.n, |i, j| self.get(l, i, j).value(x)))
            .collect()
    }
}

/// The two quantifier instances `e_p` and `i·e_p` enter only through the
/// conjugate of their nonzero coordinate.
pub(crate) const UNIT_SCALARS: [(i64, i64); 2] = [(1, 0), (0, 1)];

pub fn solve_g_half(spec: &SiegelDomainSpec) -> GHalfSolution {
    let (k, m) = (spec.k, spec.m());
    if m == 0 {
        return GHalfSolution { basis: Vec::new(), dim: 0 };
    }
    let h = &spec.h.components;
    let mut sys = System::new();
    let phi_vars = complex_matrix_vars(&mut sys, m, k);
    let phi = exprs(&phi_vars);
    let c = SymmetricVars::new(&mut sys, m, m);

    // Φ_w ∈ g(Ω) for w ∈ {e_p, i·e_p}: (Φ_w)_{ji} = Im(conj(w_p) Σ_q (H_j)_{pq} Φ_{qi}).
    for p in 0..m {
        for (re, im) in UNIT_SCALARS {
            let wbar = GaussianRational::from_ints(re, -im);
            let phi_w: ExprMatrix = (0..k)
                .map(|j| {
                    (0..k)
                        .map(|i| {
                            let mut e = LinExpr::zero();
                            for q in 0..m {
                                e.add_scaled(&phi[q][i], &(wbar.clone() * h[j][(p, q)].clone()));
                            }
                            e.im()
                        })
                        .collect()
                })
                .collect();
            sys.require_membership(&phi_w, &spec.cone.annihilators);
        }
    }

    // H(w, c(w′,w′)) = 2i H(Φ(H(w′,w)), w′), in variables w̄ (0..m) and w′ (m..2m).
    let nv = 2 * m;
    let two_i = GaussianRational::from_ints(0, 2);
    for hj in h {
        let mut poly = LinPoly::default();
        for p in 0..m {
            for q in 0..m {
                let hpq = &hj[(p, q)];
                if hpq.is_zero() {
                    continue;
                }
                for a in 0..m {
                    for b in 0..m {
                        let mono = Monomial::from_vars(nv, &[p, m + a, m + b]);
                        poly.add(mono, &c.get(q, a, b).expr(), hpq);
                    }
                }
                for (l, hl) in h.iter().enumerate() {
                    let phibar = phi[p][l].conj();
                    for a in 0..m {
                        for b in 0..m {
                            if hl[(a, b)].is_zero() {
                                continue;
                            }
                            let mono = Monomial::from_vars(nv, &[a, m + b, m + q]);
                            let s = -(two_i.clone() * hl[(a, b)].clone() * hpq.clone());
                            poly.add(mono, &phibar, &s);
                        }
                    }
                }
            }
        }
        sys.require_poly_zero(&poly);
    }

    let basis: Vec<GHalfElement> = sys
        .solve()
        .into_iter()
        .map(|x| GHalfElement { phi: values(&phi_vars, &x), c: c.values(&x) })
        .collect();
    GHalfSolution { dim: basis.len(), basis }
}
