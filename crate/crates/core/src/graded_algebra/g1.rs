use num_traits::Zero;
use serde::Serialize;

use super::g0::{require_associated, ExprMatrix};
use super::g_half::UNIT_SCALARS;
use super::system::{ComplexVar, LinExpr, LinPoly, System};
use super::SiegelDomainSpec;
use crate::exact_linalg::{rat, ComplexMatrix, GaussianRational, Monomial, Rational, RealMatrix};

/// `a(z,z)·∂/∂z + b(z,w)·∂/∂w`.
///
/// `a[l]` is the symmetric `k×k` matrix of the `l`-th component,
/// `a_l(x,x′) = Σ a[l][(i,j)] x_i x′_j`; `b[p]` is `k×m` with
/// `b_p(z,w) = Σ b[p][(i,q)] z_i w_q`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GOneElement {
    pub a: Vec<RealMatrix>,
    pub b: Vec<ComplexMatrix>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GOneSolution {
    pub basis: Vec<GOneElement>,
    pub dim: usize,
}

pub fn solve_g1(spec: &SiegelDomainSpec) -> GOneSolution {
    let (k, m) = (spec.k, spec.m());
    let h = &spec.h.components;
    let mut sys = System::new();

    let mut a_slots = vec![vec![vec![0usize; k]; k]; k];
    for slots in a_slots.iter_mut() {
        for (i, j) in (0..k).flat_map(|i| (i..k).map(move |j| (i, j))) {
            let v = sys.real_var();
            slots[i][j] = v;
            slots[j][i] = v;
        }
    }
    let a = |l: usize, i: usize, j: usize| LinExpr::real_var(a_slots[l][i][j]);
    let bvars: Vec<Vec<Vec<ComplexVar>>> =
        (0..m).map(|_| (0..k).map(|_| (0..m).map(|_| sys.complex_var()).collect()).collect()).collect();
    let b = |p: usize, i: usize, q: usize| bvars[p][i][q].expr();

    for i in 0..k {
        // A_{e_i} = [x ↦ a(e_i, x)] ∈ g(Ω)
        let a_i: ExprMatrix = (0..k).map(|l| (0..k).map(|j| a(l, i, j)).collect()).collect();
        sys.require_membership(&a_i, &spec.cone.annihilators);
        if m == 0 {
            continue;
        }
        // B_{e_i} = ½ b(e_i, ·) associated to A_{e_i}, Im tr B_{e_i} = 0
        let half = GaussianRational::real(rat(1, 2));
        let b_i: ExprMatrix = (0..m).map(|p| (0..m).map(|q| b(p, i, q).scaled(&half)).collect()).collect();
        require_associated(&mut sys, &spec.h, &a_i, &b_i);
        let mut tr = LinExpr::zero();
        for (p, row) in b_i.iter().enumerate() {
            tr.add_assign(&row[p].im());
        }
        sys.require_zero(&tr);
    }
    if m > 0 {
        require_b_pairs_in_cone(&mut sys, spec, &b);
        require_b_identity(&mut sys, h, k, m, &b);
    }

    let basis: Vec<GOneElement> = sys
        .solve()
        .into_iter()
        .map(|x| GOneElement {
            a: (0..k).map(|l| RealMatrix::from_fn(k, k, |i, j| x[a_slots[l][i][j]].clone())).collect(),
            b: (0..m).map(|p| ComplexMatrix::from_fn(k, m, |i, q| bvars[p][i][q].value(&x))).collect(),
        })
        .collect();
    GOneSolution { dim: basis.len(), basis }
}

/// `B_{w,w′} = [x ↦ Im H(w′, b(x,w))] ∈ g(Ω)` for `w = s·e_r`, `w′ = s′·e_{r′}`,
/// `s, s′ ∈ {1, i}`. Entry `(l,i)` is `Im(conj(s′) s Σ_t (H_l)_{r′t} b^t_{ir})`.
fn require_b_pairs_in_cone(sys: &mut System, spec: &SiegelDomainSpec, b: &impl Fn(usize, usize, usize) -> LinExpr) {
    let (k, m) = (spec.k, spec.m());
    let h = &spec.h.components;
    for r in 0..m {
        for (re, im) in UNIT_SCALARS {
            let s = GaussianRational::from_ints(re, im);
            for r2 in 0..m {
                for (re2, im2) in UNIT_SCALARS {
                    let s2bar = GaussianRational::from_ints(re2, -im2);
                    let factor = s2bar * s.clone();
                    let mat: ExprMatrix = (0..k)
                        .map(|l| {
                            (0..k)
                                .map(|i| {
                                    let mut e = LinExpr::zero();
                                    for t in 0..m {
                                        e.add_scaled(&b(t, i, r), &(factor.clone() * h[l][(r2, t)].clone()));
                                    }
                                    e.im()
                                })
                                .collect()
                        })
                        .collect();
                    sys.require_membership(&mat, &spec.cone.annihilators);
                }
            }
        }
    }
}

/// `H(w, b(H(w′,w″), w″)) = H(b(H(w″,w), w′), w″)` as an identity in
/// `w̄` (0..m), `w̄′` (m..2m), `w″` (2m..3m).
fn require_b_identity(
    sys: &mut System,
    h: &[ComplexMatrix],
    k: usize,
    m: usize,
    b: &impl Fn(usize, usize, usize) -> LinExpr,
) {
    let nv = 3 * m;
    for hj in h {
        let mut poly = LinPoly::default();
        for x in 0..m {
            for y in 0..m {
                let hj_xy = &hj[(x, y)];
                if hj_xy.is_zero() {
                    continue;
                }
                for (i, hi) in h.iter().enumerate().take(k) {
                    for c in 0..m {
                        for d in 0..m {
                            let hi_cd = &hi[(c, d)];
                            if hi_cd.is_zero() {
                                continue;
                            }
                            let coef = hj_xy.clone() * hi_cd.clone();
                            for t in 0..m {
                                // left: w̄_x (H_j)_{xy} b^y_{it} w̄′_c (H_i)_{cd} w″_d w″_t
                                let left = Monomial::from_vars(nv, &[x, m + c, 2 * m + d, 2 * m + t]);
                                poly.add(left, &b(y, i, t), &coef);
                                // right: conj(b^x_{it}) w̄_c (H_i)_{cd} w″_d w̄′_t (H_j)_{xy} w″_y
                                let right = Monomial::from_vars(nv, &[c, m + t, 2 * m + d, 2 * m + y]);
                                poly.add(right, &b(x, i, t).conj(), &-coef.clone());
                            }
                        }
                    }
                }
            }
        }
        sys.require_poly_zero(&poly);
    }
}

impl GOneElement {
    /// `a(x,x)` evaluated at a real point.
    pub fn a_quadratic(&self, x: &[Rational]) -> Vec<Rational> {
        self.a
            .iter()
            .map(|al| {
                let mut s = Rational::zero();
                for (i, xi) in x.iter().enumerate() {
                    for (j, xj) in x.iter().enumerate() {
                        s += &al[(i, j)] * xi * xj;
                    }
                }
                s
            })
            .collect()
    }
}
