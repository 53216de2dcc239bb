use serde::Serialize;

use super::system::{ComplexVar, LinExpr, System};
use super::SiegelDomainSpec;
use crate::exact_linalg::{ComplexMatrix, GaussianRational, Rational, RealMatrix};
use crate::hermitian_forms::HermitianFamily;

/// `(Az)·∂/∂z + (Bw)·∂/∂w` with `B` associated to `A`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct G0Element {
    pub a: RealMatrix,
    pub b: ComplexMatrix,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct G0Solution {
    pub basis: Vec<G0Element>,
    pub dim: usize,
}

/// Matrices skew-Hermitian for every component of `H`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LSolution {
    pub basis: Vec<ComplexMatrix>,
    pub s: usize,
}

pub(crate) type ExprMatrix = Vec<Vec<LinExpr>>;

pub(crate) fn complex_matrix_vars(sys: &mut System, rows: usize, cols: usize) -> Vec<Vec<ComplexVar>> {
    (0..rows).map(|_| (0..cols).map(|_| sys.complex_var()).collect()).collect()
}

pub(crate) fn exprs(vars: &[Vec<ComplexVar>]) -> ExprMatrix {
    vars.iter().map(|r| r.iter().map(|v| v.expr()).collect()).collect()
}

pub(crate) fn values(vars: &[Vec<ComplexVar>], x: &[Rational]) -> ComplexMatrix {
    let cols = vars.first().map_or(0, Vec::len);
    ComplexMatrix::from_fn(vars.len(), cols, |r, c| vars[r][c].value(x))
}

/// Adds `Σ_l A_{jl} H_l − B†H_j − H_jB = 0` entrywise for every `j`.
/// `a` is `k×k`, `b` is `m×m`; either may be symbolic.
pub(crate) fn require_associated(sys: &mut System, h: &HermitianFamily, a: &ExprMatrix, b: &ExprMatrix) {
    let m = h.m;
    for (j, hj) in h.components.iter().enumerate() {
        for p in 0..m {
            for q in 0..m {
                let mut e = LinExpr::zero();
                for (l, hl) in h.components.iter().enumerate() {
                    e.add_scaled(&a[j][l], &hl[(p, q)]);
                }
                for r in 0..m {
                    e.add_scaled(&b[r][p].conj(), &-hj[(r, q)].clone());
                    e.add_scaled(&b[r][q], &-hj[(p, r)].clone());
                }
                sys.require_zero(&e);
            }
        }
    }
}

pub fn solve_g0(spec: &SiegelDomainSpec) -> G0Solution {
    let (k, m) = (spec.k, spec.m());
    let mut sys = System::new();
    let t: Vec<usize> = spec.cone.g_basis.iter().map(|_| sys.real_var()).collect();
    let a: ExprMatrix = (0..k)
        .map(|j| {
            (0..k)
                .map(|l| {
                    let mut e = LinExpr::zero();
                    for (ta, g) in t.iter().zip(&spec.cone.g_basis) {
                        e.add_scaled(&LinExpr::real_var(*ta), &GaussianRational::real(g[(j, l)].clone()));
                    }
                    e
                })
                .collect()
        })
        .collect();
    let bvars = complex_matrix_vars(&mut sys, m, m);
    require_associated(&mut sys, &spec.h, &a, &exprs(&bvars));
    let basis: Vec<G0Element> = sys
        .solve()
        .into_iter()
        .map(|x| {
            let a = t
                .iter()
                .zip(&spec.cone.g_basis)
                .fold(RealMatrix::zeros(k, k), |acc, (ta, g)| acc.add(&g.scale(&x[*ta])));
            G0Element { a, b: values(&bvars, &x) }
        })
        .collect();
    G0Solution { dim: basis.len(), basis }
}

pub fn solve_l(spec: &SiegelDomainSpec) -> LSolution {
    let (k, m) = (spec.k, spec.m());
    let mut sys = System::new();
    let zero: ExprMatrix = vec![vec![LinExpr::zero(); k]; k];
    let bvars = complex_matrix_vars(&mut sys, m, m);
    require_associated(&mut sys, &spec.h, &zero, &exprs(&bvars));
    let basis: Vec<ComplexMatrix> = sys.solve().into_iter().map(|x| values(&bvars, &x)).collect();
    LSolution { s: basis.len(), basis }
}
