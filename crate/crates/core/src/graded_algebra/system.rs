//! Real linear systems assembled from complex expressions.
//!
//! Every unknown is real. A complex unknown `u` is the pair `(Re u, Im u)`,
//! so a linear expression has Gaussian-rational coefficients over real
//! unknowns, and conjugation acts on coefficients only.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::exact_linalg::{Field, GaussianRational, Matrix, Monomial, Rational, RealMatrix};

#[derive(Clone, Debug, Default, PartialEq)]
pub(crate) struct LinExpr(BTreeMap<usize, GaussianRational>);

impl LinExpr {
    pub fn zero() -> Self {
        LinExpr(BTreeMap::new())
    }

    pub fn term(var: usize, c: GaussianRational) -> Self {
        let mut e = Self::zero();
        e.add_term(var, c);
        e
    }

    pub fn real_var(var: usize) -> Self {
        Self::term(var, GaussianRational::one())
    }

    fn add_term(&mut self, var: usize, c: GaussianRational) {
        if c.is_zero() {
            return;
        }
        let entry = self.0.entry(var).or_insert_with(GaussianRational::zero);
        *entry = entry.clone() + c;
        if entry.is_zero() {
            self.0.remove(&var);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn add_assign(&mut self, o: &LinExpr) {
        for (v, c) in &o.0 {
            self.add_term(*v, c.clone());
        }
    }

    pub fn add_scaled(&mut self, o: &LinExpr, s: &GaussianRational) {
        for (v, c) in &o.0 {
            self.add_term(*v, c.clone() * s.clone());
        }
    }

    pub fn scaled(&self, s: &GaussianRational) -> Self {
        let mut r = Self::zero();
        r.add_scaled(self, s);
        r
    }

    pub fn conj(&self) -> Self {
        LinExpr(self.0.iter().map(|(v, c)| (*v, c.conj())).collect())
    }

    pub fn re(&self) -> Self {
        let mut r = Self::zero();
        for (v, c) in &self.0 {
            r.add_term(*v, GaussianRational::real(c.re.clone()));
        }
        r
    }

    pub fn im(&self) -> Self {
        let mut r = Self::zero();
        for (v, c) in &self.0 {
            r.add_term(*v, GaussianRational::real(c.im.clone()));
        }
        r
    }

    /// Value at a real assignment of the unknowns.
    #[cfg(test)]
    pub fn eval(&self, x: &[Rational]) -> GaussianRational {
        self.0.iter().fold(GaussianRational::zero(), |acc, (v, c)| acc + c.scale(&x[*v]))
    }
}

/// A complex unknown as its two real coordinates.
#[derive(Clone, Copy, Debug)]
pub(crate) struct ComplexVar {
    pub re: usize,
    pub im: usize,
}

impl ComplexVar {
    pub fn expr(self) -> LinExpr {
        let mut e = LinExpr::real_var(self.re);
        e.add_term(self.im, GaussianRational::i());
        e
    }

    pub fn value(self, x: &[Rational]) -> GaussianRational {
        GaussianRational::new(x[self.re].clone(), x[self.im].clone())
    }
}

/// Polynomial identity in formal variables whose coefficients are linear in
/// the unknowns; every coefficient is required to vanish.
#[derive(Default)]
pub(crate) struct LinPoly(BTreeMap<Monomial, LinExpr>);

impl LinPoly {
    pub fn add(&mut self, m: Monomial, e: &LinExpr, s: &GaussianRational) {
        self.0.entry(m).or_default().add_scaled(e, s);
    }
}

#[derive(Default)]
pub(crate) struct System {
    nvars: usize,
    rows: Vec<BTreeMap<usize, Rational>>,
}

impl System {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn real_var(&mut self) -> usize {
        self.nvars += 1;
        self.nvars - 1
    }

    pub fn complex_var(&mut self) -> ComplexVar {
        ComplexVar { re: self.real_var(), im: self.real_var() }
    }

    /// Adds `Re e = 0` and `Im e = 0`.
    pub fn require_zero(&mut self, e: &LinExpr) {
        for part in [e.re(), e.im()] {
            if !part.is_zero() {
                self.rows.push(part.0.into_iter().map(|(v, c)| (v, c.re)).collect());
            }
        }
    }

    pub fn require_poly_zero(&mut self, p: &LinPoly) {
        for e in p.0.values() {
            self.require_zero(e);
        }
    }

    /// Requires `M ∈ g(Ω)` for a real `k×k` matrix of expressions, given the
    /// cone's annihilators on row-major vectorized matrices.
    pub fn require_membership(&mut self, m: &[Vec<LinExpr>], annihilators: &[Vec<Rational>]) {
        let k = m.len();
        for alpha in annihilators {
            let mut e = LinExpr::zero();
            for (idx, coef) in alpha.iter().enumerate() {
                if !coef.is_zero() {
                    e.add_scaled(&m[idx / k][idx % k], &GaussianRational::real(coef.clone()));
                }
            }
            self.require_zero(&e);
        }
    }

    pub fn matrix(&self) -> RealMatrix {
        let rows = self
            .rows
            .iter()
            .map(|r| {
                let mut dense = vec![Rational::zero(); self.nvars];
                for (v, c) in r {
                    dense[*v] = c.clone();
                }
                dense
            })
            .collect();
        Matrix::from_rows(self.nvars, rows)
    }

    /// Basis of the real solution space, deterministic.
    pub fn solve(&self) -> Vec<Vec<Rational>> {
        self.matrix().nullspace_basis()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_linalg::int;

    #[test]
    fn conj_of_complex_unknown() {
        let mut sys = System::new();
        let u = sys.complex_var();
        let x = vec![int(2), int(3)];
        assert_eq!(u.expr().eval(&x), GaussianRational::from_ints(2, 3));
        assert_eq!(u.expr().conj().eval(&x), GaussianRational::from_ints(2, -3));
        assert_eq!(u.expr().im().eval(&x), GaussianRational::from_ints(3, 0));
    }

    #[test]
    fn complex_equation_splits_into_two_rows() {
        // u − i·v = 0 over complex u, v leaves a 2-dimensional real space
        let mut sys = System::new();
        let u = sys.complex_var();
        let v = sys.complex_var();
        let mut e = u.expr();
        e.add_scaled(&v.expr(), &-GaussianRational::i());
        sys.require_zero(&e);
        let sol = sys.solve();
        assert_eq!(sol.len(), 2);
        for x in sol {
            assert!(e.eval(&x).is_zero());
        }
    }
}
