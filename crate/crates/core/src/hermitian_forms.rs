//! Vector-valued Hermitian forms `H : C^m × C^m → C^k`.
//!
//! Component `j` is stored as a Hermitian matrix `H_j` with
//! `H_j(w, w') = conj(w)ᵀ H_j w'`, anti-linear in the first slot.

use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::cones::{Boundary, ConeMembership, ConeSpec};
use crate::exact_linalg::{int, rat, ComplexMatrix, Field, GaussianRational, Rational};
use crate::Error;

/// `(component, (row, col))`.
pub type EntryPosition = (usize, (usize, usize));

#[derive(Clone, Debug, PartialEq)]
pub struct HermitianFamily {
    pub k: usize,
    pub m: usize,
    pub components: Vec<ComplexMatrix>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "verdict", content = "detail", rename_all = "snake_case")]
pub enum OmegaHermitianVerdict {
    VerifiedExact,
    VerifiedOnSamples(usize),
    Counterexample(Vec<GaussianRational>),
}

impl HermitianFamily {
    /// Shape-checked constructor. Hermitian symmetry is checked separately by
    /// [`HermitianFamily::validate`].
    pub fn new(m: usize, components: Vec<ComplexMatrix>) -> Result<Self, Error> {
        if let Some(j) = components.iter().position(|h| h.rows() != m || h.cols() != m) {
            return Err(Error::Dimension(format!("H component {j} is not {m}x{m}")));
        }
        Ok(HermitianFamily { k: components.len(), m, components })
    }

    /// `k` zero components on `C^0`: the tube case.
    pub fn empty(k: usize) -> Self {
        HermitianFamily { k, m: 0, components: vec![ComplexMatrix::zeros(0, 0); k] }
    }

    /// Family of real diagonal forms; `diags[j]` lists the diagonal of `H_j`.
    pub fn diagonal(diags: &[Vec<Rational>]) -> Result<Self, Error> {
        let m = diags.first().map_or(0, Vec::len);
        let comps = diags
            .iter()
            .map(|d| ComplexMatrix::diagonal(d.iter().cloned().map(GaussianRational::real).collect()))
            .collect();
        Self::new(m, comps)
    }

    /// Positions `(component, (row, col))`, `row ≥ col`, where `H_j ≠ H_j†`.
    pub fn validate(&self) -> Result<(), Vec<EntryPosition>> {
        let mut bad = Vec::new();
        for (j, h) in self.components.iter().enumerate() {
            for r in 0..self.m {
                for c in 0..=r {
                    if h[(r, c)] != h[(c, r)].conj() {
                        bad.push((j, (r, c)));
                    }
                }
            }
        }
        if bad.is_empty() {
            Ok(())
        } else {
            Err(bad)
        }
    }

    /// `H(w, w')` as a vector in `C^k`.
    pub fn form(&self, w: &[GaussianRational], w2: &[GaussianRational]) -> Vec<GaussianRational> {
        self.components
            .iter()
            .map(|h| {
                let hw = h.mul_vec(w2);
                w.iter().zip(&hw).fold(GaussianRational::zero(), |acc, (a, b)| acc + a.conj() * b.clone())
            })
            .collect()
    }

    /// `H(w, w)`, real for Hermitian components.
    pub fn quadratic(&self, w: &[GaussianRational]) -> Vec<Rational> {
        self.form(w, w).into_iter().map(|z| z.re).collect()
    }

    /// `Σ c_j H_j`.
    pub fn combination(&self, c: &[Rational]) -> ComplexMatrix {
        self.components
            .iter()
            .zip(c)
            .fold(ComplexMatrix::zeros(self.m, self.m), |acc, (h, cj)| {
                acc.add(&h.scale(&GaussianRational::real(cj.clone())))
            })
    }

    /// Conjugates every component by `D = diag(t)`: `H_j ↦ D H_j D`, i.e. the
    /// form in the rescaled coordinates `w_i ↦ t_i w_i`.
    pub fn rescale(&self, t: &[Rational]) -> Self {
        let d = ComplexMatrix::diagonal(t.iter().cloned().map(GaussianRational::real).collect());
        HermitianFamily {
            k: self.k,
            m: self.m,
            components: self.components.iter().map(|h| d.mul(h).mul(&d)).collect(),
        }
    }
}

/// Elementary symmetric functions `e_0..e_n` of the eigenvalues of a
/// Hermitian matrix, via Faddeev–LeVerrier. `det(tI − M) = Σ (−1)^j e_j t^{n−j}`.
pub fn eigen_symmetric_functions(m: &ComplexMatrix) -> Vec<Rational> {
    let n = m.rows();
    let mut e = vec![Rational::one()];
    let mut acc = ComplexMatrix::identity(n);
    let mut coeff = GaussianRational::one();
    for j in 1..=n {
        // M_j = M (M_{j-1} + c_{n-j+1} I), c_{n-j} = −tr(M_j)/j
        let shifted = if j == 1 { ComplexMatrix::identity(n) } else { acc.add(&ComplexMatrix::identity(n).scale(&coeff)) };
        acc = m.mul(&shifted);
        coeff = -acc.trace().scale(&rat(1, j as i64));
        // c_{n-j} = (−1)^j e_j
        let ej = if j % 2 == 0 { coeff.re.clone() } else { -coeff.re.clone() };
        e.push(ej);
    }
    e
}

pub fn is_psd(m: &ComplexMatrix) -> bool {
    eigen_symmetric_functions(m).iter().all(|x| !x.is_negative())
}

pub fn is_pd(m: &ComplexMatrix) -> bool {
    let e = eigen_symmetric_functions(m);
    e.iter().all(|x| !x.is_negative()) && e.last().is_some_and(Signed::is_positive)
}

#[cfg(test)]
fn hermitian_value(m: &ComplexMatrix, w: &[GaussianRational]) -> Rational {
    let mw = m.mul_vec(w);
    w.iter().zip(&mw).fold(Rational::zero(), |acc, (a, b)| acc + (a.conj() * b.clone()).re)
}

/// A vector `w` with `w† M w < 0`, if one exists. Built by exact symmetric
/// elimination, so the witness is a Gaussian-rational vector.
pub fn negative_direction(m: &ComplexMatrix) -> Option<Vec<GaussianRational>> {
    let n = m.rows();
    if n == 0 {
        return None;
    }
    let unit = |i: usize| {
        let mut v = vec![GaussianRational::zero(); n];
        v[i] = GaussianRational::one();
        v
    };
    let p00 = m[(0, 0)].re.clone();
    if p00.is_negative() {
        return Some(unit(0));
    }
    if p00.is_zero() {
        if let Some(j) = (1..n).find(|&j| !m[(0, j)].is_zero()) {
            let p0j = m[(0, j)].clone();
            let c = (m[(j, j)].re.abs() + int(1)) / p0j.norm_sqr();
            let mut w = unit(j);
            w[0] = -p0j.scale(&c);
            return Some(w);
        }
        let sub = ComplexMatrix::from_fn(n - 1, n - 1, |r, c| m[(r + 1, c + 1)].clone());
        return negative_direction(&sub).map(|u| {
            let mut w = vec![GaussianRational::zero()];
            w.extend(u);
            w
        });
    }
    let p = GaussianRational::real(p00.clone());
    let schur = ComplexMatrix::from_fn(n - 1, n - 1, |r, c| {
        m[(r + 1, c + 1)].clone() - m[(r + 1, 0)].clone() * m[(0, c + 1)].clone() / p.clone()
    });
    negative_direction(&schur).map(|u| {
        let ru = (0..n - 1).fold(GaussianRational::zero(), |acc, i| acc + m[(0, i + 1)].clone() * u[i].clone());
        let mut w = vec![-(ru / p.clone())];
        w.extend(u);
        w
    })
}

fn nonzero_kernel_vector(m: &ComplexMatrix) -> Option<Vec<GaussianRational>> {
    m.nullspace_basis().into_iter().next()
}

fn check_family(family: &HermitianFamily, cone: &ConeSpec) -> Result<(), Error> {
    if family.k != cone.k {
        return Err(Error::Dimension(format!("H has {} components, cone dimension is {}", family.k, cone.k)));
    }
    Ok(())
}

/// Decides `H(w,w) ∈ Ω̄ ∖ {0}` for all `w ≠ 0`.
///
/// Polyhedral cones are decided exactly: each facet functional applied to
/// `H` must give a PSD form, and their sum must be PD. Lorentz factors are
/// checked on structured and seeded random samples only.
pub fn is_omega_hermitian(
    family: &HermitianFamily,
    cone: &ConeSpec,
    samples: usize,
    seed: u64,
) -> Result<OmegaHermitianVerdict, Error> {
    check_family(family, cone)?;
    if family.m == 0 {
        return Ok(OmegaHermitianVerdict::VerifiedExact);
    }
    let functionals = match &cone.boundary {
        Boundary::Polyhedral(fs) => fs,
        Boundary::Lorentzian { polyhedral, .. } => polyhedral,
    };
    let mut facet_sum = ComplexMatrix::zeros(family.m, family.m);
    for f in functionals {
        let q = family.combination(&f.0);
        if !is_psd(&q) {
            let w = negative_direction(&q).expect("non-PSD Hermitian matrix has a negative direction");
            return Ok(OmegaHermitianVerdict::Counterexample(w));
        }
        facet_sum = facet_sum.add(&q);
    }
    if !cone.is_lorentzian() {
        if is_pd(&facet_sum) {
            return Ok(OmegaHermitianVerdict::VerifiedExact);
        }
        let w = nonzero_kernel_vector(&facet_sum).expect("singular PSD matrix has a kernel");
        return Ok(OmegaHermitianVerdict::Counterexample(w));
    }
    let tests = sample_vectors(family.m, samples, seed);
    let count = tests.len();
    for w in tests {
        let x = family.quadratic(&w);
        if x.iter().all(Zero::is_zero) || cone.contains_in_closure(&x)? == ConeMembership::Outside {
            return Ok(OmegaHermitianVerdict::Counterexample(w));
        }
    }
    Ok(OmegaHermitianVerdict::VerifiedOnSamples(count))
}

/// Standard vectors `e_p`, `i·e_p`, pairwise sums `e_p + e_q`, `e_p + i·e_q`,
/// then `samples` seeded random nonzero vectors with entries of height ≤ 16.
pub fn sample_vectors(m: usize, samples: usize, seed: u64) -> Vec<Vec<GaussianRational>> {
    let e = |p: usize, z: GaussianRational| {
        let mut v = vec![GaussianRational::zero(); m];
        v[p] = z;
        v
    };
    let add = |a: Vec<GaussianRational>, b: Vec<GaussianRational>| -> Vec<GaussianRational> {
        a.into_iter().zip(b).map(|(x, y)| x + y).collect()
    };
    let mut out = Vec::new();
    for p in 0..m {
        out.push(e(p, GaussianRational::one()));
        out.push(e(p, GaussianRational::i()));
    }
    for p in 0..m {
        for q in p + 1..m {
            out.push(add(e(p, GaussianRational::one()), e(q, GaussianRational::one())));
            out.push(add(e(p, GaussianRational::one()), e(q, GaussianRational::i())));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let draw = |rng: &mut ChaCha8Rng| rat(rng.gen_range(-16..=16), rng.gen_range(1..=16));
    let structured = out.len();
    while out.len() < structured + samples && m > 0 {
        let v: Vec<GaussianRational> = (0..m).map(|_| GaussianRational::new(draw(&mut rng), draw(&mut rng))).collect();
        if v.iter().any(|z| !z.is_zero()) {
            out.push(v);
        }
    }
    out
}

/// Coefficients `c` with `Σ c_j H_j` positive definite.
///
/// Starts from all-ones for polyhedral cones, and from the time-like unit
/// vector (plus ones on polyhedral coordinates) for Lorentz cones; falls back
/// to a search over `{0,1,2}^k`.
pub fn positive_definite_combination(family: &HermitianFamily, cone: &ConeSpec) -> Result<Vec<Rational>, Error> {
    check_family(family, cone)?;
    if family.m == 0 {
        return Err(Error::Dimension("positive-definite combination needs m ≥ 1".into()));
    }
    let k = family.k;
    let base: Vec<Rational> = match &cone.boundary {
        Boundary::Polyhedral(_) => vec![Rational::one(); k],
        Boundary::Lorentzian { block, .. } => (0..k)
            .map(|i| if i == block[0] || !block.contains(&i) { Rational::one() } else { Rational::zero() })
            .collect(),
    };
    if is_pd(&family.combination(&base)) {
        return Ok(base);
    }
    let total = 3usize.pow(k as u32);
    for idx in 1..total {
        let c: Vec<Rational> = (0..k).map(|i| int(((idx / 3usize.pow(i as u32)) % 3) as i64)).collect();
        if is_pd(&family.combination(&c)) {
            return Ok(c);
        }
    }
    Err(Error::NoCombinationFound)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cones::CatalogCone;
    use crate::exact_linalg::Matrix;
    use proptest::prelude::*;

    fn diag_family(d: &[&[i64]]) -> HermitianFamily {
        HermitianFamily::diagonal(&d.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect::<Vec<_>>()).unwrap()
    }

    fn d6_form() -> HermitianFamily {
        diag_family(&[&[1], &[1], &[0]])
    }

    #[test]
    fn validate_reports_entry() {
        assert!(diag_family(&[&[1, 0], &[1, 1]]).validate().is_ok());
        let bad = HermitianFamily::new(
            2,
            vec![ComplexMatrix::from_fn(2, 2, |r, c| if (r, c) == (0, 1) { GaussianRational::one() } else { GaussianRational::zero() })],
        )
        .unwrap();
        assert_eq!(bad.validate(), Err(vec![(0, (1, 0))]));
        assert!(HermitianFamily::empty(3).validate().is_ok());
        let nonreal_diag = HermitianFamily::new(1, vec![Matrix::from_rows(1, vec![vec![GaussianRational::i()]])]).unwrap();
        assert_eq!(nonreal_diag.validate(), Err(vec![(0, (0, 0))]));
    }

    #[test]
    fn characteristic_coefficients() {
        // eigenvalues 1, 3 of [[2,1],[1,2]]
        let m = ComplexMatrix::from_fn(2, 2, |r, c| GaussianRational::from_ints(if r == c { 2 } else { 1 }, 0));
        assert_eq!(eigen_symmetric_functions(&m), vec![int(1), int(4), int(3)]);
        // [[1, i],[-i, 1]] has eigenvalues 0, 2
        let h = Matrix::from_rows(
            2,
            vec![
                vec![GaussianRational::one(), GaussianRational::i()],
                vec![-GaussianRational::i(), GaussianRational::one()],
            ],
        );
        assert!(is_psd(&h));
        assert!(!is_pd(&h));
    }

    #[test]
    fn omega1_exact_verdicts() {
        let o1 = ConeSpec::catalog(CatalogCone::Omega1);
        let good = diag_family(&[&[1, 0], &[1, 1]]);
        assert_eq!(is_omega_hermitian(&good, &o1, 8, 0).unwrap(), OmegaHermitianVerdict::VerifiedExact);
        let bad = diag_family(&[&[1, -1], &[1, 1]]);
        match is_omega_hermitian(&bad, &o1, 8, 0).unwrap() {
            OmegaHermitianVerdict::Counterexample(w) => {
                assert!(bad.quadratic(&w)[0].is_negative());
                assert_eq!(w, vec![GaussianRational::zero(), GaussianRational::one()]);
            }
            v => panic!("expected counterexample, got {v:?}"),
        }
        // H(e_2, e_2) = 0
        let degenerate = diag_family(&[&[1, 0], &[1, 0]]);
        match is_omega_hermitian(&degenerate, &o1, 8, 0).unwrap() {
            OmegaHermitianVerdict::Counterexample(w) => assert!(degenerate.quadratic(&w).iter().all(Zero::is_zero)),
            v => panic!("expected counterexample, got {v:?}"),
        }
    }

    #[test]
    fn omega1_brute_grid_agrees() {
        let good = diag_family(&[&[1, 0], &[1, 1]]);
        let o1 = ConeSpec::catalog(CatalogCone::Omega1);
        let dirs = [GaussianRational::one(), GaussianRational::i(), -GaussianRational::one(), GaussianRational::from_ints(1, 1)];
        for a in &dirs {
            for b in &dirs {
                let w = vec![a.clone(), b.clone()];
                let x = good.quadratic(&w);
                assert!(o1.contains_in_closure(&x).unwrap().in_closure());
                assert!(x.iter().any(|v| !v.is_zero()));
            }
        }
    }

    #[test]
    fn d6_form_on_lorentz_boundary() {
        let o3 = ConeSpec::catalog(CatalogCone::Omega3);
        let h = d6_form();
        assert_eq!(is_omega_hermitian(&h, &o3, 32, 0).unwrap(), OmegaHermitianVerdict::VerifiedOnSamples(2 + 32));
        for w in sample_vectors(1, 20, 5) {
            assert_eq!(o3.contains_in_closure(&h.quadratic(&w)).unwrap(), ConeMembership::Boundary);
        }
        let outside = diag_family(&[&[1], &[2], &[0]]);
        assert!(matches!(
            is_omega_hermitian(&outside, &o3, 4, 0).unwrap(),
            OmegaHermitianVerdict::Counterexample(_)
        ));
    }

    #[test]
    fn pd_combinations() {
        let o1 = ConeSpec::catalog(CatalogCone::Omega1);
        assert_eq!(positive_definite_combination(&diag_family(&[&[1, 0], &[0, 1]]), &o1).unwrap(), vec![int(1), int(1)]);
        assert_eq!(positive_definite_combination(&diag_family(&[&[1, 0], &[1, 1]]), &o1).unwrap(), vec![int(1), int(1)]);
        let o3 = ConeSpec::catalog(CatalogCone::Omega3);
        assert_eq!(positive_definite_combination(&d6_form(), &o3).unwrap(), vec![int(1), int(0), int(0)]);
        // base fails, grid succeeds: (1·(-1) + 1·2) ... components diag(-1), diag(1)
        let tricky = diag_family(&[&[-1], &[1]]);
        assert_eq!(positive_definite_combination(&tricky, &o1).unwrap(), vec![int(0), int(1)]);
        assert!(matches!(
            positive_definite_combination(&diag_family(&[&[1, 0], &[1, 0]]), &o1),
            Err(Error::NoCombinationFound)
        ));
    }

    #[test]
    fn dimension_mismatch_is_an_error() {
        let o3 = ConeSpec::catalog(CatalogCone::Omega3);
        assert!(is_omega_hermitian(&diag_family(&[&[1], &[1]]), &o3, 1, 0).is_err());
    }

    fn arb_hermitian(n: usize) -> impl Strategy<Value = ComplexMatrix> {
        proptest::collection::vec((-4i64..5, -4i64..5), n * n).prop_map(move |v| {
            let mut m = ComplexMatrix::zeros(n, n);
            for r in 0..n {
                for c in r..n {
                    let (a, b) = v[r * n + c];
                    let z = if r == c { GaussianRational::from_ints(a, 0) } else { GaussianRational::from_ints(a, b) };
                    m[(c, r)] = z.conj();
                    m[(r, c)] = z;
                }
            }
            m
        })
    }

    proptest! {
        #[test]
        fn witness_exists_iff_not_psd(m in (1usize..5).prop_flat_map(arb_hermitian)) {
            match negative_direction(&m) {
                Some(w) => {
                    prop_assert!(!is_psd(&m));
                    prop_assert!(hermitian_value(&m, &w).is_negative());
                }
                None => prop_assert!(is_psd(&m)),
            }
        }

        #[test]
        fn quadratic_values_are_real(m in arb_hermitian(3), seed in 0u64..1000) {
            let fam = HermitianFamily::new(3, vec![m]).unwrap();
            for w in sample_vectors(3, 5, seed) {
                prop_assert!(fam.form(&w, &w)[0].is_real());
            }
        }
    }

    #[test]
    fn verified_exact_families_pass_random_samples() {
        let o2 = ConeSpec::catalog(CatalogCone::Omega2);
        let fam = diag_family(&[&[1, 0, 2], &[0, 1, 0], &[3, 1, 1]]);
        assert_eq!(is_omega_hermitian(&fam, &o2, 0, 0).unwrap(), OmegaHermitianVerdict::VerifiedExact);
        let ws = sample_vectors(3, 50, 99);
        for w in ws.iter().rev().take(50) {
            let x = fam.quadratic(w);
            assert!(o2.contains_in_closure(&x).unwrap().in_closure());
            assert!(x.iter().any(|v| !v.is_zero()));
        }
    }
}
