//! Holomorphic polynomial vector fields on `C^k × C^m` and the grading by
//! the Euler field `∂ = z·∂/∂z + ½ w·∂/∂w`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::exact_linalg::{rat, Field, GaussianRational, Matrix, Monomial, Poly, Rational, RealMatrix};
use crate::graded_algebra::{GradedAlgebra, SiegelDomainSpec};
use crate::Error;

/// Eigenvalue of `ad ∂`, one of `−1, −½, 0, ½, 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Grade {
    MinusOne,
    MinusHalf,
    Zero,
    Half,
    One,
}

impl Grade {
    pub const ALL: [Grade; 5] = [Grade::MinusOne, Grade::MinusHalf, Grade::Zero, Grade::Half, Grade::One];

    /// Twice the eigenvalue.
    pub fn twice(self) -> i32 {
        match self {
            Grade::MinusOne => -2,
            Grade::MinusHalf => -1,
            Grade::Zero => 0,
            Grade::Half => 1,
            Grade::One => 2,
        }
    }

    pub fn from_twice(t: i32) -> Option<Grade> {
        Grade::ALL.into_iter().find(|g| g.twice() == t)
    }

    pub fn value(self) -> Rational {
        rat(self.twice() as i64, 2)
    }

    pub fn sum(self, o: Grade) -> Option<Grade> {
        Grade::from_twice(self.twice() + o.twice())
    }
}

impl fmt::Display for Grade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Grade::MinusOne => "-1",
            Grade::MinusHalf => "-1/2",
            Grade::Zero => "0",
            Grade::Half => "1/2",
            Grade::One => "1",
        })
    }
}

/// `Σ_i X_i(z,w) ∂/∂u_i` with `u = (z_1..z_k, w_1..w_m)`.
#[derive(Clone, Debug, PartialEq)]
pub struct PolyVectorField {
    pub k: usize,
    pub coefficients: Vec<Poly<GaussianRational>>,
    pub grade: Option<Grade>,
    pub name: String,
}

type CPoly = Poly<GaussianRational>;

impl PolyVectorField {
    pub fn zero(n: usize, k: usize) -> Self {
        PolyVectorField { k, coefficients: vec![Poly::zero(n); n], grade: None, name: String::new() }
    }

    pub fn n(&self) -> usize {
        self.coefficients.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.iter().all(Poly::is_zero)
    }

    pub fn degree(&self) -> u32 {
        self.coefficients.iter().filter_map(Poly::degree).max().unwrap_or(0)
    }

    pub fn scale(&self, s: &GaussianRational) -> Self {
        PolyVectorField {
            k: self.k,
            coefficients: self.coefficients.iter().map(|p| p.scale(s)).collect(),
            grade: self.grade,
            name: self.name.clone(),
        }
    }

    fn with_label(mut self, grade: Grade, index: usize) -> Self {
        self.grade = Some(grade);
        self.name = format!("g[{grade}]#{index}");
        self
    }

    /// Nonzero coefficients keyed by `(slot, monomial)`.
    fn coefficient_map(&self) -> BTreeMap<(usize, Monomial), GaussianRational> {
        let mut out = BTreeMap::new();
        for (slot, p) in self.coefficients.iter().enumerate() {
            for (m, c) in p.terms() {
                out.insert((slot, m.clone()), c.clone());
            }
        }
        out
    }
}

impl fmt::Display for PolyVectorField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coefficients.iter().map(|p| format_poly(p, self.k)).collect();
        write!(f, "({})", parts.join(", "))
    }
}

fn var_name(i: usize, k: usize) -> String {
    if i < k {
        format!("z{}", i + 1)
    } else {
        format!("w{}", i - k + 1)
    }
}

/// Terms in decreasing graded-lex order with `z` before `w`.
pub fn format_poly(p: &CPoly, k: usize) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (idx, (m, c)) in p.terms().rev().enumerate() {
        let vars: Vec<String> = m
            .0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| if e == 1 { var_name(i, k) } else { format!("{}^{e}", var_name(i, k)) })
            .collect();
        let negative = c.is_real() && c.re.is_negative();
        let mag = if negative { -c.clone() } else { c.clone() };
        let body = match (vars.is_empty(), mag.is_one()) {
            (true, _) => mag.to_string(),
            (false, true) => vars.join("*"),
            (false, false) => format!("{mag}*{}", vars.join("*")),
        };
        match (idx, negative) {
            (0, true) => out.push_str(&format!("-{body}")),
            (0, false) => out.push_str(&body),
            (_, true) => out.push_str(&format!(" - {body}")),
            (_, false) => out.push_str(&format!(" + {body}")),
        }
    }
    out
}

pub fn euler_field(spec: &SiegelDomainSpec) -> PolyVectorField {
    let n = spec.n;
    let half = GaussianRational::real(rat(1, 2));
    let coefficients = (0..n)
        .map(|i| if i < spec.k { Poly::var(n, i) } else { Poly::var(n, i).scale(&half) })
        .collect();
    PolyVectorField { k: spec.k, coefficients, grade: Some(Grade::Zero), name: "euler".into() }
}

/// `[X,Y]_i = Σ_j (X_j ∂_j Y_i − Y_j ∂_j X_i)`.
pub fn bracket(x: &PolyVectorField, y: &PolyVectorField) -> PolyVectorField {
    let n = x.n();
    assert_eq!(n, y.n(), "fields live on different spaces");
    let coefficients = (0..n)
        .map(|i| {
            (0..n).fold(Poly::zero(n), |acc, j| {
                acc.add(&x.coefficients[j].mul(&y.coefficients[i].derivative(j)))
                    .sub(&y.coefficients[j].mul(&x.coefficients[i].derivative(j)))
            })
        })
        .collect();
    let grade = match (x.grade, y.grade) {
        (Some(a), Some(b)) => a.sum(b),
        _ => None,
    };
    PolyVectorField { k: x.k, coefficients, grade, name: format!("[{}, {}]", x.name, y.name) }
}

/// Explicit vector fields for every basis element of every graded component.
pub fn materialize(spec: &SiegelDomainSpec, alg: &GradedAlgebra) -> Result<Vec<PolyVectorField>, Error> {
    let (n, k, m) = (spec.n, spec.k, spec.m());
    let h = &spec.h.components;
    let mismatch = |what: &str| Error::Dimension(format!("{what} does not match the domain (n={n}, k={k})"));
    let z = |i: usize| -> CPoly { Poly::var(n, i) };
    let w = |p: usize| -> CPoly { Poly::var(n, k + p) };
    let cst = |c: GaussianRational| -> CPoly { Poly::constant(n, c) };
    let two_i = GaussianRational::from_ints(0, 2);
    let mut out = Vec::new();

    for i in 0..k {
        let mut f = PolyVectorField::zero(n, k);
        f.coefficients[i] = cst(GaussianRational::one());
        out.push(f.with_label(Grade::MinusOne, i));
    }

    // 2iH(b,w)·∂/∂z + b·∂/∂w for b ∈ {e_p, i·e_p}
    for p in 0..m {
        for (idx, b) in [GaussianRational::one(), GaussianRational::i()].into_iter().enumerate() {
            let mut f = PolyVectorField::zero(n, k);
            for (j, hj) in h.iter().enumerate() {
                f.coefficients[j] = (0..m).fold(Poly::zero(n), |acc, r| {
                    acc.add(&w(r).scale(&(two_i.clone() * b.conj() * hj[(p, r)].clone())))
                });
            }
            f.coefficients[k + p] = cst(b);
            out.push(f.with_label(Grade::MinusHalf, 2 * p + idx));
        }
    }

    for (idx, e) in alg.g0.basis.iter().enumerate() {
        if e.a.rows() != k || e.b.rows() != m {
            return Err(mismatch("g0 basis"));
        }
        let mut f = PolyVectorField::zero(n, k);
        for j in 0..k {
            f.coefficients[j] =
                (0..k).fold(Poly::zero(n), |acc, l| acc.add(&z(l).scale(&e.a[(j, l)].clone().into())));
        }
        for p in 0..m {
            f.coefficients[k + p] = (0..m).fold(Poly::zero(n), |acc, q| acc.add(&w(q).scale(&e.b[(p, q)])));
        }
        out.push(f.with_label(Grade::Zero, idx));
    }

    // 2iH(Φ(z̄),w)·∂/∂z + (Φ(z) + c(w,w))·∂/∂w; conj(Φ(z̄))_q = Σ_i conj(Φ_qi) z_i
    for (idx, e) in alg.g_half.basis.iter().enumerate() {
        if e.phi.rows() != m || e.phi.cols() != k || e.c.len() != m {
            return Err(mismatch("g1/2 basis"));
        }
        let mut f = PolyVectorField::zero(n, k);
        for (j, hj) in h.iter().enumerate() {
            let mut acc = Poly::zero(n);
            for q in 0..m {
                for r in 0..m {
                    for i in 0..k {
                        let c = two_i.clone() * e.phi[(q, i)].conj() * hj[(q, r)].clone();
                        acc = acc.add(&z(i).mul(&w(r)).scale(&c));
                    }
                }
            }
            f.coefficients[j] = acc;
        }
        for p in 0..m {
            let mut acc = (0..k).fold(Poly::zero(n), |acc, i| acc.add(&z(i).scale(&e.phi[(p, i)])));
            for a in 0..m {
                for b in 0..m {
                    acc = acc.add(&w(a).mul(&w(b)).scale(&e.c[p][(a, b)]));
                }
            }
            f.coefficients[k + p] = acc;
        }
        out.push(f.with_label(Grade::Half, idx));
    }

    // a(z,z)·∂/∂z + b(z,w)·∂/∂w
    for (idx, e) in alg.g1.basis.iter().enumerate() {
        if e.a.len() != k || e.b.len() != m {
            return Err(mismatch("g1 basis"));
        }
        let mut f = PolyVectorField::zero(n, k);
        for (l, al) in e.a.iter().enumerate() {
            let mut acc = Poly::zero(n);
            for i in 0..k {
                for j in 0..k {
                    acc = acc.add(&z(i).mul(&z(j)).scale(&al[(i, j)].clone().into()));
                }
            }
            f.coefficients[l] = acc;
        }
        for (p, bp) in e.b.iter().enumerate() {
            let mut acc = Poly::zero(n);
            for i in 0..k {
                for q in 0..m {
                    acc = acc.add(&z(i).mul(&w(q)).scale(&bp[(i, q)]));
                }
            }
            f.coefficients[k + p] = acc;
        }
        out.push(f.with_label(Grade::One, idx));
    }
    Ok(out)
}

/// Membership of `target` in the real span of `span`.
pub fn in_real_span(span: &[&PolyVectorField], target: &PolyVectorField) -> bool {
    if target.is_zero() {
        return true;
    }
    let maps: Vec<_> = span.iter().map(|f| f.coefficient_map()).collect();
    let tmap = target.coefficient_map();
    let mut keys: Vec<(usize, Monomial)> = maps.iter().flat_map(|m| m.keys().cloned()).collect();
    keys.extend(tmap.keys().cloned());
    keys.sort();
    keys.dedup();
    let realify = |m: &BTreeMap<(usize, Monomial), GaussianRational>| -> Vec<Rational> {
        keys.iter()
            .flat_map(|key| {
                let c = m.get(key).cloned().unwrap_or_else(GaussianRational::zero);
                [c.re, c.im]
            })
            .collect()
    };
    let rows: Vec<Vec<Rational>> = maps.iter().map(realify).collect();
    let mat: RealMatrix = Matrix::from_rows(2 * keys.len(), rows);
    mat.row_span_contains(&realify(&tmap))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum GradingFailure {
    /// `[∂, X] ≠ νX` for the labelled grade `ν`.
    Eigen { field: String },
    /// `[X, Y]` is not in the span of the materialized component.
    Bracket { left: String, right: String },
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct GradingReport {
    pub eigen_checked: usize,
    pub brackets_checked: usize,
    pub failures: Vec<GradingFailure>,
}

impl GradingReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks `[∂,X] = νX` for labelled fields, and `[g_μ, g_ν] ⊆ g_{μ+ν}` for
/// every pair whose grades sum to an existing grade. Pairs with `μ+ν` out of
/// range are not examined.
pub fn check_grading(spec: &SiegelDomainSpec, fields: &[PolyVectorField]) -> GradingReport {
    let euler = euler_field(spec);
    let mut report = GradingReport::default();
    for f in fields {
        let Some(g) = f.grade else { continue };
        report.eigen_checked += 1;
        let lhs = bracket(&euler, f);
        if lhs.coefficients != f.scale(&g.value().into()).coefficients {
            report.failures.push(GradingFailure::Eigen { field: f.name.clone() });
        }
    }
    for (i, x) in fields.iter().enumerate() {
        for y in &fields[i + 1..] {
            let (Some(gx), Some(gy)) = (x.grade, y.grade) else { continue };
            let Some(target) = gx.sum(gy) else { continue };
            report.brackets_checked += 1;
            let span: Vec<&PolyVectorField> = fields.iter().filter(|f| f.grade == Some(target)).collect();
            if !in_real_span(&span, &bracket(x, y)) {
                report.failures.push(GradingFailure::Bracket { left: x.name.clone(), right: y.name.clone() });
            }
        }
    }
    report
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub pairs_checked: usize,
    pub triples_checked: usize,
    /// Names of the offending pairs or triples.
    pub failures: Vec<String>,
}

/// Antisymmetry on all pairs and the Jacobi identity on all triples.
pub fn check_bracket_identities(fields: &[PolyVectorField]) -> IdentityReport {
    let mut report = IdentityReport::default();
    for (i, x) in fields.iter().enumerate() {
        for y in &fields[i..] {
            report.pairs_checked += 1;
            let (xy, yx) = (bracket(x, y), bracket(y, x));
            if xy.coefficients.iter().zip(&yx.coefficients).any(|(a, b)| !a.add(b).is_zero()) {
                report.failures.push(format!("[{}, {}]", x.name, y.name));
            }
        }
    }
    for (i, x) in fields.iter().enumerate() {
        for (j, y) in fields.iter().enumerate().skip(i + 1) {
            for z in &fields[j + 1..] {
                report.triples_checked += 1;
                let terms = [bracket(x, &bracket(y, z)), bracket(y, &bracket(z, x)), bracket(z, &bracket(x, y))];
                let holds = (0..x.n()).all(|s| {
                    terms[0].coefficients[s].add(&terms[1].coefficients[s]).add(&terms[2].coefficients[s]).is_zero()
                });
                if !holds {
                    report.failures.push(format!("jacobi({}, {}, {})", x.name, y.name, z.name));
                }
            }
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cones::{CatalogCone, ConeSpec};
    use crate::exact_linalg::int;
    use crate::graded_algebra::solve_all;
    use crate::hermitian_forms::HermitianFamily;

    fn spec_from(cone: ConeSpec, diags: &[&[i64]]) -> SiegelDomainSpec {
        let d: Vec<Vec<Rational>> = diags.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect();
        let h = HermitianFamily::diagonal(&d).unwrap();
        SiegelDomainSpec::new(cone.k + h.m, cone.k, cone, h).unwrap()
    }

    fn d6() -> SiegelDomainSpec {
        spec_from(ConeSpec::catalog(CatalogCone::Omega3), &[&[1], &[1], &[0]])
    }

    fn fields(spec: &SiegelDomainSpec) -> Vec<PolyVectorField> {
        materialize(spec, &solve_all(spec)).unwrap()
    }

    #[test]
    fn euler_fields() {
        let ball2 = spec_from(ConeSpec::orthant(1), &[&[1]]);
        assert_eq!(euler_field(&ball2).to_string(), "(z1, 1/2*w1)");
        let tube = SiegelDomainSpec::tube(ConeSpec::catalog(CatalogCone::Omega2));
        assert_eq!(euler_field(&tube).to_string(), "(z1, z2, z3)");
        let d = spec_from(ConeSpec::catalog(CatalogCone::Omega1), &[&[1, 1, 1], &[1, 2, 2]]);
        assert_eq!(euler_field(&d).to_string(), "(z1, z2, 1/2*w1, 1/2*w2, 1/2*w3)");
    }

    #[test]
    fn translation_is_eigen_minus_one() {
        let spec = spec_from(ConeSpec::orthant(1), &[&[1]]);
        let fs = fields(&spec);
        assert_eq!(fs[0].to_string(), "(1, 0)");
        let br = bracket(&euler_field(&spec), &fs[0]);
        assert_eq!(br.coefficients, fs[0].scale(&-GaussianRational::one()).coefficients);
        assert!(bracket(&fs[0], &fs[0]).is_zero());
    }

    #[test]
    fn d6_field_shapes() {
        let spec = d6();
        let fs = fields(&spec);
        let count = |g: Grade| fs.iter().filter(|f| f.grade == Some(g)).count();
        assert_eq!(Grade::ALL.map(count), [3, 2, 4, 0, 1]);
        let g1 = fs.iter().find(|f| f.grade == Some(Grade::One)).unwrap();
        assert!(g1.coefficients[3].is_zero());
        let e = euler_field(&spec);
        assert_eq!(bracket(&e, g1).coefficients, g1.coefficients);
        let mh: Vec<String> = fs.iter().filter(|f| f.grade == Some(Grade::MinusHalf)).map(|f| f.to_string()).collect();
        assert_eq!(mh, vec!["(2i*w1, 2i*w1, 0, 1)", "(2*w1, 2*w1, 0, i)"]);
    }

    #[test]
    fn grading_holds_for_d6_and_ball() {
        for spec in [d6(), spec_from(ConeSpec::orthant(1), &[&[1]]), spec_from(ConeSpec::orthant(1), &[&[1, 1]])] {
            let report = check_grading(&spec, &fields(&spec));
            assert!(report.passed(), "{:?}", report.failures);
            assert!(report.brackets_checked > 0);
        }
    }

    #[test]
    fn mislabeled_field_is_named() {
        let spec = d6();
        let mut fs = fields(&spec);
        let idx = fs.iter().position(|f| f.grade == Some(Grade::One)).unwrap();
        fs[idx].grade = Some(Grade::Half);
        let report = check_grading(&spec, &fs);
        assert!(report.failures.contains(&GradingFailure::Eigen { field: fs[idx].name.clone() }));
    }

    #[test]
    fn antisymmetry_and_jacobi_on_d6() {
        let fs = fields(&d6());
        for (i, x) in fs.iter().enumerate() {
            for y in &fs[i..] {
                let xy = bracket(x, y);
                let yx = bracket(y, x);
                assert_eq!(xy.coefficients, yx.scale(&-GaussianRational::one()).coefficients);
            }
        }
        for (i, x) in fs.iter().enumerate() {
            for (j, y) in fs.iter().enumerate().skip(i + 1) {
                for zf in &fs[j + 1..] {
                    let t1 = bracket(x, &bracket(y, zf));
                    let t2 = bracket(y, &bracket(zf, x));
                    let t3 = bracket(zf, &bracket(x, y));
                    let sum: Vec<_> = (0..x.n())
                        .map(|s| t1.coefficients[s].add(&t2.coefficients[s]).add(&t3.coefficients[s]))
                        .collect();
                    assert!(sum.iter().all(Poly::is_zero));
                }
            }
        }
        let report = check_bracket_identities(&fs);
        assert_eq!((report.pairs_checked, report.triples_checked), (55, 120));
        assert!(report.failures.is_empty());
    }

    #[test]
    fn span_membership_is_real() {
        let spec = spec_from(ConeSpec::orthant(1), &[&[1]]);
        let fs = fields(&spec);
        let t = &fs[0];
        // i·(1,0) is not in the real span of (1,0)
        assert!(in_real_span(&[t], &t.scale(&int(3).into())));
        assert!(!in_real_span(&[t], &t.scale(&GaussianRational::i())));
    }

    #[test]
    fn grade_arithmetic() {
        assert_eq!(Grade::Half.sum(Grade::Half), Some(Grade::One));
        assert_eq!(Grade::One.sum(Grade::Half), None);
        assert_eq!(Grade::MinusHalf.value(), rat(-1, 2));
    }
}
