//! Named domains and the classification drivers.

mod verify;

use std::fmt;

use num_traits::{Signed, Zero};
use serde::{Serialize, Serializer};

use crate::bounds::{bound_chain, large_k_sweep, BoundReport, SweepEntry};
use crate::cones::{CatalogCone, ConeSpec};
use crate::exact_linalg::{format_rational, int, Rational};
use crate::graded_algebra::{solve_all, GradedAlgebra, GradedDims, SiegelDomainSpec};
use crate::hermitian_forms::{is_omega_hermitian, HermitianFamily, OmegaHermitianVerdict};
use crate::homogeneity::{homogeneity_verdict, HomogeneityVerdict, Verdict};
use crate::io::SpecDocument;
use crate::Error;

pub use verify::{verify_paper, Check, CheckStatus, Summary, VerifyOptions, VerifyReport};

#[derive(Clone, Debug, PartialEq)]
pub enum DomainId {
    /// Unit ball in `C^n`.
    Ball(usize),
    BallProduct(Vec<usize>),
    D1(usize),
    D2(usize),
    D3([Rational; 4]),
    D4([Rational; 4]),
    D5([Rational; 3]),
    D6([Rational; 3]),
    T3,
    T4,
    TubeOmega(CatalogCone),
    Custom(String),
}

fn join(v: &[Rational]) -> String {
    v.iter().map(format_rational).collect::<Vec<_>>().join(",")
}

fn ball_product_name(factors: &[usize]) -> String {
    factors.iter().map(|p| format!("B{p}")).collect::<Vec<_>>().join("x")
}

impl fmt::Display for DomainId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DomainId::Ball(n) => write!(f, "B{n}"),
            DomainId::BallProduct(ps) => f.write_str(&ball_product_name(ps)),
            DomainId::D1(n) => write!(f, "D1({n})"),
            DomainId::D2(n) => write!(f, "D2({n})"),
            DomainId::D3(p) => write!(f, "D3({})", join(p)),
            DomainId::D4(p) => write!(f, "D4({})", join(p)),
            DomainId::D5(v) => write!(f, "D5({})", join(v)),
            DomainId::D6(v) => write!(f, "D6({})", join(v)),
            DomainId::T3 => f.write_str("T3"),
            DomainId::T4 => f.write_str("T4"),
            DomainId::TubeOmega(c) => write!(f, "tube({c})"),
            DomainId::Custom(name) => f.write_str(name),
        }
    }
}

impl Serialize for DomainId {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl DomainId {
    pub fn d3(p: [i64; 4]) -> Self {
        DomainId::D3(p.map(int))
    }

    pub fn d4(p: [i64; 4]) -> Self {
        DomainId::D4(p.map(int))
    }

    pub fn d5(v: [i64; 3]) -> Self {
        DomainId::D5(v.map(int))
    }

    pub fn d6(v: [i64; 3]) -> Self {
        DomainId::D6(v.map(int))
    }

    /// The standard biholomorphic model when the family member is a known
    /// product of balls or a tube of type IV, otherwise the label itself.
    pub fn model_name(&self) -> String {
        let sorted = |mut ps: Vec<usize>| {
            ps.sort_unstable_by(|a, b| b.cmp(a));
            ball_product_name(&ps)
        };
        match self {
            DomainId::BallProduct(ps) => sorted(ps.clone()),
            DomainId::D1(n) => sorted(vec![n - 1, 1]),
            DomainId::D3(p) if p[1].is_zero() && p[2].is_zero() => "B2xB2".into(),
            DomainId::D4(p) if p[1].is_zero() && p[2].is_zero() => "B3xB2".into(),
            DomainId::D5(v) if v.iter().filter(|x| !x.is_zero()).count() == 1 => "B2xB1xB1".into(),
            DomainId::TubeOmega(c) => match c {
                CatalogCone::Omega1 => "B1xB1".into(),
                CatalogCone::Omega2 => "B1xB1xB1".into(),
                CatalogCone::Omega3 => "T3".into(),
                CatalogCone::Omega4 => "B1xB1xB1xB1".into(),
                CatalogCone::Omega5 => "T3xB1".into(),
                CatalogCone::Omega6 => "T4".into(),
            },
            other => other.to_string(),
        }
    }
}

/// Builds the Siegel domain for a named family member.
pub fn build(id: &DomainId) -> Result<SiegelDomainSpec, Error> {
    build_with(id, &ConeSpec::catalog)
}

pub(crate) fn build_with(id: &DomainId, cone: &dyn Fn(CatalogCone) -> ConeSpec) -> Result<SiegelDomainSpec, Error> {
    let bad = |msg: String| Err(Error::InvalidDomain(format!("{id}: {msg}")));
    let ones = |len: usize| vec![int(1); len];
    let zeros = |len: usize| vec![Rational::zero(); len];
    let diag_spec = |cone: ConeSpec, diags: Vec<Vec<Rational>>| {
        let h = HermitianFamily::diagonal(&diags)?;
        SiegelDomainSpec::new(cone.k + h.m, cone.k, cone, h)
    };
    match id {
        DomainId::Ball(n) => {
            if *n == 0 {
                return bad("n must be positive".into());
            }
            diag_spec(ConeSpec::orthant(1), vec![ones(n - 1)])
        }
        DomainId::BallProduct(ps) => {
            if ps.is_empty() || ps.contains(&0) {
                return bad("factors must be positive".into());
            }
            let m: usize = ps.iter().map(|p| p - 1).sum();
            let mut offset = 0;
            let mut diags = Vec::new();
            for p in ps {
                let mut d = zeros(m);
                d[offset..offset + p - 1].fill(int(1));
                offset += p - 1;
                diags.push(d);
            }
            if m == 0 {
                return Ok(SiegelDomainSpec::tube(ConeSpec::orthant(ps.len())));
            }
            diag_spec(ConeSpec::orthant(ps.len()), diags)
        }
        DomainId::D1(n) | DomainId::D2(n) => {
            if *n < 3 {
                return bad("needs n ≥ 3".into());
            }
            let second = if matches!(id, DomainId::D1(_)) { zeros(n - 2) } else { ones(n - 2) };
            diag_spec(cone(CatalogCone::Omega1), vec![ones(n - 2), second])
        }
        DomainId::D3(p) | DomainId::D4(p) => {
            if p.iter().any(Signed::is_negative) {
                return bad("entries must be non-negative".into());
            }
            if (&p[0] * &p[3] - &p[1] * &p[2]).is_zero() {
                return bad("αδ − βγ must be non-zero".into());
            }
            let rep = if matches!(id, DomainId::D3(_)) { 1 } else { 2 };
            let row = |a: &Rational, b: &Rational| {
                let mut r = vec![a.clone()];
                r.extend(std::iter::repeat_n(b.clone(), rep));
                r
            };
            diag_spec(cone(CatalogCone::Omega1), vec![row(&p[0], &p[1]), row(&p[2], &p[3])])
        }
        DomainId::D5(v) => {
            if v.iter().any(Signed::is_negative) || v.iter().all(Zero::is_zero) {
                return bad("v must be non-zero with non-negative entries".into());
            }
            diag_spec(cone(CatalogCone::Omega2), v.iter().map(|x| vec![x.clone()]).collect())
        }
        DomainId::D6(v) => {
            if !v[0].is_positive() || &v[0] * &v[0] < &v[1] * &v[1] + &v[2] * &v[2] {
                return bad("needs v1 > 0 and v1² ≥ v2² + v3²".into());
            }
            diag_spec(cone(CatalogCone::Omega3), v.iter().map(|x| vec![x.clone()]).collect())
        }
        DomainId::T3 => Ok(SiegelDomainSpec::tube(cone(CatalogCone::Omega3))),
        DomainId::T4 => Ok(SiegelDomainSpec::tube(cone(CatalogCone::Omega6))),
        DomainId::TubeOmega(c) => Ok(SiegelDomainSpec::tube(cone(*c))),
        DomainId::Custom(_) => bad("custom domains are loaded from JSON, not built".into()),
    }
}

fn spec_doc<S: Serializer>(spec: &SiegelDomainSpec, s: S) -> Result<S::Ok, S::Error> {
    SpecDocument::from_spec(spec).serialize(s)
}

#[derive(Clone, Debug, Serialize)]
pub struct DomainReport {
    pub id: DomainId,
    pub model: String,
    #[serde(serialize_with = "spec_doc")]
    pub spec: SiegelDomainSpec,
    pub dims: GradedDims,
    pub s: usize,
    pub bounds: BoundReport,
    pub homogeneity: HomogeneityVerdict,
    pub omega_hermitian: OmegaHermitianVerdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bases: Option<GradedAlgebra>,
}

impl DomainReport {
    pub fn compute(id: DomainId, spec: SiegelDomainSpec, samples: usize, seed: u64) -> Result<Self, Error> {
        let alg = solve_all(&spec);
        let dims = alg.dims;
        let s = alg.l.s;
        let bounds = bound_chain(spec.n, spec.k, Some(s), Some(spec.cone.dim_g()), Some(dims.d_half), Some(dims.d_1))?;
        let homogeneity = homogeneity_verdict(&spec);
        let omega_hermitian = is_omega_hermitian(&spec.h, &spec.cone, samples, seed)?;
        Ok(DomainReport { model: id.model_name(), id, spec, dims, s, bounds, homogeneity, omega_hermitian, bases: Some(alg) })
    }

    pub fn without_bases(mut self) -> Self {
        self.bases = None;
        self
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Candidate {
    pub id: DomainId,
    pub model: String,
    pub k: usize,
    pub dims: GradedDims,
    pub verdict: Verdict,
    pub omega_hermitian: OmegaHermitianVerdict,
}

impl Candidate {
    pub fn homogeneous(&self) -> bool {
        self.verdict == Verdict::GenericallyOpenOrbits
            && !matches!(self.omega_hermitian, OmegaHermitianVerdict::Counterexample(_))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Entry {
    pub model: String,
    pub total: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassifyReport {
    pub n: usize,
    pub target: usize,
    pub note: &'static str,
    /// `(n, k)` pairs excluded by the closed-form bound.
    pub pruned: Vec<SweepEntry>,
    pub candidates: Vec<Candidate>,
    /// Candidates with open generic orbits, one per model.
    pub homogeneous: Vec<Entry>,
    /// Homogeneous entries with `d = n² − 2`.
    pub survivors: Vec<Entry>,
}

/// The named family members examined for each `(n, k)`.
pub fn candidates(n: usize, k: usize) -> Vec<DomainId> {
    let mut out = Vec::new();
    if k == 1 {
        out.push(DomainId::Ball(n));
    }
    if k == 2 && n >= 3 {
        out.extend([DomainId::D1(n), DomainId::D2(n)]);
        let variants = [[1, 0, 0, 1], [1, 0, 1, 1], [1, 1, 0, 1]];
        match n {
            4 => out.extend(variants.map(DomainId::d3)),
            5 => out.extend(variants.map(DomainId::d4)),
            _ => {}
        }
    }
    if k == 3 && n == 4 {
        out.extend([[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 0], [1, 1, 1]].map(DomainId::d5));
        out.extend([[1, 1, 0], [2, 1, 0]].map(DomainId::d6));
    }
    if k == n {
        match n {
            2 => out.push(DomainId::TubeOmega(CatalogCone::Omega1)),
            3 => out.extend([DomainId::TubeOmega(CatalogCone::Omega2), DomainId::T3]),
            4 => out.extend([DomainId::TubeOmega(CatalogCone::Omega4), DomainId::TubeOmega(CatalogCone::Omega5), DomainId::T4]),
            _ => {}
        }
    }
    out
}

/// Runs the case analysis over the named families for `2 ≤ n ≤ 5`.
pub fn classify(n: usize, samples: usize, seed: u64) -> Result<ClassifyReport, Error> {
    classify_with(n, samples, seed, &ConeSpec::catalog)
}

pub(crate) fn classify_with(
    n: usize,
    samples: usize,
    seed: u64,
    cone: &dyn Fn(CatalogCone) -> ConeSpec,
) -> Result<ClassifyReport, Error> {
    if !(2..=5).contains(&n) {
        return Err(Error::InvalidDomain(format!("classify supports 2 ≤ n ≤ 5, got {n}")));
    }
    let target = n * n - 2;
    let pruned: Vec<SweepEntry> = if n >= 5 {
        large_k_sweep(n)?.into_iter().filter(|e| e.n == n && e.margin.is_negative()).collect()
    } else {
        Vec::new()
    };
    let mut cands = Vec::new();
    for k in 1..=n {
        if pruned.iter().any(|e| e.k == k) {
            continue;
        }
        for id in candidates(n, k) {
            let spec = build_with(&id, cone)?;
            let dims = crate::graded_algebra::graded_dims(&spec);
            cands.push(Candidate {
                model: id.model_name(),
                k,
                dims,
                verdict: homogeneity_verdict(&spec).verdict,
                omega_hermitian: is_omega_hermitian(&spec.h, &spec.cone, samples, seed)?,
                id,
            });
        }
    }
    let mut homogeneous: Vec<Entry> = Vec::new();
    for c in cands.iter().filter(|c| c.homogeneous()) {
        if !homogeneous.iter().any(|e| e.model == c.model) {
            homogeneous.push(Entry { model: c.model.clone(), total: c.dims.total });
        }
    }
    let survivors = homogeneous.iter().filter(|e| e.total == target).cloned().collect();
    Ok(ClassifyReport {
        n,
        target,
        note: "candidates are the named families of the case analysis, not every homogeneous cone and form",
        pruned,
        candidates: cands,
        homogeneous,
        survivors,
    })
}
