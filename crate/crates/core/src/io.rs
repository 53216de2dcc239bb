//! JSON documents for domain specs: `{"n", "k", "cone", "H"}`.
//!
//! `cone` is either a catalog name (`"omega3"`, `"orthant2"`) or a custom
//! object `{"k", "g_basis", "interior_point", "boundary"}`. `H` lists the
//! `k` Hermitian `m×m` matrices, entries `"p/q"` or `{"re", "im"}`.

use serde::{Deserialize, Serialize};

use crate::cones::{Boundary, CatalogCone, ConeSpec};
use crate::exact_linalg::scalar::rational_vec;
use crate::exact_linalg::{ComplexMatrix, Rational, RealMatrix};
use crate::graded_algebra::SiegelDomainSpec;
use crate::hermitian_forms::{is_omega_hermitian, HermitianFamily, OmegaHermitianVerdict};
use crate::Error;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpecDocument {
    pub n: usize,
    pub k: usize,
    pub cone: ConeDocument,
    #[serde(rename = "H")]
    pub h: Vec<ComplexMatrix>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ConeDocument {
    Named(String),
    Custom(CustomCone),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CustomCone {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub k: usize,
    pub g_basis: Vec<RealMatrix>,
    #[serde(with = "rational_vec")]
    pub interior_point: Vec<Rational>,
    pub boundary: Boundary,
}

/// A validated spec together with its Ω-Hermitian verdict.
#[derive(Clone, Debug)]
pub struct LoadedSpec {
    pub spec: SiegelDomainSpec,
    pub omega_hermitian: OmegaHermitianVerdict,
}

/// Resolves catalog names and `orthant<r>`.
pub fn named_cone(name: &str) -> Result<ConeSpec, Error> {
    if let Some(r) = name.strip_prefix("orthant") {
        return match r.parse::<usize>() {
            Ok(r) if r > 0 => Ok(ConeSpec::orthant(r)),
            _ => Err(Error::UnknownCone(name.to_string())),
        };
    }
    Ok(ConeSpec::catalog(name.parse()?))
}

impl ConeDocument {
    pub fn to_cone(&self) -> Result<ConeSpec, Error> {
        match self {
            ConeDocument::Named(name) => named_cone(name),
            ConeDocument::Custom(c) => ConeSpec::new(
                c.name.clone().unwrap_or_else(|| "custom".into()),
                c.k,
                c.g_basis.clone(),
                c.interior_point.clone(),
                c.boundary.clone(),
            ),
        }
    }

    /// Catalog and orthant cones are emitted by name, everything else in full.
    pub fn from_cone(cone: &ConeSpec) -> Self {
        let by_name = cone
            .name
            .parse::<CatalogCone>()
            .map(ConeSpec::catalog)
            .or_else(|_| named_cone(&cone.name));
        match by_name {
            Ok(c) if &c == cone => ConeDocument::Named(cone.name.clone()),
            _ => ConeDocument::Custom(CustomCone {
                name: Some(cone.name.clone()),
                k: cone.k,
                g_basis: cone.g_basis.clone(),
                interior_point: cone.interior_point.clone(),
                boundary: cone.boundary.clone(),
            }),
        }
    }
}

impl SpecDocument {
    pub fn from_spec(spec: &SiegelDomainSpec) -> Self {
        SpecDocument {
            n: spec.n,
            k: spec.k,
            cone: ConeDocument::from_cone(&spec.cone),
            h: spec.h.components.clone(),
        }
    }

    pub fn to_spec(&self) -> Result<SiegelDomainSpec, Error> {
        if self.k == 0 || self.k > self.n {
            return Err(Error::InvalidDomain(format!("need 1 ≤ k ≤ n, got n={}, k={}", self.n, self.k)));
        }
        let cone = self.cone.to_cone()?;
        let m = self.n - self.k;
        let h = if m == 0 && self.h.is_empty() {
            HermitianFamily::empty(self.k)
        } else {
            if self.h.len() != self.k {
                return Err(Error::Dimension(format!("H has {} components, expected k = {}", self.h.len(), self.k)));
            }
            HermitianFamily::new(m, self.h.clone())?
        };
        SiegelDomainSpec::new(self.n, self.k, cone, h)
    }
}

/// Parses and fully validates a spec document. A counterexample to the
/// Ω-Hermitian condition is an error naming the offending `w`.
pub fn load_domain_spec(json: &str, samples: usize, seed: u64) -> Result<LoadedSpec, Error> {
    let doc: SpecDocument = serde_json::from_str(json)?;
    let spec = doc.to_spec()?;
    let verdict = is_omega_hermitian(&spec.h, &spec.cone, samples, seed)?;
    if let OmegaHermitianVerdict::Counterexample(w) = &verdict {
        let w: Vec<String> = w.iter().map(ToString::to_string).collect();
        return Err(Error::NotOmegaHermitian(format!("H(w,w) leaves the closed cone at w = ({})", w.join(", "))));
    }
    Ok(LoadedSpec { spec, omega_hermitian: verdict })
}

pub fn emit_spec(spec: &SiegelDomainSpec) -> String {
    serde_json::to_string_pretty(&SpecDocument::from_spec(spec)).expect("spec documents serialize")
}
