//! Open convex cones `Ω ⊂ R^k` together with the Lie algebra `g(Ω)` of their
//! linear automorphism groups.
//!
//! A cone is described by a basis of `g(Ω)`, an interior point and an exact
//! boundary description. Membership `A ∈ g(Ω)` is tested through a fixed set
//! of annihilating functionals on `k×k` matrix space.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::exact_linalg::scalar::{int, rational_vec};
use crate::exact_linalg::{Matrix, Rational, RealMatrix};
use crate::Error;

/// A linear functional `x ↦ Σ c_i x_i`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Functional(#[serde(with = "rational_vec")] pub Vec<Rational>);

impl Functional {
    pub fn apply(&self, x: &[Rational]) -> Rational {
        self.0.iter().zip(x).fold(Rational::zero(), |acc, (c, v)| acc + c * v)
    }
}

/// Exact description of the cone's defining inequalities.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Boundary {
    /// `Ω = {x : ℓ_i(x) > 0 for all i}`.
    Polyhedral(Vec<Functional>),
    /// A Lorentz factor `x_t^2 − Σ x_s^2 > 0, x_t > 0` on the coordinates in
    /// `block` (first entry time-like), intersected with polyhedral factors.
    Lorentzian {
        block: Vec<usize>,
        #[serde(default)]
        polyhedral: Vec<Functional>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ConeMembership {
    Interior,
    Boundary,
    Outside,
}

impl ConeMembership {
    pub fn in_closure(self) -> bool {
        !matches!(self, ConeMembership::Outside)
    }
}

/// The six homogeneous cones of dimension 2, 3 and 4 containing no line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum CatalogCone {
    #[serde(rename = "omega1")]
    Omega1,
    #[serde(rename = "omega2")]
    Omega2,
    #[serde(rename = "omega3")]
    Omega3,
    #[serde(rename = "omega4")]
    Omega4,
    #[serde(rename = "omega5")]
    Omega5,
    #[serde(rename = "omega6")]
    Omega6,
}

impl CatalogCone {
    pub const ALL: [CatalogCone; 6] = [
        CatalogCone::Omega1,
        CatalogCone::Omega2,
        CatalogCone::Omega3,
        CatalogCone::Omega4,
        CatalogCone::Omega5,
        CatalogCone::Omega6,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CatalogCone::Omega1 => "omega1",
            CatalogCone::Omega2 => "omega2",
            CatalogCone::Omega3 => "omega3",
            CatalogCone::Omega4 => "omega4",
            CatalogCone::Omega5 => "omega5",
            CatalogCone::Omega6 => "omega6",
        }
    }

    pub fn dim(self) -> usize {
        match self {
            CatalogCone::Omega1 => 2,
            CatalogCone::Omega2 | CatalogCone::Omega3 => 3,
            _ => 4,
        }
    }
}

impl fmt::Display for CatalogCone {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CatalogCone {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        let t = s.trim().to_ascii_lowercase().replace(['Ω', 'ω', '_'], "omega");
        let t = t.strip_prefix("omega").unwrap_or(&t);
        match t {
            "1" => Ok(CatalogCone::Omega1),
            "2" => Ok(CatalogCone::Omega2),
            "3" => Ok(CatalogCone::Omega3),
            "4" => Ok(CatalogCone::Omega4),
            "5" => Ok(CatalogCone::Omega5),
            "6" => Ok(CatalogCone::Omega6),
            _ => Err(Error::UnknownCone(s.to_string())),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ConeSpec {
    pub name: String,
    pub k: usize,
    pub g_basis: Vec<RealMatrix>,
    pub interior_point: Vec<Rational>,
    pub boundary: Boundary,
    /// Functionals on row-major vectorized `k×k` matrices cutting out `g(Ω)`.
    pub annihilators: Vec<Vec<Rational>>,
}

impl ConeSpec {
    /// Validates and assembles a cone. The basis is trusted to be all of
    /// `g(Ω)`; only its shape, independence and containment of the scalars
    /// are checked.
    pub fn new(
        name: impl Into<String>,
        k: usize,
        g_basis: Vec<RealMatrix>,
        interior_point: Vec<Rational>,
        boundary: Boundary,
    ) -> Result<Self, Error> {
        let name = name.into();
        if k == 0 {
            return Err(Error::InvalidCone(format!("{name}: k must be positive")));
        }
        if g_basis.iter().any(|a| a.rows() != k || a.cols() != k) {
            return Err(Error::InvalidCone(format!("{name}: g_basis elements must be {k}x{k}")));
        }
        if interior_point.len() != k {
            return Err(Error::Dimension(format!(
                "{name}: interior point has length {}, expected {k}",
                interior_point.len()
            )));
        }
        let functionals = match &boundary {
            Boundary::Polyhedral(fs) => fs.iter().collect::<Vec<_>>(),
            Boundary::Lorentzian { block, polyhedral } => {
                if block.len() < 2 || block.iter().any(|&i| i >= k) {
                    return Err(Error::InvalidCone(format!("{name}: bad Lorentz block {block:?}")));
                }
                polyhedral.iter().collect()
            }
        };
        if functionals.iter().any(|f| f.0.len() != k) {
            return Err(Error::Dimension(format!("{name}: boundary functional length differs from {k}")));
        }
        let stacked = Matrix::from_rows(k * k, g_basis.iter().map(RealMatrix::vectorize).collect());
        if stacked.rank() != g_basis.len() {
            return Err(Error::InvalidCone(format!("{name}: g_basis is linearly dependent")));
        }
        if !stacked.row_span_contains(&RealMatrix::identity(k).vectorize()) {
            return Err(Error::InvalidCone(format!("{name}: g_basis must contain the scalar matrices")));
        }
        let annihilators = stacked.nullspace_basis();
        let cone = ConeSpec { name, k, g_basis, interior_point, boundary, annihilators };
        if cone.contains_in_closure(&cone.interior_point)? != ConeMembership::Interior {
            return Err(Error::InvalidCone(format!("{}: interior_point is not interior", cone.name)));
        }
        Ok(cone)
    }

    pub fn dim_g(&self) -> usize {
        self.g_basis.len()
    }

    /// Stacked annihilators acting on vectorized `k×k` real matrices:
    /// `M ∈ g(Ω)` iff this matrix kills `vec(M)`.
    pub fn membership_constraints(&self) -> RealMatrix {
        Matrix::from_rows(self.k * self.k, self.annihilators.clone())
    }

    pub fn contains_matrix(&self, m: &RealMatrix) -> bool {
        let v = m.vectorize();
        self.annihilators
            .iter()
            .all(|a| a.iter().zip(&v).fold(Rational::zero(), |acc, (x, y)| acc + x * y).is_zero())
    }

    /// Coordinates of `m` in `g_basis`, if `m ∈ g(Ω)`.
    pub fn coordinates(&self, m: &RealMatrix) -> Option<Vec<Rational>> {
        // Solve Σ t_i vec(G_i) = vec(m): kernel of [G^T | −m] with last entry 1.
        let kk = self.k * self.k;
        let nb = self.g_basis.len();
        let target = m.vectorize();
        let cols = Matrix::from_fn(kk, nb + 1, |r, c| {
            if c < nb {
                self.g_basis[c].vectorize()[r].clone()
            } else {
                -target[r].clone()
            }
        });
        let kernel = cols.nullspace_basis();
        let v = kernel.into_iter().find(|v| !v[nb].is_zero())?;
        let scale = v[nb].clone();
        Some(v[..nb].iter().map(|x| x / &scale).collect())
    }

    pub fn contains_in_closure(&self, x: &[Rational]) -> Result<ConeMembership, Error> {
        if x.len() != self.k {
            return Err(Error::Dimension(format!("point has length {}, cone dimension is {}", x.len(), self.k)));
        }
        // Each factor yields (strictly inside, inside the closure).
        let mut factors: Vec<(bool, bool)> = Vec::new();
        let linear = match &self.boundary {
            Boundary::Polyhedral(fs) => fs,
            Boundary::Lorentzian { block, polyhedral } => {
                let t = &x[block[0]];
                let q = block[1..].iter().fold(t * t, |acc, &i| acc - &x[i] * &x[i]);
                factors.push((q.is_positive() && t.is_positive(), !q.is_negative() && !t.is_negative()));
                polyhedral
            }
        };
        for f in linear {
            let v = f.apply(x);
            factors.push((v.is_positive(), !v.is_negative()));
        }
        Ok(if factors.iter().all(|f| f.0) {
            ConeMembership::Interior
        } else if factors.iter().all(|f| f.1) {
            ConeMembership::Boundary
        } else {
            ConeMembership::Outside
        })
    }

    pub fn is_lorentzian(&self) -> bool {
        matches!(self.boundary, Boundary::Lorentzian { .. })
    }

    /// The positive orthant `R^r_+`, with `g(Ω)` the diagonal matrices.
    pub fn orthant(r: usize) -> ConeSpec {
        let basis = (0..r).map(|i| unit(r, i, i)).collect();
        let facets = (0..r).map(|i| Functional(unit_vec(r, i))).collect();
        ConeSpec::new(format!("orthant{r}"), r, basis, vec![Rational::one(); r], Boundary::Polyhedral(facets))
            .expect("orthant is a valid cone")
    }

    pub fn catalog(id: CatalogCone) -> ConeSpec {
        let mut cone = match id {
            CatalogCone::Omega1 => ConeSpec::orthant(2),
            CatalogCone::Omega2 => ConeSpec::orthant(3),
            CatalogCone::Omega4 => ConeSpec::orthant(4),
            CatalogCone::Omega3 => lorentz_cone(3, &[]),
            CatalogCone::Omega5 => lorentz_cone(4, &[3]),
            CatalogCone::Omega6 => lorentz_cone(4, &[]),
        };
        cone.name = id.name().to_string();
        cone
    }
}

/// `catalog_cone` with the identifier spelled as in input documents.
pub fn catalog_cone(id: &str) -> Result<ConeSpec, Error> {
    Ok(ConeSpec::catalog(id.parse()?))
}

/// Lemma bound for cones without lines: `dim g(Ω) ≤ k²/2 − k/2 + 1`.
pub fn isotropy_bound(k: usize) -> Rational {
    let k = int(k as i64);
    &k * &k / int(2) - &k / int(2) + int(1)
}

fn unit(k: usize, i: usize, j: usize) -> RealMatrix {
    let mut m = RealMatrix::zeros(k, k);
    m[(i, j)] = Rational::one();
    m
}

fn unit_vec(k: usize, i: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); k];
    v[i] = Rational::one();
    v
}

/// Lorentz cone on the first `k − extra.len()` coordinates (time-like first)
/// times the half-lines `x_j > 0` for `j ∈ extra`. The algebra is
/// `c(gl) ⊕ o(1, q)` on the Lorentz block, block-diagonal with scalars on the
/// extra coordinates.
fn lorentz_cone(k: usize, extra: &[usize]) -> ConeSpec {
    let block: Vec<usize> = (0..k).filter(|i| !extra.contains(i)).collect();
    let mut basis = Vec::new();
    let mut lorentz_id = RealMatrix::zeros(k, k);
    for &i in &block {
        lorentz_id[(i, i)] = Rational::one();
    }
    basis.push(lorentz_id);
    let t = block[0];
    for &s in &block[1..] {
        // boost mixing the time-like coordinate with s
        basis.push(unit(k, t, s).add(&unit(k, s, t)));
    }
    for (a, &s1) in block[1..].iter().enumerate() {
        for &s2 in &block[a + 2..] {
            basis.push(unit(k, s1, s2).sub(&unit(k, s2, s1)));
        }
    }
    for &e in extra {
        basis.push(unit(k, e, e));
    }
    let mut point = vec![Rational::zero(); k];
    point[t] = Rational::one();
    for &e in extra {
        point[e] = Rational::one();
    }
    let polyhedral = extra.iter().map(|&e| Functional(unit_vec(k, e))).collect();
    ConeSpec::new("lorentz", k, basis, point, Boundary::Lorentzian { block, polyhedral })
        .expect("catalog Lorentz cone is valid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_linalg::rat;

    fn m3(rows: [[i64; 3]; 3]) -> RealMatrix {
        RealMatrix::from_fn(3, 3, |i, j| int(rows[i][j]))
    }

    #[test]
    fn catalog_dimensions() {
        let dims: Vec<usize> = CatalogCone::ALL.iter().map(|&c| ConeSpec::catalog(c).dim_g()).collect();
        assert_eq!(dims, vec![2, 3, 4, 4, 5, 7]);
    }

    #[test]
    fn isotropy_bound_values() {
        assert_eq!(isotropy_bound(2), int(2));
        assert_eq!(isotropy_bound(3), int(4));
        assert_eq!(isotropy_bound(4), int(7));
    }

    #[test]
    fn bound_attained_by_lorentz_cones_and_omega1() {
        for c in CatalogCone::ALL {
            let cone = ConeSpec::catalog(c);
            let bound = isotropy_bound(cone.k);
            let d = int(cone.dim_g() as i64);
            assert!(d <= bound, "{c}");
            assert_eq!(d == bound, matches!(c, CatalogCone::Omega1 | CatalogCone::Omega3 | CatalogCone::Omega6), "{c}");
        }
    }

    #[test]
    fn omega1_membership() {
        let cone = ConeSpec::catalog(CatalogCone::Omega1);
        let m = cone.membership_constraints();
        let diag = RealMatrix::diagonal(vec![int(1), int(5)]);
        assert!(m.mul_vec(&diag.vectorize()).iter().all(Zero::is_zero));
        let nil = unit(2, 0, 1);
        assert!(m.mul_vec(&nil.vectorize()).iter().any(|x| !x.is_zero()));
    }

    #[test]
    fn omega3_has_displayed_form() {
        let cone = ConeSpec::catalog(CatalogCone::Omega3);
        // λ = 0, p = 1, q = r = 0
        assert!(cone.contains_matrix(&m3([[0, 1, 0], [1, 0, 0], [0, 0, 0]])));
        // generic element λ=2, p=3, q=−1, r=5
        assert!(cone.contains_matrix(&m3([[2, 3, -1], [3, 2, 5], [-1, -5, 2]])));
        assert!(!cone.contains_matrix(&m3([[0, 1, 0], [-1, 0, 0], [0, 0, 0]])));
        assert!(!cone.contains_matrix(&m3([[1, 0, 0], [0, 2, 0], [0, 0, 1]])));
    }

    #[test]
    fn annihilators_complement_the_basis() {
        for c in CatalogCone::ALL {
            let cone = ConeSpec::catalog(c);
            let k = cone.k;
            assert_eq!(cone.annihilators.len(), k * k - cone.dim_g());
            for g in &cone.g_basis {
                assert!(cone.contains_matrix(g));
            }
            let mut rows: Vec<Vec<Rational>> = cone.g_basis.iter().map(RealMatrix::vectorize).collect();
            rows.extend(cone.annihilators.iter().cloned());
            assert_eq!(Matrix::from_rows(k * k, rows).rank(), k * k);
        }
    }

    #[test]
    fn closure_classification() {
        let o1 = ConeSpec::catalog(CatalogCone::Omega1);
        assert_eq!(o1.contains_in_closure(&[int(1), int(1)]).unwrap(), ConeMembership::Interior);
        assert_eq!(o1.contains_in_closure(&[int(0), int(1)]).unwrap(), ConeMembership::Boundary);
        let o3 = ConeSpec::catalog(CatalogCone::Omega3);
        assert_eq!(o3.contains_in_closure(&[int(1), int(1), int(0)]).unwrap(), ConeMembership::Boundary);
        assert_eq!(o3.contains_in_closure(&[int(0), int(1), int(0)]).unwrap(), ConeMembership::Outside);
        assert_eq!(o3.contains_in_closure(&[int(-2), int(1), int(0)]).unwrap(), ConeMembership::Outside);
        assert!(o3.contains_in_closure(&[int(1), int(1)]).is_err());
        let o5 = ConeSpec::catalog(CatalogCone::Omega5);
        assert_eq!(
            o5.contains_in_closure(&[int(2), int(1), int(1), int(0)]).unwrap(),
            ConeMembership::Boundary
        );
        assert_eq!(
            o5.contains_in_closure(&[int(2), int(1), int(1), int(-1)]).unwrap(),
            ConeMembership::Outside
        );
    }

    #[test]
    fn first_order_flow_keeps_interior_point_inside() {
        let ts = [rat(1, 8), rat(-1, 8), rat(1, 16), rat(-1, 16)];
        for c in CatalogCone::ALL {
            let cone = ConeSpec::catalog(c);
            for g in &cone.g_basis {
                for t in &ts {
                    let step = RealMatrix::identity(cone.k).add(&g.scale(t));
                    let y = step.mul_vec(&cone.interior_point);
                    assert_eq!(cone.contains_in_closure(&y).unwrap(), ConeMembership::Interior, "{c}");
                }
            }
        }
    }

    #[test]
    fn coordinates_recover_combination() {
        let cone = ConeSpec::catalog(CatalogCone::Omega6);
        let combo = cone.g_basis[0].scale(&int(3)).add(&cone.g_basis[5].scale(&rat(-1, 2)));
        let c = cone.coordinates(&combo).unwrap();
        assert_eq!(c[0], int(3));
        assert_eq!(c[5], rat(-1, 2));
        assert!(cone.coordinates(&unit(4, 0, 1)).is_none());
    }

    #[test]
    fn custom_cone_validation() {
        let facets = Boundary::Polyhedral(vec![Functional(vec![int(1), int(0)]), Functional(vec![int(0), int(1)])]);
        let only_offdiag = vec![unit(2, 0, 1)];
        assert!(ConeSpec::new("bad", 2, only_offdiag, vec![int(1), int(1)], facets.clone()).is_err());
        let dep = vec![RealMatrix::identity(2), RealMatrix::identity(2).scale(&int(2))];
        assert!(ConeSpec::new("dep", 2, dep, vec![int(1), int(1)], facets.clone()).is_err());
        let outside = ConeSpec::new("pt", 2, vec![RealMatrix::identity(2)], vec![int(-1), int(1)], facets.clone());
        assert!(outside.is_err());
        let ok = ConeSpec::new("ok", 2, vec![RealMatrix::identity(2)], vec![int(1), int(2)], facets).unwrap();
        assert_eq!(ok.annihilators.len(), 3);
    }

    #[test]
    fn catalog_ids_parse() {
        assert_eq!("omega3".parse::<CatalogCone>().unwrap(), CatalogCone::Omega3);
        assert_eq!("Ω6".parse::<CatalogCone>().unwrap(), CatalogCone::Omega6);
        assert!("omega7".parse::<CatalogCone>().is_err());
        assert!(catalog_cone("omega9").is_err());
    }
}
