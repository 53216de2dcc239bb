//! Infinitesimal orbit analysis of `G(Ω,H)` acting on `Ω`.
//!
//! The Lie algebra of `G(Ω,H)` is the projection of `g₀` onto its `A`
//! components. If `x ↦ (A_1x, …, A_rx)` has generic rank below `k`, no orbit
//! is open and the action is not transitive. Full generic rank only shows
//! that orbits are open off a proper algebraic subset.

use serde::Serialize;

use crate::exact_linalg::{evaluation_matrix, Matrix, RealMatrix};
use crate::graded_algebra::{solve_g0, SiegelDomainSpec};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    NotTransitive,
    GenericallyOpenOrbits,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct HomogeneityVerdict {
    pub a_part_dim: usize,
    pub generic_rank: usize,
    pub verdict: Verdict,
    pub note: String,
}

/// Basis of the span of the `A` components of `g₀`.
pub fn a_part_subalgebra(spec: &SiegelDomainSpec) -> Vec<RealMatrix> {
    let k = spec.k;
    let rows = solve_g0(spec).basis.iter().map(|e| e.a.vectorize()).collect();
    Matrix::from_rows(k * k, rows)
        .row_space_basis()
        .into_iter()
        .map(|v| RealMatrix::from_vector(k, k, v))
        .collect()
}

/// Rank over `Q(x)` of the rows `A_i x`.
pub fn generic_orbit_rank(a_basis: &[RealMatrix], k: usize) -> usize {
    evaluation_matrix(a_basis, k).generic_rank()
}

pub fn homogeneity_verdict(spec: &SiegelDomainSpec) -> HomogeneityVerdict {
    let a = a_part_subalgebra(spec);
    let rank = generic_orbit_rank(&a, spec.k);
    let (verdict, note) = if rank < spec.k {
        (
            Verdict::NotTransitive,
            format!("generic orbit rank {rank} < k = {}: no open orbit, so G(Ω,H) is not transitive on Ω", spec.k),
        )
    } else {
        (
            Verdict::GenericallyOpenOrbits,
            "orbits are open off a proper algebraic subset; this is not a proof of transitivity".to_string(),
        )
    };
    HomogeneityVerdict { a_part_dim: a.len(), generic_rank: rank, verdict, note }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cones::{CatalogCone, ConeMembership, ConeSpec};
    use crate::exact_linalg::{int, rat, Rational};
    use crate::hermitian_forms::HermitianFamily;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn spec_from(cone: ConeSpec, diags: &[&[i64]]) -> SiegelDomainSpec {
        let d: Vec<Vec<Rational>> = diags.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect();
        let h = HermitianFamily::diagonal(&d).unwrap();
        SiegelDomainSpec::new(cone.k + h.m, cone.k, cone, h).unwrap()
    }

    /// Max pointwise rank of `x ↦ (A_i x)` over 10 seeded interior points.
    fn sampled_rank(spec: &SiegelDomainSpec, a: &[RealMatrix]) -> usize {
        let mut rng = ChaCha8Rng::seed_from_u64(2024);
        let mut best = 0;
        let mut found = 0;
        while found < 10 {
            let x: Vec<Rational> = spec
                .cone
                .interior_point
                .iter()
                .map(|c| c + rat(rng.gen_range(-8..9), rng.gen_range(9..40)))
                .collect();
            if spec.cone.contains_in_closure(&x).unwrap() != ConeMembership::Interior {
                continue;
            }
            found += 1;
            let rows: Vec<Vec<Rational>> = a.iter().map(|ai| ai.mul_vec(&x)).collect();
            best = best.max(Matrix::from_rows(spec.k, rows).rank());
        }
        best
    }

    fn o1() -> ConeSpec {
        ConeSpec::catalog(CatalogCone::Omega1)
    }

    #[test]
    fn d2_is_not_transitive() {
        let v = homogeneity_verdict(&spec_from(o1(), &[&[1, 1], &[1, 1]]));
        assert_eq!((v.a_part_dim, v.generic_rank, v.verdict), (1, 1, Verdict::NotTransitive));
    }

    #[test]
    fn d1_has_open_orbits() {
        let spec = spec_from(o1(), &[&[1, 1], &[0, 0]]);
        let a = a_part_subalgebra(&spec);
        assert_eq!(a.len(), 2);
        assert_eq!(generic_orbit_rank(&a, 2), sampled_rank(&spec, &a));
        assert_eq!(homogeneity_verdict(&spec).verdict, Verdict::GenericallyOpenOrbits);
    }

    #[test]
    fn d6_boundary_and_interior_v() {
        let o3 = || ConeSpec::catalog(CatalogCone::Omega3);
        let boundary = homogeneity_verdict(&spec_from(o3(), &[&[1], &[1], &[0]]));
        assert_eq!((boundary.a_part_dim, boundary.verdict), (3, Verdict::GenericallyOpenOrbits));
        let interior = homogeneity_verdict(&spec_from(o3(), &[&[2], &[1], &[0]]));
        assert_eq!(interior.verdict, Verdict::NotTransitive);
    }

    #[test]
    fn d5_two_nonzero_entries() {
        let o2 = ConeSpec::catalog(CatalogCone::Omega2);
        let spec = spec_from(o2, &[&[1], &[1], &[0]]);
        let a = a_part_subalgebra(&spec);
        assert_eq!(generic_orbit_rank(&a, 3), 2);
        assert_eq!(homogeneity_verdict(&spec).verdict, Verdict::NotTransitive);
    }

    #[test]
    fn scalars_have_rank_one() {
        for k in 1..5 {
            assert_eq!(generic_orbit_rank(&[RealMatrix::identity(k)], k), 1);
        }
        let diag = [RealMatrix::diagonal(vec![int(1), int(0)]), RealMatrix::diagonal(vec![int(0), int(1)])];
        assert_eq!(generic_orbit_rank(&diag, 2), 2);
    }

    #[test]
    fn generic_rank_matches_sampling() {
        let specs = [
            spec_from(o1(), &[&[1, 0], &[1, 1]]),
            spec_from(ConeSpec::catalog(CatalogCone::Omega2), &[&[1], &[0], &[0]]),
            spec_from(ConeSpec::catalog(CatalogCone::Omega3), &[&[1], &[1], &[0]]),
            SiegelDomainSpec::tube(ConeSpec::catalog(CatalogCone::Omega6)),
            SiegelDomainSpec::tube(ConeSpec::catalog(CatalogCone::Omega5)),
        ];
        for spec in specs {
            let a = a_part_subalgebra(&spec);
            assert_eq!(generic_orbit_rank(&a, spec.k), sampled_rank(&spec, &a), "{}", spec.cone.name);
        }
    }
}
