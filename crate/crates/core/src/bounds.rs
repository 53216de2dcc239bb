//! Closed-form upper bounds for `d = dim g` and the sweep showing that
//! `k ≥ 3` cannot reach `d = n² − 2` once `n ≥ 5`.

use serde::Serialize;

use crate::cones::isotropy_bound;
use crate::exact_linalg::scalar::rational_str;
use crate::exact_linalg::{int, rat, Rational};
use crate::Error;

/// The chain of successively coarser bounds on `d`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundReport {
    pub n: usize,
    pub k: usize,
    /// `s`, or its bound `(n−k)²` when unknown.
    pub s: usize,
    /// `dim g(Ω)`, or the isotropy bound when unknown.
    #[serde(with = "rational_str")]
    pub dim_g_omega: Rational,
    /// `k + 2(n−k) + s + dim g(Ω) + dim g½ + dim g₁`.
    #[serde(with = "rational_str")]
    pub with_components: Rational,
    /// `2k + 4(n−k) + s + dim g(Ω)`.
    #[serde(with = "rational_str")]
    pub with_component_bounds: Rational,
    /// `2k + 4(n−k) + (n−k)² + dim g(Ω)`.
    #[serde(with = "rational_str")]
    pub with_s_bound: Rational,
    /// `3k²/2 − k(2n + 5/2) + n² + 4n + 1`.
    #[serde(with = "rational_str")]
    pub closed_form: Rational,
}

impl BoundReport {
    pub fn all(&self) -> [&Rational; 4] {
        [&self.with_components, &self.with_component_bounds, &self.with_s_bound, &self.closed_form]
    }

    /// `total ≤` every bound in the chain.
    pub fn admits(&self, total: usize) -> bool {
        let t = int(total as i64);
        self.all().iter().all(|b| &t <= *b)
    }
}

/// Evaluates the bound chain. Unknown quantities fall back to their a-priori
/// bounds: `s ≤ (n−k)²`, `dim g(Ω) ≤ k²/2 − k/2 + 1`, `dim g½ ≤ 2(n−k)`,
/// `dim g₁ ≤ k`.
pub fn bound_chain(
    n: usize,
    k: usize,
    s: Option<usize>,
    dim_g_omega: Option<usize>,
    dim_g_half: Option<usize>,
    dim_g_1: Option<usize>,
) -> Result<BoundReport, Error> {
    if k == 0 || k > n {
        return Err(Error::InvalidDomain(format!("need 1 ≤ k ≤ n, got n={n}, k={k}")));
    }
    let m = n - k;
    let s = s.unwrap_or(m * m);
    let dg = dim_g_omega.map_or_else(|| isotropy_bound(k), |d| int(d as i64));
    let gh = dim_g_half.unwrap_or(2 * m);
    let g1 = dim_g_1.unwrap_or(k);
    let c = |x: usize| int(x as i64);
    Ok(BoundReport {
        n,
        k,
        s,
        with_components: c(k + 2 * m + s + gh + g1) + &dg,
        with_component_bounds: c(2 * k + 4 * m + s) + &dg,
        with_s_bound: c(2 * k + 4 * m + m * m) + &dg,
        closed_form: closed_form(n, k),
        dim_g_omega: dg,
    })
}

/// `3k²/2 − k(2n + 5/2) + n² + 4n + 1`.
pub fn closed_form(n: usize, k: usize) -> Rational {
    let (n, k) = (int(n as i64), int(k as i64));
    rat(3, 2) * &k * &k - &k * (int(2) * &n + rat(5, 2)) + &n * &n + int(4) * &n + int(1)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SweepEntry {
    pub n: usize,
    pub k: usize,
    #[serde(with = "rational_str")]
    pub estimate: Rational,
    pub target: usize,
    /// `estimate − (n² − 2)`.
    #[serde(with = "rational_str")]
    pub margin: Rational,
}

/// For `5 ≤ n ≤ n_max`, `3 ≤ k ≤ n`: the closed-form bound against `n² − 2`.
pub fn large_k_sweep(n_max: usize) -> Result<Vec<SweepEntry>, Error> {
    if n_max < 5 {
        return Err(Error::InvalidDomain(format!("sweep needs n_max ≥ 5, got {n_max}")));
    }
    let mut out = Vec::new();
    for n in 5..=n_max {
        for k in 3..=n {
            let estimate = closed_form(n, k);
            let target = n * n - 2;
            let margin = &estimate - int(target as i64);
            out.push(SweepEntry { n, k, estimate, target, margin });
        }
    }
    Ok(out)
}

/// `s` for `H = (I, diag(λ))` on `C^{n−2}` with eigenvalue multiplicities
/// `mult`: `(n−2)² − 2·#{pairs with distinct eigenvalues}`.
pub fn s_formula(n: usize, mult: &[usize]) -> Result<usize, Error> {
    if n < 2 || mult.iter().sum::<usize>() != n - 2 || mult.contains(&0) {
        return Err(Error::InvalidDomain(format!("{mult:?} is not a partition of n−2 for n={n}")));
    }
    let mut distinct_pairs = 0;
    for (i, a) in mult.iter().enumerate() {
        for b in &mult[i + 1..] {
            distinct_pairs += a * b;
        }
    }
    Ok((n - 2) * (n - 2) - 2 * distinct_pairs)
}

/// All partitions of `total` into positive parts, parts non-increasing.
pub fn partitions(total: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            go(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(total, total, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Signed;
    use proptest::prelude::*;

    #[test]
    fn branch_bounds() {
        // g₁ enters through its bound k, g½ is known to vanish
        let r = bound_chain(4, 2, Some(2), Some(2), Some(0), None).unwrap();
        assert_eq!(r.with_components, int(12));
        let r = bound_chain(5, 2, Some(5), Some(2), Some(0), None).unwrap();
        assert_eq!(r.with_components, int(17));
        // the k terms cancel: 13 for both k = 2 and k = 3 at n = 4
        for k in [2, 3] {
            let r = bound_chain(4, k, Some(1), Some(4), Some(0), None).unwrap();
            assert_eq!(r.with_components, int(13), "k={k}");
        }
    }

    #[test]
    fn closed_form_values() {
        // 27/2 − 3·21/2 + 33
        assert_eq!(closed_form(4, 3), rat(27, 2) - rat(63, 2) + int(33));
        assert_eq!(closed_form(4, 3), int(15));
        assert_eq!(closed_form(5, 3), int(22));
    }

    #[test]
    fn sweep_margins() {
        let sweep = large_k_sweep(16).unwrap();
        assert!(sweep.iter().all(|e| e.margin.is_negative()));
        let first = &sweep[0];
        assert_eq!((first.n, first.k, first.margin.clone()), (5, 3, int(-1)));
        assert!(sweep.iter().find(|e| (e.n, e.k) == (5, 5)).unwrap().margin.is_negative());
        assert!(sweep.iter().all(|e| e.n >= 5));
        assert!(large_k_sweep(4).is_err());
    }

    #[test]
    fn s_formula_values() {
        assert_eq!(s_formula(4, &[1, 1]).unwrap(), 2);
        assert_eq!(s_formula(5, &[1, 2]).unwrap(), 5);
        assert_eq!(s_formula(5, &[3]).unwrap(), 9);
        assert!(s_formula(5, &[1, 1]).is_err());
    }

    #[test]
    fn partition_counts() {
        assert_eq!(partitions(4).len(), 5);
        assert_eq!(partitions(2), vec![vec![2], vec![1, 1]]);
    }

    #[test]
    fn rejects_bad_dimensions() {
        assert!(bound_chain(3, 0, None, None, None, None).is_err());
        assert!(bound_chain(3, 4, None, None, None, None).is_err());
    }

    proptest! {
        #[test]
        fn chain_is_monotone_under_fallbacks(n in 1usize..12, kk in 0usize..12) {
            let k = kk % n + 1;
            let m = n - k;
            let r = bound_chain(n, k, Some(m * m), None, None, None).unwrap();
            prop_assert!(r.with_components <= r.with_component_bounds);
            prop_assert!(r.with_component_bounds <= r.with_s_bound);
            prop_assert!(r.with_s_bound <= r.closed_form);
        }
    }
}
