//! Matrices of polynomials and their rank over the rational function field.

use num_traits::Zero;

use super::matrix::RealMatrix;
use super::poly::Poly;
use super::scalar::Rational;

/// Matrix whose entries are polynomials over the rationals in `nvars`
/// indeterminates `x_1..x_nvars`.
#[derive(Clone, Debug, PartialEq)]
pub struct PolyMatrix {
    nvars: usize,
    rows: Vec<Vec<Poly<Rational>>>,
    cols: usize,
}

impl PolyMatrix {
    pub fn new(nvars: usize, cols: usize, rows: Vec<Vec<Poly<Rational>>>) -> Self {
        for r in &rows {
            assert_eq!(r.len(), cols, "ragged row");
            assert!(r.iter().all(|p| p.nvars() == nvars), "indeterminate sets differ");
        }
        PolyMatrix { nvars, rows, cols }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn rows(&self) -> usize {
        self.rows.len()
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entry(&self, i: usize, j: usize) -> &Poly<Rational> {
        &self.rows[i][j]
    }

    /// Largest entry degree (0 for an all-zero matrix).
    pub fn max_degree(&self) -> u32 {
        self.rows.iter().flatten().filter_map(Poly::degree).max().unwrap_or(0)
    }

    /// Substitutes a rational point for the indeterminates.
    pub fn evaluate(&self, point: &[Rational]) -> RealMatrix {
        RealMatrix::from_fn(self.rows(), self.cols, |i, j| self.rows[i][j].eval(point))
    }

    /// Rank over `Q(x_1..x_n)` by Bareiss fraction-free elimination.
    ///
    /// At each step the pivot is the nonzero entry of least total degree in
    /// the remaining block, ties broken by column then row. After step `r`
    /// every remaining entry is an `(r+1)`-minor, so each division by the
    /// previous pivot is exact.
    pub fn generic_rank(&self) -> usize {
        let mut a = self.rows.clone();
        let (nr, nc) = (self.rows(), self.cols);
        let mut col_order: Vec<usize> = (0..nc).collect();
        let mut prev = Poly::constant(self.nvars, Rational::from_integer(1.into()));
        let mut rank = 0;
        while rank < nr.min(nc) {
            let mut best: Option<(u32, usize, usize)> = None;
            for (cpos, &c) in col_order.iter().enumerate().skip(rank) {
                for (r, row) in a.iter().enumerate().skip(rank) {
                    if let Some(d) = row[c].degree() {
                        let cand = (d, cpos, r);
                        if best.is_none_or(|b| cand < b) {
                            best = Some(cand);
                        }
                    }
                }
            }
            let Some((_, cpos, r)) = best else { break };
            a.swap(rank, r);
            col_order.swap(rank, cpos);
            let pc = col_order[rank];
            let pivot = a[rank][pc].clone();
            for i in rank + 1..nr {
                let lead = a[i][pc].clone();
                for &c in &col_order[rank + 1..] {
                    let num = pivot.mul(&a[i][c]).sub(&lead.mul(&a[rank][c]));
                    a[i][c] = num
                        .div_exact(&prev)
                        .expect("Bareiss step must divide exactly");
                }
                a[i][pc] = Poly::zero(self.nvars);
            }
            prev = pivot;
            rank += 1;
        }
        rank
    }
}

/// Rows `A_i x` for a list of `k×k` matrices and symbolic `x = (x_1..x_k)`.
pub fn evaluation_matrix(basis: &[RealMatrix], k: usize) -> PolyMatrix {
    let rows = basis
        .iter()
        .map(|a| {
            (0..k)
                .map(|i| {
                    let mut p = Poly::zero(k);
                    for j in 0..k {
                        if !a[(i, j)].is_zero() {
                            p = p.add(&Poly::var(k, j).scale(&a[(i, j)]));
                        }
                    }
                    p
                })
                .collect()
        })
        .collect();
    PolyMatrix::new(k, k, rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_linalg::scalar::{int, rat};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn x(i: usize) -> Poly<Rational> {
        Poly::var(2, i)
    }

    #[test]
    fn diagonal_has_full_rank() {
        let z = Poly::zero(2);
        let m = PolyMatrix::new(2, 2, vec![vec![x(0), z.clone()], vec![z, x(1)]]);
        assert_eq!(m.generic_rank(), 2);
    }

    #[test]
    fn repeated_row_has_rank_one() {
        let m = PolyMatrix::new(2, 2, vec![vec![x(0), x(1)], vec![x(0), x(1)]]);
        assert_eq!(m.generic_rank(), 1);
    }

    #[test]
    fn rank_drops_only_on_a_subvariety() {
        // det = x0^2 - x1^2, nonzero as a polynomial
        let m = PolyMatrix::new(2, 2, vec![vec![x(0), x(1)], vec![x(1), x(0)]]);
        assert_eq!(m.generic_rank(), 2);
        assert_eq!(m.evaluate(&[int(1), int(1)]).rank(), 1);
    }

    /// Max pointwise rank over 20 random rational points in the open orthant.
    fn sampled_rank(m: &PolyMatrix, seed: u64) -> usize {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (0..20)
            .map(|_| {
                let pt: Vec<Rational> =
                    (0..m.nvars()).map(|_| rat(rng.gen_range(1..17), rng.gen_range(1..17))).collect();
                m.evaluate(&pt).rank()
            })
            .max()
            .unwrap_or(0)
    }

    #[test]
    fn scalar_subalgebra_evaluation_rank() {
        let m = evaluation_matrix(&[RealMatrix::identity(2)], 2);
        assert_eq!(m.rows(), 1);
        assert_eq!(sampled_rank(&m, 7), 1);
        assert_eq!(m.generic_rank(), 1);
    }

    #[test]
    fn generic_rank_dominates_pointwise_rank() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..30 {
            let nb = rng.gen_range(1..5);
            let basis: Vec<RealMatrix> = (0..nb)
                .map(|_| RealMatrix::from_fn(3, 3, |_, _| int(rng.gen_range(-2..3))))
                .collect();
            let m = evaluation_matrix(&basis, 3);
            let g = m.generic_rank();
            assert_eq!(g, sampled_rank(&m, 3), "sampled oracle disagrees");
            let pt = vec![int(1), int(0), int(-1)];
            assert!(m.evaluate(&pt).rank() <= g);
        }
    }

    #[test]
    fn higher_degree_entries() {
        let sq = x(0).mul(&x(0));
        let m = PolyMatrix::new(
            2,
            3,
            vec![vec![sq.clone(), x(1), x(0)], vec![sq.mul(&x(1)), x(1).mul(&x(1)), x(0).mul(&x(1))]],
        );
        assert_eq!(m.max_degree(), 3);
        assert_eq!(m.generic_rank(), 1);
    }
}
