//! Dense matrices over an exact field, with deterministic row reduction.

use std::fmt;
use std::ops::{Index, IndexMut};

use num_traits::Zero;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::scalar::{format_rational, Field, GaussianRational, Rational, RationalRepr};

/// Row-major dense matrix.
#[derive(Clone, PartialEq, Debug)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

/// Matrix restricted to rational entries (the real matrices `A` in `g(Ω)`).
pub type RealMatrix = Matrix<Rational>;
/// Matrix over the Gaussian rationals (Hermitian components, `B ∈ gl_m(C)`).
pub type ComplexMatrix = Matrix<GaussianRational>;

/// Output of [`Matrix::rref`].
#[derive(Clone, Debug, PartialEq)]
pub struct Rref<F> {
    pub reduced: Matrix<F>,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

impl<F: Field> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![F::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = F::one();
        }
        m
    }

    /// Builds from row vectors. All rows must have length `cols`.
    pub fn from_rows(cols: usize, rows: Vec<Vec<F>>) -> Self {
        let r = rows.len();
        let mut data = Vec::with_capacity(r * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "ragged row");
            data.extend(row);
        }
        Matrix { rows: r, cols, data }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> F) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn diagonal(entries: Vec<F>) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n, n);
        for (i, e) in entries.into_iter().enumerate() {
            m[(i, i)] = e;
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[F] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<F>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    /// Row-major flattening, used to treat `k×k` matrices as vectors.
    pub fn vectorize(&self) -> Vec<F> {
        self.data.clone()
    }

    pub fn from_vector(rows: usize, cols: usize, v: Vec<F>) -> Self {
        assert_eq!(v.len(), rows * cols);
        Matrix { rows, cols, data: v }
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn conj_transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].conj())
    }

    pub fn conj(&self) -> Self {
        Self::from_fn(self.rows, self.cols, |i, j| self[(i, j)].conj())
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        Self::from_fn(self.rows, self.cols, |i, j| self[(i, j)].clone() + o[(i, j)].clone())
    }

    pub fn sub(&self, o: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        Self::from_fn(self.rows, self.cols, |i, j| self[(i, j)].clone() - o[(i, j)].clone())
    }

    pub fn scale(&self, s: &F) -> Self {
        Self::from_fn(self.rows, self.cols, |i, j| self[(i, j)].clone() * s.clone())
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.cols, o.rows, "inner dimensions differ");
        Self::from_fn(self.rows, o.cols, |i, j| {
            (0..self.cols).fold(F::zero(), |acc, t| acc + self[(i, t)].clone() * o[(t, j)].clone())
        })
    }

    pub fn mul_vec(&self, v: &[F]) -> Vec<F> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(F::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
            })
            .collect()
    }

    pub fn trace(&self) -> F {
        (0..self.rows.min(self.cols)).fold(F::zero(), |acc, i| acc + self[(i, i)].clone())
    }

    pub fn is_hermitian(&self) -> bool {
        self.is_square() && *self == self.conj_transpose()
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Reduced row-echelon form. Columns are scanned left to right; the pivot
    /// in each column is the first nonzero entry at or below the current row.
    pub fn rref(&self) -> Rref<F> {
        let mut a = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..a.cols {
            if r == a.rows {
                break;
            }
            let Some(p) = (r..a.rows).find(|&i| !a[(i, c)].is_zero()) else {
                continue;
            };
            a.swap_rows(r, p);
            let inv = a[(r, c)].inv();
            for j in c..a.cols {
                let v = a[(r, j)].clone() * inv.clone();
                a[(r, j)] = v;
            }
            for i in 0..a.rows {
                if i == r || a[(i, c)].is_zero() {
                    continue;
                }
                let factor = a[(i, c)].clone();
                for j in c..a.cols {
                    if a[(r, j)].is_zero() {
                        continue;
                    }
                    let v = a[(i, j)].clone() - factor.clone() * a[(r, j)].clone();
                    a[(i, j)] = v;
                }
            }
            pivots.push(c);
            r += 1;
        }
        Rref { reduced: a, rank: r, pivots }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Kernel basis. Free columns are set to 1 one at a time, in column order.
    pub fn nullspace_basis(&self) -> Vec<Vec<F>> {
        let Rref { reduced, pivots, .. } = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = vec![F::zero(); self.cols];
                v[free] = F::one();
                for (row, &pc) in pivots.iter().enumerate() {
                    v[pc] = -reduced[(row, free)].clone();
                }
                v
            })
            .collect()
    }

    /// Nonzero rows of the reduced form: a canonical basis of the row space.
    pub fn row_space_basis(&self) -> Vec<Vec<F>> {
        let Rref { reduced, rank, .. } = self.rref();
        (0..rank).map(|i| reduced.row(i).to_vec()).collect()
    }

    /// Whether `v` lies in the span of the rows of `self`.
    pub fn row_span_contains(&self, v: &[F]) -> bool {
        assert_eq!(v.len(), self.cols);
        let mut rows = self.row_vecs();
        rows.push(v.to_vec());
        Matrix::from_rows(self.cols, rows).rank() == self.rank()
    }
}

impl ComplexMatrix {
    pub fn from_real(m: &RealMatrix) -> Self {
        Self::from_fn(m.rows(), m.cols(), |i, j| GaussianRational::real(m[(i, j)].clone()))
    }

    pub fn is_real(&self) -> bool {
        self.data.iter().all(GaussianRational::is_real)
    }

    /// Real part, when all imaginary parts vanish.
    pub fn to_real(&self) -> Option<RealMatrix> {
        self.is_real()
            .then(|| RealMatrix::from_fn(self.rows, self.cols, |i, j| self[(i, j)].re.clone()))
    }
}

impl<F> Index<(usize, usize)> for Matrix<F> {
    type Output = F;
    fn index(&self, (i, j): (usize, usize)) -> &F {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl<F> IndexMut<(usize, usize)> for Matrix<F> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut F {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl<F: Field> fmt::Display for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            write!(f, "{}", row.join(", "))?;
        }
        write!(f, "]")
    }
}

// JSON: a matrix is a list of rows. Real entries are "p/q" strings, complex
// entries {"re", "im"} objects.

impl Serialize for RealMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let rows: Vec<Vec<String>> =
            (0..self.rows).map(|i| self.row(i).iter().map(format_rational).collect()).collect();
        rows.serialize(s)
    }
}

impl<'de> Deserialize<'de> for RealMatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = Vec::<Vec<RationalRepr>>::deserialize(d)?;
        let cols = raw.first().map_or(0, Vec::len);
        let mut rows = Vec::with_capacity(raw.len());
        for r in raw {
            if r.len() != cols {
                return Err(serde::de::Error::custom("ragged matrix rows"));
            }
            rows.push(
                r.into_iter()
                    .map(|x| x.into_rational().map_err(serde::de::Error::custom))
                    .collect::<Result<Vec<_>, _>>()?,
            );
        }
        Ok(Matrix::from_rows(cols, rows))
    }
}

impl Serialize for ComplexMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.row_vecs().serialize(s)
    }
}

impl<'de> Deserialize<'de> for ComplexMatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = Vec::<Vec<GaussianRational>>::deserialize(d)?;
        let cols = raw.first().map_or(0, Vec::len);
        if raw.iter().any(|r| r.len() != cols) {
            return Err(serde::de::Error::custom("ragged matrix rows"));
        }
        Ok(Matrix::from_rows(cols, raw))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_linalg::scalar::{int, rat};
    use num_traits::One;
    use proptest::prelude::*;

    fn rm(rows: &[&[i64]]) -> RealMatrix {
        let cols = rows.first().map_or(0, |r| r.len());
        Matrix::from_rows(cols, rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect())
    }

    #[test]
    fn rref_identity() {
        let r = RealMatrix::identity(3).rref();
        assert_eq!(r.rank, 3);
        assert_eq!(r.pivots, vec![0, 1, 2]);
    }

    #[test]
    fn rref_zero() {
        let r = RealMatrix::zeros(2, 2).rref();
        assert_eq!(r.rank, 0);
        assert!(r.pivots.is_empty());
    }

    #[test]
    fn rref_dependent_rows() {
        let r = rm(&[&[1, 2], &[2, 4]]).rref();
        assert_eq!(r.rank, 1);
        assert_eq!(r.pivots, vec![0]);
        assert_eq!(r.reduced, rm(&[&[1, 2], &[0, 0]]));
    }

    #[test]
    fn nullspace_examples() {
        assert!(RealMatrix::identity(2).nullspace_basis().is_empty());
        assert_eq!(rm(&[&[1, -1]]).nullspace_basis(), vec![vec![int(1), int(1)]]);
        assert_eq!(rm(&[&[1, 2], &[2, 4]]).nullspace_basis(), vec![vec![int(-2), int(1)]]);
    }

    #[test]
    fn complex_rref_and_hermitian() {
        let i = GaussianRational::i();
        let one = GaussianRational::one();
        let m = ComplexMatrix::from_rows(2, vec![vec![one.clone(), i.clone()], vec![-i.clone(), one.clone()]]);
        assert!(m.is_hermitian());
        // rows are i-multiples of each other
        assert_eq!(m.rank(), 1);
        let k = m.nullspace_basis();
        assert_eq!(k.len(), 1);
        assert!(m.mul_vec(&k[0]).iter().all(Zero::is_zero));
    }

    #[test]
    fn json_round_trip() {
        let m = Matrix::from_rows(2, vec![vec![rat(1, 2), int(0)], vec![int(-3), rat(7, 5)]]);
        let s = serde_json::to_string(&m).unwrap();
        assert_eq!(s, r#"[["1/2","0"],["-3","7/5"]]"#);
        let back: RealMatrix = serde_json::from_str(&s).unwrap();
        assert_eq!(back, m);
    }

    fn small_matrix() -> impl Strategy<Value = RealMatrix> {
        (1usize..5, 1usize..6).prop_flat_map(|(r, c)| {
            prop::collection::vec(-3i64..4, r * c).prop_map(move |v| {
                Matrix::from_vector(r, c, v.into_iter().map(int).collect())
            })
        })
    }

    proptest! {
        #[test]
        fn rank_nullity(m in small_matrix()) {
            let basis = m.nullspace_basis();
            prop_assert_eq!(m.rank() + basis.len(), m.cols());
            for v in &basis {
                prop_assert!(m.mul_vec(v).iter().all(Zero::is_zero));
            }
            let as_rows = Matrix::from_rows(m.cols(), basis.clone());
            prop_assert_eq!(as_rows.rank(), basis.len());
        }

        #[test]
        fn rref_idempotent(m in small_matrix()) {
            let once = m.rref().reduced;
            prop_assert_eq!(once.rref().reduced, once);
        }

        #[test]
        fn row_permutation_invariance(
            (m, order) in small_matrix().prop_flat_map(|m| {
                let idx: Vec<usize> = (0..m.rows()).collect();
                (Just(m), Just(idx).prop_shuffle())
            })
        ) {
            let p = Matrix::from_rows(m.cols(), order.iter().map(|&i| m.row(i).to_vec()).collect());
            prop_assert_eq!(p.rank(), m.rank());
            prop_assert_eq!(p.nullspace_basis().len(), m.nullspace_basis().len());
        }
    }
}
