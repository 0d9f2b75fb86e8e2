//! Small dense matrices over exact rings, with fraction-free determinants.
//!
//! Sizes in this crate are tiny (at most a few dozen rows), so the
//! representation is a plain row-major `Vec`.  Two exact determinant routines
//! are provided: Bareiss elimination for Laurent polynomial entries (all
//! intermediate divisions are exact by the Sylvester identity) and a
//! bitmask expansion usable over any [`Ring`], which serves as an independent
//! cross-check and handles rings without exact division.

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::ring::Ring;
use crate::scalar::Scalar;

/// Row-major dense matrix over a ring.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix<T: Ring> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Ring> Matrix<T> {
    /// Zero matrix of the given shape.
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![T::ring_zero(); rows * cols],
        }
    }

    /// Identity matrix.
    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = T::ring_one();
        }
        m
    }

    /// Build from a closure over `(row, col)`.
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    /// Number of rows.
    pub fn rows(&self) -> usize {
        self.rows
    }

    /// Number of columns.
    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Matrix sum.
    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.ring_add(b))
                .collect(),
        }
    }

    /// Matrix difference.
    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.ring_sub(b))
                .collect(),
        }
    }

    /// Matrix product.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "inner dimensions must agree");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.ring_is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if b.ring_is_zero() {
                        continue;
                    }
                    out[(i, j)] = out[(i, j)].ring_add(&a.ring_mul(b));
                }
            }
        }
        out
    }

    /// Apply to a column vector.
    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = T::ring_zero();
                for j in 0..self.cols {
                    let a = &self[(i, j)];
                    if !a.ring_is_zero() && !v[j].ring_is_zero() {
                        acc = acc.ring_add(&a.ring_mul(&v[j]));
                    }
                }
                acc
            })
            .collect()
    }

    /// Map entries.
    pub fn map<U: Ring>(&self, mut f: impl FnMut(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(&mut f).collect(),
        }
    }

    /// Whether every entry strictly below the diagonal is the only place a
    /// nonzero appears (strictly lower triangular).
    pub fn is_strictly_lower(&self) -> bool {
        for i in 0..self.rows {
            for j in i..self.cols {
                if !self[(i, j)].ring_is_zero() {
                    return false;
                }
            }
        }
        true
    }

    /// Determinant by expansion over columns with a bitmask of used rows.
    ///
    /// Exponential in the size but exact over any ring; intended for
    /// cross-checks and sizes up to about 12.
    pub fn det_expansion(&self) -> T {
        assert_eq!(self.rows, self.cols, "determinant needs a square matrix");
        let n = self.rows;
        assert!(n <= 16, "expansion determinant limited to small sizes");
        if n == 0 {
            return T::ring_one();
        }
        // memo[mask] = determinant of the submatrix using rows in `mask`
        // and the first popcount(mask) columns.
        let mut memo: std::collections::HashMap<u32, T> = std::collections::HashMap::new();
        memo.insert(0, T::ring_one());
        self.det_mask(((1u32 << n) - 1) as u32, &mut memo)
    }

    fn det_mask(&self, mask: u32, memo: &mut std::collections::HashMap<u32, T>) -> T {
        if let Some(v) = memo.get(&mask) {
            return v.clone();
        }
        let col = (mask.count_ones() - 1) as usize;
        let mut acc = T::ring_zero();
        // Expansion along column `col`: cofactor sign is (-1)^(k + col) where
        // k is the position of the row among the remaining ones.
        let mut sign_flip = col % 2 == 1;
        let n = self.rows;
        for row in 0..n {
            if mask & (1 << row) == 0 {
                continue;
            }
            let entry = &self[(row, col)];
            if !entry.ring_is_zero() {
                let sub = self.det_mask(mask & !(1 << row), memo);
                let term = entry.ring_mul(&sub);
                acc = if sign_flip {
                    acc.ring_sub(&term)
                } else {
                    acc.ring_add(&term)
                };
            }
            sign_flip = !sign_flip;
        }
        memo.insert(mask, acc.clone());
        acc
    }

    /// Solve `(I - L) x = v` where `L` is strictly lower triangular, by
    /// forward substitution.
    pub fn solve_unit_lower(l: &Self, v: &[T]) -> Vec<T> {
        let n = l.rows;
        assert_eq!(n, v.len());
        let mut x = vec![T::ring_zero(); n];
        for i in 0..n {
            let mut acc = v[i].clone();
            for j in 0..i {
                let a = &l[(i, j)];
                if !a.ring_is_zero() && !x[j].ring_is_zero() {
                    acc = acc.ring_add(&a.ring_mul(&x[j]));
                }
            }
            x[i] = acc;
        }
        x
    }

    /// Inverse of a unit lower triangular matrix (ones on the diagonal).
    pub fn invert_unit_lower(&self) -> Self {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut inv = Self::identity(n);
        // Solve self * X = I column by column; self = I + strictly-lower part.
        for col in 0..n {
            for i in 0..n {
                let mut acc = if i == col { T::ring_one() } else { T::ring_zero() };
                for j in 0..i {
                    let a = &self[(i, j)];
                    if !a.ring_is_zero() {
                        let prev = inv[(j, col)].clone();
                        if !prev.ring_is_zero() {
                            acc = acc.ring_sub(&a.ring_mul(&prev));
                        }
                    }
                }
                inv[(i, col)] = acc;
            }
        }
        inv
    }
}

impl<T: Ring> std::ops::Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.data[i * self.cols + j]
    }
}

impl<T: Ring> std::ops::IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        &mut self.data[i * self.cols + j]
    }
}

/// Fraction-free determinant of a Laurent polynomial matrix by Bareiss
/// elimination.  Every division performed is exact.
pub fn det_bareiss<C: Scalar>(m: &Matrix<LaurentPoly<C>>) -> Result<LaurentPoly<C>> {
    assert_eq!(m.rows(), m.cols(), "determinant needs a square matrix");
    let n = m.rows();
    if n == 0 {
        return Ok(LaurentPoly::one());
    }
    let mut a = m.clone();
    let mut sign = false;
    let mut prev = LaurentPoly::one();
    for k in 0..n - 1 {
        if a[(k, k)].is_zero() {
            // Find a row to swap below.
            let Some(swap) = (k + 1..n).find(|&i| !a[(i, k)].is_zero()) else {
                return Ok(LaurentPoly::zero());
            };
            for j in 0..n {
                let tmp = a[(k, j)].clone();
                a[(k, j)] = a[(swap, j)].clone();
                a[(swap, j)] = tmp;
            }
            sign = !sign;
        }
        let pivot = a[(k, k)].clone();
        for i in k + 1..n {
            for j in k + 1..n {
                let num = a[(i, j)].mul(&pivot).sub(&a[(i, k)].mul(&a[(k, j)]));
                a[(i, j)] = num.exact_div(&prev).map_err(|_| {
                    Error::Invalid("internal: Bareiss division was not exact".to_string())
                })?;
            }
        }
        prev = pivot;
    }
    let det = a[(n - 1, n - 1)].clone();
    Ok(if sign { det.neg() } else { det })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::VarRegistry;
    use num_bigint::BigInt;

    type P = LaurentPoly<BigInt>;

    fn sample_matrix(n: usize, reg: &mut VarRegistry) -> Matrix<P> {
        // Entries x_{ij} + (i + j) keep the determinant generic.
        Matrix::from_fn(n, n, |i, j| {
            let v = reg.intern(&format!("m{i}{j}"));
            P::var(v).add(&P::int((i + j) as i64))
        })
    }

    #[test]
    fn bareiss_matches_expansion_determinant() {
        let mut reg = VarRegistry::new();
        for n in 1..=4 {
            let m = sample_matrix(n, &mut reg);
            assert_eq!(
                det_bareiss(&m).unwrap(),
                m.det_expansion(),
                "determinants agree at size {n}"
            );
        }
    }

    #[test]
    fn determinant_of_singular_matrix_is_zero() {
        let mut reg = VarRegistry::new();
        let x = P::var(reg.intern("x"));
        // Two equal rows.
        let m = Matrix::from_fn(3, 3, |i, j| {
            if i < 2 {
                x.pow(j as u32 + 1)
            } else {
                P::int((j + 1) as i64)
            }
        });
        assert_eq!(det_bareiss(&m).unwrap(), P::zero());
        assert_eq!(m.det_expansion(), P::zero());
    }

    #[test]
    fn pivot_swap_tracks_sign() {
        // [[0, 1], [1, 0]] has determinant -1.
        let mut m = Matrix::<P>::zeros(2, 2);
        m[(0, 1)] = P::one();
        m[(1, 0)] = P::one();
        assert_eq!(det_bareiss(&m).unwrap(), P::int(-1));
    }

    #[test]
    fn unit_lower_solve_and_inverse() {
        let mut reg = VarRegistry::new();
        let a = P::var(reg.intern("a"));
        let b = P::var(reg.intern("b"));
        // L strictly lower with entries a, b, ab.
        let mut l = Matrix::<P>::zeros(3, 3);
        l[(1, 0)] = a.clone();
        l[(2, 0)] = b.clone();
        l[(2, 1)] = a.mul(&b);
        let v = vec![P::one(), P::zero(), P::one()];
        let x = Matrix::solve_unit_lower(&l, &v);
        // Check (I - L) x = v.
        let ix = Matrix::identity(3).sub(&l).mul_vec(&x);
        assert_eq!(ix, v);

        let f = Matrix::identity(3).add(&l);
        let finv = f.invert_unit_lower();
        assert_eq!(f.mul(&finv), Matrix::identity(3));
        assert_eq!(finv.mul(&f), Matrix::identity(3));
    }

    #[test]
    fn strictly_lower_detection() {
        let mut m = Matrix::<P>::zeros(2, 2);
        m[(1, 0)] = P::one();
        assert!(m.is_strictly_lower());
        m[(0, 1)] = P::one();
        assert!(!m.is_strictly_lower());
    }
}
