//! Dense exact matrices over any [`Ring`].

use crate::error::Error;
use crate::scalar::{Rational, RationalField, Ring};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use num::bigint::BigInt;
use num::{One, Zero};

/// A dense matrix over one scalar ring. Row-major storage.
#[derive(Clone, PartialEq, Debug)]
pub struct Matrix<R: Ring> {
    pub ring: R,
    pub rows: usize,
    pub cols: usize,
    data: Vec<R::Elem>,
}

impl<R: Ring> Matrix<R> {
    pub fn zero(ring: R, rows: usize, cols: usize) -> Self {
        let data = vec![ring.zero(); rows * cols];
        Matrix {
            ring,
            rows,
            cols,
            data,
        }
    }

    pub fn identity(ring: R, n: usize) -> Self {
        let mut m = Matrix::zero(ring, n, n);
        for i in 0..n {
            let one = m.ring.one();
            m.set(i, i, one);
        }
        m
    }

    pub fn from_rows(ring: R, rows: Vec<Vec<R::Elem>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        Matrix {
            ring,
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_fn(ring: R, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> R::Elem) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix {
            ring,
            rows,
            cols,
            data,
        }
    }

    #[inline]
    pub fn at(&self, i: usize, j: usize) -> &R::Elem {
        &self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: R::Elem) {
        self.data[i * self.cols + j] = v;
    }

    pub fn entries(&self) -> &[R::Elem] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|e| self.ring.is_zero(e))
    }

    fn check_ring(&self, other: &Self) -> Result<(), Error> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, Error> {
        self.check_ring(other)?;
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} + {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| self.ring.add(a, b))
            .collect();
        Ok(Matrix {
            ring: self.ring.clone(),
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, Error> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Matrix {
            ring: self.ring.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| self.ring.neg(a)).collect(),
        }
    }

    pub fn scale(&self, c: &R::Elem) -> Self {
        Matrix {
            ring: self.ring.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| self.ring.mul(a, c)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self, Error> {
        self.check_ring(other)?;
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} * {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let ring = self.ring.clone();
        let mut out = Matrix::zero(ring.clone(), self.rows, other.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self.at(i, l);
                if ring.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.at(l, j);
                    if ring.is_zero(b) {
                        continue;
                    }
                    let prod = ring.mul(a, b);
                    let cur = out.at(i, j);
                    let sum = ring.add(cur, &prod);
                    out.set(i, j, sum);
                }
            }
        }
        Ok(out)
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.ring.clone(), self.cols, self.rows, |i, j| {
            self.at(j, i).clone()
        })
    }

    /// Standard Kronecker product:
    /// `(A (x) B)[(i*rB+k), (j*cB+l)] = A[i,j] * B[k,l]`.
    pub fn kronecker(&self, other: &Self) -> Result<Self, Error> {
        self.check_ring(other)?;
        let ring = self.ring.clone();
        let (ra, ca) = (self.rows, self.cols);
        let (rb, cb) = (other.rows, other.cols);
        let mut out = Matrix::zero(ring.clone(), ra * rb, ca * cb);
        for i in 0..ra {
            for j in 0..ca {
                let a = self.at(i, j);
                if ring.is_zero(a) {
                    continue;
                }
                for k in 0..rb {
                    for l in 0..cb {
                        let b = other.at(k, l);
                        if ring.is_zero(b) {
                            continue;
                        }
                        out.set(i * rb + k, j * cb + l, ring.mul(a, b));
                    }
                }
            }
        }
        Ok(out)
    }

    /// Rank by Gaussian elimination with the first-nonzero pivot rule,
    /// scanning row-major. Pivots must be units of the ring; a non-invertible
    /// pivot (e.g. a genuine Laurent polynomial) is reported as an unsupported
    /// ring, directing the caller to specialize `q` first.
    pub fn rank(&self) -> Result<usize, Error> {
        let ring = self.ring.clone();
        let mut m = self.clone();
        let mut rank = 0usize;
        let mut row = 0usize;
        for col in 0..m.cols {
            if row >= m.rows {
                break;
            }
            let pivot_row = (row..m.rows).find(|&r| !ring.is_zero(m.at(r, col)));
            let Some(pr) = pivot_row else { continue };
            m.swap_rows(row, pr);
            let pivot = m.at(row, col).clone();
            let pivot_inv = ring
                .inv(&pivot)
                .ok_or(Error::UnsupportedRing("non-invertible pivot; specialize q"))?;
            for r in row + 1..m.rows {
                let factor = ring.mul(m.at(r, col), &pivot_inv);
                if ring.is_zero(&factor) {
                    continue;
                }
                for c in col..m.cols {
                    let val = ring.sub(m.at(r, c), &ring.mul(&factor, m.at(row, c)));
                    m.set(r, c, val);
                }
            }
            rank += 1;
            row += 1;
        }
        Ok(rank)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }
}

/// Writes each `basis_image` as a column and solves for the unique coefficient
/// vector expressing `target`; `Inconsistent` when the target lies outside the
/// span, `NonUnique` when the images are dependent.
pub fn solve_in_span<R: Ring>(
    basis_images: &[Matrix<R>],
    target: &Matrix<R>,
) -> Result<Vec<R::Elem>, Error> {
    let ring = target.ring.clone();
    let n = basis_images.len();
    let dim = target.rows * target.cols;
    for b in basis_images {
        if b.ring != ring {
            return Err(Error::RingMismatch);
        }
        if b.rows != target.rows || b.cols != target.cols {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} vs {}x{}",
                b.rows, b.cols, target.rows, target.cols
            )));
        }
    }
    // Augmented system [A | t], A's columns are the flattened images.
    let mut aug = Matrix::zero(ring.clone(), dim, n + 1);
    for (j, b) in basis_images.iter().enumerate() {
        for (i, e) in b.entries().iter().enumerate() {
            aug.set(i, j, e.clone());
        }
    }
    for (i, e) in target.entries().iter().enumerate() {
        aug.set(i, n, e.clone());
    }
    // Forward elimination, first-nonzero pivot scanning row-major.
    let mut pivot_of_col: Vec<Option<usize>> = vec![None; n];
    let mut row = 0usize;
    for col in 0..n {
        let pr = (row..dim).find(|&r| !ring.is_zero(aug.at(r, col)));
        let Some(pr) = pr else { continue };
        aug.swap_rows(row, pr);
        let pivot_inv = ring
            .inv(aug.at(row, col))
            .ok_or(Error::UnsupportedRing("non-invertible pivot; specialize q"))?;
        for r in 0..dim {
            if r == row || ring.is_zero(aug.at(r, col)) {
                continue;
            }
            let factor = ring.mul(aug.at(r, col), &pivot_inv);
            for c in col..=n {
                let val = ring.sub(aug.at(r, c), &ring.mul(&factor, aug.at(row, c)));
                aug.set(r, c, val);
            }
        }
        pivot_of_col[col] = Some(row);
        row += 1;
    }
    if pivot_of_col.iter().any(Option::is_none) {
        return Err(Error::NonUnique);
    }
    // Any remaining nonzero RHS entry means the target is outside the span.
    for r in row..dim {
        if !ring.is_zero(aug.at(r, n)) {
            return Err(Error::Inconsistent);
        }
    }
    let mut coeffs = vec![ring.zero(); n];
    for (col, pr) in pivot_of_col.iter().enumerate() {
        let pr = pr.expect("checked above");
        let pivot = aug.at(pr, col).clone();
        let rhs = aug.at(pr, n).clone();
        coeffs[col] = ring
            .div(&rhs, &pivot)
            .ok_or(Error::UnsupportedRing("non-invertible pivot; specialize q"))?;
    }
    Ok(coeffs)
}

impl Matrix<RationalField> {
    /// Rank via fraction-free Bareiss elimination on the cleared-denominator
    /// integer matrix; exact, and avoids rational blowup on large inputs.
    pub fn rank_bareiss(&self) -> usize {
        let rows = self.rows;
        let cols = self.cols;
        if rows == 0 || cols == 0 {
            return 0;
        }
        // Clear denominators row by row (row scaling preserves rank).
        let mut m: Vec<Vec<BigInt>> = Vec::with_capacity(rows);
        for i in 0..rows {
            let mut lcm = BigInt::one();
            for j in 0..cols {
                lcm = num::integer::lcm(lcm, self.at(i, j).denom().clone());
            }
            m.push(
                (0..cols)
                    .map(|j| {
                        let e = self.at(i, j);
                        e.numer() * (&lcm / e.denom())
                    })
                    .collect(),
            );
        }
        let mut rank = 0usize;
        let mut row = 0usize;
        let mut prev = BigInt::one();
        for col in 0..cols {
            if row >= rows {
                break;
            }
            let Some(pr) = (row..rows).find(|&r| !m[r][col].is_zero()) else {
                continue;
            };
            m.swap(row, pr);
            for r in row + 1..rows {
                for c in col + 1..cols {
                    let num = &m[row][col] * &m[r][c] - &m[r][col] * &m[row][c];
                    m[r][c] = &num / &prev;
                }
                m[r][col] = BigInt::zero();
            }
            prev = m[row][col].clone();
            rank += 1;
            row += 1;
        }
        rank
    }
}

/// Convenience: an integer matrix mapped into any ring.
pub fn int_matrix<R: Ring>(ring: R, rows: usize, cols: usize, data: &[i64]) -> Matrix<R> {
    assert_eq!(data.len(), rows * cols);
    Matrix::from_fn(ring.clone(), rows, cols, |i, j| {
        ring.from_int(data[i * cols + j])
    })
}

/// Serialize per the text contract: row-major entry strings.
pub fn matrix_entry_strings<R: Ring>(m: &Matrix<R>) -> Vec<String> {
    m.entries().iter().map(|e| m.ring.format(e)).collect()
}

pub fn rational(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::PrimeField;

    #[test]
    fn kronecker_identities() {
        let q = RationalField;
        let i2 = Matrix::identity(q, 2);
        let i4 = Matrix::identity(q, 4);
        assert_eq!(i2.kronecker(&i2).unwrap(), i4);
    }

    #[test]
    fn kronecker_cup_cap() {
        // ev row and coev column from the defining representation.
        let q = RationalField;
        let cap = int_matrix(q, 1, 4, &[0, 1, -1, 0]);
        let cup = int_matrix(q, 4, 1, &[0, -1, 1, 0]);
        let cc = cap.kronecker(&cup).unwrap();
        let expected = int_matrix(q, 4, 4, &[0, 0, 0, 0, 0, -1, 1, 0, 0, 1, -1, 0, 0, 0, 0, 0]);
        assert_eq!(cc, expected);
        // and ev . coev = -2
        let loop_val = cap.mul(&cup).unwrap();
        assert_eq!(loop_val.at(0, 0), &rational(-2, 1));
    }

    #[test]
    fn rank_examples() {
        let q = RationalField;
        assert_eq!(Matrix::identity(q, 8).rank().unwrap(), 8);
        assert_eq!(Matrix::zero(q, 4, 4).rank().unwrap(), 0);
        assert_eq!(Matrix::identity(q, 8).rank_bareiss(), 8);
        let m = int_matrix(q, 3, 3, &[1, 2, 3, 2, 4, 6, 1, 1, 1]);
        assert_eq!(m.rank().unwrap(), 2);
        assert_eq!(m.rank_bareiss(), 2);
    }

    #[test]
    fn rank_over_prime_field() {
        let f = PrimeField::new(17);
        let m = int_matrix(f, 2, 2, &[1, 16, 16, 1]);
        assert_eq!(m.rank().unwrap(), 1);
    }

    #[test]
    fn solve_in_span_unique() {
        let q = RationalField;
        let b1 = int_matrix(q, 2, 2, &[1, 0, 0, 1]);
        let b2 = int_matrix(q, 2, 2, &[0, 1, 1, 0]);
        let target = int_matrix(q, 2, 2, &[3, -1, -1, 3]);
        let c = solve_in_span(&[b1.clone(), b2.clone()], &target).unwrap();
        assert_eq!(c, vec![rational(3, 1), rational(-1, 1)]);
        // outside the span
        let bad = int_matrix(q, 2, 2, &[1, 1, 0, 0]);
        assert_eq!(solve_in_span(&[b1.clone(), b2], &bad), Err(Error::Inconsistent));
        // dependent basis
        assert_eq!(
            solve_in_span(&[b1.clone(), b1.scale(&rational(2, 1))], &target),
            Err(Error::NonUnique)
        );
    }

    #[test]
    fn laurent_rank_unsupported() {
        use crate::scalar::{Laurent, LaurentRing};
        let l = LaurentRing;
        let two = l.add(&Laurent::q_pow(1), &Laurent::q_pow(-1));
        let m = Matrix::from_rows(l, vec![vec![two]]);
        assert_eq!(
            m.rank(),
            Err(Error::UnsupportedRing("non-invertible pivot; specialize q"))
        );
    }
}
