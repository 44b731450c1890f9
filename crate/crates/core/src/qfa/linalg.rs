//! Exact dense linear algebra over the Gaussian rationals.

use crate::core::{GaussianRational, Rational};
use crate::{Error, Result};
use num_traits::Zero;

/// Dense matrix of Gaussian rationals, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<GaussianRational>,
}

impl std::fmt::Debug for Matrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.get(r, c).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl Matrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![GaussianRational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zero(n, n);
        for i in 0..n {
            m.set(i, i, GaussianRational::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<GaussianRational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c));
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    /// Builds a square matrix from integer entries (a convenience for
    /// hand-written operators).
    pub fn from_ints(rows: &[&[i64]]) -> Self {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| GaussianRational::from_int(x)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &GaussianRational {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: GaussianRational) {
        self.data[r * self.cols + c] = v;
    }

    pub fn entries(&self) -> &[GaussianRational] {
        &self.data
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn adjoint(&self) -> Matrix {
        let mut out = Matrix::zero(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(c, r, self.get(r, c).conj());
            }
        }
        out
    }

    pub fn mul(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} * {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Matrix::zero(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let b = rhs.get(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    let cur = out.get(r, c) + &(a * b);
                    out.set(r, c, cur);
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(Error::DimensionMismatch("matrix addition".into()));
        }
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&rhs.data) {
            *a = &*a + b;
        }
        Ok(out)
    }

    pub fn sub(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(Error::DimensionMismatch("matrix subtraction".into()));
        }
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&rhs.data) {
            *a = &*a - b;
        }
        Ok(out)
    }

    pub fn scale(&self, s: &GaussianRational) -> Matrix {
        let mut out = self.clone();
        for a in out.data.iter_mut() {
            *a = &*a * s;
        }
        out
    }

    pub fn mul_vec(&self, v: &[GaussianRational]) -> Result<Vec<GaussianRational>> {
        if self.cols != v.len() {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} * vec{}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        let out = (0..self.rows)
            .map(|r| {
                let mut acc = GaussianRational::zero();
                for (c, x) in v.iter().enumerate() {
                    let a = self.get(r, c);
                    if !a.is_zero() && !x.is_zero() {
                        acc = &acc + &(a * x);
                    }
                }
                acc
            })
            .collect();
        Ok(out)
    }

    pub fn trace(&self) -> GaussianRational {
        let mut acc = GaussianRational::zero();
        for i in 0..self.rows.min(self.cols) {
            acc = &acc + self.get(i, i);
        }
        acc
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Matrix::identity(self.rows)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn is_hermitian(&self) -> bool {
        if !self.is_square() {
            return false;
        }
        for r in 0..self.rows {
            for c in 0..=r {
                if *self.get(r, c) != self.get(c, r).conj() {
                    return false;
                }
            }
        }
        true
    }
}

/// Exact squared norm of a vector.
pub fn vec_norm_sqr(v: &[GaussianRational]) -> Rational {
    let mut acc = Rational::zero();
    for x in v {
        acc += x.norm_sqr();
    }
    acc
}

/// An incrementally built basis of a subspace, kept in reduced row
/// echelon form over the Gaussian rationals.
#[derive(Debug, Default)]
pub struct SpanBasis {
    rows: Vec<Vec<GaussianRational>>,
    pivots: Vec<usize>,
}

impl SpanBasis {
    pub fn new() -> Self {
        SpanBasis::default()
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Reduces `v` against the basis in place; the remainder is zero iff
    /// `v` lies in the span.
    fn reduce(&self, v: &mut [GaussianRational]) {
        for (row, &pivot) in self.rows.iter().zip(&self.pivots) {
            if v[pivot].is_zero() {
                continue;
            }
            let factor = v[pivot].clone();
            for (x, r) in v.iter_mut().zip(row) {
                *x = &*x - &(&factor * r);
            }
        }
    }

    /// Adds `v` to the basis if it is independent; returns whether the
    /// basis grew.
    pub fn try_add(&mut self, mut v: Vec<GaussianRational>) -> bool {
        self.reduce(&mut v);
        let Some(pivot) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let lead = v[pivot].inv();
        for x in v.iter_mut() {
            if !x.is_zero() {
                *x = &*x * &lead;
            }
        }
        // Back-substitute into the existing rows to keep reduction cheap.
        for row in self.rows.iter_mut() {
            if row[pivot].is_zero() {
                continue;
            }
            let factor = row[pivot].clone();
            for (r, x) in row.iter_mut().zip(&v) {
                *r = &*r - &(&factor * x);
            }
        }
        self.rows.push(v);
        self.pivots.push(pivot);
        true
    }

    /// Whether `v` lies in the current span.
    pub fn contains(&self, v: &[GaussianRational]) -> bool {
        let mut copy = v.to_vec();
        self.reduce(&mut copy);
        copy.iter().all(|x| x.is_zero())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::core::rat;

    fn gr(n: i64, d: i64) -> GaussianRational {
        GaussianRational::from_rational(rat(n, d))
    }

    #[test]
    fn rotation_is_orthogonal() {
        let r = Matrix::from_rows(vec![vec![gr(3, 5), gr(-4, 5)], vec![gr(4, 5), gr(3, 5)]]);
        assert!(r.adjoint().mul(&r).unwrap().is_identity());
    }

    #[test]
    fn span_basis_detects_dependence() {
        let mut b = SpanBasis::new();
        assert!(b.try_add(vec![gr(1, 1), gr(2, 1), gr(0, 1)]));
        assert!(b.try_add(vec![gr(0, 1), gr(1, 1), gr(1, 1)]));
        // 1*(1,2,0) - 2*(0,1,1) = (1,0,-2)
        assert!(!b.try_add(vec![gr(1, 1), gr(0, 1), gr(-2, 1)]));
        assert_eq!(b.len(), 2);
        assert!(b.contains(&[gr(2, 1), gr(4, 1), gr(0, 1)]));
        assert!(!b.contains(&[gr(0, 1), gr(0, 1), gr(1, 1)]));
    }

    #[test]
    fn complex_elimination() {
        let i = GaussianRational::i();
        let one = GaussianRational::one();
        let mut b = SpanBasis::new();
        assert!(b.try_add(vec![one.clone(), i.clone()]));
        // i * (1, i) = (i, -1): dependent over the Gaussian rationals.
        assert!(!b.try_add(vec![i.clone(), -&one]));
        assert_eq!(b.len(), 1);
    }
}
