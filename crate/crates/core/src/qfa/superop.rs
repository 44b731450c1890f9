//! Superoperators: lists of operation elements with exact completeness.

use super::linalg::Matrix;
use crate::core::{GaussianRational, Rational, Violation};
use crate::{Error, Result};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};

/// A quantum operation given by operation elements `E_1, ..., E_l`
/// satisfying `Σ_k E_k† E_k = I` exactly. Outcome `k` (1-based) names
/// element `E_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Superoperator {
    dim: usize,
    elements: Vec<Matrix>,
}

impl Superoperator {
    /// Wraps elements without checking completeness; `validate` reports
    /// any violation.
    pub fn new(dim: usize, elements: Vec<Matrix>) -> Self {
        Superoperator { dim, elements }
    }

    /// Single-element identity superoperator.
    pub fn identity(dim: usize) -> Self {
        Superoperator {
            dim,
            elements: vec![Matrix::identity(dim)],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn elements(&self) -> &[Matrix] {
        &self.elements
    }

    pub fn outcome_count(&self) -> usize {
        self.elements.len()
    }

    /// Exact completeness check: `Σ_k E_k† E_k = I`.
    pub fn is_complete(&self) -> bool {
        let mut sum = Matrix::zero(self.dim, self.dim);
        for e in &self.elements {
            if e.rows() != self.dim || e.cols() != self.dim {
                return false;
            }
            sum = sum.add(&e.adjoint().mul(e).unwrap()).unwrap();
        }
        sum.is_identity()
    }

    pub fn validate(&self, context: &str) -> Vec<Violation> {
        let mut v = Vec::new();
        if self.elements.is_empty() {
            v.push(Violation::new(
                "superoperator-empty",
                format!("{context}: no operation elements"),
            ));
            return v;
        }
        for (k, e) in self.elements.iter().enumerate() {
            if e.rows() != self.dim || e.cols() != self.dim {
                v.push(Violation::new(
                    "superoperator-dimension",
                    format!(
                        "{context}: element {} is {}x{}, expected {}x{}",
                        k + 1,
                        e.rows(),
                        e.cols(),
                        self.dim,
                        self.dim
                    ),
                ));
                return v;
            }
        }
        if !self.is_complete() {
            v.push(Violation::new(
                "superoperator-completeness",
                format!("{context}: operation elements do not satisfy Σ Eₖ†Eₖ = I"),
            ));
        }
        v
    }
}

/// Writes a nonnegative integer as a sum of four squares.
fn four_squares(n: &BigInt) -> Result<[BigInt; 4]> {
    let n: u64 = n.try_into().map_err(|_| {
        Error::Validation("completion constant too large for four-square search".into())
    })?;
    let isqrt = |x: u64| -> u64 {
        let mut r = (x as f64).sqrt() as u64;
        while (r + 1) * (r + 1) <= x {
            r += 1;
        }
        while r * r > x {
            r -= 1;
        }
        r
    };
    for a in (0..=isqrt(n)).rev() {
        let r1 = n - a * a;
        for b in (0..=isqrt(r1).min(a)).rev() {
            let r2 = r1 - b * b;
            let mut c = isqrt(r2);
            while 2 * c * c >= r2 {
                let d2 = r2 - c * c;
                let d = isqrt(d2);
                if d * d == d2 {
                    return Ok([a, b, c, d].map(BigInt::from));
                }
                if c == 0 {
                    break;
                }
                c -= 1;
            }
        }
    }
    unreachable!("every nonnegative integer is a sum of four squares")
}

/// Completes a list of primary operation elements into a superoperator
/// by appending residual elements.
///
/// The residual `I - Σ E†E` must be positive semidefinite; it is
/// factored as `Σ d_k ℓ_k ℓ_k†` by an exact LDL† decomposition, and each
/// term is split into at most four rank-one elements `r ℓ_k†` using a
/// four-square decomposition of `d_k`, so completeness holds exactly
/// with rational entries.
pub fn complete_superoperator(primaries: Vec<Matrix>) -> Result<Superoperator> {
    let dim = primaries
        .first()
        .ok_or_else(|| Error::Validation("at least one primary element required".into()))?
        .rows();
    let mut residual = Matrix::identity(dim);
    for e in &primaries {
        if e.rows() != dim || e.cols() != dim {
            return Err(Error::DimensionMismatch(
                "primary elements must share a square shape".into(),
            ));
        }
        residual = residual.sub(&e.adjoint().mul(e)?)?;
    }
    let mut elements = primaries;
    for (d, col) in ldl_terms(&residual)? {
        // d = p/q ≥ 0 and p*q = a²+b²+c²+e², so d = Σ (x/q)².
        let pq = d.numer() * d.denom();
        for part in four_squares(&pq)? {
            if part.is_zero() {
                continue;
            }
            let r = GaussianRational::from_rational(Rational::new(part, d.denom().clone()));
            let mut row = Matrix::zero(dim, dim);
            for (j, x) in col.iter().enumerate() {
                row.set(0, j, &r * &x.conj());
            }
            if !row.is_zero() {
                elements.push(row);
            }
        }
    }
    let op = Superoperator::new(dim, elements);
    debug_assert!(op.is_complete());
    Ok(op)
}

/// Exact LDL† factorization of a Hermitian positive semidefinite matrix:
/// returns pairs `(d_k, ℓ_k)` with `G = Σ d_k ℓ_k ℓ_k†`.
fn ldl_terms(g: &Matrix) -> Result<Vec<(Rational, Vec<GaussianRational>)>> {
    if !g.is_hermitian() {
        return Err(Error::Validation("residual is not Hermitian".into()));
    }
    let n = g.rows();
    let mut a = g.clone();
    let mut terms = Vec::new();
    for k in 0..n {
        let dkk = a.get(k, k).clone();
        if !dkk.is_real() {
            return Err(Error::Validation("residual diagonal is not real".into()));
        }
        let d = dkk.re.clone();
        if d.is_negative() {
            return Err(Error::Validation(
                "residual is not positive semidefinite (negative pivot)".into(),
            ));
        }
        if d.is_zero() {
            // PSD forces the whole row/column to vanish.
            for j in 0..n {
                if !a.get(k, j).is_zero() || !a.get(j, k).is_zero() {
                    return Err(Error::Validation(
                        "residual is not positive semidefinite (zero pivot with nonzero row)"
                            .into(),
                    ));
                }
            }
            continue;
        }
        let dg = GaussianRational::from_rational(d.clone());
        let col: Vec<GaussianRational> = (0..n).map(|i| &a.get(i, k).clone() / &dg).collect();
        // A := A - d ℓ ℓ†
        for i in 0..n {
            for j in 0..n {
                let sub = &(&col[i] * &col[j].conj()) * &dg;
                let cur = a.get(i, j) - &sub;
                a.set(i, j, cur);
            }
        }
        terms.push((d, col));
    }
    if !a.is_zero() {
        return Err(Error::Validation(
            "LDL† factorization did not exhaust the residual".into(),
        ));
    }
    Ok(terms)
}
