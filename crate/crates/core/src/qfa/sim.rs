//! Density-operator simulation of quantum finite automata.

use super::linalg::Matrix;
use super::superop::Superoperator;
use crate::core::{Alphabet, Rational, Symbol, Verdict, Violation, Word, END_MARKER};
use crate::{Error, Result};
use num_traits::{One, Signed};
use std::collections::{BTreeMap, BTreeSet};

/// A mixed quantum state: Hermitian, unit trace, nonnegative real
/// diagonal (a necessary positivity condition), all checked exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DensityMatrix {
    mat: Matrix,
}

impl DensityMatrix {
    /// The pure basis state `|q_i⟩⟨q_i|`.
    pub fn basis_state(dim: usize, i: usize) -> Self {
        let mut m = Matrix::zero(dim, dim);
        m.set(i, i, crate::core::GaussianRational::one());
        DensityMatrix { mat: m }
    }

    pub fn from_matrix(mat: Matrix) -> Result<Self> {
        let d = DensityMatrix { mat };
        match d.violations().into_iter().next() {
            None => Ok(d),
            Some(v) => Err(Error::Validation(v.to_string())),
        }
    }

    pub fn matrix(&self) -> &Matrix {
        &self.mat
    }

    pub fn dim(&self) -> usize {
        self.mat.rows()
    }

    pub fn trace(&self) -> Rational {
        self.mat.trace().re
    }

    pub fn violations(&self) -> Vec<Violation> {
        let mut v = Vec::new();
        if !self.mat.is_hermitian() {
            v.push(Violation::new(
                "density-hermitian",
                "density matrix is not Hermitian",
            ));
        }
        let tr = self.mat.trace();
        if !tr.is_real() || !tr.re.is_one() {
            v.push(Violation::new(
                "density-trace",
                format!("trace is {tr}, expected 1"),
            ));
        }
        for i in 0..self.mat.rows() {
            let d = self.mat.get(i, i);
            if !d.is_real() || d.re.is_negative() {
                v.push(Violation::new(
                    "density-diagonal",
                    format!("diagonal entry {i} is {d}"),
                ));
                break;
            }
        }
        v
    }
}

/// Applies `ρ ↦ Σ_k E_k ρ E_k†` with exact arithmetic; the trace is
/// preserved exactly.
pub fn apply_superoperator(op: &Superoperator, rho: &DensityMatrix) -> Result<DensityMatrix> {
    if op.dim() != rho.dim() {
        return Err(Error::DimensionMismatch(format!(
            "superoperator dim {} vs density dim {}",
            op.dim(),
            rho.dim()
        )));
    }
    let mut out = Matrix::zero(rho.dim(), rho.dim());
    for e in op.elements() {
        out = out.add(&e.mul(rho.matrix())?.mul(&e.adjoint())?)?;
    }
    Ok(DensityMatrix { mat: out })
}

/// Quantum finite automaton: one superoperator per symbol of `Σ̃`
/// (including the end-marker), an initial basis state, and a projective
/// accept/reject measurement given by an accepting basis subset (the
/// rejecting subset is its complement, so the two are disjoint and
/// exhaustive by construction).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QfaDescription {
    pub alphabet: Alphabet,
    pub basis: Vec<String>,
    pub initial: String,
    pub accept: BTreeSet<String>,
    /// Keyed by symbol; must cover every alphabet symbol and the
    /// end-marker.
    pub ops: BTreeMap<Symbol, Superoperator>,
}

impl QfaDescription {
    pub fn violations(&self) -> Vec<Violation> {
        let mut v = Vec::new();
        if self.basis.is_empty() {
            v.push(Violation::new("basis", "basis must be nonempty"));
        }
        let mut seen = BTreeSet::new();
        for q in &self.basis {
            if !seen.insert(q) {
                v.push(Violation::new(
                    "basis",
                    format!("duplicate basis state {q:?}"),
                ));
            }
        }
        if !self.basis.contains(&self.initial) {
            v.push(Violation::new(
                "initial",
                format!("initial state {:?} is not a basis state", self.initial),
            ));
        }
        for q in &self.accept {
            if !self.basis.contains(q) {
                v.push(Violation::new(
                    "accept",
                    format!("accepting state {q:?} is not a basis state"),
                ));
            }
        }
        let mut symbols: Vec<Symbol> = self.alphabet.symbols().to_vec();
        symbols.push(END_MARKER);
        for sym in symbols {
            match self.ops.get(&sym) {
                None => v.push(Violation::new(
                    "missing-superoperator",
                    format!("no superoperator for symbol {sym:?}"),
                )),
                Some(op) => {
                    if op.dim() != self.basis.len() {
                        v.push(Violation::new(
                            "superoperator-dimension",
                            format!(
                                "superoperator for {sym:?} has dimension {}, expected {}",
                                op.dim(),
                                self.basis.len()
                            ),
                        ));
                    } else {
                        v.extend(op.validate(&format!("symbol {sym:?}")));
                    }
                }
            }
        }
        for sym in self.ops.keys() {
            if *sym != END_MARKER && !self.alphabet.contains(*sym) {
                v.push(Violation::new(
                    "delta-symbol",
                    format!("superoperator for {sym:?} outside the alphabet"),
                ));
            }
        }
        v
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn initial_index(&self) -> usize {
        self.basis
            .iter()
            .position(|q| *q == self.initial)
            .expect("validated initial state")
    }

    /// Diagonal 0/1 projector onto the accepting subset.
    pub fn accept_projector(&self) -> Matrix {
        let mut p = Matrix::zero(self.dim(), self.dim());
        for (i, q) in self.basis.iter().enumerate() {
            if self.accept.contains(q) {
                p.set(i, i, crate::core::GaussianRational::one());
            }
        }
        p
    }

    fn checked(&self) -> Result<()> {
        match self.violations().into_iter().next() {
            None => Ok(()),
            Some(v) => Err(Error::Validation(v.to_string())),
        }
    }

    pub(crate) fn op(&self, sym: Symbol) -> &Superoperator {
        self.ops.get(&sym).expect("validated superoperator table")
    }

    /// Evolves the post-left-end-marker initial state through `w`
    /// without the final end-marker step.
    pub(crate) fn evolve_body(&self, w: &Word) -> Result<DensityMatrix> {
        let mut rho = DensityMatrix::basis_state(self.dim(), self.initial_index());
        rho = apply_superoperator(self.op(END_MARKER), &rho)?;
        for &sym in w.symbols() {
            rho = apply_superoperator(self.op(sym), &rho)?;
        }
        Ok(rho)
    }

    /// Acceptance probability of a state that has consumed `¢ w`: apply
    /// the final end-marker superoperator and measure.
    pub(crate) fn finish(&self, rho: &DensityMatrix) -> Result<Rational> {
        let rho = apply_superoperator(self.op(END_MARKER), rho)?;
        let p = self.accept_projector().mul(rho.matrix())?.trace();
        debug_assert!(p.is_real());
        Ok(p.re)
    }
}

/// `f(w) = Tr(P_a ρ)` after applying the end-marker superoperator, then
/// one superoperator per symbol of `w`, then the end-marker again. The
/// result is an exact rational in `[0, 1]`.
pub fn qfa_accept_probability(m: &QfaDescription, w: &Word) -> Result<Rational> {
    m.checked()?;
    w.check_alphabet(&m.alphabet)?;
    let body = m.evolve_body(w)?;
    let p = m.finish(&body)?;
    debug_assert!(!p.is_negative() && p <= Rational::one());
    Ok(p)
}

/// Nondeterministic acceptance: positive one-sided unbounded error,
/// `f(w) > 0` exactly.
pub fn nqfa_accepts(m: &QfaDescription, w: &Word) -> Result<Verdict> {
    Ok(Verdict::from_bool(
        qfa_accept_probability(m, w)?.is_positive(),
    ))
}

/// Universal acceptance: negative one-sided unbounded error,
/// `f(w) = 1` exactly.
pub fn uqfa_accepts(m: &QfaDescription, w: &Word) -> Result<Verdict> {
    Ok(Verdict::from_bool(qfa_accept_probability(m, w)?.is_one()))
}
