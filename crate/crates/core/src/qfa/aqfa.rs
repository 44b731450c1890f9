//! Alternating quantum finite automata: outcome-tree semantics.
//!
//! An AQFA pairs classical control states (existential or universal)
//! with a quantum register. Each step applies the superoperator chosen
//! by the current classical state and symbol; every outcome with nonzero
//! probability spawns a child whose classical state is given by the
//! classical transition function. The exact magnitudes of the outcome
//! probabilities do not matter, only whether they are zero, which is
//! decided exactly.

use super::linalg::{vec_norm_sqr, Matrix};
use super::superop::Superoperator;
use crate::core::{
    Alphabet, ComputationTree, Connective, GaussianRational, Symbol, TapeView, TreeNode, Verdict,
    Violation, Word, END_MARKER,
};
use crate::{Error, Result};
use num_traits::Zero;
use std::collections::{BTreeMap, BTreeSet};

/// Alternating QFA description. `ops` maps (classical state, symbol) to
/// the superoperator applied in the quantum phase; `cdelta` maps
/// (classical state, symbol, outcome) to the next classical state and
/// must be total on the declared outcomes of each table entry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AqfaDescription {
    pub alphabet: Alphabet,
    pub classical_states: Vec<String>,
    /// Classical states that branch universally; the rest are existential.
    pub universal: BTreeSet<String>,
    pub classical_initial: String,
    pub classical_accept: BTreeSet<String>,
    pub basis: Vec<String>,
    /// Initial quantum basis state.
    pub initial: String,
    pub ops: BTreeMap<(String, Symbol), Superoperator>,
    /// Outcomes are 1-based.
    pub cdelta: BTreeMap<(String, Symbol, usize), String>,
}

impl AqfaDescription {
    pub fn violations(&self) -> Vec<Violation> {
        let mut v = Vec::new();
        let declared = |s: &str| self.classical_states.iter().any(|x| x == s);
        if !declared(&self.classical_initial) {
            v.push(Violation::new(
                "classical-states",
                format!(
                    "initial classical state {:?} not declared",
                    self.classical_initial
                ),
            ));
        }
        for s in self.universal.iter().chain(self.classical_accept.iter()) {
            if !declared(s) {
                v.push(Violation::new(
                    "classical-states",
                    format!("classical state {s:?} not declared"),
                ));
            }
        }
        if !self.basis.contains(&self.initial) {
            v.push(Violation::new(
                "basis",
                format!("initial state {:?} is not a basis state", self.initial),
            ));
        }
        for ((s, sym, k), target) in &self.cdelta {
            if !declared(target) {
                v.push(Violation::new(
                    "classical-delta",
                    format!("cdelta target {target:?} not declared"),
                ));
            }
            match self.ops.get(&(s.clone(), *sym)) {
                None => v.push(Violation::new(
                    "classical-delta",
                    format!("cdelta entry ({s},{sym},{k}) has no superoperator entry"),
                )),
                Some(op) => {
                    if *k == 0 || *k > op.outcome_count() {
                        v.push(Violation::new(
                            "classical-delta",
                            format!("cdelta outcome {k} out of range for ({s},{sym})"),
                        ));
                    }
                }
            }
        }
        for ((s, sym), op) in &self.ops {
            if !declared(s) {
                v.push(Violation::new(
                    "classical-states",
                    format!("superoperator source {s:?} not declared"),
                ));
            }
            if *sym != END_MARKER && !self.alphabet.contains(*sym) {
                v.push(Violation::new(
                    "delta-symbol",
                    format!("superoperator for symbol {sym:?} outside the alphabet"),
                ));
            }
            if op.dim() != self.basis.len() {
                v.push(Violation::new(
                    "superoperator-dimension",
                    format!(
                        "superoperator for ({s},{sym}) has dimension {}, expected {}",
                        op.dim(),
                        self.basis.len()
                    ),
                ));
                continue;
            }
            v.extend(op.validate(&format!("({s},{sym})")));
            // δ_c must be total on this entry's outcomes.
            for k in 1..=op.outcome_count() {
                if !self.cdelta.contains_key(&(s.clone(), *sym, k)) {
                    v.push(Violation::new(
                        "classical-delta",
                        format!("cdelta undefined for ({s},{sym}) outcome {k}"),
                    ));
                }
            }
        }
        v
    }

    fn checked(&self) -> Result<()> {
        match self.violations().into_iter().next() {
            None => Ok(()),
            Some(v) => Err(Error::Validation(v.to_string())),
        }
    }

    fn initial_vector(&self) -> Vec<GaussianRational> {
        let mut v = vec![GaussianRational::zero(); self.basis.len()];
        let i = self
            .basis
            .iter()
            .position(|q| *q == self.initial)
            .expect("validated");
        v[i] = GaussianRational::one();
        v
    }

    fn op(&self, s: &str, sym: Symbol) -> Result<&Superoperator> {
        self.ops
            .get(&(s.to_string(), sym))
            .ok_or_else(|| Error::Validation(format!("no superoperator entry for ({s},{sym})")))
    }

    fn next_classical(&self, s: &str, sym: Symbol, outcome: usize) -> &String {
        self.cdelta
            .get(&(s.to_string(), sym, outcome))
            .expect("validated totality")
    }
}

/// AND-OR evaluation over the outcome tree, with short-circuiting.
/// Nodes are (classical state, unnormalized pure state); a child exists
/// iff its outcome has nonzero squared norm; a leaf is true iff its
/// classical state is accepting.
pub fn aqfa_accepts(m: &AqfaDescription, w: &Word) -> Result<Verdict> {
    m.checked()?;
    w.check_alphabet(&m.alphabet)?;
    let tape = TapeView::new(w.clone());
    let depth = tape.depth();

    fn eval(
        m: &AqfaDescription,
        tape: &TapeView,
        depth: usize,
        s: &str,
        psi: &[GaussianRational],
        level: usize,
    ) -> Result<bool> {
        if level == depth {
            return Ok(m.classical_accept.contains(s));
        }
        let sym = tape.symbol_at_level(level);
        let op = m.op(s, sym)?;
        let universal = m.universal.contains(s);
        for (idx, e) in op.elements().iter().enumerate() {
            let phi = e.mul_vec(psi)?;
            if vec_norm_sqr(&phi).is_zero() {
                continue;
            }
            let s2 = m.next_classical(s, sym, idx + 1);
            let value = eval(m, tape, depth, s2, &phi, level + 1)?;
            if universal && !value {
                return Ok(false);
            }
            if !universal && value {
                return Ok(true);
            }
        }
        Ok(universal)
    }

    let accept = eval(
        m,
        &tape,
        depth,
        &m.classical_initial,
        &m.initial_vector(),
        0,
    )?;
    Ok(Verdict::from_bool(accept))
}

/// Materialized outcome tree; the root value equals [`aqfa_accepts`].
/// Edge labels are measurement outcomes.
pub fn aqfa_tree(m: &AqfaDescription, w: &Word) -> Result<ComputationTree> {
    m.checked()?;
    w.check_alphabet(&m.alphabet)?;
    let tape = TapeView::new(w.clone());
    let depth = tape.depth();

    fn build(
        m: &AqfaDescription,
        tape: &TapeView,
        depth: usize,
        s: &str,
        psi: &[GaussianRational],
        level: usize,
    ) -> Result<TreeNode> {
        let label = s.to_string();
        if level == depth {
            return Ok(TreeNode::leaf(level, label, m.classical_accept.contains(s)));
        }
        let sym = tape.symbol_at_level(level);
        let op = m.op(s, sym)?;
        let mut children = Vec::new();
        for (idx, e) in op.elements().iter().enumerate() {
            let phi = e.mul_vec(psi)?;
            if vec_norm_sqr(&phi).is_zero() {
                continue;
            }
            let s2 = m.next_classical(s, sym, idx + 1);
            children.push((
                format!("{}", idx + 1),
                build(m, tape, depth, s2, &phi, level + 1)?,
            ));
        }
        let conn = if m.universal.contains(s) {
            Connective::Universal
        } else {
            Connective::Existential
        };
        Ok(TreeNode::inner(level, label, conn, children))
    }

    Ok(ComputationTree::new(build(
        m,
        &tape,
        depth,
        &m.classical_initial,
        &m.initial_vector(),
        0,
    )?))
}

use super::sim::QfaDescription;

/// Views a QFA as an all-existential AQFA: the final end-marker
/// superoperator is refined so each outcome routes through the accept or
/// reject projector to a matching classical state. The resulting tree
/// accepts iff the QFA accepts with positive probability.
pub fn nqfa_as_aqfa(m: &QfaDescription) -> AqfaDescription {
    wrap_qfa(m, false)
}

/// All-universal dual of [`nqfa_as_aqfa`]: accepts iff the QFA accepts
/// with probability 1.
pub fn uqfa_as_aqfa(m: &QfaDescription) -> AqfaDescription {
    wrap_qfa(m, true)
}

fn wrap_qfa(m: &QfaDescription, universal: bool) -> AqfaDescription {
    let dim = m.dim();
    let p_acc = m.accept_projector();
    let p_rej = Matrix::identity(dim).sub(&p_acc).expect("same dimension");

    let mut ops: BTreeMap<(String, Symbol), Superoperator> = BTreeMap::new();
    let mut cdelta: BTreeMap<(String, Symbol, usize), String> = BTreeMap::new();
    let set = |ops: &mut BTreeMap<(String, Symbol), Superoperator>,
               cdelta: &mut BTreeMap<(String, Symbol, usize), String>,
               s: &str,
               sym: Symbol,
               op: Superoperator,
               targets: Vec<String>| {
        assert_eq!(op.outcome_count(), targets.len());
        for (k, t) in targets.iter().enumerate() {
            cdelta.insert((s.to_string(), sym, k + 1), t.clone());
        }
        ops.insert((s.to_string(), sym), op);
    };

    // Left end-marker: apply the end-marker superoperator once, then an
    // identity step.
    let e_end = m.op(END_MARKER).clone();
    let n_end = e_end.outcome_count();
    set(
        &mut ops,
        &mut cdelta,
        "st",
        END_MARKER,
        e_end.clone(),
        vec!["sh".into(); n_end],
    );
    set(
        &mut ops,
        &mut cdelta,
        "sh",
        END_MARKER,
        Superoperator::identity(dim),
        vec!["run".into()],
    );

    // Body symbols: superoperator then identity.
    for &sym in m.alphabet.symbols() {
        let op = m.op(sym).clone();
        let n = op.outcome_count();
        set(&mut ops, &mut cdelta, "run", sym, op, vec!["rh".into(); n]);
        set(
            &mut ops,
            &mut cdelta,
            "rh",
            sym,
            Superoperator::identity(dim),
            vec!["run".into()],
        );
    }

    // Right end-marker: refine the final superoperator with the
    // projective measurement, routing outcomes to accept/reject states.
    let mut elements = Vec::new();
    let mut targets = Vec::new();
    for e in e_end.elements() {
        elements.push(p_acc.mul(e).expect("projector application"));
        targets.push("acc".to_string());
    }
    for e in e_end.elements() {
        elements.push(p_rej.mul(e).expect("projector application"));
        targets.push("rej".to_string());
    }
    set(
        &mut ops,
        &mut cdelta,
        "run",
        END_MARKER,
        Superoperator::new(dim, elements),
        targets,
    );
    for s in ["acc", "rej"] {
        set(
            &mut ops,
            &mut cdelta,
            s,
            END_MARKER,
            Superoperator::identity(dim),
            vec![s.to_string()],
        );
    }

    let classical: Vec<String> = ["st", "sh", "run", "rh", "acc", "rej"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    AqfaDescription {
        alphabet: m.alphabet.clone(),
        universal: if universal {
            classical.iter().cloned().collect()
        } else {
            BTreeSet::new()
        },
        classical_states: classical,
        classical_initial: "st".into(),
        classical_accept: BTreeSet::from(["acc".to_string()]),
        basis: m.basis.clone(),
        initial: m.initial.clone(),
        ops,
        cdelta,
    }
}
