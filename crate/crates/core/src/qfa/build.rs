//! Built-in alternating QFA for the unary squares language.

use super::aqfa::AqfaDescription;
use super::linalg::Matrix;
use super::superop::{complete_superoperator, Superoperator};
use crate::core::{rat, Alphabet, GaussianRational, Symbol, END_MARKER};
use std::collections::{BTreeMap, BTreeSet};

fn scaled(m: Matrix, num: i64, den: i64) -> Matrix {
    m.scale(&GaussianRational::from_rational(rat(num, den)))
}

/// Recognizes `{a^m | m = n², n ≥ 1}` with two alternations.
///
/// During the existential phase the quantum register holds amplitudes
/// proportional to `(1, j, j²)` after `j` symbols, evolved by a scaled
/// lower-triangular update realizing `(j+1)² = j² + 2j + 1`. One outcome
/// per step picks the current position `i`, freezing `i²` and counting
/// the remaining symbols into the third component, so the register ends
/// proportional to `(1, i², m)`. The single universal step at the right
/// end-marker has one outcome whose element takes the difference
/// `i² - m`: that branch exists iff the amplitude is nonzero and leads
/// to rejection, while all other outcomes accept. Residual completion
/// outcomes route to the rejecting sink during the existential phase
/// (harmless under OR) and to accepting states at the final universal
/// step (harmless under AND).
pub fn build_usquare_aqfa() -> AqfaDescription {
    let dim = 3;
    // (1, j, j²) ↦ (1, j+1, (j+1)²)
    let advance = Matrix::from_ints(&[&[1, 0, 0], &[1, 1, 0], &[1, 2, 1]]);
    // (1, j, j²) ↦ (1, (j+1)², j+1): advance, then freeze the square.
    let pick = Matrix::from_ints(&[&[1, 0, 0], &[1, 2, 1], &[1, 1, 0]]);
    // (1, i², j) ↦ (1, i², j+1)
    let count = Matrix::from_ints(&[&[1, 0, 0], &[0, 1, 0], &[1, 0, 1]]);
    // (w, y, z) ↦ (y - z, 0, 0)
    let diff = Matrix::from_ints(&[&[0, 1, -1], &[0, 0, 0], &[0, 0, 0]]);

    let phase_a = complete_superoperator(vec![scaled(advance, 1, 5), scaled(pick, 1, 5)])
        .expect("phase-A completion");
    let phase_b = complete_superoperator(vec![scaled(count, 1, 2)]).expect("phase-B completion");
    let final_u = complete_superoperator(vec![scaled(diff, 1, 2)]).expect("final completion");

    let mut ops: BTreeMap<(String, Symbol), Superoperator> = BTreeMap::new();
    let mut cdelta: BTreeMap<(String, Symbol, usize), String> = BTreeMap::new();
    let set = |ops: &mut BTreeMap<(String, Symbol), Superoperator>,
               cdelta: &mut BTreeMap<(String, Symbol, usize), String>,
               s: &str,
               sym: Symbol,
               op: Superoperator,
               targets: Vec<&str>| {
        assert_eq!(op.outcome_count(), targets.len());
        for (k, t) in targets.iter().enumerate() {
            cdelta.insert((s.to_string(), sym, k + 1), t.to_string());
        }
        ops.insert((s.to_string(), sym), op);
    };

    let ident = || Superoperator::identity(dim);
    // Left end-marker.
    set(&mut ops, &mut cdelta, "s0", END_MARKER, ident(), vec!["s1"]);
    set(&mut ops, &mut cdelta, "s1", END_MARKER, ident(), vec!["A"]);
    // Existential phase: advance or pick; residuals reject.
    let mut a_targets = vec!["CH", "PH"];
    a_targets.extend(vec!["R"; phase_a.outcome_count() - 2]);
    set(&mut ops, &mut cdelta, "A", 'a', phase_a, a_targets);
    set(&mut ops, &mut cdelta, "CH", 'a', ident(), vec!["A"]);
    set(&mut ops, &mut cdelta, "PH", 'a', ident(), vec!["B"]);
    // Counting phase after the pick.
    let mut b_targets = vec!["BH"];
    b_targets.extend(vec!["R"; phase_b.outcome_count() - 1]);
    set(&mut ops, &mut cdelta, "B", 'a', phase_b, b_targets);
    set(&mut ops, &mut cdelta, "BH", 'a', ident(), vec!["B"]);
    // Right end-marker: a run that never picked rejects; a picked run
    // faces the single universal step.
    set(&mut ops, &mut cdelta, "A", END_MARKER, ident(), vec!["R"]);
    set(&mut ops, &mut cdelta, "B", END_MARKER, ident(), vec!["U"]);
    let mut u_targets = vec!["Frej"];
    u_targets.extend(vec!["Facc"; final_u.outcome_count() - 1]);
    set(&mut ops, &mut cdelta, "U", END_MARKER, final_u, u_targets);
    // Reject sink.
    for sym in ['a', END_MARKER] {
        set(&mut ops, &mut cdelta, "R", sym, ident(), vec!["R"]);
    }

    AqfaDescription {
        alphabet: Alphabet::new(vec!['a']).unwrap(),
        classical_states: [
            "s0", "s1", "A", "CH", "PH", "B", "BH", "U", "R", "Facc", "Frej",
        ]
        .iter()
        .map(|s| s.to_string())
        .collect(),
        universal: BTreeSet::from(["U".to_string()]),
        classical_initial: "s0".into(),
        classical_accept: BTreeSet::from(["Facc".to_string()]),
        basis: vec!["x0".into(), "x1".into(), "x2".into()],
        initial: "x0".into(),
        ops,
        cdelta,
    }
}
