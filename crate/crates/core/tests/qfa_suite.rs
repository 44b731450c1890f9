//! Oracle and invariant tests for the quantum module: exact channel
//! algebra, the equivalence/emptiness deciders against brute-force
//! probability sweeps, and the alternating-tree semantics against the
//! plain density-operator acceptance modes.

use num_traits::{One, Signed, Zero};
use raa_core::core::{
    enumerate_words, rat, Alphabet, EmptinessVerdict, GaussianRational, Rational, Verdict, Word,
    END_MARKER,
};
use raa_core::gen::{random_qfa, random_superoperator, random_unitary, Rng};
use raa_core::qfa::*;
use std::collections::{BTreeMap, BTreeSet};

fn gr(n: i64, d: i64) -> GaussianRational {
    GaussianRational::from_rational(rat(n, d))
}

fn random_density(rng: &mut Rng, dim: usize) -> DensityMatrix {
    // A random mixture of basis states conjugated by a random unitary.
    let mut weights: Vec<i64> = (0..dim).map(|_| rng.below(4) as i64).collect();
    if weights.iter().all(|w| *w == 0) {
        weights[0] = 1;
    }
    let total: i64 = weights.iter().sum();
    let mut mix = Matrix::zero(dim, dim);
    for (i, w) in weights.iter().enumerate() {
        mix.set(i, i, gr(*w, total));
    }
    let u = random_unitary(rng, dim);
    let m = u.mul(&mix).unwrap().mul(&u.adjoint()).unwrap();
    DensityMatrix::from_matrix(m).expect("unitary conjugation preserves density invariants")
}

#[test]
fn identity_superoperator_is_identity_map() {
    let mut rng = Rng::new(1);
    for dim in 1..4 {
        let rho = random_density(&mut rng, dim);
        let out = apply_superoperator(&Superoperator::identity(dim), &rho).unwrap();
        assert_eq!(out, rho);
    }
}

#[test]
fn reset_channel_resets() {
    // {|q1><q1|, |q1><q2|} maps |q2><q2| to |q1><q1|.
    let e1 = Matrix::from_ints(&[&[1, 0], &[0, 0]]);
    let e2 = Matrix::from_ints(&[&[0, 1], &[0, 0]]);
    let op = Superoperator::new(2, vec![e1, e2]);
    assert!(op.is_complete());
    let rho = DensityMatrix::basis_state(2, 1);
    let out = apply_superoperator(&op, &rho).unwrap();
    assert_eq!(out, DensityMatrix::basis_state(2, 0));
}

#[test]
fn rotation_example_diagonal() {
    let r = Matrix::from_rows(vec![vec![gr(3, 5), gr(-4, 5)], vec![gr(4, 5), gr(3, 5)]]);
    let op = Superoperator::new(2, vec![r]);
    let out = apply_superoperator(&op, &DensityMatrix::basis_state(2, 0)).unwrap();
    assert_eq!(*out.matrix().get(0, 0), gr(9, 25));
    assert_eq!(*out.matrix().get(1, 1), gr(16, 25));
}

#[test]
fn rotation_machine_accepts_a_with_16_25() {
    // 2-state machine: identity on the end-marker, the 3/5-4/5 rotation
    // on `a`, accepting the second basis state.
    let alphabet = Alphabet::new(vec!['a']).unwrap();
    let r = Matrix::from_rows(vec![vec![gr(3, 5), gr(-4, 5)], vec![gr(4, 5), gr(3, 5)]]);
    let mut ops = BTreeMap::new();
    ops.insert('a', Superoperator::new(2, vec![r]));
    ops.insert(END_MARKER, Superoperator::identity(2));
    let m = QfaDescription {
        alphabet,
        basis: vec!["q1".into(), "q2".into()],
        initial: "q1".into(),
        accept: BTreeSet::from(["q2".to_string()]),
        ops,
    };
    assert!(m.violations().is_empty());
    let p = qfa_accept_probability(&m, &Word::from_str("a")).unwrap();
    assert_eq!(p, rat(16, 25));
    assert_eq!(
        nqfa_accepts(&m, &Word::from_str("a")).unwrap(),
        Verdict::Accept
    );
    assert_eq!(
        uqfa_accepts(&m, &Word::from_str("a")).unwrap(),
        Verdict::Reject
    );
}

#[test]
fn trace_preservation_and_density_invariants_on_random_expansions() {
    let mut rng = Rng::new(0x77ace);
    for i in 0..1000 {
        let dim = 1 + rng.below(4);
        let op = random_superoperator(&mut rng, dim);
        assert!(op.is_complete(), "case {i}");
        let rho = random_density(&mut rng, dim);
        let out = apply_superoperator(&op, &rho).unwrap();
        assert_eq!(out.trace(), rho.trace(), "case {i}: trace changed");
        assert!(
            out.violations().is_empty(),
            "case {i}: {:?}",
            out.violations()
        );
    }
}

#[test]
fn branch_conservation_on_random_expansions() {
    // Σₖ ‖E_k ψ‖² = ‖ψ‖² for complete superoperators.
    let mut rng = Rng::new(0xb4a9c4);
    for i in 0..1000 {
        let dim = 1 + rng.below(4);
        let op = random_superoperator(&mut rng, dim);
        let psi: Vec<GaussianRational> = (0..dim)
            .map(|_| {
                GaussianRational::new(
                    rat(rng.below(7) as i64 - 3, 1 + rng.below(3) as i64),
                    rat(rng.below(7) as i64 - 3, 1 + rng.below(3) as i64),
                )
            })
            .collect();
        let total: Rational = op
            .elements()
            .iter()
            .map(|e| linalg::vec_norm_sqr(&e.mul_vec(&psi).unwrap()))
            .sum();
        assert_eq!(total, linalg::vec_norm_sqr(&psi), "case {i}");
    }
}

fn trivial_qfa(alphabet: &Alphabet, accept_initial: bool) -> QfaDescription {
    let mut ops = BTreeMap::new();
    for &sym in alphabet.symbols() {
        ops.insert(sym, Superoperator::identity(2));
    }
    ops.insert(END_MARKER, Superoperator::identity(2));
    QfaDescription {
        alphabet: alphabet.clone(),
        basis: vec!["q0".into(), "q1".into()],
        initial: "q0".into(),
        accept: BTreeSet::from([if accept_initial { "q0" } else { "q1" }.to_string()]),
        ops,
    }
}

#[test]
fn identity_machines_have_constant_probability() {
    let alphabet = Alphabet::new(vec!['a']).unwrap();
    let yes = trivial_qfa(&alphabet, true);
    let no = trivial_qfa(&alphabet, false);
    for n in 0..5 {
        let w = Word::repeated('a', n);
        assert_eq!(qfa_accept_probability(&yes, &w).unwrap(), rat(1, 1));
        assert_eq!(qfa_accept_probability(&no, &w).unwrap(), rat(0, 1));
        assert_eq!(nqfa_accepts(&yes, &w).unwrap(), Verdict::Accept);
        assert_eq!(uqfa_accepts(&yes, &w).unwrap(), Verdict::Accept);
        assert_eq!(nqfa_accepts(&no, &w).unwrap(), Verdict::Reject);
        assert_eq!(uqfa_accepts(&no, &w).unwrap(), Verdict::Reject);
    }
}

#[test]
fn probability_stays_in_unit_interval_exactly() {
    let mut rng = Rng::new(0x01234);
    let unary = Alphabet::new(vec!['a']).unwrap();
    for _ in 0..100 {
        let dim = 1 + rng.below(4);
        let m = random_qfa(&mut rng, dim, &unary);
        let w = Word::repeated('a', rng.below(6));
        let p = qfa_accept_probability(&m, &w).unwrap();
        assert!(!p.is_negative() && p <= Rational::one(), "p = {p}");
    }
}

#[test]
fn trivial_equivalence_cases() {
    let alphabet = Alphabet::new(vec!['a']).unwrap();
    let yes = trivial_qfa(&alphabet, true);
    let no = trivial_qfa(&alphabet, false);
    assert_eq!(
        qfa_equivalence(&yes, &yes).unwrap(),
        QfaEquivalence::Equivalent
    );
    // f differs already on the empty word.
    assert_eq!(
        qfa_equivalence(&yes, &no).unwrap(),
        QfaEquivalence::Counterexample(Word::empty())
    );
}

#[test]
fn equivalence_matches_brute_force_probability_sweep() {
    let mut rng = Rng::new(0xe90001);
    let unary = Alphabet::new(vec!['a']).unwrap();
    let binary = Alphabet::new(vec!['a', 'b']).unwrap();
    let mut equivalent_seen = 0;
    for i in 0..200 {
        // Unary pairs up to 3 states; binary pairs up to 2 states keep
        // the brute-force sweep affordable.
        let (alphabet, max_dim) = if i % 3 == 0 {
            (&binary, 2)
        } else {
            (&unary, 3)
        };
        let d1 = 1 + rng.below(max_dim);
        let d2 = 1 + rng.below(max_dim);
        let m1 = random_qfa(&mut rng, d1, alphabet);
        let mut m2 = random_qfa(&mut rng, d2, alphabet);
        if rng.chance(1, 4) {
            // Force equivalent-by-construction pairs into the mix: the
            // same machine conjugated by relabeling is just the machine.
            m2 = m1.clone();
        }
        let bound = d1 * d1 + d2 * d2;
        let expect = enumerate_words(alphabet, bound).into_iter().find(|w| {
            qfa_accept_probability(&m1, w).unwrap() != qfa_accept_probability(&m2, w).unwrap()
        });
        let got = qfa_equivalence(&m1, &m2).unwrap();
        match (&expect, &got) {
            (None, QfaEquivalence::Equivalent) => equivalent_seen += 1,
            (Some(w), QfaEquivalence::Counterexample(cw)) => {
                assert_eq!(w, cw, "case {i}: wrong counterexample");
            }
            _ => panic!("case {i}: sweep found {expect:?} but decider said {got:?}"),
        }
    }
    assert!(
        equivalent_seen >= 40,
        "only {equivalent_seen} equivalent pairs exercised"
    );
}

#[test]
fn emptiness_matches_enumeration_oracle() {
    let mut rng = Rng::new(0xe3417);
    let unary = Alphabet::new(vec!['a']).unwrap();
    let binary = Alphabet::new(vec!['a', 'b']).unwrap();
    let mut empties = 0;
    for i in 0..100 {
        let (alphabet, max_dim) = if i % 4 == 0 {
            (&binary, 2)
        } else {
            (&unary, 4)
        };
        let dim = 1 + rng.below(max_dim);
        let mut m = random_qfa(&mut rng, dim, alphabet);
        if rng.chance(1, 3) {
            m.accept.clear(); // force empty machines into the mix
        }
        let bound = dim * dim + 1;
        let verdict = nqfa_emptiness(&m).unwrap();
        match verdict {
            EmptinessVerdict::Empty => {
                empties += 1;
                for w in enumerate_words(alphabet, bound) {
                    assert!(
                        qfa_accept_probability(&m, &w).unwrap().is_zero(),
                        "case {i}: EMPTY but {w:?} accepted"
                    );
                }
            }
            EmptinessVerdict::Nonempty { witness } => {
                assert!(witness.len() <= bound, "case {i}: witness too long");
                assert!(
                    qfa_accept_probability(&m, &witness).unwrap().is_positive(),
                    "case {i}: witness not accepted"
                );
                // The witness is the shortlex-least accepted word.
                for w in enumerate_words(alphabet, witness.len()) {
                    if w == witness {
                        break;
                    }
                    assert!(
                        qfa_accept_probability(&m, &w).unwrap().is_zero(),
                        "case {i}: {w:?} accepted before witness {witness:?}"
                    );
                }
            }
        }
    }
    assert!(empties >= 20, "only {empties} empty machines exercised");
}

#[test]
fn emptiness_trivial_fixtures() {
    let alphabet = Alphabet::new(vec!['a']).unwrap();
    let mut no_accept = trivial_qfa(&alphabet, true);
    no_accept.accept.clear();
    assert_eq!(nqfa_emptiness(&no_accept).unwrap(), EmptinessVerdict::Empty);

    let yes = trivial_qfa(&alphabet, true);
    assert_eq!(
        nqfa_emptiness(&yes).unwrap(),
        EmptinessVerdict::Nonempty {
            witness: Word::empty()
        }
    );
}

#[test]
fn aqfa_wrappers_match_density_acceptance() {
    let mut rng = Rng::new(0xaa9fa);
    let unary = Alphabet::new(vec!['a']).unwrap();
    let binary = Alphabet::new(vec!['a', 'b']).unwrap();
    for i in 0..100 {
        let alphabet = if i % 2 == 0 { &unary } else { &binary };
        let dim = 1 + rng.below(3);
        let m = random_qfa(&mut rng, dim, alphabet);
        let existential = nqfa_as_aqfa(&m);
        let universal = uqfa_as_aqfa(&m);
        assert!(existential.violations().is_empty(), "case {i}");
        let len = rng.below(4);
        let w = Word::new((0..len).map(|_| *rng.pick(alphabet.symbols())).collect());
        assert_eq!(
            aqfa_accepts(&existential, &w).unwrap(),
            nqfa_accepts(&m, &w).unwrap(),
            "case {i} existential wrapper on {w:?}"
        );
        assert_eq!(
            aqfa_accepts(&universal, &w).unwrap(),
            uqfa_accepts(&m, &w).unwrap(),
            "case {i} universal wrapper on {w:?}"
        );
    }
}

#[test]
fn all_accepting_identity_aqfa_accepts_everything() {
    let alphabet = Alphabet::new(vec!['a']).unwrap();
    let mut ops = BTreeMap::new();
    let mut cdelta = BTreeMap::new();
    for sym in ['a', END_MARKER] {
        ops.insert(("s".to_string(), sym), Superoperator::identity(1));
        cdelta.insert(("s".to_string(), sym, 1), "s".to_string());
    }
    let m = AqfaDescription {
        alphabet,
        classical_states: vec!["s".into()],
        universal: BTreeSet::new(),
        classical_initial: "s".into(),
        classical_accept: BTreeSet::from(["s".to_string()]),
        basis: vec!["x".into()],
        initial: "x".into(),
        ops,
        cdelta,
    };
    assert!(m.violations().is_empty());
    for n in 0..6 {
        assert_eq!(
            aqfa_accepts(&m, &Word::repeated('a', n)).unwrap(),
            Verdict::Accept
        );
    }
}

#[test]
fn aqfa_tree_is_consistent_and_matches_accepts() {
    let mut rng = Rng::new(0x7ee9fa);
    let unary = Alphabet::new(vec!['a']).unwrap();
    use raa_core::gen::random_aqfa;
    for i in 0..60 {
        let m = random_aqfa(&mut rng, 2, 2, &unary);
        assert!(m.violations().is_empty(), "case {i}: {:?}", m.violations());
        let w = Word::repeated('a', rng.below(3));
        let tree = aqfa_tree(&m, &w).unwrap();
        assert!(tree.is_consistent(), "case {i}");
        assert_eq!(
            tree.value(),
            aqfa_accepts(&m, &w).unwrap().accepted(),
            "case {i}"
        );
    }
}

#[test]
fn usquare_aqfa_difference_branch_vanishes_exactly_on_squares() {
    // For m = i² the rejecting outcome (measurement outcome 1 of the
    // final universal step) has amplitude exactly zero at the matching
    // pick, so that branch is absent from the tree.
    use raa_core::core::TreeNode;
    fn universal_nodes<'a>(n: &'a TreeNode, out: &mut Vec<&'a TreeNode>) {
        if n.label == "U" {
            out.push(n);
        }
        for (_, c) in &n.children {
            universal_nodes(c, out);
        }
    }
    let m = build_usquare_aqfa();

    let accept4 = aqfa_tree(&m, &Word::repeated('a', 4)).unwrap();
    assert!(accept4.value());
    let mut us = Vec::new();
    universal_nodes(&accept4.root, &mut us);
    assert!(
        us.iter()
            .any(|n| n.children.iter().all(|(edge, _)| edge != "1")),
        "expected a universal node without the difference outcome"
    );

    let reject5 = aqfa_tree(&m, &Word::repeated('a', 5)).unwrap();
    assert!(!reject5.value());
    let mut us = Vec::new();
    universal_nodes(&reject5.root, &mut us);
    assert!(!us.is_empty());
    for n in &us {
        let diff = n.children.iter().find(|(edge, _)| edge == "1");
        let (_, child) = diff.expect("difference branch present for a non-square length");
        assert!(!child.value, "the difference branch must reject");
    }
}
