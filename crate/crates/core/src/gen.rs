//! Seeded, deterministic generators of random machines, used by the
//! test suites and handy for exploration. All generators are pure
//! functions of the seed.

use crate::alt::{A1caDescription, AfaDescription, CounterCases};
use crate::core::{rat, Alphabet, GaussianRational, MachineDescription, Symbol, END_MARKER};
use crate::pafa::{Pa1caDescription, PafaDescription, UCases, UTable, UTarget};
use crate::qfa::{AqfaDescription, Matrix, QfaDescription, Superoperator};
use crate::tmc::{Dir, TmDescription};
use std::collections::{BTreeMap, BTreeSet};

/// Small splitmix64 PRNG; deterministic and dependency-free.
#[derive(Debug, Clone)]
pub struct Rng(u64);

impl Rng {
    pub fn new(seed: u64) -> Self {
        Rng(seed)
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    /// Uniform value in `0..n`.
    pub fn below(&mut self, n: usize) -> usize {
        assert!(n > 0);
        (self.next_u64() % n as u64) as usize
    }

    /// True with probability `num/den`.
    pub fn chance(&mut self, num: u64, den: u64) -> bool {
        self.next_u64() % den < num
    }

    pub fn pick<'a, T>(&mut self, xs: &'a [T]) -> &'a T {
        &xs[self.below(xs.len())]
    }
}

fn state_names(prefix: &str, n: usize) -> Vec<String> {
    (0..n).map(|i| format!("{prefix}{i}")).collect()
}

/// Random AFA with up to `max_states` states over the given alphabet.
pub fn random_afa(rng: &mut Rng, max_states: usize, alphabet: &Alphabet) -> AfaDescription {
    let n = 1 + rng.below(max_states);
    let states = state_names("s", n);
    let universal: BTreeSet<String> = states
        .iter()
        .filter(|_| rng.chance(1, 2))
        .cloned()
        .collect();
    let mut symbols: Vec<Symbol> = alphabet.symbols().to_vec();
    symbols.push(END_MARKER);
    let mut delta: BTreeMap<String, BTreeMap<Symbol, Vec<String>>> = BTreeMap::new();
    for s in &states {
        for &sym in &symbols {
            let mut targets = Vec::new();
            for t in &states {
                if rng.chance(1, 2) {
                    targets.push(t.clone());
                }
            }
            if !targets.is_empty() {
                delta.entry(s.clone()).or_default().insert(sym, targets);
            }
        }
    }
    AfaDescription {
        alphabet: alphabet.clone(),
        initial: states[0].clone(),
        accepting: states[rng.below(n)].clone(),
        states,
        universal,
        delta,
    }
}

/// Random A1CA; when `inert_counter` is set, all updates are 0 and both
/// counter statuses share the same successor sets.
pub fn random_a1ca(
    rng: &mut Rng,
    max_states: usize,
    alphabet: &Alphabet,
    inert_counter: bool,
) -> A1caDescription {
    let n = 1 + rng.below(max_states);
    let states = state_names("s", n);
    let universal: BTreeSet<String> = states
        .iter()
        .filter(|_| rng.chance(1, 2))
        .cloned()
        .collect();
    let mut symbols: Vec<Symbol> = alphabet.symbols().to_vec();
    symbols.push(END_MARKER);
    let mut delta: BTreeMap<String, BTreeMap<Symbol, CounterCases>> = BTreeMap::new();
    for s in &states {
        for &sym in &symbols {
            let gen_targets = |rng: &mut Rng| {
                let mut targets = Vec::new();
                for t in &states {
                    if rng.chance(1, 2) {
                        let upd = if inert_counter {
                            0
                        } else {
                            rng.below(3) as i8 - 1
                        };
                        targets.push((t.clone(), upd));
                    }
                }
                targets
            };
            let zero = gen_targets(rng);
            let nonzero = if inert_counter {
                zero.clone()
            } else {
                gen_targets(rng)
            };
            if !(zero.is_empty() && nonzero.is_empty()) {
                delta
                    .entry(s.clone())
                    .or_default()
                    .insert(sym, CounterCases { zero, nonzero });
            }
        }
    }
    A1caDescription {
        alphabet: alphabet.clone(),
        initial: states[0].clone(),
        accepting: states[rng.below(n)].clone(),
        states,
        universal,
        delta,
    }
}

/// Converts an AFA into the A1CA with an inert counter and identical
/// behavior.
pub fn afa_with_inert_counter(m: &AfaDescription) -> A1caDescription {
    let delta = m
        .delta
        .iter()
        .map(|(s, by_sym)| {
            let row = by_sym
                .iter()
                .map(|(&sym, targets)| {
                    let ts: Vec<(String, i8)> = targets.iter().map(|t| (t.clone(), 0)).collect();
                    (
                        sym,
                        CounterCases {
                            zero: ts.clone(),
                            nonzero: ts,
                        },
                    )
                })
                .collect();
            (s.clone(), row)
        })
        .collect();
    A1caDescription {
        alphabet: m.alphabet.clone(),
        states: m.states.clone(),
        universal: m.universal.clone(),
        initial: m.initial.clone(),
        accepting: m.accepting.clone(),
        delta,
    }
}

/// Random valid PAFA over `working` non-absorbing common states with
/// `|Γ| = |Δ| = 2`.
pub fn random_pafa(
    rng: &mut Rng,
    working: usize,
    privates: usize,
    alphabet: &Alphabet,
) -> PafaDescription {
    let mut commons = state_names("w", working);
    commons.push("qa".into());
    commons.push("qr".into());
    let private_states = state_names("p", privates);
    let gamma = vec!["A".to_string(), "B".to_string()];
    let delta_priv = vec!["x".to_string(), "y".to_string()];
    let working_states: Vec<String> = commons[..working].to_vec();

    let mut delta_e: BTreeMap<String, BTreeMap<String, String>> = BTreeMap::new();
    for c in &working_states {
        let mut row = BTreeMap::new();
        if rng.chance(1, 2) {
            row.insert(
                gamma[rng.below(2)].clone(),
                commons[rng.below(commons.len())].clone(),
            );
        } else {
            for g in &gamma {
                row.insert(g.clone(), commons[rng.below(commons.len())].clone());
            }
        }
        delta_e.insert(c.clone(), row);
    }

    let mut universal = BTreeSet::new();
    for c in &working_states {
        for p in &private_states {
            if rng.chance(1, 2) {
                universal.insert((c.clone(), p.clone()));
            }
        }
    }

    let mut symbols: Vec<Symbol> = alphabet.symbols().to_vec();
    symbols.push(END_MARKER);
    let mut delta_u = UTable::new();
    for (c, p) in &universal {
        for &sym in &symbols {
            if rng.chance(1, 8) {
                continue; // leave the row empty (vacuous)
            }
            let mut row = BTreeMap::new();
            if rng.chance(1, 2) {
                let label = if rng.chance(1, 2) {
                    gamma[rng.below(2)].clone()
                } else {
                    delta_priv[rng.below(2)].clone()
                };
                row.insert(
                    label,
                    (
                        commons[rng.below(commons.len())].clone(),
                        private_states[rng.below(privates)].clone(),
                    ),
                );
            } else {
                for g in &gamma {
                    // Public moves preserve the private component.
                    row.insert(
                        g.clone(),
                        (commons[rng.below(commons.len())].clone(), p.clone()),
                    );
                }
                for d in &delta_priv {
                    row.insert(
                        d.clone(),
                        (
                            commons[rng.below(commons.len())].clone(),
                            private_states[rng.below(privates)].clone(),
                        ),
                    );
                }
            }
            delta_u
                .entry((c.clone(), p.clone()))
                .or_default()
                .insert(sym, row);
        }
    }

    PafaDescription {
        alphabet: alphabet.clone(),
        common_states: commons,
        private_states: private_states.clone(),
        universal,
        gamma,
        delta_priv,
        initial: (working_states[0].clone(), private_states[0].clone()),
        accept: "qa".into(),
        reject: "qr".into(),
        delta_e,
        delta_u,
    }
}

/// Random valid PA1CA (counter-extended [`random_pafa`]).
pub fn random_pa1ca(
    rng: &mut Rng,
    working: usize,
    privates: usize,
    alphabet: &Alphabet,
) -> Pa1caDescription {
    let base = random_pafa(rng, working, privates, alphabet);
    let mut delta_u: BTreeMap<(String, String), BTreeMap<Symbol, UCases>> = BTreeMap::new();
    for (k, by_sym) in &base.delta_u {
        for (&sym, targets) in by_sym {
            let attach = |rng: &mut Rng, targets: &BTreeMap<String, (String, String)>| {
                targets
                    .iter()
                    .map(|(l, (c2, p2))| {
                        (
                            l.clone(),
                            (c2.clone(), p2.clone(), rng.below(3) as i8 - 1) as UTarget,
                        )
                    })
                    .collect::<BTreeMap<String, UTarget>>()
            };
            let zero = attach(rng, targets);
            // Sometimes branch on the counter status with a fresh set.
            let nonzero = if rng.chance(1, 3) {
                attach(rng, targets)
            } else {
                zero.clone()
            };
            delta_u
                .entry(k.clone())
                .or_default()
                .insert(sym, UCases { zero, nonzero });
        }
    }
    Pa1caDescription {
        alphabet: base.alphabet,
        common_states: base.common_states,
        private_states: base.private_states,
        universal: base.universal,
        gamma: base.gamma,
        delta_priv: base.delta_priv,
        initial: base.initial,
        accept: base.accept,
        reject: base.reject,
        delta_e: base.delta_e,
        delta_u,
    }
}

/// Random exactly-unitary matrix: a product of signed/phased
/// permutations and Pythagorean plane rotations.
pub fn random_unitary(rng: &mut Rng, dim: usize) -> Matrix {
    let mut u = Matrix::identity(dim);
    let rotations: [(i64, i64, i64); 4] = [(3, 4, 5), (5, 12, 13), (8, 15, 17), (20, 21, 29)];
    let factors = 1 + rng.below(3);
    for _ in 0..factors {
        if rng.chance(1, 2) && dim >= 2 {
            // Plane rotation.
            let (a, b, c) = *rng.pick(&rotations);
            let i = rng.below(dim);
            let mut j = rng.below(dim);
            while j == i {
                j = rng.below(dim);
            }
            let mut r = Matrix::identity(dim);
            r.set(i, i, GaussianRational::from_rational(rat(a, c)));
            r.set(i, j, GaussianRational::from_rational(rat(-b, c)));
            r.set(j, i, GaussianRational::from_rational(rat(b, c)));
            r.set(j, j, GaussianRational::from_rational(rat(a, c)));
            u = u.mul(&r).unwrap();
        } else {
            // Signed/phased permutation.
            let mut perm: Vec<usize> = (0..dim).collect();
            for i in (1..dim).rev() {
                perm.swap(i, rng.below(i + 1));
            }
            let mut pmat = Matrix::zero(dim, dim);
            for (row, &col) in perm.iter().enumerate() {
                let phase = match rng.below(4) {
                    0 => GaussianRational::one(),
                    1 => -GaussianRational::one(),
                    2 => GaussianRational::i(),
                    _ => -GaussianRational::i(),
                };
                pmat.set(row, col, phase);
            }
            u = u.mul(&pmat).unwrap();
        }
    }
    u
}

/// Random exactly-complete superoperator: a unitary composed with a
/// projective measurement onto a random partition of the basis.
pub fn random_superoperator(rng: &mut Rng, dim: usize) -> Superoperator {
    let u = random_unitary(rng, dim);
    if rng.chance(1, 3) {
        return Superoperator::new(dim, vec![u]);
    }
    // Partition the basis into 1..=dim groups.
    let groups = 1 + rng.below(dim);
    let mut assign = vec![0usize; dim];
    for (i, a) in assign.iter_mut().enumerate() {
        *a = if i < groups { i } else { rng.below(groups) };
    }
    // Either measure-then-evolve or evolve-then-measure; both families
    // are exactly complete, but mixing the two forms would not be.
    let unitary_first = rng.chance(1, 2);
    let mut elements = Vec::new();
    for g in 0..groups {
        let mut p = Matrix::zero(dim, dim);
        for (i, &a) in assign.iter().enumerate() {
            if a == g {
                p.set(i, i, GaussianRational::one());
            }
        }
        let e = if unitary_first {
            p.mul(&u).unwrap()
        } else {
            u.mul(&p).unwrap()
        };
        elements.push(e);
    }
    let op = Superoperator::new(dim, elements);
    debug_assert!(op.is_complete());
    op
}

/// Random valid QFA with `dim` basis states.
pub fn random_qfa(rng: &mut Rng, dim: usize, alphabet: &Alphabet) -> QfaDescription {
    let basis = state_names("q", dim);
    let mut ops = BTreeMap::new();
    for &sym in alphabet.symbols() {
        ops.insert(sym, random_superoperator(rng, dim));
    }
    ops.insert(END_MARKER, random_superoperator(rng, dim));
    let accept: BTreeSet<String> = basis.iter().filter(|_| rng.chance(1, 3)).cloned().collect();
    QfaDescription {
        alphabet: alphabet.clone(),
        initial: basis[rng.below(dim)].clone(),
        basis,
        accept,
        ops,
    }
}

/// Random valid AQFA with identity-or-random superoperators and random
/// classical control.
pub fn random_aqfa(
    rng: &mut Rng,
    classical: usize,
    dim: usize,
    alphabet: &Alphabet,
) -> AqfaDescription {
    let classical_states = state_names("c", classical);
    let basis = state_names("x", dim);
    let mut symbols: Vec<Symbol> = alphabet.symbols().to_vec();
    symbols.push(END_MARKER);
    let mut ops = BTreeMap::new();
    let mut cdelta = BTreeMap::new();
    for s in &classical_states {
        for &sym in &symbols {
            let op = if rng.chance(1, 4) {
                Superoperator::identity(dim)
            } else {
                random_superoperator(rng, dim)
            };
            for k in 1..=op.outcome_count() {
                cdelta.insert(
                    (s.clone(), sym, k),
                    classical_states[rng.below(classical)].clone(),
                );
            }
            ops.insert((s.clone(), sym), op);
        }
    }
    AqfaDescription {
        alphabet: alphabet.clone(),
        universal: classical_states
            .iter()
            .filter(|_| rng.chance(1, 2))
            .cloned()
            .collect(),
        classical_initial: classical_states[0].clone(),
        classical_accept: classical_states
            .iter()
            .filter(|_| rng.chance(1, 3))
            .cloned()
            .collect(),
        classical_states,
        initial: basis[rng.below(dim)].clone(),
        basis,
        ops,
        cdelta,
    }
}

/// Random small TM respecting the start-symbol discipline statically
/// (never overwrites it, never moves left from it). Dynamic compliance
/// is up to the caller to check.
pub fn random_tm(rng: &mut Rng) -> TmDescription {
    let n = 2 + rng.below(3);
    let mut states = state_names("q", n);
    states.push("qf".into());
    let tape = vec!['▷', '_', 'a'];
    let mut delta: BTreeMap<String, BTreeMap<char, (String, char, Dir)>> = BTreeMap::new();
    for q in &states[..n] {
        for &sym in &tape {
            if rng.chance(1, 6) {
                continue;
            }
            let target = states[rng.below(states.len())].clone();
            let (write, dir) = if sym == '▷' {
                ('▷', Dir::R)
            } else {
                (
                    *rng.pick(&['_', 'a']),
                    if rng.chance(1, 2) { Dir::L } else { Dir::R },
                )
            };
            delta
                .entry(q.clone())
                .or_default()
                .insert(sym, (target, write, dir));
        }
    }
    TmDescription {
        initial: "q0".into(),
        halting: "qf".into(),
        states,
        tape_alphabet: tape,
        start_symbol: '▷',
        blank: '_',
        delta,
    }
}

/// Random machine of any kind, for format round-trip testing.
pub fn random_machine(rng: &mut Rng) -> MachineDescription {
    let ab2 = Alphabet::new(vec!['a', 'b']).unwrap();
    let unary = Alphabet::new(vec!['a']).unwrap();
    match rng.below(6) {
        0 => MachineDescription::Afa(random_afa(rng, 4, &ab2)),
        1 => MachineDescription::A1ca(random_a1ca(rng, 4, &ab2, false)),
        2 => MachineDescription::Pafa(random_pafa(rng, 3, 2, &ab2)),
        3 => MachineDescription::Pa1ca(random_pa1ca(rng, 3, 2, &unary)),
        4 => {
            let dim = 1 + rng.below(3);
            MachineDescription::Qfa(random_qfa(rng, dim, &ab2))
        }
        _ => MachineDescription::Aqfa(random_aqfa(rng, 2, 2, &unary)),
    }
}
