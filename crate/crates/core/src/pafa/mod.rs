//! Private alternating finite automata and their one-counter extension.
//!
//! A PAFA is a game between an existential player who sees only the
//! common state component and the public move history, and a universal
//! player who also controls the private component and the input head.
//! Acceptance asks for a strategy, one public move per information set
//! `(common state, public history)`, under which every branch of the
//! induced computation subtree accepts. [`pafa_accepts`] decides this by
//! backtracking search over lazily assigned information sets;
//! [`verify_strategy`] is an independent checker for witnesses.

mod build;
mod eval;

pub use build::{build_twin, build_upower, build_usquare_pa1ca};
pub use eval::{
    accepting_strategy, pa1ca_accepting_strategy, pa1ca_accepts, pa1ca_verify_strategy,
    pafa_accepts, verify_strategy, VerifyOutcome,
};

use crate::alt::CounterUpdate;
use crate::core::{Alphabet, Symbol, Violation, END_MARKER};
use std::collections::{BTreeMap, BTreeSet};

/// The existential player's knowledge at a choice point: the common
/// state component and the public moves seen on the path so far.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct InformationSet {
    pub common: String,
    pub history: Vec<String>,
}

impl std::fmt::Display for InformationSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, [{}])", self.common, self.history.join(" "))
    }
}

/// Finite partial map from information sets to public move labels; the
/// acceptance witness.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Strategy {
    pub moves: BTreeMap<(String, Vec<String>), String>,
}

impl Strategy {
    pub fn get(&self, common: &str, history: &[String]) -> Option<&String> {
        self.moves.get(&(common.to_string(), history.to_vec()))
    }

    pub fn insert(&mut self, common: &str, history: Vec<String>, label: &str) {
        self.moves
            .insert((common.to_string(), history), label.to_string());
    }

    pub fn len(&self) -> usize {
        self.moves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.moves.is_empty()
    }
}

/// One entry of a universal transition: move label, successor common and
/// private components, and (for the one-counter model) a counter update.
pub type UTarget = (String, String, CounterUpdate);

/// Labeled universal successors of one `(state, symbol)` entry.
pub type ULabeled = BTreeMap<String, (String, String)>;

/// The full universal transition table of a PAFA.
pub type UTable = BTreeMap<(String, String), BTreeMap<Symbol, ULabeled>>;

/// Zero/nonzero universal successor maps of a PA1CA entry. A plain PAFA
/// stores identical maps under both statuses.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct UCases {
    pub zero: BTreeMap<String, UTarget>,
    pub nonzero: BTreeMap<String, UTarget>,
}

/// Realtime private alternating finite automaton.
///
/// `delta_e` is keyed by common state only: existential moves see
/// neither the input symbol nor the private component. `delta_u` is
/// keyed by the full state and the symbol; every multi-valued entry
/// carries one distinctly labeled successor per element of `Γ ∪ Δ`, and
/// its `Γ`-labeled successors must keep the private component unchanged.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PafaDescription {
    pub alphabet: Alphabet,
    pub common_states: Vec<String>,
    pub private_states: Vec<String>,
    /// Universal states, as (common, private) pairs.
    pub universal: BTreeSet<(String, String)>,
    /// Public game alphabet Γ.
    pub gamma: Vec<String>,
    /// Private game alphabet Δ.
    pub delta_priv: Vec<String>,
    pub initial: (String, String),
    /// Accepting common component; absorbing.
    pub accept: String,
    /// Rejecting common component; absorbing.
    pub reject: String,
    /// `delta_e[common][label] = successor common`.
    pub delta_e: BTreeMap<String, BTreeMap<String, String>>,
    /// `delta_u[(common, private)][symbol][label] = (common', private')`.
    /// Updates are fixed to 0 for the counter-free model.
    pub delta_u: UTable,
}

/// PAFA augmented with an integer counter starting at zero, accessed
/// only by the universal states. Strategies stay keyed by
/// (common state, public history); the counter never enters the key.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pa1caDescription {
    pub alphabet: Alphabet,
    pub common_states: Vec<String>,
    pub private_states: Vec<String>,
    pub universal: BTreeSet<(String, String)>,
    pub gamma: Vec<String>,
    pub delta_priv: Vec<String>,
    pub initial: (String, String),
    pub accept: String,
    pub reject: String,
    pub delta_e: BTreeMap<String, BTreeMap<String, String>>,
    pub delta_u: BTreeMap<(String, String), BTreeMap<Symbol, UCases>>,
}

impl PafaDescription {
    pub fn violations(&self) -> Vec<Violation> {
        let shared = SharedParts {
            alphabet: &self.alphabet,
            common_states: &self.common_states,
            private_states: &self.private_states,
            universal: &self.universal,
            gamma: &self.gamma,
            delta_priv: &self.delta_priv,
            initial: &self.initial,
            accept: &self.accept,
            reject: &self.reject,
            delta_e: &self.delta_e,
        };
        let mut v = shared.violations();
        for ((c, p), by_sym) in &self.delta_u {
            for (&sym, targets) in by_sym {
                shared.check_u_row(
                    c,
                    p,
                    sym,
                    targets.iter().map(|(l, (c2, p2))| (l, c2, p2, 0)),
                    &mut v,
                );
            }
        }
        v
    }
}

impl Pa1caDescription {
    pub fn violations(&self) -> Vec<Violation> {
        let shared = SharedParts {
            alphabet: &self.alphabet,
            common_states: &self.common_states,
            private_states: &self.private_states,
            universal: &self.universal,
            gamma: &self.gamma,
            delta_priv: &self.delta_priv,
            initial: &self.initial,
            accept: &self.accept,
            reject: &self.reject,
            delta_e: &self.delta_e,
        };
        let mut v = shared.violations();
        for ((c, p), by_sym) in &self.delta_u {
            for (&sym, cases) in by_sym {
                shared.check_u_row(
                    c,
                    p,
                    sym,
                    cases.zero.iter().map(|(l, (c2, p2, u))| (l, c2, p2, *u)),
                    &mut v,
                );
                shared.check_u_row(
                    c,
                    p,
                    sym,
                    cases.nonzero.iter().map(|(l, (c2, p2, u))| (l, c2, p2, *u)),
                    &mut v,
                );
            }
        }
        v
    }
}

struct SharedParts<'a> {
    alphabet: &'a Alphabet,
    common_states: &'a [String],
    private_states: &'a [String],
    universal: &'a BTreeSet<(String, String)>,
    gamma: &'a [String],
    delta_priv: &'a [String],
    initial: &'a (String, String),
    accept: &'a str,
    reject: &'a str,
    delta_e: &'a BTreeMap<String, BTreeMap<String, String>>,
}

impl SharedParts<'_> {
    fn has_common(&self, c: &str) -> bool {
        self.common_states.iter().any(|x| x == c)
    }

    fn has_private(&self, p: &str) -> bool {
        self.private_states.iter().any(|x| x == p)
    }

    fn violations(&self) -> Vec<Violation> {
        let mut v = Vec::new();
        for (name, set) in [
            ("common", self.common_states),
            ("private", self.private_states),
        ] {
            let mut seen = BTreeSet::new();
            for s in set {
                if !seen.insert(s) {
                    v.push(Violation::new(
                        "states",
                        format!("duplicate {name} state {s:?}"),
                    ));
                }
            }
        }
        if self.gamma.len() < 2 {
            v.push(Violation::new(
                "game-alphabet",
                "public game alphabet must have at least 2 labels",
            ));
        }
        if self.delta_priv.len() < 2 {
            v.push(Violation::new(
                "game-alphabet",
                "private game alphabet must have at least 2 labels",
            ));
        }
        let gset: BTreeSet<_> = self.gamma.iter().collect();
        let dset: BTreeSet<_> = self.delta_priv.iter().collect();
        if gset.len() != self.gamma.len() || dset.len() != self.delta_priv.len() {
            v.push(Violation::new(
                "game-alphabet",
                "game alphabet labels must be distinct",
            ));
        }
        if gset.intersection(&dset).next().is_some() {
            v.push(Violation::new(
                "game-alphabet",
                "public and private game alphabets must be disjoint",
            ));
        }
        if self.accept == self.reject {
            v.push(Violation::new(
                "accept-reject",
                "accepting and rejecting common components must differ",
            ));
        }
        for c in [self.accept, self.reject, self.initial.0.as_str()] {
            if !self.has_common(c) {
                v.push(Violation::new(
                    "states",
                    format!("common state {c:?} is not declared"),
                ));
            }
        }
        if !self.has_private(&self.initial.1) {
            v.push(Violation::new(
                "states",
                format!("private state {:?} is not declared", self.initial.1),
            ));
        }
        for (c, p) in self.universal {
            if !self.has_common(c) || !self.has_private(p) {
                v.push(Violation::new(
                    "states",
                    format!("universal state ({c},{p}) is not declared"),
                ));
            }
        }
        for (c, row) in self.delta_e {
            if !self.has_common(c) {
                v.push(Violation::new(
                    "states",
                    format!("delta_E source {c:?} is not declared"),
                ));
            }
            for (label, target) in row {
                if !gset.contains(label) {
                    v.push(Violation::new(
                        "existential-label",
                        format!("delta_E({c}) label {label:?} is not in the public game alphabet"),
                    ));
                }
                if !self.has_common(target) {
                    v.push(Violation::new(
                        "states",
                        format!("delta_E({c}) target {target:?} is not declared"),
                    ));
                }
            }
            if row.len() != 1 && row.len() != self.gamma.len() {
                v.push(Violation::new(
                    "existential-arity",
                    format!(
                        "delta_E({c}) has {} successors; it must return a singleton or a set of size |Γ| = {}",
                        row.len(),
                        self.gamma.len()
                    ),
                ));
            } else if row.len() == self.gamma.len()
                && !self.gamma.iter().all(|g| row.contains_key(g))
            {
                v.push(Violation::new(
                    "existential-arity",
                    format!("delta_E({c}) must carry one distinct label per element of Γ"),
                ));
            }
        }
        v
    }

    fn check_u_row<'x>(
        &self,
        c: &str,
        p: &str,
        sym: Symbol,
        entries: impl Iterator<Item = (&'x String, &'x String, &'x String, CounterUpdate)>,
        v: &mut Vec<Violation>,
    ) {
        if sym != END_MARKER && !self.alphabet.contains(sym) {
            v.push(Violation::new(
                "delta-symbol",
                format!("symbol {sym:?} is not in the alphabet"),
            ));
        }
        if !self.has_common(c) || !self.has_private(p) {
            v.push(Violation::new(
                "states",
                format!("delta_U source ({c},{p}) is not declared"),
            ));
        }
        let gset: BTreeSet<_> = self.gamma.iter().collect();
        let all: BTreeSet<_> = self.gamma.iter().chain(self.delta_priv.iter()).collect();
        let entries: Vec<_> = entries.collect();
        for (label, c2, p2, upd) in &entries {
            if !all.contains(label) {
                v.push(Violation::new(
                    "universal-label",
                    format!("delta_U({c},{p},{sym}) label {label:?} is not a game label"),
                ));
            }
            if !self.has_common(c2) || !self.has_private(p2) {
                v.push(Violation::new(
                    "states",
                    format!("delta_U({c},{p},{sym}) target ({c2},{p2}) is not declared"),
                ));
            }
            if !(-1..=1).contains(upd) {
                v.push(Violation::new(
                    "counter-update",
                    format!("delta_U({c},{p},{sym}) update {upd} out of range {{-1,0,1}}"),
                ));
            }
            if entries.len() > 1 && gset.contains(label) && *p2 != p {
                v.push(Violation::new(
                    "public-move-privacy",
                    format!(
                        "delta_U({c},{p},{sym}) public move {label:?} changes the private component to {p2:?}"
                    ),
                ));
            }
        }
        if !entries.is_empty() && entries.len() != 1 && entries.len() != all.len() {
            v.push(Violation::new(
                "universal-arity",
                format!(
                    "delta_U({c},{p},{sym}) has {} successors; it must return a singleton or a set of size |Γ ∪ Δ| = {}",
                    entries.len(),
                    all.len()
                ),
            ));
        } else if entries.len() == all.len() {
            let labels: BTreeSet<_> = entries.iter().map(|(l, _, _, _)| *l).collect();
            if labels.len() != all.len() {
                v.push(Violation::new(
                    "universal-arity",
                    format!(
                        "delta_U({c},{p},{sym}) must carry one distinct label per element of Γ ∪ Δ"
                    ),
                ));
            }
        }
    }
}

/// Converts a PAFA into the equivalent PA1CA whose counter is inert.
pub fn pafa_as_pa1ca(m: &PafaDescription) -> Pa1caDescription {
    let delta_u = m
        .delta_u
        .iter()
        .map(|(k, by_sym)| {
            let by_sym = by_sym
                .iter()
                .map(|(&sym, targets)| {
                    let with_upd: BTreeMap<String, UTarget> = targets
                        .iter()
                        .map(|(l, (c, p))| (l.clone(), (c.clone(), p.clone(), 0)))
                        .collect();
                    (
                        sym,
                        UCases {
                            zero: with_upd.clone(),
                            nonzero: with_upd,
                        },
                    )
                })
                .collect();
            (k.clone(), by_sym)
        })
        .collect();
    Pa1caDescription {
        alphabet: m.alphabet.clone(),
        common_states: m.common_states.clone(),
        private_states: m.private_states.clone(),
        universal: m.universal.clone(),
        gamma: m.gamma.clone(),
        delta_priv: m.delta_priv.clone(),
        initial: m.initial.clone(),
        accept: m.accept.clone(),
        reject: m.reject.clone(),
        delta_e: m.delta_e.clone(),
        delta_u,
    }
}
