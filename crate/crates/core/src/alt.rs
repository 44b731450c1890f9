//! Realtime alternating finite automata and their one-counter extension.
//!
//! Both models read `¢w¢` with two transition steps per tape symbol and
//! accept iff the AND-OR evaluation of the depth-`2n+4` computation tree
//! is true at the root. A leaf is true iff its state is the accepting
//! state; for the one-counter model the counter value at a leaf is
//! unconstrained.

use crate::core::{
    Alphabet, ComputationTree, Connective, Symbol, TapeView, TreeNode, Verdict, Violation, Word,
};
use crate::Result;
use std::collections::{BTreeMap, BTreeSet, HashMap};

/// Counter update of a one-counter transition.
pub type CounterUpdate = i8;

/// Alternating finite automaton: states partitioned into existential and
/// universal, a powerset-valued transition function over `Σ̃`, one
/// initial and one accepting state.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AfaDescription {
    pub alphabet: Alphabet,
    pub states: Vec<String>,
    /// Subset of `states` that branch universally.
    pub universal: BTreeSet<String>,
    pub initial: String,
    pub accepting: String,
    /// `delta[state][symbol]` (symbol may be the end-marker); missing
    /// entries mean the empty successor set.
    pub delta: BTreeMap<String, BTreeMap<Symbol, Vec<String>>>,
}

/// Zero/nonzero successor sets of one A1CA transition entry.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CounterCases {
    pub zero: Vec<(String, CounterUpdate)>,
    pub nonzero: Vec<(String, CounterUpdate)>,
}

/// AFA augmented with an integer counter tested for zero at every step;
/// each successor carries an update from `{-1, 0, +1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct A1caDescription {
    pub alphabet: Alphabet,
    pub states: Vec<String>,
    pub universal: BTreeSet<String>,
    pub initial: String,
    pub accepting: String,
    pub delta: BTreeMap<String, BTreeMap<Symbol, CounterCases>>,
}

/// A configuration of an alternating machine: state, tree level, and
/// (for the one-counter model) the counter value.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AltConfiguration {
    pub state: String,
    pub level: usize,
    pub counter: i64,
}

impl AfaDescription {
    pub fn violations(&self) -> Vec<Violation> {
        let mut v = Vec::new();
        check_state_set(&self.states, &mut v);
        check_member("initial", &self.initial, &self.states, &mut v);
        check_member("accepting", &self.accepting, &self.states, &mut v);
        for u in &self.universal {
            check_member("universal", u, &self.states, &mut v);
        }
        for (s, by_sym) in &self.delta {
            check_member("delta-source", s, &self.states, &mut v);
            for (&sym, targets) in by_sym {
                check_symbol(sym, &self.alphabet, &mut v);
                for t in targets {
                    check_member("delta-target", t, &self.states, &mut v);
                }
            }
        }
        v
    }

    fn successors(&self, state: &str, sym: Symbol) -> &[String] {
        self.delta
            .get(state)
            .and_then(|m| m.get(&sym))
            .map(|v| v.as_slice())
            .unwrap_or(&[])
    }
}

impl A1caDescription {
    pub fn violations(&self) -> Vec<Violation> {
        let mut v = Vec::new();
        check_state_set(&self.states, &mut v);
        check_member("initial", &self.initial, &self.states, &mut v);
        check_member("accepting", &self.accepting, &self.states, &mut v);
        for u in &self.universal {
            check_member("universal", u, &self.states, &mut v);
        }
        for (s, by_sym) in &self.delta {
            check_member("delta-source", s, &self.states, &mut v);
            for (&sym, cases) in by_sym {
                check_symbol(sym, &self.alphabet, &mut v);
                for (t, upd) in cases.zero.iter().chain(cases.nonzero.iter()) {
                    check_member("delta-target", t, &self.states, &mut v);
                    if !(-1..=1).contains(upd) {
                        v.push(Violation::new(
                            "counter-update",
                            format!("update {upd} out of range {{-1,0,1}} at state {s:?}"),
                        ));
                    }
                }
            }
        }
        v
    }

    fn successors(&self, state: &str, sym: Symbol, zero: bool) -> &[(String, CounterUpdate)] {
        self.delta
            .get(state)
            .and_then(|m| m.get(&sym))
            .map(|c| {
                if zero {
                    c.zero.as_slice()
                } else {
                    c.nonzero.as_slice()
                }
            })
            .unwrap_or(&[])
    }
}

fn check_state_set(states: &[String], v: &mut Vec<Violation>) {
    if states.is_empty() {
        v.push(Violation::new("states", "state set must be nonempty"));
    }
    let mut seen = BTreeSet::new();
    for s in states {
        if !seen.insert(s) {
            v.push(Violation::new("states", format!("duplicate state {s:?}")));
        }
    }
}

fn check_member(rule: &'static str, s: &str, states: &[String], v: &mut Vec<Violation>) {
    if !states.iter().any(|x| x == s) {
        v.push(Violation::new(rule, format!("state {s:?} is not declared")));
    }
}

fn check_symbol(sym: Symbol, alphabet: &Alphabet, v: &mut Vec<Violation>) {
    if sym != crate::core::END_MARKER && !alphabet.contains(sym) {
        v.push(Violation::new(
            "delta-symbol",
            format!("symbol {sym:?} is not in the alphabet"),
        ));
    }
}

/// AND-OR evaluation of the AFA computation tree, memoized over
/// `(state, level)`. Memoization cannot change the verdict because a
/// subtree's truth value depends only on its root configuration.
pub fn afa_accepts(m: &AfaDescription, w: &Word) -> Result<Verdict> {
    w.check_alphabet(&m.alphabet)?;
    let tape = TapeView::new(w.clone());
    let depth = tape.depth();
    let index: HashMap<&str, usize> = m
        .states
        .iter()
        .enumerate()
        .map(|(i, s)| (s.as_str(), i))
        .collect();
    let mut memo: HashMap<(usize, usize), bool> = HashMap::new();

    fn eval(
        m: &AfaDescription,
        index: &HashMap<&str, usize>,
        memo: &mut HashMap<(usize, usize), bool>,
        tape: &TapeView,
        depth: usize,
        state: &str,
        level: usize,
    ) -> bool {
        if level == depth {
            return state == m.accepting;
        }
        let key = (index[state], level);
        if let Some(&v) = memo.get(&key) {
            return v;
        }
        let sym = tape.symbol_at_level(level);
        let succs = m.successors(state, sym);
        let universal = m.universal.contains(state);
        let value = if universal {
            succs
                .iter()
                .all(|t| eval(m, index, memo, tape, depth, t, level + 1))
        } else {
            succs
                .iter()
                .any(|t| eval(m, index, memo, tape, depth, t, level + 1))
        };
        memo.insert(key, value);
        value
    }

    let accept = eval(m, &index, &mut memo, &tape, depth, &m.initial, 0);
    Ok(Verdict::from_bool(accept))
}

/// A1CA variant of [`afa_accepts`]: configurations carry an integer
/// counter starting at 0, the transition consulted depends on whether it
/// is zero, and memoization keys on `(state, level, counter)`.
pub fn a1ca_accepts(m: &A1caDescription, w: &Word) -> Result<Verdict> {
    w.check_alphabet(&m.alphabet)?;
    let tape = TapeView::new(w.clone());
    let depth = tape.depth();
    let index: HashMap<&str, usize> = m
        .states
        .iter()
        .enumerate()
        .map(|(i, s)| (s.as_str(), i))
        .collect();
    let mut memo: HashMap<(usize, usize, i64), bool> = HashMap::new();

    #[allow(clippy::too_many_arguments)]
    fn eval(
        m: &A1caDescription,
        index: &HashMap<&str, usize>,
        memo: &mut HashMap<(usize, usize, i64), bool>,
        tape: &TapeView,
        depth: usize,
        state: &str,
        level: usize,
        counter: i64,
    ) -> bool {
        if level == depth {
            return state == m.accepting;
        }
        let key = (index[state], level, counter);
        if let Some(&v) = memo.get(&key) {
            return v;
        }
        let sym = tape.symbol_at_level(level);
        let succs = m.successors(state, sym, counter == 0);
        let universal = m.universal.contains(state);
        let mut iter = succs.iter().map(|(t, upd)| {
            eval(
                m,
                index,
                memo,
                tape,
                depth,
                t,
                level + 1,
                counter + i64::from(*upd),
            )
        });
        let value = if universal {
            iter.all(|x| x)
        } else {
            iter.any(|x| x)
        };
        memo.insert(key, value);
        value
    }

    let accept = eval(m, &index, &mut memo, &tape, depth, &m.initial, 0, 0);
    Ok(Verdict::from_bool(accept))
}

/// Materializes the evaluated AFA computation tree without memoization
/// merging. The root value equals [`afa_accepts`].
pub fn afa_tree(m: &AfaDescription, w: &Word) -> Result<ComputationTree> {
    w.check_alphabet(&m.alphabet)?;
    let tape = TapeView::new(w.clone());
    let depth = tape.depth();

    fn build(
        m: &AfaDescription,
        tape: &TapeView,
        depth: usize,
        state: &str,
        level: usize,
    ) -> TreeNode {
        if level == depth {
            return TreeNode::leaf(level, state.to_string(), state == m.accepting);
        }
        let sym = tape.symbol_at_level(level);
        let children = m
            .successors(state, sym)
            .iter()
            .map(|t| (t.clone(), build(m, tape, depth, t, level + 1)))
            .collect();
        let conn = if m.universal.contains(state) {
            Connective::Universal
        } else {
            Connective::Existential
        };
        TreeNode::inner(level, state.to_string(), conn, children)
    }

    Ok(ComputationTree::new(build(m, &tape, depth, &m.initial, 0)))
}

/// [`afa_tree`] for the one-counter model; node labels include the
/// counter value and edge labels the applied update.
pub fn a1ca_tree(m: &A1caDescription, w: &Word) -> Result<ComputationTree> {
    w.check_alphabet(&m.alphabet)?;
    let tape = TapeView::new(w.clone());
    let depth = tape.depth();

    fn build(
        m: &A1caDescription,
        tape: &TapeView,
        depth: usize,
        state: &str,
        level: usize,
        counter: i64,
    ) -> TreeNode {
        let label = format!("{state} c={counter}");
        if level == depth {
            return TreeNode::leaf(level, label, state == m.accepting);
        }
        let sym = tape.symbol_at_level(level);
        let children = m
            .successors(state, sym, counter == 0)
            .iter()
            .map(|(t, upd)| {
                let edge = format!("{t},{upd:+}");
                (
                    edge,
                    build(m, tape, depth, t, level + 1, counter + i64::from(*upd)),
                )
            })
            .collect();
        let conn = if m.universal.contains(state) {
            Connective::Universal
        } else {
            Connective::Existential
        };
        TreeNode::inner(level, label, conn, children)
    }

    Ok(ComputationTree::new(build(
        m, &tape, depth, &m.initial, 0, 0,
    )))
}
