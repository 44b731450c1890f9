//! Strategy search and witness verification for PAFA/PA1CA.
//!
//! Acceptance is defined through strategies: the machine accepts iff
//! there is a map from information sets (common state, public history)
//! to public move labels such that the induced subtree (one chosen
//! child per existential choice node, all children of universal nodes)
//! has only accepting leaves, with the accepting and rejecting common
//! components absorbing their paths immediately.
//!
//! The search explores the computation tree level-synchronously: all
//! live branches advance together, information sets are assigned lazily
//! at first consultation in a fixed canonical order (level, common state
//! order, history shortlex), and the first false universal child prunes.
//! Backtracking is chronological over these assignments; the first
//! witness in canonical order is returned.

use super::{pafa_as_pa1ca, InformationSet, Pa1caDescription, PafaDescription, Strategy};
use crate::core::{TapeView, Verdict, Word};
use crate::{Error, Result};
use std::collections::HashMap;

/// Result of checking a strategy: accept, reject, or reject because the
/// strategy is undefined on a reached information set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VerifyOutcome {
    Accept,
    Reject,
    /// The strategy has no move for this reached information set.
    Undefined(InformationSet),
}

impl VerifyOutcome {
    pub fn verdict(&self) -> Verdict {
        match self {
            VerifyOutcome::Accept => Verdict::Accept,
            _ => Verdict::Reject,
        }
    }
}

/// Whether there is a strategy whose induced subtree accepts `w`.
pub fn pafa_accepts(m: &PafaDescription, w: &Word) -> Result<Verdict> {
    pa1ca_accepts(&pafa_as_pa1ca(m), w)
}

/// Witness strategy for `w`, or `None` iff the machine rejects. The
/// returned map is assigned exactly on the information sets reached
/// under the strategy itself.
pub fn accepting_strategy(m: &PafaDescription, w: &Word) -> Result<Option<Strategy>> {
    pa1ca_accepting_strategy(&pafa_as_pa1ca(m), w)
}

/// Evaluates the subtree induced by `f` only; usable as an independent
/// oracle against the search.
pub fn verify_strategy(m: &PafaDescription, w: &Word, f: &Strategy) -> Result<VerifyOutcome> {
    pa1ca_verify_strategy(&pafa_as_pa1ca(m), w, f)
}

/// [`pafa_accepts`] for the counter-extended model.
pub fn pa1ca_accepts(m: &Pa1caDescription, w: &Word) -> Result<Verdict> {
    let compiled = Compiled::new(m)?;
    let mut search = Search::new(&compiled, w)?;
    Ok(Verdict::from_bool(search.run()))
}

/// [`accepting_strategy`] for the counter-extended model.
pub fn pa1ca_accepting_strategy(m: &Pa1caDescription, w: &Word) -> Result<Option<Strategy>> {
    let compiled = Compiled::new(m)?;
    let mut search = Search::new(&compiled, w)?;
    if !search.run() {
        return Ok(None);
    }
    let mut out = Strategy::default();
    for (&(c, hist), &label) in &search.assigned {
        out.insert(
            &compiled.common_names[c as usize],
            search
                .hists
                .materialize(hist)
                .iter()
                .map(|&l| compiled.labels[l as usize].clone())
                .collect(),
            &compiled.labels[label as usize],
        );
    }
    Ok(Some(out))
}

/// [`verify_strategy`] for the counter-extended model.
pub fn pa1ca_verify_strategy(
    m: &Pa1caDescription,
    w: &Word,
    f: &Strategy,
) -> Result<VerifyOutcome> {
    let compiled = Compiled::new(m)?;
    w.check_alphabet(&compiled.alphabet)?;
    let tape = TapeView::new(w.clone());
    let depth = tape.depth();
    let mut history: Vec<String> = Vec::new();
    let root = Node {
        c: compiled.initial.0,
        p: compiled.initial.1,
        hist: 0,
        counter: 0,
    };
    return Ok(walk(&compiled, f, &tape, depth, &root, 0, &mut history));

    fn walk(
        m: &Compiled,
        f: &Strategy,
        tape: &TapeView,
        depth: usize,
        node: &Node,
        level: usize,
        history: &mut Vec<String>,
    ) -> VerifyOutcome {
        if node.c == m.accept_c {
            return VerifyOutcome::Accept;
        }
        if node.c == m.reject_c || level == depth {
            return VerifyOutcome::Reject;
        }
        let sym = m.sym_index(tape.symbol_at_level(level));
        if m.is_universal(node.c, node.p) {
            match m.u_row(node.c, node.p, sym, node.counter == 0) {
                None => VerifyOutcome::Accept,
                Some(URow::Single(c2, p2, upd)) => {
                    let child = Node {
                        c: *c2,
                        p: *p2,
                        hist: node.hist,
                        counter: node.counter + i64::from(*upd),
                    };
                    walk(m, f, tape, depth, &child, level + 1, history)
                }
                Some(URow::Branch(entries)) => {
                    for &(label, c2, p2, upd) in entries {
                        let public = (label as usize) < m.gamma_count;
                        debug_assert!(
                            !public || p2 == node.p,
                            "public universal move changed the private component"
                        );
                        if public {
                            history.push(m.labels[label as usize].clone());
                        }
                        let child = Node {
                            c: c2,
                            p: p2,
                            hist: node.hist,
                            counter: node.counter + i64::from(upd),
                        };
                        let r = walk(m, f, tape, depth, &child, level + 1, history);
                        if public {
                            history.pop();
                        }
                        if r != VerifyOutcome::Accept {
                            return r;
                        }
                    }
                    VerifyOutcome::Accept
                }
            }
        } else {
            match &m.delta_e[node.c as usize] {
                ERow::Empty => VerifyOutcome::Reject,
                ERow::Single(c2) => {
                    let child = Node {
                        c: *c2,
                        p: node.p,
                        hist: node.hist,
                        counter: node.counter,
                    };
                    walk(m, f, tape, depth, &child, level + 1, history)
                }
                ERow::Choice(targets) => {
                    let common = &m.common_names[node.c as usize];
                    let Some(label) = f.get(common, history) else {
                        return VerifyOutcome::Undefined(InformationSet {
                            common: common.clone(),
                            history: history.clone(),
                        });
                    };
                    let Some(g) = m.labels[..m.gamma_count].iter().position(|l| l == label) else {
                        return VerifyOutcome::Undefined(InformationSet {
                            common: common.clone(),
                            history: history.clone(),
                        });
                    };
                    history.push(label.clone());
                    let child = Node {
                        c: targets[g],
                        p: node.p,
                        hist: node.hist,
                        counter: node.counter,
                    };
                    let r = walk(m, f, tape, depth, &child, level + 1, history);
                    history.pop();
                    r
                }
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Compiled machine

#[derive(Debug, Clone)]
enum ERow {
    Empty,
    Single(u32),
    /// One target per public label, in `gamma` order.
    Choice(Vec<u32>),
}

#[derive(Debug, Clone)]
enum URow {
    Single(u32, u32, i8),
    /// Sorted by label index; full `Γ ∪ Δ` coverage.
    Branch(Vec<(u32, u32, u32, i8)>),
}

struct Compiled {
    alphabet: crate::core::Alphabet,
    common_names: Vec<String>,
    n_private: usize,
    /// gamma ++ delta_priv
    labels: Vec<String>,
    gamma_count: usize,
    universal: Vec<bool>,
    initial: (u32, u32),
    accept_c: u32,
    reject_c: u32,
    delta_e: Vec<ERow>,
    /// Indexed `[(c * n_private + p) * n_syms + sym]`, zero/nonzero.
    delta_u: Vec<[Option<URow>; 2]>,
    n_syms: usize,
}

impl Compiled {
    fn new(m: &Pa1caDescription) -> Result<Self> {
        if let Some(first) = m.violations().first() {
            return Err(Error::Validation(first.to_string()));
        }
        let common_index: HashMap<&str, u32> = m
            .common_states
            .iter()
            .enumerate()
            .map(|(i, s)| (s.as_str(), i as u32))
            .collect();
        let private_index: HashMap<&str, u32> = m
            .private_states
            .iter()
            .enumerate()
            .map(|(i, s)| (s.as_str(), i as u32))
            .collect();
        let labels: Vec<String> = m.gamma.iter().chain(m.delta_priv.iter()).cloned().collect();
        let label_index: HashMap<&str, u32> = labels
            .iter()
            .enumerate()
            .map(|(i, s)| (s.as_str(), i as u32))
            .collect();
        let n_private = m.private_states.len();
        let n_syms = m.alphabet.len() + 1;

        let mut universal = vec![false; m.common_states.len() * n_private];
        for (c, p) in &m.universal {
            universal[(common_index[c.as_str()] as usize) * n_private
                + private_index[p.as_str()] as usize] = true;
        }

        let mut delta_e = Vec::with_capacity(m.common_states.len());
        for c in &m.common_states {
            let row = match m.delta_e.get(c) {
                None => ERow::Empty,
                Some(row) if row.is_empty() => ERow::Empty,
                Some(row) if row.len() == 1 => {
                    ERow::Single(common_index[row.values().next().unwrap().as_str()])
                }
                Some(row) => ERow::Choice(
                    m.gamma
                        .iter()
                        .map(|g| common_index[row[g].as_str()])
                        .collect(),
                ),
            };
            delta_e.push(row);
        }

        let mut delta_u: Vec<[Option<URow>; 2]> = std::iter::repeat_with(|| [None, None])
            .take(universal.len() * n_syms)
            .collect();
        for ((c, p), by_sym) in &m.delta_u {
            let ci = common_index[c.as_str()];
            let pi = private_index[p.as_str()];
            for (&sym, cases) in by_sym {
                let si = m
                    .alphabet
                    .index_with_end(sym)
                    .ok_or(Error::SymbolNotInAlphabet(sym))?;
                let slot = ((ci as usize) * n_private + pi as usize) * n_syms + si;
                for (zero, map) in [(true, &cases.zero), (false, &cases.nonzero)] {
                    if map.is_empty() {
                        continue;
                    }
                    let row = if map.len() == 1 {
                        let (c2, p2, upd) = map.values().next().unwrap();
                        URow::Single(common_index[c2.as_str()], private_index[p2.as_str()], *upd)
                    } else {
                        let mut entries: Vec<(u32, u32, u32, i8)> = map
                            .iter()
                            .map(|(l, (c2, p2, upd))| {
                                (
                                    label_index[l.as_str()],
                                    common_index[c2.as_str()],
                                    private_index[p2.as_str()],
                                    *upd,
                                )
                            })
                            .collect();
                        entries.sort_unstable();
                        URow::Branch(entries)
                    };
                    delta_u[slot][usize::from(!zero)] = Some(row);
                }
            }
        }

        Ok(Compiled {
            alphabet: m.alphabet.clone(),
            common_names: m.common_states.clone(),
            n_private,
            gamma_count: m.gamma.len(),
            labels,
            universal,
            initial: (
                common_index[m.initial.0.as_str()],
                private_index[m.initial.1.as_str()],
            ),
            accept_c: common_index[m.accept.as_str()],
            reject_c: common_index[m.reject.as_str()],
            delta_e,
            delta_u,
            n_syms,
        })
    }

    fn is_universal(&self, c: u32, p: u32) -> bool {
        self.universal[(c as usize) * self.n_private + p as usize]
    }

    fn sym_index(&self, sym: char) -> usize {
        self.alphabet
            .index_with_end(sym)
            .expect("word was alphabet-checked")
    }

    fn u_row(&self, c: u32, p: u32, sym: usize, zero: bool) -> Option<&URow> {
        self.delta_u[((c as usize) * self.n_private + p as usize) * self.n_syms + sym]
            [usize::from(!zero)]
        .as_ref()
    }
}

// ---------------------------------------------------------------------------
// History interning

/// Histories are interned as a trie; id 0 is the empty history.
struct HistInterner {
    parent: Vec<u32>,
    label: Vec<u32>,
    len: Vec<u32>,
    children: HashMap<(u32, u32), u32>,
}

impl HistInterner {
    fn new() -> Self {
        HistInterner {
            parent: vec![0],
            label: vec![0],
            len: vec![0],
            children: HashMap::new(),
        }
    }

    fn child(&mut self, h: u32, label: u32) -> u32 {
        if let Some(&c) = self.children.get(&(h, label)) {
            return c;
        }
        let id = self.parent.len() as u32;
        self.parent.push(h);
        self.label.push(label);
        self.len.push(self.len[h as usize] + 1);
        self.children.insert((h, label), id);
        id
    }

    fn materialize(&self, mut h: u32) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.len[h as usize] as usize);
        while h != 0 {
            out.push(self.label[h as usize]);
            h = self.parent[h as usize];
        }
        out.reverse();
        out
    }
}

// ---------------------------------------------------------------------------
// Search

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Node {
    c: u32,
    p: u32,
    hist: u32,
    counter: i64,
}

enum Absorb {
    True,
    False,
    Live,
}

struct Search<'a> {
    m: &'a Compiled,
    /// Symbol index read at each level.
    syms: Vec<usize>,
    depth: usize,
    hists: HistInterner,
    assigned: HashMap<(u32, u32), u32>,
}

impl<'a> Search<'a> {
    fn new(m: &'a Compiled, w: &Word) -> Result<Self> {
        w.check_alphabet(&m.alphabet)?;
        let tape = TapeView::new(w.clone());
        let depth = tape.depth();
        let syms = (0..depth)
            .map(|l| m.sym_index(tape.symbol_at_level(l)))
            .collect();
        Ok(Search {
            m,
            syms,
            depth,
            hists: HistInterner::new(),
            assigned: HashMap::new(),
        })
    }

    fn absorb(&self, c: u32) -> Absorb {
        if c == self.m.accept_c {
            Absorb::True
        } else if c == self.m.reject_c {
            Absorb::False
        } else {
            Absorb::Live
        }
    }

    fn run(&mut self) -> bool {
        let (c, p) = self.m.initial;
        match self.absorb(c) {
            Absorb::True => true,
            Absorb::False => false,
            Absorb::Live => {
                let root = Node {
                    c,
                    p,
                    hist: 0,
                    counter: 0,
                };
                self.solve_level(0, &[root])
            }
        }
    }

    /// Processes one synchronized frontier. On a false return, the
    /// assignment map is unchanged.
    fn solve_level(&mut self, level: usize, frontier: &[Node]) -> bool {
        let mut next = Vec::with_capacity(frontier.len() * 2);
        self.step(level, frontier, 0, &mut next)
    }

    fn step(&mut self, level: usize, frontier: &[Node], idx: usize, next: &mut Vec<Node>) -> bool {
        if idx == frontier.len() {
            if next.is_empty() {
                return true;
            }
            if level + 1 == self.depth {
                // Leaves in non-absorbing states are false.
                return false;
            }
            let moved = std::mem::take(next);
            let frontier2 = self.canonical(&moved);
            let ok = self.solve_level(level + 1, &frontier2);
            *next = moved;
            ok
        } else {
            let node = frontier[idx];
            let sym = self.syms[level];
            if self.m.is_universal(node.c, node.p) {
                match self.m.u_row(node.c, node.p, sym, node.counter == 0) {
                    // An empty universal successor set is vacuously true.
                    None => self.step(level, frontier, idx + 1, next),
                    Some(URow::Single(c2, p2, upd)) => {
                        let child = Node {
                            c: *c2,
                            p: *p2,
                            hist: node.hist,
                            counter: node.counter + i64::from(*upd),
                        };
                        self.push_and_step(level, frontier, idx, next, child)
                    }
                    Some(URow::Branch(entries)) => {
                        let entries = entries.clone();
                        let mark = next.len();
                        for (label, c2, p2, upd) in entries {
                            match self.absorb(c2) {
                                Absorb::True => continue,
                                Absorb::False => {
                                    next.truncate(mark);
                                    return false;
                                }
                                Absorb::Live => {}
                            }
                            let public = (label as usize) < self.m.gamma_count;
                            debug_assert!(
                                !public || p2 == node.p,
                                "public universal move changed the private component"
                            );
                            let hist = if public {
                                self.hists.child(node.hist, label)
                            } else {
                                node.hist
                            };
                            next.push(Node {
                                c: c2,
                                p: p2,
                                hist,
                                counter: node.counter + i64::from(upd),
                            });
                        }
                        let ok = self.step(level, frontier, idx + 1, next);
                        if !ok {
                            next.truncate(mark);
                        }
                        ok
                    }
                }
            } else {
                match &self.m.delta_e[node.c as usize] {
                    // An empty existential successor set is false.
                    ERow::Empty => false,
                    ERow::Single(c2) => {
                        let child = Node {
                            c: *c2,
                            p: node.p,
                            hist: node.hist,
                            counter: node.counter,
                        };
                        self.push_and_step(level, frontier, idx, next, child)
                    }
                    ERow::Choice(targets) => {
                        let targets = targets.clone();
                        let key = (node.c, node.hist);
                        if let Some(&g) = self.assigned.get(&key) {
                            let hist = self.hists.child(node.hist, g);
                            let child = Node {
                                c: targets[g as usize],
                                p: node.p,
                                hist,
                                counter: node.counter,
                            };
                            self.push_and_step(level, frontier, idx, next, child)
                        } else {
                            for g in 0..self.m.gamma_count as u32 {
                                self.assigned.insert(key, g);
                                let hist = self.hists.child(node.hist, g);
                                let child = Node {
                                    c: targets[g as usize],
                                    p: node.p,
                                    hist,
                                    counter: node.counter,
                                };
                                if self.push_and_step(level, frontier, idx, next, child) {
                                    return true;
                                }
                                self.assigned.remove(&key);
                            }
                            false
                        }
                    }
                }
            }
        }
    }

    fn push_and_step(
        &mut self,
        level: usize,
        frontier: &[Node],
        idx: usize,
        next: &mut Vec<Node>,
        child: Node,
    ) -> bool {
        match self.absorb(child.c) {
            Absorb::True => self.step(level, frontier, idx + 1, next),
            Absorb::False => false,
            Absorb::Live => {
                next.push(child);
                let ok = self.step(level, frontier, idx + 1, next);
                if !ok {
                    next.pop();
                }
                ok
            }
        }
    }

    /// Canonical frontier order: common state, history (shortlex),
    /// private state, counter; exact duplicates merge.
    fn canonical(&self, nodes: &[Node]) -> Vec<Node> {
        let mut hist_keys: HashMap<u32, Vec<u32>> = HashMap::new();
        for n in nodes {
            hist_keys
                .entry(n.hist)
                .or_insert_with(|| self.hists.materialize(n.hist));
        }
        let mut out = nodes.to_vec();
        out.sort_by(|a, b| {
            a.c.cmp(&b.c)
                .then_with(|| {
                    let (ha, hb) = (&hist_keys[&a.hist], &hist_keys[&b.hist]);
                    ha.len().cmp(&hb.len()).then_with(|| ha.cmp(hb))
                })
                .then_with(|| a.p.cmp(&b.p))
                .then_with(|| a.counter.cmp(&b.counter))
        });
        out.dedup();
        out
    }
}
