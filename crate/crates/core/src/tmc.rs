//! Deterministic Turing machines and their compilation to unary
//! alternating one-counter automata.
//!
//! The compiler performs a backwards simulation: it starts from the
//! halting configuration and verifies, window by window, that each
//! claimed cell content has a consistent predecessor, using the counter
//! to store the inspected head position. The compiled machine accepts
//! `u^{2n}` exactly when the source TM halts on the empty tape in
//! exactly `n` steps.

use crate::alt::{A1caDescription, CounterCases, CounterUpdate};
use crate::core::{Alphabet, Violation, END_MARKER};
use crate::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};

/// Head movement direction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Dir {
    L,
    R,
}

/// A deterministic single-tape TM over a semi-infinite tape whose cell 0
/// permanently holds the start symbol.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TmDescription {
    pub states: Vec<String>,
    pub initial: String,
    /// Unique halting state; it has no outgoing transitions.
    pub halting: String,
    pub tape_alphabet: Vec<char>,
    pub start_symbol: char,
    pub blank: char,
    /// `delta[state][read] = (next state, written symbol, direction)`.
    pub delta: BTreeMap<String, BTreeMap<char, (String, char, Dir)>>,
}

/// Contents of one tape cell: a plain symbol, or a state-symbol pair
/// marking the head position.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CellContents {
    Plain(char),
    Head(String, char),
}

impl CellContents {
    fn display(&self) -> String {
        match self {
            CellContents::Plain(c) => c.to_string(),
            CellContents::Head(q, c) => format!("{q},{c}"),
        }
    }
}

/// Result of a bounded TM simulation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TmRun {
    Halted { steps: usize, head: usize },
    StillRunning,
}

impl TmDescription {
    pub fn violations(&self) -> Vec<Violation> {
        let mut v = Vec::new();
        let declared = |s: &str| self.states.iter().any(|x| x == s);
        if !declared(&self.initial) {
            v.push(Violation::new(
                "tm-initial",
                format!("state {:?} not declared", self.initial),
            ));
        }
        if !declared(&self.halting) {
            v.push(Violation::new(
                "tm-halting",
                format!("state {:?} not declared", self.halting),
            ));
        }
        for c in [self.start_symbol, self.blank] {
            if !self.tape_alphabet.contains(&c) {
                v.push(Violation::new(
                    "tm-alphabet",
                    format!("symbol {c:?} not in tape alphabet"),
                ));
            }
        }
        if self.start_symbol == self.blank {
            v.push(Violation::new("tm-alphabet", "start symbol equals blank"));
        }
        for (q, by_sym) in &self.delta {
            if !declared(q) {
                v.push(Violation::new(
                    "tm-delta",
                    format!("state {q:?} not declared"),
                ));
            }
            if q == &self.halting && !by_sym.is_empty() {
                v.push(Violation::new(
                    "tm-halting",
                    "halting state has outgoing transitions",
                ));
            }
            for (&read, (q2, write, dir)) in by_sym {
                if !self.tape_alphabet.contains(&read) || !self.tape_alphabet.contains(write) {
                    v.push(Violation::new(
                        "tm-delta",
                        format!("transition ({q},{read}) uses undeclared symbol"),
                    ));
                }
                if !declared(q2) {
                    v.push(Violation::new(
                        "tm-delta",
                        format!("target state {q2:?} not declared"),
                    ));
                }
                if read == self.start_symbol && *write != self.start_symbol {
                    v.push(Violation::new(
                        "tm-start-symbol",
                        format!("transition ({q},{read}) overwrites the start symbol"),
                    ));
                }
                if read == self.start_symbol && *dir == Dir::L {
                    v.push(Violation::new(
                        "tm-start-symbol",
                        format!("transition ({q},{read}) moves left from the start symbol"),
                    ));
                }
            }
        }
        v
    }

    fn step_of(&self, state: &str, read: char) -> Option<&(String, char, Dir)> {
        self.delta.get(state).and_then(|m| m.get(&read))
    }
}

/// Simulates `m` from the empty-tape start configuration (initial state
/// scanning the start symbol at cell 0, blanks elsewhere). Reports the
/// exact halting step and final head position, or `StillRunning` after
/// `max_steps`.
pub fn tm_run(m: &TmDescription, max_steps: usize) -> Result<TmRun> {
    let mut tape = vec![m.start_symbol];
    let mut head = 0usize;
    let mut state = m.initial.clone();
    for step in 0..=max_steps {
        if state == m.halting {
            return Ok(TmRun::Halted { steps: step, head });
        }
        if step == max_steps {
            break;
        }
        let read = tape[head];
        let (q2, write, dir) = m
            .step_of(&state, read)
            .ok_or(Error::UndefinedTransition {
                state: state.clone(),
                symbol: read,
            })?
            .clone();
        tape[head] = write;
        match dir {
            Dir::R => {
                head += 1;
                if head == tape.len() {
                    tape.push(m.blank);
                }
            }
            Dir::L => {
                if head == 0 {
                    return Err(Error::Validation("head moved left of cell 0".into()));
                }
                head -= 1;
            }
        }
        state = q2;
    }
    Ok(TmRun::StillRunning)
}

/// Bounded semi-check of the compiler's preconditions. Simulates up to
/// `max_steps` and reports every observed violation: an early return of
/// the head to cell 0, halting away from cell 0, overwriting the start
/// symbol or moving left of it, or getting stuck in a non-halting state.
/// Absence of violations within the bound is not a proof.
pub fn tm_check_assumptions(m: &TmDescription, max_steps: usize) -> Vec<Violation> {
    let mut v: Vec<Violation> = Vec::new();
    let push = |v: &mut Vec<Violation>, rule: &'static str, msg: String| {
        if !v.iter().any(|x| x.rule == rule) {
            v.push(Violation::new(rule, msg));
        }
    };
    let mut tape = vec![m.start_symbol];
    let mut head = 0usize;
    let mut state = m.initial.clone();
    for step in 0..max_steps {
        if state == m.halting {
            if head != 0 {
                push(
                    &mut v,
                    "halt-away-from-start",
                    format!("halted at head position {head} (step {step})"),
                );
            }
            return v;
        }
        let read = tape[head];
        let Some((q2, write, dir)) = m.step_of(&state, read).cloned() else {
            push(
                &mut v,
                "stuck-outside-halting",
                format!("no transition from ({state},{read}) at step {step}"),
            );
            return v;
        };
        if read == m.start_symbol && write != m.start_symbol {
            push(
                &mut v,
                "overwrite-start",
                format!("step {step} overwrites the start symbol at cell {head}"),
            );
        }
        if read == m.start_symbol && dir == Dir::L {
            push(
                &mut v,
                "left-of-start",
                format!("step {step} moves left from the start symbol"),
            );
        }
        tape[head] = write;
        match dir {
            Dir::R => {
                head += 1;
                if head == tape.len() {
                    tape.push(m.blank);
                }
            }
            Dir::L => {
                if head == 0 {
                    push(
                        &mut v,
                        "left-of-start",
                        format!("step {step} moves left of cell 0"),
                    );
                    return v;
                }
                head -= 1;
            }
        }
        state = q2;
        // The final step must be the first time the head returns to 0.
        if head == 0 && state != m.halting {
            push(
                &mut v,
                "early-return",
                format!(
                    "head returned to cell 0 at step {} before halting",
                    step + 1
                ),
            );
        }
        if head == 0 && state == m.halting {
            return v;
        }
    }
    v
}

/// The predecessor-window function: contents of the middle cell one step
/// later, given the contents of cells `C-1`, `C`, `C+1` now. Undefined
/// (`None`) when the window is inconsistent: two head markers, or a head
/// whose state has no applicable transition.
pub fn next_contents(
    m: &TmDescription,
    left: &CellContents,
    mid: &CellContents,
    right: &CellContents,
) -> Option<CellContents> {
    next_window(m, Some(left), mid, right)
}

/// [`next_contents`] at the left tape edge: the middle cell is cell 0,
/// so there is no left neighbour and no head can arrive from the left.
pub fn next_contents_left_edge(
    m: &TmDescription,
    mid: &CellContents,
    right: &CellContents,
) -> Option<CellContents> {
    next_window(m, None, mid, right)
}

fn next_window(
    m: &TmDescription,
    left: Option<&CellContents>,
    mid: &CellContents,
    right: &CellContents,
) -> Option<CellContents> {
    let heads = [left, Some(mid), Some(right)]
        .iter()
        .filter(|c| matches!(c, Some(CellContents::Head(_, _))))
        .count();
    if heads > 1 {
        return None;
    }
    match (left, mid, right) {
        (_, CellContents::Head(q, x), _) => {
            let (_, write, dir) = m.step_of(q, *x)?;
            if *dir == Dir::L && left.is_none() {
                return None; // would move left of cell 0
            }
            Some(CellContents::Plain(*write))
        }
        (Some(CellContents::Head(q, x)), CellContents::Plain(s), _) => {
            let (q2, _, dir) = m.step_of(q, *x)?;
            match dir {
                Dir::R => Some(CellContents::Head(q2.clone(), *s)),
                Dir::L => Some(CellContents::Plain(*s)),
            }
        }
        (_, CellContents::Plain(s), CellContents::Head(q, x)) => {
            let (q2, _, dir) = m.step_of(q, *x)?;
            match dir {
                Dir::L => Some(CellContents::Head(q2.clone(), *s)),
                Dir::R => Some(CellContents::Plain(*s)),
            }
        }
        (_, CellContents::Plain(s), _) => Some(CellContents::Plain(*s)),
    }
}

/// Left component of a guessed predecessor window: either a real cell or
/// the tape edge (only valid when the inspected cell is cell 0).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
enum LeftCell {
    Edge,
    Cell(CellContents),
}

/// Compiles a TM into a unary A1CA that accepts `u^{2n}` iff the TM
/// halts on the empty tape in exactly `n` steps.
///
/// Each simulation stage consumes two input symbols: on the first the
/// machine existentially guesses a predecessor window whose successor
/// matches the stored contents, on the second it universally branches to
/// the three window cells with counter updates -1, 0, +1. At the end of
/// the input a claim is accepted iff it matches the initial empty-tape
/// configuration: `(q0, start)` under counter zero, blank otherwise.
pub fn compile_tm_to_a1ca(m: &TmDescription) -> Result<A1caDescription> {
    let v = m.violations();
    if let Some(first) = v.first() {
        return Err(Error::Validation(format!("malformed TM: {first}")));
    }

    // Contents universe: plain symbols plus state-symbol pairs.
    let mut contents: Vec<CellContents> = Vec::new();
    for &c in &m.tape_alphabet {
        contents.push(CellContents::Plain(c));
    }
    for q in &m.states {
        for &c in &m.tape_alphabet {
            contents.push(CellContents::Head(q.clone(), c));
        }
    }

    // Guessable windows, keyed by the successor contents they produce.
    let mut windows: BTreeMap<CellContents, Vec<(LeftCell, CellContents, CellContents)>> =
        BTreeMap::new();
    for mid in &contents {
        for right in &contents {
            if let Some(next) = next_contents_left_edge(m, mid, right) {
                windows
                    .entry(next)
                    .or_default()
                    .push((LeftCell::Edge, mid.clone(), right.clone()));
            }
            for left in &contents {
                if let Some(next) = next_contents(m, left, mid, right) {
                    windows.entry(next).or_default().push((
                        LeftCell::Cell(left.clone()),
                        mid.clone(),
                        right.clone(),
                    ));
                }
            }
        }
    }

    let chk = |s: &CellContents| format!("chk[{}]", s.display());
    let ld = |s: &CellContents| format!("ld[{}]", s.display());
    let win_name = |w: &(LeftCell, CellContents, CellContents)| {
        let l = match &w.0 {
            LeftCell::Edge => "-".to_string(),
            LeftCell::Cell(c) => c.display(),
        };
        format!("{l}|{}|{}", w.1.display(), w.2.display())
    };
    let gp = |w: &(LeftCell, CellContents, CellContents)| format!("gp[{}]", win_name(w));
    let br = |w: &(LeftCell, CellContents, CellContents)| format!("br[{}]", win_name(w));

    let mut states: Vec<String> = vec!["init0".into(), "init1".into()];
    let mut universal: BTreeSet<String> = BTreeSet::new();
    for s in &contents {
        states.push(chk(s));
        states.push(ld(s));
        universal.insert(ld(s));
    }
    for ws in windows.values() {
        for w in ws {
            states.push(gp(w));
            states.push(br(w));
            universal.insert(br(w));
        }
    }
    states.extend(["fin".to_string(), "acc".to_string(), "rej".to_string()]);
    universal.insert("rej".into());

    let u = 'u';
    let mut delta: BTreeMap<String, BTreeMap<char, CounterCases>> = BTreeMap::new();
    fn add(
        delta: &mut BTreeMap<String, BTreeMap<char, CounterCases>>,
        state: String,
        sym: char,
        cases: CounterCases,
    ) {
        // Missing entries already denote the empty successor set.
        if cases.zero.is_empty() && cases.nonzero.is_empty() {
            return;
        }
        delta.entry(state).or_default().insert(sym, cases);
    }
    let single = |t: String, upd: CounterUpdate| -> Vec<(String, CounterUpdate)> { vec![(t, upd)] };

    let start_claim = CellContents::Head(m.halting.clone(), m.start_symbol);
    add(
        &mut delta,
        "init0".into(),
        END_MARKER,
        CounterCases {
            zero: single("init1".into(), 0),
            nonzero: vec![],
        },
    );
    add(
        &mut delta,
        "init1".into(),
        END_MARKER,
        CounterCases {
            zero: single(chk(&start_claim), 0),
            nonzero: vec![],
        },
    );

    for (s, ws) in &windows {
        let mut zero = Vec::new();
        let mut nonzero = Vec::new();
        for w in ws {
            match w.0 {
                LeftCell::Edge => zero.push((gp(w), 0)),
                LeftCell::Cell(_) => nonzero.push((gp(w), 0)),
            }
        }
        add(&mut delta, chk(s), u, CounterCases { zero, nonzero });
    }
    for s in &contents {
        let zero = if *s == CellContents::Head(m.initial.clone(), m.start_symbol) {
            single("fin".into(), 0)
        } else {
            vec![]
        };
        let nonzero = if *s == CellContents::Plain(m.blank) {
            single("fin".into(), 0)
        } else {
            vec![]
        };
        add(
            &mut delta,
            chk(s),
            END_MARKER,
            CounterCases { zero, nonzero },
        );
        add(
            &mut delta,
            ld(s),
            u,
            CounterCases {
                zero: single(chk(s), 0),
                nonzero: single(chk(s), 0),
            },
        );
        add(
            &mut delta,
            ld(s),
            END_MARKER,
            CounterCases {
                zero: single("rej".into(), 0),
                nonzero: single("rej".into(), 0),
            },
        );
    }

    for ws in windows.values() {
        for w in ws {
            add(
                &mut delta,
                gp(w),
                u,
                CounterCases {
                    zero: single(br(w), 0),
                    nonzero: single(br(w), 0),
                },
            );
            let branch: Vec<(String, CounterUpdate)> = match &w.0 {
                LeftCell::Edge => vec![(ld(&w.1), 0), (ld(&w.2), 1)],
                LeftCell::Cell(l) => vec![(ld(l), -1), (ld(&w.1), 0), (ld(&w.2), 1)],
            };
            // A window with a real left cell is only meaningful away from
            // the tape edge, an edge window only at it; the mismatched
            // counter status rejects.
            let cases = match &w.0 {
                LeftCell::Edge => CounterCases {
                    zero: branch,
                    nonzero: single("rej".into(), 0),
                },
                LeftCell::Cell(_) => CounterCases {
                    zero: single("rej".into(), 0),
                    nonzero: branch,
                },
            };
            add(&mut delta, br(w), u, cases);
            add(
                &mut delta,
                br(w),
                END_MARKER,
                CounterCases {
                    zero: single("rej".into(), 0),
                    nonzero: single("rej".into(), 0),
                },
            );
        }
    }

    add(
        &mut delta,
        "fin".into(),
        END_MARKER,
        CounterCases {
            zero: single("acc".into(), 0),
            nonzero: single("acc".into(), 0),
        },
    );
    for sym in [u, END_MARKER] {
        add(
            &mut delta,
            "rej".into(),
            sym,
            CounterCases {
                zero: single("rej".into(), 0),
                nonzero: single("rej".into(), 0),
            },
        );
    }

    Ok(A1caDescription {
        alphabet: Alphabet::new(vec![u])?,
        states,
        universal,
        initial: "init0".into(),
        accepting: "acc".into(),
        delta,
    })
}

// ---------------------------------------------------------------------------
// JSON format

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TmFile {
    states: Vec<String>,
    initial: String,
    halting: String,
    tape_alphabet: Vec<String>,
    start_symbol: String,
    blank: String,
    delta: BTreeMap<String, BTreeMap<String, (String, String, Dir)>>,
}

fn one_char(s: &str, what: &str) -> Result<char> {
    let mut it = s.chars();
    match (it.next(), it.next()) {
        (Some(c), None) => Ok(c),
        _ => Err(Error::Schema(format!(
            "{what} must be a single character, got {s:?}"
        ))),
    }
}

/// Parses a TM description from its JSON schema.
pub fn parse_tm(text: &str) -> Result<TmDescription> {
    let file: TmFile = serde_json::from_str(text).map_err(|e| {
        if e.is_syntax() || e.is_eof() {
            Error::Syntax(e.to_string())
        } else {
            Error::Schema(e.to_string())
        }
    })?;
    let mut delta = BTreeMap::new();
    for (q, by_sym) in file.delta {
        let mut row = BTreeMap::new();
        for (sym, (q2, write, dir)) in by_sym {
            row.insert(
                one_char(&sym, "tape symbol")?,
                (q2, one_char(&write, "written symbol")?, dir),
            );
        }
        delta.insert(q, row);
    }
    let m = TmDescription {
        states: file.states,
        initial: file.initial,
        halting: file.halting,
        tape_alphabet: file
            .tape_alphabet
            .iter()
            .map(|s| one_char(s, "tape symbol"))
            .collect::<Result<_>>()?,
        start_symbol: one_char(&file.start_symbol, "start symbol")?,
        blank: one_char(&file.blank, "blank")?,
        delta,
    };
    if let Some(first) = m.violations().first() {
        return Err(Error::Validation(first.to_string()));
    }
    Ok(m)
}

/// Canonical JSON text for a TM description.
pub fn serialize_tm(m: &TmDescription) -> String {
    let file = TmFile {
        states: m.states.clone(),
        initial: m.initial.clone(),
        halting: m.halting.clone(),
        tape_alphabet: m.tape_alphabet.iter().map(|c| c.to_string()).collect(),
        start_symbol: m.start_symbol.to_string(),
        blank: m.blank.to_string(),
        delta: m
            .delta
            .iter()
            .map(|(q, row)| {
                (
                    q.clone(),
                    row.iter()
                        .map(|(sym, (q2, w, d))| (sym.to_string(), (q2.clone(), w.to_string(), *d)))
                        .collect(),
                )
            })
            .collect(),
    };
    let value = serde_json::to_value(&file).expect("TM serialization cannot fail");
    let mut text = serde_json::to_string_pretty(&value).expect("TM serialization cannot fail");
    text.push('\n');
    text
}

// ---------------------------------------------------------------------------
// Bundled sample machines

pub mod samples {
    use super::*;

    fn build(
        states: &[&str],
        tape: &[char],
        rules: &[(&str, char, &str, char, Dir)],
    ) -> TmDescription {
        let mut delta: BTreeMap<String, BTreeMap<char, (String, char, Dir)>> = BTreeMap::new();
        for (q, read, q2, write, dir) in rules {
            delta
                .entry(q.to_string())
                .or_default()
                .insert(*read, (q2.to_string(), *write, *dir));
        }
        TmDescription {
            states: states.iter().map(|s| s.to_string()).collect(),
            initial: "q0".into(),
            halting: "qf".into(),
            tape_alphabet: tape.to_vec(),
            start_symbol: '▷',
            blank: '_',
            delta,
        }
    }

    /// Writes two symbols, returns to cell 0, halts in 4 steps.
    pub fn tm_write2() -> TmDescription {
        build(
            &["q0", "q1", "q2", "q3", "qf"],
            &['▷', '_', 'a', 'b'],
            &[
                ("q0", '▷', "q1", '▷', Dir::R),
                ("q1", '_', "q2", 'a', Dir::R),
                ("q2", '_', "q3", 'b', Dir::L),
                ("q3", 'a', "qf", 'a', Dir::L),
            ],
        )
    }

    /// Walks three cells right, then returns; halts in 6 steps.
    pub fn tm_bounce() -> TmDescription {
        build(
            &["q0", "q1", "q2", "q3", "q4", "q5", "qf"],
            &['▷', '_', 'x', 'y'],
            &[
                ("q0", '▷', "q1", '▷', Dir::R),
                ("q1", '_', "q2", 'x', Dir::R),
                ("q2", '_', "q3", 'x', Dir::R),
                ("q3", '_', "q4", 'y', Dir::L),
                ("q4", 'x', "q5", 'x', Dir::L),
                ("q5", 'x', "qf", 'x', Dir::L),
            ],
        )
    }

    /// Runs right forever; never halts.
    pub fn tm_loop() -> TmDescription {
        build(
            &["q0", "q1", "q2", "qf"],
            &['▷', '_', 'x'],
            &[
                ("q0", '▷', "q1", '▷', Dir::R),
                ("q1", '_', "q2", 'x', Dir::R),
                ("q2", '_', "q1", 'x', Dir::R),
            ],
        )
    }

    /// Returns to cell 0 at step 2 and halts at step 5 away from cell 0;
    /// violates the compiler assumptions on purpose.
    pub fn tm_early_return() -> TmDescription {
        build(
            &["q0", "q1", "q2", "q3", "q4", "qf"],
            &['▷', '_', 'a'],
            &[
                ("q0", '▷', "q1", '▷', Dir::R),
                ("q1", '_', "q2", '_', Dir::L),
                ("q2", '▷', "q3", '▷', Dir::R),
                ("q3", '_', "q4", 'a', Dir::R),
                ("q4", '_', "qf", 'a', Dir::L),
            ],
        )
    }
}

#[cfg(test)]
mod tests {
    use super::samples::*;
    use super::*;

    #[test]
    fn run_reports_exact_step_counts() {
        // Re-simulation must agree with itself (oracle self-consistency).
        for (m, steps) in [(tm_write2(), 4), (tm_bounce(), 6)] {
            let r1 = tm_run(&m, 100).unwrap();
            let r2 = tm_run(&m, 100).unwrap();
            assert_eq!(r1, r2);
            assert_eq!(r1, TmRun::Halted { steps, head: 0 });
        }
    }

    #[test]
    fn looping_machine_still_running() {
        assert_eq!(tm_run(&tm_loop(), 100).unwrap(), TmRun::StillRunning);
    }

    #[test]
    fn compliant_samples_pass_the_checker() {
        assert!(tm_check_assumptions(&tm_write2(), 100).is_empty());
        assert!(tm_check_assumptions(&tm_bounce(), 100).is_empty());
        assert!(tm_check_assumptions(&tm_loop(), 100).is_empty());
    }

    #[test]
    fn early_return_is_reported() {
        let v = tm_check_assumptions(&tm_early_return(), 100);
        assert!(v.iter().any(|x| x.rule == "early-return"), "{v:?}");
        assert!(v.iter().any(|x| x.rule == "halt-away-from-start"), "{v:?}");
    }

    #[test]
    fn next_contents_window_cases() {
        let m = tm_write2();
        let p = |c| CellContents::Plain(c);
        // No head in the window: middle unchanged.
        assert_eq!(next_contents(&m, &p('a'), &p('b'), &p('_')), Some(p('b')));
        // Head in the middle, departing rightward: written symbol stays.
        let head = CellContents::Head("q1".into(), '_');
        assert_eq!(next_contents(&m, &p('▷'), &head, &p('_')), Some(p('a')));
        // Head arrives from the left.
        assert_eq!(
            next_contents(&m, &head, &p('_'), &p('_')),
            Some(CellContents::Head("q2".into(), '_'))
        );
        // Two heads are inconsistent.
        assert_eq!(next_contents(&m, &head, &head.clone(), &p('_')), None);
        // Halting state has no successor configuration.
        let halted = CellContents::Head("qf".into(), '▷');
        assert_eq!(next_contents_left_edge(&m, &halted, &p('_')), None);
    }

    #[test]
    fn window_consistency_against_direct_simulation() {
        // For every compliant sample and every step t, applying the
        // window function to configuration t must reproduce
        // configuration t+1 cell by cell.
        for m in [tm_write2(), tm_bounce(), tm_loop()] {
            let horizon = 12usize;
            let mut configs: Vec<Vec<CellContents>> = Vec::new();
            let width = horizon + 2;
            let mut tape = vec![m.start_symbol];
            tape.resize(width, m.blank);
            let mut head = 0usize;
            let mut state = m.initial.clone();
            for _ in 0..horizon {
                let mut cfg: Vec<CellContents> =
                    tape.iter().map(|&c| CellContents::Plain(c)).collect();
                cfg[head] = CellContents::Head(state.clone(), tape[head]);
                configs.push(cfg);
                if state == m.halting {
                    break;
                }
                let Some((q2, write, dir)) = m.step_of(&state, tape[head]).cloned() else {
                    break;
                };
                tape[head] = write;
                match dir {
                    Dir::R => head += 1,
                    Dir::L => head -= 1,
                }
                state = q2;
            }
            for t in 0..configs.len() - 1 {
                for c in 0..width - 1 {
                    let next = if c == 0 {
                        next_contents_left_edge(&m, &configs[t][0], &configs[t][1])
                    } else {
                        next_contents(&m, &configs[t][c - 1], &configs[t][c], &configs[t][c + 1])
                    };
                    assert_eq!(next.as_ref(), Some(&configs[t + 1][c]), "step {t} cell {c}");
                }
            }
        }
    }

    #[test]
    fn guess_tables_only_contain_defined_windows() {
        let m = tm_write2();
        let a = compile_tm_to_a1ca(&m).unwrap();
        assert!(a.violations().is_empty());
        assert!(a.states.iter().any(|s| s.starts_with("gp[")));
        // No zero-status transition anywhere applies a -1 update: the
        // left-neighbour branch is structurally absent at the tape edge.
        for by_sym in a.delta.values() {
            for cases in by_sym.values() {
                assert!(cases.zero.iter().all(|(_, upd)| *upd >= 0));
            }
        }
    }

    #[test]
    fn tm_json_round_trip() {
        let m = tm_write2();
        let text = serialize_tm(&m);
        let back = parse_tm(&text).unwrap();
        assert_eq!(m, back);
        assert_eq!(serialize_tm(&back), text);
    }
}
