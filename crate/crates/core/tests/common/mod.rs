//! Shared oracles for the integration and acceptance suites. These are
//! deliberately written from scratch in styles different from the
//! implementations they check.

// Each test binary uses its own subset of these helpers.
#![allow(dead_code)]

use raa_core::alt::AfaDescription;
use raa_core::core::{TapeView, Word};
use raa_core::pafa::PafaDescription;
use std::collections::{BTreeMap, HashMap};

/// Bottom-up AFA evaluation: truth values per state, level by level from
/// the leaves; no recursion, no memo sharing with the implementation.
pub fn afa_oracle(m: &AfaDescription, w: &Word) -> bool {
    let tape = TapeView::new(w.clone());
    let depth = tape.depth();
    let mut value: HashMap<&str, bool> = m
        .states
        .iter()
        .map(|s| (s.as_str(), *s == m.accepting))
        .collect();
    for level in (0..depth).rev() {
        let sym = tape.symbol_at_level(level);
        let mut next: HashMap<&str, bool> = HashMap::new();
        for s in &m.states {
            let succs = m
                .delta
                .get(s)
                .and_then(|row| row.get(&sym))
                .map(|v| v.as_slice())
                .unwrap_or(&[]);
            let v = if m.universal.contains(s) {
                succs.iter().all(|t| value[t.as_str()])
            } else {
                succs.iter().any(|t| value[t.as_str()])
            };
            next.insert(s, v);
        }
        value = next;
    }
    value[m.initial.as_str()]
}

pub enum EvalOutcome {
    Accept,
    Reject,
    Missing(String, Vec<String>),
}

/// Evaluates the subtree induced by a partial strategy with a plain
/// recursive walk; reports the first reached unassigned information set.
#[allow(clippy::too_many_arguments)]
pub fn eval_under(
    m: &PafaDescription,
    w: &Word,
    f: &BTreeMap<(String, Vec<String>), String>,
) -> EvalOutcome {
    let tape = TapeView::new(w.clone());
    let depth = tape.depth();
    fn go(
        m: &PafaDescription,
        tape: &TapeView,
        depth: usize,
        f: &BTreeMap<(String, Vec<String>), String>,
        c: &str,
        p: &str,
        level: usize,
        hist: &mut Vec<String>,
    ) -> EvalOutcome {
        if c == m.accept {
            return EvalOutcome::Accept;
        }
        if c == m.reject || level == depth {
            return EvalOutcome::Reject;
        }
        let universal = m.universal.contains(&(c.to_string(), p.to_string()));
        if universal {
            let sym = tape.symbol_at_level(level);
            let Some(row) = m
                .delta_u
                .get(&(c.to_string(), p.to_string()))
                .and_then(|r| r.get(&sym))
            else {
                return EvalOutcome::Accept; // vacuous
            };
            if row.is_empty() {
                return EvalOutcome::Accept;
            }
            let is_move = row.len() > 1;
            let mut missing = None;
            for (label, (c2, p2)) in row {
                let public = is_move && m.gamma.contains(label);
                if public {
                    hist.push(label.clone());
                }
                let r = go(m, tape, depth, f, c2, p2, level + 1, hist);
                if public {
                    hist.pop();
                }
                match r {
                    EvalOutcome::Reject => return EvalOutcome::Reject,
                    EvalOutcome::Missing(a, b) if missing.is_none() => missing = Some((a, b)),
                    _ => {}
                }
            }
            match missing {
                Some((a, b)) => EvalOutcome::Missing(a, b),
                None => EvalOutcome::Accept,
            }
        } else {
            let Some(row) = m.delta_e.get(c) else {
                return EvalOutcome::Reject;
            };
            if row.is_empty() {
                return EvalOutcome::Reject;
            }
            if row.len() == 1 {
                let c2 = row.values().next().unwrap();
                return go(m, tape, depth, f, c2, p, level + 1, hist);
            }
            let key = (c.to_string(), hist.clone());
            let Some(label) = f.get(&key) else {
                return EvalOutcome::Missing(key.0, key.1);
            };
            let c2 = &row[label];
            hist.push(label.clone());
            let r = go(m, tape, depth, f, c2, p, level + 1, hist);
            hist.pop();
            r
        }
    }
    let (c0, p0) = m.initial.clone();
    go(m, &tape, depth, f, &c0, &p0, 0, &mut Vec::new())
}

/// Total-strategy enumeration: a worklist of partial strategies, each
/// grown on its first missing information set until one accepts.
pub fn oracle_pafa_accepts(m: &PafaDescription, w: &Word) -> bool {
    let mut queue: Vec<BTreeMap<(String, Vec<String>), String>> = vec![BTreeMap::new()];
    while let Some(f) = queue.pop() {
        match eval_under(m, w, &f) {
            EvalOutcome::Accept => return true,
            EvalOutcome::Reject => {}
            EvalOutcome::Missing(c, hist) => {
                for label in &m.gamma {
                    let mut g = f.clone();
                    g.insert((c.clone(), hist.clone()), label.clone());
                    queue.push(g);
                }
            }
        }
    }
    false
}
