//! Structural and runtime properties of compiled machines beyond the
//! acceptance sweeps.

use raa_core::alt::{a1ca_accepts, A1caDescription};
use raa_core::core::{TapeView, Verdict, Word};
use raa_core::gen::{random_tm, Rng};
use raa_core::tmc::{
    compile_tm_to_a1ca, next_contents, next_contents_left_edge, samples, CellContents, Dir,
};
use std::collections::HashSet;

/// Every configuration reachable in the full computation tree of a
/// compiled machine keeps its counter nonnegative: branches that would
/// inspect the cell left of the tape edge are structurally absent.
fn assert_counter_nonnegative(m: &A1caDescription, w: &Word) {
    let tape = TapeView::new(w.clone());
    let depth = tape.depth();
    let mut seen: HashSet<(String, usize, i64)> = HashSet::new();
    let mut stack = vec![(m.initial.clone(), 0usize, 0i64)];
    while let Some((state, level, counter)) = stack.pop() {
        assert!(counter >= 0, "negative counter at ({state}, level {level})");
        if level == depth || !seen.insert((state.clone(), level, counter)) {
            continue;
        }
        let sym = tape.symbol_at_level(level);
        if let Some(cases) = m.delta.get(&state).and_then(|row| row.get(&sym)) {
            let succs = if counter == 0 {
                &cases.zero
            } else {
                &cases.nonzero
            };
            for (t, upd) in succs {
                stack.push((t.clone(), level + 1, counter + i64::from(*upd)));
            }
        }
    }
}

#[test]
fn compiled_machines_never_go_negative() {
    for tm in [
        samples::tm_write2(),
        samples::tm_bounce(),
        samples::tm_loop(),
    ] {
        let a = compile_tm_to_a1ca(&tm).unwrap();
        for k in [0usize, 5, 8, 12] {
            assert_counter_nonnegative(&a, &Word::repeated('u', k));
        }
    }
}

#[test]
fn odd_length_inputs_are_rejected_structurally() {
    let a = compile_tm_to_a1ca(&samples::tm_write2()).unwrap();
    for k in (1..=15).step_by(2) {
        assert_eq!(
            a1ca_accepts(&a, &Word::repeated('u', k)).unwrap(),
            Verdict::Reject,
            "u^{k}"
        );
    }
}

#[test]
fn malformed_tm_is_rejected_by_the_compiler() {
    let mut tm = samples::tm_write2();
    // Give the halting state an outgoing transition.
    tm.delta
        .entry("qf".into())
        .or_default()
        .insert('_', ("q0".into(), '_', Dir::R));
    assert!(compile_tm_to_a1ca(&tm).is_err());
}

#[test]
fn window_consistency_on_random_machines() {
    // For any deterministic TM whose head stays right of cell 0 within
    // the horizon, the window function reproduces the next
    // configuration cell by cell.
    let mut rng = Rng::new(0x7f4a11);
    let mut usable = 0;
    let mut attempts = 0;
    while usable < 40 && attempts < 2000 {
        attempts += 1;
        let m = random_tm(&mut rng);
        let horizon = 10usize;
        let width = horizon + 2;
        let mut tape = vec![m.start_symbol];
        tape.resize(width, m.blank);
        let mut head = 0usize;
        let mut state = m.initial.clone();
        let mut configs: Vec<Vec<CellContents>> = Vec::new();
        'sim: for _ in 0..horizon {
            let mut cfg: Vec<CellContents> = tape.iter().map(|&c| CellContents::Plain(c)).collect();
            cfg[head] = CellContents::Head(state.clone(), tape[head]);
            configs.push(cfg);
            if state == m.halting {
                break;
            }
            let Some((q2, write, dir)) = m
                .delta
                .get(&state)
                .and_then(|r| r.get(&tape[head]))
                .cloned()
            else {
                break;
            };
            tape[head] = write;
            match dir {
                Dir::R => head += 1,
                Dir::L => {
                    if head == 0 {
                        configs.clear();
                        break 'sim;
                    }
                    head -= 1;
                }
            }
            state = q2;
        }
        if configs.len() < 3 {
            continue;
        }
        usable += 1;
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
    assert!(
        usable >= 40,
        "only {usable} random machines ran long enough"
    );
}
