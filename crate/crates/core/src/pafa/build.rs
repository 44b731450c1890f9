//! Built-in private alternating machines.
//!
//! All three follow the same pattern: the existential player's labeled
//! choices spell out a certificate string, and privately spawned
//! universal branches check different properties of that certificate in
//! parallel. Privacy forces a single certificate to satisfy every check,
//! because the spawned branches present the same public histories as the
//! main branch. Real universal branchings use private labels; the public
//! labels of such a branching are padded with accepting targets, and
//! undersized successor sets stay singletons, so padding never changes
//! the recognized language.

use super::{Pa1caDescription, PafaDescription, UCases, UTable, UTarget};
use crate::alt::CounterUpdate;
use crate::core::{Alphabet, Symbol, END_MARKER};
use std::collections::{BTreeMap, BTreeSet};

struct PafaBuilder {
    universal_commons: Vec<&'static str>,
    delta_e: BTreeMap<String, BTreeMap<String, String>>,
    delta_u: UTable,
}

impl PafaBuilder {
    fn new(universal_commons: &[&'static str]) -> Self {
        PafaBuilder {
            universal_commons: universal_commons.to_vec(),
            delta_e: BTreeMap::new(),
            delta_u: BTreeMap::new(),
        }
    }

    fn e_single(&mut self, c: &str, label: &str, target: &str) {
        self.delta_e
            .entry(c.into())
            .or_default()
            .insert(label.into(), target.into());
    }

    fn e_choice(&mut self, c: &str, choices: &[(&str, &str)]) {
        let row = self.delta_e.entry(c.into()).or_default();
        for (label, target) in choices {
            row.insert(label.to_string(), target.to_string());
        }
    }

    fn u_single(&mut self, c: &str, p: &str, sym: Symbol, label: &str, tc: &str, tp: &str) {
        self.delta_u
            .entry((c.into(), p.into()))
            .or_default()
            .entry(sym)
            .or_default()
            .insert(label.into(), (tc.into(), tp.into()));
    }

    fn u_branch(&mut self, c: &str, p: &str, sym: Symbol, entries: &[(&str, &str, &str)]) {
        let row = self
            .delta_u
            .entry((c.into(), p.into()))
            .or_default()
            .entry(sym)
            .or_default();
        for (label, tc, tp) in entries {
            row.insert(label.to_string(), (tc.to_string(), tp.to_string()));
        }
    }
}

/// Recognizes `{1^m | m = 2^n, n ≥ 0}`.
///
/// The certificate is a string over `{1, 1+}` marking, for each `i ≥ 1`,
/// position `⌊(2^i - 1)m / 2^i⌋` with `1+`. A checker branch is spawned
/// privately at the start and at every marker; it reads the certificate
/// at half speed, so it meets the next claimed marker exactly while the
/// last input symbol is scanned iff that marker halves the remaining
/// input. A short delay chain aligns each checker and doubles as the
/// acceptor for the length-one remainder left by the final marker.
pub fn build_upower() -> PafaDescription {
    let mut b = PafaBuilder::new(&[
        "bu", "u0", "u1", "u'", "c2", "c3", "c4", "c5", "d1", "d2", "d3", "d4",
    ]);
    let (g0, g1) = ("1", "1+");
    let (stay, spawn) = ("s", "k");
    let end = END_MARKER;

    b.e_single("b0", g0, "bu");
    b.e_choice("e", &[(g0, "u0"), (g1, "u1")]);
    b.e_single("e'", g0, "u'");

    // Initial split: producer in world A, first checker in world B.
    b.u_branch(
        "bu",
        "A",
        end,
        &[
            (stay, "e", "A"),
            (spawn, "c2", "B"),
            (g0, "qa", "A"),
            (g1, "qa", "A"),
        ],
    );
    b.u_single("bu", "A", '1', stay, "qr", "A");

    // Producer world A.
    b.u_single("u0", "A", '1', stay, "e", "A");
    b.u_single("u0", "A", end, stay, "qa", "A");
    b.u_branch(
        "u1",
        "A",
        '1',
        &[
            (stay, "e", "A"),
            (spawn, "d1", "B"),
            (g0, "qa", "A"),
            (g1, "qa", "A"),
        ],
    );
    b.u_single("u1", "A", end, stay, "qa", "A");

    // Start-checker entry delay: first decision at level 6.
    b.u_single("c2", "B", '1', stay, "c3", "B");
    b.u_single("c2", "B", end, stay, "qr", "B"); // empty input
    b.u_single("c3", "B", '1', stay, "c4", "B");
    b.u_single("c3", "B", end, stay, "qr", "B");
    b.u_single("c4", "B", '1', stay, "c5", "B");
    b.u_single("c4", "B", end, stay, "qa", "B"); // input of length one
    b.u_single("c5", "B", '1', stay, "e", "B");
    b.u_single("c5", "B", end, stay, "qr", "B");

    // Marker-checker entry delay: spawned at a marker, first decision
    // four levels later; reaching the end inside the delay means the
    // marker left a remainder of length one (accept) or zero (reject).
    b.u_single("d1", "B", '1', stay, "d2", "B");
    b.u_single("d1", "B", end, stay, "qr", "B");
    b.u_single("d2", "B", '1', stay, "d3", "B");
    b.u_single("d2", "B", end, stay, "qr", "B");
    b.u_single("d3", "B", '1', stay, "d4", "B");
    b.u_single("d3", "B", end, stay, "qa", "B");
    b.u_single("d4", "B", '1', stay, "e", "B");
    b.u_single("d4", "B", end, stay, "qr", "B");

    // Checker world B: half-speed certificate reading via e'/u'.
    b.u_single("u0", "B", '1', stay, "e'", "B");
    b.u_single("u0", "B", end, stay, "qr", "B");
    b.u_single("u'", "B", '1', stay, "e", "B");
    b.u_single("u'", "B", end, stay, "qr", "B");
    b.u_single("u1", "B", '1', stay, "qr", "B");
    b.u_single("u1", "B", end, stay, "qa", "B");

    // Unreachable private pairings reject.
    for c in ["u'", "c2", "c3", "c4", "c5", "d1", "d2", "d3", "d4"] {
        for sym in ['1', end] {
            b.u_single(c, "A", sym, stay, "qr", "A");
        }
    }
    for sym in ['1', end] {
        b.u_single("bu", "B", sym, stay, "qr", "B");
    }

    let commons = [
        "b0", "bu", "e", "u0", "u1", "e'", "u'", "c2", "c3", "c4", "c5", "d1", "d2", "d3", "d4",
        "qa", "qr",
    ];
    let privates = ["A", "B"];
    let universal = b
        .universal_commons
        .iter()
        .flat_map(|c| privates.iter().map(move |p| (c.to_string(), p.to_string())))
        .collect::<BTreeSet<_>>();
    PafaDescription {
        alphabet: Alphabet::new(vec!['1']).unwrap(),
        common_states: commons.iter().map(|s| s.to_string()).collect(),
        private_states: privates.iter().map(|s| s.to_string()).collect(),
        universal,
        gamma: vec![g0.into(), g1.into()],
        delta_priv: vec![stay.into(), spawn.into()],
        initial: ("b0".into(), "A".into()),
        accept: "qa".into(),
        reject: "qr".into(),
        delta_e: b.delta_e,
        delta_u: b.delta_u,
    }
}

/// Recognizes `{wcw | w ∈ {0,1}*}`.
///
/// A private branching on the left end-marker creates two comparison
/// branches: one matches the certificate against the input up to the
/// first `c`, the other skips to just past the first `c` and matches the
/// certificate against the rest, expecting the certificate's `c` at the
/// end-marker. Both consult the same information sets, so one
/// certificate must equal both halves.
pub fn build_twin() -> PafaDescription {
    let mut b = PafaBuilder::new(&["ui", "u0", "u1", "uc"]);
    let end = END_MARKER;
    let (w1, w2) = ("w1", "w2");

    b.e_single("ei", "0", "ui");
    b.e_choice("e", &[("0", "u0"), ("1", "u1"), ("c", "uc")]);

    b.u_branch(
        "ui",
        "p",
        end,
        &[
            (w1, "e", "a1"),
            (w2, "ui", "b1"),
            ("0", "qa", "p"),
            ("1", "qa", "p"),
            ("c", "qa", "p"),
        ],
    );
    for sym in ['0', '1', 'c'] {
        b.u_single("ui", "p", sym, w1, "qr", "p");
    }

    // Skip to the symbol after the first c.
    for sym in ['0', '1', 'c'] {
        b.u_single("ui", "b1", sym, w1, "ui", "b2");
    }
    b.u_single("ui", "b1", end, w1, "qr", "b1");
    for sym in ['0', '1'] {
        b.u_single("ui", "b2", sym, w1, "ui", "b1");
    }
    b.u_single("ui", "b2", 'c', w1, "e", "a2");
    b.u_single("ui", "b2", end, w1, "qr", "b2");

    // World a1: compare the certificate with the input before the first
    // c; the certificate's c must meet the input's c.
    for (u, good) in [("u0", '0'), ("u1", '1')] {
        for sym in ['0', '1', 'c'] {
            let target = if sym == good { "e" } else { "qr" };
            b.u_single(u, "a1", sym, w1, target, "a1");
        }
        b.u_single(u, "a1", end, w1, "qr", "a1");
    }
    for sym in ['0', '1'] {
        b.u_single("uc", "a1", sym, w1, "qr", "a1");
    }
    b.u_single("uc", "a1", 'c', w1, "qa", "a1");
    b.u_single("uc", "a1", end, w1, "qr", "a1");

    // World a2: compare with the input after the first c; the
    // certificate's c must meet the end-marker.
    for (u, good) in [("u0", '0'), ("u1", '1')] {
        for sym in ['0', '1', 'c'] {
            let target = if sym == good { "e" } else { "qr" };
            b.u_single(u, "a2", sym, w1, target, "a2");
        }
        b.u_single(u, "a2", end, w1, "qr", "a2");
    }
    for sym in ['0', '1', 'c'] {
        b.u_single("uc", "a2", sym, w1, "qr", "a2");
    }
    b.u_single("uc", "a2", end, w1, "qa", "a2");

    // Unreachable pairings reject.
    for p in ["b1", "b2"] {
        for u in ["u0", "u1", "uc"] {
            for sym in ['0', '1', 'c', end] {
                b.u_single(u, p, sym, w1, "qr", p);
            }
        }
    }
    for sym in ['0', '1', 'c', end] {
        for p in ["a1", "a2"] {
            b.u_single("ui", p, sym, w1, "qr", p);
        }
    }

    let commons = ["ei", "ui", "e", "u0", "u1", "uc", "qa", "qr"];
    let privates = ["p", "a1", "a2", "b1", "b2"];
    let universal = b
        .universal_commons
        .iter()
        .flat_map(|c| privates.iter().map(move |p| (c.to_string(), p.to_string())))
        .collect::<BTreeSet<_>>();
    PafaDescription {
        alphabet: Alphabet::new(vec!['0', '1', 'c']).unwrap(),
        common_states: commons.iter().map(|s| s.to_string()).collect(),
        private_states: privates.iter().map(|s| s.to_string()).collect(),
        universal,
        gamma: vec!["0".into(), "1".into(), "c".into()],
        delta_priv: vec![w1.into(), w2.into()],
        initial: ("ei".into(), "p".into()),
        accept: "qa".into(),
        reject: "qr".into(),
        delta_e: b.delta_e,
        delta_u: b.delta_u,
    }
}

struct Pa1caBuilder {
    delta_e: BTreeMap<String, BTreeMap<String, String>>,
    delta_u: BTreeMap<(String, String), BTreeMap<Symbol, UCases>>,
}

impl Pa1caBuilder {
    fn new() -> Self {
        Pa1caBuilder {
            delta_e: BTreeMap::new(),
            delta_u: BTreeMap::new(),
        }
    }

    fn e_choice(&mut self, c: &str, choices: &[(&str, &str)]) {
        let row = self.delta_e.entry(c.into()).or_default();
        for (label, target) in choices {
            row.insert(label.to_string(), target.to_string());
        }
    }

    fn entry(&mut self, c: &str, p: &str, sym: Symbol) -> &mut UCases {
        self.delta_u
            .entry((c.into(), p.into()))
            .or_default()
            .entry(sym)
            .or_default()
    }

    /// Same singleton under both counter statuses.
    fn u_single(&mut self, c: &str, p: &str, sym: Symbol, tc: &str, tp: &str, upd: CounterUpdate) {
        let t: UTarget = (tc.into(), tp.into(), upd);
        let cases = self.entry(c, p, sym);
        cases.zero.insert("ta".into(), t.clone());
        cases.nonzero.insert("ta".into(), t);
    }

    /// Status-dependent singletons (the only places the counter is read).
    fn u_single_by_status(
        &mut self,
        c: &str,
        p: &str,
        sym: Symbol,
        zero: (&str, &str),
        nonzero: (&str, &str),
    ) {
        let cases = self.entry(c, p, sym);
        cases
            .zero
            .insert("ta".into(), (zero.0.into(), zero.1.into(), 0));
        cases
            .nonzero
            .insert("ta".into(), (nonzero.0.into(), nonzero.1.into(), 0));
    }

    /// Same branch under both statuses.
    fn u_branch(
        &mut self,
        c: &str,
        p: &str,
        sym: Symbol,
        entries: &[(&str, &str, &str, CounterUpdate)],
    ) {
        let map: BTreeMap<String, UTarget> = entries
            .iter()
            .map(|(l, tc, tp, upd)| (l.to_string(), (tc.to_string(), tp.to_string(), *upd)))
            .collect();
        let cases = self.entry(c, p, sym);
        cases.zero = map.clone();
        cases.nonzero = map;
    }
}

/// Recognizes `{1^m | m = n², n ≥ 0}` with a blind counter.
///
/// The certificate is a string over `{1, #}` that must consist of `x`
/// segments `1^{x-1}#`. A privately spawned branch checks, for any pair
/// of segments, that their lengths agree (count up through the first,
/// down through the second); another counts `+1` per symbol of the first
/// segment except its final `#` and `-1` per later segment. The counter
/// status is consulted only on the end-marker transitions.
pub fn build_usquare_pa1ca() -> Pa1caDescription {
    let mut b = Pa1caBuilder::new();
    let end = END_MARKER;
    let (g1, gh) = ("1", "#");

    b.e_choice("b0", &[(g1, "bu")]);
    b.e_choice("e", &[(g1, "u1"), (gh, "uh")]);

    // Spawn segment-count control plus the pair-selection worlds.
    b.u_branch(
        "bu",
        "P0",
        end,
        &[
            ("ta", "e", "CNT1", 0),
            ("tb", "e", "UP0", 0),
            ("tc", "e", "SEEK", 0),
            (g1, "qa", "P0", 0),
            (gh, "qa", "P0", 0),
        ],
    );
    b.u_single("bu", "P0", '1', "qr", "P0", 0);

    // Segment-count control: +1 per 1 of the first segment, -1 per
    // later segment.
    b.u_single("u1", "CNT1", '1', "e", "CNT1", 1);
    b.u_single("uh", "CNT1", '1', "e", "CNT2", 0);
    b.u_single("u1", "CNT2", '1', "e", "CNT2", 0);
    b.u_single("uh", "CNT2", '1', "e", "CNT2", -1);
    for u in ["u1", "uh"] {
        b.u_single_by_status(u, "CNT1", end, ("qa", "CNT1"), ("qr", "CNT1"));
        b.u_single_by_status(u, "CNT2", end, ("qa", "CNT2"), ("qr", "CNT2"));
    }

    // Pair selection: seek a first segment, count up through it, wait,
    // count down through a second, then freeze.
    b.u_single("u1", "SEEK", '1', "e", "SEEK", 0);
    b.u_branch(
        "uh",
        "SEEK",
        '1',
        &[
            ("ta", "e", "UP0", 0),
            ("tb", "e", "SEEK", 0),
            ("tc", "e", "SEEK", 0),
            (g1, "qa", "SEEK", 0),
            (gh, "qa", "SEEK", 0),
        ],
    );
    b.u_single("u1", "UP0", '1', "e", "UP", 1);
    for up in ["UP0", "UP"] {
        b.u_branch(
            "uh",
            up,
            '1',
            &[
                ("ta", "e", "DN0", 0),
                ("tb", "e", "WAIT", 0),
                ("tc", "e", "WAIT", 0),
                (g1, "qa", up, 0),
                (gh, "qa", up, 0),
            ],
        );
    }
    b.u_single("u1", "UP", '1', "e", "UP", 1);
    b.u_single("u1", "WAIT", '1', "e", "WAIT", 0);
    b.u_branch(
        "uh",
        "WAIT",
        '1',
        &[
            ("ta", "e", "DN0", 0),
            ("tb", "e", "WAIT", 0),
            ("tc", "e", "WAIT", 0),
            (g1, "qa", "WAIT", 0),
            (gh, "qa", "WAIT", 0),
        ],
    );
    b.u_single("u1", "DN0", '1', "e", "DN", -1);
    b.u_single("uh", "DN0", '1', "e", "DONE", 0);
    b.u_single("u1", "DN", '1', "e", "DN", -1);
    b.u_single("uh", "DN", '1', "e", "DONE", 0);
    b.u_single("u1", "DONE", '1', "e", "DONE", 0);
    b.u_single("uh", "DONE", '1', "e", "DONE", 0);

    for u in ["u1", "uh"] {
        // Overrun pair selections are vacuous; segments cut off by the
        // end of the certificate reject; a completed pair accepts iff
        // the counter returned to zero.
        for vac in ["SEEK", "UP0", "WAIT", "DN0"] {
            b.u_single(u, vac, end, "qa", vac, 0);
        }
        for cut in ["UP", "DN"] {
            b.u_single(u, cut, end, "qr", cut, 0);
        }
        b.u_single_by_status(u, "DONE", end, ("qa", "DONE"), ("qr", "DONE"));
        b.u_single(u, "P0", '1', "qr", "P0", 0);
        b.u_single(u, "P0", end, "qr", "P0", 0);
    }
    for sym in ['1', end] {
        for p in [
            "CNT1", "CNT2", "SEEK", "UP0", "UP", "WAIT", "DN0", "DN", "DONE",
        ] {
            b.u_single("bu", p, sym, "qr", p, 0);
        }
    }

    let commons = ["b0", "bu", "e", "u1", "uh", "qa", "qr"];
    let privates = [
        "P0", "CNT1", "CNT2", "SEEK", "UP0", "UP", "WAIT", "DN0", "DN", "DONE",
    ];
    let universal_commons = ["bu", "u1", "uh"];
    let universal = universal_commons
        .iter()
        .flat_map(|c| privates.iter().map(move |p| (c.to_string(), p.to_string())))
        .collect::<BTreeSet<_>>();
    Pa1caDescription {
        alphabet: Alphabet::new(vec!['1']).unwrap(),
        common_states: commons.iter().map(|s| s.to_string()).collect(),
        private_states: privates.iter().map(|s| s.to_string()).collect(),
        universal,
        gamma: vec![g1.into(), gh.into()],
        delta_priv: vec!["ta".into(), "tb".into(), "tc".into()],
        initial: ("b0".into(), "P0".into()),
        accept: "qa".into(),
        reject: "qr".into(),
        delta_e: b.delta_e,
        delta_u: b.delta_u,
    }
}
