//! File-format tests: canonical serialization, round-trips over random
//! machines of every kind, and the error taxonomy.

use proptest::prelude::*;
use raa_core::core::{parse_machine, serialize_machine, validate, MachineDescription};
use raa_core::gen::{random_machine, Rng};
use raa_core::pafa::build_upower;
use raa_core::qfa::build_usquare_aqfa;
use raa_core::tmc::samples;
use raa_core::{pafa, tmc, Error};

fn builtins() -> Vec<MachineDescription> {
    vec![
        MachineDescription::Pafa(build_upower()),
        MachineDescription::Pafa(pafa::build_twin()),
        MachineDescription::Pa1ca(pafa::build_usquare_pa1ca()),
        MachineDescription::Aqfa(build_usquare_aqfa()),
        MachineDescription::A1ca(tmc::compile_tm_to_a1ca(&samples::tm_write2()).unwrap()),
    ]
}

#[test]
fn builtins_round_trip_and_serialize_deterministically() {
    for m in builtins() {
        let text = serialize_machine(&m);
        assert_eq!(
            text,
            serialize_machine(&m),
            "serialization must be deterministic"
        );
        let back = parse_machine(&text).unwrap();
        assert_eq!(m, back, "round-trip changed the {} machine", m.kind());
        assert_eq!(
            serialize_machine(&back),
            text,
            "canonical text not a fixed point"
        );
        assert!(validate(&m).is_empty());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn random_machines_round_trip(seed in any::<u64>()) {
        let mut rng = Rng::new(seed);
        let m = random_machine(&mut rng);
        prop_assert!(validate(&m).is_empty());
        let text = serialize_machine(&m);
        let back = parse_machine(&text).unwrap();
        prop_assert_eq!(&m, &back);
        prop_assert_eq!(serialize_machine(&back), text);
    }

    #[test]
    fn enumerate_words_is_strictly_shortlex(len in 0usize..5, nsyms in 1usize..4) {
        use raa_core::core::{enumerate_words, Alphabet};
        let symbols: Vec<char> = ('a'..).take(nsyms).collect();
        let alphabet = Alphabet::new(symbols.clone()).unwrap();
        let words = enumerate_words(&alphabet, len);
        let expected: usize = (0..=len).map(|i| nsyms.pow(i as u32)).sum();
        prop_assert_eq!(words.len(), expected);
        let key = |w: &raa_core::Word| {
            (w.len(), w.symbols().iter().map(|s| alphabet.index_of(*s).unwrap()).collect::<Vec<_>>())
        };
        for pair in words.windows(2) {
            prop_assert!(key(&pair[0]) < key(&pair[1]), "not strictly shortlex");
        }
    }
}

#[test]
fn rationals_are_canonicalized_on_parse() {
    // Amplitude 2/4 parses as 1/2 and re-serializes canonically.
    let text = r#"{
        "format": 1,
        "kind": "qfa",
        "alphabet": ["a"],
        "machine": {
            "basis": ["q0"],
            "initial": "q0",
            "accept": ["q0"],
            "ops": {
                "a": [[["2/4", "0"]], [["0", "-2/4"]], [["1/2", "0"]], [["0/7", "1/2"]]],
                "@end": [[["1", "0/1"]]]
            }
        }
    }"#;
    let m = parse_machine(text).unwrap();
    let out = serialize_machine(&m);
    assert!(out.contains("\"1/2\""), "{out}");
    assert!(!out.contains("2/4"), "{out}");
    assert!(out.contains("\"0/1\""));
    // The canonical amplitude pair for 3/5 + 0i.
    let MachineDescription::Qfa(q) = &m else {
        panic!()
    };
    assert!(q.ops[&'a'].is_complete());
}

#[test]
fn amplitude_pairs_render_canonically() {
    use raa_core::core::GaussianRational;
    let g = GaussianRational::from_rational(raa_core::core::rat(3, 5));
    assert_eq!(g.format_pair(), ("3/5".to_string(), "0/1".to_string()));
}

#[test]
fn syntax_schema_and_validation_errors_are_distinguished() {
    assert!(matches!(parse_machine("{ not json"), Err(Error::Syntax(_))));
    assert!(matches!(
        parse_machine(r#"{"format":1,"kind":"afa","alphabet":["a"],"machine":{"bogus":1}}"#),
        Err(Error::Schema(_))
    ));
    assert!(matches!(
        parse_machine(r#"{"format":2,"kind":"afa","alphabet":["a"],"machine":{}}"#),
        Err(Error::Schema(_))
    ));
    assert!(matches!(
        parse_machine(r#"{"format":1,"kind":"dfa","alphabet":["a"],"machine":{}}"#),
        Err(Error::Schema(_))
    ));
    // Structurally fine, semantically invalid: initial state undeclared.
    let text = r#"{
        "format": 1, "kind": "afa", "alphabet": ["a"],
        "machine": {"states": ["s"], "initial": "t", "accepting": "s"}
    }"#;
    match parse_machine(text) {
        Err(Error::Validation(msg)) => assert!(msg.contains("initial"), "{msg}"),
        other => panic!("expected a validation error, got {other:?}"),
    }
}

#[test]
fn undersized_existential_set_cites_the_arity_rule() {
    // |Γ| = 3 but a two-successor existential transition.
    let text = r#"{
        "format": 1, "kind": "pafa", "alphabet": ["a"],
        "machine": {
            "common_states": ["s", "qa", "qr"],
            "private_states": ["p0", "p1"],
            "universal": [],
            "gamma": ["g0", "g1", "g2"],
            "delta_priv": ["d0", "d1"],
            "initial": ["s", "p0"],
            "accept": "qa",
            "reject": "qr",
            "deltaE": {"s": {"g0": "qa", "g1": "qr"}}
        }
    }"#;
    match parse_machine(text) {
        Err(Error::Validation(msg)) => {
            assert!(msg.contains("existential-arity"), "{msg}");
            assert!(msg.contains("|Γ| = 3") || msg.contains("size"), "{msg}");
        }
        other => panic!("expected arity violation, got {other:?}"),
    }
}

#[test]
fn missing_format_defaults_to_one() {
    let m = MachineDescription::Pafa(build_upower());
    let text = serialize_machine(&m);
    let stripped = text.replace("  \"format\": 1,\n", "");
    assert_ne!(text, stripped);
    assert_eq!(parse_machine(&stripped).unwrap(), m);
}
