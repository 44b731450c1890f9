//! The machine description file format: UTF-8 JSON with canonical
//! serialization (sorted keys, canonical rationals, empty entries
//! omitted).
//!
//! The top level is `{"format": 1, "kind": ..., "alphabet": [...],
//! "machine": {...}}`. Rationals are strings `"p/q"`, complex amplitudes
//! 2-element arrays `[re, im]`, matrices row-major arrays of amplitude
//! pairs. Transition tables are objects keyed by symbol characters plus
//! the reserved key `"@end"` for the end-marker.

use super::alphabet::{Alphabet, Symbol, Word, END_MARKER};
use super::num::GaussianRational;
use super::{Verdict, Violation};
use crate::alt::{A1caDescription, AfaDescription, CounterCases, CounterUpdate};
use crate::pafa::{Pa1caDescription, PafaDescription, UCases};
use crate::qfa::{AqfaDescription, Matrix, QfaDescription, Superoperator};
use crate::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// Tagged union over the six machine kinds; the unit of parsing and
/// serialization.
#[derive(Debug, Clone, PartialEq)]
pub enum MachineDescription {
    Afa(AfaDescription),
    A1ca(A1caDescription),
    Pafa(PafaDescription),
    Pa1ca(Pa1caDescription),
    Qfa(QfaDescription),
    Aqfa(AqfaDescription),
}

impl MachineDescription {
    pub fn kind(&self) -> &'static str {
        match self {
            MachineDescription::Afa(_) => "afa",
            MachineDescription::A1ca(_) => "a1ca",
            MachineDescription::Pafa(_) => "pafa",
            MachineDescription::Pa1ca(_) => "pa1ca",
            MachineDescription::Qfa(_) => "qfa",
            MachineDescription::Aqfa(_) => "aqfa",
        }
    }

    pub fn alphabet(&self) -> &Alphabet {
        match self {
            MachineDescription::Afa(m) => &m.alphabet,
            MachineDescription::A1ca(m) => &m.alphabet,
            MachineDescription::Pafa(m) => &m.alphabet,
            MachineDescription::Pa1ca(m) => &m.alphabet,
            MachineDescription::Qfa(m) => &m.alphabet,
            MachineDescription::Aqfa(m) => &m.alphabet,
        }
    }

    /// Runs the machine on `w` under its kind's acceptance mode; plain
    /// QFAs use nondeterministic (positive one-sided) acceptance.
    pub fn accepts(&self, w: &Word) -> Result<Verdict> {
        match self {
            MachineDescription::Afa(m) => crate::alt::afa_accepts(m, w),
            MachineDescription::A1ca(m) => crate::alt::a1ca_accepts(m, w),
            MachineDescription::Pafa(m) => crate::pafa::pafa_accepts(m, w),
            MachineDescription::Pa1ca(m) => crate::pafa::pa1ca_accepts(m, w),
            MachineDescription::Qfa(m) => crate::qfa::nqfa_accepts(m, w),
            MachineDescription::Aqfa(m) => crate::qfa::aqfa_accepts(m, w),
        }
    }
}

/// All kind-specific invariant violations of a structurally well-formed
/// description; empty iff the machine is valid.
pub fn validate(m: &MachineDescription) -> Vec<Violation> {
    let mut v = match m {
        MachineDescription::Afa(m) => m.violations(),
        MachineDescription::A1ca(m) => m.violations(),
        MachineDescription::Pafa(m) => m.violations(),
        MachineDescription::Pa1ca(m) => m.violations(),
        MachineDescription::Qfa(m) => m.violations(),
        MachineDescription::Aqfa(m) => m.violations(),
    };
    // Composite file keys join names with '|'.
    let names: Vec<&String> = match m {
        MachineDescription::Pafa(m) => m
            .common_states
            .iter()
            .chain(m.private_states.iter())
            .collect(),
        MachineDescription::Pa1ca(m) => m
            .common_states
            .iter()
            .chain(m.private_states.iter())
            .collect(),
        MachineDescription::Aqfa(m) => m.classical_states.iter().collect(),
        _ => Vec::new(),
    };
    for n in names {
        if n.contains('|') {
            v.push(Violation::new(
                "state-name",
                format!("state name {n:?} must not contain '|'"),
            ));
        }
    }
    v
}

// ---------------------------------------------------------------------------
// Symbol keys

fn sym_key(sym: Symbol) -> String {
    if sym == END_MARKER {
        "@end".to_string()
    } else {
        sym.to_string()
    }
}

fn parse_sym_key(key: &str) -> Result<Symbol> {
    if key == "@end" {
        return Ok(END_MARKER);
    }
    let mut chars = key.chars();
    match (chars.next(), chars.next()) {
        (Some(c), None) => Ok(c),
        _ => Err(Error::Schema(format!(
            "invalid symbol key {key:?} (single character or \"@end\")"
        ))),
    }
}

fn parse_alphabet(symbols: &[String]) -> Result<Alphabet> {
    let mut chars = Vec::new();
    for s in symbols {
        let mut it = s.chars();
        match (it.next(), it.next()) {
            (Some(c), None) => chars.push(c),
            _ => {
                return Err(Error::Schema(format!(
                    "alphabet entry {s:?} must be a single character"
                )))
            }
        }
    }
    Alphabet::new(chars).map_err(|e| match e {
        Error::Validation(msg) => Error::Validation(format!("alphabet: {msg}")),
        other => other,
    })
}

type Amplitude = (String, String);
type LabeledTargets = BTreeMap<String, (String, String)>;
type FileUTable = BTreeMap<String, BTreeMap<String, LabeledTargets>>;

fn amplitude_to_value(g: &GaussianRational) -> Amplitude {
    g.format_pair()
}

fn matrix_to_file(m: &Matrix) -> Vec<Amplitude> {
    m.entries().iter().map(amplitude_to_value).collect()
}

fn matrix_from_file(entries: &[Amplitude], dim: usize) -> Result<Matrix> {
    if entries.len() != dim * dim {
        return Err(Error::Schema(format!(
            "matrix has {} entries, expected {}",
            entries.len(),
            dim * dim
        )));
    }
    let mut m = Matrix::zero(dim, dim);
    for (i, (re, im)) in entries.iter().enumerate() {
        m.set(i / dim, i % dim, GaussianRational::parse_pair(re, im)?);
    }
    Ok(m)
}

fn superop_to_file(op: &Superoperator) -> Vec<Vec<Amplitude>> {
    op.elements().iter().map(matrix_to_file).collect()
}

fn superop_from_file(mats: &[Vec<Amplitude>], dim: usize) -> Result<Superoperator> {
    let elements = mats
        .iter()
        .map(|m| matrix_from_file(m, dim))
        .collect::<Result<Vec<_>>>()?;
    Ok(Superoperator::new(dim, elements))
}

// ---------------------------------------------------------------------------
// File schemas

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TopFile {
    #[serde(default = "default_format")]
    format: u32,
    kind: String,
    alphabet: Vec<String>,
    machine: serde_json::Value,
}

fn default_format() -> u32 {
    1
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct AfaFile {
    states: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    universal: Vec<String>,
    initial: String,
    accepting: String,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    delta: BTreeMap<String, BTreeMap<String, Vec<String>>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct A1caCasesFile {
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    zero: Vec<(String, CounterUpdate)>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    nonzero: Vec<(String, CounterUpdate)>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct A1caFile {
    states: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    universal: Vec<String>,
    initial: String,
    accepting: String,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    delta: BTreeMap<String, BTreeMap<String, A1caCasesFile>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PafaFile {
    common_states: Vec<String>,
    private_states: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    universal: Vec<(String, String)>,
    gamma: Vec<String>,
    delta_priv: Vec<String>,
    initial: (String, String),
    accept: String,
    reject: String,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty", rename = "deltaE")]
    delta_e: BTreeMap<String, BTreeMap<String, String>>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty", rename = "deltaU")]
    delta_u: FileUTable,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Pa1caCasesFile {
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    zero: BTreeMap<String, (String, String, CounterUpdate)>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    nonzero: BTreeMap<String, (String, String, CounterUpdate)>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Pa1caFile {
    common_states: Vec<String>,
    private_states: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    universal: Vec<(String, String)>,
    gamma: Vec<String>,
    delta_priv: Vec<String>,
    initial: (String, String),
    accept: String,
    reject: String,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty", rename = "deltaE")]
    delta_e: BTreeMap<String, BTreeMap<String, String>>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty", rename = "deltaU")]
    delta_u: BTreeMap<String, BTreeMap<String, Pa1caCasesFile>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct QfaFile {
    basis: Vec<String>,
    initial: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    accept: Vec<String>,
    ops: BTreeMap<String, Vec<Vec<Amplitude>>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct AqfaFile {
    basis: Vec<String>,
    initial: String,
    classical_states: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    universal: Vec<String>,
    classical_initial: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    classical_accept: Vec<String>,
    ops: BTreeMap<String, Vec<Vec<Amplitude>>>,
    cdelta: BTreeMap<String, String>,
}

// ---------------------------------------------------------------------------
// Parsing

fn schema_err(e: serde_json::Error) -> Error {
    Error::Schema(e.to_string())
}

/// Parses and validates a machine description; the result is
/// canonicalized (rationals reduced, empty entries dropped).
pub fn parse_machine(text: &str) -> Result<MachineDescription> {
    let top: TopFile = serde_json::from_str(text).map_err(|e| {
        if e.is_syntax() || e.is_eof() {
            Error::Syntax(e.to_string())
        } else {
            Error::Schema(e.to_string())
        }
    })?;
    if top.format != 1 {
        return Err(Error::Schema(format!("unsupported format {}", top.format)));
    }
    let alphabet = parse_alphabet(&top.alphabet)?;
    let m = match top.kind.as_str() {
        "afa" => MachineDescription::Afa(afa_from_file(
            serde_json::from_value(top.machine).map_err(schema_err)?,
            alphabet,
        )?),
        "a1ca" => MachineDescription::A1ca(a1ca_from_file(
            serde_json::from_value(top.machine).map_err(schema_err)?,
            alphabet,
        )?),
        "pafa" => MachineDescription::Pafa(pafa_from_file(
            serde_json::from_value(top.machine).map_err(schema_err)?,
            alphabet,
        )?),
        "pa1ca" => MachineDescription::Pa1ca(pa1ca_from_file(
            serde_json::from_value(top.machine).map_err(schema_err)?,
            alphabet,
        )?),
        "qfa" => MachineDescription::Qfa(qfa_from_file(
            serde_json::from_value(top.machine).map_err(schema_err)?,
            alphabet,
        )?),
        "aqfa" => MachineDescription::Aqfa(aqfa_from_file(
            serde_json::from_value(top.machine).map_err(schema_err)?,
            alphabet,
        )?),
        other => return Err(Error::Schema(format!("unknown machine kind {other:?}"))),
    };
    let violations = validate(&m);
    if !violations.is_empty() {
        let msgs: Vec<String> = violations.iter().map(|v| v.to_string()).collect();
        return Err(Error::Validation(msgs.join("; ")));
    }
    Ok(m)
}

/// Deterministic canonical JSON text: sorted keys, canonical rationals,
/// empty entries omitted, trailing newline.
pub fn serialize_machine(m: &MachineDescription) -> String {
    let (kind, machine) = match m {
        MachineDescription::Afa(m) => ("afa", serde_json::to_value(afa_to_file(m)).unwrap()),
        MachineDescription::A1ca(m) => ("a1ca", serde_json::to_value(a1ca_to_file(m)).unwrap()),
        MachineDescription::Pafa(m) => ("pafa", serde_json::to_value(pafa_to_file(m)).unwrap()),
        MachineDescription::Pa1ca(m) => ("pa1ca", serde_json::to_value(pa1ca_to_file(m)).unwrap()),
        MachineDescription::Qfa(m) => ("qfa", serde_json::to_value(qfa_to_file(m)).unwrap()),
        MachineDescription::Aqfa(m) => ("aqfa", serde_json::to_value(aqfa_to_file(m)).unwrap()),
    };
    let top = TopFile {
        format: 1,
        kind: kind.to_string(),
        alphabet: m
            .alphabet()
            .symbols()
            .iter()
            .map(|c| c.to_string())
            .collect(),
        machine,
    };
    let value = serde_json::to_value(&top).unwrap();
    let mut text = serde_json::to_string_pretty(&value).unwrap();
    text.push('\n');
    text
}

// ---------------------------------------------------------------------------
// Per-kind conversions

fn afa_from_file(f: AfaFile, alphabet: Alphabet) -> Result<AfaDescription> {
    let mut delta = BTreeMap::new();
    for (state, by_sym) in f.delta {
        let mut row = BTreeMap::new();
        for (key, targets) in by_sym {
            if !targets.is_empty() {
                row.insert(parse_sym_key(&key)?, targets);
            }
        }
        if !row.is_empty() {
            delta.insert(state, row);
        }
    }
    Ok(AfaDescription {
        alphabet,
        states: f.states,
        universal: f.universal.into_iter().collect(),
        initial: f.initial,
        accepting: f.accepting,
        delta,
    })
}

fn afa_to_file(m: &AfaDescription) -> AfaFile {
    let mut delta: BTreeMap<String, BTreeMap<String, Vec<String>>> = BTreeMap::new();
    for (state, by_sym) in &m.delta {
        let mut row = BTreeMap::new();
        for (&sym, targets) in by_sym {
            if !targets.is_empty() {
                row.insert(sym_key(sym), targets.clone());
            }
        }
        if !row.is_empty() {
            delta.insert(state.clone(), row);
        }
    }
    AfaFile {
        states: m.states.clone(),
        universal: m.universal.iter().cloned().collect(),
        initial: m.initial.clone(),
        accepting: m.accepting.clone(),
        delta,
    }
}

fn a1ca_from_file(f: A1caFile, alphabet: Alphabet) -> Result<A1caDescription> {
    let mut delta = BTreeMap::new();
    for (state, by_sym) in f.delta {
        let mut row = BTreeMap::new();
        for (key, cases) in by_sym {
            let cases = CounterCases {
                zero: cases.zero,
                nonzero: cases.nonzero,
            };
            if !(cases.zero.is_empty() && cases.nonzero.is_empty()) {
                row.insert(parse_sym_key(&key)?, cases);
            }
        }
        if !row.is_empty() {
            delta.insert(state, row);
        }
    }
    Ok(A1caDescription {
        alphabet,
        states: f.states,
        universal: f.universal.into_iter().collect(),
        initial: f.initial,
        accepting: f.accepting,
        delta,
    })
}

fn a1ca_to_file(m: &A1caDescription) -> A1caFile {
    let mut delta: BTreeMap<String, BTreeMap<String, A1caCasesFile>> = BTreeMap::new();
    for (state, by_sym) in &m.delta {
        let mut row = BTreeMap::new();
        for (&sym, cases) in by_sym {
            if cases.zero.is_empty() && cases.nonzero.is_empty() {
                continue;
            }
            row.insert(
                sym_key(sym),
                A1caCasesFile {
                    zero: cases.zero.clone(),
                    nonzero: cases.nonzero.clone(),
                },
            );
        }
        if !row.is_empty() {
            delta.insert(state.clone(), row);
        }
    }
    A1caFile {
        states: m.states.clone(),
        universal: m.universal.iter().cloned().collect(),
        initial: m.initial.clone(),
        accepting: m.accepting.clone(),
        delta,
    }
}

fn split_pair_key(key: &str) -> Result<(String, String)> {
    match key.split_once('|') {
        Some((a, b)) => Ok((a.to_string(), b.to_string())),
        None => Err(Error::Schema(format!(
            "invalid composite key {key:?}, expected \"common|private\""
        ))),
    }
}

fn pafa_from_file(f: PafaFile, alphabet: Alphabet) -> Result<PafaDescription> {
    let mut delta_u = BTreeMap::new();
    for (key, by_sym) in f.delta_u {
        let state = split_pair_key(&key)?;
        let mut row = BTreeMap::new();
        for (sym, targets) in by_sym {
            if !targets.is_empty() {
                row.insert(parse_sym_key(&sym)?, targets);
            }
        }
        if !row.is_empty() {
            delta_u.insert(state, row);
        }
    }
    Ok(PafaDescription {
        alphabet,
        common_states: f.common_states,
        private_states: f.private_states,
        universal: f.universal.into_iter().collect(),
        gamma: f.gamma,
        delta_priv: f.delta_priv,
        initial: f.initial,
        accept: f.accept,
        reject: f.reject,
        delta_e: f
            .delta_e
            .into_iter()
            .filter(|(_, row)| !row.is_empty())
            .collect(),
        delta_u,
    })
}

fn pafa_to_file(m: &PafaDescription) -> PafaFile {
    let mut delta_u = FileUTable::new();
    for ((c, p), by_sym) in &m.delta_u {
        let mut row = BTreeMap::new();
        for (&sym, targets) in by_sym {
            if !targets.is_empty() {
                row.insert(sym_key(sym), targets.clone());
            }
        }
        if !row.is_empty() {
            delta_u.insert(format!("{c}|{p}"), row);
        }
    }
    PafaFile {
        common_states: m.common_states.clone(),
        private_states: m.private_states.clone(),
        universal: m.universal.iter().cloned().collect(),
        gamma: m.gamma.clone(),
        delta_priv: m.delta_priv.clone(),
        initial: m.initial.clone(),
        accept: m.accept.clone(),
        reject: m.reject.clone(),
        delta_e: m
            .delta_e
            .iter()
            .filter(|(_, row)| !row.is_empty())
            .map(|(k, v)| (k.clone(), v.clone()))
            .collect(),
        delta_u,
    }
}

fn pa1ca_from_file(f: Pa1caFile, alphabet: Alphabet) -> Result<Pa1caDescription> {
    let mut delta_u = BTreeMap::new();
    for (key, by_sym) in f.delta_u {
        let state = split_pair_key(&key)?;
        let mut row = BTreeMap::new();
        for (sym, cases) in by_sym {
            let cases = UCases {
                zero: cases.zero,
                nonzero: cases.nonzero,
            };
            if !(cases.zero.is_empty() && cases.nonzero.is_empty()) {
                row.insert(parse_sym_key(&sym)?, cases);
            }
        }
        if !row.is_empty() {
            delta_u.insert(state, row);
        }
    }
    Ok(Pa1caDescription {
        alphabet,
        common_states: f.common_states,
        private_states: f.private_states,
        universal: f.universal.into_iter().collect(),
        gamma: f.gamma,
        delta_priv: f.delta_priv,
        initial: f.initial,
        accept: f.accept,
        reject: f.reject,
        delta_e: f
            .delta_e
            .into_iter()
            .filter(|(_, row)| !row.is_empty())
            .collect(),
        delta_u,
    })
}

fn pa1ca_to_file(m: &Pa1caDescription) -> Pa1caFile {
    let mut delta_u: BTreeMap<String, BTreeMap<String, Pa1caCasesFile>> = BTreeMap::new();
    for ((c, p), by_sym) in &m.delta_u {
        let mut row = BTreeMap::new();
        for (&sym, cases) in by_sym {
            if cases.zero.is_empty() && cases.nonzero.is_empty() {
                continue;
            }
            row.insert(
                sym_key(sym),
                Pa1caCasesFile {
                    zero: cases.zero.clone(),
                    nonzero: cases.nonzero.clone(),
                },
            );
        }
        if !row.is_empty() {
            delta_u.insert(format!("{c}|{p}"), row);
        }
    }
    Pa1caFile {
        common_states: m.common_states.clone(),
        private_states: m.private_states.clone(),
        universal: m.universal.iter().cloned().collect(),
        gamma: m.gamma.clone(),
        delta_priv: m.delta_priv.clone(),
        initial: m.initial.clone(),
        accept: m.accept.clone(),
        reject: m.reject.clone(),
        delta_e: m
            .delta_e
            .iter()
            .filter(|(_, row)| !row.is_empty())
            .map(|(k, v)| (k.clone(), v.clone()))
            .collect(),
        delta_u,
    }
}

fn qfa_from_file(f: QfaFile, alphabet: Alphabet) -> Result<QfaDescription> {
    let dim = f.basis.len();
    let mut ops = BTreeMap::new();
    for (key, mats) in f.ops {
        ops.insert(parse_sym_key(&key)?, superop_from_file(&mats, dim)?);
    }
    Ok(QfaDescription {
        alphabet,
        basis: f.basis,
        initial: f.initial,
        accept: f.accept.into_iter().collect(),
        ops,
    })
}

fn qfa_to_file(m: &QfaDescription) -> QfaFile {
    QfaFile {
        basis: m.basis.clone(),
        initial: m.initial.clone(),
        accept: m.accept.iter().cloned().collect(),
        ops: m
            .ops
            .iter()
            .map(|(&sym, op)| (sym_key(sym), superop_to_file(op)))
            .collect(),
    }
}

fn aqfa_from_file(f: AqfaFile, alphabet: Alphabet) -> Result<AqfaDescription> {
    let dim = f.basis.len();
    let mut ops = BTreeMap::new();
    for (key, mats) in f.ops {
        let (state, sym) = split_pair_key(&key)?;
        ops.insert(
            (state, parse_sym_key(&sym)?),
            superop_from_file(&mats, dim)?,
        );
    }
    let mut cdelta = BTreeMap::new();
    for (key, target) in f.cdelta {
        let parts: Vec<&str> = key.split('|').collect();
        let [state, sym, outcome] = parts.as_slice() else {
            return Err(Error::Schema(format!(
                "invalid cdelta key {key:?}, expected \"state|symbol|outcome\""
            )));
        };
        let outcome: usize = outcome
            .parse()
            .map_err(|_| Error::Schema(format!("invalid outcome index in cdelta key {key:?}")))?;
        cdelta.insert((state.to_string(), parse_sym_key(sym)?, outcome), target);
    }
    Ok(AqfaDescription {
        alphabet,
        classical_states: f.classical_states,
        universal: f.universal.into_iter().collect(),
        classical_initial: f.classical_initial,
        classical_accept: f.classical_accept.into_iter().collect(),
        basis: f.basis,
        initial: f.initial,
        ops,
        cdelta,
    })
}

fn aqfa_to_file(m: &AqfaDescription) -> AqfaFile {
    AqfaFile {
        basis: m.basis.clone(),
        initial: m.initial.clone(),
        classical_states: m.classical_states.clone(),
        universal: m.universal.iter().cloned().collect(),
        classical_initial: m.classical_initial.clone(),
        classical_accept: m.classical_accept.iter().cloned().collect(),
        ops: m
            .ops
            .iter()
            .map(|((s, sym), op)| (format!("{s}|{}", sym_key(*sym)), superop_to_file(op)))
            .collect(),
        cdelta: m
            .cdelta
            .iter()
            .map(|((s, sym, k), t)| (format!("{s}|{}|{k}", sym_key(*sym)), t.clone()))
            .collect(),
    }
}
