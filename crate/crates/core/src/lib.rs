//! Simulators and deciders for realtime alternating automata.
//!
//! Six machine kinds share a common frame: the input `w` is read as `¢w¢`
//! and every machine spends exactly two transition steps on each tape
//! symbol, so a computation tree for an input of length `n` has depth
//! `2n + 4`. On top of that frame this crate implements:
//!
//! - [`alt`]: alternating finite automata (AFA) and their one-counter
//!   extension (A1CA), evaluated by AND-OR tree semantics.
//! - [`tmc`]: deterministic Turing machines and a compiler that turns a
//!   TM into a unary A1CA performing a backwards simulation of its
//!   halting computation.
//! - [`pafa`]: private alternating finite automata (PAFA/PA1CA), where
//!   acceptance is a strategy-search problem over information sets, plus
//!   built-in machines for the unary powers-of-two language, `{wcw}`,
//!   and the unary squares language.
//! - [`qfa`]: quantum finite automata driven by superoperators over
//!   exact Gaussian-rational arithmetic: nondeterministic/universal
//!   acceptance, an equivalence and emptiness decider, and alternating
//!   QFAs with outcome-tree semantics.
//! - [`core`]: the shared vocabulary: alphabets, words, exact numbers,
//!   the machine description file format, and the generic computation
//!   tree with DOT export.
//! - [`gen`]: seeded, deterministic generators of random machines for
//!   testing.
//!
//! All quantum arithmetic is exact; there is no floating point anywhere
//! in this crate.

pub mod core;

pub mod alt;
pub mod gen;
pub mod pafa;
pub mod qfa;
pub mod tmc;

pub use crate::core::{
    Alphabet, ComputationTree, EmptinessVerdict, GaussianRational, MachineDescription, Rational,
    Verdict, Violation, Word,
};

use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    /// The input text is not well-formed JSON.
    #[error("syntax error: {0}")]
    Syntax(String),
    /// The JSON is well-formed but does not match the machine schema.
    #[error("schema error: {0}")]
    Schema(String),
    /// The description parses but violates a machine invariant.
    #[error("validation error: {0}")]
    Validation(String),
    /// A word contains a symbol outside the machine's alphabet.
    #[error("symbol {0:?} is not in the machine alphabet")]
    SymbolNotInAlphabet(char),
    /// Matrix or vector dimensions do not match.
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    /// An operation received a machine of the wrong kind.
    #[error("unsupported machine kind: {0}")]
    UnsupportedKind(String),
    /// A Turing machine got stuck in a non-halting state.
    #[error("undefined transition from state {state:?} on symbol {symbol:?}")]
    UndefinedTransition { state: String, symbol: char },
}

/// Crate-wide result type.
pub type Result<T> = std::result::Result<T, Error>;
