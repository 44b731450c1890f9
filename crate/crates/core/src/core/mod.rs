//! Shared domain vocabulary: alphabets, words, exact numbers, the
//! machine description file format, word enumeration, and the generic
//! computation tree.

pub mod alphabet;
pub mod machine;
pub mod num;
pub mod tree;
pub mod words;

pub use alphabet::{Alphabet, Symbol, TapeView, Word, END_MARKER};
pub use machine::{parse_machine, serialize_machine, validate, MachineDescription};
pub use num::{format_rational, parse_rational, rat, GaussianRational, Rational};
pub use tree::{export_tree_dot, ComputationTree, Connective, TreeNode};
pub use words::enumerate_words;

/// Outcome of running a machine on a word.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Accept,
    Reject,
}

impl Verdict {
    pub fn from_bool(accept: bool) -> Self {
        if accept {
            Verdict::Accept
        } else {
            Verdict::Reject
        }
    }

    pub fn accepted(self) -> bool {
        self == Verdict::Accept
    }
}

/// Outcome of an emptiness decision. A nonempty verdict always carries
/// an accepted witness word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EmptinessVerdict {
    Empty,
    Nonempty { witness: Word },
}

/// One violated machine invariant, reported by `validate`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    /// Short identifier of the violated rule, e.g. `"existential-arity"`.
    pub rule: &'static str,
    pub message: String,
}

impl Violation {
    pub fn new(rule: &'static str, message: impl Into<String>) -> Self {
        Violation {
            rule,
            message: message.into(),
        }
    }
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[{}] {}", self.rule, self.message)
    }
}
