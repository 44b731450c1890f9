//! Exact-arithmetic quantum finite automata.
//!
//! Superoperator simulation over density matrices, nondeterministic and
//! universal acceptance, an equivalence/emptiness decider for rational
//! amplitudes, and alternating QFAs with classical control.

pub mod linalg;

mod aqfa;
mod build;
mod equiv;
mod sim;
mod superop;

pub use aqfa::{aqfa_accepts, aqfa_tree, nqfa_as_aqfa, uqfa_as_aqfa, AqfaDescription};
pub use build::build_usquare_aqfa;
pub use equiv::{nqfa_emptiness, qfa_equivalence, zero_qfa, QfaEquivalence};
pub use linalg::Matrix;
pub use sim::{
    apply_superoperator, nqfa_accepts, qfa_accept_probability, uqfa_accepts, DensityMatrix,
    QfaDescription,
};
pub use superop::{complete_superoperator, Superoperator};
