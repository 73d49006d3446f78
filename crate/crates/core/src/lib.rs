//! Greedy linear extensions of finite posets.
//!
//! The crate enumerates and counts greedy linear extensions, computes exact
//! proportions `GP(x < y)` of greedy extensions putting `x` before `y`, and
//! finds, for any N-free poset that is not a chain, a pair of elements split
//! exactly in half by its greedy extensions.
//!
//! Posets are limited to [`MAX_ELEMENTS`] elements; enumeration-based
//! operations are meant for desk-scale inputs and take a cap.

pub mod document;
pub mod error;
pub mod generators;
pub mod greedy;
pub mod poset;
pub mod ratio;
pub mod report;
pub mod set;
pub mod theorems;
pub mod verify;

/// Dense element index in `0..n`.
pub type ElementId = usize;

pub use document::{format_poset, parse_poset};
pub use error::{Error, ErrorClass, Result};
pub use generators::SpExpr;
pub use greedy::{
    balance_report, blocks, gp_ratio, greedy_count, greedy_extensions, is_greedy, p_ratio,
    BalanceReport, BlockDecomposition, ExtensionKind, LinearExtension, DEFAULT_CAP,
};
pub use poset::{IndexMap, NWitness, Permutation, Poset};
pub use ratio::Ratio;
pub use report::Report;
pub use set::{ElementSet, MAX_ELEMENTS};
pub use theorems::{half_balanced_witness, GoodTriple, JumpProfile, WitnessPair, WitnessStep};
pub use verify::{run_suite, SuiteOutcome, VerifyOptions, SUITES};
