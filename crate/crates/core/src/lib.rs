//! Abelian border arrays of binary words.
//!
//! Two equal-length binary words are abelian equivalent when they contain
//! the same number of 1s. An abelian border of a word is a proper nonempty
//! prefix abelian-equivalent to the same-length proper suffix, and the
//! abelian border array records, per prefix, the longest such border. This
//! crate computes these arrays, decides whether a given integer array is one
//! (reconstructing the generating word when it is), and enumerates or counts
//! all valid arrays, with the general-alphabet counting bounds alongside.
//!
//! Computation comes in three interchangeable engines: a definitional
//! quadratic oracle, an incremental scan guided by the structure of valid
//! arrays, and a bit-parallel engine that processes the border-locating walk
//! one machine word at a time. The engines agree bit-exactly on every input;
//! the `abra` binary exposes all of it on the command line.

mod border;
mod enumerate;
mod error;
mod packed;
mod verify;
mod word;

pub use border::{
    all_border_lengths, border_array_incremental, border_array_naive, shortest_border,
    BorderArray, Engine, AUTO_PACKED_THRESHOLD,
};
pub use enumerate::{
    bell_number, brute_force_valid, count_valid, enumerate_valid, equivalence_class_count,
    equivalence_class_count_exhaustive, general_border_array, letter_canonical, ternary_upper_bound,
    EnumNode, EnumerateValid, LetterPattern, DEFAULT_BUDGET,
};
pub use error::Error;
pub use packed::{border_array_packed, StepWalk};
pub use verify::{
    candidate_word, extensions, structural_precheck, verify, verify_with, verify_with_threshold,
    ExtensionSet, VerifyOutcome,
};
pub use word::{BinaryWord, GeneralWord, PrefixOnes};
