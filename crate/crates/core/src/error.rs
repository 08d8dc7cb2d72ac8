use thiserror::Error;

/// Errors produced by parsing and by operations with preconditions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A binary word contained a character other than '0' or '1'.
    /// Positions are 1-based.
    #[error("invalid character {ch:?} at position {pos}: expected '0' or '1'")]
    InvalidCharacter { ch: char, pos: usize },

    /// A token could not be parsed as a non-negative integer.
    #[error("invalid integer token {token:?} at position {pos}")]
    InvalidToken { token: String, pos: usize },

    /// A letter fell outside the declared alphabet `[0, alphabet_size)`.
    #[error("letter {letter} at position {pos} is outside alphabet of size {alphabet_size}")]
    LetterOutOfAlphabet {
        letter: u32,
        pos: usize,
        alphabet_size: u32,
    },

    /// Alphabet size must be at least 1.
    #[error("alphabet size must be at least 1")]
    EmptyAlphabet,

    /// The operation requires a nonempty word.
    #[error("empty word is not allowed here")]
    EmptyWord,

    /// The operation requires a nonempty array.
    #[error("empty array is not allowed here")]
    EmptyArray,

    /// The operation requires a length of at least 1.
    #[error("length must be at least 1")]
    ZeroLength,

    /// A 1-based position was outside `[1, len]`.
    #[error("position {pos} out of range 1..={len}")]
    PositionOutOfRange { pos: usize, len: usize },

    /// The input array is not the abelian border array of any binary word.
    #[error("not a valid abelian border array (first mismatch at index {mismatch_index})")]
    InvalidBorderArray { mismatch_index: usize },

    /// An exhaustive operation would exceed its word-position budget.
    #[error("budget exceeded: {required} word-positions required, budget is {budget}")]
    BudgetExceeded { required: u128, budget: u64 },
}
