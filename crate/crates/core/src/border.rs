//! Abelian border arrays of binary words.
//!
//! An abelian border of `w[1..=i]` is a proper nonempty prefix with the same
//! ones-count as the same-length proper suffix. Entry `i` of the border array
//! is the length of the longest such border, or 0 when there is none.
//!
//! Three interchangeable engines compute the array: a definitional
//! double-loop oracle ([`border_array_naive`]), a structure-guided
//! incremental scan ([`border_array_incremental`]), and a bit-parallel
//! word-packed engine ([`border_array_packed`]). All three produce identical
//! output on every input.

use std::fmt;
use std::str::FromStr;

use crate::error::Error;
use crate::packed::border_array_packed;
use crate::word::{BinaryWord, PrefixOnes};

/// Word length at and above which [`Engine::Auto`] switches from the
/// incremental engine to the packed engine.
pub const AUTO_PACKED_THRESHOLD: usize = 4096;

/// An integer array indexed 1-based, holding either a computed abelian border
/// array or an unvalidated candidate on its way to verification.
///
/// Construction only requires non-emptiness; structural soundness is the
/// verifier's business, so candidates that violate it can still be
/// represented and diagnosed.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BorderArray {
    entries: Vec<usize>,
}

impl BorderArray {
    /// Wraps raw entries; rejects the empty array.
    pub fn from_entries(entries: Vec<usize>) -> Result<Self, Error> {
        if entries.is_empty() {
            return Err(Error::EmptyArray);
        }
        Ok(BorderArray { entries })
    }

    /// Parses comma- or whitespace-separated non-negative integers.
    pub fn parse(text: &str) -> Result<Self, Error> {
        let mut entries = Vec::new();
        for (idx, token) in text
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .enumerate()
        {
            let value: usize = token.parse().map_err(|_| Error::InvalidToken {
                token: token.to_string(),
                pos: idx + 1,
            })?;
            entries.push(value);
        }
        BorderArray::from_entries(entries)
    }

    /// Number of entries.
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        false // construction rejects empty arrays
    }

    /// Entry at 1-based index `i`.
    pub fn entry(&self, i: usize) -> usize {
        self.entries[i - 1]
    }

    /// All entries as a 0-based slice (`entries()[i - 1]` is entry `i`).
    pub fn entries(&self) -> &[usize] {
        &self.entries
    }
}

impl fmt::Display for BorderArray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (idx, value) in self.entries.iter().enumerate() {
            if idx > 0 {
                f.write_str(",")?;
            }
            write!(f, "{value}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for BorderArray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BorderArray({self})")
    }
}

impl FromStr for BorderArray {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        BorderArray::parse(s)
    }
}

/// Ground-truth oracle: for each `i`, takes the maximum `j` in `[1, i-1]`
/// with `ones(w[1..=j]) = ones(w[i-j+1..=i])` by scanning every candidate.
///
/// Deliberately free of shortcuts (no canonicalization, no monotonicity, no
/// early exit) so it stays an independent reference for the other engines.
pub fn border_array_naive(w: &BinaryWord) -> Result<BorderArray, Error> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    let n = w.len();
    let p = PrefixOnes::build(w);
    let p = p.as_slice();
    let mut entries = vec![0usize; n];
    for i in 1..=n {
        let target = p[i];
        let mut best = 0usize;
        for j in 1..i {
            // prefix ones == suffix ones, i.e. p[j] == p[i] - p[i-j]
            if p[j] + p[i - j] == target {
                best = j;
            }
        }
        entries[i - 1] = best;
    }
    Ok(BorderArray { entries })
}

/// Incremental engine. Canonicalizes first (the array is invariant under
/// complementation), then exploits two structural facts of canonical words:
/// a `0` at position `i` forces entry `i - 1`, and a `1` at position `i`
/// keeps the entry at or below the previous one, so the downward scan can
/// start from `pi[i-1]`.
pub fn border_array_incremental(w: &BinaryWord) -> Result<BorderArray, Error> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    let x = w.canonicalize()?;
    let n = x.len();
    let p = PrefixOnes::build(&x);
    let p = p.as_slice();
    let mut entries = vec![0usize; n];
    for i in 2..=n {
        if x.letter(i) == 0 {
            entries[i - 1] = i - 1;
        } else {
            let mut j = entries[i - 2];
            while j >= 1 {
                if p[j] + p[i - j] == p[i] {
                    break;
                }
                j -= 1;
            }
            entries[i - 1] = j;
        }
    }
    Ok(BorderArray { entries })
}

/// All abelian border lengths of the prefix `w[1..=i]`, ascending.
pub fn all_border_lengths(w: &BinaryWord, i: usize) -> Result<Vec<usize>, Error> {
    if i < 1 || i > w.len() {
        return Err(Error::PositionOutOfRange { pos: i, len: w.len() });
    }
    let p = PrefixOnes::build(w);
    let p = p.as_slice();
    Ok((1..i).filter(|&j| p[j] + p[i - j] == p[i]).collect())
}

/// Length of the shortest nonempty abelian border of the prefix of length
/// `i`, which is `i - pi[i]` whenever a border exists at all.
pub fn shortest_border(ba: &BorderArray, i: usize) -> Result<Option<usize>, Error> {
    if i < 1 || i > ba.len() {
        return Err(Error::PositionOutOfRange { pos: i, len: ba.len() });
    }
    Ok(match ba.entry(i) {
        0 => None,
        longest => Some(i - longest),
    })
}

/// Selects which border-array engine to run.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Engine {
    Naive,
    Incremental,
    Packed,
    /// Incremental below [`AUTO_PACKED_THRESHOLD`], packed at or above it.
    Auto,
}

impl Engine {
    pub fn compute(self, w: &BinaryWord) -> Result<BorderArray, Error> {
        self.compute_with_threshold(w, AUTO_PACKED_THRESHOLD)
    }

    /// Like [`Engine::compute`], with an explicit switch-over length for
    /// [`Engine::Auto`].
    pub fn compute_with_threshold(
        self,
        w: &BinaryWord,
        packed_threshold: usize,
    ) -> Result<BorderArray, Error> {
        match self {
            Engine::Naive => border_array_naive(w),
            Engine::Incremental => border_array_incremental(w),
            Engine::Packed => border_array_packed(w),
            Engine::Auto => {
                if w.len() >= packed_threshold {
                    border_array_packed(w)
                } else {
                    border_array_incremental(w)
                }
            }
        }
    }
}

impl fmt::Display for Engine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Engine::Naive => "naive",
            Engine::Incremental => "incremental",
            Engine::Packed => "packed",
            Engine::Auto => "auto",
        })
    }
}

impl FromStr for Engine {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "naive" => Ok(Engine::Naive),
            "incremental" => Ok(Engine::Incremental),
            "packed" => Ok(Engine::Packed),
            "auto" => Ok(Engine::Auto),
            _ => Err(Error::InvalidToken {
                token: s.to_string(),
                pos: 1,
            }),
        }
    }
}
