//! Deciding whether an integer array is a valid abelian border array.
//!
//! The decision reduces to recomputation: every valid array is generated by
//! the specific word that places a `0` wherever the array jumps to `i - 1`
//! and a `1` everywhere else ([`candidate_word`]). An array is valid exactly
//! when the border array of that word reproduces it.

use crate::border::{border_array_incremental, BorderArray, Engine, AUTO_PACKED_THRESHOLD};
use crate::error::Error;
use crate::packed::border_array_packed;
use crate::word::{BinaryWord, PrefixOnes};

/// Decision produced by [`verify`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum VerifyOutcome {
    /// The candidate is a border array; `word` is its canonical generating
    /// word (the one starting with `0`).
    Valid { word: BinaryWord },
    /// The candidate is not a border array; `mismatch_index` is the smallest
    /// 1-based index where it fails, either structurally or against the
    /// recomputed array.
    Invalid { mismatch_index: usize },
}

impl VerifyOutcome {
    pub fn is_valid(&self) -> bool {
        matches!(self, VerifyOutcome::Valid { .. })
    }

    pub fn word(&self) -> Option<&BinaryWord> {
        match self {
            VerifyOutcome::Valid { word } => Some(word),
            VerifyOutcome::Invalid { .. } => None,
        }
    }

    pub fn mismatch_index(&self) -> Option<usize> {
        match self {
            VerifyOutcome::Valid { .. } => None,
            VerifyOutcome::Invalid { mismatch_index } => Some(*mismatch_index),
        }
    }
}

/// The word that generates `pi` if anything does: letter `i` is `0` when
/// `pi[i] = i - 1` and `1` otherwise. Makes no validity judgment.
pub fn candidate_word(pi: &BorderArray) -> BinaryWord {
    BinaryWord::from_bits((1..=pi.len()).map(|i| pi.entry(i) != i - 1))
}

/// Checks conditions every border array must satisfy: `pi[1] = 0`,
/// `0 <= pi[i] <= i - 1`, and `pi[i] <= pi[i-1]` whenever `pi[i] != i - 1`.
///
/// Returns the first violating index, or `None` when all conditions hold.
/// Passing is necessary but not sufficient; only recomputation decides.
pub fn structural_precheck(pi: &BorderArray) -> Option<usize> {
    for i in 1..=pi.len() {
        let v = pi.entry(i);
        if i == 1 {
            if v != 0 {
                return Some(1);
            }
        } else if v > i - 1 || (v != i - 1 && v > pi.entry(i - 1)) {
            return Some(i);
        }
    }
    None
}

/// Verifies `pi` with the default engine choice: incremental for short
/// arrays, packed from [`AUTO_PACKED_THRESHOLD`] up.
pub fn verify(pi: &BorderArray) -> VerifyOutcome {
    verify_with(pi, Engine::Auto)
}

/// Verifies `pi`, recomputing the border array of the candidate word with
/// the given engine. The precheck only ever rejects; acceptance always comes
/// from the recomputation matching the candidate exactly.
pub fn verify_with(pi: &BorderArray, engine: Engine) -> VerifyOutcome {
    verify_with_threshold(pi, engine, AUTO_PACKED_THRESHOLD)
}

/// Like [`verify_with`], with an explicit length at which [`Engine::Auto`]
/// switches from the incremental to the packed engine.
pub fn verify_with_threshold(
    pi: &BorderArray,
    engine: Engine,
    packed_threshold: usize,
) -> VerifyOutcome {
    if let Some(i) = structural_precheck(pi) {
        return VerifyOutcome::Invalid { mismatch_index: i };
    }
    let word = candidate_word(pi);
    let recomputed = match engine {
        Engine::Naive | Engine::Incremental => border_array_incremental(&word),
        Engine::Packed => border_array_packed(&word),
        Engine::Auto => {
            if word.len() >= packed_threshold {
                border_array_packed(&word)
            } else {
                border_array_incremental(&word)
            }
        }
    }
    .expect("candidate word is nonempty");
    if recomputed == *pi {
        VerifyOutcome::Valid { word }
    } else {
        let mismatch_index = recomputed
            .entries()
            .iter()
            .zip(pi.entries())
            .position(|(a, b)| a != b)
            .expect("arrays differ")
            + 1;
        VerifyOutcome::Invalid { mismatch_index }
    }
}

/// The two ways a valid array of length `n` extends to length `n + 1`.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct ExtensionSet {
    /// Appending the generating word with `0` always yields entry `n`.
    pub with_zero: usize,
    /// Appending with `1` yields this entry (possibly 0, always < n).
    pub with_one: usize,
}

impl ExtensionSet {
    /// Both extension values; distinct by construction.
    pub fn members(&self) -> [usize; 2] {
        [self.with_zero, self.with_one]
    }

    pub fn contains(&self, k: usize) -> bool {
        k == self.with_zero || k == self.with_one
    }
}

/// Computes the extension set of a valid array. Rejects invalid input.
pub fn extensions(pi: &BorderArray) -> Result<ExtensionSet, Error> {
    match verify(pi) {
        VerifyOutcome::Invalid { mismatch_index } => {
            Err(Error::InvalidBorderArray { mismatch_index })
        }
        VerifyOutcome::Valid { word } => {
            let n = pi.len();
            // last border-array entry of the generating word extended by `1`
            let p = PrefixOnes::build(&word);
            let p = p.as_slice();
            let extended_ones = p[n] + 1;
            let mut with_one = 0usize;
            for j in (1..=n).rev() {
                if p[j] + p[n + 1 - j] == extended_ones {
                    with_one = j;
                    break;
                }
            }
            Ok(ExtensionSet {
                with_zero: n,
                with_one,
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::border::border_array_naive;

    fn ba(entries: &[usize]) -> BorderArray {
        BorderArray::from_entries(entries.to_vec()).unwrap()
    }

    #[test]
    fn candidate_word_examples() {
        assert_eq!(candidate_word(&ba(&[0, 1, 2, 0, 4, 5, 0])).to_string(), "0001001");
        assert_eq!(candidate_word(&ba(&[0, 0, 0, 3, 3])).to_string(), "01101");
        assert_eq!(candidate_word(&ba(&[0])).to_string(), "0");
    }

    #[test]
    fn precheck_examples() {
        assert_eq!(structural_precheck(&ba(&[0, 1, 2, 0, 4, 5, 0])), None);
        // structurally fine yet invalid overall
        assert_eq!(structural_precheck(&ba(&[0, 1, 2, 0, 4, 4])), None);
        assert_eq!(structural_precheck(&ba(&[0, 2])), Some(2));
        assert_eq!(structural_precheck(&ba(&[1])), Some(1));
        // entry below the previous one without jumping to i-1
        assert_eq!(structural_precheck(&ba(&[0, 1, 2, 0, 2])), Some(5));
    }

    #[test]
    fn verify_examples() {
        let outcome = verify(&ba(&[0, 1, 2, 0, 4, 5, 0]));
        assert_eq!(outcome.word().unwrap().to_string(), "0001001");

        let outcome = verify(&ba(&[0, 1, 2, 0, 4, 4]));
        assert!(!outcome.is_valid());
        assert_eq!(outcome.mismatch_index(), Some(6));

        let outcome = verify(&ba(&[0, 0, 0, 3, 3]));
        assert_eq!(outcome.word().unwrap().to_string(), "01101");

        let outcome = verify(&ba(&[0]));
        assert_eq!(outcome.word().unwrap().to_string(), "0");
    }

    #[test]
    fn verify_roundtrip_small() {
        for n in 1..=10usize {
            for bits in 0u64..(1 << n) {
                let w = BinaryWord::from_bits((0..n).map(|k| (bits >> k) & 1 == 1));
                let pi = border_array_naive(&w).unwrap();
                let outcome = verify(&pi);
                assert_eq!(
                    outcome.word().map(|x| x.to_string()),
                    Some(w.canonicalize().unwrap().to_string()),
                    "roundtrip failed for {w}"
                );
            }
        }
    }

    #[test]
    fn extensions_examples() {
        let ext = extensions(&ba(&[0, 0, 0, 3, 3])).unwrap();
        assert_eq!(ext.with_zero, 5);
        assert_eq!(ext.with_one, 3);

        let ext = extensions(&ba(&[0])).unwrap();
        assert_eq!(ext.with_zero, 1);
        assert_eq!(ext.with_one, 0);

        assert_eq!(
            extensions(&ba(&[0, 1, 2, 0, 4, 4])),
            Err(Error::InvalidBorderArray { mismatch_index: 6 })
        );
    }

    #[test]
    fn extension_members_are_distinct_small() {
        use crate::enumerate::enumerate_valid;
        for n in 1..=9usize {
            for node in enumerate_valid(n).unwrap() {
                let ext = extensions(&node.array).unwrap();
                assert_ne!(ext.with_zero, ext.with_one);
                assert_eq!(ext.with_zero, n);
            }
        }
    }
}
