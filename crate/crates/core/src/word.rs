//! Word representations: bit-packed binary words, prefix ones-count tables,
//! and words over general alphabets.
//!
//! All public contracts use 1-based positions: `w[1]` is the first letter and
//! `w[|w|]` the last. Storage is 0-based internally; letter `i` of a binary
//! word lives at bit `i - 1` of the packed limbs, least-significant first.

use std::fmt;
use std::str::FromStr;

use crate::error::Error;

/// Bits per packed limb.
pub(crate) const LIMB_BITS: usize = 64;

/// A binary word over `{0, 1}`, bit-packed 64 letters per limb.
///
/// Letter `i` (1-based) is stored at bit `(i - 1) % 64` of limb `(i - 1) / 64`,
/// with a set bit meaning letter `1`. Bits past the length are always zero, so
/// equality and hashing are plain limb comparisons.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BinaryWord {
    limbs: Vec<u64>,
    len: usize,
}

impl BinaryWord {
    /// The empty word.
    pub fn empty() -> Self {
        BinaryWord {
            limbs: Vec::new(),
            len: 0,
        }
    }

    /// Parses an ASCII string of '0'/'1' characters. Rejects anything else
    /// with the 1-based position of the first offending character.
    pub fn parse(text: &str) -> Result<Self, Error> {
        let mut limbs = vec![0u64; text.len().div_ceil(LIMB_BITS)];
        let mut len = 0usize;
        for (idx, ch) in text.chars().enumerate() {
            match ch {
                '0' => {}
                '1' => limbs[idx / LIMB_BITS] |= 1u64 << (idx % LIMB_BITS),
                _ => return Err(Error::InvalidCharacter { ch, pos: idx + 1 }),
            }
            len += 1;
        }
        limbs.truncate(len.div_ceil(LIMB_BITS));
        Ok(BinaryWord { limbs, len })
    }

    /// Builds a word from letter bits, `true` meaning letter `1`.
    pub fn from_bits(bits: impl IntoIterator<Item = bool>) -> Self {
        let mut limbs = Vec::new();
        let mut len = 0usize;
        for bit in bits {
            if len.is_multiple_of(LIMB_BITS) {
                limbs.push(0);
            }
            if bit {
                limbs[len / LIMB_BITS] |= 1u64 << (len % LIMB_BITS);
            }
            len += 1;
        }
        BinaryWord { limbs, len }
    }

    /// Builds a word of length `len` from raw limbs; bits past `len` are
    /// cleared so the padding invariant holds regardless of the input.
    pub fn from_limbs(mut limbs: Vec<u64>, len: usize) -> Self {
        let want = len.div_ceil(LIMB_BITS);
        limbs.resize(want, 0);
        let mut w = BinaryWord { limbs, len };
        w.clear_padding();
        w
    }

    fn clear_padding(&mut self) {
        let tail = self.len % LIMB_BITS;
        if tail != 0 {
            if let Some(last) = self.limbs.last_mut() {
                *last &= (1u64 << tail) - 1;
            }
        }
    }

    /// Number of letters.
    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Letter at 1-based position `i`, as `0` or `1`.
    ///
    /// Panics if `i` is out of `[1, len]`.
    pub fn letter(&self, i: usize) -> u8 {
        assert!(i >= 1 && i <= self.len, "position {i} out of 1..={}", self.len);
        ((self.limbs[(i - 1) / LIMB_BITS] >> ((i - 1) % LIMB_BITS)) & 1) as u8
    }

    /// Iterates letters first to last as bits (`true` = letter `1`).
    pub fn iter_bits(&self) -> impl Iterator<Item = bool> + '_ {
        (1..=self.len).map(|i| self.letter(i) == 1)
    }

    /// The packed limbs; bit `i - 1` holds letter `i`.
    pub fn limbs(&self) -> &[u64] {
        &self.limbs
    }

    /// The word with every letter flipped.
    pub fn complement(&self) -> Self {
        let mut w = BinaryWord {
            limbs: self.limbs.iter().map(|l| !l).collect(),
            len: self.len,
        };
        w.clear_padding();
        w
    }

    /// The word itself if it starts with `0`, otherwise its complement.
    /// The result always begins with `0`. Rejects the empty word.
    pub fn canonicalize(&self) -> Result<Self, Error> {
        if self.is_empty() {
            return Err(Error::EmptyWord);
        }
        if self.letter(1) == 0 {
            Ok(self.clone())
        } else {
            Ok(self.complement())
        }
    }

    /// The word read back to front: letter `i` of the result is letter
    /// `len + 1 - i` of `self`.
    pub fn reversed(&self) -> Self {
        let l = self.limbs.len();
        if l == 0 {
            return Self::empty();
        }
        let mut limbs: Vec<u64> = self.limbs.iter().rev().map(|w| w.reverse_bits()).collect();
        let extra = l * LIMB_BITS - self.len;
        if extra > 0 {
            for k in 0..l {
                let hi = if k + 1 < l { limbs[k + 1] } else { 0 };
                limbs[k] = (limbs[k] >> extra) | (hi << (LIMB_BITS - extra));
            }
        }
        BinaryWord {
            limbs,
            len: self.len,
        }
    }
}

impl fmt::Display for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 1..=self.len {
            f.write_str(if self.letter(i) == 1 { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinaryWord(\"{self}\")")
    }
}

impl FromStr for BinaryWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        BinaryWord::parse(s)
    }
}

/// Cumulative ones-count table: `p[i] = ones(w[1..=i])`, `p[0] = 0`.
///
/// Gives O(1) ones-counts for any factor: `ones(w[i..=j]) = p[j] - p[i-1]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrefixOnes {
    p: Vec<usize>,
}

impl PrefixOnes {
    pub fn build(w: &BinaryWord) -> Self {
        let mut p = Vec::with_capacity(w.len() + 1);
        p.push(0usize);
        let mut acc = 0usize;
        for i in 1..=w.len() {
            acc += w.letter(i) as usize;
            p.push(acc);
        }
        PrefixOnes { p }
    }

    /// Length of the word the table was built from.
    pub fn word_len(&self) -> usize {
        self.p.len() - 1
    }

    /// `ones(w[1..=i])`; `i` may be 0.
    pub fn ones_prefix(&self, i: usize) -> usize {
        self.p[i]
    }

    /// `ones(w[i..=j])` for `1 <= i <= j <= len`.
    pub fn ones_range(&self, i: usize, j: usize) -> usize {
        self.p[j] - self.p[i - 1]
    }

    /// The full table `p[0..=len]`.
    pub fn as_slice(&self) -> &[usize] {
        &self.p
    }
}

/// A word over an alphabet `{0, 1, ..., k-1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GeneralWord {
    letters: Vec<u32>,
    alphabet_size: u32,
}

impl GeneralWord {
    /// Validates that every letter is below `alphabet_size`.
    pub fn new(letters: Vec<u32>, alphabet_size: u32) -> Result<Self, Error> {
        if alphabet_size == 0 {
            return Err(Error::EmptyAlphabet);
        }
        for (idx, &letter) in letters.iter().enumerate() {
            if letter >= alphabet_size {
                return Err(Error::LetterOutOfAlphabet {
                    letter,
                    pos: idx + 1,
                    alphabet_size,
                });
            }
        }
        Ok(GeneralWord {
            letters,
            alphabet_size,
        })
    }

    /// Parses whitespace-separated non-negative integer tokens.
    pub fn parse(text: &str, alphabet_size: u32) -> Result<Self, Error> {
        let mut letters = Vec::new();
        for (idx, token) in text.split_whitespace().enumerate() {
            let letter: u32 = token.parse().map_err(|_| Error::InvalidToken {
                token: token.to_string(),
                pos: idx + 1,
            })?;
            letters.push(letter);
        }
        GeneralWord::new(letters, alphabet_size)
    }

    /// Views a binary word as a general word over a two-letter alphabet.
    pub fn from_binary(w: &BinaryWord) -> Self {
        GeneralWord {
            letters: (1..=w.len()).map(|i| w.letter(i) as u32).collect(),
            alphabet_size: 2,
        }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Letter at 1-based position `i`.
    pub fn letter(&self, i: usize) -> u32 {
        self.letters[i - 1]
    }

    pub fn letters(&self) -> &[u32] {
        &self.letters
    }

    pub fn alphabet_size(&self) -> u32 {
        self.alphabet_size
    }
}

impl fmt::Display for GeneralWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (idx, letter) in self.letters.iter().enumerate() {
            if idx > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{letter}")?;
        }
        Ok(())
    }
}
