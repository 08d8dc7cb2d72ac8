//! Enumeration and counting of valid abelian border arrays, exhaustive
//! ground-truth oracles, and the general-alphabet machinery: border arrays
//! over k letters, letter-equivalence canonical codes, and the counting
//! bounds built on them.

use std::collections::HashSet;

use num_bigint::BigUint;
use rayon::prelude::*;

use crate::border::BorderArray;
use crate::error::Error;
use crate::word::{BinaryWord, GeneralWord};

/// Default ceiling for exhaustive operations, measured in word-positions
/// (number of words times their length).
pub const DEFAULT_BUDGET: u64 = 100_000_000;

/// A valid border array paired with its canonical generating word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnumNode {
    pub array: BorderArray,
    pub word: BinaryWord,
}

/// Depth-first streaming enumeration of every valid abelian border array of
/// length `n`, each with its canonical generating word.
///
/// Valid arrays are in bijection with words starting in `0`, and appending a
/// letter extends the array by exactly one entry: a `0` jumps the new entry
/// to `m - 1`, a `1` is resolved by the incremental downward scan. The
/// traversal therefore walks the binary tree of canonical words, 0-child
/// before 1-child, keeping only the current path in memory.
pub fn enumerate_valid(n: usize) -> Result<EnumerateValid, Error> {
    if n == 0 {
        return Err(Error::ZeroLength);
    }
    Ok(EnumerateValid {
        n,
        letters: Vec::with_capacity(n),
        pi: Vec::with_capacity(n),
        ones: {
            let mut ones = Vec::with_capacity(n + 1);
            ones.push(0);
            ones
        },
        stack: vec![(1, 0)],
    })
}

pub struct EnumerateValid {
    n: usize,
    /// letters of the current path word
    letters: Vec<u8>,
    /// border-array entries along the current path
    pi: Vec<usize>,
    /// ones[i] = ones of the first i letters
    ones: Vec<usize>,
    /// pending (depth, letter) branches, deepest last
    stack: Vec<(usize, u8)>,
}

impl Iterator for EnumerateValid {
    type Item = EnumNode;

    fn next(&mut self) -> Option<EnumNode> {
        while let Some((depth, letter)) = self.stack.pop() {
            self.letters.truncate(depth - 1);
            self.pi.truncate(depth - 1);
            self.ones.truncate(depth);
            self.letters.push(letter);
            self.ones.push(self.ones[depth - 1] + letter as usize);
            let entry = if letter == 0 {
                depth - 1
            } else {
                // scan down from the parent's entry; the new one cannot exceed it
                let p = &self.ones;
                let mut j = self.pi[depth - 2];
                while j >= 1 {
                    if p[j] + p[depth - j] == p[depth] {
                        break;
                    }
                    j -= 1;
                }
                j
            };
            self.pi.push(entry);
            if depth == self.n {
                return Some(EnumNode {
                    array: BorderArray::from_entries(self.pi.clone()).expect("depth >= 1"),
                    word: BinaryWord::from_bits(self.letters.iter().map(|&b| b == 1)),
                });
            }
            self.stack.push((depth + 1, 1));
            self.stack.push((depth + 1, 0));
        }
        None
    }
}

/// Number of valid abelian border arrays of length `n`, which is `2^(n-1)`:
/// the count doubles with each length because every valid array extends in
/// exactly two ways.
pub fn count_valid(n: usize) -> Result<BigUint, Error> {
    if n == 0 {
        return Err(Error::ZeroLength);
    }
    Ok(BigUint::from(1u32) << (n - 1))
}

fn check_budget(n: usize, k: u32, budget: u64) -> Result<u64, Error> {
    if n == 0 {
        return Err(Error::ZeroLength);
    }
    if k == 0 {
        return Err(Error::EmptyAlphabet);
    }
    let words = (k as u128).checked_pow(n as u32);
    let required = words.and_then(|w| w.checked_mul(n as u128));
    match (words, required) {
        (Some(words), Some(required)) if required <= budget as u128 => Ok(words as u64),
        (_, required) => Err(Error::BudgetExceeded {
            required: required.unwrap_or(u128::MAX),
            budget,
        }),
    }
}

/// Border array of `letters` over alphabet size `k` by the multiset
/// definition, via per-letter prefix counts.
fn general_border_entries(letters: &[u32], k: u32) -> Vec<usize> {
    let n = letters.len();
    let k = k as usize;
    // counts[c * (n + 1) + i] = occurrences of letter c in the first i letters
    let mut counts = vec![0u32; k * (n + 1)];
    for i in 1..=n {
        for c in 0..k {
            counts[c * (n + 1) + i] = counts[c * (n + 1) + i - 1];
        }
        counts[letters[i - 1] as usize * (n + 1) + i] += 1;
    }
    let mut entries = vec![0usize; n];
    for i in 1..=n {
        let mut best = 0usize;
        for j in 1..i {
            let matches = (0..k).all(|c| {
                let row = &counts[c * (n + 1)..(c + 1) * (n + 1)];
                row[j] == row[i] - row[i - j]
            });
            if matches {
                best = j;
            }
        }
        entries[i - 1] = best;
    }
    entries
}

/// Border array of a word over an arbitrary alphabet: entry `i` is the
/// length of the longest proper prefix of `w[1..=i]` whose letter multiset
/// equals that of the same-length proper suffix.
pub fn general_border_array(w: &GeneralWord) -> Result<BorderArray, Error> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    BorderArray::from_entries(general_border_entries(w.letters(), w.alphabet_size()))
}

/// Decodes word index `idx` in `[0, k^n)` into letters, least-significant
/// position first.
fn decode_word(mut idx: u64, n: usize, k: u32) -> Vec<u32> {
    let mut letters = vec![0u32; n];
    for slot in letters.iter_mut() {
        *slot = (idx % k as u64) as u32;
        idx /= k as u64;
    }
    letters
}

/// The set of all valid border arrays over alphabet size `k`, computed by
/// brute force over every word in the space. This is the ground-truth oracle
/// for every counting claim; it refuses (rather than truncates) workloads
/// past `budget` word-positions.
pub fn brute_force_valid(n: usize, k: u32, budget: u64) -> Result<HashSet<BorderArray>, Error> {
    let words = check_budget(n, k, budget)?;
    let chunk = (words / 64).max(1 << 12);
    let ranges: Vec<(u64, u64)> = (0..words)
        .step_by(chunk as usize)
        .map(|lo| (lo, (lo + chunk).min(words)))
        .collect();
    let set = ranges
        .into_par_iter()
        .map(|(lo, hi)| {
            let mut set = HashSet::new();
            let mut letters = decode_word(lo, n, k);
            for idx in lo..hi {
                if idx != lo {
                    // odometer increment
                    for slot in letters.iter_mut() {
                        *slot += 1;
                        if *slot == k {
                            *slot = 0;
                        } else {
                            break;
                        }
                    }
                }
                let entries = general_border_entries(&letters, k);
                set.insert(BorderArray::from_entries(entries).expect("n >= 1"));
            }
            set
        })
        .reduce(HashSet::new, |mut a, b| {
            a.extend(b);
            a
        });
    Ok(set)
}

/// Canonical letter-equivalence code: letters renamed by first occurrence
/// (a restricted-growth string). Two words have the same code exactly when
/// they are letter-equivalent.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LetterPattern {
    code: Vec<u32>,
}

impl LetterPattern {
    pub fn code(&self) -> &[u32] {
        &self.code
    }
}

pub fn letter_canonical(w: &GeneralWord) -> LetterPattern {
    let mut mapping = vec![u32::MAX; w.alphabet_size() as usize];
    let mut next = 0u32;
    let code = w
        .letters()
        .iter()
        .map(|&letter| {
            let slot = &mut mapping[letter as usize];
            if *slot == u32::MAX {
                *slot = next;
                next += 1;
            }
            *slot
        })
        .collect();
    LetterPattern { code }
}

/// `(3^(n-1) + 1) / 2`: the number of letter-equivalence classes of ternary
/// words, an upper bound for the number of their border arrays.
pub fn ternary_upper_bound(n: usize) -> BigUint {
    assert!(n >= 1, "length must be at least 1");
    (BigUint::from(3u32).pow(n as u32 - 1) + 1u32) / 2u32
}

/// `n`-th Bell number by the Bell-triangle recurrence: the number of
/// partitions of `n` indexes, an upper bound for the number of border arrays
/// over an unbounded alphabet.
pub fn bell_number(n: usize) -> BigUint {
    assert!(n >= 1, "index must be at least 1");
    let mut row = vec![BigUint::from(1u32)];
    for _ in 1..n {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(row.last().unwrap().clone());
        for value in &row {
            let sum = next.last().unwrap() + value;
            next.push(sum);
        }
        row = next;
    }
    row.last().unwrap().clone()
}

/// Number of distinct letter-equivalence codes among words of length `n`
/// over `k` letters, i.e. partitions of `n` indexes into at most `k` parts.
///
/// Dynamic program over (position, distinct letters used so far): a new
/// position either reuses one of `d` seen letters or introduces the next.
pub fn equivalence_class_count(n: usize, k: u32) -> BigUint {
    assert!(n >= 1, "length must be at least 1");
    assert!(k >= 1, "alphabet size must be at least 1");
    let kmax = (k as usize).min(n);
    // counts[d - 1] = number of codes of the current length using d letters
    let mut counts = vec![BigUint::ZERO; kmax];
    counts[0] = BigUint::from(1u32);
    for _ in 2..=n {
        let mut next = vec![BigUint::ZERO; kmax];
        for d in 1..=kmax {
            let mut value = &counts[d - 1] * d as u32;
            if d >= 2 {
                value += &counts[d - 2];
            }
            next[d - 1] = value;
        }
        counts = next;
    }
    counts.into_iter().sum()
}

/// Oracle counterpart of [`equivalence_class_count`]: canonicalizes every
/// word in the space and counts distinct codes. Budget-guarded.
pub fn equivalence_class_count_exhaustive(
    n: usize,
    k: u32,
    budget: u64,
) -> Result<BigUint, Error> {
    let words = check_budget(n, k, budget)?;
    let mut codes: HashSet<Vec<u32>> = HashSet::new();
    let mut letters = vec![0u32; n];
    for idx in 0..words {
        if idx != 0 {
            for slot in letters.iter_mut() {
                *slot += 1;
                if *slot == k {
                    *slot = 0;
                } else {
                    break;
                }
            }
        }
        let mut mapping = vec![u32::MAX; k as usize];
        let mut next = 0u32;
        let code: Vec<u32> = letters
            .iter()
            .map(|&letter| {
                let slot = &mut mapping[letter as usize];
                if *slot == u32::MAX {
                    *slot = next;
                    next += 1;
                }
                *slot
            })
            .collect();
        codes.insert(code);
    }
    Ok(BigUint::from(codes.len()))
}
