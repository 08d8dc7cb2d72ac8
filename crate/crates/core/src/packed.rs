//! Word-packed border-array engine.
//!
//! For a prefix `w[1..=i]`, consider the walk
//!
//! ```text
//! d(j) = ones(w[1..=j]) - ones(w[i-j+1..=i]),   d(0) = d(i) = 0
//! ```
//!
//! whose step from `j-1` to `j` is `w[j] - w[i-j+1]`, one of -1/0/+1. A
//! position `1 <= j <= i-1` is an abelian border length of the prefix exactly
//! when `d(j) = 0`, so entry `i` of the border array is the largest such zero
//! (or 0 when the walk never returns inside the open interval).
//!
//! The engine encodes the steps of the walk as two disjoint bit masks
//! ([`StepWalk`]): bit `j-1` of the plus mask is set when the step at `j` is
//! +1, of the minus mask when it is -1. Both masks come from constant-count
//! shifts of the packed word and its precomputed bit reversal, so a 64-step
//! chunk costs O(1) to produce.
//!
//! The scan walks chunks from `j = i-1` downward, tracking the walk value `r`
//! at the top of the current chunk. A chunk of `c` steps cannot reach zero
//! when `|r| > c`, so it is skipped with a popcount update. Surviving chunks
//! are resolved 8 steps at a time through a precomputed table indexed by the
//! clamped incoming value and the 16-bit step code, which returns a bitmask
//! of zero positions plus the value change across the 8 steps. The first zero
//! found is the maximum border, and the scan stops there. Total work is
//! O(n^2 / w) in the worst case and far less on words with frequent borders.

use std::sync::OnceLock;

use crate::border::BorderArray;
use crate::error::Error;
use crate::word::{BinaryWord, LIMB_BITS};

#[inline]
fn limb_at(limbs: &[u64], idx: usize) -> u64 {
    limbs.get(idx).copied().unwrap_or(0)
}

/// Limb `t` of `rev >> shift`.
#[inline]
fn shifted_limb(rev: &[u64], t: usize, shift: usize) -> u64 {
    let sw = shift / LIMB_BITS;
    let sb = shift % LIMB_BITS;
    let lo = limb_at(rev, t + sw);
    if sb == 0 {
        lo
    } else {
        (lo >> sb) | (limb_at(rev, t + sw + 1) << (LIMB_BITS - sb))
    }
}

/// Plus/minus step masks for chunk `t` of the prefix `w[1..=i]`: bit `b` of
/// the result covers the step at position `64t + b + 1`. Bits past the last
/// real step are zero.
#[inline]
fn chunk_masks(a: &[u64], rev: &[u64], n: usize, i: usize, t: usize) -> (u64, u64) {
    let aw = limb_at(a, t);
    let rw = shifted_limb(rev, t, n - i);
    let c = (i - LIMB_BITS * t).min(LIMB_BITS);
    let mask = if c == LIMB_BITS { u64::MAX } else { (1u64 << c) - 1 };
    ((aw & !rw) & mask, (!aw & rw) & mask)
}

/// The materialized step sequence of the border walk for one prefix.
///
/// Bit `j-1` of `plus` is set when step `j` is +1, of `minus` when it is -1;
/// the masks are disjoint and cover steps `1..=len`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StepWalk {
    plus: Vec<u64>,
    minus: Vec<u64>,
    len: usize,
}

impl StepWalk {
    /// Builds the walk for the prefix `w[1..=i]`.
    pub fn build(w: &BinaryWord, i: usize) -> Result<Self, Error> {
        if i < 1 || i > w.len() {
            return Err(Error::PositionOutOfRange { pos: i, len: w.len() });
        }
        let rev = w.reversed();
        let chunks = (i - 1) / LIMB_BITS + 1;
        let mut plus = Vec::with_capacity(chunks);
        let mut minus = Vec::with_capacity(chunks);
        for t in 0..chunks {
            let (p, m) = chunk_masks(w.limbs(), rev.limbs(), w.len(), i, t);
            plus.push(p);
            minus.push(m);
        }
        Ok(StepWalk { plus, minus, len: i })
    }

    /// Number of steps (= the prefix length the walk was built for).
    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Step at 1-based position `j`: -1, 0 or +1.
    pub fn step(&self, j: usize) -> i8 {
        assert!(j >= 1 && j <= self.len);
        let (t, b) = ((j - 1) / LIMB_BITS, (j - 1) % LIMB_BITS);
        let plus = (self.plus[t] >> b) & 1;
        let minus = (self.minus[t] >> b) & 1;
        plus as i8 - minus as i8
    }

    /// Positions `1 <= j <= len-1` where the walk returns to zero, ascending.
    /// These are exactly the abelian border lengths of the prefix.
    pub fn zeros(&self) -> Vec<usize> {
        let mut out = Vec::new();
        let mut d = 0i64;
        for j in 1..self.len {
            d += self.step(j) as i64;
            if d == 0 {
                out.push(j);
            }
        }
        out
    }

    pub fn plus_limbs(&self) -> &[u64] {
        &self.plus
    }

    pub fn minus_limbs(&self) -> &[u64] {
        &self.minus
    }
}

/// Offsets are clamped into `[-16, 16]` before indexing.
const OFFSET_SPAN: usize = 33;
const OFFSET_BIAS: i32 = 16;

/// Resolution table for 8-step half-chunks.
///
/// Indexed by `(clamped incoming walk value, 16-bit step code)` where the
/// code packs the plus byte in its low half and the minus byte in its high
/// half. Each entry packs, into a u16:
///   - low byte: bitmask of step indexes `s` where the walk value after
///     consuming steps `7, 6, ..., s` (descending) is zero, i.e. where
///     `d(base + s) = 0` given `d(base + 8) = incoming`;
///   - high byte: the total value change across the 8 steps, biased by +8.
///
/// An 8-step group moves the walk by at most 8, so every clamped offset
/// beyond 8 in magnitude yields an empty mask; the clamp never loses a zero.
struct ChunkTable {
    packed: Vec<u16>,
}

impl ChunkTable {
    fn build() -> Self {
        let mut packed = vec![0u16; OFFSET_SPAN << 16];
        for code in 0..(1usize << 16) {
            let plus = code & 0xFF;
            let minus = code >> 8;
            // suff[s] = sum of steps s..=7
            let mut suff = [0i32; 9];
            for s in (0..8).rev() {
                let step = ((plus >> s) & 1) as i32 - ((minus >> s) & 1) as i32;
                suff[s] = suff[s + 1] + step;
            }
            let delta_biased = ((suff[0] + 8) as u16) << 8;
            for off in -OFFSET_BIAS..=OFFSET_BIAS {
                let mut mask = 0u16;
                if off.abs() <= 8 {
                    for (s, &sum) in suff[..8].iter().enumerate() {
                        if sum == off {
                            mask |= 1 << s;
                        }
                    }
                }
                packed[(((off + OFFSET_BIAS) as usize) << 16) | code] = mask | delta_biased;
            }
        }
        ChunkTable { packed }
    }

    /// Returns `(zero-position mask, value delta)` for the 8 steps in `code`
    /// entered with walk value `incoming`.
    #[inline]
    fn lookup(&self, incoming: i32, code: usize) -> (u8, i32) {
        let off = incoming.clamp(-OFFSET_BIAS, OFFSET_BIAS) + OFFSET_BIAS;
        let entry = self.packed[((off as usize) << 16) | code];
        ((entry & 0xFF) as u8, ((entry >> 8) as i32) - 8)
    }
}

fn chunk_table() -> &'static ChunkTable {
    static TABLE: OnceLock<ChunkTable> = OnceLock::new();
    TABLE.get_or_init(ChunkTable::build)
}

/// Largest zero of the walk for prefix `i` in `[1, i-1]`, or 0.
fn scan_prefix(table: &ChunkTable, a: &[u64], rev: &[u64], n: usize, i: usize) -> usize {
    let t_top = (i - 1) / LIMB_BITS;
    // walk value at the top of the current chunk (zero-padded above step i)
    let mut r = 0i32;
    for t in (0..=t_top).rev() {
        let (plus, minus) = chunk_masks(a, rev, n, i, t);
        let c = (i - LIMB_BITS * t).min(LIMB_BITS) as i32;
        if r.abs() > c {
            // no zero reachable inside this chunk
            r -= plus.count_ones() as i32 - minus.count_ones() as i32;
            continue;
        }
        let base_t = LIMB_BITS * t;
        for u in (0..8).rev() {
            let lo_pos = base_t + 8 * u;
            if lo_pos >= i {
                continue; // entirely above the last real step
            }
            let code = (((plus >> (8 * u)) & 0xFF) | (((minus >> (8 * u)) & 0xFF) << 8)) as usize;
            let (mut zmask, delta) = table.lookup(r, code);
            let hi = i - 1 - lo_pos;
            if hi < 7 {
                zmask &= (1u8 << (hi + 1)) - 1;
            }
            if lo_pos == 0 {
                zmask &= !1; // position 0 is the walk origin, not a border
            }
            if zmask != 0 {
                return lo_pos + (7 - zmask.leading_zeros() as usize);
            }
            r -= delta;
        }
    }
    0
}

/// Bit-parallel engine: identical output to the naive oracle, computed
/// through the packed walk scan described in the module docs.
pub fn border_array_packed(w: &BinaryWord) -> Result<BorderArray, Error> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    let table = chunk_table();
    let n = w.len();
    let rev = w.reversed();
    let entries = (1..=n)
        .map(|i| scan_prefix(table, w.limbs(), rev.limbs(), n, i))
        .collect();
    Ok(BorderArray::from_entries(entries).expect("n >= 1"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::border::{all_border_lengths, border_array_naive};

    fn word_from(bits: u64, n: usize) -> BinaryWord {
        BinaryWord::from_bits((0..n).map(|k| (bits >> k) & 1 == 1))
    }

    #[test]
    fn packed_matches_worked_example() {
        let w = BinaryWord::parse("0001001").unwrap();
        assert_eq!(
            border_array_packed(&w).unwrap().entries(),
            &[0, 1, 2, 0, 4, 5, 0]
        );
    }

    #[test]
    fn packed_rejects_empty() {
        assert_eq!(border_array_packed(&BinaryWord::empty()), Err(Error::EmptyWord));
    }

    #[test]
    fn packed_matches_naive_exhaustively_small() {
        for n in 1..=12usize {
            for bits in 0u64..(1 << n) {
                let w = word_from(bits, n);
                assert_eq!(
                    border_array_packed(&w).unwrap(),
                    border_array_naive(&w).unwrap(),
                    "mismatch for {w}"
                );
            }
        }
    }

    #[test]
    fn packed_matches_naive_across_limb_boundaries() {
        let mut state = 0x243F6A8885A308D3u64;
        let mut next = || {
            state = state
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            state
        };
        for n in [63usize, 64, 65, 127, 128, 129, 200, 257] {
            for _ in 0..40 {
                let limbs: Vec<u64> = (0..n.div_ceil(64)).map(|_| next()).collect();
                let w = BinaryWord::from_limbs(limbs, n);
                assert_eq!(
                    border_array_packed(&w).unwrap(),
                    border_array_naive(&w).unwrap(),
                    "mismatch for {w}"
                );
            }
        }
    }

    #[test]
    fn walk_zeros_equal_border_lengths() {
        for n in 1..=10usize {
            for bits in 0u64..(1 << n) {
                let w = word_from(bits, n);
                for i in 1..=n {
                    let walk = StepWalk::build(&w, i).unwrap();
                    assert_eq!(
                        walk.zeros(),
                        all_border_lengths(&w, i).unwrap(),
                        "walk zeros differ for {w} at i={i}"
                    );
                }
            }
        }
    }

    #[test]
    fn walk_masks_are_disjoint() {
        let mut state = 0x13198A2E03707344u64;
        for n in [5usize, 64, 100, 130] {
            state = state.wrapping_mul(2862933555777941757).wrapping_add(3037000493);
            let limbs: Vec<u64> = (0..n.div_ceil(64)).map(|k| state.rotate_left(k as u32)).collect();
            let w = BinaryWord::from_limbs(limbs, n);
            for i in 1..=n {
                let walk = StepWalk::build(&w, i).unwrap();
                for (p, m) in walk.plus_limbs().iter().zip(walk.minus_limbs()) {
                    assert_eq!(p & m, 0);
                }
            }
        }
    }

    #[test]
    fn walk_rejects_out_of_range() {
        let w = BinaryWord::parse("0101").unwrap();
        assert!(StepWalk::build(&w, 0).is_err());
        assert!(StepWalk::build(&w, 5).is_err());
    }

    #[test]
    fn table_smoke() {
        let table = chunk_table();
        // all-zero steps: every position keeps the incoming value
        let (mask, delta) = table.lookup(0, 0);
        assert_eq!(mask, 0xFF);
        assert_eq!(delta, 0);
        let (mask, delta) = table.lookup(3, 0);
        assert_eq!(mask, 0);
        assert_eq!(delta, 0);
        // eight +1 steps entered at 8: zero exactly after consuming all eight
        let (mask, delta) = table.lookup(8, 0xFF);
        assert_eq!(delta, 8);
        assert_eq!(mask, 0b0000_0001);
        // eight -1 steps entered at -8
        let (mask, delta) = table.lookup(-8, 0xFF00);
        assert_eq!(delta, -8);
        assert_eq!(mask, 0b0000_0001);
    }
}
