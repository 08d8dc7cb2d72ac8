//! Differential and property tests across modules: the three engines against
//! each other, the walk materialization against the definitional border
//! sets, and the general-alphabet machinery against multiset brute force.

use std::collections::HashMap;

use proptest::prelude::*;
use rand::RngCore;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha12Rng;
use rayon::prelude::*;

use abra::{
    all_border_lengths, border_array_incremental, border_array_naive, border_array_packed,
    general_border_array, letter_canonical, verify, BinaryWord, BorderArray, GeneralWord,
    LetterPattern, PrefixOnes, StepWalk,
};

fn word_of(bits: &[bool]) -> BinaryWord {
    BinaryWord::from_bits(bits.iter().copied())
}

proptest! {
    #[test]
    fn complement_is_an_involution(bits in prop::collection::vec(any::<bool>(), 0..300)) {
        let w = word_of(&bits);
        prop_assert_eq!(w.complement().complement(), w);
    }

    #[test]
    fn canonical_form_starts_with_zero(bits in prop::collection::vec(any::<bool>(), 1..300)) {
        let w = word_of(&bits);
        let canonical = w.canonicalize().unwrap();
        prop_assert_eq!(canonical.letter(1), 0);
        prop_assert!(canonical == w || canonical == w.complement());
    }

    #[test]
    fn prefix_ones_counts_every_range(bits in prop::collection::vec(any::<bool>(), 1..200)) {
        let w = word_of(&bits);
        let p = PrefixOnes::build(&w);
        for i in 1..=w.len() {
            for j in i..=w.len() {
                let direct = (i..=j).filter(|&k| w.letter(k) == 1).count();
                prop_assert_eq!(p.ones_range(i, j), direct);
            }
        }
    }

    #[test]
    fn engines_agree(bits in prop::collection::vec(any::<bool>(), 1..300)) {
        let w = word_of(&bits);
        let naive = border_array_naive(&w).unwrap();
        prop_assert_eq!(&border_array_incremental(&w).unwrap(), &naive);
        prop_assert_eq!(&border_array_packed(&w).unwrap(), &naive);
    }

    #[test]
    fn complement_invariance(bits in prop::collection::vec(any::<bool>(), 1..200)) {
        let w = word_of(&bits);
        prop_assert_eq!(
            border_array_naive(&w).unwrap(),
            border_array_naive(&w.complement()).unwrap()
        );
    }

    #[test]
    fn walk_zeros_match_border_sets(
        bits in prop::collection::vec(any::<bool>(), 1..200),
        pick in any::<prop::sample::Index>(),
    ) {
        let w = word_of(&bits);
        let i = pick.index(w.len()) + 1;
        let walk = StepWalk::build(&w, i).unwrap();
        prop_assert_eq!(walk.zeros(), all_border_lengths(&w, i).unwrap());
    }

    #[test]
    fn border_set_duality(bits in prop::collection::vec(any::<bool>(), 1..150)) {
        let w = word_of(&bits);
        for i in 1..=w.len() {
            let set = all_border_lengths(&w, i).unwrap();
            for &j in &set {
                prop_assert!(set.contains(&(i - j)));
            }
        }
    }

    #[test]
    fn verify_roundtrip(bits in prop::collection::vec(any::<bool>(), 1..200)) {
        let w = word_of(&bits);
        let pi = border_array_naive(&w).unwrap();
        let outcome = verify(&pi);
        prop_assert_eq!(outcome.word(), Some(&w.canonicalize().unwrap()));
    }

    #[test]
    fn general_matches_multiset_brute_force(
        (k, letters) in (1u32..=4).prop_flat_map(|k| {
            (Just(k), prop::collection::vec(0..k, 1..40))
        }),
    ) {
        let w = GeneralWord::new(letters.clone(), k).unwrap();
        let pi = general_border_array(&w).unwrap();
        for i in 1..=letters.len() {
            let sorted = |lo: usize, hi: usize| {
                let mut f = letters[lo - 1..hi].to_vec();
                f.sort_unstable();
                f
            };
            let expected = (1..i)
                .filter(|&j| sorted(1, j) == sorted(i - j + 1, i))
                .max()
                .unwrap_or(0);
            prop_assert_eq!(pi.entry(i), expected);
        }
    }

    #[test]
    fn binary_is_the_two_letter_special_case(
        bits in prop::collection::vec(any::<bool>(), 1..120),
    ) {
        let w = word_of(&bits);
        prop_assert_eq!(
            general_border_array(&GeneralWord::from_binary(&w)).unwrap(),
            border_array_naive(&w).unwrap()
        );
    }
}

#[test]
fn engines_agree_on_seeded_random_words_up_to_10k() {
    // 1000 deterministic words with lengths spread log-uniformly in [1, 10^4]
    let mut rng = ChaCha12Rng::seed_from_u64(0xD1FF_0001);
    let words: Vec<BinaryWord> = (0..1000)
        .map(|_| {
            let u = rng.next_u64() as f64 / u64::MAX as f64;
            let n = (10_000f64.powf(u)).round().max(1.0) as usize;
            let limbs: Vec<u64> = (0..n.div_ceil(64)).map(|_| rng.next_u64()).collect();
            BinaryWord::from_limbs(limbs, n)
        })
        .collect();
    words.par_iter().for_each(|w| {
        let naive = border_array_naive(w).unwrap();
        assert_eq!(border_array_incremental(w).unwrap(), naive);
        assert_eq!(border_array_packed(w).unwrap(), naive);
    });
}

#[test]
fn letter_equivalent_words_share_border_arrays() {
    // exhaustive over ternary words up to length 7
    for n in 1..=7usize {
        let mut classes: HashMap<LetterPattern, BorderArray> = HashMap::new();
        let mut letters = vec![0u32; n];
        let total = 3u64.pow(n as u32);
        for idx in 0..total {
            if idx != 0 {
                for slot in letters.iter_mut() {
                    *slot += 1;
                    if *slot == 3 {
                        *slot = 0;
                    } else {
                        break;
                    }
                }
            }
            let w = GeneralWord::new(letters.clone(), 3).unwrap();
            let pi = general_border_array(&w).unwrap();
            match classes.entry(letter_canonical(&w)) {
                std::collections::hash_map::Entry::Occupied(e) => {
                    assert_eq!(e.get(), &pi, "class of {letters:?} is not border-uniform");
                }
                std::collections::hash_map::Entry::Vacant(e) => {
                    e.insert(pi);
                }
            }
        }
    }
}
