//! Identities between the word-level operators and closures.

mod common;

use common::{lang, random_language, random_overlap, random_word, symbols, word};
use gsco_core::{
    bounded_closure_pair, bounded_closure_r, bounded_closure_u, bounded_gs, closure_member_dp, gsco_at, gsco_lang,
    gsco_lang_bounded, gsco_pair, one_gsco_at, splice_pair, ClosureConfig, Direction, FiniteLanguage, OverlapMode,
    OverlapSet, SplicingRule, Word,
};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Exact bounded-closure config: every closure word of length `n` is
/// reachable through intermediates no longer than `n` plus the longest
/// word of `l`.
fn exact_cfg(l: &FiniteLanguage, max_len: usize) -> ClosureConfig {
    ClosureConfig::new(max_len).with_cap(max_len + l.max_word_len())
}

fn common_alphabet(l1: &FiniteLanguage, l2: &FiniteLanguage) -> Option<OverlapSet> {
    OverlapSet::symbols(l1.used_symbols().intersection(&l2.used_symbols()).cloned()).ok()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn symbol_overlaps_equal_substring_overlaps(seed in any::<u64>(), k in 1usize..=3) {
        let mut r = rng(seed);
        let w1 = random_word(&mut r, 0, 10, k);
        let w2 = random_word(&mut r, 0, 10, k);
        prop_assert_eq!(
            gsco_pair(&w1, &w2, OverlapMode::Symbols),
            gsco_pair(&w1, &w2, OverlapMode::Substrings)
        );
    }

    #[test]
    fn two_directions_decompose(seed in any::<u64>(), k in 1usize..=3) {
        let mut r = rng(seed);
        let w1 = random_word(&mut r, 0, 8, k);
        let w2 = random_word(&mut r, 0, 8, k);
        let x = random_word(&mut r, 1, 2, k);
        let both = gsco_at(&w1, &w2, &x).unwrap();
        let split = one_gsco_at(&w1, &w2, &x).unwrap().union(&one_gsco_at(&w2, &w1, &x).unwrap());
        prop_assert_eq!(both, split);
    }

    #[test]
    fn crossover_rule_splices_like_crossover(seed in any::<u64>(), k in 1usize..=3) {
        let mut r = rng(seed);
        let w1 = random_word(&mut r, 0, 8, k);
        let w2 = random_word(&mut r, 0, 8, k);
        let x = random_word(&mut r, 1, 3, k);
        prop_assert_eq!(splice_pair(&w1, &w2, &SplicingRule::crossover(x.clone())), gsco_at(&w1, &w2, &x).unwrap());
    }

    #[test]
    fn bounded_join_matches_pairwise(seed in any::<u64>(), k in 1usize..=3, max_len in 0usize..8) {
        let mut r = rng(seed);
        let l1 = random_language(&mut r, 6, 6, k);
        let l2 = random_language(&mut r, 6, 6, k);
        let overlap = random_overlap(&mut r, k);
        prop_assert_eq!(
            gsco_lang_bounded(&l1, &l2, &overlap, max_len),
            gsco_lang(&l1, &l2, &overlap).truncate(max_len)
        );
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn restricted_equals_unrestricted_one_direction(seed in any::<u64>(), k in 1usize..=3) {
        let mut r = rng(seed);
        let l = random_language(&mut r, 4, 4, k);
        let overlap = random_overlap(&mut r, k);
        let cfg = exact_cfg(&l, 6).with_direction(Direction::One);
        prop_assert_eq!(
            bounded_closure_r(&l, &overlap, &cfg).unwrap(),
            bounded_closure_u(&l, &overlap, &cfg).unwrap()
        );
    }

    #[test]
    fn one_and_two_direction_closures_agree(seed in any::<u64>(), k in 1usize..=3) {
        let mut r = rng(seed);
        let l = random_language(&mut r, 4, 4, k);
        let overlap = random_overlap(&mut r, k);
        let cfg = exact_cfg(&l, 6);
        prop_assert_eq!(
            bounded_closure_u(&l, &overlap, &cfg.with_direction(Direction::One)).unwrap(),
            bounded_closure_u(&l, &overlap, &cfg.with_direction(Direction::Two)).unwrap()
        );
    }

    #[test]
    fn closures_are_monotone(seed in any::<u64>(), k in 1usize..=3) {
        let mut r = rng(seed);
        let l = random_language(&mut r, 4, 4, k);
        let extra = random_word(&mut r, 1, 4, k);
        let mut bigger = l.clone();
        bigger.insert(extra);
        let cap = 6 + bigger.max_word_len();
        let overlap = OverlapSet::All;
        let c5 = bounded_closure_u(&l, &overlap, &ClosureConfig::new(5).with_cap(cap)).unwrap();
        let c6 = bounded_closure_u(&l, &overlap, &ClosureConfig::new(6).with_cap(cap)).unwrap();
        let b6 = bounded_closure_u(&bigger, &overlap, &ClosureConfig::new(6).with_cap(cap)).unwrap();
        prop_assert!(c5.is_subset(&c6));
        prop_assert!(c6.is_subset(&b6));
    }

    #[test]
    fn dp_oracle_agrees_with_bounded_closure(seed in any::<u64>(), k in 1usize..=3) {
        let mut r = rng(seed);
        let l = random_language(&mut r, 4, 4, k);
        let overlap = random_overlap(&mut r, k);
        let closure = bounded_closure_u(&l, &overlap, &exact_cfg(&l, 6)).unwrap();
        for w in common::all_words(k, 6) {
            prop_assert_eq!(closure_member_dp(&w, &l, &overlap), closure.contains(&w), "word {}", w);
        }
    }

    #[test]
    fn pair_closure_decomposes(seed in any::<u64>(), k in 1usize..=3) {
        let mut r = rng(seed);
        let l1 = random_language(&mut r, 3, 4, k);
        let l2 = random_language(&mut r, 3, 4, k);
        let overlap = random_overlap(&mut r, k);
        let max_len = 6;
        let cap = max_len + l1.max_word_len().max(l2.max_word_len());
        let cfg = ClosureConfig::new(max_len).with_cap(cap);
        let pair = bounded_closure_pair(&l1, &l2, &overlap, &cfg).unwrap();
        let c1 = bounded_closure_u(&l1, &overlap, &ClosureConfig::new(cap).with_cap(cap)).unwrap();
        let c2 = bounded_closure_u(&l2, &overlap, &ClosureConfig::new(cap).with_cap(cap)).unwrap();
        let expected = l1.union(&l2).union(&gsco_lang_bounded(&c1, &c2, &overlap, max_len)).truncate(max_len);
        prop_assert_eq!(pair, expected);
    }

    #[test]
    fn pair_closure_equals_gs_with_common_alphabet(seed in any::<u64>(), k in 1usize..=3) {
        let mut r = rng(seed);
        let l1 = random_language(&mut r, 3, 4, k);
        let l2 = random_language(&mut r, 3, 4, k);
        let cap = 6 + l1.max_word_len().max(l2.max_word_len());
        let cfg = ClosureConfig::new(6).with_cap(cap);
        if let Some(common) = common_alphabet(&l1, &l2) {
            prop_assert_eq!(
                bounded_closure_pair(&l1, &l2, &common, &cfg).unwrap(),
                bounded_gs(&l1, &l2, &common, &cfg).unwrap()
            );
        } else {
            prop_assert_eq!(bounded_closure_pair(&l1, &l2, &OverlapSet::All, &cfg).unwrap(), l1.union(&l2).truncate(6));
        }
    }
}

#[test]
fn pair_closure_with_identical_operands_is_single_closure() {
    let cfg = ClosureConfig::new(5);
    for text in ["ab ba", "abc cab", "aab b", "abca"] {
        let l = lang(text);
        assert_eq!(
            bounded_closure_pair(&l, &l, &OverlapSet::All, &cfg).unwrap(),
            bounded_closure_u(&l, &OverlapSet::All, &cfg).unwrap(),
            "{text}"
        );
    }
}

#[test]
fn pair_closure_of_disjoint_alphabets_is_base() {
    let cfg = ClosureConfig::new(6);
    let (l1, l2) = (lang("ab aab"), lang("cd dcd"));
    assert_eq!(bounded_closure_pair(&l1, &l2, &OverlapSet::All, &cfg).unwrap(), l1.union(&l2));
    assert_eq!(bounded_gs(&l1, &l2, &OverlapSet::symbols(symbols(4)).unwrap(), &cfg).unwrap(), l1.union(&l2));
}

/// With `ALL`, the inner closure of each operand may cross at symbols the
/// operands do not share, so it can differ from generalized splicing over
/// the common alphabet: `acb` arises from crossing `ac` and `cb` at `c`.
#[test]
fn all_overlap_pair_closure_differs_from_common_alphabet_gs() {
    let cfg = ClosureConfig::new(4);
    let (l1, l2) = (lang("ac cb"), lang("a"));
    let common = common_alphabet(&l1, &l2).unwrap();
    let with_all = bounded_closure_pair(&l1, &l2, &OverlapSet::All, &cfg).unwrap();
    let gs = bounded_gs(&l1, &l2, &common, &cfg).unwrap();
    assert!(with_all.contains(&word("acb")));
    assert!(!gs.contains(&word("acb")));
    assert_eq!(bounded_closure_pair(&l1, &l2, &common, &cfg).unwrap(), gs);
}

#[test]
fn empty_word_survives_closures() {
    let l = lang("@eps ab ba");
    let cfg = ClosureConfig::new(4);
    let u = bounded_closure_u(&l, &OverlapSet::All, &cfg).unwrap();
    assert!(u.contains(&Word::empty()));
    assert!(closure_member_dp(&Word::empty(), &l, &OverlapSet::All));
    assert!(!closure_member_dp(&Word::empty(), &lang("ab"), &OverlapSet::All));
}
