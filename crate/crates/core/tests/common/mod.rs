#![allow(dead_code)]

use gsco_core::{Alphabet, FiniteLanguage, Nfa, OverlapSet, Symbol, Transition, Word};
use rand::seq::SliceRandom;
use rand::Rng;

pub const LETTERS: [&str; 4] = ["a", "b", "c", "d"];

pub fn symbols(k: usize) -> Vec<Symbol> {
    LETTERS[..k].iter().map(|s| Symbol::new(s).unwrap()).collect()
}

pub fn lang(text: &str) -> FiniteLanguage {
    FiniteLanguage::parse(text).unwrap()
}

pub fn word(text: &str) -> Word {
    text.parse().unwrap()
}

/// Random trimmed automaton with a nonempty language, up to `max_states`
/// states over the first `k` letters.
pub fn random_nfa<R: Rng>(rng: &mut R, max_states: usize, k: usize) -> Nfa {
    let syms = symbols(k);
    let alphabet: Alphabet = syms.iter().cloned().collect();
    loop {
        let n = rng.gen_range(1..=max_states);
        let mut transitions = Vec::new();
        for p in 0..n {
            for q in 0..n {
                for s in &syms {
                    if rng.gen_bool(0.25) {
                        transitions.push(Transition::symbol(p, s.clone(), q));
                    }
                }
                if p != q && rng.gen_bool(0.08) {
                    transitions.push(Transition::epsilon(p, q));
                }
            }
        }
        let finals: Vec<usize> = (0..n).filter(|_| rng.gen_bool(0.4)).collect();
        let m = Nfa::new(n, alphabet.clone(), transitions, 0, finals).unwrap().trim();
        if !m.is_empty() {
            return m;
        }
    }
}

pub fn random_word<R: Rng>(rng: &mut R, min_len: usize, max_len: usize, k: usize) -> Word {
    let syms = symbols(k);
    let n = rng.gen_range(min_len..=max_len);
    Word::new((0..n).map(|_| syms.choose(rng).unwrap().clone()).collect())
}

/// Random finite language of 1..=`max_words` nonempty words.
pub fn random_language<R: Rng>(rng: &mut R, max_words: usize, max_len: usize, k: usize) -> FiniteLanguage {
    let count = rng.gen_range(1..=max_words);
    (0..count).map(|_| random_word(rng, 1, max_len, k)).collect()
}

pub fn random_overlap<R: Rng>(rng: &mut R, k: usize) -> OverlapSet {
    if rng.gen_bool(0.3) {
        return OverlapSet::All;
    }
    let syms = symbols(k);
    loop {
        let chosen: Vec<Symbol> = syms.iter().filter(|_| rng.gen_bool(0.5)).cloned().collect();
        if !chosen.is_empty() {
            return OverlapSet::symbols(chosen).unwrap();
        }
    }
}

/// All words over the first `k` letters up to length `max_len`.
pub fn all_words(k: usize, max_len: usize) -> Vec<Word> {
    let syms = symbols(k);
    let mut out = vec![Word::empty()];
    let mut layer = vec![Vec::<Symbol>::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &layer {
            for s in &syms {
                let mut v = w.clone();
                v.push(s.clone());
                next.push(v);
            }
        }
        out.extend(next.iter().cloned().map(Word::new));
        layer = next;
    }
    out
}
