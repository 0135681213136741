#![allow(dead_code)]

use std::collections::BTreeSet;

use gsco::Regex;
use gsco_core::{Alphabet, FiniteLanguage, Nfa, OverlapSet, Symbol, Transition, Word};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::Rng;

pub const LETTERS: [char; 4] = ['a', 'b', 'c', 'd'];

pub fn symbols(k: usize) -> Vec<Symbol> {
    LETTERS[..k].iter().map(|&c| Symbol::from_char(c).unwrap()).collect()
}

pub fn lang(text: &str) -> FiniteLanguage {
    FiniteLanguage::parse(text).unwrap()
}

pub fn word(text: &str) -> Word {
    text.parse().unwrap()
}

/// Random automaton over the first `k` letters with `n` states, before
/// trimming. `density` is the chance of each symbol transition.
pub fn raw_nfa<R: Rng>(rng: &mut R, n: usize, k: usize, density: f64) -> Nfa {
    let syms = symbols(k);
    let alphabet: Alphabet = syms.iter().cloned().collect();
    let mut transitions = Vec::new();
    for p in 0..n {
        for q in 0..n {
            for s in &syms {
                if rng.gen_bool(density) {
                    transitions.push(Transition::symbol(p, s.clone(), q));
                }
            }
            if p != q && rng.gen_bool(density / 3.0) {
                transitions.push(Transition::epsilon(p, q));
            }
        }
    }
    let finals: Vec<usize> = (0..n).filter(|_| rng.gen_bool(0.4)).collect();
    Nfa::new(n, alphabet, transitions, 0, finals).unwrap()
}

/// Random trimmed automaton with a nonempty language and at most
/// `max_states` states.
pub fn random_nfa<R: Rng>(rng: &mut R, max_states: usize, k: usize) -> Nfa {
    loop {
        let n = rng.gen_range(1..=max_states);
        let m = raw_nfa(rng, n, k, 0.25).trim();
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

/// Regex trees over the first `k` letters, not necessarily normalized.
pub fn arb_regex(k: usize) -> impl Strategy<Value = Regex> {
    let leaf = prop_oneof![
        1 => Just(Regex::Empty),
        2 => Just(Regex::Epsilon),
        8 => proptest::sample::select(LETTERS[..k].to_vec()).prop_map(Regex::literal),
    ];
    leaf.prop_recursive(4, 24, 3, |inner| {
        prop_oneof![
            proptest::collection::vec(inner.clone(), 0..4).prop_map(Regex::Concat),
            proptest::collection::vec(inner.clone(), 0..4).prop_map(Regex::Alt),
            inner.clone().prop_map(|r| Regex::Star(Box::new(r))),
            inner.clone().prop_map(|r| Regex::Plus(Box::new(r))),
            inner.prop_map(|r| Regex::Optional(Box::new(r))),
        ]
    })
}

/// Direct AST matcher: the set of positions where a match of `r` starting
/// at `from` can end.
pub fn match_ends(r: &Regex, w: &[Symbol], from: usize) -> BTreeSet<usize> {
    match r {
        Regex::Empty => BTreeSet::new(),
        Regex::Epsilon => BTreeSet::from([from]),
        Regex::Literal(s) => {
            if w.get(from) == Some(s) {
                BTreeSet::from([from + 1])
            } else {
                BTreeSet::new()
            }
        }
        Regex::Concat(items) => {
            let mut current = BTreeSet::from([from]);
            for item in items {
                current = current.iter().flat_map(|&i| match_ends(item, w, i)).collect();
            }
            current
        }
        Regex::Alt(items) => items.iter().flat_map(|item| match_ends(item, w, from)).collect(),
        Regex::Optional(inner) => {
            let mut out = match_ends(inner, w, from);
            out.insert(from);
            out
        }
        Regex::Star(inner) | Regex::Plus(inner) => {
            let mut reached = if matches!(r, Regex::Star(_)) { BTreeSet::from([from]) } else { BTreeSet::new() };
            let mut frontier = match_ends(inner, w, from);
            while !frontier.is_empty() {
                let fresh: Vec<usize> = frontier.into_iter().filter(|i| reached.insert(*i)).collect();
                frontier = fresh.iter().flat_map(|&i| match_ends(inner, w, i)).collect();
            }
            reached
        }
    }
}

pub fn regex_matches(r: &Regex, w: &Word) -> bool {
    match_ends(r, w.symbols(), 0).contains(&w.len())
}
