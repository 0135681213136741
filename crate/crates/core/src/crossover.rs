//! Word-level crossover and splicing.
//!
//! Crossing `w1 = u1·x·v1` with `w2 = u2·x·v2` at a nonempty factor `x`
//! yields `u1·x·v2` and `u2·x·v1`, taken over every pair of occurrences of
//! `x`. The one-directional variant keeps only `u1·x·v2`.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use crate::error::Error;
use crate::symbol::{Alphabet, Symbol};
use crate::word::{FiniteLanguage, Word};

/// The permitted overlap symbols of a crossover.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OverlapSet {
    /// Every symbol the two crossed words have in common.
    All,
    Symbols(BTreeSet<Symbol>),
}

impl OverlapSet {
    pub fn symbols<I: IntoIterator<Item = Symbol>>(symbols: I) -> Result<Self, Error> {
        let set: BTreeSet<Symbol> = symbols.into_iter().collect();
        if set.is_empty() {
            return Err(Error::EmptyOverlapSet);
        }
        Ok(OverlapSet::Symbols(set))
    }

    pub fn admits(&self, symbol: &Symbol) -> bool {
        match self {
            OverlapSet::All => true,
            OverlapSet::Symbols(set) => set.contains(symbol),
        }
    }

    /// Overlap symbols that can actually apply among `available`.
    pub fn resolve(&self, available: &Alphabet) -> Alphabet {
        match self {
            OverlapSet::All => available.clone(),
            OverlapSet::Symbols(set) => set.intersection(available).cloned().collect(),
        }
    }

    /// The explicit symbol set, or an error for `All`.
    pub fn explicit(&self) -> Result<&BTreeSet<Symbol>, Error> {
        match self {
            OverlapSet::All => Err(Error::ExplicitOverlapRequired),
            OverlapSet::Symbols(set) => Ok(set),
        }
    }
}

/// Which crossovers to keep from each overlap.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Direction {
    /// Only `u1·x·v2`: prefix of the first word, suffix of the second.
    One,
    /// Both `u1·x·v2` and `u2·x·v1`.
    #[default]
    Two,
}

/// Overlap family used by [`gsco_pair`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OverlapMode {
    /// Single symbols shared by both words.
    Symbols,
    /// Every nonempty common factor.
    Substrings,
}

fn cross(w1: &Word, w2: &Word, x: &[Symbol], direction: Direction, out: &mut FiniteLanguage) {
    let n = x.len();
    let (a, b) = (w1.symbols(), w2.symbols());
    let right: Vec<usize> = w2.occurrences(x).collect();
    for i in w1.occurrences(x) {
        for &j in &right {
            out.insert(Word::concat(&[&a[..i + n], &b[j + n..]]));
            if direction == Direction::Two {
                out.insert(Word::concat(&[&b[..j + n], &a[i + n..]]));
            }
        }
    }
}

/// Both crossover products over every pair of occurrences of `x`.
pub fn gsco_at(w1: &Word, w2: &Word, x: &Word) -> Result<FiniteLanguage, Error> {
    if x.is_empty() {
        return Err(Error::EmptyOverlap);
    }
    let mut out = FiniteLanguage::new();
    cross(w1, w2, x.symbols(), Direction::Two, &mut out);
    Ok(out)
}

/// Only the prefix-of-`w1`, suffix-of-`w2` products.
pub fn one_gsco_at(w1: &Word, w2: &Word, x: &Word) -> Result<FiniteLanguage, Error> {
    if x.is_empty() {
        return Err(Error::EmptyOverlap);
    }
    let mut out = FiniteLanguage::new();
    cross(w1, w2, x.symbols(), Direction::One, &mut out);
    Ok(out)
}

/// All nonempty factors shared by both words.
pub fn common_factors(w1: &Word, w2: &Word) -> BTreeSet<Word> {
    let a = w1.symbols();
    let mut out = BTreeSet::new();
    for i in 0..a.len() {
        for j in i + 1..=a.len() {
            let factor = &a[i..j];
            if w2.occurrences(factor).next().is_some() {
                out.insert(Word::from(factor.to_vec()));
            }
        }
    }
    out
}

/// Crossover of two words over every admissible overlap of the chosen family.
pub fn gsco_pair(w1: &Word, w2: &Word, mode: OverlapMode) -> FiniteLanguage {
    let mut out = FiniteLanguage::new();
    match mode {
        OverlapMode::Symbols => {
            for a in w1.alphabet().intersection(&w2.alphabet()) {
                cross(w1, w2, core::slice::from_ref(a), Direction::Two, &mut out);
            }
        }
        OverlapMode::Substrings => {
            for x in common_factors(w1, w2) {
                cross(w1, w2, x.symbols(), Direction::Two, &mut out);
            }
        }
    }
    out
}

/// Crossover of two words restricted to the overlap set `r`.
pub fn gsco_words(w1: &Word, w2: &Word, r: &OverlapSet, direction: Direction, out: &mut FiniteLanguage) {
    let shared = w1.alphabet();
    for a in shared.iter().filter(|a| r.admits(a) && w2.contains_symbol(a)) {
        cross(w1, w2, core::slice::from_ref(a), direction, out);
    }
}

/// Union of the crossovers of every `w1 ∈ l1` with every `w2 ∈ l2`.
pub fn gsco_lang(l1: &FiniteLanguage, l2: &FiniteLanguage, r: &OverlapSet) -> FiniteLanguage {
    gsco_lang_directed(l1, l2, r, Direction::Two)
}

pub fn gsco_lang_directed(
    l1: &FiniteLanguage,
    l2: &FiniteLanguage,
    r: &OverlapSet,
    direction: Direction,
) -> FiniteLanguage {
    let mut out = FiniteLanguage::new();
    for w1 in l1.iter() {
        for w2 in l2.iter() {
            gsco_words(w1, w2, r, direction, &mut out);
        }
    }
    out
}

/// `gsco_lang(l1, l2, r)` restricted to words of length at most `max_len`.
///
/// The words of `l1` and `l2` are chosen independently, so the result is the
/// join of the distinct prefixes `u·a` of `l1` with the distinct suffixes
/// `a·v` of `l2` (and crosswise); this avoids the pairwise loop on large
/// truncated languages.
pub fn gsco_lang_bounded(l1: &FiniteLanguage, l2: &FiniteLanguage, r: &OverlapSet, max_len: usize) -> FiniteLanguage {
    use alloc::collections::BTreeMap;
    type Pieces<'a> = BTreeMap<&'a Symbol, (BTreeSet<&'a [Symbol]>, BTreeSet<&'a [Symbol]>)>;
    fn pieces<'a>(l: &'a FiniteLanguage, r: &OverlapSet, max_len: usize) -> Pieces<'a> {
        let mut map: Pieces<'a> = BTreeMap::new();
        for w in l.iter() {
            let s = w.symbols();
            for (i, a) in s.iter().enumerate() {
                if r.admits(a) {
                    let entry = map.entry(a).or_default();
                    if i < max_len {
                        entry.0.insert(&s[..=i]);
                    }
                    if s.len() - i <= max_len {
                        entry.1.insert(&s[i + 1..]);
                    }
                }
            }
        }
        map
    }
    let (p1, p2) = (pieces(l1, r, max_len), pieces(l2, r, max_len));
    let mut out = FiniteLanguage::new();
    for (a, (pre1, suf1)) in &p1 {
        if let Some((pre2, suf2)) = p2.get(a) {
            for (pre, suf) in [(pre1, suf2), (pre2, suf1)] {
                for p in pre {
                    for s in suf.iter().filter(|s| p.len() + s.len() <= max_len) {
                        out.insert(Word::concat(&[p, s]));
                    }
                }
            }
        }
    }
    out
}

/// A splicing rule `α#β$α'#β'`: the first word is cut between `α` and `β`,
/// the second between `α'` and `β'`, and the pieces recombine crosswise.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SplicingRule {
    pub alpha: Word,
    pub beta: Word,
    pub alpha2: Word,
    pub beta2: Word,
}

impl SplicingRule {
    pub fn new(alpha: Word, beta: Word, alpha2: Word, beta2: Word) -> Self {
        SplicingRule { alpha, beta, alpha2, beta2 }
    }

    /// The rule `x#$x#`, which splices exactly like crossover at `x`.
    pub fn crossover(x: Word) -> Self {
        SplicingRule { alpha: x.clone(), beta: Word::empty(), alpha2: x, beta2: Word::empty() }
    }

    /// `Some(x)` when the rule has the form `x#$x#`.
    pub fn crossover_factor(&self) -> Option<&Word> {
        (self.beta.is_empty() && self.beta2.is_empty() && self.alpha == self.alpha2 && !self.alpha.is_empty())
            .then_some(&self.alpha)
    }
}

impl fmt::Display for SplicingRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let part = |w: &Word| if w.is_empty() { alloc::string::String::new() } else { alloc::format!("{w}") };
        write!(f, "{}#{}${}#{}", part(&self.alpha), part(&self.beta), part(&self.alpha2), part(&self.beta2))
    }
}

/// One-step splicing of `w1` and `w2` by `rule`, over every pair of sites.
pub fn splice_pair(w1: &Word, w2: &Word, rule: &SplicingRule) -> FiniteLanguage {
    let site1 = Word::concat(&[rule.alpha.symbols(), rule.beta.symbols()]);
    let site2 = Word::concat(&[rule.alpha2.symbols(), rule.beta2.symbols()]);
    let (a, b) = (w1.symbols(), w2.symbols());
    let (cut1, cut2) = (rule.alpha.len(), rule.alpha2.len());
    let sites2: Vec<usize> = w2.occurrences(site2.symbols()).collect();
    let mut out = FiniteLanguage::new();
    for i in w1.occurrences(site1.symbols()) {
        for &j in &sites2 {
            out.insert(Word::concat(&[&a[..i + cut1], &b[j + cut2..]]));
            out.insert(Word::concat(&[&b[..j + cut2], &a[i + cut1..]]));
        }
    }
    out
}
