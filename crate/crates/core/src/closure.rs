//! Bounded iterated crossover and splicing over finite languages.
//!
//! These are word-level fixed-point computations used as oracles for the
//! automaton constructions. Crossover can shorten words, so words are only
//! discarded once they exceed `intermediate_cap`; the reported language is
//! then filtered to `max_len`. The iterations are semi-naive: each round only
//! pairs words where at least one side is new, which yields exactly the
//! level sets of the textbook recursions.

use alloc::boxed::Box;
use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

use crate::crossover::{Direction, OverlapSet, SplicingRule};
use crate::error::Error;
use crate::symbol::Symbol;
use crate::word::{FiniteLanguage, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClosureConfig {
    /// Longest word reported.
    pub max_len: usize,
    /// Longest word kept while iterating; generated words beyond it are dropped.
    pub intermediate_cap: usize,
    /// `None` iterates until the fixed point.
    pub max_iter: Option<usize>,
    pub direction: Direction,
}

impl ClosureConfig {
    pub fn new(max_len: usize) -> Self {
        ClosureConfig { max_len, intermediate_cap: 3 * max_len, max_iter: None, direction: Direction::Two }
    }

    pub fn with_cap(mut self, intermediate_cap: usize) -> Self {
        self.intermediate_cap = intermediate_cap;
        self
    }

    pub fn with_direction(mut self, direction: Direction) -> Self {
        self.direction = direction;
        self
    }

    pub fn with_max_iter(mut self, max_iter: usize) -> Self {
        self.max_iter = Some(max_iter);
        self
    }

    fn validate(&self) -> Result<(), Error> {
        if self.intermediate_cap < self.max_len {
            return Err(Error::InvalidConfig("intermediate_cap must be at least max_len"));
        }
        Ok(())
    }

    fn check_round(&self, round: usize, words: &BTreeSet<Word>) -> Result<(), Error> {
        match self.max_iter {
            Some(max_iter) if round >= max_iter => {
                Err(Error::IterationLimit { max_iter, partial: Box::new(report(words, self.max_len)) })
            }
            _ => Ok(()),
        }
    }
}

fn report(words: &BTreeSet<Word>, max_len: usize) -> FiniteLanguage {
    words.iter().filter(|w| w.len() <= max_len).cloned().collect()
}

/// Pieces bucketed by length so products can stop at the cap.
#[derive(Clone, Default)]
struct Buckets(Vec<BTreeSet<Vec<Symbol>>>);

impl Buckets {
    fn insert(&mut self, piece: &[Symbol]) {
        if self.0.len() <= piece.len() {
            self.0.resize_with(piece.len() + 1, BTreeSet::new);
        }
        if !self.0[piece.len()].contains(piece) {
            self.0[piece.len()].insert(piece.to_vec());
        }
    }

    fn absorb(&mut self, other: &Buckets) {
        for bucket in &other.0 {
            for piece in bucket {
                self.insert(piece);
            }
        }
    }

    /// Every `left ++ right` no longer than `cap`.
    fn join(&self, right: &Buckets, cap: usize, out: &mut BTreeSet<Word>) {
        for (ll, lefts) in self.0.iter().enumerate() {
            for (rl, rights) in right.0.iter().enumerate() {
                if ll + rl > cap {
                    break;
                }
                for l in lefts {
                    for r in rights {
                        out.insert(Word::concat(&[l, r]));
                    }
                }
            }
        }
    }
}

/// A bilinear one-step operation on finite word sets, evaluated through an
/// index of the cut pieces of each operand.
trait OneStep {
    type Index: Default + Clone;

    fn add(&self, index: &mut Self::Index, word: &Word);

    fn merge(&self, into: &mut Self::Index, from: &Self::Index);

    /// Results with `first` supplying the left piece; with `Direction::Two`
    /// also the crosswise results.
    fn apply(
        &self,
        first: &Self::Index,
        second: &Self::Index,
        direction: Direction,
        cap: usize,
        out: &mut BTreeSet<Word>,
    );

    fn index_of<'a>(&self, words: impl IntoIterator<Item = &'a Word>) -> Self::Index {
        let mut index = Self::Index::default();
        for w in words {
            self.add(&mut index, w);
        }
        index
    }
}

/// Crossover at single overlap symbols: left pieces are prefixes ending
/// with the overlap symbol, right pieces the suffixes after it.
struct SymbolCrossover<'a> {
    overlap: &'a OverlapSet,
}

impl OneStep for SymbolCrossover<'_> {
    type Index = BTreeMap<Symbol, (Buckets, Buckets)>;

    fn add(&self, index: &mut Self::Index, word: &Word) {
        let s = word.symbols();
        for (i, a) in s.iter().enumerate() {
            if self.overlap.admits(a) {
                let entry = index.entry(a.clone()).or_default();
                entry.0.insert(&s[..=i]);
                entry.1.insert(&s[i + 1..]);
            }
        }
    }

    fn merge(&self, into: &mut Self::Index, from: &Self::Index) {
        for (a, (pre, suf)) in from {
            let entry = into.entry(a.clone()).or_default();
            entry.0.absorb(pre);
            entry.1.absorb(suf);
        }
    }

    fn apply(
        &self,
        first: &Self::Index,
        second: &Self::Index,
        direction: Direction,
        cap: usize,
        out: &mut BTreeSet<Word>,
    ) {
        for (a, (pre1, suf1)) in first {
            if let Some((pre2, suf2)) = second.get(a) {
                pre1.join(suf2, cap, out);
                if direction == Direction::Two {
                    pre2.join(suf1, cap, out);
                }
            }
        }
    }
}

/// One-step splicing by a finite rule set. For a rule `α#β$α'#β'` a word
/// with site `αβ` at `i` is cut after `α`; the crosswise results pair the
/// first operand's left pieces at site `αβ` with the second operand's right
/// pieces at site `α'β'`, and vice versa.
struct Splice<'a> {
    rules: &'a [SplicingRule],
}

#[derive(Clone, Default)]
struct CutPieces {
    left1: Buckets,
    right1: Buckets,
    left2: Buckets,
    right2: Buckets,
}

impl OneStep for Splice<'_> {
    type Index = Vec<CutPieces>;

    fn add(&self, index: &mut Self::Index, word: &Word) {
        if index.is_empty() {
            index.resize_with(self.rules.len(), CutPieces::default);
        }
        let s = word.symbols();
        for (rule, pieces) in self.rules.iter().zip(index.iter_mut()) {
            let site1 = Word::concat(&[rule.alpha.symbols(), rule.beta.symbols()]);
            for i in word.occurrences(site1.symbols()) {
                let cut = i + rule.alpha.len();
                pieces.left1.insert(&s[..cut]);
                pieces.right1.insert(&s[cut..]);
            }
            let site2 = Word::concat(&[rule.alpha2.symbols(), rule.beta2.symbols()]);
            for j in word.occurrences(site2.symbols()) {
                let cut = j + rule.alpha2.len();
                pieces.left2.insert(&s[..cut]);
                pieces.right2.insert(&s[cut..]);
            }
        }
    }

    fn merge(&self, into: &mut Self::Index, from: &Self::Index) {
        if into.is_empty() {
            into.resize_with(self.rules.len(), CutPieces::default);
        }
        for (a, b) in into.iter_mut().zip(from) {
            a.left1.absorb(&b.left1);
            a.right1.absorb(&b.right1);
            a.left2.absorb(&b.left2);
            a.right2.absorb(&b.right2);
        }
    }

    fn apply(
        &self,
        first: &Self::Index,
        second: &Self::Index,
        direction: Direction,
        cap: usize,
        out: &mut BTreeSet<Word>,
    ) {
        for (x, y) in first.iter().zip(second) {
            x.left1.join(&y.right2, cap, out);
            if direction == Direction::Two {
                y.left2.join(&x.right1, cap, out);
            }
        }
    }
}

/// Level-by-level unrestricted closure of a single language:
/// `U⁰ = L`, `Uⁱ⁺¹ = Uⁱ ∪ step(Uⁱ, Uⁱ)`.
struct Levels<'s, S: OneStep> {
    step: &'s S,
    cap: usize,
    direction: Direction,
    words: BTreeSet<Word>,
    index: S::Index,
    delta: S::Index,
}

impl<'s, S: OneStep> Levels<'s, S> {
    fn new(step: &'s S, base: &FiniteLanguage, cfg: &ClosureConfig) -> Self {
        let index = step.index_of(base.iter());
        Levels {
            step,
            cap: cfg.intermediate_cap,
            direction: cfg.direction,
            words: base.words().clone(),
            delta: index.clone(),
            index,
        }
    }

    /// Computes the next level; returns the index of the words it added.
    fn advance(&mut self) -> S::Index {
        let mut produced = BTreeSet::new();
        self.step.apply(&self.delta, &self.index, self.direction, self.cap, &mut produced);
        self.step.apply(&self.index, &self.delta, self.direction, self.cap, &mut produced);
        let mut delta = S::Index::default();
        for w in produced {
            if !self.words.contains(&w) {
                self.step.add(&mut delta, &w);
                self.words.insert(w);
            }
        }
        self.step.merge(&mut self.index, &delta);
        self.delta = delta.clone();
        delta
    }
}

fn fixed_point<S: OneStep>(step: &S, base: &FiniteLanguage, cfg: &ClosureConfig) -> Result<BTreeSet<Word>, Error> {
    let mut levels = Levels::new(step, base, cfg);
    let mut round = 0;
    loop {
        let before = levels.words.len();
        cfg.check_round(round, &levels.words)?;
        levels.advance();
        round += 1;
        if levels.words.len() == before {
            return Ok(levels.words);
        }
    }
}

/// Unrestricted closure: `uGSCO⁰(L) = L`, `uGSCOⁱ⁺¹(L) = uGSCOⁱ(L) ∪ GSCO(uGSCOⁱ(L))`.
///
/// Both words of a crossover come from the same set, so the one- and
/// two-directional variants produce the same levels.
pub fn bounded_closure_u(l: &FiniteLanguage, r: &OverlapSet, cfg: &ClosureConfig) -> Result<FiniteLanguage, Error> {
    cfg.validate()?;
    let step = SymbolCrossover { overlap: r };
    Ok(report(&fixed_point(&step, l, cfg)?, cfg.max_len))
}

/// Restricted closure: `rGSCO⁰(L) = L`, `rGSCOⁱ⁺¹(L) = rGSCO(rGSCOⁱ(L), L)`,
/// reported as the union of all iterates.
pub fn bounded_closure_r(l: &FiniteLanguage, r: &OverlapSet, cfg: &ClosureConfig) -> Result<FiniteLanguage, Error> {
    cfg.validate()?;
    let step = SymbolCrossover { overlap: r };
    let base = step.index_of(l.iter());
    let mut words: BTreeSet<Word> = l.words().clone();
    let mut frontier = base.clone();
    let mut round = 0;
    loop {
        cfg.check_round(round, &words)?;
        round += 1;
        let mut produced = BTreeSet::new();
        step.apply(&frontier, &base, cfg.direction, cfg.intermediate_cap, &mut produced);
        let fresh: Vec<Word> = produced.into_iter().filter(|w| !words.contains(w)).collect();
        if fresh.is_empty() {
            return Ok(report(&words, cfg.max_len));
        }
        frontier = step.index_of(fresh.iter());
        words.extend(fresh);
    }
}

/// Shared recursion of the two-language closures:
/// `P⁰ = L1 ∪ L2`, `Pⁱ⁺¹ = Pⁱ ∪ step(Uⁱ(L1), Uⁱ(L2))`, where `Uⁱ` are the
/// single-language levels of the same step.
fn pair_fixed_point<S: OneStep>(
    step: &S,
    l1: &FiniteLanguage,
    l2: &FiniteLanguage,
    cfg: &ClosureConfig,
) -> Result<FiniteLanguage, Error> {
    cfg.validate()?;
    let mut left = Levels::new(step, l1, cfg);
    let mut right = Levels::new(step, l2, cfg);
    let mut words: BTreeSet<Word> = l1.words().union(l2.words()).cloned().collect();
    step.apply(&left.index, &right.index, cfg.direction, cfg.intermediate_cap, &mut words);
    let mut round = 1;
    loop {
        let (n1, n2) = (left.words.len(), right.words.len());
        cfg.check_round(round, &words)?;
        round += 1;
        let d1 = left.advance();
        let d2 = right.advance();
        if left.words.len() == n1 && right.words.len() == n2 {
            return Ok(report(&words, cfg.max_len));
        }
        step.apply(&d1, &right.index, cfg.direction, cfg.intermediate_cap, &mut words);
        step.apply(&left.index, &d2, cfg.direction, cfg.intermediate_cap, &mut words);
    }
}

/// Iterated crossover of two languages:
/// `GSCO⁰ = L1 ∪ L2`, `GSCOⁱ⁺¹ = GSCOⁱ ∪ GSCO(GSCOⁱ(L1), GSCOⁱ(L2))`.
pub fn bounded_closure_pair(
    l1: &FiniteLanguage,
    l2: &FiniteLanguage,
    r: &OverlapSet,
    cfg: &ClosureConfig,
) -> Result<FiniteLanguage, Error> {
    pair_fixed_point(&SymbolCrossover { overlap: r }, l1, l2, cfg)
}

/// Iterated generalized splicing with the rules `{x#$x# : x ∈ r}`:
/// `σ⁰ = L1 ∪ L2`, `σⁱ⁺¹ = σⁱ ∪ σ(σⁱ(L1), σⁱ(L2))`.
pub fn bounded_gs(
    l1: &FiniteLanguage,
    l2: &FiniteLanguage,
    r: &OverlapSet,
    cfg: &ClosureConfig,
) -> Result<FiniteLanguage, Error> {
    let rules: Vec<SplicingRule> =
        r.explicit()?.iter().map(|a| SplicingRule::crossover(Word::new(vec![a.clone()]))).collect();
    bounded_splicing(l1, l2, &rules, cfg)
}

/// Iterated generalized splicing with an arbitrary finite rule set.
pub fn bounded_splicing(
    l1: &FiniteLanguage,
    l2: &FiniteLanguage,
    rules: &[SplicingRule],
    cfg: &ClosureConfig,
) -> Result<FiniteLanguage, Error> {
    pair_fixed_point(&Splice { rules }, l1, l2, cfg)
}

/// Decides whether `w` belongs to the full (unbounded) crossover closure of
/// `l` over single-symbol overlaps. See [`StitchIndex`] for repeated
/// queries against the same language.
pub fn closure_member_dp(w: &Word, l: &FiniteLanguage, r: &OverlapSet) -> bool {
    StitchIndex::new(l, r).contains(w)
}

/// Prefixes, factors and suffixes of a finite language, indexed for
/// closure membership queries.
///
/// A closure word is either in `l` or can be cut at positions `j1 < … < jk`
/// holding overlap symbols such that `w[..=j1]` is a prefix of a word of
/// `l`, every `w[ji..=ji+1]` is a factor of a word of `l`, and `w[jk..]` is a
/// suffix of a word of `l`. Reachability of cut positions is computed left to
/// right.
pub struct StitchIndex<'a> {
    language: &'a FiniteLanguage,
    overlap: &'a OverlapSet,
    prefixes: BTreeSet<&'a [Symbol]>,
    suffixes: BTreeSet<&'a [Symbol]>,
    factors: BTreeSet<&'a [Symbol]>,
}

impl<'a> StitchIndex<'a> {
    pub fn new(l: &'a FiniteLanguage, r: &'a OverlapSet) -> Self {
        let mut prefixes = BTreeSet::new();
        let mut suffixes = BTreeSet::new();
        let mut factors = BTreeSet::new();
        for word in l.iter() {
            let s = word.symbols();
            for i in 0..=s.len() {
                prefixes.insert(&s[..i]);
                suffixes.insert(&s[i..]);
                for j in i..=s.len() {
                    factors.insert(&s[i..j]);
                }
            }
        }
        StitchIndex { language: l, overlap: r, prefixes, suffixes, factors }
    }

    pub fn contains(&self, w: &Word) -> bool {
        if self.language.contains(w) {
            return true;
        }
        let s = w.symbols();
        let n = s.len();
        let cut: Vec<bool> = s.iter().map(|a| self.overlap.admits(a)).collect();
        let mut reach: Vec<bool> = (0..n).map(|j| cut[j] && self.prefixes.contains(&s[..=j])).collect();
        for j in 0..n {
            if !reach[j] {
                continue;
            }
            if self.suffixes.contains(&s[j..]) {
                return true;
            }
            for k in j + 1..n {
                if cut[k] && !reach[k] && self.factors.contains(&s[j..=k]) {
                    reach[k] = true;
                }
            }
        }
        false
    }
}
