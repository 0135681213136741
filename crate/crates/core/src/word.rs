use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::str::FromStr;

use crate::error::Error;
use crate::symbol::{Alphabet, Symbol};

/// Spelling of the empty word in every text surface.
pub const EPSILON_TOKEN: &str = "@eps";

/// A finite sequence of symbols, ordered by length and then lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(Vec<Symbol>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn new(symbols: Vec<Symbol>) -> Self {
        Word(symbols)
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(parts: &[&[Symbol]]) -> Self {
        let mut out = Vec::with_capacity(parts.iter().map(|p| p.len()).sum());
        for part in parts {
            out.extend_from_slice(part);
        }
        Word(out)
    }

    pub fn alphabet(&self) -> Alphabet {
        self.0.iter().cloned().collect()
    }

    pub fn contains_symbol(&self, symbol: &Symbol) -> bool {
        self.0.contains(symbol)
    }

    /// Every position at which `factor` occurs.
    pub fn occurrences<'a>(&'a self, factor: &'a [Symbol]) -> impl Iterator<Item = usize> + 'a {
        let n = factor.len();
        (0..=self.0.len().saturating_sub(n)).filter(move |&i| n <= self.0.len() && &self.0[i..i + n] == factor)
    }
}

impl From<Vec<Symbol>> for Word {
    fn from(symbols: Vec<Symbol>) -> Self {
        Word(symbols)
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// `@eps` is the empty word; text containing whitespace is a list of
/// symbol tokens; anything else is read one character per symbol.
impl FromStr for Word {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self, Error> {
        let text = text.trim();
        if text == EPSILON_TOKEN {
            return Ok(Word::empty());
        }
        if text.is_empty() {
            return Err(Error::InvalidSymbol(alloc::string::String::new()));
        }
        if text.contains(char::is_whitespace) {
            text.split_whitespace().map(Symbol::new).collect::<Result<_, _>>().map(Word)
        } else {
            text.chars().map(Symbol::from_char).collect::<Result<_, _>>().map(Word)
        }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str(EPSILON_TOKEN);
        }
        let spaced = !self.0.iter().all(Symbol::is_single_char);
        for (i, s) in self.0.iter().enumerate() {
            if spaced && i > 0 {
                f.write_str(" ")?;
            }
            f.write_str(s.as_str())?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "\"{self}\"")
    }
}

/// A finite set of words over a declared alphabet.
///
/// Iteration is in canonical length-then-lexicographic order. Equality
/// compares the word sets only.
#[derive(Clone, Default)]
pub struct FiniteLanguage {
    words: BTreeSet<Word>,
    alphabet: Alphabet,
}

impl FiniteLanguage {
    pub fn new() -> Self {
        Self::default()
    }

    /// Validates that every word is spelled over `alphabet`.
    pub fn with_alphabet<I>(alphabet: Alphabet, words: I) -> Result<Self, Error>
    where
        I: IntoIterator<Item = Word>,
    {
        let mut lang = FiniteLanguage { words: BTreeSet::new(), alphabet };
        for w in words {
            if let Some(s) = w.symbols().iter().find(|s| !lang.alphabet.contains(*s)) {
                return Err(Error::SymbolNotInAlphabet(s.clone()));
            }
            lang.words.insert(w);
        }
        Ok(lang)
    }

    /// Parses whitespace-separated words, e.g. `"ab ba @eps"`.
    pub fn parse(text: &str) -> Result<Self, Error> {
        text.split_whitespace().map(Word::from_str).collect()
    }

    pub fn insert(&mut self, word: Word) -> bool {
        self.alphabet.extend(word.symbols().iter().cloned());
        self.words.insert(word)
    }

    pub fn contains(&self, word: &Word) -> bool {
        self.words.contains(word)
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = &Word> + ExactSizeIterator {
        self.words.iter()
    }

    pub fn words(&self) -> &BTreeSet<Word> {
        &self.words
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    /// Symbols that actually occur in some word.
    pub fn used_symbols(&self) -> Alphabet {
        self.words.iter().flat_map(|w| w.symbols().iter().cloned()).collect()
    }

    pub fn max_word_len(&self) -> usize {
        self.words.iter().next_back().map_or(0, Word::len)
    }

    pub fn truncate(&self, max_len: usize) -> Self {
        FiniteLanguage {
            words: self.words.iter().filter(|w| w.len() <= max_len).cloned().collect(),
            alphabet: self.alphabet.clone(),
        }
    }

    pub fn union(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.extend_from(other);
        out
    }

    pub fn extend_from(&mut self, other: &Self) {
        self.alphabet.extend(other.alphabet.iter().cloned());
        self.words.extend(other.words.iter().cloned());
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.words.is_subset(&other.words)
    }

    pub fn difference(&self, other: &Self) -> Self {
        FiniteLanguage {
            words: self.words.difference(&other.words).cloned().collect(),
            alphabet: self.alphabet.clone(),
        }
    }
}

impl PartialEq for FiniteLanguage {
    fn eq(&self, other: &Self) -> bool {
        self.words == other.words
    }
}

impl Eq for FiniteLanguage {}

impl FromIterator<Word> for FiniteLanguage {
    fn from_iter<I: IntoIterator<Item = Word>>(iter: I) -> Self {
        let mut lang = FiniteLanguage::new();
        for w in iter {
            lang.insert(w);
        }
        lang
    }
}

impl Extend<Word> for FiniteLanguage {
    fn extend<I: IntoIterator<Item = Word>>(&mut self, iter: I) {
        for w in iter {
            self.insert(w);
        }
    }
}

impl IntoIterator for FiniteLanguage {
    type Item = Word;
    type IntoIter = alloc::collections::btree_set::IntoIter<Word>;

    fn into_iter(self) -> Self::IntoIter {
        self.words.into_iter()
    }
}

impl fmt::Debug for FiniteLanguage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.words.iter()).finish()
    }
}
