//! Nondeterministic automata with ε-moves.
//!
//! An [`Nfa`] has exactly one start state; several entry points are
//! expressed by ε fan-out from that state. Transitions are kept sorted by
//! `(source, label, target)` with ε ordered before every symbol, which is
//! also the order the text format writes them in.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;
use crate::limits::Limits;
use crate::symbol::{Alphabet, Symbol};
use crate::word::{FiniteLanguage, Word};

/// Transition label; `None` is ε.
pub type Label = Option<Symbol>;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Transition {
    pub source: usize,
    pub label: Label,
    pub target: usize,
}

impl Transition {
    pub fn new(source: usize, label: Label, target: usize) -> Self {
        Transition { source, label, target }
    }

    pub fn symbol(source: usize, symbol: Symbol, target: usize) -> Self {
        Transition { source, label: Some(symbol), target }
    }

    pub fn epsilon(source: usize, target: usize) -> Self {
        Transition { source, label: None, target }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Nfa {
    state_count: usize,
    alphabet: Alphabet,
    transitions: Vec<Transition>,
    start: usize,
    finals: BTreeSet<usize>,
}

impl Nfa {
    /// Validates and builds an automaton. Duplicate transitions are dropped.
    pub fn new<T, F>(
        state_count: usize,
        alphabet: Alphabet,
        transitions: T,
        start: usize,
        finals: F,
    ) -> Result<Self, Error>
    where
        T: IntoIterator<Item = Transition>,
        F: IntoIterator<Item = usize>,
    {
        let in_range = |state: usize| {
            if state < state_count {
                Ok(state)
            } else {
                Err(Error::StateOutOfRange { state, state_count })
            }
        };
        in_range(start)?;
        let finals = finals.into_iter().map(in_range).collect::<Result<BTreeSet<_>, _>>()?;
        let mut transitions: Vec<Transition> = transitions.into_iter().collect();
        for t in &transitions {
            in_range(t.source)?;
            in_range(t.target)?;
            if let Some(s) = &t.label {
                if !alphabet.contains(s) {
                    return Err(Error::SymbolNotInAlphabet(s.clone()));
                }
            }
        }
        transitions.sort_unstable();
        transitions.dedup();
        Ok(Nfa { state_count, alphabet, transitions, start, finals })
    }

    /// Internal constructor for automata built from already valid parts.
    pub(crate) fn from_parts(
        state_count: usize,
        alphabet: Alphabet,
        mut transitions: Vec<Transition>,
        start: usize,
        finals: BTreeSet<usize>,
    ) -> Self {
        debug_assert!(start < state_count);
        debug_assert!(transitions.iter().all(|t| t.source < state_count && t.target < state_count));
        transitions.sort_unstable();
        transitions.dedup();
        Nfa { state_count, alphabet, transitions, start, finals }
    }

    /// Canonical automaton for the empty language: one non-final state.
    pub fn empty(alphabet: Alphabet) -> Self {
        Nfa { state_count: 1, alphabet, transitions: Vec::new(), start: 0, finals: BTreeSet::new() }
    }

    /// Automaton accepting exactly `{ε}`.
    pub fn epsilon(alphabet: Alphabet) -> Self {
        Nfa { state_count: 1, alphabet, transitions: Vec::new(), start: 0, finals: BTreeSet::from([0]) }
    }

    /// Trie-shaped automaton accepting exactly the given words.
    pub fn from_words(language: &FiniteLanguage) -> Self {
        let mut alphabet = language.alphabet().clone();
        alphabet.extend(language.used_symbols());
        let mut transitions: Vec<Transition> = Vec::new();
        let mut children: Vec<Vec<(Symbol, usize)>> = vec![Vec::new()];
        let mut finals = BTreeSet::new();
        for word in language.iter() {
            let mut state = 0;
            for s in word.symbols() {
                state = match children[state].iter().find(|(c, _)| c == s) {
                    Some(&(_, next)) => next,
                    None => {
                        let next = children.len();
                        children.push(Vec::new());
                        children[state].push((s.clone(), next));
                        transitions.push(Transition::symbol(state, s.clone(), next));
                        next
                    }
                };
            }
            finals.insert(state);
        }
        Nfa::from_parts(children.len(), alphabet, transitions, 0, finals)
    }

    pub fn state_count(&self) -> usize {
        self.state_count
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn transitions(&self) -> &[Transition] {
        &self.transitions
    }

    pub fn start(&self) -> usize {
        self.start
    }

    pub fn finals(&self) -> &BTreeSet<usize> {
        &self.finals
    }

    /// Same automaton over a larger alphabet.
    pub fn with_alphabet(mut self, extra: &Alphabet) -> Self {
        self.alphabet.extend(extra.iter().cloned());
        self
    }

    /// Symbols that label at least one transition.
    pub fn used_symbols(&self) -> Alphabet {
        self.transitions.iter().filter_map(|t| t.label.clone()).collect()
    }

    pub fn transitions_on<'a>(&'a self, symbol: &'a Symbol) -> impl Iterator<Item = &'a Transition> + 'a {
        self.transitions.iter().filter(move |t| t.label.as_ref() == Some(symbol))
    }

    /// Decides `word ∈ L(self)` by ε-closure simulation. Symbols outside the
    /// alphabet simply make the word rejected.
    pub fn member(&self, word: &Word) -> bool {
        let graph = Graph::new(self, &self.alphabet);
        let mut current = graph.closure(vec![self.start]);
        for s in word.symbols() {
            let Some(sym) = graph.index_of(s) else {
                return false;
            };
            current = graph.step(&current, sym);
            if current.is_empty() {
                return false;
            }
        }
        current.iter().any(|q| self.finals.contains(q))
    }

    /// True iff no final state is reachable from the start.
    pub fn is_empty(&self) -> bool {
        let reach = reachable(self.state_count, self.start, self.transitions.iter().map(|t| (t.source, t.target)));
        !self.finals.iter().any(|&f| reach[f])
    }

    /// All accepted words of length at most `max_len`, with the default word cap.
    pub fn enumerate(&self, max_len: usize) -> Result<FiniteLanguage, Error> {
        self.enumerate_with(max_len, &Limits::default())
    }

    pub fn enumerate_with(&self, max_len: usize, limits: &Limits) -> Result<FiniteLanguage, Error> {
        let graph = Graph::new(self, &self.alphabet);
        let distance = graph.distance_to_final(&self.finals);
        let mut out = FiniteLanguage::with_alphabet(self.alphabet.clone(), []).expect("no words");
        let start = graph.closure(vec![self.start]);
        let mut prefix = Vec::new();
        let mut search = Enumeration {
            graph: &graph,
            finals: &self.finals,
            distance: &distance,
            max_len,
            cap: limits.max_words,
            out: &mut out,
        };
        if min_distance(&start, &distance) <= max_len {
            search.visit(&start, &mut prefix)?;
        }
        Ok(out)
    }

    /// Keeps only states that are both accessible and co-accessible.
    pub fn trim(&self) -> Nfa {
        self.trim_with_map().0
    }

    /// Trimmed automaton together with the old-to-new state map.
    pub(crate) fn trim_with_map(&self) -> (Nfa, Vec<Option<usize>>) {
        let forward = reachable(self.state_count, self.start, self.transitions.iter().map(|t| (t.source, t.target)));
        let mut backward = vec![false; self.state_count];
        let mut preds: Vec<Vec<usize>> = vec![Vec::new(); self.state_count];
        for t in &self.transitions {
            preds[t.target].push(t.source);
        }
        let mut queue: VecDeque<usize> = self.finals.iter().copied().collect();
        for &f in &self.finals {
            backward[f] = true;
        }
        while let Some(q) = queue.pop_front() {
            for &p in &preds[q] {
                if !backward[p] {
                    backward[p] = true;
                    queue.push_back(p);
                }
            }
        }
        if !(forward[self.start] && backward[self.start]) {
            let mut map = vec![None; self.state_count];
            map[self.start] = Some(0);
            return (Nfa::empty(self.alphabet.clone()), map);
        }
        let mut map = vec![None; self.state_count];
        let mut next = 0;
        for q in 0..self.state_count {
            if forward[q] && backward[q] {
                map[q] = Some(next);
                next += 1;
            }
        }
        let transitions = self
            .transitions
            .iter()
            .filter_map(|t| Some(Transition { source: map[t.source]?, label: t.label.clone(), target: map[t.target]? }))
            .collect();
        let finals = self.finals.iter().filter_map(|&f| map[f]).collect();
        let start = map[self.start].expect("start is useful");
        (Nfa::from_parts(next, self.alphabet.clone(), transitions, start, finals), map)
    }

    /// Automaton for `L(self) ∪ L(other)`: a fresh start state with ε-moves
    /// to both original starts.
    pub fn union(&self, other: &Nfa) -> Nfa {
        let left = 1;
        let right = 1 + self.state_count;
        let mut transitions = Vec::with_capacity(self.transitions.len() + other.transitions.len() + 2);
        transitions.push(Transition::epsilon(0, self.start + left));
        transitions.push(Transition::epsilon(0, other.start + right));
        transitions.extend(self.transitions.iter().map(|t| shift(t, left)));
        transitions.extend(other.transitions.iter().map(|t| shift(t, right)));
        let finals = self.finals.iter().map(|f| f + left).chain(other.finals.iter().map(|f| f + right)).collect();
        let mut alphabet = self.alphabet.clone();
        alphabet.extend(other.alphabet.iter().cloned());
        Nfa::from_parts(right + other.state_count, alphabet, transitions, 0, finals)
    }
}

pub(crate) fn shift(t: &Transition, offset: usize) -> Transition {
    Transition { source: t.source + offset, label: t.label.clone(), target: t.target + offset }
}

fn reachable(n: usize, from: usize, edges: impl Iterator<Item = (usize, usize)>) -> Vec<bool> {
    let mut succ: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (p, q) in edges {
        succ[p].push(q);
    }
    let mut seen = vec![false; n];
    seen[from] = true;
    let mut stack = vec![from];
    while let Some(p) = stack.pop() {
        for &q in &succ[p] {
            if !seen[q] {
                seen[q] = true;
                stack.push(q);
            }
        }
    }
    seen
}

fn min_distance(set: &[usize], distance: &[usize]) -> usize {
    set.iter().map(|&q| distance[q]).min().unwrap_or(usize::MAX)
}

struct Enumeration<'a> {
    graph: &'a Graph,
    finals: &'a BTreeSet<usize>,
    distance: &'a [usize],
    max_len: usize,
    cap: usize,
    out: &'a mut FiniteLanguage,
}

impl Enumeration<'_> {
    fn visit(&mut self, set: &[usize], prefix: &mut Vec<Symbol>) -> Result<(), Error> {
        if set.iter().any(|q| self.finals.contains(q)) {
            if self.out.len() >= self.cap {
                return Err(Error::WordCapExceeded { cap: self.cap });
            }
            self.out.insert(Word::new(prefix.clone()));
        }
        if prefix.len() == self.max_len {
            return Ok(());
        }
        for (sym, next) in self.graph.successors(set) {
            if min_distance(&next, self.distance).saturating_add(prefix.len() + 1) > self.max_len {
                continue;
            }
            prefix.push(self.graph.symbols[sym].clone());
            self.visit(&next, prefix)?;
            prefix.pop();
        }
        Ok(())
    }
}

/// Adjacency view of an [`Nfa`] with symbols mapped to indices of a sorted
/// alphabet.
pub(crate) struct Graph {
    pub symbols: Vec<Symbol>,
    eps: Vec<Vec<usize>>,
    moves: Vec<Vec<(usize, usize)>>,
}

impl Graph {
    /// `alphabet` must contain every label of `nfa`.
    pub fn new(nfa: &Nfa, alphabet: &Alphabet) -> Self {
        let symbols: Vec<Symbol> = alphabet.iter().cloned().collect();
        let mut eps = vec![Vec::new(); nfa.state_count];
        let mut moves = vec![Vec::new(); nfa.state_count];
        for t in &nfa.transitions {
            match &t.label {
                None => eps[t.source].push(t.target),
                Some(s) => {
                    let sym = symbols.binary_search(s).expect("label in alphabet");
                    moves[t.source].push((sym, t.target));
                }
            }
        }
        Graph { symbols, eps, moves }
    }

    pub fn index_of(&self, symbol: &Symbol) -> Option<usize> {
        self.symbols.binary_search(symbol).ok()
    }

    /// Sorted ε-closure.
    pub fn closure(&self, mut set: Vec<usize>) -> Vec<usize> {
        let mut seen = BTreeSet::new();
        let mut stack = Vec::new();
        for q in set.drain(..) {
            if seen.insert(q) {
                stack.push(q);
            }
        }
        while let Some(p) = stack.pop() {
            for &q in &self.eps[p] {
                if seen.insert(q) {
                    stack.push(q);
                }
            }
        }
        seen.into_iter().collect()
    }

    pub fn step(&self, set: &[usize], sym: usize) -> Vec<usize> {
        let targets: Vec<usize> =
            set.iter().flat_map(|&p| self.moves[p].iter().filter(|(s, _)| *s == sym).map(|&(_, q)| q)).collect();
        if targets.is_empty() {
            return targets;
        }
        self.closure(targets)
    }

    /// Nonempty ε-closed successor sets, in symbol order.
    pub fn successors(&self, set: &[usize]) -> Vec<(usize, Vec<usize>)> {
        let mut buckets: Vec<Vec<usize>> = vec![Vec::new(); self.symbols.len()];
        for &p in set {
            for &(sym, q) in &self.moves[p] {
                buckets[sym].push(q);
            }
        }
        buckets.into_iter().enumerate().filter(|(_, b)| !b.is_empty()).map(|(sym, b)| (sym, self.closure(b))).collect()
    }

    /// Fewest symbols needed to reach a final state from each state.
    pub fn distance_to_final(&self, finals: &BTreeSet<usize>) -> Vec<usize> {
        let n = self.eps.len();
        let mut preds: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
        for p in 0..n {
            for &q in &self.eps[p] {
                preds[q].push((p, 0));
            }
            for &(_, q) in &self.moves[p] {
                preds[q].push((p, 1));
            }
        }
        let mut dist = vec![usize::MAX; n];
        let mut deque = VecDeque::new();
        for &f in finals {
            dist[f] = 0;
            deque.push_back(f);
        }
        while let Some(q) = deque.pop_front() {
            for &(p, w) in &preds[q] {
                let d = dist[q] + w;
                if d < dist[p] {
                    dist[p] = d;
                    if w == 0 {
                        deque.push_front(p);
                    } else {
                        deque.push_back(p);
                    }
                }
            }
        }
        dist
    }
}
