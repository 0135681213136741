//! Complete deterministic automata: subset construction, minimization and
//! language equivalence with shortest witnesses.
//!
//! Every [`Dfa`] is complete. States are numbered breadth-first from the
//! start state (which is therefore state 0), exploring symbols in sorted
//! alphabet order; two equivalent automata over the same alphabet minimize
//! to identical values.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;
use crate::limits::Limits;
use crate::nfa::{Graph, Nfa, Transition};
use crate::symbol::{Alphabet, Symbol};
use crate::word::Word;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dfa {
    alphabet: Vec<Symbol>,
    // row-major: delta[state * |alphabet| + symbol]
    delta: Vec<usize>,
    finals: Vec<bool>,
    sink: Option<usize>,
}

impl Dfa {
    /// Builds a complete automaton from a transition table with one row per
    /// state and one column per alphabet symbol (sorted order). The result
    /// is renumbered canonically; unreachable states are dropped.
    pub fn new(alphabet: &Alphabet, table: &[Vec<usize>], start: usize, finals: &[usize]) -> Result<Dfa, Error> {
        let n = table.len();
        let k = alphabet.len();
        let check = |state: usize| {
            if state < n {
                Ok(())
            } else {
                Err(Error::StateOutOfRange { state, state_count: n })
            }
        };
        check(start)?;
        let mut delta = Vec::with_capacity(n * k);
        for row in table {
            if row.len() != k {
                return Err(Error::InvalidConfig("every row needs one target per alphabet symbol"));
            }
            for &q in row {
                check(q)?;
            }
            delta.extend_from_slice(row);
        }
        let mut is_final = vec![false; n];
        for &f in finals {
            check(f)?;
            is_final[f] = true;
        }
        Ok(canonical(alphabet.iter().cloned().collect(), &delta, &is_final, start))
    }

    pub fn state_count(&self) -> usize {
        self.finals.len()
    }

    pub fn alphabet(&self) -> &[Symbol] {
        &self.alphabet
    }

    pub fn start(&self) -> usize {
        0
    }

    pub fn is_final(&self, state: usize) -> bool {
        self.finals[state]
    }

    pub fn finals(&self) -> impl Iterator<Item = usize> + '_ {
        self.finals.iter().enumerate().filter(|(_, f)| **f).map(|(q, _)| q)
    }

    /// The non-final state looping to itself on every symbol, if present.
    pub fn sink(&self) -> Option<usize> {
        self.sink
    }

    /// Number of states other than the sink.
    pub fn live_state_count(&self) -> usize {
        self.state_count() - usize::from(self.sink.is_some())
    }

    /// Whether the language is finite, i.e. no cycle runs through states
    /// that can still reach a final state. Every state is reachable.
    pub fn is_finite(&self) -> bool {
        let n = self.state_count();
        let k = self.alphabet.len();
        let mut live = self.finals.clone();
        let mut changed = true;
        while changed {
            changed = false;
            for q in 0..n {
                if !live[q] && (0..k).any(|a| live[self.next(q, a)]) {
                    live[q] = true;
                    changed = true;
                }
            }
        }
        // iterative three-colour DFS over live states
        let mut colour = vec![0u8; n];
        for root in (0..n).filter(|&q| live[q]) {
            if colour[root] != 0 {
                continue;
            }
            colour[root] = 1;
            let mut stack = vec![(root, 0)];
            while let Some((q, a)) = stack.pop() {
                if a == k {
                    colour[q] = 2;
                    continue;
                }
                stack.push((q, a + 1));
                let r = self.next(q, a);
                if !live[r] {
                    continue;
                }
                match colour[r] {
                    0 => {
                        colour[r] = 1;
                        stack.push((r, 0));
                    }
                    1 => return false,
                    _ => {}
                }
            }
        }
        true
    }

    pub fn next(&self, state: usize, symbol: usize) -> usize {
        self.delta[state * self.alphabet.len() + symbol]
    }

    pub fn accepts(&self, word: &Word) -> bool {
        let mut q = 0;
        for s in word.symbols() {
            match self.alphabet.binary_search(s) {
                Ok(sym) => q = self.next(q, sym),
                Err(_) => return false,
            }
        }
        self.finals[q]
    }

    /// Same automaton viewed as an [`Nfa`] (sink included).
    pub fn to_nfa(&self) -> Nfa {
        let k = self.alphabet.len();
        let transitions = (0..self.state_count())
            .flat_map(|q| (0..k).map(move |a| (q, a)))
            .map(|(q, a)| Transition::symbol(q, self.alphabet[a].clone(), self.next(q, a)))
            .collect();
        Nfa::from_parts(
            self.state_count(),
            self.alphabet.iter().cloned().collect(),
            transitions,
            0,
            self.finals().collect(),
        )
    }

    /// Unique minimal complete automaton for the same language
    /// (Moore partition refinement, then canonical renumbering).
    pub fn minimize(&self) -> Dfa {
        let n = self.state_count();
        let k = self.alphabet.len();
        let mut class: Vec<usize> = self.finals.iter().map(|&f| usize::from(f)).collect();
        let mut count = class.iter().copied().collect::<BTreeSet<_>>().len();
        loop {
            let mut ids: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
            let mut next_class = Vec::with_capacity(n);
            for q in 0..n {
                let mut signature = Vec::with_capacity(k + 1);
                signature.push(class[q]);
                signature.extend((0..k).map(|a| class[self.next(q, a)]));
                let fresh = ids.len();
                next_class.push(*ids.entry(signature).or_insert(fresh));
            }
            let refined = ids.len();
            class = next_class;
            if refined == count {
                break;
            }
            count = refined;
        }
        let mut delta = vec![0; count * k];
        let mut finals = vec![false; count];
        for q in 0..n {
            let c = class[q];
            finals[c] = self.finals[q];
            for a in 0..k {
                delta[c * k + a] = class[self.next(q, a)];
            }
        }
        canonical(self.alphabet.clone(), &delta, &finals, class[0])
    }
}

/// Breadth-first renumbering from `start`, dropping unreachable states.
fn canonical(alphabet: Vec<Symbol>, delta: &[usize], finals: &[bool], start: usize) -> Dfa {
    let k = alphabet.len();
    let mut order = vec![usize::MAX; finals.len()];
    let mut queue = VecDeque::from([start]);
    let mut visited = vec![start];
    order[start] = 0;
    while let Some(q) = queue.pop_front() {
        for a in 0..k {
            let r = delta[q * k + a];
            if order[r] == usize::MAX {
                order[r] = visited.len();
                visited.push(r);
                queue.push_back(r);
            }
        }
    }
    let mut new_delta = Vec::with_capacity(visited.len() * k);
    for &q in &visited {
        new_delta.extend((0..k).map(|a| order[delta[q * k + a]]));
    }
    let new_finals: Vec<bool> = visited.iter().map(|&q| finals[q]).collect();
    let sink = (0..visited.len()).find(|&q| !new_finals[q] && (0..k).all(|a| new_delta[q * k + a] == q));
    Dfa { alphabet, delta: new_delta, finals: new_finals, sink }
}

/// Subset construction over the automaton's own alphabet with default caps.
pub fn determinize(nfa: &Nfa) -> Result<Dfa, Error> {
    determinize_over(nfa, nfa.alphabet(), &Limits::default())
}

/// Subset construction over `alphabet`, which must contain every label of
/// `nfa`. Fails once more than `limits.max_dfa_states` subsets appear.
pub fn determinize_over(nfa: &Nfa, alphabet: &Alphabet, limits: &Limits) -> Result<Dfa, Error> {
    let mut full = nfa.alphabet().clone();
    full.extend(alphabet.iter().cloned());
    let graph = Graph::new(nfa, &full);
    let k = graph.symbols.len();
    let start = graph.closure(vec![nfa.start()]);
    let mut ids: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
    let mut subsets: Vec<Vec<usize>> = Vec::new();
    let mut delta: Vec<usize> = Vec::new();
    ids.insert(start.clone(), 0);
    subsets.push(start);
    let mut next = 0;
    while next < subsets.len() {
        let set = subsets[next].clone();
        for a in 0..k {
            let target = graph.step(&set, a);
            let id = match ids.get(&target) {
                Some(&id) => id,
                None => {
                    if subsets.len() >= limits.max_dfa_states {
                        return Err(Error::StateCapExceeded { cap: limits.max_dfa_states });
                    }
                    let id = subsets.len();
                    ids.insert(target.clone(), id);
                    subsets.push(target);
                    id
                }
            };
            delta.push(id);
        }
        next += 1;
    }
    let finals: Vec<bool> = subsets.iter().map(|s| s.iter().any(|q| nfa.finals().contains(q))).collect();
    Ok(canonical(graph.symbols, &delta, &finals, 0))
}

/// Outcome of a language comparison.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Equivalence {
    Equal,
    /// A shortest (then lexicographically least) word accepted by exactly
    /// one of the two automata.
    Differ(Word),
}

impl Equivalence {
    pub fn is_equal(&self) -> bool {
        matches!(self, Equivalence::Equal)
    }

    pub fn witness(&self) -> Option<&Word> {
        match self {
            Equivalence::Equal => None,
            Equivalence::Differ(w) => Some(w),
        }
    }
}

pub fn equivalent(left: &Nfa, right: &Nfa) -> Result<Equivalence, Error> {
    equivalent_with(left, right, &Limits::default())
}

/// Breadth-first search of the product of both determinized automata,
/// over the union of their alphabets.
pub fn equivalent_with(left: &Nfa, right: &Nfa, limits: &Limits) -> Result<Equivalence, Error> {
    let mut alphabet = left.alphabet().clone();
    alphabet.extend(right.alphabet().iter().cloned());
    let a = determinize_over(left, &alphabet, limits)?;
    let b = determinize_over(right, &alphabet, limits)?;
    let k = alphabet.len();
    let mut parent: BTreeMap<(usize, usize), Option<((usize, usize), usize)>> = BTreeMap::new();
    parent.insert((0, 0), None);
    let mut queue = VecDeque::from([(0usize, 0usize)]);
    while let Some((p, q)) = queue.pop_front() {
        if a.is_final(p) != b.is_final(q) {
            let mut symbols = Vec::new();
            let mut at = (p, q);
            while let Some(Some((prev, sym))) = parent.get(&at) {
                symbols.push(a.alphabet[*sym].clone());
                at = *prev;
            }
            symbols.reverse();
            return Ok(Equivalence::Differ(Word::new(symbols)));
        }
        for sym in 0..k {
            let pair = (a.next(p, sym), b.next(q, sym));
            if !parent.contains_key(&pair) {
                parent.insert(pair, Some(((p, q), sym)));
                queue.push_back(pair);
            }
        }
    }
    Ok(Equivalence::Equal)
}
