//! Automaton constructions for crossover closures.
//!
//! Both constructions bridge occurrences of an overlap symbol `a` through a
//! shared hub state `h_a`: every `a`-transition `p -a-> q` of the machine
//! supplying the prefix gets a twin `p -a-> h_a`, and the hub has an ε-move
//! to the target `q'` of every `a`-transition of the machine supplying the
//! suffix. A run through the hub therefore reads `u·a·v` where `u·a` is a
//! prefix of one language and `a·v` a suffix of the other. Operands are
//! trimmed first so that automaton paths and prefixes/suffixes coincide.
//!
//! The hub realizes the complete bipartite family of single bridges
//! `p -a-> q'` (one per pair of `a`-transitions) with a linear number of
//! edges; [`cross_nfa_pairwise`] builds that family literally.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use crate::crossover::OverlapSet;
use crate::error::Error;
use crate::nfa::{shift, Nfa, Transition};
use crate::symbol::{Alphabet, Symbol};

/// Which operand supplies the prefix of the words routed through a hub.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum BridgeKind {
    /// Prefix from the first operand, suffix from the second.
    Forward,
    /// Prefix from the second operand, suffix from the first.
    Backward,
    /// Saturation: both sides are the same automaton.
    Loop,
}

impl fmt::Display for BridgeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BridgeKind::Forward => "1->2",
            BridgeKind::Backward => "2->1",
            BridgeKind::Loop => "loop",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bridge {
    pub symbol: Symbol,
    pub kind: BridgeKind,
    /// `a`-transitions of the (trimmed) prefix machine.
    pub prefix_transitions: usize,
    /// `a`-transitions of the (trimmed) suffix machine.
    pub suffix_transitions: usize,
    /// Hub state index in the returned automaton.
    pub hub: usize,
    /// Edges added for this hub: one into it per prefix transition, one out
    /// of it per suffix transition.
    pub edges: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BridgeReport {
    pub bridges: Vec<Bridge>,
}

impl BridgeReport {
    pub fn total_edges(&self) -> usize {
        self.bridges.iter().map(|b| b.edges).sum()
    }
}

impl fmt::Display for BridgeReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{:<8} {:<5} {:>8} {:>8} {:>6} {:>7}", "symbol", "dir", "prefix", "suffix", "hub", "edges")?;
        for b in &self.bridges {
            writeln!(
                f,
                "{:<8} {:<5} {:>8} {:>8} {:>6} {:>7}",
                b.symbol.as_str(),
                alloc::format!("{}", b.kind),
                b.prefix_transitions,
                b.suffix_transitions,
                b.hub,
                b.edges
            )?;
        }
        write!(f, "total bridge edges: {}", self.total_edges())
    }
}

/// Overlap symbols usable between two trimmed machines.
fn shared_symbols(r: &OverlapSet, a: &Nfa, b: &Nfa) -> Alphabet {
    let common: Alphabet = a.used_symbols().intersection(&b.used_symbols()).cloned().collect();
    r.resolve(&common)
}

fn union_alphabet(a: &Nfa, b: &Nfa) -> Alphabet {
    a.alphabet().union(b.alphabet()).cloned().collect()
}

/// One-direction crossover machine: prefix from `a`, suffix from `b`.
/// Returns the machine and, per symbol, `(hub, prefix count, suffix count)`.
fn directed(a: &Nfa, b: &Nfa, symbols: &Alphabet) -> (Nfa, Vec<(Symbol, usize, usize, usize)>) {
    let offset = a.state_count();
    let first_hub = offset + b.state_count();
    let mut transitions: Vec<Transition> = a.transitions().to_vec();
    transitions.extend(b.transitions().iter().map(|t| shift(t, offset)));
    let mut hubs = Vec::with_capacity(symbols.len());
    for (k, s) in symbols.iter().enumerate() {
        let hub = first_hub + k;
        let mut into = 0;
        for t in a.transitions_on(s) {
            transitions.push(Transition::symbol(t.source, s.clone(), hub));
            into += 1;
        }
        let mut out = 0;
        for t in b.transitions_on(s) {
            transitions.push(Transition::epsilon(hub, t.target + offset));
            out += 1;
        }
        hubs.push((s.clone(), hub, into, out));
    }
    let finals = b.finals().iter().map(|f| f + offset).collect();
    let machine = Nfa::from_parts(first_hub + symbols.len(), union_alphabet(a, b), transitions, a.start(), finals);
    (machine, hubs)
}

/// Automaton for the crossover `GSCO_R(L(m1), L(m2))`, both directions.
pub fn cross_nfa(m1: &Nfa, m2: &Nfa, r: &OverlapSet) -> (Nfa, BridgeReport) {
    let (t1, t2) = (m1.trim(), m2.trim());
    let symbols = shared_symbols(r, &t1, &t2);
    let (forward, hubs_f) = directed(&t1, &t2, &symbols);
    let (backward, hubs_b) = directed(&t2, &t1, &symbols);
    let back_offset = 1 + forward.state_count();
    let union = forward.union(&backward);
    let (machine, map) = union.trim_with_map();
    let mut report = BridgeReport::default();
    let tagged = hubs_f
        .into_iter()
        .map(|h| (BridgeKind::Forward, h, 1))
        .chain(hubs_b.into_iter().map(|h| (BridgeKind::Backward, h, back_offset)));
    for (kind, (symbol, hub, into, out), offset) in tagged {
        if let Some(hub) = map[hub + offset] {
            report.bridges.push(Bridge {
                symbol,
                kind,
                prefix_transitions: into,
                suffix_transitions: out,
                hub,
                edges: into + out,
            });
        }
    }
    (machine, report)
}

/// Automaton for the crossover closure `GSCO*_R(L(m))`.
pub fn saturate(m: &Nfa, r: &OverlapSet) -> Nfa {
    saturate_report(m, r).0
}

pub fn saturate_report(m: &Nfa, r: &OverlapSet) -> (Nfa, BridgeReport) {
    let t = m.trim();
    let symbols = r.resolve(&t.used_symbols());
    let n = t.state_count();
    let mut transitions: Vec<Transition> = t.transitions().to_vec();
    let mut report = BridgeReport::default();
    for (k, s) in symbols.iter().enumerate() {
        let hub = n + k;
        let mut count = 0;
        for tr in t.transitions_on(s) {
            transitions.push(Transition::symbol(tr.source, s.clone(), hub));
            transitions.push(Transition::epsilon(hub, tr.target));
            count += 1;
        }
        report.bridges.push(Bridge {
            symbol: s.clone(),
            kind: BridgeKind::Loop,
            prefix_transitions: count,
            suffix_transitions: count,
            hub,
            edges: 2 * count,
        });
    }
    let machine = Nfa::from_parts(n + symbols.len(), t.alphabet().clone(), transitions, t.start(), t.finals().clone());
    (machine, report)
}

/// `GSCO_R(GSCO*_R(L1), GSCO*_R(L2))`, optionally together with `L1 ∪ L2`.
pub fn gsco_star_pair_nfa(m1: &Nfa, m2: &Nfa, r: &OverlapSet, include_base: bool) -> Nfa {
    gsco_star_pair_report(m1, m2, r, include_base).0
}

/// [`gsco_star_pair_nfa`] together with the bridge reports of both
/// saturations and of the final crossover, in that order.
pub fn gsco_star_pair_report(m1: &Nfa, m2: &Nfa, r: &OverlapSet, include_base: bool) -> (Nfa, [BridgeReport; 3]) {
    let (s1, r1) = saturate_report(m1, r);
    let (s2, r2) = saturate_report(m2, r);
    let (crossed, r3) = cross_nfa(&s1, &s2, r);
    let machine = if include_base { crossed.union(m1).union(m2) } else { crossed };
    (machine, [r1, r2, r3])
}

/// Generalized splicing with the rules `{a#$a# : a ∈ r}` for an explicit
/// symbol set `r`, computed as the crossover of the two saturations.
pub fn gs_nfa(m1: &Nfa, m2: &Nfa, r: &OverlapSet, include_base: bool) -> Result<Nfa, Error> {
    r.explicit()?;
    Ok(gsco_star_pair_nfa(m1, m2, r, include_base))
}

/// Reference crossover automaton built from one bridged machine per pair of
/// same-symbol transitions, joined under a fresh start state. Quadratic in
/// the number of transitions; intended for cross-checking [`cross_nfa`].
pub fn cross_nfa_pairwise(m1: &Nfa, m2: &Nfa, r: &OverlapSet) -> Nfa {
    let (t1, t2) = (m1.trim(), m2.trim());
    let symbols = shared_symbols(r, &t1, &t2);
    let mut transitions = Vec::new();
    let mut finals = BTreeSet::new();
    let mut next = 1;
    for (a, b) in [(&t1, &t2), (&t2, &t1)] {
        for s in &symbols {
            for ta in a.transitions_on(s) {
                for tb in b.transitions_on(s) {
                    // copy of a at `next`, copy of b right after it
                    let b_off = next + a.state_count();
                    transitions.push(Transition::epsilon(0, a.start() + next));
                    transitions.extend(a.transitions().iter().map(|t| shift(t, next)));
                    transitions.extend(b.transitions().iter().map(|t| shift(t, b_off)));
                    transitions.push(Transition::symbol(ta.source + next, s.clone(), tb.target + b_off));
                    finals.extend(b.finals().iter().map(|f| f + b_off));
                    next = b_off + b.state_count();
                }
            }
        }
    }
    Nfa::from_parts(next, union_alphabet(&t1, &t2), transitions, 0, finals)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dfa::equivalent;
    use crate::symbol::alphabet;
    use crate::word::FiniteLanguage;

    fn lang(s: &str) -> FiniteLanguage {
        FiniteLanguage::parse(s).unwrap()
    }

    fn words(s: &str) -> Nfa {
        Nfa::from_words(&lang(s))
    }

    fn syms(s: &str) -> OverlapSet {
        OverlapSet::symbols(alphabet(s).unwrap()).unwrap()
    }

    fn sym(c: char) -> Symbol {
        Symbol::from_char(c).unwrap()
    }

    /// `a*b`
    fn a_star_b() -> Nfa {
        Nfa::new(
            2,
            alphabet("ab").unwrap(),
            [Transition::symbol(0, sym('a'), 0), Transition::symbol(0, sym('b'), 1)],
            0,
            [1],
        )
        .unwrap()
    }

    /// `ba*`
    fn b_a_star() -> Nfa {
        Nfa::new(
            2,
            alphabet("ab").unwrap(),
            [Transition::symbol(0, sym('b'), 1), Transition::symbol(1, sym('a'), 1)],
            0,
            [1],
        )
        .unwrap()
    }

    /// `aa* | baa*b`
    fn a_plus_or_b_a_plus_b() -> Nfa {
        Nfa::new(
            5,
            alphabet("ab").unwrap(),
            [
                Transition::symbol(0, sym('a'), 1),
                Transition::symbol(1, sym('a'), 1),
                Transition::symbol(0, sym('b'), 2),
                Transition::symbol(2, sym('a'), 3),
                Transition::symbol(3, sym('a'), 3),
                Transition::symbol(3, sym('b'), 4),
            ],
            0,
            [1, 4],
        )
        .unwrap()
    }

    #[test]
    fn cross_of_ab_and_ba() {
        let (m, report) = cross_nfa(&words("ab"), &words("ba"), &syms("ab"));
        assert_eq!(m.enumerate(4).unwrap(), lang("a b aba bab"));
        assert_eq!(report.bridges.len(), 4);
        for b in &report.bridges {
            assert_eq!(b.edges, b.prefix_transitions + b.suffix_transitions);
        }
        let (all, _) = cross_nfa(&words("ab"), &words("ba"), &OverlapSet::All);
        assert!(equivalent(&m, &all).unwrap().is_equal());
    }

    #[test]
    fn cross_of_disjoint_alphabets_is_empty() {
        let (m, report) = cross_nfa(&words("ab"), &words("cd"), &OverlapSet::All);
        assert!(m.is_empty());
        assert!(report.bridges.is_empty());
    }

    #[test]
    fn cross_regular_operands() {
        let (m, _) = cross_nfa(&a_star_b(), &b_a_star(), &syms("a"));
        assert!(equivalent(&m, &a_plus_or_b_a_plus_b()).unwrap().is_equal());
    }

    #[test]
    fn hub_equals_pairwise_family() {
        for (m1, m2) in [(a_star_b(), b_a_star()), (words("aba abba"), words("bab a"))] {
            for r in [OverlapSet::All, syms("a"), syms("b")] {
                let (hub, _) = cross_nfa(&m1, &m2, &r);
                let pairwise = cross_nfa_pairwise(&m1, &m2, &r);
                assert!(equivalent(&hub, &pairwise).unwrap().is_equal());
            }
        }
    }

    /// Bridging from the *target* of an `a`-transition (`q -ε-> q'`) instead
    /// of from its source over-generates once `q` has other incoming labels:
    /// with L1 = {ac, bc} and L2 = {ad} it accepts `bd`, which no crossover
    /// at `a` produces.
    #[test]
    fn bridging_from_targets_overgenerates() {
        let m1 = Nfa::new(
            3,
            alphabet("abc").unwrap(),
            [
                Transition::symbol(0, sym('a'), 1),
                Transition::symbol(0, sym('b'), 1),
                Transition::symbol(1, sym('c'), 2),
            ],
            0,
            [2],
        )
        .unwrap();
        let m2 = words("ad");
        let bd: crate::Word = "bd".parse().unwrap();
        // m1 states 0..3, m2 trie states 3..6, bridge 1 -ε-> (target of a in m2)
        let mut transitions: Vec<Transition> = m1.transitions().to_vec();
        transitions.extend(m2.transitions().iter().map(|t| shift(t, 3)));
        transitions.push(Transition::epsilon(1, 4));
        let printed = Nfa::new(6, alphabet("abcd").unwrap(), transitions, 0, [5]).unwrap();
        assert!(printed.member(&bd));

        let (hub, _) = cross_nfa(&m1, &m2, &syms("a"));
        assert!(!hub.member(&bd));
        let oracle = crate::gsco_lang(&lang("ac bc"), &lang("ad"), &syms("a"));
        assert_eq!(hub.enumerate(4).unwrap(), oracle);
        assert!(!oracle.contains(&bd));
    }

    #[test]
    fn saturate_alternating_words() {
        let s = saturate(&words("ab ba"), &OverlapSet::All);
        let got = s.enumerate(8).unwrap();
        assert_eq!(got.len(), 16);
        for n in 1..=8 {
            assert_eq!(got.iter().filter(|w| w.len() == n).count(), 2);
        }
        assert!(got.iter().all(|w| w.symbols().windows(2).all(|p| p[0] != p[1])));
        let d = crate::dfa::determinize(&s).unwrap().minimize();
        // start, last-read-a, last-read-b, sink
        assert_eq!(d.state_count(), 4);
        assert_eq!(d.live_state_count(), 3);
    }

    #[test]
    fn saturate_unique_occurrences_is_identity() {
        let m = words("abc");
        assert!(equivalent(&saturate(&m, &OverlapSet::All), &m).unwrap().is_equal());
        let eps = words("@eps");
        assert_eq!(saturate(&eps, &OverlapSet::All).enumerate(3).unwrap(), lang("@eps"));
    }

    #[test]
    fn saturate_report_counts() {
        let (_, report) = saturate_report(&words("ab ba"), &OverlapSet::All);
        assert_eq!(report.bridges.len(), 2);
        assert!(report.bridges.iter().all(|b| b.edges == 4 && b.kind == BridgeKind::Loop));
        let table = alloc::format!("{report}");
        assert!(table.contains("total bridge edges: 8"));
    }

    #[test]
    fn star_pair_examples() {
        let all = OverlapSet::All;
        let without = gsco_star_pair_nfa(&words("ab"), &words("ba"), &all, false);
        assert_eq!(without.enumerate(4).unwrap(), lang("a b aba bab"));
        let with = gsco_star_pair_nfa(&words("ab"), &words("ba"), &all, true);
        assert_eq!(with.enumerate(4).unwrap(), lang("a b ab ba aba bab"));
        let disjoint = gsco_star_pair_nfa(&words("ab"), &words("cd"), &all, true);
        assert_eq!(disjoint.enumerate(4).unwrap(), lang("ab cd"));
        assert!(gsco_star_pair_nfa(&words("ab"), &words("cd"), &all, false).is_empty());
    }

    #[test]
    fn gs_examples() {
        let m = gs_nfa(&a_star_b(), &b_a_star(), &syms("a"), false).unwrap();
        assert!(equivalent(&m, &a_plus_or_b_a_plus_b()).unwrap().is_equal());
        let m = gs_nfa(&words("ab"), &words("ba"), &syms("a"), true).unwrap();
        assert_eq!(m.enumerate(4).unwrap(), lang("a bab ab ba"));
        let m = gs_nfa(&words("ab"), &words("ba"), &syms("c"), false).unwrap();
        assert!(m.is_empty());
        assert_eq!(
            gs_nfa(&words("ab"), &words("ba"), &OverlapSet::All, false).unwrap_err(),
            Error::ExplicitOverlapRequired
        );
    }
}
