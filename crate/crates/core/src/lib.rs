//! Generalized sequential crossover of words and languages, and the
//! generalized splicing it induces, realized as finite automata.
//!
//! The crate is `no_std` and only needs `alloc`. It contains:
//!
//! - an automaton kernel ([`Nfa`], [`Dfa`]) with trimming, subset
//!   construction, minimization and equivalence checking;
//! - word-level crossover and splicing ([`crossover`]) together with bounded
//!   fixed-point closures ([`closure`]) that serve as reference oracles;
//! - the automaton constructions ([`construct`]): the crossover product, the
//!   saturation accepting the iterated closure, and their composition.
#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod closure;
pub mod construct;
pub mod crossover;
pub mod dfa;
mod error;
mod limits;
pub mod nfa;
mod symbol;
mod word;

pub use closure::{
    bounded_closure_pair, bounded_closure_r, bounded_closure_u, bounded_gs, bounded_splicing, closure_member_dp,
    ClosureConfig, StitchIndex,
};
pub use construct::{
    cross_nfa, cross_nfa_pairwise, gs_nfa, gsco_star_pair_nfa, gsco_star_pair_report, saturate, saturate_report,
    Bridge, BridgeKind, BridgeReport,
};
pub use crossover::{
    common_factors, gsco_at, gsco_lang, gsco_lang_bounded, gsco_lang_directed, gsco_pair, one_gsco_at, splice_pair,
    Direction, OverlapMode, OverlapSet, SplicingRule,
};
pub use dfa::{determinize, determinize_over, equivalent, equivalent_with, Dfa, Equivalence};
pub use error::Error;
pub use limits::Limits;
pub use nfa::{Label, Nfa, Transition};
pub use symbol::{alphabet, Alphabet, Symbol};
pub use word::{FiniteLanguage, Word, EPSILON_TOKEN};
