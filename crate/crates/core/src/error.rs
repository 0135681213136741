use alloc::boxed::Box;
use alloc::string::String;
use core::fmt;

use crate::symbol::Symbol;
use crate::word::FiniteLanguage;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A state index is not below the automaton's state count.
    StateOutOfRange {
        state: usize,
        state_count: usize,
    },
    /// A transition label or word uses a symbol outside the declared alphabet.
    SymbolNotInAlphabet(Symbol),
    /// Token is empty, reserved, or contains whitespace.
    InvalidSymbol(String),
    /// Crossover at the empty word was requested.
    EmptyOverlap,
    /// An explicit overlap set must name at least one symbol.
    EmptyOverlapSet,
    /// The operation needs an explicit overlap set rather than `ALL`.
    ExplicitOverlapRequired,
    InvalidConfig(&'static str),
    /// Enumeration produced more words than allowed.
    WordCapExceeded {
        cap: usize,
    },
    /// Subset construction produced more states than allowed.
    StateCapExceeded {
        cap: usize,
    },
    /// A bounded closure did not reach its fixed point in time. Carries the
    /// words collected so far.
    IterationLimit {
        max_iter: usize,
        partial: Box<FiniteLanguage>,
    },
}

impl Error {
    /// True for the errors raised by configurable resource guards.
    pub fn is_resource_cap(&self) -> bool {
        matches!(self, Error::WordCapExceeded { .. } | Error::StateCapExceeded { .. } | Error::IterationLimit { .. })
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::StateOutOfRange { state, state_count } => {
                write!(f, "state out of range: {state} (state count {state_count})")
            }
            Error::SymbolNotInAlphabet(s) => write!(f, "symbol `{s}` is not in the alphabet"),
            Error::InvalidSymbol(s) => write!(f, "invalid or reserved symbol token {s:?}"),
            Error::EmptyOverlap => f.write_str("empty overlap forbidden"),
            Error::EmptyOverlapSet => f.write_str("overlap set must contain at least one symbol"),
            Error::ExplicitOverlapRequired => {
                f.write_str("an explicit overlap symbol set is required (ALL not accepted)")
            }
            Error::InvalidConfig(msg) => write!(f, "invalid configuration: {msg}"),
            Error::WordCapExceeded { cap } => write!(f, "enumeration exceeded the word cap of {cap}"),
            Error::StateCapExceeded { cap } => {
                write!(f, "determinization exceeded the state cap of {cap}")
            }
            Error::IterationLimit { max_iter, partial } => {
                write!(f, "no fixed point after {max_iter} iterations ({} words collected)", partial.len())
            }
        }
    }
}

impl core::error::Error for Error {}
