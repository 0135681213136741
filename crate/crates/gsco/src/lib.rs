//! File formats, a regex frontend and the `gsco` command line for the
//! crossover constructions in [`gsco_core`].

pub mod cli;
mod error;
pub mod format;
pub mod regex;

pub use cli::{run, Operand};
pub use error::{Error, ParseError, Position};
pub use format::{
    parse_rule, parse_rule_list, read_automaton, read_rules, read_words, write_automaton, write_words, RuleSet,
};
pub use regex::{parse_regex, regex_to_nfa, Regex};
