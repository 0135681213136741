//! Text formats: `.aut` automata, `.words` word lists and splicing rules.
//!
//! An automaton document has five sections, each introduced by its name
//! and a colon:
//!
//! ```text
//! # a*b
//! alphabet: a b
//! states: 2
//! start: 0
//! finals: 1
//! trans:
//! 0 a 0
//! 0 b 1
//! ```
//!
//! `alphabet:`, `states:`, `start:` and `finals:` take their values on the
//! same line; `trans:` is followed by one `src label dst` triple per line,
//! with `@eps` labelling ε-moves. Lines starting with `#` are comments.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use gsco_core::{
    Alphabet, FiniteLanguage, Label, Nfa, OverlapSet, SplicingRule, Symbol, Transition, Word, EPSILON_TOKEN,
};

use crate::error::ParseError;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
enum Section {
    Alphabet,
    States,
    Start,
    Finals,
    Trans,
}

impl Section {
    fn from_name(name: &str) -> Option<Section> {
        Some(match name {
            "alphabet" => Section::Alphabet,
            "states" => Section::States,
            "start" => Section::Start,
            "finals" => Section::Finals,
            "trans" => Section::Trans,
            _ => return None,
        })
    }
}

fn parse_index(token: &str, line: usize, what: &str) -> Result<usize, ParseError> {
    token.parse().map_err(|_| ParseError::new(line, 1, format!("invalid {what} '{token}'")))
}

fn parse_symbol(token: &str, line: usize) -> Result<Symbol, ParseError> {
    Symbol::new(token).map_err(|e| ParseError::new(line, 1, e.to_string()))
}

pub fn read_automaton(text: &str) -> Result<Nfa, ParseError> {
    let mut seen = BTreeSet::new();
    let mut current = None;
    let mut alphabet = Alphabet::new();
    let mut states = None;
    let mut start = None;
    let mut finals = Vec::new();
    let mut transitions: Vec<(usize, Transition)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.trim();
        if content.is_empty() || content.starts_with('#') {
            continue;
        }
        let header = content.split_once(':').filter(|(name, _)| !name.contains(char::is_whitespace));
        if let Some((name, rest)) = header {
            let section = Section::from_name(name)
                .ok_or_else(|| ParseError::new(line, 1, format!("unknown section '{name}'")))?;
            if !seen.insert(section) {
                return Err(ParseError::new(line, 1, format!("duplicate section '{name}'")));
            }
            current = Some(section);
            let values: Vec<&str> = rest.split_whitespace().collect();
            match section {
                Section::Alphabet => {
                    for v in values {
                        alphabet.insert(parse_symbol(v, line)?);
                    }
                }
                Section::States | Section::Start => {
                    let [v] = values[..] else {
                        return Err(ParseError::new(line, 1, format!("'{name}' takes exactly one value")));
                    };
                    let value = parse_index(v, line, name)?;
                    if section == Section::States {
                        states = Some(value);
                    } else {
                        start = Some(value);
                    }
                }
                Section::Finals => {
                    for v in values {
                        finals.push((line, parse_index(v, line, "final state")?));
                    }
                }
                Section::Trans => {
                    if !values.is_empty() {
                        return Err(ParseError::new(line, 1, "transitions start on the line after 'trans:'"));
                    }
                }
            }
            continue;
        }
        if current != Some(Section::Trans) {
            return Err(ParseError::new(line, 1, format!("unexpected line '{content}'")));
        }
        let [src, label, dst] = content.split_whitespace().collect::<Vec<_>>()[..] else {
            return Err(ParseError::new(line, 1, format!("malformed transition '{content}'")));
        };
        let label: Label = if label == EPSILON_TOKEN { None } else { Some(parse_symbol(label, line)?) };
        let (src, dst) = (parse_index(src, line, "state")?, parse_index(dst, line, "state")?);
        transitions.push((line, Transition::new(src, label, dst)));
    }
    let missing = |name: &str| ParseError::new(text.lines().count().max(1), 1, format!("missing section '{name}'"));
    let states = states.ok_or_else(|| missing("states"))?;
    let start = start.ok_or_else(|| missing("start"))?;
    for name in ["alphabet", "finals", "trans"] {
        if !seen.contains(&Section::from_name(name).unwrap()) {
            return Err(missing(name));
        }
    }
    let out_of_range =
        |line: usize, q: usize| ParseError::new(line, 1, format!("state {q} out of range (states: {states})"));
    if start >= states {
        return Err(out_of_range(1, start));
    }
    for &(line, q) in &finals {
        if q >= states {
            return Err(out_of_range(line, q));
        }
    }
    for (line, t) in &transitions {
        if let Some(s) = t.label.as_ref().filter(|s| !alphabet.contains(*s)) {
            return Err(ParseError::new(*line, 1, format!("undeclared symbol '{s}'")));
        }
        for q in [t.source, t.target] {
            if q >= states {
                return Err(out_of_range(*line, q));
            }
        }
    }
    let transitions = transitions.into_iter().map(|(_, t)| t);
    let finals = finals.into_iter().map(|(_, q)| q);
    Ok(Nfa::new(states, alphabet, transitions, start, finals).expect("validated above"))
}

/// Canonical text: sorted alphabet, transitions sorted by source, label
/// (ε first) and target.
pub fn write_automaton(m: &Nfa) -> String {
    fn section(out: &mut String, name: &str, values: impl IntoIterator<Item = String>) {
        out.push_str(name);
        out.push(':');
        for v in values {
            out.push(' ');
            out.push_str(&v);
        }
        out.push('\n');
    }
    let mut out = String::new();
    section(&mut out, "alphabet", m.alphabet().iter().map(|s| s.as_str().to_owned()));
    section(&mut out, "states", [m.state_count().to_string()]);
    section(&mut out, "start", [m.start().to_string()]);
    section(&mut out, "finals", m.finals().iter().map(usize::to_string));
    section(&mut out, "trans", []);
    for t in m.transitions() {
        let label = t.label.as_ref().map_or(EPSILON_TOKEN, Symbol::as_str);
        writeln!(out, "{} {} {}", t.source, label, t.target).unwrap();
    }
    out
}

/// One word per line; `@eps` is the empty word, blank lines and `#`
/// comments are skipped.
pub fn read_words(text: &str) -> Result<FiniteLanguage, ParseError> {
    let mut out = FiniteLanguage::new();
    for (i, raw) in text.lines().enumerate() {
        let content = raw.trim();
        if content.is_empty() || content.starts_with('#') {
            continue;
        }
        let word: Word = content.parse().map_err(|e: gsco_core::Error| ParseError::new(i + 1, 1, e.to_string()))?;
        out.insert(word);
    }
    Ok(out)
}

/// Length-lexicographic, one word per line.
pub fn write_words(l: &FiniteLanguage) -> String {
    l.iter().map(|w| format!("{w}\n")).collect()
}

fn parse_rule_word(text: &str, column: usize) -> Result<Word, ParseError> {
    let text = text.trim();
    if text.is_empty() || text == EPSILON_TOKEN || text == "~" {
        return Ok(Word::empty());
    }
    text.parse().map_err(|e: gsco_core::Error| ParseError::new(1, column, e.to_string()))
}

/// `α#β$α'#β'`, or a bare word `x` standing for `x#$x#`.
pub fn parse_rule(text: &str) -> Result<SplicingRule, ParseError> {
    let text = text.trim();
    let dollars = text.matches('$').count();
    let hashes = text.matches('#').count();
    if dollars == 0 && hashes == 0 {
        let x = parse_rule_word(text, 1)?;
        return Ok(SplicingRule::crossover(x));
    }
    let (left, right) = text
        .split_once('$')
        .filter(|_| dollars == 1)
        .ok_or_else(|| ParseError::new(1, 1, format!("expected exactly one '$' in rule '{text}', found {dollars}")))?;
    let side = |part: &str, column: usize| -> Result<(Word, Word), ParseError> {
        let count = part.matches('#').count();
        let (a, b) = part.split_once('#').filter(|_| count == 1).ok_or_else(|| {
            ParseError::new(1, column, format!("expected exactly one '#' on each side of rule '{text}', found {count}"))
        })?;
        Ok((parse_rule_word(a, column)?, parse_rule_word(b, column)?))
    };
    let (alpha, beta) = side(left, 1)?;
    let (alpha2, beta2) = side(right, left.chars().count() + 2)?;
    Ok(SplicingRule::new(alpha, beta, alpha2, beta2))
}

/// Rule file: one rule per line, `#` comment lines allowed when the line
/// holds no `$`.
pub fn read_rules(text: &str) -> Result<Vec<SplicingRule>, ParseError> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let content = raw.trim();
        if content.is_empty() || (content.starts_with('#') && !content.contains('$')) {
            continue;
        }
        out.push(parse_rule(content).map_err(|e| ParseError::new(i + 1, e.position.column, e.message))?);
    }
    Ok(out)
}

/// `#$#`, the crossover rule for the empty overlap.
pub fn is_empty_rule(rule: &SplicingRule) -> bool {
    [&rule.alpha, &rule.beta, &rule.alpha2, &rule.beta2].iter().all(|w| w.is_empty())
}

/// `all`, or a comma-separated list of rules (usually bare symbols).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RuleSet {
    All,
    Rules(Vec<SplicingRule>),
}

pub fn parse_rule_list(text: &str) -> Result<RuleSet, ParseError> {
    if text.trim() == "all" {
        return Ok(RuleSet::All);
    }
    let mut rules = Vec::new();
    let mut column = 1;
    for part in text.split(',') {
        rules.push(parse_rule(part).map_err(|e| ParseError::new(1, column + e.position.column - 1, e.message))?);
        column += part.chars().count() + 1;
    }
    Ok(RuleSet::Rules(rules))
}

impl RuleSet {
    /// The single-symbol overlap set these rules denote, or a message
    /// naming the first rule outside the `a#$a#` subclass.
    pub fn overlap(&self) -> Result<OverlapSet, String> {
        let RuleSet::Rules(rules) = self else {
            return Ok(OverlapSet::All);
        };
        let mut symbols = Vec::new();
        for rule in rules {
            if is_empty_rule(rule) {
                return Err(format!("rule '{rule}' has an empty overlap"));
            }
            match rule.crossover_factor().map(Word::symbols) {
                Some([a]) => symbols.push(a.clone()),
                _ => return Err(format!("rule '{rule}' is not a single-symbol crossover rule a#$a#")),
            }
        }
        OverlapSet::symbols(symbols).map_err(|e| e.to_string())
    }
}
