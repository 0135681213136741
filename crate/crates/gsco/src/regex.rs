//! Regular expressions over single-character symbols.
//!
//! Syntax: juxtaposition concatenates, `|` alternates, postfix `*`, `+`
//! and `?` repeat, parentheses group, `~` is the empty word and `!` the
//! empty language. Literals are single ASCII alphanumerics; whitespace is
//! ignored.

use std::fmt;

use gsco_core::{Alphabet, Nfa, Symbol, Transition};

use crate::error::ParseError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Regex {
    Empty,
    Epsilon,
    Literal(Symbol),
    Concat(Vec<Regex>),
    Alt(Vec<Regex>),
    Star(Box<Regex>),
    Plus(Box<Regex>),
    Optional(Box<Regex>),
}

impl Regex {
    pub fn literal(c: char) -> Regex {
        Regex::Literal(Symbol::from_char(c).expect("alphanumeric literal"))
    }

    /// Flattens nested concatenations and alternations and unwraps
    /// one-element lists. Parsing always yields normalized trees.
    pub fn normalize(&self) -> Regex {
        match self {
            Regex::Concat(items) => flatten(items, Regex::Concat, Regex::Epsilon, |r| match r {
                Regex::Concat(inner) => Some(inner),
                _ => None,
            }),
            Regex::Alt(items) => flatten(items, Regex::Alt, Regex::Empty, |r| match r {
                Regex::Alt(inner) => Some(inner),
                _ => None,
            }),
            Regex::Star(r) => Regex::Star(Box::new(r.normalize())),
            Regex::Plus(r) => Regex::Plus(Box::new(r.normalize())),
            Regex::Optional(r) => Regex::Optional(Box::new(r.normalize())),
            leaf => leaf.clone(),
        }
    }

    pub fn symbols(&self) -> Alphabet {
        let mut out = Alphabet::new();
        self.collect_symbols(&mut out);
        out
    }

    fn collect_symbols(&self, out: &mut Alphabet) {
        match self {
            Regex::Empty | Regex::Epsilon => {}
            Regex::Literal(s) => {
                out.insert(s.clone());
            }
            Regex::Concat(items) | Regex::Alt(items) => items.iter().for_each(|r| r.collect_symbols(out)),
            Regex::Star(r) | Regex::Plus(r) | Regex::Optional(r) => r.collect_symbols(out),
        }
    }

    fn precedence(&self) -> u8 {
        match self {
            Regex::Alt(items) if items.len() > 1 => 0,
            Regex::Concat(items) if items.len() > 1 => 1,
            Regex::Alt(items) | Regex::Concat(items) if items.is_empty() => 3,
            Regex::Alt(items) | Regex::Concat(items) => items[0].precedence(),
            Regex::Star(_) | Regex::Plus(_) | Regex::Optional(_) => 2,
            _ => 3,
        }
    }
}

fn flatten(
    items: &[Regex],
    build: fn(Vec<Regex>) -> Regex,
    unit: Regex,
    open: fn(&Regex) -> Option<&Vec<Regex>>,
) -> Regex {
    let mut out = Vec::new();
    for item in items {
        let item = item.normalize();
        match open(&item) {
            Some(inner) => out.extend(inner.iter().cloned()),
            None => out.push(item),
        }
    }
    match out.len() {
        0 => unit,
        1 => out.pop().unwrap(),
        _ => build(out),
    }
}

/// Prints with the fewest parentheses that parse back to the same
/// (normalized) tree.
impl fmt::Display for Regex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn child(f: &mut fmt::Formatter<'_>, r: &Regex, min: u8) -> fmt::Result {
            if r.precedence() < min {
                write!(f, "({r})")
            } else {
                write!(f, "{r}")
            }
        }
        match self {
            Regex::Empty => f.write_str("!"),
            Regex::Epsilon => f.write_str("~"),
            Regex::Literal(s) => f.write_str(s.as_str()),
            Regex::Concat(items) if items.is_empty() => f.write_str("~"),
            Regex::Alt(items) if items.is_empty() => f.write_str("!"),
            Regex::Concat(items) => items.iter().try_for_each(|r| child(f, r, 2)),
            Regex::Alt(items) => {
                for (i, r) in items.iter().enumerate() {
                    if i > 0 {
                        f.write_str("|")?;
                    }
                    child(f, r, 1)?;
                }
                Ok(())
            }
            Regex::Star(r) => child(f, r, 2).and_then(|_| f.write_str("*")),
            Regex::Plus(r) => child(f, r, 2).and_then(|_| f.write_str("+")),
            Regex::Optional(r) => child(f, r, 2).and_then(|_| f.write_str("?")),
        }
    }
}

pub fn parse_regex(text: &str) -> Result<Regex, ParseError> {
    let tokens: Vec<(usize, char)> =
        text.chars().enumerate().filter(|(_, c)| !c.is_whitespace()).map(|(i, c)| (i + 1, c)).collect();
    let end = text.chars().count() + 1;
    if tokens.is_empty() {
        return Err(ParseError::new(1, end, "empty expression"));
    }
    let mut parser = Parser { tokens, at: 0, end };
    let r = parser.alternation()?;
    match parser.peek() {
        None => Ok(r),
        Some((col, ')')) => Err(ParseError::new(1, col, "unbalanced ')'")),
        Some((col, c)) => Err(ParseError::new(1, col, format!("unexpected '{c}'"))),
    }
}

struct Parser {
    tokens: Vec<(usize, char)>,
    at: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<(usize, char)> {
        self.tokens.get(self.at).copied()
    }

    fn column(&self) -> usize {
        self.peek().map_or(self.end, |(col, _)| col)
    }

    fn alternation(&mut self) -> Result<Regex, ParseError> {
        let mut branches = vec![self.concatenation()?];
        while let Some((_, '|')) = self.peek() {
            self.at += 1;
            branches.push(self.concatenation()?);
        }
        Ok(if branches.len() == 1 { branches.pop().unwrap() } else { Regex::Alt(branches) }.normalize())
    }

    fn concatenation(&mut self) -> Result<Regex, ParseError> {
        let mut items = Vec::new();
        while let Some((_, c)) = self.peek() {
            if c == '|' || c == ')' {
                break;
            }
            items.push(self.postfix()?);
        }
        if items.is_empty() {
            let col = self.column();
            return Err(match self.peek() {
                Some((_, '|')) => ParseError::new(1, col, "dangling '|'"),
                Some((_, ')')) => ParseError::new(1, col, "empty group"),
                _ => ParseError::new(1, col, "unexpected end of input"),
            });
        }
        Ok(Regex::Concat(items).normalize())
    }

    fn postfix(&mut self) -> Result<Regex, ParseError> {
        let mut r = self.atom()?;
        while let Some((_, c)) = self.peek() {
            r = match c {
                '*' => Regex::Star(Box::new(r)),
                '+' => Regex::Plus(Box::new(r)),
                '?' => Regex::Optional(Box::new(r)),
                _ => break,
            };
            self.at += 1;
        }
        Ok(r)
    }

    fn atom(&mut self) -> Result<Regex, ParseError> {
        let Some((col, c)) = self.peek() else {
            return Err(ParseError::new(1, self.end, "unexpected end of input"));
        };
        self.at += 1;
        match c {
            '(' => {
                let inner = self.alternation()?;
                match self.peek() {
                    Some((_, ')')) => {
                        self.at += 1;
                        Ok(inner)
                    }
                    _ => Err(ParseError::new(1, col, "unbalanced '('")),
                }
            }
            '~' => Ok(Regex::Epsilon),
            '!' => Ok(Regex::Empty),
            '*' | '+' | '?' => Err(ParseError::new(1, col, format!("dangling '{c}'"))),
            c if c.is_ascii_alphanumeric() => Ok(Regex::literal(c)),
            c => Err(ParseError::new(1, col, format!("reserved character '{c}'"))),
        }
    }
}

/// Thompson-style ε-NFA; at most two states per AST node.
pub fn regex_to_nfa(r: &Regex) -> Nfa {
    let mut b = Builder { states: 0, transitions: Vec::new() };
    let (start, end) = b.build(r);
    Nfa::new(b.states, r.symbols(), b.transitions, start, [end]).expect("builder emits valid states")
}

struct Builder {
    states: usize,
    transitions: Vec<Transition>,
}

impl Builder {
    fn state(&mut self) -> usize {
        self.states += 1;
        self.states - 1
    }

    fn eps(&mut self, p: usize, q: usize) {
        self.transitions.push(Transition::epsilon(p, q));
    }

    fn build(&mut self, r: &Regex) -> (usize, usize) {
        match r {
            Regex::Empty => (self.state(), self.state()),
            Regex::Epsilon => {
                let s = self.state();
                (s, s)
            }
            Regex::Literal(sym) => {
                let (s, e) = (self.state(), self.state());
                self.transitions.push(Transition::symbol(s, sym.clone(), e));
                (s, e)
            }
            Regex::Concat(items) => {
                if items.is_empty() {
                    return self.build(&Regex::Epsilon);
                }
                let (start, mut end) = self.build(&items[0]);
                for item in &items[1..] {
                    let (s, e) = self.build(item);
                    self.eps(end, s);
                    end = e;
                }
                (start, end)
            }
            Regex::Alt(items) => {
                let (s, e) = (self.state(), self.state());
                for item in items {
                    let (is, ie) = self.build(item);
                    self.eps(s, is);
                    self.eps(ie, e);
                }
                (s, e)
            }
            Regex::Star(inner) | Regex::Plus(inner) | Regex::Optional(inner) => {
                let (s, e) = (self.state(), self.state());
                let (is, ie) = self.build(inner);
                self.eps(s, is);
                self.eps(ie, e);
                if !matches!(r, Regex::Plus(_)) {
                    self.eps(s, e);
                }
                if !matches!(r, Regex::Optional(_)) {
                    self.eps(ie, is);
                }
                (s, e)
            }
        }
    }
}
