use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::sync::Arc;
use core::fmt;

use crate::error::Error;

/// A single alphabet token.
///
/// Symbols are opaque printable tokens. The characters `#`, `$` and `~`, a
/// leading `@`, whitespace and control characters are reserved by the text
/// formats and never appear inside a symbol.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Symbol(Arc<str>);

/// Alphabets are kept sorted; the sorted order is the canonical symbol order.
pub type Alphabet = BTreeSet<Symbol>;

impl Symbol {
    pub fn new(token: &str) -> Result<Self, Error> {
        if !is_valid_token(token) {
            return Err(Error::InvalidSymbol(String::from(token)));
        }
        Ok(Symbol(Arc::from(token)))
    }

    pub fn from_char(c: char) -> Result<Self, Error> {
        let mut buf = [0u8; 4];
        Symbol::new(c.encode_utf8(&mut buf))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub(crate) fn is_single_char(&self) -> bool {
        self.0.chars().nth(1).is_none()
    }
}

fn is_valid_token(token: &str) -> bool {
    !token.is_empty()
        && !token.starts_with('@')
        && token.chars().all(|c| !c.is_whitespace() && !c.is_control() && !matches!(c, '#' | '$' | '~'))
}

impl fmt::Debug for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", &*self.0)
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// Builds an alphabet from single-character symbols, e.g. `alphabet("ab")`.
pub fn alphabet(chars: &str) -> Result<Alphabet, Error> {
    chars.chars().filter(|c| !c.is_whitespace()).map(Symbol::from_char).collect()
}
