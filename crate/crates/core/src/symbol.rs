//! Decoration symbols and alphabets.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// The single generator of the undecorated case.
pub const BULLET: &str = "•";

/// A letter of the decoration alphabet `X` (or of `V` in the word case).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Symbol(Arc<str>);

impl Symbol {
    pub fn new(name: &str) -> Self {
        Symbol(Arc::from(name))
    }

    pub fn bullet() -> Self {
        Symbol::new(BULLET)
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn is_valid_name(name: &str) -> bool {
        !name.is_empty() && name.chars().all(is_symbol_char)
    }
}

pub(crate) fn is_symbol_char(c: char) -> bool {
    c.is_alphanumeric() || c == '_' || c == '•'
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<&str> for Symbol {
    fn from(s: &str) -> Self {
        Symbol::new(s)
    }
}

impl From<char> for Symbol {
    fn from(c: char) -> Self {
        Symbol::new(c.encode_utf8(&mut [0; 4]))
    }
}

/// An explicit, ordered decoration alphabet.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Alphabet {
    symbols: Vec<Symbol>,
}

impl Alphabet {
    pub fn new<I, S>(symbols: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut out: Vec<Symbol> = Vec::new();
        for s in symbols {
            let s = s.as_ref().trim();
            if !Symbol::is_valid_name(s) {
                return Err(Error::Parse(format!("invalid symbol name `{s}`")));
            }
            let sym = Symbol::new(s);
            if out.contains(&sym) {
                return Err(Error::Parse(format!("duplicate symbol `{s}`")));
            }
            out.push(sym);
        }
        if out.is_empty() {
            return Err(Error::Parse("empty alphabet".into()));
        }
        Ok(Alphabet { symbols: out })
    }

    /// The one-generator alphabet `{•}`.
    pub fn bullet() -> Self {
        Alphabet {
            symbols: vec![Symbol::bullet()],
        }
    }

    /// Parses a comma-separated list such as `a,b,c`.
    pub fn parse_list(list: &str) -> Result<Self> {
        Alphabet::new(list.split(','))
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn contains(&self, s: &Symbol) -> bool {
        self.symbols.contains(s)
    }

    pub fn check(&self, s: &Symbol) -> Result<()> {
        if self.contains(s) {
            Ok(())
        } else {
            Err(Error::UnknownSymbol(s.to_string()))
        }
    }
}
