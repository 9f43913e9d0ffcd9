//! Process-wide symbol table.
//!
//! Symbols are interned into an append-only table. The standard parameters
//! are registered first, in a fixed order, so that canonical printing is
//! stable across runs regardless of which symbol a program touches first.

use std::fmt;
use std::sync::{OnceLock, RwLock};

use super::ScalarError;

/// Maximum number of distinct symbols a session may register.
pub const MAX_SYMBOLS: usize = 24;

/// Symbols registered at start-up, in table order.
pub const STANDARD_SYMBOLS: &[&str] = &[
    "q", "z", "w", "s", "c", "t", "u", "v", "alpha", "dp", "dm", "a", "b",
];

fn table() -> &'static RwLock<Vec<String>> {
    static TABLE: OnceLock<RwLock<Vec<String>>> = OnceLock::new();
    TABLE.get_or_init(|| RwLock::new(STANDARD_SYMBOLS.iter().map(|s| s.to_string()).collect()))
}

/// An interned symbol: an index into the session symbol table.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Symbol(pub(crate) u16);

impl Symbol {
    /// Interns `name`, appending it to the table if it is new.
    ///
    /// Names must be lowercase ASCII identifiers (letters, digits, `_`,
    /// starting with a letter).
    pub fn new(name: &str) -> Result<Symbol, ScalarError> {
        if !is_valid_name(name) {
            return Err(ScalarError::InvalidSymbol(name.to_string()));
        }
        if let Some(s) = Self::lookup(name) {
            return Ok(s);
        }
        let mut tab = table().write().expect("symbol table poisoned");
        if let Some(i) = tab.iter().position(|n| n == name) {
            return Ok(Symbol(i as u16));
        }
        if tab.len() >= MAX_SYMBOLS {
            return Err(ScalarError::TooManySymbols(MAX_SYMBOLS));
        }
        tab.push(name.to_string());
        Ok(Symbol((tab.len() - 1) as u16))
    }

    /// Interns a name known to be valid. Panics on an invalid name or a full table.
    pub fn named(name: &str) -> Symbol {
        Symbol::new(name).unwrap_or_else(|e| panic!("cannot intern symbol {name:?}: {e}"))
    }

    pub fn lookup(name: &str) -> Option<Symbol> {
        let tab = table().read().expect("symbol table poisoned");
        tab.iter().position(|n| n == name).map(|i| Symbol(i as u16))
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn name(self) -> String {
        table().read().expect("symbol table poisoned")[self.index()].clone()
    }

    /// Number of symbols currently registered.
    pub fn count() -> usize {
        table().read().expect("symbol table poisoned").len()
    }
}

fn is_valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_lowercase() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_lowercase() || c.is_ascii_digit() || c == '_')
}

impl fmt::Debug for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// Shorthands for the standard parameters.
pub mod sym {
    use super::Symbol;

    pub fn q() -> Symbol {
        Symbol(0)
    }
    pub fn z() -> Symbol {
        Symbol(1)
    }
    pub fn w() -> Symbol {
        Symbol(2)
    }
    pub fn s() -> Symbol {
        Symbol(3)
    }
    pub fn c() -> Symbol {
        Symbol(4)
    }
    pub fn t() -> Symbol {
        Symbol(5)
    }
    pub fn u() -> Symbol {
        Symbol(6)
    }
    pub fn v() -> Symbol {
        Symbol(7)
    }
    pub fn alpha() -> Symbol {
        Symbol(8)
    }
    pub fn dp() -> Symbol {
        Symbol(9)
    }
    pub fn dm() -> Symbol {
        Symbol(10)
    }
    pub fn a() -> Symbol {
        Symbol(11)
    }
    pub fn b() -> Symbol {
        Symbol(12)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_order_is_fixed() {
        for (i, name) in STANDARD_SYMBOLS.iter().enumerate() {
            assert_eq!(Symbol::named(name).index(), i);
        }
        assert_eq!(sym::alpha().name(), "alpha");
    }

    #[test]
    fn interning_is_idempotent() {
        let a = Symbol::named("kp");
        let b = Symbol::named("kp");
        assert_eq!(a, b);
        assert!(a.index() >= STANDARD_SYMBOLS.len());
    }

    #[test]
    fn rejects_bad_names() {
        assert!(Symbol::new("Q").is_err());
        assert!(Symbol::new("1x").is_err());
        assert!(Symbol::new("").is_err());
    }
}
