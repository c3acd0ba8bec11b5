//! Interned variable names.
//!
//! One global, append-only registry per process run: the same name used by
//! two different suites denotes the same symbol, so polynomials built in
//! separate modules can share rings.

use std::fmt;
use std::sync::{OnceLock, RwLock};

/// An interned variable name. Cheap to copy and compare.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Symbol(u32);

fn registry() -> &'static RwLock<Vec<String>> {
    static REG: OnceLock<RwLock<Vec<String>>> = OnceLock::new();
    REG.get_or_init(|| RwLock::new(Vec::new()))
}

impl Symbol {
    /// Intern `name`, returning the existing symbol if already registered.
    pub fn intern(name: &str) -> Symbol {
        {
            let reg = registry().read().unwrap();
            if let Some(ix) = reg.iter().position(|s| s == name) {
                return Symbol(ix as u32);
            }
        }
        let mut reg = registry().write().unwrap();
        // re-check under the write lock
        if let Some(ix) = reg.iter().position(|s| s == name) {
            return Symbol(ix as u32);
        }
        reg.push(name.to_string());
        Symbol((reg.len() - 1) as u32)
    }

    pub fn as_str(&self) -> String {
        registry().read().unwrap()[self.0 as usize].clone()
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_str())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn interning_is_stable() {
        let a = Symbol::intern("x1");
        let b = Symbol::intern("x1");
        let c = Symbol::intern("y1");
        assert_eq!(a, b);
        assert_ne!(a, c);
        assert_eq!(a.as_str(), "x1");
    }
}
