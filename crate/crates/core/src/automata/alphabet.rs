use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

/// Dense symbol index into an [`Alphabet`].
pub type SymbolId = usize;

/// An ordered set of named symbols. Ids are assigned `0..len` in list order.
#[derive(Clone, Default)]
pub struct Alphabet {
    symbols: Vec<String>,
    index: HashMap<String, SymbolId>,
}

impl Alphabet {
    pub fn new<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut alphabet = Alphabet::default();
        for name in names {
            alphabet.push(name.into())?;
        }
        Ok(alphabet)
    }

    /// Appends a symbol and returns its id.
    pub fn push(&mut self, name: String) -> Result<SymbolId> {
        if name.is_empty()
            || name.chars().any(|c| c.is_whitespace() || c == '#' || c == ':')
        {
            return Err(Error::InvalidParameter(format!(
                "invalid symbol name `{name}`"
            )));
        }
        if self.index.contains_key(&name) {
            return Err(Error::Duplicate {
                line: 0,
                what: "symbol",
                name,
            });
        }
        let id = self.symbols.len();
        self.index.insert(name.clone(), id);
        self.symbols.push(name);
        Ok(id)
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn id(&self, name: &str) -> Option<SymbolId> {
        self.index.get(name).copied()
    }

    pub fn name(&self, id: SymbolId) -> &str {
        &self.symbols[id]
    }

    pub fn symbols(&self) -> &[String] {
        &self.symbols
    }

    /// True when both alphabets contain the same names, in any order.
    pub fn same_names(&self, other: &Alphabet) -> bool {
        self.len() == other.len() && self.symbols.iter().all(|s| other.index.contains_key(s))
    }

    /// True when every name of `self` occurs in `other`.
    pub fn is_subset_of(&self, other: &Alphabet) -> bool {
        self.symbols.iter().all(|s| other.index.contains_key(s))
    }

    /// `self` followed by the names of `other` that `self` lacks.
    pub fn union(&self, other: &Alphabet) -> Alphabet {
        let mut out = self.clone();
        for name in &other.symbols {
            if !out.index.contains_key(name) {
                out.push(name.clone()).expect("names were validated on insertion");
            }
        }
        out
    }

    pub(crate) fn ensure_equal(&self, other: &Alphabet) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::AlphabetMismatch {
                left: self.symbols.join(" "),
                right: other.symbols.join(" "),
            })
        }
    }
}

impl PartialEq for Alphabet {
    fn eq(&self, other: &Self) -> bool {
        self.symbols == other.symbols
    }
}

impl Eq for Alphabet {}

impl fmt::Debug for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.symbols).finish()
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.symbols.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_follow_insertion_order() {
        let a = Alphabet::new(["x", "y", "z"]).unwrap();
        assert_eq!(a.id("x"), Some(0));
        assert_eq!(a.id("z"), Some(2));
        assert_eq!(a.name(1), "y");
        assert_eq!(a.id("w"), None);
    }

    #[test]
    fn rejects_duplicates_and_empty_names() {
        assert!(matches!(
            Alphabet::new(["a", "a"]),
            Err(Error::Duplicate { what: "symbol", .. })
        ));
        assert!(Alphabet::new([""]).is_err());
    }

    #[test]
    fn equality_is_order_sensitive() {
        let a = Alphabet::new(["a", "b"]).unwrap();
        let b = Alphabet::new(["b", "a"]).unwrap();
        assert_ne!(a, b);
        assert!(a.same_names(&b));
        assert_eq!(a.union(&Alphabet::new(["c", "a"]).unwrap()).symbols(), ["a", "b", "c"]);
    }
}
