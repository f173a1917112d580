//! Small regular-expression front end for building automata by hand.
//!
//! Syntax, loosest binding first:
//!
//! * `r | s` union
//! * `r s`, `r . s` or `r · s` concatenation
//! * `r*`, `r+`, `r?` postfix operators
//! * `name` a symbol, `{a, b, c}` a symbol class, `(r)` grouping,
//!   `ε` / `eps` / `()` the empty trace, `∅` the empty language
//!
//! Symbol names are runs of letters, digits and `_`.

use super::alphabet::{Alphabet, SymbolId};
use super::dfa::{Dfa, StateId};
use super::nfa::Nfa;
use super::ops::minimize;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Regex {
    Nothing,
    Epsilon,
    /// One symbol out of a non-empty set.
    Class(Vec<SymbolId>),
    Concat(Vec<Regex>),
    Union(Vec<Regex>),
    Star(Box<Regex>),
}

impl Regex {
    pub fn symbol(s: SymbolId) -> Self {
        Regex::Class(vec![s])
    }

    pub fn star(self) -> Self {
        Regex::Star(Box::new(self))
    }

    pub fn parse(src: &str, alphabet: &Alphabet) -> Result<Regex> {
        let mut p = Parser {
            chars: src.char_indices().collect(),
            pos: 0,
            alphabet,
        };
        let r = p.union()?;
        p.skip_ws();
        if let Some(&(off, c)) = p.chars.get(p.pos) {
            return Err(Error::Regex {
                offset: off,
                message: format!("unexpected `{c}`"),
            });
        }
        Ok(r)
    }

    /// Maximum nesting depth of Kleene stars.
    pub fn star_height(&self) -> usize {
        match self {
            Regex::Nothing | Regex::Epsilon | Regex::Class(_) => 0,
            Regex::Concat(v) | Regex::Union(v) => v.iter().map(Regex::star_height).max().unwrap_or(0),
            Regex::Star(r) => 1 + r.star_height(),
        }
    }

    /// Minimal complete automaton for the expression.
    pub fn to_dfa(&self, alphabet: &Alphabet) -> Dfa {
        let mut nfa = Nfa::with_states(0);
        let (start, end) = build(self, &mut nfa);
        nfa.accepting[end] = true;
        minimize(&nfa.determinize(alphabet, start))
    }
}

/// Compiles `src` straight to a minimal automaton.
pub fn regex_to_dfa(src: &str, alphabet: &Alphabet) -> Result<Dfa> {
    Ok(Regex::parse(src, alphabet)?.to_dfa(alphabet))
}

fn build(r: &Regex, nfa: &mut Nfa) -> (StateId, StateId) {
    let start = nfa.add_state();
    let end = nfa.add_state();
    match r {
        Regex::Nothing => {}
        Regex::Epsilon => nfa.epsilon[start].push(end),
        Regex::Class(symbols) => {
            for &s in symbols {
                nfa.edges[start].push((s, end));
            }
        }
        Regex::Concat(parts) => {
            let mut cur = start;
            for part in parts {
                let (s, e) = build(part, nfa);
                nfa.epsilon[cur].push(s);
                cur = e;
            }
            nfa.epsilon[cur].push(end);
        }
        Regex::Union(parts) => {
            for part in parts {
                let (s, e) = build(part, nfa);
                nfa.epsilon[start].push(s);
                nfa.epsilon[e].push(end);
            }
        }
        Regex::Star(inner) => {
            let (s, e) = build(inner, nfa);
            nfa.epsilon[start].push(s);
            nfa.epsilon[start].push(end);
            nfa.epsilon[e].push(s);
            nfa.epsilon[e].push(end);
        }
    }
    (start, end)
}

struct Parser<'a> {
    chars: Vec<(usize, char)>,
    pos: usize,
    alphabet: &'a Alphabet,
}

fn is_ident(c: char) -> bool {
    c.is_alphanumeric() && c != 'ε' || c == '_'
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while matches!(self.chars.get(self.pos), Some((_, c)) if c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn offset(&self) -> usize {
        self.chars
            .get(self.pos)
            .map(|&(o, _)| o)
            .unwrap_or_else(|| self.chars.last().map(|&(o, c)| o + c.len_utf8()).unwrap_or(0))
    }

    fn fail<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Regex {
            offset: self.offset(),
            message: message.into(),
        })
    }

    fn expect(&mut self, want: char) -> Result<()> {
        if self.peek() == Some(want) {
            self.pos += 1;
            Ok(())
        } else {
            self.fail(format!("expected `{want}`"))
        }
    }

    fn union(&mut self) -> Result<Regex> {
        let mut alts = vec![self.concat()?];
        while self.peek() == Some('|') {
            self.pos += 1;
            alts.push(self.concat()?);
        }
        Ok(if alts.len() == 1 {
            alts.pop().unwrap()
        } else {
            Regex::Union(alts)
        })
    }

    fn concat(&mut self) -> Result<Regex> {
        let mut parts = Vec::new();
        loop {
            match self.peek() {
                Some('.' | '·') if !parts.is_empty() => {
                    self.pos += 1;
                    parts.push(self.postfix()?);
                }
                Some(c) if c == '(' || c == '{' || c == 'ε' || c == '∅' || is_ident(c) => {
                    parts.push(self.postfix()?)
                }
                _ => break,
            }
        }
        Ok(match parts.len() {
            0 => Regex::Epsilon,
            1 => parts.pop().unwrap(),
            _ => Regex::Concat(parts),
        })
    }

    fn postfix(&mut self) -> Result<Regex> {
        let mut r = self.atom()?;
        loop {
            match self.peek() {
                Some('*') => r = r.star(),
                Some('+') => r = Regex::Concat(vec![r.clone(), r.star()]),
                Some('?') => r = Regex::Union(vec![Regex::Epsilon, r]),
                _ => return Ok(r),
            }
            self.pos += 1;
        }
    }

    fn ident(&mut self) -> Result<SymbolId> {
        self.skip_ws();
        let start = self.pos;
        while matches!(self.chars.get(self.pos), Some(&(_, c)) if is_ident(c)) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.fail("expected a symbol");
        }
        let name: String = self.chars[start..self.pos].iter().map(|&(_, c)| c).collect();
        self.alphabet.id(&name).ok_or(Error::Regex {
            offset: self.chars[start].0,
            message: format!("symbol `{name}` is not in the alphabet"),
        })
    }

    fn atom(&mut self) -> Result<Regex> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let r = self.union()?;
                self.expect(')')?;
                Ok(r)
            }
            Some('{') => {
                self.pos += 1;
                let mut symbols = vec![self.ident()?];
                while self.peek() == Some(',') {
                    self.pos += 1;
                    symbols.push(self.ident()?);
                }
                self.expect('}')?;
                symbols.sort_unstable();
                symbols.dedup();
                Ok(Regex::Class(symbols))
            }
            Some('ε') => {
                self.pos += 1;
                Ok(Regex::Epsilon)
            }
            Some('∅') => {
                self.pos += 1;
                Ok(Regex::Nothing)
            }
            Some(c) if is_ident(c) => {
                let save = self.pos;
                let word: String = self.chars[self.pos..]
                    .iter()
                    .map(|&(_, c)| c)
                    .take_while(|&c| is_ident(c))
                    .collect();
                if word == "eps" && self.alphabet.id("eps").is_none() {
                    self.pos = save + 3;
                    return Ok(Regex::Epsilon);
                }
                Ok(Regex::symbol(self.ident()?))
            }
            _ => self.fail("expected an expression"),
        }
    }
}
