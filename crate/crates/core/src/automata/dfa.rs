use std::collections::VecDeque;
use std::fmt;

use super::alphabet::{Alphabet, SymbolId};
use crate::error::{Error, Result};

/// Dense state index into a [`Dfa`].
pub type StateId = usize;

/// A finite sequence of symbol ids.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Trace(pub Vec<SymbolId>);

impl Trace {
    pub fn empty() -> Self {
        Trace(Vec::new())
    }

    /// Looks every name up in `alphabet`.
    pub fn from_names<S: AsRef<str>>(alphabet: &Alphabet, names: &[S]) -> Result<Self> {
        names
            .iter()
            .map(|n| {
                alphabet
                    .id(n.as_ref())
                    .ok_or_else(|| Error::UnknownSymbol(n.as_ref().to_string()))
            })
            .collect::<Result<Vec<_>>>()
            .map(Trace)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn symbols(&self) -> &[SymbolId] {
        &self.0
    }

    pub fn concat(&self, other: &Trace) -> Trace {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Trace(v)
    }

    /// Space separated symbol names.
    pub fn display<'a>(&'a self, alphabet: &'a Alphabet) -> impl fmt::Display + 'a {
        DisplayTrace {
            trace: self,
            alphabet,
        }
    }
}

impl From<Vec<SymbolId>> for Trace {
    fn from(v: Vec<SymbolId>) -> Self {
        Trace(v)
    }
}

struct DisplayTrace<'a> {
    trace: &'a Trace,
    alphabet: &'a Alphabet,
}

impl fmt::Display for DisplayTrace<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, &s) in self.trace.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            f.write_str(self.alphabet.name(s))?;
        }
        Ok(())
    }
}

/// A complete deterministic finite automaton.
///
/// The transition function is total and stored row-major: the successor of state
/// `q` on symbol `s` lives at `q * |Σ| + s`.
#[derive(Clone, PartialEq, Eq)]
pub struct Dfa {
    alphabet: Alphabet,
    initial: StateId,
    accepting: Vec<bool>,
    delta: Vec<StateId>,
}

impl Dfa {
    /// Builds a complete automaton, validating every index.
    pub fn new(
        alphabet: Alphabet,
        initial: StateId,
        accepting: Vec<bool>,
        delta: Vec<StateId>,
    ) -> Result<Self> {
        let n = accepting.len();
        if n == 0 {
            return Err(Error::InvalidParameter("automaton has no states".into()));
        }
        if initial >= n {
            return Err(Error::InvalidParameter(format!(
                "initial state {initial} out of range"
            )));
        }
        if delta.len() != n * alphabet.len() {
            return Err(Error::InvalidParameter(
                "transition table is not total".into(),
            ));
        }
        if let Some(&bad) = delta.iter().find(|&&t| t >= n) {
            return Err(Error::InvalidParameter(format!(
                "transition target {bad} out of range"
            )));
        }
        Ok(Dfa {
            alphabet,
            initial,
            accepting,
            delta,
        })
    }

    /// Builds an automaton from a possibly partial transition list. Missing
    /// `(state, symbol)` pairs are routed to one fresh sink state, added only when
    /// needed. Later duplicates overwrite earlier ones.
    pub fn from_partial<I>(
        alphabet: Alphabet,
        states: usize,
        initial: StateId,
        accepting: &[StateId],
        transitions: I,
    ) -> Result<Self>
    where
        I: IntoIterator<Item = (StateId, SymbolId, StateId)>,
    {
        let k = alphabet.len();
        let mut table: Vec<Option<StateId>> = vec![None; states * k];
        for (q, s, t) in transitions {
            if q >= states || t >= states || s >= k {
                return Err(Error::InvalidParameter(format!(
                    "transition ({q}, {s}, {t}) out of range"
                )));
            }
            table[q * k + s] = Some(t);
        }
        let mut acc = vec![false; states];
        for &q in accepting {
            if q >= states {
                return Err(Error::InvalidParameter(format!(
                    "accepting state {q} out of range"
                )));
            }
            acc[q] = true;
        }
        let needs_sink = states == 0 || table.iter().any(Option::is_none);
        let sink = states;
        let mut delta: Vec<StateId> = table.into_iter().map(|t| t.unwrap_or(sink)).collect();
        if needs_sink {
            acc.push(false);
            delta.extend(std::iter::repeat_n(sink, k));
        }
        Dfa::new(alphabet, initial, acc, delta)
    }

    /// One state accepting every trace.
    pub fn universal(alphabet: Alphabet) -> Self {
        let k = alphabet.len();
        Dfa::new(alphabet, 0, vec![true], vec![0; k]).expect("well formed")
    }

    /// One state accepting nothing.
    pub fn empty(alphabet: Alphabet) -> Self {
        let k = alphabet.len();
        Dfa::new(alphabet, 0, vec![false], vec![0; k]).expect("well formed")
    }

    /// Accepts only the empty trace.
    pub fn epsilon(alphabet: Alphabet) -> Self {
        let k = alphabet.len();
        Dfa::new(alphabet, 0, vec![true, false], vec![vec![1; k], vec![1; k]].concat())
            .expect("well formed")
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn state_count(&self) -> usize {
        self.accepting.len()
    }

    pub fn initial(&self) -> StateId {
        self.initial
    }

    pub fn is_accepting(&self, q: StateId) -> bool {
        self.accepting[q]
    }

    pub fn accepting_states(&self) -> impl Iterator<Item = StateId> + '_ {
        self.accepting
            .iter()
            .enumerate()
            .filter_map(|(q, &a)| a.then_some(q))
    }

    pub(crate) fn accepting_mask(&self) -> &[bool] {
        &self.accepting
    }

    pub fn next(&self, q: StateId, s: SymbolId) -> StateId {
        self.delta[q * self.alphabet.len() + s]
    }

    /// Successors of `q`, indexed by symbol.
    pub fn row(&self, q: StateId) -> &[StateId] {
        let k = self.alphabet.len();
        &self.delta[q * k..(q + 1) * k]
    }

    /// Number of transitions, the sink's self loops included.
    pub fn transition_count(&self) -> usize {
        self.delta.len()
    }

    /// State reached from `q` after reading `t`.
    pub fn run_from(&self, q: StateId, t: &[SymbolId]) -> StateId {
        t.iter().fold(q, |q, &s| self.next(q, s))
    }

    pub fn run(&self, t: &[SymbolId]) -> StateId {
        self.run_from(self.initial, t)
    }

    pub fn accepts(&self, t: &Trace) -> bool {
        self.accepting[self.run(&t.0)]
    }

    pub fn accepts_symbols(&self, t: &[SymbolId]) -> bool {
        self.accepting[self.run(t)]
    }

    /// States reachable from the initial state.
    pub fn reachable(&self) -> Vec<bool> {
        let mut seen = vec![false; self.state_count()];
        let mut queue = VecDeque::from([self.initial]);
        seen[self.initial] = true;
        while let Some(q) = queue.pop_front() {
            for &t in self.row(q) {
                if !seen[t] {
                    seen[t] = true;
                    queue.push_back(t);
                }
            }
        }
        seen
    }

    /// `result[q]` is true when no accepting state is reachable from `q`.
    pub fn error_states(&self) -> Vec<bool> {
        let n = self.state_count();
        let mut preds: Vec<Vec<StateId>> = vec![Vec::new(); n];
        for q in 0..n {
            for &t in self.row(q) {
                preds[t].push(q);
            }
        }
        let mut live = self.accepting.clone();
        let mut stack: Vec<StateId> = self.accepting_states().collect();
        while let Some(q) = stack.pop() {
            for &p in &preds[q] {
                if !live[p] {
                    live[p] = true;
                    stack.push(p);
                }
            }
        }
        live.into_iter().map(|l| !l).collect()
    }

    pub fn is_error_state(&self, q: StateId) -> bool {
        self.error_states()[q]
    }

    /// True when the accepted language is empty.
    pub fn is_empty_language(&self) -> bool {
        self.error_states()[self.initial]
    }

    /// A shortest accepted trace, if any.
    pub fn shortest_accepted(&self) -> Option<Trace> {
        let n = self.state_count();
        let mut parent: Vec<Option<(StateId, SymbolId)>> = vec![None; n];
        let mut seen = vec![false; n];
        seen[self.initial] = true;
        let mut queue = VecDeque::from([self.initial]);
        while let Some(q) = queue.pop_front() {
            if self.accepting[q] {
                let mut symbols = Vec::new();
                let mut cur = q;
                while let Some((p, s)) = parent[cur] {
                    symbols.push(s);
                    cur = p;
                }
                symbols.reverse();
                return Some(Trace(symbols));
            }
            for (s, &t) in self.row(q).iter().enumerate() {
                if !seen[t] {
                    seen[t] = true;
                    parent[t] = Some((q, s));
                    queue.push_back(t);
                }
            }
        }
        None
    }

    /// Same language over `target`, which must contain every symbol of this
    /// automaton. Symbols new to the automaton lead to a rejecting sink.
    pub fn over_alphabet(&self, target: &Alphabet) -> Result<Dfa> {
        if !self.alphabet.is_subset_of(target) {
            return Err(Error::AlphabetMismatch {
                left: self.alphabet.to_string(),
                right: target.to_string(),
            });
        }
        if &self.alphabet == target {
            return Ok(self.clone());
        }
        let k = target.len();
        let n = self.state_count();
        let full = target.symbols().iter().all(|s| self.alphabet.id(s).is_some());
        let states = if full { n } else { n + 1 };
        let sink = n;
        let mut delta = Vec::with_capacity(states * k);
        for q in 0..n {
            for name in target.symbols() {
                delta.push(match self.alphabet.id(name) {
                    Some(s) => self.next(q, s),
                    None => sink,
                });
            }
        }
        let mut accepting = self.accepting.clone();
        if !full {
            delta.extend(std::iter::repeat_n(sink, k));
            accepting.push(false);
        }
        Dfa::new(target.clone(), self.initial, accepting, delta)
    }

    /// Keeps only the states reachable from the initial state, renumbered in
    /// breadth-first order.
    pub fn trim_unreachable(&self) -> Dfa {
        let n = self.state_count();
        let mut order = Vec::with_capacity(n);
        let mut id = vec![usize::MAX; n];
        id[self.initial] = 0;
        order.push(self.initial);
        let mut head = 0;
        while head < order.len() {
            let q = order[head];
            head += 1;
            for &t in self.row(q) {
                if id[t] == usize::MAX {
                    id[t] = order.len();
                    order.push(t);
                }
            }
        }
        let delta = order
            .iter()
            .flat_map(|&q| self.row(q).iter().map(|&t| id[t]))
            .collect();
        let accepting = order.iter().map(|&q| self.accepting[q]).collect();
        Dfa::new(self.alphabet.clone(), 0, accepting, delta).expect("renumbering is total")
    }
}

impl fmt::Debug for Dfa {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Dfa over [{}] initial {}", self.alphabet, self.initial)?;
        for q in 0..self.state_count() {
            write!(f, "  {q}{}:", if self.accepting[q] { "*" } else { "" })?;
            for (s, t) in self.row(q).iter().enumerate() {
                write!(f, " {}->{t}", self.alphabet.name(s))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
