//! Edge-labelled digraphs and state elimination.
//!
//! The same elimination drives two computations: labels that are generating
//! functions yield the OGF of the accepted language, labels that only track
//! Kleene-star nesting yield the star height of the regular expression that
//! state elimination would build.

use std::collections::{BTreeMap, BTreeSet};

use crate::automata::{Dfa, StateId};
use crate::error::{Error, Result};
use crate::scalar::Coefficient;

use super::rational::RationalFunction;

/// Labels forming the path algebra that node elimination needs.
pub trait PathLabel: Clone {
    /// Label of the empty trace.
    fn epsilon() -> Self;
    /// Label of `n > 0` distinct one-symbol traces.
    fn symbols(n: usize) -> Self;
    fn union(&self, other: &Self) -> Self;
    fn concat(&self, other: &Self) -> Self;
    fn star(&self) -> Result<Self>;
    /// Cost proxy used to order eliminations.
    fn weight(&self) -> usize;
}

impl<T: Coefficient> PathLabel for RationalFunction<T> {
    fn epsilon() -> Self {
        RationalFunction::one()
    }

    fn symbols(n: usize) -> Self {
        RationalFunction::linear(n)
    }

    fn union(&self, other: &Self) -> Self {
        self.add(other)
    }

    fn concat(&self, other: &Self) -> Self {
        self.mul(other)
    }

    fn star(&self) -> Result<Self> {
        self.kleene()
    }

    fn weight(&self) -> usize {
        self.degree()
    }
}

/// Star height of a regular expression label.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord)]
pub struct StarHeight(pub usize);

impl PathLabel for StarHeight {
    fn epsilon() -> Self {
        StarHeight(0)
    }

    fn symbols(_: usize) -> Self {
        StarHeight(0)
    }

    fn union(&self, other: &Self) -> Self {
        StarHeight(self.0.max(other.0))
    }

    fn concat(&self, other: &Self) -> Self {
        StarHeight(self.0.max(other.0))
    }

    fn star(&self) -> Result<Self> {
        Ok(StarHeight(self.0 + 1))
    }

    fn weight(&self) -> usize {
        self.0
    }
}

/// Node id of the distinguished source.
pub const INITIAL: usize = 0;
/// Node id of the distinguished sink.
pub const FINAL: usize = 1;

/// Node of automaton state `q`.
pub fn node_of(q: StateId) -> usize {
    q + 2
}

/// Digraph with labelled edges. An absent edge carries the zero label.
#[derive(Clone, Debug)]
pub struct LabeledDigraph<L> {
    out: Vec<BTreeMap<usize, L>>,
    inc: Vec<BTreeSet<usize>>,
    alive: Vec<bool>,
}

impl<L: PathLabel> LabeledDigraph<L> {
    /// Graph with `initial`, `final` and one node per automaton state: edge
    /// `q → t` carries the symbols leading from `q` to `t`, `initial → q0` and
    /// `q → final` (for accepting `q`) carry the empty trace.
    pub fn from_dfa(d: &Dfa) -> Self {
        let n = d.state_count() + 2;
        let mut g = LabeledDigraph {
            out: vec![BTreeMap::new(); n],
            inc: vec![BTreeSet::new(); n],
            alive: vec![true; n],
        };
        let mut counts: BTreeMap<StateId, usize> = BTreeMap::new();
        for q in 0..d.state_count() {
            counts.clear();
            for &t in d.row(q) {
                *counts.entry(t).or_default() += 1;
            }
            for (&t, &c) in &counts {
                g.set(node_of(q), node_of(t), L::symbols(c));
            }
        }
        g.set(INITIAL, node_of(d.initial()), L::epsilon());
        for q in d.accepting_states() {
            g.set(node_of(q), FINAL, L::epsilon());
        }
        g
    }

    fn set(&mut self, from: usize, to: usize, label: L) {
        self.out[from].insert(to, label);
        self.inc[to].insert(from);
    }

    pub fn edge(&self, from: usize, to: usize) -> Option<&L> {
        self.out[from].get(&to)
    }

    pub fn successors(&self, n: usize) -> impl Iterator<Item = (usize, &L)> {
        self.out[n].iter().map(|(&s, l)| (s, l))
    }

    pub fn predecessors(&self, n: usize) -> impl Iterator<Item = usize> + '_ {
        self.inc[n].iter().copied()
    }

    /// Nodes still present other than `initial` and `final`.
    pub fn interior_nodes(&self) -> impl Iterator<Item = usize> + '_ {
        (2..self.alive.len()).filter(|&n| self.alive[n])
    }

    pub fn node_count(&self) -> usize {
        self.alive.iter().filter(|&&a| a).count()
    }

    /// Removes `n`, rerouting every predecessor-successor pair through the
    /// star of its self loop. Returns the largest weight among updated edges.
    pub fn eliminate_node(&mut self, n: usize) -> Result<usize> {
        if n == INITIAL || n == FINAL {
            return Err(Error::InvalidParameter(
                "initial and final nodes cannot be eliminated".into(),
            ));
        }
        if !self.alive[n] {
            return Err(Error::InvalidParameter(format!("node {n} already eliminated")));
        }
        let loop_star = match self.out[n].remove(&n) {
            Some(l) => {
                self.inc[n].remove(&n);
                Some(l.star()?)
            }
            None => None,
        };
        let succ: Vec<(usize, L)> = std::mem::take(&mut self.out[n])
            .into_iter()
            .map(|(s, l)| match &loop_star {
                Some(star) => (s, star.concat(&l)),
                None => (s, l),
            })
            .collect();
        let preds: Vec<usize> = std::mem::take(&mut self.inc[n]).into_iter().collect();
        for &(s, _) in &succ {
            self.inc[s].remove(&n);
        }
        let mut heaviest = 0;
        for p in preds {
            let into = self.out[p].remove(&n).expect("incoming edge recorded");
            for (s, via) in &succ {
                let path = into.concat(via);
                let label = match self.out[p].get(s) {
                    Some(old) => old.union(&path),
                    None => path,
                };
                heaviest = heaviest.max(label.weight());
                self.set(p, *s, label);
            }
        }
        self.alive[n] = false;
        Ok(heaviest)
    }

    /// Deletes nodes that lie on no `initial → final` path. Such nodes never
    /// contribute to the final label.
    pub fn remove_useless(&mut self) {
        let n = self.alive.len();
        let mut fwd = vec![false; n];
        let mut stack = vec![INITIAL];
        fwd[INITIAL] = true;
        while let Some(q) = stack.pop() {
            for &s in self.out[q].keys() {
                if !fwd[s] {
                    fwd[s] = true;
                    stack.push(s);
                }
            }
        }
        let mut bwd = vec![false; n];
        stack.push(FINAL);
        bwd[FINAL] = true;
        while let Some(q) = stack.pop() {
            for &p in &self.inc[q] {
                if !bwd[p] {
                    bwd[p] = true;
                    stack.push(p);
                }
            }
        }
        for q in 2..n {
            if self.alive[q] && !(fwd[q] && bwd[q]) {
                for s in std::mem::take(&mut self.out[q]).into_keys() {
                    self.inc[s].remove(&q);
                }
                for p in std::mem::take(&mut self.inc[q]) {
                    self.out[p].remove(&q);
                }
                self.alive[q] = false;
            }
        }
    }

    /// Next node by the elimination heuristic: no self loop first, then the
    /// lightest self loop, then the fewest predecessor × successor pairs, then
    /// the lowest id.
    pub fn choose_node(&self) -> Option<usize> {
        self.interior_nodes().min_by_key(|&n| {
            let loop_key = self.out[n].get(&n).map_or(0, |l| 1 + l.weight());
            let has_loop = usize::from(self.out[n].contains_key(&n));
            let preds = self.inc[n].len() - has_loop;
            let succs = self.out[n].len() - has_loop;
            (loop_key, preds * succs, n)
        })
    }

    /// Label of `initial → final`; `None` when no path remains.
    pub fn result(&self) -> Option<&L> {
        self.edge(INITIAL, FINAL)
    }
}
