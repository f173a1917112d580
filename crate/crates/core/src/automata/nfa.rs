//! Nondeterministic automata. Internal scaffolding for regular expressions and
//! state merging; every public result is determinised first.

use std::collections::{BTreeSet, HashMap};

use super::alphabet::{Alphabet, SymbolId};
use super::dfa::{Dfa, StateId};

#[derive(Clone, Debug, Default)]
pub(crate) struct Nfa {
    pub(crate) accepting: Vec<bool>,
    pub(crate) edges: Vec<Vec<(SymbolId, StateId)>>,
    pub(crate) epsilon: Vec<Vec<StateId>>,
}

impl Nfa {
    pub(crate) fn with_states(n: usize) -> Self {
        Nfa {
            accepting: vec![false; n],
            edges: vec![Vec::new(); n],
            epsilon: vec![Vec::new(); n],
        }
    }

    pub(crate) fn add_state(&mut self) -> StateId {
        self.accepting.push(false);
        self.edges.push(Vec::new());
        self.epsilon.push(Vec::new());
        self.accepting.len() - 1
    }

    pub(crate) fn state_count(&self) -> usize {
        self.accepting.len()
    }

    fn closure(&self, set: &mut BTreeSet<StateId>) {
        let mut stack: Vec<StateId> = set.iter().copied().collect();
        while let Some(q) = stack.pop() {
            for &t in &self.epsilon[q] {
                if set.insert(t) {
                    stack.push(t);
                }
            }
        }
    }

    /// Subset construction from the given start states. The empty subset, when
    /// reached, becomes the rejecting sink. Subsets are numbered in discovery order.
    pub(crate) fn determinize_from(
        &self,
        alphabet: &Alphabet,
        starts: &[StateId],
    ) -> (Dfa, Vec<BTreeSet<StateId>>) {
        let k = alphabet.len();
        let mut ids: HashMap<BTreeSet<StateId>, StateId> = HashMap::new();
        let mut subsets: Vec<BTreeSet<StateId>> = Vec::new();
        let mut start = starts.iter().copied().collect::<BTreeSet<_>>();
        self.closure(&mut start);
        ids.insert(start.clone(), 0);
        subsets.push(start);
        let mut delta = Vec::new();
        let mut head = 0;
        while head < subsets.len() {
            let current = subsets[head].clone();
            head += 1;
            let mut moves: Vec<BTreeSet<StateId>> = vec![BTreeSet::new(); k];
            for &q in &current {
                for &(s, t) in &self.edges[q] {
                    moves[s].insert(t);
                }
            }
            for mut target in moves {
                self.closure(&mut target);
                let id = match ids.get(&target) {
                    Some(&id) => id,
                    None => {
                        let id = subsets.len();
                        ids.insert(target.clone(), id);
                        subsets.push(target);
                        id
                    }
                };
                delta.push(id);
            }
        }
        let accepting = subsets
            .iter()
            .map(|set| set.iter().any(|&q| self.accepting[q]))
            .collect();
        let dfa = Dfa::new(alphabet.clone(), 0, accepting, delta).expect("subset table is total");
        (dfa, subsets)
    }

    pub(crate) fn determinize(&self, alphabet: &Alphabet, start: StateId) -> Dfa {
        self.determinize_from(alphabet, &[start]).0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::Trace;

    #[test]
    fn subset_construction() {
        // (a|b)* b : nondeterministic guess of the last symbol.
        let alphabet = Alphabet::new(["a", "b"]).unwrap();
        let mut n = Nfa::with_states(2);
        n.edges[0] = vec![(0, 0), (1, 0), (1, 1)];
        n.accepting[1] = true;
        let d = n.determinize(&alphabet, 0);
        assert!(d.accepts(&Trace(vec![0, 1])));
        assert!(!d.accepts(&Trace(vec![1, 0])));
        assert!(!d.accepts(&Trace(vec![])));
    }

    #[test]
    fn epsilon_closure() {
        let alphabet = Alphabet::new(["a"]).unwrap();
        let mut n = Nfa::with_states(3);
        n.epsilon[0] = vec![1];
        n.edges[1] = vec![(0, 2)];
        n.epsilon[2] = vec![0];
        n.accepting[2] = true;
        let d = n.determinize(&alphabet, 0);
        assert!(!d.accepts(&Trace(vec![])));
        assert!(d.accepts(&Trace(vec![0, 0, 0])));
    }
}
