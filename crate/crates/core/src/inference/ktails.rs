use std::collections::{BTreeMap, HashMap};

use super::{InferenceConfig, TrainingSet};
use crate::automata::nfa::Nfa;
use crate::automata::{minimize, Dfa, StateId, SymbolId};
use crate::error::{Error, Result};

struct Trie {
    children: Vec<BTreeMap<SymbolId, StateId>>,
    accepting: Vec<bool>,
}

fn trie(ts: &TrainingSet) -> Trie {
    let mut t = Trie { children: vec![BTreeMap::new()], accepting: vec![false] };
    for trace in ts.traces() {
        let mut q = 0;
        for &s in trace.symbols() {
            q = match t.children[q].get(&s) {
                Some(&next) => next,
                None => {
                    let next = t.children.len();
                    t.children.push(BTreeMap::new());
                    t.accepting.push(false);
                    t.children[q].insert(s, next);
                    next
                }
            };
        }
        t.accepting[q] = true;
    }
    t
}

/// Number of distinct prefixes of the training traces.
pub fn pta_state_count(ts: &TrainingSet) -> usize {
    trie(ts).children.len()
}

/// Prefix tree acceptor: one state per distinct prefix, accepting exactly the
/// training traces. Completed with a sink.
pub fn build_pta(ts: &TrainingSet) -> Result<Dfa> {
    if ts.is_empty() {
        return Err(Error::InvalidParameter("empty training set".into()));
    }
    let t = trie(ts);
    let accepting: Vec<StateId> = (0..t.accepting.len()).filter(|&q| t.accepting[q]).collect();
    let edges = t
        .children
        .iter()
        .enumerate()
        .flat_map(|(q, c)| c.iter().map(move |(&s, &n)| (q, s, n)));
    Dfa::from_partial(ts.alphabet().clone(), t.children.len(), 0, &accepting, edges)
}

/// Class of every NFA state under equality of the accepted suffixes of
/// length at most `k`. The subset automaton reachable from all singletons is
/// refined `k` times, starting from acceptance.
fn tail_classes(nfa: &Nfa, alphabet_size: usize, k: usize) -> Vec<usize> {
    let n = nfa.state_count();
    let mut ids: HashMap<Vec<StateId>, usize> = HashMap::new();
    let mut subsets: Vec<Vec<StateId>> = Vec::new();
    let mut intern = |set: Vec<StateId>, subsets: &mut Vec<Vec<StateId>>| -> usize {
        *ids.entry(set.clone()).or_insert_with(|| {
            subsets.push(set);
            subsets.len() - 1
        })
    };
    let roots: Vec<usize> = (0..n).map(|q| intern(vec![q], &mut subsets)).collect();
    let mut delta: Vec<usize> = Vec::new();
    let mut head = 0;
    while head < subsets.len() {
        let mut moves: Vec<Vec<StateId>> = vec![Vec::new(); alphabet_size];
        for &q in &subsets[head] {
            for &(s, t) in &nfa.edges[q] {
                moves[s].push(t);
            }
        }
        for mut m in moves {
            m.sort_unstable();
            m.dedup();
            delta.push(intern(m, &mut subsets));
        }
        head += 1;
    }
    let accepting: Vec<bool> = subsets.iter().map(|s| s.iter().any(|&q| nfa.accepting[q])).collect();
    let mut class: Vec<usize> = accepting.iter().map(|&a| usize::from(a)).collect();
    let mut count = class.iter().collect::<std::collections::BTreeSet<_>>().len();
    for _ in 0..k {
        let mut sig: HashMap<Vec<usize>, usize> = HashMap::new();
        let next: Vec<usize> = (0..subsets.len())
            .map(|i| {
                let mut key = Vec::with_capacity(alphabet_size + 1);
                key.push(class[i]);
                key.extend(delta[i * alphabet_size..(i + 1) * alphabet_size].iter().map(|&t| class[t]));
                let len = sig.len();
                *sig.entry(key).or_insert(len)
            })
            .collect();
        class = next;
        if sig.len() == count {
            break;
        }
        count = sig.len();
    }
    roots.into_iter().map(|r| class[r]).collect()
}

/// Merges NFA states by class, renumbering classes in order of first member.
fn quotient(nfa: &Nfa, class: &[usize]) -> (Nfa, Vec<StateId>) {
    let mut renumber: HashMap<usize, StateId> = HashMap::new();
    let map: Vec<StateId> = class
        .iter()
        .map(|c| {
            let len = renumber.len();
            *renumber.entry(*c).or_insert(len)
        })
        .collect();
    let mut out = Nfa::with_states(renumber.len());
    for (q, &m) in map.iter().enumerate() {
        out.accepting[m] |= nfa.accepting[q];
        for &(s, t) in &nfa.edges[q] {
            out.edges[m].push((s, map[t]));
        }
    }
    for e in &mut out.edges {
        e.sort_unstable();
        e.dedup();
    }
    (out, map)
}

/// k-tails: starting from the prefix tree acceptor, repeatedly merges states
/// whose sets of accepted suffixes of length at most `k` coincide, until no
/// two states share a tail set; then determinises and minimises.
pub fn k_tails(ts: &TrainingSet, cfg: &InferenceConfig) -> Result<Dfa> {
    cfg.validate()?;
    if ts.is_empty() {
        return Err(Error::InvalidParameter("empty training set".into()));
    }
    let t = trie(ts);
    let mut nfa = Nfa::with_states(t.children.len());
    nfa.accepting = t.accepting;
    for (q, c) in t.children.iter().enumerate() {
        nfa.edges[q] = c.iter().map(|(&s, &n)| (s, n)).collect();
    }
    let k_alpha = ts.alphabet().len();
    let mut initial = 0;
    loop {
        let class = tail_classes(&nfa, k_alpha, cfg.k);
        let (merged, map) = quotient(&nfa, &class);
        let done = merged.state_count() == nfa.state_count();
        initial = map[initial];
        nfa = merged;
        if done {
            break;
        }
    }
    Ok(minimize(&nfa.determinize(ts.alphabet(), initial)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::{all_traces, Alphabet, Trace};

    fn ts(traces: &[&[usize]]) -> TrainingSet {
        let ab = Alphabet::new(["a", "b"]).unwrap();
        TrainingSet::new(ab, traces.iter().map(|t| Trace(t.to_vec())).collect()).unwrap()
    }

    fn language_up_to(d: &Dfa, n: usize) -> Vec<Vec<usize>> {
        (0..=n).flat_map(|l| all_traces(2, l)).filter(|t| d.accepts_symbols(t)).collect()
    }

    #[test]
    fn pta_of_two_traces() {
        let t = ts(&[&[0], &[0, 1]]);
        assert_eq!(pta_state_count(&t), 3);
        let pta = build_pta(&t).unwrap();
        assert_eq!(pta.state_count(), 4);
        assert_eq!(language_up_to(&pta, 4), vec![vec![0], vec![0, 1]]);
    }

    #[test]
    fn large_k_keeps_the_training_set() {
        let t = ts(&[&[0, 1, 1], &[1], &[0, 0], &[]]);
        let d = k_tails(&t, &InferenceConfig { k: 4 }).unwrap();
        let mut expected: Vec<Vec<usize>> = t.traces().iter().map(|t| t.0.clone()).collect();
        expected.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
        assert_eq!(language_up_to(&d, 6), expected);
    }

    #[test]
    fn small_k_generalises_repetition() {
        // a^1..a^4: with k = 1 the deep chain states merge into a loop
        let t = ts(&[&[0], &[0, 0], &[0, 0, 0], &[0, 0, 0, 0]]);
        let d = k_tails(&t, &InferenceConfig { k: 1 }).unwrap();
        assert!(t.traces().iter().all(|tr| d.accepts(tr)));
        assert!(d.accepts(&Trace(vec![0; 9])));
    }

    #[test]
    fn single_trace_with_k_one() {
        let t = ts(&[&[0, 1, 0]]);
        let d = k_tails(&t, &InferenceConfig { k: 1 }).unwrap();
        assert!(d.accepts(&t.traces()[0]));
    }

    #[test]
    fn empty_training_set_rejected() {
        let t = ts(&[]);
        assert!(build_pta(&t).is_err());
        assert!(k_tails(&t, &InferenceConfig { k: 2 }).is_err());
    }
}
