//! Random automata for experiments and property tests.

use rand::Rng;

use super::alphabet::Alphabet;
use super::dfa::Dfa;

/// Symbols `s0 s1 ...`.
pub fn numbered_alphabet(size: usize) -> Alphabet {
    Alphabet::new((0..size).map(|i| format!("s{i}"))).expect("distinct names")
}

/// Complete automaton with uniformly random targets; each state accepts with
/// probability `accept_probability`.
pub fn random_dfa<R: Rng + ?Sized>(
    rng: &mut R,
    states: usize,
    alphabet: &Alphabet,
    accept_probability: f64,
) -> Dfa {
    assert!(states > 0);
    let k = alphabet.len();
    let delta = (0..states * k).map(|_| rng.random_range(0..states)).collect();
    let accepting = (0..states)
        .map(|_| rng.random_bool(accept_probability))
        .collect();
    let initial = rng.random_range(0..states);
    Dfa::new(alphabet.clone(), initial, accepting, delta).expect("generated in range")
}

/// Shape parameters for [`random_sparse_dfa`].
#[derive(Clone, Copy, Debug)]
pub struct SparseShape {
    /// Probability that a non-tree `(state, symbol)` pair gets a transition.
    pub extra_edge_probability: f64,
    /// Extra edges target states whose index is within this distance.
    pub locality: usize,
    pub accept_probability: f64,
}

impl Default for SparseShape {
    fn default() -> Self {
        SparseShape {
            extra_edge_probability: 0.25,
            locality: 6,
            accept_probability: 0.3,
        }
    }
}

/// Partial automaton in the style of inferred behaviour models: a random
/// spanning tree from state 0 plus a few short-range extra edges, every other
/// pair leading to a rejecting sink. Every state is reachable.
pub fn random_sparse_dfa<R: Rng + ?Sized>(
    rng: &mut R,
    states: usize,
    alphabet: &Alphabet,
    shape: SparseShape,
) -> Dfa {
    assert!(states > 0 && !alphabet.is_empty());
    let k = alphabet.len();
    let mut table: Vec<Option<usize>> = vec![None; states * k];
    for child in 1..states {
        // attach to a recent state with a free symbol slot
        loop {
            let lo = child.saturating_sub(shape.locality.max(1));
            let parent = rng.random_range(lo..child);
            let s = rng.random_range(0..k);
            if table[parent * k + s].is_none() {
                table[parent * k + s] = Some(child);
                break;
            }
            if (lo..child).all(|p| (0..k).all(|s| table[p * k + s].is_some())) {
                let p = (0..child)
                    .rev()
                    .find(|&p| (0..k).any(|s| table[p * k + s].is_none()))
                    .expect("a tree with |Σ| >= 1 always has a free slot");
                let s = (0..k).find(|&s| table[p * k + s].is_none()).unwrap();
                table[p * k + s] = Some(child);
                break;
            }
        }
    }
    for q in 0..states {
        for s in 0..k {
            if table[q * k + s].is_none() && rng.random_bool(shape.extra_edge_probability) {
                let lo = q.saturating_sub(shape.locality);
                let hi = (q + shape.locality).min(states - 1);
                table[q * k + s] = Some(rng.random_range(lo..=hi));
            }
        }
    }
    let mut accepting: Vec<usize> = (0..states)
        .filter(|_| rng.random_bool(shape.accept_probability))
        .collect();
    if accepting.is_empty() {
        accepting.push(states - 1);
    }
    let transitions = table
        .iter()
        .enumerate()
        .filter_map(|(i, t)| t.map(|t| (i / k, i % k, t)));
    Dfa::from_partial(alphabet.clone(), states, 0, &accepting, transitions).expect("in range")
}
