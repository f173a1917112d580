#![allow(dead_code)]

use langcard::automata::random::{numbered_alphabet, random_dfa};
use langcard::automata::{all_traces, Alphabet, Dfa};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn ab() -> Alphabet {
    Alphabet::new(["a", "b"]).unwrap()
}

/// Random complete DFA with `1..=max_states` states over `s0..`.
pub fn small_dfa(rng: &mut ChaCha8Rng, max_states: usize, alphabet: &Alphabet) -> Dfa {
    let states = rng.random_range(1..=max_states);
    let accept = rng.random_range(0.2..0.7);
    random_dfa(rng, states, alphabet, accept)
}

pub fn small_pair(rng: &mut ChaCha8Rng, max_states: usize, max_alphabet: usize) -> (Dfa, Dfa) {
    let k = rng.random_range(1..=max_alphabet);
    let alphabet = numbered_alphabet(k);
    (small_dfa(rng, max_states, &alphabet), small_dfa(rng, max_states, &alphabet))
}

/// Accepted traces of each length, by running every trace of that length.
pub fn brute_counts(d: &Dfa, n_max: usize) -> Vec<u64> {
    let k = d.alphabet().len();
    (0..=n_max)
        .map(|n| all_traces(k, n).filter(|t| d.accepts_symbols(t)).count() as u64)
        .collect()
}

pub fn pow(k: usize, n: usize) -> u128 {
    (k as u128).pow(n as u32)
}
