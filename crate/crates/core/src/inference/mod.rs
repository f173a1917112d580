//! k-tails inference from positive traces, used to produce realistic models to
//! assess.

mod ktails;

pub use ktails::{build_pta, k_tails, pta_state_count};

use crate::automata::{Alphabet, Dfa, Trace};
use crate::baselines::{generate_walks_until, RandomWalkConfig};
use crate::error::{Error, Result};

/// Positive example traces over an alphabet.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrainingSet {
    alphabet: Alphabet,
    traces: Vec<Trace>,
}

impl TrainingSet {
    pub fn new(alphabet: Alphabet, traces: Vec<Trace>) -> Result<Self> {
        if let Some(&s) = traces.iter().flat_map(|t| t.symbols()).find(|&&s| s >= alphabet.len()) {
            return Err(Error::UnknownSymbol(format!("#{s}")));
        }
        Ok(TrainingSet { alphabet, traces })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn traces(&self) -> &[Trace] {
        &self.traces
    }

    pub fn len(&self) -> usize {
        self.traces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.traces.is_empty()
    }

    pub fn max_length(&self) -> usize {
        self.traces.iter().map(Trace::len).max().unwrap_or(0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct InferenceConfig {
    /// Length bound of the compared tails, at least 1.
    pub k: usize,
}

impl InferenceConfig {
    pub fn validate(&self) -> Result<()> {
        if self.k == 0 {
            return Err(Error::InvalidParameter("k must be at least 1".into()));
        }
        Ok(())
    }
}

/// Number of visits to every live reachable state required of a training set.
pub const MIN_STATE_VISITS: u64 = 4;

/// Random walks on `r` until there are at least `cfg.target_trace_count`
/// traces and every reachable non-error state has been visited
/// [`MIN_STATE_VISITS`] times (the transition coverage rule of `cfg` applies
/// as well).
pub fn generate_training_set(r: &Dfa, cfg: &RandomWalkConfig) -> Result<TrainingSet> {
    let error = r.error_states();
    let reach = r.reachable();
    let mut visits = vec![0u64; r.state_count()];
    let mut pending = (0..r.state_count()).filter(|&q| reach[q] && !error[q]).count();
    let mut seen = 0;
    let e = generate_walks_until(r, cfg, 0, |traces| {
        for t in &traces[seen..] {
            let mut q = r.initial();
            let mut bump = |q: usize, pending: &mut usize| {
                visits[q] += 1;
                if visits[q] == MIN_STATE_VISITS {
                    *pending -= 1;
                }
            };
            bump(q, &mut pending);
            for &s in t.symbols() {
                q = r.next(q, s);
                bump(q, &mut pending);
            }
        }
        seen = traces.len();
        pending == 0
    })?;
    TrainingSet::new(r.alphabet().clone(), e.traces().to_vec())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::regex_to_dfa;

    #[test]
    fn training_sets_meet_the_stopping_rule() {
        let ab = Alphabet::new(["a", "b", "c"]).unwrap();
        let r = regex_to_dfa("a (b c | c)* b | c c a", &ab).unwrap();
        let cfg = RandomWalkConfig {
            termination_probability: 0.3,
            target_trace_count: 100,
            min_transition_coverage: 0,
            time_limit: None,
            seed: 3,
            ..RandomWalkConfig::default()
        };
        let ts = generate_training_set(&r, &cfg).unwrap();
        assert!(ts.len() >= 100);
        assert!(ts.traces().iter().all(|t| r.accepts(t)));
        assert_eq!(generate_training_set(&r, &cfg).unwrap(), ts);
    }

    #[test]
    fn symbols_are_validated() {
        let ab = Alphabet::new(["a"]).unwrap();
        assert!(TrainingSet::new(ab.clone(), vec![Trace(vec![0, 1])]).is_err());
        assert!(InferenceConfig { k: 0 }.validate().is_err());
    }
}
