//! The assessment methods exact counting is compared against: random-walk
//! trace similarity, W-method test sets, and uniform sampling of `Σ^l` and
//! `Σ^{≤n}`.

mod sampling;
mod walk;
mod wmethod;

pub use sampling::{
    random_trace, sample_up_to, sigma_star_assessment, sigma_sampling_assessment, Metric, SigmaSample,
    SigmaSamplingConfig,
};
pub use walk::{
    condition_on_length, generate_walks, random_walk_trace, trace_similarity, trace_similarity_conditioned,
    walk_rng, ConditionedPoint, ConditionedSimilarity, RandomWalkConfig, TraceSimilarity,
};
pub(crate) use walk::generate_walks_until;
pub use wmethod::{characterization_set, mbt_assessment, state_cover, w_method_test_set, MbtResult, WMethodConfig};

use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::automata::{Dfa, Trace};
use crate::metrics::Measure;

/// A multiset of traces in generation order, with its length histogram.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EvaluationMultiset {
    traces: Vec<Trace>,
    histogram: BTreeMap<usize, u64>,
}

impl EvaluationMultiset {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_traces(traces: impl IntoIterator<Item = Trace>) -> Self {
        let mut e = Self::new();
        for t in traces {
            e.push(t);
        }
        e
    }

    pub fn push(&mut self, t: Trace) {
        *self.histogram.entry(t.len()).or_default() += 1;
        self.traces.push(t);
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

    /// Number of traces of each length.
    pub fn histogram(&self) -> &BTreeMap<usize, u64> {
        &self.histogram
    }

    pub fn max_length(&self) -> Option<usize> {
        self.histogram.keys().next_back().copied()
    }

    /// Distinct traces with multiplicities, in trace order.
    pub fn counted(&self) -> Vec<(Trace, u64)> {
        let mut m: BTreeMap<&Trace, u64> = BTreeMap::new();
        for t in &self.traces {
            *m.entry(t).or_default() += 1;
        }
        m.into_iter().map(|(t, c)| (t.clone(), c)).collect()
    }
}

/// Classification of an evaluation multiset against both models, counting
/// multiplicities.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Evaluation {
    pub tp: u64,
    pub fp: u64,
    pub fn_: u64,
    pub tn: u64,
}

impl Evaluation {
    /// `|E ∩ L(R) ∩ L(H)| / |E ∩ L(H)|`
    pub fn precision(&self) -> Measure<BigInt> {
        Measure::ratio(self.tp.into(), (self.tp + self.fp).into())
    }

    /// `|E ∩ L(R) ∩ L(H)| / |E ∩ L(R)|`
    pub fn recall(&self) -> Measure<BigInt> {
        Measure::ratio(self.tp.into(), (self.tp + self.fn_).into())
    }

    pub fn total(&self) -> u64 {
        self.tp + self.fp + self.fn_ + self.tn
    }
}

pub fn evaluate(r: &Dfa, h: &Dfa, e: &EvaluationMultiset) -> Evaluation {
    let mut out = Evaluation::default();
    for t in e.traces() {
        match (r.accepts(t), h.accepts(t)) {
            (true, true) => out.tp += 1,
            (false, true) => out.fp += 1,
            (true, false) => out.fn_ += 1,
            (false, false) => out.tn += 1,
        }
    }
    out
}
