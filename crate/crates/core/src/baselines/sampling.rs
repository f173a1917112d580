use std::time::{Duration, Instant};

use num_bigint::BigInt;
use rand::distr::weighted::WeightedIndex;
use rand::distr::Distribution;
use rand::Rng;

use super::walk::walk_rng;
use super::{evaluate, Evaluation, EvaluationMultiset};
use crate::automata::{Dfa, Trace};
use crate::error::{Error, Result};
use crate::metrics::Measure;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Metric {
    Precision,
    Recall,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SigmaSamplingConfig {
    /// Number of useful samples (accepted by the conditioning model).
    pub target_samples: u64,
    pub time_limit: Option<Duration>,
    pub seed: u64,
}

impl Default for SigmaSamplingConfig {
    fn default() -> Self {
        SigmaSamplingConfig {
            target_samples: 1000,
            time_limit: Some(Duration::from_secs(3600)),
            seed: 0,
        }
    }
}

/// `l` symbols drawn uniformly and independently.
pub fn random_trace<R: Rng + ?Sized>(alphabet_size: usize, l: usize, rng: &mut R) -> Trace {
    if alphabet_size == 0 {
        return Trace::empty();
    }
    Trace((0..l).map(|_| rng.random_range(0..alphabet_size)).collect())
}

/// Whether `d` accepts some trace of length exactly `l`.
fn has_length(d: &Dfa, l: usize) -> bool {
    let n = d.state_count();
    let mut cur = vec![false; n];
    cur[d.initial()] = true;
    for _ in 0..l {
        let mut next = vec![false; n];
        for q in (0..n).filter(|&q| cur[q]) {
            for &t in d.row(q) {
                next[t] = true;
            }
        }
        cur = next;
    }
    d.accepting_states().any(|q| cur[q])
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SigmaSample {
    pub value: Measure<BigInt>,
    pub true_positives: u64,
    pub accepted: u64,
    /// All traces drawn, useful or not.
    pub generated: u64,
}

/// Precision or recall at length `l` estimated from uniform samples of `Σ^l`:
/// draw until `target_samples` traces are accepted by `H` (precision) or `R`
/// (recall) and report the fraction of those accepted by both.
pub fn sigma_sampling_assessment(
    r: &Dfa,
    h: &Dfa,
    l: usize,
    metric: Metric,
    cfg: &SigmaSamplingConfig,
) -> Result<SigmaSample> {
    r.alphabet().ensure_equal(h.alphabet())?;
    let conditioning = match metric {
        Metric::Precision => h,
        Metric::Recall => r,
    };
    if !has_length(conditioning, l) {
        return Err(Error::EmptyLanguage);
    }
    let k = r.alphabet().len();
    let stream = ((l as u64) << 1) | u64::from(metric == Metric::Recall);
    let mut rng = walk_rng(cfg.seed, stream);
    let start = Instant::now();
    let mut true_positives = 0u64;
    let mut accepted = 0u64;
    let mut generated = 0u64;
    while accepted < cfg.target_samples {
        let t = random_trace(k, l, &mut rng);
        generated += 1;
        let in_r = r.accepts(&t);
        let in_h = h.accepts(&t);
        if metric == Metric::Precision && in_h {
            accepted += 1;
        } else if metric == Metric::Recall && in_r {
            accepted += 1;
        }
        if in_r && in_h {
            true_positives += 1;
        }
        if generated % 4096 == 0 {
            if let Some(limit) = cfg.time_limit {
                if start.elapsed() > limit {
                    return Err(Error::TimeLimit(limit));
                }
            }
        }
    }
    Ok(SigmaSample {
        value: Measure::ratio(true_positives.into(), accepted.into()),
        true_positives,
        accepted,
        generated,
    })
}

/// `count` traces uniform over `Σ^{≤n}`: length `l` with probability
/// proportional to `|Σ|^l`, then uniform symbols.
pub fn sample_up_to(alphabet_size: usize, n: usize, count: usize, seed: u64) -> EvaluationMultiset {
    let mut rng = walk_rng(seed, 0);
    if alphabet_size == 0 {
        return EvaluationMultiset::from_traces((0..count).map(|_| Trace::empty()));
    }
    // relative weights |Σ|^(l-n) keep the largest at 1
    let inv = 1.0 / alphabet_size as f64;
    let weights: Vec<f64> = (0..=n).map(|l| inv.powi((n - l) as i32)).collect();
    let lengths = WeightedIndex::new(&weights).expect("largest weight is 1");
    EvaluationMultiset::from_traces((0..count).map(|_| {
        let l = lengths.sample(&mut rng);
        random_trace(alphabet_size, l, &mut rng)
    }))
}

/// Precision and recall over a uniform sample of `Σ^{≤n}`.
pub fn sigma_star_assessment(r: &Dfa, h: &Dfa, n: usize, count: usize, seed: u64) -> Result<(EvaluationMultiset, Evaluation)> {
    r.alphabet().ensure_equal(h.alphabet())?;
    let e = sample_up_to(r.alphabet().len(), n, count, seed);
    let ev = evaluate(r, h, &e);
    Ok((e, ev))
}
