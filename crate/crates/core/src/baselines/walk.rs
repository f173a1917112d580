use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{evaluate, Evaluation, EvaluationMultiset};
use crate::automata::{Dfa, StateId, SymbolId, Trace};
use crate::error::{Error, Result};
use crate::metrics::{Measure, MetricRow, MetricTable};

/// Parameters of random-walk trace generation.
#[derive(Clone, Debug, PartialEq)]
pub struct RandomWalkConfig {
    /// Probability of stopping at an accepting state, in `(0, 1]`.
    pub termination_probability: f64,
    pub target_trace_count: usize,
    /// Minimum number of traversals of every live transition before stopping.
    pub min_transition_coverage: u64,
    pub time_limit: Option<Duration>,
    pub seed: u64,
    /// Never pick a transition into an error state while another exists.
    pub exclude_error_transitions: bool,
    /// Steps (over all restarts) allowed for one trace.
    pub max_steps: u64,
    pub max_restarts: u64,
    /// Traces after which an unmet stopping rule is reported as an error.
    pub max_traces: usize,
}

impl Default for RandomWalkConfig {
    fn default() -> Self {
        RandomWalkConfig {
            termination_probability: 0.1,
            target_trace_count: 100_000,
            min_transition_coverage: 10,
            time_limit: Some(Duration::from_secs(30 * 60)),
            seed: 0,
            exclude_error_transitions: true,
            max_steps: 1_000_000,
            max_restarts: 1_000_000,
            max_traces: 1_000_000,
        }
    }
}

impl RandomWalkConfig {
    pub fn validate(&self) -> Result<()> {
        let p = self.termination_probability;
        if !(p > 0.0 && p <= 1.0) {
            return Err(Error::InvalidParameter(format!(
                "termination probability must lie in (0, 1], got {p}"
            )));
        }
        Ok(())
    }
}

/// Generator for stream `stream` of `seed`. Streams are independent, so each
/// walk can be replayed alone.
pub fn walk_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// Per-model tables shared by all walks.
pub(crate) struct Walker<'a> {
    d: &'a Dfa,
    error: Vec<bool>,
    /// Symbols whose target is not an error state.
    live: Vec<Vec<SymbolId>>,
}

impl<'a> Walker<'a> {
    pub(crate) fn new(d: &'a Dfa) -> Result<Self> {
        let error = d.error_states();
        if error[d.initial()] {
            return Err(Error::EmptyLanguage);
        }
        let live = (0..d.state_count())
            .map(|q| {
                d.row(q)
                    .iter()
                    .enumerate()
                    .filter(|&(_, &t)| !error[t])
                    .map(|(s, _)| s)
                    .collect()
            })
            .collect();
        Ok(Walker { d, error, live })
    }

    /// Transitions every walk may traverse: between reachable live states.
    pub(crate) fn live_transitions(&self) -> Vec<(StateId, SymbolId)> {
        let reach = self.d.reachable();
        (0..self.d.state_count())
            .filter(|&q| reach[q] && !self.error[q])
            .flat_map(|q| self.live[q].iter().map(move |&s| (q, s)))
            .collect()
    }

    pub(crate) fn walk<R: Rng + ?Sized>(&self, cfg: &RandomWalkConfig, rng: &mut R) -> Result<Trace> {
        let d = self.d;
        let k = d.alphabet().len();
        let mut steps = 0u64;
        let mut restarts = 0u64;
        let mut trace = Vec::new();
        let mut q = d.initial();
        loop {
            if d.is_accepting(q) && rng.random_bool(cfg.termination_probability) {
                return Ok(Trace(trace));
            }
            let next = if cfg.exclude_error_transitions {
                let live = &self.live[q];
                (!live.is_empty()).then(|| live[rng.random_range(0..live.len())])
            } else if k > 0 {
                Some(rng.random_range(0..k))
            } else {
                None
            };
            let target = next.map(|s| (s, d.next(q, s))).filter(|&(_, t)| !self.error[t]);
            match target {
                Some((s, t)) => {
                    trace.push(s);
                    q = t;
                    steps += 1;
                    if steps > cfg.max_steps {
                        return Err(Error::WalkExhausted { restarts });
                    }
                }
                None => {
                    restarts += 1;
                    if restarts > cfg.max_restarts {
                        return Err(Error::WalkExhausted { restarts });
                    }
                    trace.clear();
                    q = d.initial();
                }
            }
        }
    }
}

/// One random walk on `d`. The trace is always accepted by `d`.
pub fn random_walk_trace<R: Rng + ?Sized>(d: &Dfa, cfg: &RandomWalkConfig, rng: &mut R) -> Result<Trace> {
    cfg.validate()?;
    Walker::new(d)?.walk(cfg, rng)
}

/// Walk traces from `d` until at least `target_trace_count` traces exist and
/// every live transition was traversed `min_transition_coverage` times, or the
/// time limit passes. Trace `i` comes from stream `stream_base + i`.
pub fn generate_walks(d: &Dfa, cfg: &RandomWalkConfig, stream_base: u64) -> Result<EvaluationMultiset> {
    generate_walks_until(d, cfg, stream_base, |_| true)
}

/// As [`generate_walks`], with an extra stopping condition over the traces
/// collected so far.
pub(crate) fn generate_walks_until(
    d: &Dfa,
    cfg: &RandomWalkConfig,
    stream_base: u64,
    mut extra: impl FnMut(&[Trace]) -> bool,
) -> Result<EvaluationMultiset> {
    cfg.validate()?;
    let walker = Walker::new(d)?;
    let start = Instant::now();
    let mut coverage: BTreeMap<(StateId, SymbolId), u64> =
        walker.live_transitions().into_iter().map(|t| (t, 0)).collect();
    let mut uncovered = if cfg.min_transition_coverage == 0 { 0 } else { coverage.len() };
    let mut traces = Vec::new();
    let mut i = 0u64;
    loop {
        let enough = traces.len() >= cfg.target_trace_count && uncovered == 0 && extra(&traces);
        let late = cfg.time_limit.is_some_and(|t| start.elapsed() >= t);
        if enough || (late && !traces.is_empty()) {
            break;
        }
        if traces.len() >= cfg.max_traces.max(cfg.target_trace_count) {
            return Err(Error::ResourceLimit(format!(
                "stopping rule still unmet after {} walks",
                traces.len()
            )));
        }
        let mut rng = walk_rng(cfg.seed, stream_base.wrapping_add(i));
        let t = walker.walk(cfg, &mut rng)?;
        if uncovered > 0 {
            let mut q = d.initial();
            for &s in t.symbols() {
                let c = coverage.get_mut(&(q, s)).expect("walks use live transitions");
                *c += 1;
                if *c == cfg.min_transition_coverage {
                    uncovered -= 1;
                }
                q = d.next(q, s);
            }
        }
        traces.push(t);
        i += 1;
    }
    Ok(EvaluationMultiset::from_traces(traces))
}

const PRECISION_STREAMS: u64 = 0;
const RECALL_STREAMS: u64 = 1 << 48;

/// Trace-similarity precision and recall with the evaluation multisets.
#[derive(Clone, Debug)]
pub struct TraceSimilarity {
    /// Fraction of walks on `H` accepted by `R`.
    pub precision: Measure<BigInt>,
    /// Fraction of walks on `R` accepted by `H`.
    pub recall: Measure<BigInt>,
    pub e_prec: EvaluationMultiset,
    pub e_rec: EvaluationMultiset,
}

impl TraceSimilarity {
    /// A single cumulative row at the longest generated length.
    pub fn table(&self) -> MetricTable<BigInt> {
        let n = self.e_prec.max_length().max(self.e_rec.max_length()).unwrap_or(0);
        MetricTable {
            rows: vec![MetricRow::cumulative(n, self.precision.clone(), self.recall.clone())],
        }
    }
}

pub fn trace_similarity(r: &Dfa, h: &Dfa, cfg: &RandomWalkConfig) -> Result<TraceSimilarity> {
    r.alphabet().ensure_equal(h.alphabet())?;
    let e_prec = generate_walks(h, cfg, PRECISION_STREAMS)?;
    let e_rec = generate_walks(r, cfg, RECALL_STREAMS)?;
    let precision = evaluate(r, h, &e_prec).precision();
    let recall = evaluate(r, h, &e_rec).recall();
    Ok(TraceSimilarity { precision, recall, e_prec, e_rec })
}

/// Trace similarity restricted to the walks of one length.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConditionedPoint {
    pub n: usize,
    pub precision: Measure<BigInt>,
    pub recall: Measure<BigInt>,
    pub precision_samples: u64,
    pub recall_samples: u64,
}

#[derive(Clone, Debug)]
pub struct ConditionedSimilarity {
    pub per_length: Vec<ConditionedPoint>,
    pub e_prec: EvaluationMultiset,
    pub e_rec: EvaluationMultiset,
}

impl ConditionedSimilarity {
    pub fn table(&self) -> MetricTable<BigInt> {
        MetricTable {
            rows: self
                .per_length
                .iter()
                .map(|p| MetricRow::single(p.n, p.precision.clone(), p.recall.clone()))
                .collect(),
        }
    }
}

/// Partitions both evaluation multisets by trace length; lengths without
/// samples are undefined.
pub fn condition_on_length(
    r: &Dfa,
    h: &Dfa,
    e_prec: &EvaluationMultiset,
    e_rec: &EvaluationMultiset,
) -> Vec<ConditionedPoint> {
    let split = |e: &EvaluationMultiset| -> BTreeMap<usize, Evaluation> {
        let mut by_len: BTreeMap<usize, EvaluationMultiset> = BTreeMap::new();
        for t in e.traces() {
            by_len.entry(t.len()).or_default().push(t.clone());
        }
        by_len.into_iter().map(|(n, part)| (n, evaluate(r, h, &part))).collect()
    };
    let prec = split(e_prec);
    let rec = split(e_rec);
    let top = e_prec.max_length().into_iter().chain(e_rec.max_length()).max();
    let Some(top) = top else { return Vec::new() };
    (0..=top)
        .map(|n| {
            let p = prec.get(&n);
            let q = rec.get(&n);
            ConditionedPoint {
                n,
                precision: p.map_or(Measure::Undefined, Evaluation::precision),
                recall: q.map_or(Measure::Undefined, Evaluation::recall),
                precision_samples: p.map_or(0, Evaluation::total),
                recall_samples: q.map_or(0, Evaluation::total),
            }
        })
        .collect()
}

pub fn trace_similarity_conditioned(r: &Dfa, h: &Dfa, cfg: &RandomWalkConfig) -> Result<ConditionedSimilarity> {
    let sim = trace_similarity(r, h, cfg)?;
    let per_length = condition_on_length(r, h, &sim.e_prec, &sim.e_rec);
    Ok(ConditionedSimilarity { per_length, e_prec: sim.e_prec, e_rec: sim.e_rec })
}
