use std::collections::BTreeSet;

use num_bigint::BigInt;

use super::{evaluate, Evaluation, EvaluationMultiset};
use crate::automata::{access_traces, all_traces, minimize, Dfa, Trace};
use crate::error::{Error, Result};
use crate::metrics::{Measure, MetricRow, MetricTable};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WMethodConfig {
    /// Assumed upper bound on the state count of the model under test.
    pub m: usize,
    /// Largest test set the generator will build.
    pub max_tests: u128,
}

impl WMethodConfig {
    pub fn new(m: usize) -> Self {
        WMethodConfig { m, max_tests: 5_000_000 }
    }
}

/// Shortest access trace of every reachable state, in breadth-first order.
/// The set is prefix closed.
pub fn state_cover(r: &Dfa) -> Vec<Trace> {
    access_traces(r).into_iter().map(|(_, t)| t).collect()
}

/// A shortest distinguishing trace for every pair of reachable states, plus
/// the empty trace. Fails when two reachable states accept the same language.
pub fn characterization_set(r: &Dfa) -> Result<Vec<Trace>> {
    let states: Vec<usize> = access_traces(r).into_iter().map(|(q, _)| q).collect();
    let n = r.state_count();
    let k = r.alphabet().len();
    let mut witness: Vec<Option<Vec<usize>>> = vec![None; n * n];
    let idx = |p: usize, q: usize| p.min(q) * n + p.max(q);
    let mut pending = Vec::new();
    for (i, &p) in states.iter().enumerate() {
        for &q in &states[i + 1..] {
            if r.is_accepting(p) != r.is_accepting(q) {
                witness[idx(p, q)] = Some(Vec::new());
            } else {
                pending.push((p, q));
            }
        }
    }
    // breadth-first over suffix length; each round only reads older witnesses
    loop {
        let mut found = Vec::new();
        pending.retain(|&(p, q)| {
            for s in 0..k {
                let (a, b) = (r.next(p, s), r.next(q, s));
                if a == b {
                    continue;
                }
                if let Some(w) = &witness[idx(a, b)] {
                    let mut t = Vec::with_capacity(w.len() + 1);
                    t.push(s);
                    t.extend_from_slice(w);
                    found.push((idx(p, q), t));
                    return false;
                }
            }
            true
        });
        if found.is_empty() {
            break;
        }
        for (i, t) in found {
            witness[i] = Some(t);
        }
    }
    if let Some(&(p, q)) = pending.first() {
        return Err(Error::Indistinguishable(p, q));
    }
    let mut set: BTreeSet<Vec<usize>> = witness.into_iter().flatten().collect();
    set.insert(Vec::new());
    Ok(set.into_iter().map(Trace).collect())
}

fn estimated_size(cover: usize, alphabet: usize, depth: usize, dist: usize) -> u128 {
    let mut middle: u128 = 0;
    let mut power: u128 = 1;
    for _ in 0..=depth {
        middle = middle.saturating_add(power);
        power = power.saturating_mul(alphabet as u128);
    }
    (cover as u128).saturating_mul(middle).saturating_mul(dist as u128)
}

/// `T = C · (Σ^0 ∪ … ∪ Σ^{k+1}) · D` with `k = m - |Q_R|`, computed on the
/// minimal complete automaton of `R`. Duplicates are removed.
pub fn w_method_test_set(r: &Dfa, cfg: &WMethodConfig) -> Result<EvaluationMultiset> {
    let min = minimize(r);
    let q = min.state_count();
    if cfg.m < q {
        return Err(Error::InvalidParameter(format!(
            "state bound m = {} is below the {q} states of the reference model",
            cfg.m
        )));
    }
    let depth = cfg.m - q + 1;
    let cover = state_cover(&min);
    let dist = characterization_set(&min)?;
    let sigma = min.alphabet().len();
    let estimate = estimated_size(cover.len(), sigma, depth, dist.len());
    if estimate > cfg.max_tests {
        return Err(Error::TestSetTooLarge { estimate, cap: cfg.max_tests });
    }
    let mut tests: BTreeSet<Vec<usize>> = BTreeSet::new();
    for len in 0..=depth {
        for middle in all_traces(sigma, len) {
            for c in &cover {
                for w in &dist {
                    let mut t = Vec::with_capacity(c.len() + len + w.len());
                    t.extend_from_slice(c.symbols());
                    t.extend_from_slice(&middle);
                    t.extend_from_slice(w.symbols());
                    tests.insert(t);
                }
            }
        }
    }
    Ok(EvaluationMultiset::from_traces(tests.into_iter().map(Trace)))
}

#[derive(Clone, Debug)]
pub struct MbtResult {
    pub precision: Measure<BigInt>,
    pub recall: Measure<BigInt>,
    pub evaluation: Evaluation,
    pub test_set: EvaluationMultiset,
}

impl MbtResult {
    /// A single cumulative row at the longest test length.
    pub fn table(&self) -> MetricTable<BigInt> {
        MetricTable {
            rows: vec![MetricRow::cumulative(
                self.test_set.max_length().unwrap_or(0),
                self.precision.clone(),
                self.recall.clone(),
            )],
        }
    }
}

/// Precision and recall over the W-method test set of `R`.
pub fn mbt_assessment(r: &Dfa, h: &Dfa, cfg: &WMethodConfig) -> Result<MbtResult> {
    r.alphabet().ensure_equal(h.alphabet())?;
    let test_set = w_method_test_set(r, cfg)?;
    let evaluation = evaluate(r, h, &test_set);
    Ok(MbtResult {
        precision: evaluation.precision(),
        recall: evaluation.recall(),
        evaluation,
        test_set,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::{regex_to_dfa, Alphabet};

    fn ab() -> Alphabet {
        Alphabet::new(["a", "b"]).unwrap()
    }

    #[test]
    fn single_state_model() {
        let u = Dfa::universal(ab());
        assert_eq!(state_cover(&u), vec![Trace::empty()]);
        assert_eq!(characterization_set(&u).unwrap(), vec![Trace::empty()]);
    }

    #[test]
    fn cover_and_separation_by_simulation() {
        let d = minimize(&regex_to_dfa("(a b | b a a)* b", &ab()).unwrap());
        let cover = state_cover(&d);
        let reached: BTreeSet<usize> = cover.iter().map(|t| d.run(t.symbols())).collect();
        assert_eq!(reached.len(), d.state_count());
        for t in &cover {
            if let Some((_, prefix)) = t.symbols().split_last() {
                assert!(cover.iter().any(|c| c.symbols() == prefix));
            }
        }
        let w = characterization_set(&d).unwrap();
        for p in 0..d.state_count() {
            for q in p + 1..d.state_count() {
                assert!(w.iter().any(|t| d.is_accepting(d.run_from(p, t.symbols()))
                    != d.is_accepting(d.run_from(q, t.symbols()))));
            }
        }
    }

    #[test]
    fn non_minimal_input_rejected() {
        // two accepting states that both loop to themselves on every symbol
        let d = Dfa::new(ab(), 0, vec![true, true], vec![1, 1, 1, 1]).unwrap();
        assert_eq!(characterization_set(&d), Err(Error::Indistinguishable(0, 1)));
    }

    #[test]
    fn size_bound_and_guard() {
        let r = regex_to_dfa("a* b", &ab()).unwrap();
        let q = minimize(&r).state_count();
        let t = w_method_test_set(&r, &WMethodConfig::new(q + 1)).unwrap();
        let bound = estimated_size(state_cover(&minimize(&r)).len(), 2, 2, characterization_set(&minimize(&r)).unwrap().len());
        assert!(t.len() as u128 <= bound);
        let capped = WMethodConfig { m: q + 10, max_tests: 1000 };
        assert!(matches!(w_method_test_set(&r, &capped), Err(Error::TestSetTooLarge { .. })));
        assert!(w_method_test_set(&r, &WMethodConfig::new(q - 1)).is_err());
    }

    #[test]
    fn identical_models_score_one() {
        let r = regex_to_dfa("a (a | b)*", &ab()).unwrap();
        let res = mbt_assessment(&r, &r, &WMethodConfig::new(4)).unwrap();
        assert_eq!(res.precision.render(0), "1");
        assert_eq!(res.recall.render(0), "1");
    }
}
