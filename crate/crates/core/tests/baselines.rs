mod common;

use common::{ab, rng, small_dfa};
use langcard::automata::random::numbered_alphabet;
use langcard::automata::{minimize, regex_to_dfa, Alphabet, Dfa, Trace};
use langcard::baselines::{
    characterization_set, generate_walks, mbt_assessment, random_walk_trace, sample_up_to, sigma_sampling_assessment,
    state_cover, trace_similarity, trace_similarity_conditioned, w_method_test_set, walk_rng, Metric,
    RandomWalkConfig, SigmaSamplingConfig, WMethodConfig,
};
use langcard::metrics::Measure;
use langcard::Error;
use rand::Rng;

fn walks(p: f64, target: usize, seed: u64) -> RandomWalkConfig {
    RandomWalkConfig {
        termination_probability: p,
        target_trace_count: target,
        min_transition_coverage: 0,
        time_limit: None,
        seed,
        ..RandomWalkConfig::default()
    }
}

fn close(m: &Measure<langcard::BigInt>, expected: f64, samples: u64) -> bool {
    let se = (expected * (1.0 - expected) / samples as f64).sqrt().max(1e-9);
    (m.to_f64().unwrap() - expected).abs() <= 3.0 * se
}

#[test]
fn walk_lengths_are_geometric() {
    let d = Dfa::universal(ab());
    let p = 0.2;
    let n = 20_000;
    let e = generate_walks(&d, &walks(p, n, 5), 0).unwrap();
    assert_eq!(e.len(), n);
    let mean = e.traces().iter().map(|t| t.len() as f64).sum::<f64>() / n as f64;
    let expected = (1.0 - p) / p;
    let se = ((1.0 - p) / (p * p) / n as f64).sqrt();
    assert!((mean - expected).abs() < 3.0 * se, "mean {mean}");
    // P(length 0) = p
    let zero = *e.histogram().get(&0).unwrap() as f64 / n as f64;
    assert!((zero - p).abs() < 3.0 * (p * (1.0 - p) / n as f64).sqrt());
}

#[test]
fn certain_termination_gives_the_empty_trace() {
    let d = regex_to_dfa("(a b)*", &ab()).unwrap();
    let mut rng = walk_rng(9, 0);
    for _ in 0..50 {
        assert_eq!(random_walk_trace(&d, &walks(1.0, 1, 0), &mut rng).unwrap(), Trace::empty());
    }
}

#[test]
fn every_walk_is_accepted() {
    let mut rng = rng(41);
    for _ in 0..30 {
        let d = small_dfa(&mut rng, 8, &numbered_alphabet(3));
        if d.is_empty_language() {
            assert!(matches!(generate_walks(&d, &walks(0.3, 10, 0), 0), Err(Error::EmptyLanguage)));
            continue;
        }
        let e = generate_walks(&d, &walks(0.3, 200, rng.random()), 0).unwrap();
        assert!(e.traces().iter().all(|t| d.accepts(t)));
    }
}

#[test]
fn similarity_of_a_model_with_itself() {
    let r = regex_to_dfa("a (a | b)* b | b", &ab()).unwrap();
    let s = trace_similarity(&r, &r, &walks(0.2, 500, 3)).unwrap();
    assert_eq!(s.precision.render(3), "1.000");
    assert_eq!(s.recall.render(3), "1.000");
}

#[test]
fn seeds_replay_exactly() {
    let r = regex_to_dfa("a (a | b)*", &ab()).unwrap();
    let h = regex_to_dfa("(a | b) b*", &ab()).unwrap();
    let one = trace_similarity(&r, &h, &walks(0.1, 300, 7)).unwrap();
    let two = trace_similarity(&r, &h, &walks(0.1, 300, 7)).unwrap();
    let other = trace_similarity(&r, &h, &walks(0.1, 300, 8)).unwrap();
    assert_eq!(one.e_prec, two.e_prec);
    assert_eq!(one.e_rec, two.e_rec);
    assert_eq!(one.precision, two.precision);
    assert_ne!(one.e_prec, other.e_prec);
}

#[test]
fn conditioning_partitions_the_walks() {
    let r = regex_to_dfa("a (a | b)*", &ab()).unwrap();
    let h = regex_to_dfa("(a | b) b*", &ab()).unwrap();
    let c = trace_similarity_conditioned(&r, &h, &walks(0.15, 2000, 1)).unwrap();
    let prec: u64 = c.per_length.iter().map(|p| p.precision_samples).sum();
    let rec: u64 = c.per_length.iter().map(|p| p.recall_samples).sum();
    assert_eq!(prec as usize, c.e_prec.len());
    assert_eq!(rec as usize, c.e_rec.len());
    for p in &c.per_length {
        assert_eq!(p.precision.is_defined(), p.precision_samples > 0);
        assert_eq!(c.e_prec.histogram().get(&p.n).copied().unwrap_or(0), p.precision_samples);
    }
}

#[test]
fn conditioned_walks_on_a_universal_model_are_uniform() {
    // Walks on Σ* of a fixed length are uniform on Σ^n, so the conditioned
    // precision against a* b* is |L ∩ Σ^n| / 2^n.
    let h = Dfa::universal(ab());
    let r = regex_to_dfa("a* b*", &ab()).unwrap();
    let c = trace_similarity_conditioned(&r, &h, &walks(0.25, 40_000, 2)).unwrap();
    for p in c.per_length.iter().take(5) {
        let expected = (p.n + 1) as f64 / f64::powi(2.0, p.n as i32);
        assert!(close(&p.precision, expected, p.precision_samples), "n = {} {:?}", p.n, p.precision.to_f64());
    }
}

/// Whether `w` separates states `p` and `q` of `d`.
fn separates(d: &Dfa, p: usize, q: usize, w: &Trace) -> bool {
    d.is_accepting(d.run_from(p, w.symbols())) != d.is_accepting(d.run_from(q, w.symbols()))
}

#[test]
fn cover_and_characterisation_sets() {
    let mut rng = rng(42);
    for _ in 0..40 {
        let d = minimize(&small_dfa(&mut rng, 8, &numbered_alphabet(3)));
        let cover = state_cover(&d);
        assert_eq!(cover.len(), d.state_count());
        let mut reached: Vec<usize> = cover.iter().map(|c| d.run(c.symbols())).collect();
        reached.sort_unstable();
        reached.dedup();
        assert_eq!(reached.len(), d.state_count());
        for c in &cover {
            let prefix = &c.symbols()[..c.len().saturating_sub(1)];
            assert!(cover.iter().any(|o| o.symbols() == prefix));
        }
        let dist = characterization_set(&d).unwrap();
        assert!(dist.contains(&Trace::empty()));
        for p in 0..d.state_count() {
            for q in p + 1..d.state_count() {
                assert!(dist.iter().any(|w| separates(&d, p, q, w)));
            }
        }
    }
}

#[test]
fn test_set_contains_cover_times_distinguishers_and_grows_with_m() {
    let alphabet = Alphabet::new(["a", "b", "c"]).unwrap();
    let r = regex_to_dfa("a (b | c)* a | c", &alphabet).unwrap();
    let q = minimize(&r).state_count();
    let min = minimize(&r);
    let cover = state_cover(&min);
    let dist = characterization_set(&min).unwrap();
    let mut sizes = Vec::new();
    for m in q..q + 4 {
        let t = w_method_test_set(&r, &WMethodConfig::new(m)).unwrap();
        for c in &cover {
            for w in &dist {
                assert!(t.traces().contains(&c.concat(w)));
            }
        }
        sizes.push(t.len() as f64);
    }
    for w in sizes.windows(2) {
        let growth = w[1] / w[0];
        assert!(growth > 2.0 && growth < 3.5, "growth {growth}");
    }
    assert!(matches!(
        w_method_test_set(&r, &WMethodConfig::new(q - 1)),
        Err(Error::InvalidParameter(_))
    ));
}

#[test]
fn mbt_recall_sees_missing_traces() {
    let r = regex_to_dfa("a (a | b)*", &ab()).unwrap();
    let h = regex_to_dfa("a a*", &ab()).unwrap();
    let q = minimize(&r).state_count();
    let res = mbt_assessment(&r, &h, &WMethodConfig::new(q + 1)).unwrap();
    assert_eq!(res.precision.render(1), "1.0");
    assert!(res.recall.to_f64().unwrap() < 1.0);
    assert_eq!(res.evaluation.total() as usize, res.test_set.len());
    let same = mbt_assessment(&r, &r, &WMethodConfig::new(q)).unwrap();
    assert_eq!(same.recall.render(1), "1.0");
}

#[test]
fn sigma_sampling_of_half_the_traces() {
    let r = Dfa::universal(ab());
    let h = regex_to_dfa("(a | b)* a", &ab()).unwrap();
    let cfg = SigmaSamplingConfig { target_samples: 4000, time_limit: None, seed: 4 };
    for l in 1..6 {
        let s = sigma_sampling_assessment(&r, &h, l, Metric::Recall, &cfg).unwrap();
        assert_eq!(s.accepted, 4000);
        assert_eq!(s.generated, 4000);
        assert!(close(&s.value, 0.5, 4000));
        let p = sigma_sampling_assessment(&r, &h, l, Metric::Precision, &cfg).unwrap();
        assert_eq!(p.value.render(1), "1.0");
        assert!(p.generated >= 4000);
    }
    assert!(matches!(
        sigma_sampling_assessment(&r, &h, 0, Metric::Precision, &cfg),
        Err(Error::EmptyLanguage)
    ));
}

#[test]
fn sampling_up_to_n_weights_lengths_by_size() {
    let e = sample_up_to(2, 6, 30_000, 3);
    let top = *e.histogram().get(&6).unwrap() as f64 / 30_000.0;
    let expected = 64.0 / 127.0;
    assert!((top - expected).abs() < 3.0 * (expected * (1.0 - expected) / 30_000.0).sqrt());
    assert!(e.max_length() == Some(6));
}
