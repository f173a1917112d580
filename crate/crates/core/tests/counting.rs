mod common;

use common::{brute_counts, pow, rng, small_dfa, small_pair};
use langcard::automata::random::numbered_alphabet;
use langcard::automata::{complement, confusion_automata, parse_dfa, write_dfa, Dfa};
use langcard::counting::{
    approx_star_height, coefficients, compute_ogf, compute_ogf_with_order, count_dp, node_of, LabeledDigraph,
    RationalFunction, FINAL,
};
use langcard::{BigInt, Ogf};
use num_traits::{ToPrimitive, Zero};
use rand::seq::SliceRandom;
use rand::Rng;

fn fixture(name: &str) -> Dfa {
    let path = format!("{}/../../fixtures/{name}", env!("CARGO_MANIFEST_DIR"));
    parse_dfa(&std::fs::read_to_string(path).unwrap()).unwrap()
}

fn ogf_counts(d: &Dfa, n: usize) -> Vec<BigInt> {
    coefficients(&compute_ogf::<BigInt>(d).unwrap(), n).unwrap().into_counts()
}

#[test]
fn every_state_sends_sigma_symbols() {
    let mut rng = rng(21);
    for _ in 0..50 {
        let k = rng.random_range(1..=5);
        let d = small_dfa(&mut rng, 10, &numbered_alphabet(k));
        let g = LabeledDigraph::<Ogf>::from_dfa(&d);
        for q in 0..d.state_count() {
            let mut total = BigInt::zero();
            for (to, label) in g.successors(node_of(q)) {
                if to == FINAL {
                    assert!(d.is_accepting(q));
                    assert!(label.is_one());
                    continue;
                }
                assert!(label.denominator().is_one());
                assert_eq!(label.numerator().degree(), Some(1));
                total += label.numerator().coeff(1);
            }
            assert_eq!(total, BigInt::from(k));
        }
    }
}

#[test]
fn signature_true_positives_grow_by_five() {
    let r = fixture("signature_reference.dfa");
    let h = fixture("signature_inferred.dfa");
    let c = confusion_automata(&r, &h).unwrap();
    let tp = ogf_counts(&c.tp, 25);
    let fp = ogf_counts(&c.fp, 25);
    assert_eq!(tp[0], BigInt::from(1));
    assert_eq!(tp[1], BigInt::zero());
    assert!(fp[0].is_zero() && fp[1].is_zero());
    for l in 2..=25 {
        assert_eq!(tp[l], BigInt::from(5u32).pow(l as u32 - 2));
        assert_eq!(fp[l], BigInt::from(4u32) * BigInt::from(5u32).pow(l as u32 - 2));
    }
    assert!(ogf_counts(&c.fn_, 25).iter().all(Zero::is_zero));
}

#[test]
fn a_language_and_its_complement_fill_sigma_n() {
    let mut rng = rng(22);
    for _ in 0..60 {
        let k = rng.random_range(1..=4);
        let d = small_dfa(&mut rng, 8, &numbered_alphabet(k));
        let a = ogf_counts(&d, 30);
        let b = ogf_counts(&complement(&d), 30);
        for n in 0..=30 {
            assert_eq!(&a[n] + &b[n], BigInt::from(pow(k, n)));
        }
    }
}

#[test]
fn ogf_agrees_with_enumeration() {
    let mut rng = rng(23);
    for _ in 0..60 {
        let (r, _) = small_pair(&mut rng, 7, 3);
        let brute = brute_counts(&r, 8);
        let exact = ogf_counts(&r, 8);
        for n in 0..=8 {
            assert_eq!(exact[n], BigInt::from(brute[n]));
        }
    }
}

#[test]
fn counts_are_non_negative_and_bounded() {
    let mut rng = rng(24);
    for _ in 0..60 {
        let k = rng.random_range(1..=4);
        let d = small_dfa(&mut rng, 12, &numbered_alphabet(k));
        for (n, c) in ogf_counts(&d, 40).into_iter().enumerate() {
            assert!(c >= BigInt::zero());
            assert!(c <= BigInt::from(pow(k, n)));
        }
    }
}

#[test]
fn any_elimination_order_gives_the_same_function() {
    let mut rng = rng(25);
    for _ in 0..30 {
        let (d, _) = small_pair(&mut rng, 6, 3);
        let base = compute_ogf::<BigInt>(&d).unwrap();
        let mut order: Vec<usize> = (0..d.state_count()).collect();
        for _ in 0..4 {
            order.shuffle(&mut rng);
            let other = compute_ogf_with_order::<BigInt>(&d, &order).unwrap();
            assert_eq!(
                coefficients(&other, 25).unwrap().counts(),
                coefficients(&base, 25).unwrap().counts()
            );
        }
    }
}

/// Whether some cycle passes through a state that is both reachable and live.
fn infinite_by_search(d: &Dfa) -> bool {
    let reach = d.reachable();
    let error = d.error_states();
    let useful: Vec<bool> = (0..d.state_count()).map(|q| reach[q] && !error[q]).collect();
    // Colour-based DFS on the useful subgraph.
    let mut colour = vec![0u8; d.state_count()];
    fn visit(d: &Dfa, useful: &[bool], colour: &mut [u8], q: usize) -> bool {
        colour[q] = 1;
        for &t in d.row(q) {
            if !useful[t] {
                continue;
            }
            if colour[t] == 1 || (colour[t] == 0 && visit(d, useful, colour, t)) {
                return true;
            }
        }
        colour[q] = 2;
        false
    }
    (0..d.state_count()).any(|q| useful[q] && colour[q] == 0 && visit(d, &useful, &mut colour, q))
}

#[test]
fn star_height_is_positive_exactly_for_infinite_languages() {
    let mut rng = rng(26);
    for i in 0..200 {
        let k = rng.random_range(1..=3);
        let states = rng.random_range(1..=8);
        // Low acceptance with many states yields plenty of finite languages.
        let d = langcard::automata::random::random_dfa(&mut rng, states, &numbered_alphabet(k), 0.1 + (i % 5) as f64 * 0.1);
        assert_eq!(approx_star_height(&d) >= 1, infinite_by_search(&d), "{}", write_dfa(&d));
    }
    let finite = parse_dfa("alphabet: a b\nstates: 3\ninitial: 0\naccepting: 2\n0 a 1\n1 b 2\n").unwrap();
    assert_eq!(approx_star_height(&finite), 0);
    assert_eq!(approx_star_height(&fixture("universal_ab.dfa")), 1);
    assert_eq!(approx_star_height(&fixture("empty_ab.dfa")), 0);
}

#[test]
fn fixed_width_scalars_match_big_integers() {
    let mut rng = rng(27);
    for _ in 0..40 {
        let (d, _) = small_pair(&mut rng, 5, 3);
        let wide = compute_ogf::<i128>(&d).unwrap();
        let big = compute_ogf::<BigInt>(&d).unwrap();
        let a = coefficients(&wide, 30).unwrap();
        let b = coefficients(&big, 30).unwrap();
        for n in 0..=30 {
            assert_eq!(BigInt::from(*a.get(n)), *b.get(n));
        }
        assert_eq!(count_dp::<i64>(&d, 30).counts().iter().map(|c| c.to_i128().unwrap()).collect::<Vec<_>>(), a.counts());
    }
}

#[test]
fn simple_functions() {
    let universal = compute_ogf::<BigInt>(&fixture("universal_ab.dfa")).unwrap();
    assert_eq!(universal.to_string(), "1 / (1 - 2z)");
    let empty = compute_ogf::<BigInt>(&fixture("empty_ab.dfa")).unwrap();
    assert!(empty.is_zero());
    let a_star: RationalFunction<BigInt> = compute_ogf(&fixture("a_star.dfa")).unwrap();
    assert_eq!(coefficients(&a_star, 10).unwrap().counts(), vec![BigInt::from(1); 11]);
}
