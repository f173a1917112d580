//! Boolean operations, minimisation and equivalence.

use std::collections::{HashMap, VecDeque};

use super::alphabet::Alphabet;
use super::dfa::{Dfa, StateId, Trace};
use crate::error::Result;

/// Accepts exactly the traces `d` rejects.
pub fn complement(d: &Dfa) -> Dfa {
    let accepting = d.accepting_mask().iter().map(|&a| !a).collect();
    let delta = (0..d.state_count()).flat_map(|q| d.row(q).to_vec()).collect();
    Dfa::new(d.alphabet().clone(), d.initial(), accepting, delta).expect("same shape")
}

/// Product automaton over the reachable pairs, numbered in breadth-first order.
/// A pair accepts when `accept(a_accepts, b_accepts)` holds.
pub fn product(a: &Dfa, b: &Dfa, accept: impl Fn(bool, bool) -> bool) -> Result<Dfa> {
    a.alphabet().ensure_equal(b.alphabet())?;
    let k = a.alphabet().len();
    let mut ids: HashMap<(StateId, StateId), StateId> = HashMap::new();
    let mut pairs = vec![(a.initial(), b.initial())];
    ids.insert(pairs[0], 0);
    let mut delta = Vec::new();
    let mut head = 0;
    while head < pairs.len() {
        let (p, q) = pairs[head];
        head += 1;
        for s in 0..k {
            let next = (a.next(p, s), b.next(q, s));
            let id = *ids.entry(next).or_insert_with(|| {
                pairs.push(next);
                pairs.len() - 1
            });
            delta.push(id);
        }
    }
    let accepting = pairs
        .iter()
        .map(|&(p, q)| accept(a.is_accepting(p), b.is_accepting(q)))
        .collect();
    Dfa::new(a.alphabet().clone(), 0, accepting, delta)
}

pub fn intersect(a: &Dfa, b: &Dfa) -> Result<Dfa> {
    product(a, b, |x, y| x && y)
}

pub fn union(a: &Dfa, b: &Dfa) -> Result<Dfa> {
    product(a, b, |x, y| x || y)
}

/// Accepts `L(a) \ L(b)`.
pub fn difference(a: &Dfa, b: &Dfa) -> Result<Dfa> {
    product(a, b, |x, y| x && !y)
}

/// Minimal complete automaton for the same language.
///
/// Unreachable states are dropped, then Moore partition refinement merges
/// equivalent states. States are renumbered breadth-first from the initial state
/// (symbols in alphabet order), so language-equal inputs yield identical output.
pub fn minimize(d: &Dfa) -> Dfa {
    let d = d.trim_unreachable();
    let n = d.state_count();
    let k = d.alphabet().len();
    let mut class: Vec<usize> = d.accepting_mask().iter().map(|&a| a as usize).collect();
    let mut classes = {
        let a = class.iter().filter(|&&c| c == 1).count();
        if a == 0 || a == n {
            class.iter_mut().for_each(|c| *c = 0);
            1
        } else {
            2
        }
    };
    loop {
        let mut sig: HashMap<Vec<usize>, usize> = HashMap::new();
        let mut next = vec![0; n];
        for q in 0..n {
            let mut key = Vec::with_capacity(k + 1);
            key.push(class[q]);
            key.extend(d.row(q).iter().map(|&t| class[t]));
            let len = sig.len();
            next[q] = *sig.entry(key).or_insert(len);
        }
        let refined = sig.len();
        class = next;
        if refined == classes {
            break;
        }
        classes = refined;
    }
    let mut rep = vec![usize::MAX; classes];
    for q in (0..n).rev() {
        rep[class[q]] = q;
    }
    let delta = (0..classes)
        .flat_map(|c| d.row(rep[c]).iter().map(|&t| class[t]).collect::<Vec<_>>())
        .collect();
    let accepting = (0..classes).map(|c| d.is_accepting(rep[c])).collect();
    Dfa::new(d.alphabet().clone(), class[d.initial()], accepting, delta)
        .expect("quotient is total")
        .trim_unreachable()
}

/// A shortest trace accepted by exactly one of the automata.
pub fn distinguishing_trace(a: &Dfa, b: &Dfa) -> Result<Option<Trace>> {
    Ok(product(a, b, |x, y| x != y)?.shortest_accepted())
}

/// Language equality via emptiness of the symmetric difference.
pub fn equivalent(a: &Dfa, b: &Dfa) -> Result<bool> {
    Ok(distinguishing_trace(a, b)?.is_none())
}

/// Puts `other` on the symbol order of `target` when both name the same symbols.
pub fn align_alphabet(other: &Dfa, target: &Alphabet) -> Result<Dfa> {
    if !other.alphabet().same_names(target) {
        target.ensure_equal(other.alphabet())?;
    }
    other.over_alphabet(target)
}

/// The true-positive, false-positive and false-negative automata of an inferred
/// model `h` against a reference `r`, each minimised.
#[derive(Clone, Debug)]
pub struct ConfusionAutomata {
    pub tp: Dfa,
    pub fp: Dfa,
    pub fn_: Dfa,
}

pub fn confusion_automata(r: &Dfa, h: &Dfa) -> Result<ConfusionAutomata> {
    Ok(ConfusionAutomata {
        tp: minimize(&intersect(r, h)?),
        fp: minimize(&intersect(&complement(r), h)?),
        fn_: minimize(&intersect(r, &complement(h))?),
    })
}

/// Breadth-first enumeration of `Σ^len` in lexicographic symbol order.
pub fn all_traces(alphabet_size: usize, len: usize) -> impl Iterator<Item = Vec<usize>> {
    let total = alphabet_size.checked_pow(len as u32).unwrap_or(usize::MAX);
    let total = if alphabet_size == 0 {
        usize::from(len == 0)
    } else {
        total
    };
    (0..total).map(move |mut idx| {
        let mut v = vec![0; len];
        for slot in v.iter_mut().rev() {
            *slot = idx % alphabet_size;
            idx /= alphabet_size;
        }
        v
    })
}

/// Breadth-first list of states with the trace first reaching each.
pub(crate) fn access_traces(d: &Dfa) -> Vec<(StateId, Trace)> {
    let n = d.state_count();
    let mut seen = vec![false; n];
    let mut out = vec![(d.initial(), Trace::empty())];
    seen[d.initial()] = true;
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        let (q, t) = out[i].clone();
        for (s, &nq) in d.row(q).iter().enumerate() {
            if !seen[nq] {
                seen[nq] = true;
                let mut nt = t.0.clone();
                nt.push(s);
                out.push((nq, Trace(nt)));
                queue.push_back(out.len() - 1);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ab() -> Alphabet {
        Alphabet::new(["a", "b"]).unwrap()
    }

    fn a_star() -> Dfa {
        Dfa::from_partial(ab(), 1, 0, &[0], [(0, 0, 0)]).unwrap()
    }

    #[test]
    fn complement_swaps_membership() {
        let c = complement(&a_star());
        assert!(c.accepts(&Trace(vec![1])));
        assert!(!c.accepts(&Trace(vec![0, 0])));
        assert_eq!(c.state_count(), 2);
        assert!(complement(&Dfa::universal(ab())).is_empty_language());
    }

    #[test]
    fn intersection_identities() {
        let d = a_star();
        let all = Dfa::universal(ab());
        assert!(equivalent(&intersect(&d, &all).unwrap(), &d).unwrap());
        assert!(intersect(&d, &complement(&d)).unwrap().is_empty_language());
        assert!(equivalent(&union(&d, &complement(&d)).unwrap(), &all).unwrap());
    }

    #[test]
    fn alphabet_mismatch_is_an_error() {
        let other = Dfa::universal(Alphabet::new(["b", "a"]).unwrap());
        assert!(intersect(&a_star(), &other).is_err());
        let aligned = align_alphabet(&other, &ab()).unwrap();
        assert!(intersect(&a_star(), &aligned).is_ok());
    }

    #[test]
    fn minimisation_is_canonical() {
        // a* with a redundant copy of the accepting state.
        let redundant =
            Dfa::from_partial(ab(), 2, 0, &[0, 1], [(0, 0, 1), (1, 0, 0)]).unwrap();
        let m1 = minimize(&redundant);
        let m2 = minimize(&a_star());
        assert_eq!(m1, m2);
        assert_eq!(m1.state_count(), 2);
        assert_eq!(minimize(&m2).state_count(), m2.state_count());
    }

    #[test]
    fn minimize_handles_trivial_languages() {
        assert_eq!(minimize(&Dfa::empty(ab())).state_count(), 1);
        assert_eq!(minimize(&Dfa::universal(ab())).state_count(), 1);
        let big_empty = Dfa::from_partial(ab(), 4, 0, &[], [(0, 0, 1), (1, 1, 2)]).unwrap();
        assert_eq!(minimize(&big_empty), Dfa::empty(ab()));
    }

    #[test]
    fn identical_models_have_empty_error_languages() {
        let d = a_star();
        let c = confusion_automata(&d, &d).unwrap();
        assert!(c.fp.is_empty_language());
        assert!(c.fn_.is_empty_language());
        assert!(equivalent(&c.tp, &d).unwrap());
    }

    #[test]
    fn subset_model_has_no_false_positives() {
        let r = Dfa::universal(ab());
        let h = a_star();
        let c = confusion_automata(&r, &h).unwrap();
        assert!(c.fp.is_empty_language());
        assert!(!c.fn_.is_empty_language());
    }

    #[test]
    fn enumerates_sigma_n() {
        let v: Vec<_> = all_traces(2, 2).collect();
        assert_eq!(v, vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]);
        assert_eq!(all_traces(3, 0).count(), 1);
        assert_eq!(all_traces(0, 0).count(), 1);
        assert_eq!(all_traces(0, 2).count(), 0);
    }
}
