use std::fmt::Write as _;


use crate::automata::Dfa;
use crate::error::{Error, Result};
use crate::scalar::Coefficient;

use super::rational::RationalFunction;

/// Exact number of accepted traces of each length `0..=n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CardinalitySequence<T> {
    counts: Vec<T>,
}

impl<T: Coefficient> CardinalitySequence<T> {
    pub fn new(counts: Vec<T>) -> Self {
        CardinalitySequence { counts }
    }

    pub fn counts(&self) -> &[T] {
        &self.counts
    }

    pub fn into_counts(self) -> Vec<T> {
        self.counts
    }

    /// Count for traces of length `n`.
    pub fn get(&self, n: usize) -> &T {
        &self.counts[n]
    }

    pub fn max_length(&self) -> usize {
        self.counts.len().saturating_sub(1)
    }

    pub fn len(&self) -> usize {
        self.counts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    /// Running sums `Σ_{i ≤ n} a_i`.
    pub fn cumulative(&self) -> Vec<T> {
        let mut acc = T::zero();
        self.counts
            .iter()
            .map(|c| {
                acc = acc.add_ref(c);
                acc.clone()
            })
            .collect()
    }

    /// `length,count` lines with a header.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("length,count\n");
        for (n, c) in self.counts.iter().enumerate() {
            let _ = writeln!(out, "{n},{c}");
        }
        out
    }
}

/// Taylor coefficients `a_0..=a_{n_max}` of `f` from the linear recurrence
/// `a_n = (b_n - Σ_{j=1..n} c_j a_{n-j}) / c_0` given by `f = N / D`.
pub fn coefficients<T: Coefficient>(
    f: &RationalFunction<T>,
    n_max: usize,
) -> Result<CardinalitySequence<T>> {
    let num = f.numerator();
    let den = f.denominator().coeffs();
    let c0 = den.first().cloned().unwrap_or_else(T::zero);
    if c0.is_zero() {
        return Err(Error::ZeroConstantDenominator);
    }
    let mut a: Vec<T> = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let mut acc = num.coeff(n);
        for (j, cj) in den.iter().enumerate().take(n + 1).skip(1) {
            acc.sub_mul(cj, &a[n - j]);
        }
        let (q, r) = acc.div_rem(&c0);
        if !r.is_zero() {
            return Err(Error::NonIntegerCoefficient { index: n });
        }
        a.push(q);
    }
    Ok(CardinalitySequence::new(a))
}

/// Counts accepted traces per length by propagating path counts through the
/// transition table: `v_{k+1}[t] = Σ_{δ(q,s)=t} v_k[q]`, `a_k = Σ_{q∈F} v_k[q]`.
pub fn count_dp<T: Coefficient>(d: &Dfa, n_max: usize) -> CardinalitySequence<T> {
    let n = d.state_count();
    let mut v = vec![T::zero(); n];
    v[d.initial()] = T::one();
    let mut out = Vec::with_capacity(n_max + 1);
    for k in 0..=n_max {
        let mut total = T::zero();
        for q in d.accepting_states() {
            total = total.add_ref(&v[q]);
        }
        out.push(total);
        if k == n_max {
            break;
        }
        let mut next = vec![T::zero(); n];
        for (q, vq) in v.iter().enumerate() {
            if vq.is_zero() {
                continue;
            }
            for &t in d.row(q) {
                next[t] = next[t].add_ref(vq);
            }
        }
        v = next;
    }
    CardinalitySequence::new(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::{Alphabet, Dfa};
    use crate::counting::Polynomial;
    use num_bigint::BigInt;

    type R = RationalFunction<BigInt>;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn powers_of_two() {
        let f = R::linear(2).kleene().unwrap();
        assert_eq!(coefficients(&f, 4).unwrap().counts(), ints(&[1, 2, 4, 8, 16]));
    }

    #[test]
    fn zero_function() {
        assert_eq!(coefficients(&R::zero(), 3).unwrap().counts(), ints(&[0, 0, 0, 0]));
    }

    #[test]
    fn fibonacci() {
        // 1 / (1 - z - z^2)
        let f = R::new(Polynomial::one(), Polynomial::new(ints(&[1, -1, -1]))).unwrap();
        assert_eq!(coefficients(&f, 7).unwrap().counts(), ints(&[1, 1, 2, 3, 5, 8, 13, 21]));
    }

    #[test]
    fn recurrence_errors() {
        let pole = R::new(Polynomial::one(), Polynomial::new(ints(&[0, 1]))).unwrap();
        assert_eq!(coefficients(&pole, 2), Err(Error::ZeroConstantDenominator));
        let half = R::new(Polynomial::one(), Polynomial::new(ints(&[2, -1]))).unwrap();
        assert_eq!(coefficients(&half, 2), Err(Error::NonIntegerCoefficient { index: 0 }));
    }

    #[test]
    fn dp_counts() {
        let ab = Alphabet::new(["a", "b"]).unwrap();
        assert_eq!(count_dp::<BigInt>(&Dfa::universal(ab.clone()), 4).counts(), ints(&[1, 2, 4, 8, 16]));
        assert_eq!(count_dp::<BigInt>(&Dfa::empty(ab.clone()), 2).counts(), ints(&[0, 0, 0]));
        assert_eq!(count_dp::<i64>(&Dfa::epsilon(ab), 2).counts(), &[1, 0, 0]);
    }

    #[test]
    fn csv_and_running_sums() {
        let s = CardinalitySequence::new(ints(&[1, 2, 4]));
        assert_eq!(s.to_csv(), "length,count\n0,1\n1,2\n2,4\n");
        assert_eq!(s.cumulative(), ints(&[1, 3, 7]));
    }
}
