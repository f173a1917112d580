//! Dense univariate polynomials over an integer domain.

use std::fmt;

use num_traits::{Signed, Zero};

use super::modular;
use crate::scalar::Coefficient;

/// Polynomial in `z`; `coeffs[i]` multiplies `z^i`. Trailing zeros are never
/// stored, so the zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial<T> {
    coeffs: Vec<T>,
}

impl<T: Coefficient> Polynomial<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(T::one())
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    /// `c · z^k`
    pub fn monomial(c: T, k: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![T::zero(); k + 1];
        coeffs[k] = c;
        Polynomial { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// Coefficient of `z^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> T {
        self.coeffs.get(i).cloned().unwrap_or_else(T::zero)
    }

    pub fn constant_term(&self) -> T {
        self.coeff(0)
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    /// Lowest-order nonzero coefficient.
    pub fn trailing(&self) -> Option<&T> {
        self.coeffs.iter().find(|c| !c.is_zero())
    }

    pub fn add(&self, other: &Self) -> Self {
        let (long, short) = if self.coeffs.len() >= other.coeffs.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c = c.add_ref(s);
        }
        Self::new(coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| match (self.coeffs.get(i), other.coeffs.get(i)) {
                (Some(a), Some(b)) => a.sub_ref(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => -b.clone(),
                (None, None) => unreachable!(),
            })
            .collect();
        Self::new(coeffs)
    }

    pub fn neg(&self) -> Self {
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if self.coeffs.len() == 1 {
            return other.scale(&self.coeffs[0]);
        }
        if other.coeffs.len() == 1 {
            return self.scale(&other.coeffs[0]);
        }
        let mut out = vec![T::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j].add_mul(a, b);
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, c: &T) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Polynomial {
            coeffs: self.coeffs.iter().map(|x| x.mul_ref(c)).collect(),
        }
    }

    /// Divides every coefficient by `c`, which must divide all of them.
    pub fn div_scalar(&self, c: &T) -> Self {
        Polynomial {
            coeffs: self.coeffs.iter().map(|x| x.div_floor(c)).collect(),
        }
    }

    /// Non-negative gcd of the coefficients; zero for the zero polynomial.
    pub fn content(&self) -> T {
        let mut g = T::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Content removed and sign fixed so the leading coefficient is positive.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = self.content();
        if self.leading().is_some_and(Signed::is_negative) {
            c = -c;
        }
        if c.is_one() {
            self.clone()
        } else {
            self.div_scalar(&c)
        }
    }

    /// Quotient when `divisor` divides `self` exactly over the integers.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let dd = divisor.degree()?;
        if self.is_zero() {
            return Some(Self::zero());
        }
        let nd = self.degree()?;
        if nd < dd {
            return None;
        }
        let lead = divisor.leading()?;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![T::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let top = &rem[k + dd];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(lead);
            if !r.is_zero() {
                return None;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[k + j].sub_mul(&q, d);
            }
            quot[k] = q;
        }
        if rem.iter().all(Zero::is_zero) {
            Some(Self::new(quot))
        } else {
            None
        }
    }

    /// `lc(b)^e · self mod b` for some `e ≥ 0`; the constant factor is left
    /// unspecified, which is all a primitive remainder sequence needs.
    fn pseudo_rem(&self, b: &Self) -> Self {
        let db = b.degree().expect("nonzero divisor");
        let lead = b.leading().unwrap().clone();
        let mut r = self.coeffs.clone();
        while r.len() > db {
            let top = r.len() - 1;
            let lr = r[top].clone();
            if lr.is_zero() {
                r.pop();
                continue;
            }
            let shift = top - db;
            let g = lr.gcd(&lead);
            let scale_r = lead.div_floor(&g);
            let scale_b = lr.div_floor(&g);
            if !scale_r.is_one() {
                for c in r.iter_mut() {
                    *c = c.mul_ref(&scale_r);
                }
            }
            for (j, d) in b.coeffs.iter().enumerate() {
                r[shift + j].sub_mul(&scale_b, d);
            }
            debug_assert!(r[top].is_zero());
            r.pop();
        }
        Self::new(r)
    }

    pub(crate) fn residues(&self, p: u64) -> Vec<u64> {
        self.coeffs.iter().map(|c| c.residue(p)).collect()
    }

    /// Greatest common divisor with non-negative content and positive leading
    /// coefficient. `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.normalized_sign();
        }
        if other.is_zero() {
            return self.normalized_sign();
        }
        let c = self.content().gcd(&other.content());
        let (mut a, mut b) = (self.primitive_part(), other.primitive_part());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        if b.degree() == Some(0) {
            return Self::constant(c);
        }
        if a == b {
            return a.scale(&c);
        }
        // A modular image bounds the degree of the true gcd from above.
        if let Some(bound) = modular::gcd_degree_bound(&a, &b) {
            if bound == 0 {
                return Self::constant(c);
            }
            if Some(bound) == b.degree() && a.div_exact(&b).is_some() {
                return b.scale(&c);
            }
            if let Some(g) = modular::modular_gcd(&a, &b) {
                return g.scale(&c);
            }
        }
        loop {
            let r = a.pseudo_rem(&b);
            if r.is_zero() {
                return b.scale(&c);
            }
            if r.degree() == Some(0) {
                return Self::constant(c);
            }
            a = b;
            b = r.primitive_part();
        }
    }

    fn normalized_sign(&self) -> Self {
        if self.leading().is_some_and(Signed::is_negative) {
            self.neg()
        } else {
            self.clone()
        }
    }

    /// Value at an integer point, by Horner's rule.
    pub fn eval(&self, z: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc.mul_ref(z).add_ref(c))
    }
}

impl<T: Coefficient> fmt::Display for Polynomial<T> {
    /// Ascending powers: `1 - 2z + 3z^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            match i {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}")?;
                    }
                    f.write_str("z")?;
                    if i > 1 {
                        write!(f, "^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl<T: Coefficient> fmt::Debug for Polynomial<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use proptest::prelude::*;

    type P = Polynomial<BigInt>;

    fn p(c: &[i64]) -> P {
        P::new(c.iter().map(|&x| BigInt::from(x)).collect())
    }

    #[test]
    fn canonical_storage() {
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(p(&[1, 2, 0]).degree(), Some(1));
        assert_eq!(P::zero().degree(), None);
    }

    #[test]
    fn display() {
        assert_eq!(p(&[1, -2]).to_string(), "1 - 2z");
        assert_eq!(p(&[0, 1, -1, 3]).to_string(), "z - z^2 + 3z^3");
        assert_eq!(p(&[-1]).to_string(), "-1");
        assert_eq!(p(&[0, -3]).to_string(), "-3z");
        assert_eq!(P::zero().to_string(), "0");
    }

    #[test]
    fn arithmetic() {
        let a = p(&[1, 1]);
        let b = p(&[1, -1]);
        assert_eq!(a.mul(&b), p(&[1, 0, -1]));
        assert_eq!(a.add(&b), p(&[2]));
        assert_eq!(a.sub(&a), P::zero());
        assert_eq!(p(&[1, 0, -1]).div_exact(&b), Some(a.clone()));
        assert_eq!(p(&[1, 0, 1]).div_exact(&b), None);
        assert_eq!(p(&[2, 4]).div_exact(&p(&[3])), None);
        assert_eq!(p(&[1, 2, 3]).eval(&BigInt::from(2)), BigInt::from(17));
    }

    #[test]
    fn gcd_examples() {
        // (1+z)(1-2z) and (1+z)(3+z^2)
        let f = p(&[1, 1]);
        let a = f.mul(&p(&[1, -2]));
        let b = f.mul(&p(&[3, 0, 1]));
        assert_eq!(a.gcd(&b), f);
        assert_eq!(p(&[2, 4]).gcd(&p(&[6, 12])), p(&[2, 4]));
        assert_eq!(p(&[1, -2]).gcd(&p(&[1, 1])), p(&[1]));
        assert_eq!(p(&[4]).gcd(&p(&[0, 6])), p(&[2]));
        assert_eq!(P::zero().gcd(&p(&[-1, -1])), p(&[1, 1]));
    }

    fn small_poly() -> impl Strategy<Value = P> {
        prop::collection::vec(-6i64..=6, 0..6).prop_map(|v| p(&v))
    }

    proptest! {
        #[test]
        fn gcd_divides_and_is_maximal(a in small_poly(), b in small_poly(), f in small_poly()) {
            prop_assume!(!f.is_zero());
            let (x, y) = (a.mul(&f), b.mul(&f));
            let g = x.gcd(&y);
            if x.is_zero() && y.is_zero() {
                prop_assert!(g.is_zero());
            } else {
                prop_assert!(x.div_exact(&g).is_some());
                prop_assert!(y.div_exact(&g).is_some());
                // the common factor survives up to its content
                prop_assert!(g.div_exact(&f.primitive_part()).is_some());
                // cofactors are coprime
                let (cx, cy) = (x.div_exact(&g).unwrap(), y.div_exact(&g).unwrap());
                let h = cx.gcd(&cy);
                prop_assert!(h.degree().unwrap_or(0) == 0);
            }
        }

        #[test]
        fn multiplication_matches_evaluation(a in small_poly(), b in small_poly(), z in -5i64..5) {
            let z = BigInt::from(z);
            prop_assert_eq!(a.mul(&b).eval(&z), a.eval(&z) * b.eval(&z));
        }
    }
}
