//! Rational functions `N(z) / D(z)` kept in canonical form.

use std::fmt;

use num_traits::Signed;

use super::poly::Polynomial;
use crate::error::{Error, Result};
use crate::scalar::Coefficient;

/// Quotient of two integer polynomials.
///
/// Canonical form: numerator and denominator are coprime, the integer content
/// shared by all their coefficients is 1, and the lowest-order nonzero
/// coefficient of the denominator is positive. The zero function is `0 / 1`.
/// Structural equality is therefore equality of functions.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction<T> {
    num: Polynomial<T>,
    den: Polynomial<T>,
}

impl<T: Coefficient> RationalFunction<T> {
    /// Reduces `num / den` to canonical form.
    pub fn new(num: Polynomial<T>, den: Polynomial<T>) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::InvalidParameter("zero denominator".into()));
        }
        let g = num.gcd(&den);
        if g.degree().unwrap_or(0) == 0 {
            return Ok(Self::normalized(num, den));
        }
        let num = num.div_exact(&g).expect("gcd divides");
        let den = den.div_exact(&g).expect("gcd divides");
        Ok(Self::normalized(num, den))
    }

    /// Fixes content and sign of an already coprime pair.
    fn normalized(num: Polynomial<T>, den: Polynomial<T>) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let mut c = num.content().gcd(&den.content());
        if den.trailing().is_some_and(Signed::is_negative) {
            c = -c;
        }
        if c.is_one() {
            RationalFunction { num, den }
        } else {
            RationalFunction {
                num: num.div_scalar(&c),
                den: den.div_scalar(&c),
            }
        }
    }

    pub fn zero() -> Self {
        RationalFunction {
            num: Polynomial::zero(),
            den: Polynomial::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_poly(Polynomial::one())
    }

    pub fn from_poly(p: Polynomial<T>) -> Self {
        Self::normalized(p, Polynomial::one())
    }

    /// `n · z`
    pub fn linear(n: usize) -> Self {
        Self::from_poly(Polynomial::monomial(T::from_count(n), 1))
    }

    pub fn numerator(&self) -> &Polynomial<T> {
        &self.num
    }

    pub fn denominator(&self) -> &Polynomial<T> {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num == self.den
    }

    /// Maximum of numerator and denominator degrees (zero for constants).
    pub fn degree(&self) -> usize {
        self.num.degree().unwrap_or(0).max(self.den.degree().unwrap_or(0))
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den == other.den {
            let t = self.num.add(&other.num);
            return Self::new(t, self.den.clone()).expect("nonzero denominator");
        }
        let g = self.den.gcd(&other.den);
        if g.degree() == Some(0) {
            // coprime denominators: the sum is already reduced
            let num = self.num.mul(&other.den).add(&other.num.mul(&self.den));
            return Self::normalized(num, self.den.mul(&other.den));
        }
        let b1 = self.den.div_exact(&g).expect("gcd divides");
        let d1 = other.den.div_exact(&g).expect("gcd divides");
        let t = self.num.mul(&d1).add(&other.num.mul(&b1));
        if t.is_zero() {
            return Self::zero();
        }
        let h = t.gcd(&g);
        if h.degree() == Some(0) {
            return Self::normalized(t, b1.mul(&other.den));
        }
        let t = t.div_exact(&h).expect("gcd divides");
        let g_rest = other.den.div_exact(&h).expect("h divides g");
        Self::normalized(t, b1.mul(&g_rest))
    }

    pub fn neg(&self) -> Self {
        RationalFunction {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if self.is_one() {
            return other.clone();
        }
        if other.is_one() {
            return self.clone();
        }
        // cross-cancel: gcd(a, d) and gcd(c, b) for (a/b)(c/d)
        let (mut a, mut b) = (self.num.clone(), self.den.clone());
        let (mut c, mut d) = (other.num.clone(), other.den.clone());
        for (x, y) in [(&mut a, &mut d), (&mut c, &mut b)] {
            if x.degree().unwrap_or(0) == 0 || y.degree().unwrap_or(0) == 0 {
                continue;
            }
            let g = x.gcd(y);
            if g.degree().unwrap_or(0) > 0 {
                *x = x.div_exact(&g).expect("gcd divides");
                *y = y.div_exact(&g).expect("gcd divides");
            }
        }
        Self::normalized(a.mul(&c), b.mul(&d))
    }

    /// `1 / (1 - self)`, the generating function of the Kleene star.
    pub fn kleene(&self) -> Result<Self> {
        // 1 / (1 - a/b) = b / (b - a); gcd(b, b - a) = gcd(b, a) = 1
        let den = self.den.sub(&self.num);
        if den.constant_term().is_zero() {
            return Err(Error::DivergentStar);
        }
        Ok(Self::normalized(self.den.clone(), den))
    }

    /// Value of the series at `z = 0`, when the denominator does not vanish there.
    pub fn constant_term(&self) -> Option<num_rational::Ratio<T>> {
        let d = self.den.constant_term();
        if d.is_zero() {
            None
        } else {
            Some(num_rational::Ratio::new(self.num.constant_term(), d))
        }
    }
}

fn wrap<T: Coefficient>(p: &Polynomial<T>, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    let terms = p.coeffs().iter().filter(|c| !c.is_zero()).count();
    if terms > 1 {
        write!(f, "({p})")
    } else {
        write!(f, "{p}")
    }
}

impl<T: Coefficient> fmt::Display for RationalFunction<T> {
    /// `N(z) / D(z)` with ascending powers, e.g. `1 / (1 - 2z)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        wrap(&self.num, f)?;
        f.write_str(" / ")?;
        wrap(&self.den, f)
    }
}

impl<T: Coefficient> fmt::Debug for RationalFunction<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalFunction({self})")
    }
}

impl<T: Coefficient> Default for RationalFunction<T> {
    fn default() -> Self {
        Self::zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_traits::Zero;
    use proptest::prelude::*;

    type P = Polynomial<BigInt>;
    type R = RationalFunction<BigInt>;

    fn p(c: &[i64]) -> P {
        P::new(c.iter().map(|&x| BigInt::from(x)).collect())
    }

    fn r(n: &[i64], d: &[i64]) -> R {
        R::new(p(n), p(d)).unwrap()
    }

    #[test]
    fn kleene_of_two_z() {
        let f = R::linear(2).kleene().unwrap();
        assert_eq!(f, r(&[1], &[1, -2]));
        assert_eq!(f.to_string(), "1 / (1 - 2z)");
    }

    #[test]
    fn divergent_star() {
        assert_eq!(R::one().kleene(), Err(Error::DivergentStar));
        assert_eq!(r(&[1, 1], &[1]).kleene(), Err(Error::DivergentStar));
    }

    #[test]
    fn identities_and_cancellation() {
        let f = r(&[1, 3], &[1, -1, -1]);
        assert_eq!(f.add(&R::zero()), f);
        assert_eq!(f.mul(&R::one()), f);
        let inv = r(&[1], &[1, -1]);
        assert_eq!(inv.mul(&R::from_poly(p(&[1, -1]))), R::one());
        assert_eq!(f.sub(&f), R::zero());
        assert_eq!(R::zero().to_string(), "0 / 1");
    }

    #[test]
    fn canonical_sign_and_content() {
        assert_eq!(r(&[2], &[-2, 4]), r(&[-1], &[1, -2]));
        assert_eq!(r(&[0, 3], &[0, 6]), r(&[1], &[2]));
        assert_eq!(r(&[-4, 0, 4], &[2, 2]), r(&[-2, 2], &[1]));
    }

    #[test]
    fn addition_over_shared_factors() {
        // 1/((1-z)(1-2z)) + 1/((1-z)(1+z))
        let a = r(&[1], &[1, -3, 2]);
        let b = r(&[1], &[1, 0, -1]);
        let expected = R::new(
            p(&[1, 1]).add(&p(&[1, -2])),
            p(&[1, -3, 2]).mul(&p(&[1, 1])),
        )
        .unwrap();
        assert_eq!(a.add(&b), expected);
    }

    fn small_rf() -> impl Strategy<Value = R> {
        (
            prop::collection::vec(-4i64..=4, 0..4),
            prop::collection::vec(-4i64..=4, 0..4),
        )
            .prop_filter_map("nonzero denominator", |(n, mut d)| {
                d.insert(0, 1);
                R::new(p(&n), p(&d)).ok()
            })
    }

    fn at(f: &R, z: i64) -> Option<num_rational::BigRational> {
        let z = BigInt::from(z);
        let d = f.denominator().eval(&z);
        (!d.is_zero()).then(|| num_rational::BigRational::new(f.numerator().eval(&z), d))
    }

    proptest! {
        #[test]
        fn field_operations_agree_pointwise(f in small_rf(), g in small_rf(), z in -6i64..6) {
            if let (Some(x), Some(y)) = (at(&f, z), at(&g, z)) {
                if let Some(s) = at(&f.add(&g), z) {
                    prop_assert_eq!(s, &x + &y);
                }
                if let Some(m) = at(&f.mul(&g), z) {
                    prop_assert_eq!(m, x * y);
                }
            }
        }

        #[test]
        fn star_inverts_one_minus(n in prop::collection::vec(-4i64..=4, 0..4)) {
            let mut n = n;
            n.insert(0, 0);
            let f = R::from_poly(p(&n));
            let star = f.kleene().unwrap();
            prop_assert_eq!(star.mul(&R::one().sub(&f)), R::one());
        }

        #[test]
        fn results_stay_canonical(f in small_rf(), g in small_rf()) {
            for h in [f.add(&g), f.mul(&g)] {
                let again = R::new(h.numerator().clone(), h.denominator().clone()).unwrap();
                prop_assert_eq!(&again, &h);
                prop_assert!(h.numerator().gcd(h.denominator()).degree() == Some(0));
            }
        }
    }
}
