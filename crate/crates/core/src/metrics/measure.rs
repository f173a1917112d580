use std::fmt;

use num_rational::Ratio;

use crate::scalar::Coefficient;

/// An exact accuracy value, or `Undefined` when its denominator is zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Measure<T: Coefficient> {
    Defined(Ratio<T>),
    Undefined,
}

impl<T: Coefficient> Measure<T> {
    /// `num / den`, undefined on `den = 0`.
    pub fn ratio(num: T, den: T) -> Self {
        if den.is_zero() {
            Measure::Undefined
        } else {
            Measure::Defined(Ratio::new(num, den))
        }
    }

    pub fn is_defined(&self) -> bool {
        matches!(self, Measure::Defined(_))
    }

    pub fn value(&self) -> Option<&Ratio<T>> {
        match self {
            Measure::Defined(r) => Some(r),
            Measure::Undefined => None,
        }
    }

    /// Nearest double, computed from the exact decimal expansion so that huge
    /// numerators and denominators do not overflow.
    pub fn to_f64(&self) -> Option<f64> {
        self.value().map(|r| decimal(r, 17).parse().expect("decimal renders a float"))
    }

    /// Decimal with `digits` fractional digits (round half away from zero),
    /// or the literal `undefined`.
    pub fn render(&self, digits: usize) -> String {
        match self {
            Measure::Defined(r) => decimal(r, digits),
            Measure::Undefined => "undefined".to_string(),
        }
    }
}

fn decimal<T: Coefficient>(r: &Ratio<T>, digits: usize) -> String {
    let scale: T = num_traits::pow(T::from_u8(10).expect("small constant"), digits);
    let two = T::from_u8(2).expect("small constant");
    let den = r.denom().abs();
    let num = r.numer().abs();
    let negative = r.numer().is_negative() != r.denom().is_negative() && !num.is_zero();
    // round(|p| · 10^d / q) = floor((2 |p| 10^d + q) / 2q)
    let scaled = (two.clone() * num * scale.clone() + den.clone()) / (two * den);
    let int = scaled.clone() / scale.clone();
    let frac = scaled % scale;
    let sign = if negative { "-" } else { "" };
    if digits == 0 {
        format!("{sign}{int}")
    } else {
        format!("{sign}{int}.{:0>width$}", frac.to_string(), width = digits)
    }
}

impl<T: Coefficient> fmt::Display for Measure<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Measure::Defined(r) => write!(f, "{r}"),
            Measure::Undefined => f.write_str("undefined"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rendering() {
        assert_eq!(Measure::ratio(1i64, 5).render(6), "0.200000");
        assert_eq!(Measure::ratio(2i64, 3).render(3), "0.667");
        assert_eq!(Measure::ratio(1i64, 1).render(2), "1.00");
        assert_eq!(Measure::ratio(1i64, 8).render(2), "0.13");
        assert_eq!(Measure::ratio(1i64, 2).render(0), "1");
        assert_eq!(Measure::ratio(-1i64, 4).render(1), "-0.3");
        assert_eq!(Measure::<i64>::ratio(0, 0).render(6), "undefined");
    }

    #[test]
    fn floats_and_display() {
        assert_eq!(Measure::ratio(1i64, 5).to_f64(), Some(0.2));
        assert_eq!(Measure::<i64>::Undefined.to_f64(), None);
        assert_eq!(Measure::ratio(2i64, 10).to_string(), "1/5");
    }
}
