//! Integer scalar abstraction for the exact arithmetic in [`crate::counting`] and
//! [`crate::metrics`].
//!
//! Everything that manipulates polynomials, generating functions or counts is
//! generic over a [`Coefficient`]. Language cardinalities grow like `|Σ|^n`, so the
//! crate-root aliases pick [`num_bigint::BigInt`]; fixed-width integers are useful
//! for small, bounded experiments and for cross-checking.

use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::ops::{Add, AddAssign, Mul, Sub, SubAssign};

use num_integer::Integer;
use num_traits::{FromPrimitive, Signed, ToPrimitive};

/// A signed integer domain usable as polynomial coefficient.
pub trait Coefficient:
    Clone
    + Integer
    + Signed
    + FromPrimitive
    + ToPrimitive
    + Hash
    + Debug
    + Display
    + Send
    + Sync
    + 'static
{
    fn add_ref(&self, other: &Self) -> Self;
    fn sub_ref(&self, other: &Self) -> Self;
    fn mul_ref(&self, other: &Self) -> Self;
    /// `self += a * b`
    fn add_mul(&mut self, a: &Self, b: &Self);
    /// `self -= a * b`
    fn sub_mul(&mut self, a: &Self, b: &Self);

    fn from_count(n: usize) -> Self {
        Self::from_usize(n).expect("count does not fit the coefficient type")
    }

    /// Non-negative residue modulo a word-sized prime.
    fn residue(&self, p: u64) -> u64 {
        let m = Self::from_u64(p).expect("modulus does not fit the coefficient type");
        self.mod_floor(&m)
            .to_u64()
            .expect("residue is below the modulus")
    }
}

impl<T> Coefficient for T
where
    T: Clone
        + Integer
        + Signed
        + FromPrimitive
        + ToPrimitive
        + Hash
        + Debug
        + Display
        + Send
        + Sync
        + 'static
        + for<'a> AddAssign<&'a T>
        + for<'a> SubAssign<&'a T>,
    for<'a> &'a T: Add<&'a T, Output = T> + Sub<&'a T, Output = T> + Mul<&'a T, Output = T>,
{
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }

    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }

    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }

    fn add_mul(&mut self, a: &Self, b: &Self) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        let prod = a * b;
        *self += &prod;
    }

    fn sub_mul(&mut self, a: &Self, b: &Self) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        let prod = a * b;
        *self -= &prod;
    }
}
