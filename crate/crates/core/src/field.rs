//! Scalar abstraction for the exact linear algebra kernels.
//!
//! Everything downstream (matrices, matroids) is generic over a [`Field`].
//! The two fields actually used are [`Rational`] (arbitrary-precision
//! rationals from `num`) and [`crate::cyclotomic::CycNum`].

use std::fmt::{Debug, Display};
use std::ops::{Add, Mul, Neg, Sub};

use num::BigRational;
pub use num::traits::{One, Zero};

/// An exact field: the operations must satisfy the field axioms on the nose,
/// and `is_zero` must be a decision procedure (no tolerances anywhere).
pub trait Field:
    Clone
    + PartialEq
    + Debug
    + Display
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    /// Multiplicative inverse; `None` exactly on zero.
    fn inv(&self) -> Option<Self>;

    fn from_int(n: i64) -> Self;

    /// Exact division. Panics on division by zero.
    fn div(&self, other: &Self) -> Self {
        self.clone() * other.inv().expect("division by zero")
    }
}

/// Arbitrary-precision rational numbers, always stored reduced with a
/// positive denominator (`num` maintains both invariants).
pub type Rational = BigRational;

impl Field for Rational {
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }

    fn from_int(n: i64) -> Self {
        BigRational::from_integer(n.into())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_inverse() {
        let a = Rational::from_int(-6) / Rational::from_int(4);
        let b = a.inv().unwrap();
        assert!((a * b).is_one());
        assert_eq!(Rational::zero().inv(), None);
    }

    #[test]
    fn rational_is_reduced() {
        let a: Rational = "6/4".parse().unwrap();
        assert_eq!(a.numer().to_string(), "3");
        assert_eq!(a.denom().to_string(), "2");
    }
}
