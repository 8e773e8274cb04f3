//! Coefficient trait shared by every polynomial in the crate.

use std::fmt::Debug;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};

use num_traits::{FromPrimitive, One, Zero};

/// A commutative ring element usable as a polynomial coefficient.
///
/// Implemented for every type with the usual `num-traits` arithmetic, so
/// `BigInt`, `BigRational`, `i64`, `i128` and `f64` all qualify.
pub trait Scalar:
    Clone
    + PartialEq
    + Debug
    + Zero
    + One
    + FromPrimitive
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
    + Send
    + Sync
{
    fn mul_ref(&self, rhs: &Self) -> Self;

    /// `self / rhs` when the quotient is exact in this ring, `None` otherwise.
    fn try_div_exact(&self, rhs: &Self) -> Option<Self> {
        if rhs.is_zero() {
            return None;
        }
        let q = self.clone() / rhs.clone();
        if q.mul_ref(rhs) == *self {
            Some(q)
        } else {
            None
        }
    }

    fn from_small(v: i64) -> Self {
        Self::from_i64(v).expect("small integer must be representable")
    }
}

impl<T> Scalar for T
where
    T: Clone
        + PartialEq
        + Debug
        + Zero
        + One
        + FromPrimitive
        + Neg<Output = T>
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + Div<Output = T>
        + for<'a> AddAssign<&'a T>
        + for<'a> SubAssign<&'a T>
        + Send
        + Sync,
    for<'a> &'a T: Mul<&'a T, Output = T>,
{
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_rational::BigRational;

    #[test]
    fn exact_division_per_ring() {
        assert_eq!(
            BigInt::from(12).try_div_exact(&BigInt::from(4)),
            Some(BigInt::from(3))
        );
        assert_eq!(BigInt::from(12).try_div_exact(&BigInt::from(5)), None);
        assert_eq!(7i64.try_div_exact(&0), None);
        let r = BigRational::from_small(1)
            .try_div_exact(&BigRational::from_small(3))
            .unwrap();
        assert_eq!(r * BigRational::from_small(3), BigRational::from_small(1));
    }
}
