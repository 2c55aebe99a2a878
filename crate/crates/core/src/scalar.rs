//! Coefficient rings for [`LaurentPoly`](crate::LaurentPoly).
//!
//! Every ring operation is checked: fixed-width integers report overflow
//! instead of wrapping, and division only succeeds when it is exact.

use std::fmt::{Debug, Display};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{CheckedAdd, CheckedMul, CheckedNeg, CheckedSub, One, Zero};

pub trait Coefficient:
    Clone
    + Eq
    + Debug
    + Display
    + Zero
    + One
    + CheckedAdd
    + CheckedSub
    + CheckedMul
    + Send
    + Sync
    + 'static
{
    /// `self / rhs` if the quotient exists in the ring, `None` otherwise.
    fn checked_exact_div(&self, rhs: &Self) -> Option<Self>;

    fn checked_negate(&self) -> Option<Self>;

    /// Image of an integer in the ring.
    fn from_i64(n: i64) -> Option<Self>;

    /// Integer value, if the element is an integer that fits in an `i64`.
    fn to_i64(&self) -> Option<i64>;
}

macro_rules! impl_primitive {
    ($($t:ty),*) => {$(
        impl Coefficient for $t {
            fn checked_exact_div(&self, rhs: &Self) -> Option<Self> {
                if *rhs == 0 {
                    return None;
                }
                let (q, rem) = self.div_rem(rhs);
                (rem == 0).then_some(q)
            }

            fn checked_negate(&self) -> Option<Self> {
                CheckedNeg::checked_neg(self)
            }

            fn from_i64(n: i64) -> Option<Self> {
                <$t>::try_from(n).ok()
            }

            fn to_i64(&self) -> Option<i64> {
                i64::try_from(*self).ok()
            }
        }
    )*};
}

impl_primitive!(i32, i64, i128);

impl Coefficient for BigInt {
    fn checked_exact_div(&self, rhs: &Self) -> Option<Self> {
        if rhs.is_zero() {
            return None;
        }
        let (q, rem) = self.div_rem(rhs);
        rem.is_zero().then_some(q)
    }

    fn checked_negate(&self) -> Option<Self> {
        Some(-self)
    }

    fn from_i64(n: i64) -> Option<Self> {
        Some(BigInt::from(n))
    }

    fn to_i64(&self) -> Option<i64> {
        i64::try_from(self).ok()
    }
}

impl<T> Coefficient for Ratio<T>
where
    T: Coefficient + Integer + CheckedNeg,
{
    fn checked_exact_div(&self, rhs: &Self) -> Option<Self> {
        if rhs.is_zero() {
            return None;
        }
        // a/b / c/d = (a*d) / (b*c)
        let num = self.numer().checked_mul(rhs.denom())?;
        let den = self.denom().checked_mul(rhs.numer())?;
        Some(Ratio::new(num, den))
    }

    fn checked_negate(&self) -> Option<Self> {
        Some(Ratio::new_raw(
            self.numer().checked_negate()?,
            self.denom().clone(),
        ))
    }

    fn from_i64(n: i64) -> Option<Self> {
        Some(Ratio::from_integer(T::from_i64(n)?))
    }

    fn to_i64(&self) -> Option<i64> {
        if self.is_integer() {
            self.numer().to_i64()
        } else {
            None
        }
    }
}
