//! Scalar abstraction for exact rational arithmetic.
//!
//! Every evaluator in `exact` and `sums` is generic over [`Scalar`]. The crate
//! root fixes the default to [`BigRational`]; the fixed-width ratios are
//! provided for fast evaluation of small inputs and for cross-checks.

use std::fmt::{Debug, Display};

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{Num, NumAssign, Signed, ToPrimitive};

/// An exact field of characteristic zero containing Q.
pub trait Scalar:
    Clone + Debug + Display + PartialEq + PartialOrd + Num + NumAssign + Signed + Send + Sync + 'static
{
    /// The integer `n`.
    fn from_int(n: i64) -> Self;

    /// The fraction `n/d`. Panics when `d == 0`.
    fn from_frac(n: i64, d: i64) -> Self;

    /// Converts from an arbitrary-precision rational, if it fits.
    fn from_big(x: &BigRational) -> Option<Self>;

    /// Converts to an arbitrary-precision rational.
    fn to_big(&self) -> BigRational;

    /// Largest integer not exceeding `self`.
    fn floor_value(&self) -> Self;

    /// Whether the value is an integer.
    fn is_int(&self) -> bool;

    /// The value as an `i64`, when it is an integer that fits.
    fn to_i64_exact(&self) -> Option<i64> {
        if !self.is_int() {
            return None;
        }
        self.to_big().to_integer().to_i64()
    }

    /// Denominator in lowest terms, when it fits in an `i64`.
    fn denom_i64(&self) -> Option<i64> {
        self.to_big().denom().to_i64()
    }

    /// Numerator in lowest terms, when it fits in an `i64`.
    fn numer_i64(&self) -> Option<i64> {
        self.to_big().numer().to_i64()
    }
}

macro_rules! impl_fixed_scalar {
    ($($t:ty, $to:ident);*) => {$(
        impl Scalar for Ratio<$t> {
            fn from_int(n: i64) -> Self {
                Ratio::from_integer(n as $t)
            }
            fn from_frac(n: i64, d: i64) -> Self {
                Ratio::new(n as $t, d as $t)
            }
            fn from_big(x: &BigRational) -> Option<Self> {
                let n = x.numer().$to()?;
                let d = x.denom().$to()?;
                Some(Ratio::new_raw(n, d))
            }
            fn to_big(&self) -> BigRational {
                BigRational::new_raw(BigInt::from(*self.numer()), BigInt::from(*self.denom()))
            }
            fn floor_value(&self) -> Self {
                self.floor()
            }
            fn is_int(&self) -> bool {
                self.is_integer()
            }
            fn to_i64_exact(&self) -> Option<i64> {
                if self.is_integer() { self.numer().to_i64() } else { None }
            }
            fn denom_i64(&self) -> Option<i64> {
                self.denom().to_i64()
            }
            fn numer_i64(&self) -> Option<i64> {
                self.numer().to_i64()
            }
        }
    )*};
}

impl_fixed_scalar!(i64, to_i64; i128, to_i128);

impl Scalar for BigRational {
    fn from_int(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }
    fn from_frac(n: i64, d: i64) -> Self {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }
    fn from_big(x: &BigRational) -> Option<Self> {
        Some(x.clone())
    }
    fn to_big(&self) -> BigRational {
        self.clone()
    }
    fn floor_value(&self) -> Self {
        self.floor()
    }
    fn is_int(&self) -> bool {
        self.is_integer()
    }
}

/// Converts an `i128` fraction into a scalar.
pub(crate) fn from_i128_frac<T: Scalar>(n: i128, d: i128) -> T {
    if let (Some(a), Some(b)) = (n.to_i64(), d.to_i64()) {
        return T::from_frac(a, b);
    }
    let big = BigRational::new(BigInt::from(n), BigInt::from(d));
    T::from_big(&big).expect("value exceeds the scalar's range")
}

/// Multiplies a scalar by a small integer.
pub(crate) fn mul_int<T: Scalar>(x: &T, k: i64) -> T {
    match k {
        0 => T::zero(),
        1 => x.clone(),
        -1 => -x.clone(),
        _ => x.clone() * T::from_int(k),
    }
}

/// Builds a `BigRational` from `i64` parts, mostly for tests and fixtures.
pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::from_frac(n, d)
}
