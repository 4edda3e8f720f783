//! Exact trigonometric values at rational multiples of π.

use super::cyclotomic::Cyclotomic;
use super::group_ring::{GroupRing, TrigKind};
use super::scalar::Scalar;
use crate::error::{Error, Result};

/// The named function at π·a/b as an element of Q(ζ_m), where m is
/// [`TrigKind::natural_modulus`] of `b`: 2b for cos and exp, lcm(4, 2b)
/// otherwise.
pub fn trig_value<T: Scalar>(kind: TrigKind, a: i64, b: i64) -> Result<Cyclotomic<T>> {
    if b <= 0 {
        return Err(Error::InvalidInput(format!("denominator must be positive, got {b}")));
    }
    trig_value_in(kind, a, b, kind.natural_modulus(b))
}

/// The named function at π·a/b in Q(ζ_m) for a caller-chosen modulus.
pub fn trig_value_in<T: Scalar>(kind: TrigKind, a: i64, b: i64, m: u64) -> Result<Cyclotomic<T>> {
    GroupRing::trig(kind, m, a, b)?.to_cyclotomic()
}

/// Dieter's c(z) = cot(πz) with c(z) = 0 for integer z, in Q(ζ_m).
pub fn cot_or_zero<T: Scalar>(z: &T, m: u64) -> Result<Cyclotomic<T>> {
    let (a, b) = small_parts(z)?;
    if b == 1 {
        return Ok(Cyclotomic::zero(m));
    }
    trig_value_in(TrigKind::Cot, a, b, m)
}

/// csc²(πz) with the value 1/3 at integers, in Q(ζ_m).
pub fn csc2_or_third<T: Scalar>(z: &T, m: u64) -> Result<Cyclotomic<T>> {
    let (a, b) = small_parts(z)?;
    if b == 1 {
        return Ok(Cyclotomic::constant(m, T::from_frac(1, 3)));
    }
    trig_value_in(TrigKind::Csc2, a, b, m)
}

pub(crate) fn small_parts<T: Scalar>(z: &T) -> Result<(i64, i64)> {
    match (z.numer_i64(), z.denom_i64()) {
        (Some(a), Some(b)) => Ok((a, b)),
        _ => Err(Error::Overflow("trigonometric argument")),
    }
}
