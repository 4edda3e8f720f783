//! Exact scalars: arbitrary-precision rationals and cyclotomic field elements.

pub mod cyclotomic;
pub mod group_ring;
pub mod json;
pub mod numeric;
pub mod poly;
pub mod real;
pub mod scalar;
pub mod trig;

pub use cyclotomic::Cyclotomic;
pub use group_ring::{GroupRing, TrigKind};
pub use real::{bernoulli2, delta, frac, sawtooth};
pub use scalar::{rat, Scalar};
pub use trig::{trig_value, trig_value_in};

use crate::error::Result;

/// The rational value of `v`, or [`crate::Error::NotRational`].
pub fn as_rational<T: Scalar>(v: &Cyclotomic<T>) -> Result<T> {
    v.as_rational()
}
