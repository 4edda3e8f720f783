//! High-precision decimal evaluation of exact values.
//!
//! This is a sanity layer only: nothing in the library decides a result from
//! these approximations. Values are binary fixed-point `BigInt`s with guard
//! bits; π comes from Machin's formula and cos/sin from Taylor series.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use super::cyclotomic::Cyclotomic;
use super::group_ring::TrigKind;
use super::scalar::Scalar;

const GUARD_BITS: u32 = 64;

fn bits_for(digits: u32) -> u32 {
    (digits as f64 * std::f64::consts::LOG2_10).ceil() as u32 + GUARD_BITS
}

/// A complex number `(re + i·im) / 2^bits`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Approx {
    re: BigInt,
    im: BigInt,
    bits: u32,
}

impl Approx {
    /// Real part as a truncated decimal string with `digits` fractional digits.
    pub fn re_decimal(&self, digits: u32) -> String {
        to_decimal(&self.re, self.bits, digits)
    }

    /// Imaginary part as a truncated decimal string.
    pub fn im_decimal(&self, digits: u32) -> String {
        to_decimal(&self.im, self.bits, digits)
    }

    /// Nearest `f64` pair.
    pub fn to_f64(&self) -> (f64, f64) {
        let scale = 2f64.powi(self.bits as i32);
        let f = |x: &BigInt| {
            let shift = self.bits.saturating_sub(60);
            let y: BigInt = x >> shift;
            y.to_f64().unwrap_or(f64::NAN) * 2f64.powi(shift as i32) / scale
        };
        (f(&self.re), f(&self.im))
    }

    /// Whether both parts agree with `other` to within 10^-digits.
    pub fn close_to(&self, other: &Approx, digits: u32) -> bool {
        let bits = self.bits.min(other.bits);
        let a = self.rescale(bits);
        let b = other.rescale(bits);
        let tol = (BigInt::from(1) << bits) / BigInt::from(10).pow(digits);
        (&a.re - &b.re).abs() <= tol && (&a.im - &b.im).abs() <= tol
    }

    fn rescale(&self, bits: u32) -> Approx {
        let s = self.bits - bits;
        Approx { re: &self.re >> s, im: &self.im >> s, bits }
    }

    fn real(re: BigInt, bits: u32) -> Approx {
        Approx { re, im: BigInt::zero(), bits }
    }
}

fn to_decimal(x: &BigInt, bits: u32, digits: u32) -> String {
    let a = x.abs();
    let one = BigInt::from(1) << bits;
    let (int, rem) = a.div_rem(&one);
    let frac = (rem * BigInt::from(10).pow(digits)) >> bits;
    let neg = x.is_negative() && !(int.is_zero() && frac.is_zero());
    let mut s = format!("{}{}", if neg { "-" } else { "" }, int);
    if digits > 0 {
        s.push('.');
        s.push_str(&format!("{:0>width$}", frac.to_string(), width = digits as usize));
    }
    s
}

fn atan_inv(x: u64, bits: u32) -> BigInt {
    let one = BigInt::from(1) << bits;
    let x2 = BigInt::from(x * x);
    let mut power = one / BigInt::from(x);
    let mut sum = BigInt::zero();
    let mut k = 0u64;
    while !power.is_zero() {
        let term = &power / BigInt::from(2 * k + 1);
        if k % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
        power /= &x2;
        k += 1;
    }
    sum
}

/// π · 2^bits.
fn pi_fixed(bits: u32) -> BigInt {
    let w = bits + 16;
    ((atan_inv(5, w) * 16) - (atan_inv(239, w) * 4)) >> 16
}

/// (cos θ, sin θ) for θ = π·a/b, each scaled by 2^bits.
fn cos_sin(a: i64, b: i64, bits: u32) -> (BigInt, BigInt) {
    let two_b = 2 * b;
    let mut r = a.rem_euclid(two_b);
    if r > b {
        r -= two_b;
    }
    let w = bits + 16;
    let one = BigInt::from(1) << w;
    let theta = pi_fixed(w) * BigInt::from(r) / BigInt::from(b);
    let (mut c, mut s) = (BigInt::zero(), BigInt::zero());
    let mut term = one;
    let mut n = 0u64;
    while !term.is_zero() {
        match n % 4 {
            0 => c += &term,
            1 => s += &term,
            2 => c -= &term,
            _ => s -= &term,
        }
        n += 1;
        term = ((term * &theta) >> w) / BigInt::from(n);
    }
    (c >> 16, s >> 16)
}

fn rational_fixed(x: &BigRational, bits: u32) -> BigInt {
    (x.numer() << bits) / x.denom()
}

/// Evaluates a canonical cyclotomic value at ζ_m = e^{2πi/m}.
pub fn evaluate<T: Scalar>(v: &Cyclotomic<T>, digits: u32) -> Approx {
    let bits = bits_for(digits);
    let m = v.modulus() as i64;
    let (mut re, mut im) = (BigInt::zero(), BigInt::zero());
    for (k, c) in v.nonzero_terms() {
        let (cs, sn) = cos_sin(2 * k as i64, m, bits);
        let cf = rational_fixed(&c.to_big(), bits);
        re += (&cf * cs) >> bits;
        im += (&cf * sn) >> bits;
    }
    Approx { re, im, bits }
}

/// A rational as an [`Approx`].
pub fn rational_approx(x: &BigRational, digits: u32) -> Approx {
    let bits = bits_for(digits);
    Approx::real(rational_fixed(x, bits), bits)
}

/// Evaluates a trigonometric function directly from cos and sin series,
/// independently of the cyclotomic representation. Returns `None` at poles.
pub fn trig_numeric(kind: TrigKind, a: i64, b: i64, digits: u32) -> Option<Approx> {
    let bits = bits_for(digits);
    let (c, s) = cos_sin(a, b, bits);
    let div = |x: &BigInt, y: &BigInt| (x << bits) / y;
    let pole = (a % b) == 0;
    Some(match kind {
        TrigKind::Cos => Approx::real(c, bits),
        TrigKind::Sin => Approx::real(s, bits),
        TrigKind::ExpIPi => Approx { re: c, im: s, bits },
        TrigKind::Cot if !pole => Approx::real(div(&c, &s), bits),
        TrigKind::Csc if !pole => Approx::real(div(&(BigInt::from(1) << bits), &s), bits),
        TrigKind::Csc2 if !pole => {
            let inv = div(&(BigInt::from(1) << bits), &s);
            Approx::real((&inv * &inv) >> bits, bits)
        }
        _ => return None,
    })
}

/// Product of two approximations.
pub fn mul(x: &Approx, y: &Approx) -> Approx {
    let bits = x.bits.min(y.bits);
    let (x, y) = (x.rescale(bits), y.rescale(bits));
    Approx {
        re: (&x.re * &y.re - &x.im * &y.im) >> bits,
        im: (&x.re * &y.im + &x.im * &y.re) >> bits,
        bits,
    }
}

/// Sum of two approximations.
pub fn add(x: &Approx, y: &Approx) -> Approx {
    let bits = x.bits.min(y.bits);
    let (x, y) = (x.rescale(bits), y.rescale(bits));
    Approx { re: x.re + y.re, im: x.im + y.im, bits }
}

/// Scales by a rational.
pub fn scale(x: &Approx, c: &BigRational) -> Approx {
    let f = rational_fixed(c, x.bits);
    Approx { re: (&x.re * &f) >> x.bits, im: (&x.im * &f) >> x.bits, bits: x.bits }
}
