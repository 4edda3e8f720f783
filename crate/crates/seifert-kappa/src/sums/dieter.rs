//! Dedekind-Dieter cotangent sums
//! c(b, a; x, y) = (1/a) Σ_{k=0}^{a-1} c((b/a)(k+y) − x)·c((k+y)/a),
//! where c(z) = cot(πz) and c(z) = 0 for integer z.

use num_integer::Integer;

use super::{euclid_chain, Method};
use crate::error::{Error, Result};
use crate::exact::trig::{cot_or_zero, csc2_or_third, small_parts};
use crate::exact::{delta, Cyclotomic, GroupRing, Scalar, TrigKind};
use crate::Rational;

/// Parameters of c(b, a; x, y).
#[derive(Clone, Debug, PartialEq)]
pub struct DedekindDieterSpec<T = Rational> {
    /// Multiplier b.
    pub b: i64,
    /// Modulus a > 0.
    pub a: i64,
    /// Shift x.
    pub x: T,
    /// Shift y.
    pub y: T,
}

impl<T: Scalar> DedekindDieterSpec<T> {
    /// Builds a spec.
    pub fn new(b: i64, a: i64, x: T, y: T) -> Self {
        DedekindDieterSpec { b, a, x, y }
    }
}

/// Evaluates c(b, a; x, y).
///
/// `Brute` works for any a > 0 and lands in Q(ζ_m) with
/// m = lcm(4, 2·lcm(a·den(y), den(x))). `Reciprocity` requires a > b > 0
/// coprime and (x, y) = (b/r, a/r) for an integer r ≥ 1; its value lies in
/// Q(ζ_{lcm(4, 2r)}).
pub fn dedekind_dieter<T: Scalar>(spec: &DedekindDieterSpec<T>, method: Method) -> Result<Cyclotomic<T>> {
    match method {
        Method::Brute => brute(spec),
        Method::Reciprocity => {
            let r = reciprocity_shape(spec)?;
            reciprocity(spec.b, spec.a, r)
        }
    }
}

fn brute<T: Scalar>(s: &DedekindDieterSpec<T>) -> Result<Cyclotomic<T>> {
    if s.a <= 0 {
        return Err(Error::InvalidInput(format!("c(b,a;x,y) needs a > 0, got {}", s.a)));
    }
    let (_, dx) = small_parts(&s.x)?;
    let (_, dy) = small_parts(&s.y)?;
    let m = brute_modulus(s.a, dx, dy);
    let (a, b) = (T::from_int(s.a), T::from_int(s.b));
    let mut acc = GroupRing::zero(m);
    for k in 0..s.a {
        let ky = T::from_int(k) + s.y.clone();
        let z2 = ky.clone() / a.clone();
        let z1 = b.clone() * ky / a.clone() - s.x.clone();
        if z1.is_int() || z2.is_int() {
            continue;
        }
        let (n1, d1) = small_parts(&z1)?;
        let (n2, d2) = small_parts(&z2)?;
        let term = GroupRing::cot(m, n1, d1)?.mul(&GroupRing::cot(m, n2, d2)?)?;
        acc = acc.add(&term)?;
    }
    acc.scale(1, s.a as i128)?.to_cyclotomic()
}

fn brute_modulus(a: i64, dx: i64, dy: i64) -> u64 {
    let d = ((a * dy) as u64).lcm(&(dx as u64));
    TrigKind::Cot.natural_modulus(d as i64)
}

fn reciprocity_shape<T: Scalar>(s: &DedekindDieterSpec<T>) -> Result<i64> {
    let fail = |why: String| Err(Error::ReciprocityHypothesisViolated(why));
    if !(s.a > s.b && s.b > 0) || s.a.gcd(&s.b) != 1 {
        return fail(format!("needs a > b > 0 coprime, got b={}, a={}", s.b, s.a));
    }
    if s.x.is_zero() {
        return fail("x must equal b/r".into());
    }
    let r = T::from_int(s.b) / s.x.clone();
    match r.to_i64_exact() {
        Some(r) if r >= 1 && s.y == T::from_frac(s.a, r) => Ok(r),
        _ => fail(format!("(x, y) = ({}, {}) is not of the form (b/r, a/r)", s.x, s.y)),
    }
}

/// c(b, a; b/r, a/r) by the reciprocity recursion along the floor-quotient
/// chain of (a, b). Requires a > b > 0 coprime and r ≥ 1.
fn reciprocity<T: Scalar>(b: i64, a: i64, r: i64) -> Result<Cyclotomic<T>> {
    let m = TrigKind::Cot.natural_modulus(r);
    let (aa, q) = euclid_chain(a, b);
    let n = aa.len() - 1;
    let mut s = vec![0i64, 1];
    for j in 1..n {
        s.push(s[j] * q[j - 1] + s[j - 1]);
    }
    let at = |v: i64| T::from_frac(v, r);
    let mut tot = Cyclotomic::zero(m);
    for j in 1..=n {
        let (prev, cur) = (aa[j - 1], aa[j]);
        let mut term = cot_or_zero(&at(prev), m)? * cot_or_zero(&at(cur), m)?;
        let d_cur = delta(&T::from_int(cur), r);
        if d_cur != 0 {
            let w = T::from_frac(prev * d_cur, cur * r);
            term = term - csc2_or_third(&at(prev), m)?.scale(&w);
        }
        let d_prev = delta(&T::from_int(prev), r);
        if d_prev != 0 {
            let w = T::from_frac(cur * d_prev, prev * r);
            term = term - csc2_or_third(&at(cur), m)?.scale(&w);
        }
        tot = if j % 2 == 0 { tot + term } else { tot - term };
    }
    let last = csc2_or_third(&at(1), m)?.scale(&T::from_frac(s[n], a));
    tot = if n % 2 == 1 { tot + last } else { tot - last };
    if n % 2 == 1 {
        tot = tot - Cyclotomic::one(m);
    }
    Ok(tot)
}

/// c(b, a; bq/r, aq/r) for a > b > 0 coprime, gcd(a, r) = 1 and q/r ∉ Z.
///
/// The sum equals (1/a) Σ_k c(bk/a)·c(k/a + q/r), so writing q/r = q'/r' in
/// lowest terms it is the image of c(b, a; b/r', a/r') under ζ ↦ ζ^j for any
/// odd j ≡ q' (mod r') coprime to a. The result lies in Q(ζ_{lcm(4, 2r')}).
pub fn dieter_at_fraction<T: Scalar>(b: i64, a: i64, q: i64, r: i64) -> Result<Cyclotomic<T>> {
    if r <= 0 {
        return Err(Error::InvalidInput(format!("r must be positive, got {r}")));
    }
    if a.gcd(&r) != 1 {
        return Err(Error::NotCoprime(a, r));
    }
    if !(a > b && b > 0) || a.gcd(&b) != 1 {
        return Err(Error::ReciprocityHypothesisViolated(format!(
            "needs a > b > 0 coprime, got b={b}, a={a}"
        )));
    }
    let g = q.gcd(&r);
    let (q1, r1) = (q / g, r / g);
    if r1 == 1 {
        return Err(Error::InvalidInput(format!("q/r = {q}/{r} is an integer")));
    }
    let base = reciprocity::<T>(b, a, r1)?;
    let m = base.modulus() as i64;
    let j = (0..)
        .map(|t| q1.rem_euclid(r1) + t * r1)
        .find(|&j| j % 2 != 0 && j.gcd(&a) == 1 && j.gcd(&m) == 1)
        .expect("a suitable unit exists by the Chinese remainder theorem");
    base.galois(j % m)
}
