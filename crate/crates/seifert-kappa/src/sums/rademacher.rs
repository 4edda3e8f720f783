//! Dedekind-Rademacher sums
//! s(b, a; x, y) = Σ_{k=0}^{|a|-1} ((x + b(k+y)/a))·(((k+y)/a)).

use num_integer::Integer;

use super::{dedekind_sum, euclid_chain, Method};
use crate::error::{Error, Result};
use crate::exact::{bernoulli2, sawtooth, Scalar};
use crate::Rational;

/// Parameters of s(b, a; x, y).
#[derive(Clone, Debug, PartialEq)]
pub struct DedekindRademacherSpec<T = Rational> {
    /// Multiplier b.
    pub b: i64,
    /// Modulus a, nonzero.
    pub a: i64,
    /// Shift x.
    pub x: T,
    /// Shift y.
    pub y: T,
}

impl<T: Scalar> DedekindRademacherSpec<T> {
    /// Builds a spec.
    pub fn new(b: i64, a: i64, x: T, y: T) -> Self {
        DedekindRademacherSpec { b, a, x, y }
    }
}

/// Evaluates s(b, a; x, y).
///
/// `Brute` needs only a ≠ 0. `Reciprocity` enforces the hypotheses of the
/// reciprocity recursion: b > a > 0 coprime, x and y not both integers and
/// ax + by an integer. It never falls back to the brute sum.
pub fn dedekind_rademacher<T: Scalar>(spec: &DedekindRademacherSpec<T>, method: Method) -> Result<T> {
    match method {
        Method::Brute => brute(spec),
        Method::Reciprocity => {
            check_reciprocity(spec)?;
            Ok(reciprocity(spec.b, spec.a, &spec.x, &spec.y))
        }
    }
}

fn brute<T: Scalar>(s: &DedekindRademacherSpec<T>) -> Result<T> {
    if s.a == 0 {
        return Err(Error::InvalidInput("s(b,a;x,y) needs a != 0".into()));
    }
    let a = T::from_int(s.a);
    let b = T::from_int(s.b);
    let mut acc = T::zero();
    for k in 0..s.a.abs() {
        let ky = T::from_int(k) + s.y.clone();
        let right = sawtooth(&(ky.clone() / a.clone()));
        if right.is_zero() {
            continue;
        }
        let left = sawtooth(&(s.x.clone() + b.clone() * ky / a.clone()));
        acc += left * right;
    }
    Ok(acc)
}

fn check_reciprocity<T: Scalar>(s: &DedekindRademacherSpec<T>) -> Result<()> {
    let fail = |why: String| Err(Error::ReciprocityHypothesisViolated(why));
    if !(s.b > s.a && s.a > 0) {
        return fail(format!("needs b > a > 0, got b={}, a={}", s.b, s.a));
    }
    if s.b.gcd(&s.a) != 1 {
        return fail(format!("needs gcd(b, a) = 1, got b={}, a={}", s.b, s.a));
    }
    if s.x.is_int() && s.y.is_int() {
        return fail("x and y are both integers".into());
    }
    let lin = T::from_int(s.a) * s.x.clone() + T::from_int(s.b) * s.y.clone();
    if !lin.is_int() {
        return fail(format!("a*x + b*y = {lin} is not an integer"));
    }
    Ok(())
}

/// The reciprocity recursion along the floor-quotient chain of (b, a).
fn reciprocity<T: Scalar>(b: i64, a: i64, x: &T, y: &T) -> T {
    let (aa, q) = euclid_chain(b, a);
    let n = aa.len() - 1;
    let mut xs = vec![x.clone(), y.clone()];
    let mut s = vec![0i64, 1];
    for j in 2..=n {
        let next = T::from_int(q[j - 2]) * xs[j - 1].clone() + xs[j - 2].clone();
        xs.push(next);
        s.push(q[j - 2] * s[j - 1] + s[j - 2]);
    }
    let sgn = |k: usize| if k % 2 == 0 { 1i64 } else { -1 };
    let mut tot = T::zero();
    for j in 1..n {
        let t = sawtooth(&xs[j]) * sawtooth(&xs[j + 1]);
        tot += if sgn(j + 1) > 0 { t } else { -t };
    }
    tot += T::from_frac(aa[0], 2 * aa[1]) * bernoulli2(&xs[1]);
    tot += T::from_frac(sgn(n) * aa[n - 1], 2) * bernoulli2(&xs[n]);
    tot += T::from_int(sgn(n) * aa[1] * s[n] + 1) / (T::from_int(12 * aa[0]) * T::from_int(aa[1]));
    for j in 1..n {
        tot += T::from_frac(sgn(j) * q[j - 1], 2) * bernoulli2(&xs[j]);
    }
    tot
}

/// s(b, a; x, y) for any a ≠ 0 and gcd(b, a) = 1 with ax + by ∈ Z, reduced
/// to the reciprocity domain by the symmetries
/// s(b, -a; x, y) = -s(-b, a; x, y), s(b, a; x, y) = s(b - ta, a; x + ty, y)
/// and s(b, a; x, y) = s(b, a) for integer x, y.
pub fn rademacher_normalized<T: Scalar>(b: i64, a: i64, x: &T, y: &T) -> Result<T> {
    if a == 0 {
        return Err(Error::InvalidInput("s(b,a;x,y) needs a != 0".into()));
    }
    if b.gcd(&a) != 1 {
        return Err(Error::NotCoprime(b, a));
    }
    let lin = T::from_int(a) * x.clone() + T::from_int(b) * y.clone();
    if !lin.is_int() {
        return Err(Error::ReciprocityHypothesisViolated(format!("a*x + b*y = {lin} is not an integer")));
    }
    if a < 0 {
        return Ok(-rademacher_normalized(-b, -a, x, y)?);
    }
    if x.is_int() && y.is_int() {
        return dedekind_sum(b, a);
    }
    if a == 1 {
        return brute(&DedekindRademacherSpec::new(b, a, x.clone(), y.clone()));
    }
    let b2 = (b - a - 1).rem_euclid(a) + a + 1;
    let t = (b - b2) / a;
    let x2 = x.clone() + T::from_int(t) * y.clone();
    Ok(reciprocity(b2, a, &x2, y))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn spec(b: i64, a: i64, x: Rational, y: Rational) -> DedekindRademacherSpec {
        DedekindRademacherSpec::new(b, a, x, y)
    }

    #[test]
    fn hypotheses_are_enforced() {
        let bad = [
            spec(3, 5, rat(1, 5), rat(0, 1)),
            spec(6, 4, rat(1, 2), rat(0, 1)),
            spec(5, 2, rat(1, 1), rat(0, 1)),
            spec(5, 2, rat(1, 3), rat(0, 1)),
        ];
        for s in &bad {
            assert!(matches!(
                dedekind_rademacher(s, Method::Reciprocity),
                Err(Error::ReciprocityHypothesisViolated(_))
            ));
        }
    }

    #[test]
    fn zero_modulus_rejected() {
        assert!(dedekind_rademacher(&spec(1, 0, rat(0, 1), rat(0, 1)), Method::Brute).is_err());
    }

    #[test]
    fn negative_modulus_symmetry() {
        let (x, y) = (rat(1, 2), rat(-1, 2));
        let lhs = dedekind_rademacher(&spec(7, -3, x.clone(), y.clone()), Method::Brute).unwrap();
        let rhs = dedekind_rademacher(&spec(-7, 3, x.clone(), y.clone()), Method::Brute).unwrap();
        assert_eq!(lhs, -rhs);
        assert_eq!(rademacher_normalized(7, -3, &x, &y).unwrap(), lhs);
    }

    #[test]
    fn integer_shifts_reduce_to_dedekind() {
        let v = dedekind_rademacher(&spec(5, 7, rat(3, 1), rat(-2, 1)), Method::Brute).unwrap();
        assert_eq!(v, dedekind_sum::<Rational>(5, 7).unwrap());
    }
}
