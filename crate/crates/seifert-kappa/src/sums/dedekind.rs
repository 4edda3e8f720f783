//! The Dedekind sum s(b, a) = Σ_{k mod a} ((bk/a))((k/a)).

use num_integer::Integer;

use super::{euclid_chain, Method};
use crate::error::{Error, Result};
use crate::exact::Scalar;

fn check(b: i64, a: i64) -> Result<()> {
    if a <= 0 {
        return Err(Error::InvalidInput(format!("dedekind_sum needs a > 0, got {a}")));
    }
    if b.gcd(&a) != 1 {
        return Err(Error::NotCoprime(b, a));
    }
    Ok(())
}

/// s(b, a) by the Euclidean recursion. Requires a > 0 and gcd(b, a) = 1.
pub fn dedekind_sum<T: Scalar>(b: i64, a: i64) -> Result<T> {
    dedekind_sum_with(b, a, Method::Reciprocity)
}

/// s(b, a) with an explicit evaluation method.
pub fn dedekind_sum_with<T: Scalar>(b: i64, a: i64, method: Method) -> Result<T> {
    check(b, a)?;
    Ok(match method {
        Method::Brute => brute(b, a),
        Method::Reciprocity => reciprocity(b, a),
    })
}

/// Definitional sum with an exact integer accumulator over the common
/// denominator 4a².
fn brute<T: Scalar>(b: i64, a: i64) -> T {
    let (a128, b128) = (a as i128, b as i128);
    let mut acc: i128 = 0;
    for k in 1..a128 {
        let r = (b128 * k).rem_euclid(a128);
        if r != 0 {
            acc += (2 * r - a128) * (2 * k - a128);
        }
    }
    crate::exact::scalar::from_i128_frac(acc, 4 * a128 * a128)
}

fn reciprocity<T: Scalar>(b: i64, a: i64) -> T {
    let b = b.rem_euclid(a);
    if a <= 2 {
        return T::zero();
    }
    if b == 1 {
        return T::from_frac((a - 1) * (a - 2), 12 * a);
    }
    let (aa, q) = euclid_chain(a, b);
    let n = aa.len() - 1;
    let sgn = |k: usize| if k % 2 == 0 { 1 } else { -1 };
    let f = |num: i64, den: i64| T::from_frac(num, den);
    let mut s = vec![0i64, 1];
    for j in 2..=n {
        s.push(q[j - 2] * s[j - 1] + s[j - 2]);
    }
    let last = aa[n - 1];
    let mut t = f(sgn(n - 1) * (last * last + 2), 12 * last)
        + f(aa[1], 12 * aa[0])
        + f(sgn(n) * aa[n - 2], 12 * last)
        + T::from_int(sgn(n) * s[n - 1]) / (T::from_int(12 * aa[0]) * T::from_int(last));
    for j in 1..n.saturating_sub(1) {
        t += f(sgn(j - 1) * q[j - 1], 12);
    }
    if n % 2 == 1 {
        t -= f(1, 4);
    }
    t
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use crate::Rational;

    #[test]
    fn small_values() {
        assert_eq!(dedekind_sum::<Rational>(1, 2).unwrap(), rat(0, 1));
        assert_eq!(dedekind_sum::<Rational>(2, 3).unwrap(), rat(-1, 18));
        assert_eq!(dedekind_sum::<Rational>(5, 1).unwrap(), rat(0, 1));
    }

    #[test]
    fn not_coprime() {
        assert_eq!(dedekind_sum::<Rational>(2, 4), Err(Error::NotCoprime(2, 4)));
    }

    #[test]
    fn methods_agree_exhaustively_for_small_a() {
        for a in 1..80 {
            for b in -a..2 * a {
                if b.gcd(&a) == 1 {
                    let x: Rational = dedekind_sum_with(b, a, Method::Brute).unwrap();
                    let y: Rational = dedekind_sum_with(b, a, Method::Reciprocity).unwrap();
                    assert_eq!(x, y, "s({b},{a})");
                }
            }
        }
    }
}
