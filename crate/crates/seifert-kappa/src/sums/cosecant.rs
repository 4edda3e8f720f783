//! Dedekind cosecant sums
//! S(q, r, p; ε) = (1/p) Σ_{j=1}^{|p|-1} ε^j csc(jqπ/p) csc(jrπ/p), ε = ±1.

use num_integer::Integer;

use super::Method;
use crate::error::{Error, Result};
use crate::exact::{GroupRing, Scalar, TrigKind};

/// Parameters of S(q, r, p; ε).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CosecantSumSpec {
    /// First multiplier, coprime to p.
    pub q: i64,
    /// Second multiplier, coprime to p.
    pub r: i64,
    /// Nonzero modulus.
    pub p: i64,
    /// Sign character ε ∈ {+1, −1}.
    pub eps: i64,
}

impl CosecantSumSpec {
    /// Builds a spec.
    pub fn new(q: i64, r: i64, p: i64, eps: i64) -> Self {
        CosecantSumSpec { q, r, p, eps }
    }

    fn validate(&self) -> Result<()> {
        if self.p == 0 {
            return Err(Error::InvalidInput("S(q,r,p;eps) needs p != 0".into()));
        }
        if self.eps != 1 && self.eps != -1 {
            return Err(Error::InvalidInput(format!("eps must be +1 or -1, got {}", self.eps)));
        }
        for v in [self.q, self.r] {
            if v.gcd(&self.p) != 1 {
                return Err(Error::NotCoprime(v, self.p));
            }
        }
        Ok(())
    }
}

/// Evaluates S(q, r, p; ε).
///
/// `Brute` sums in Q(ζ_{lcm(4, 2|p|)}) and collapses the result with
/// `as_rational`. `Reciprocity` reduces to S(q', 1, p; −1) and evaluates that
/// through an even continued-fraction expansion of p/q'.
pub fn cosecant_sum<T: Scalar>(spec: &CosecantSumSpec, method: Method) -> Result<T> {
    spec.validate()?;
    match method {
        Method::Brute => brute(spec),
        Method::Reciprocity => reciprocity(spec),
    }
}

fn brute<T: Scalar>(s: &CosecantSumSpec) -> Result<T> {
    let p = s.p.abs();
    if p == 1 {
        return Ok(T::zero());
    }
    let m = TrigKind::Csc.natural_modulus(p);
    let mut acc = GroupRing::zero(m);
    for j in 1..p {
        let term = GroupRing::csc(m, j * s.q, s.p)?.mul(&GroupRing::csc(m, j * s.r, s.p)?)?;
        acc = if s.eps == -1 && j % 2 == 1 { acc.sub(&term)? } else { acc.add(&term)? };
    }
    acc.scale(1, s.p as i128)?.to_cyclotomic::<T>()?.as_rational()
}

fn reciprocity<T: Scalar>(s: &CosecantSumSpec) -> Result<T> {
    let CosecantSumSpec { mut q, r, p, mut eps } = *s;
    if p.abs() == 1 {
        return Ok(T::zero());
    }
    if p < 0 {
        return Ok(-reciprocity::<T>(&CosecantSumSpec { p: -p, ..*s })?);
    }
    // Pairing j with p − j multiplies each term by ε^p (−1)^{q+r}.
    let eps_p = if p % 2 == 0 { 1 } else { eps };
    if eps_p * if (q + r) % 2 == 0 { 1 } else { -1 } == -1 {
        return Ok(T::zero());
    }
    if r != 1 {
        let target = (1 + (r - 1) * p).rem_euclid(2 * p);
        let r_inv = (0..2 * p)
            .find(|&x| (x * r - target).rem_euclid(2 * p) == 0)
            .ok_or_else(|| Error::InternalInvariant(format!("no r' for r={r}, p={p}")))?;
        let sign = if ((q + r + p) * (r - 1)).rem_euclid(2) == 0 { 1 } else { -1 };
        let eps_pow = if (r + r_inv + 1).rem_euclid(2) == 0 { 1 } else { eps };
        q *= r_inv;
        eps = sign * eps_pow;
    }
    let q0 = q.rem_euclid(p);
    if ((q - q0) / p).rem_euclid(2) == 1 {
        eps = -eps;
    }
    let big_q = if eps == 1 { q0 - p } else { q0 };
    if (big_q - p).rem_euclid(2) == 0 {
        return Err(Error::ParityObstruction { q: big_q, p });
    }
    s_one(big_q, p)
}

/// Rounds q_{j-1}/(2q_j) to the nearest integer, ties away from zero.
fn round_half_away(num: i64, den: i64) -> i64 {
    let (n, d) = (num.abs() as i128, den.abs() as i128);
    let r = ((2 * n + d) / (2 * d)) as i64;
    if (num < 0) != (den < 0) {
        -r
    } else {
        r
    }
}

/// Even continued-fraction expansion: returns (q_0..q_n, α_1..α_{n-1}) with
/// q_0 = p, q_1 = q, q_{j+1} = α_j q_j − q_{j-1}, α_j even, |q_n| = 1.
pub fn even_expansion(q: i64, p: i64) -> Result<(Vec<i64>, Vec<i64>)> {
    let mut qs = vec![p, q];
    let mut al = Vec::new();
    while qs.last().unwrap().abs() != 1 {
        let n = qs.len();
        let (prev, cur) = (qs[n - 2], qs[n - 1]);
        let base = 2 * round_half_away(prev, 2 * cur);
        let choice = [base, base + 2, base - 2]
            .into_iter()
            .find(|&a| (a * cur - prev).abs() < cur.abs())
            .ok_or_else(|| Error::InternalInvariant(format!("even expansion stalls at ({prev}, {cur})")))?;
        al.push(choice);
        qs.push(choice * cur - prev);
    }
    Ok((qs, al))
}

/// S(q, 1, p; −1) for p ≥ 2, 0 < |q| < p and q ≢ p (mod 2).
fn s_one<T: Scalar>(q: i64, p: i64) -> Result<T> {
    if q.abs() == 1 {
        let v = T::from_frac(-p * p - 2, 6 * p);
        return Ok(if q == 1 { v } else { -v });
    }
    let (qs, al) = even_expansion(q, p)?;
    let n = qs.len() - 1;
    let mut s = vec![0i64, 1];
    for j in 2..=n {
        s.push(al[j - 2] * s[j - 1] - s[j - 2]);
    }
    let f = |a: i64, b: i64| T::from_frac(a, b);
    let big = |x: i64| T::from_int(x);
    let head = (big(qs[n]) * (big(qs[n - 1]) * big(qs[n - 1]) + big(2)) + big(qs[n - 2])) / big(6 * qs[n - 1]);
    let mut tot = -head - f(qs[1], 6 * qs[0]) - big(s[n - 1]) / (big(6 * qs[0]) * big(qs[n - 1]));
    for a in al.iter().take(n.saturating_sub(2)) {
        tot -= f(*a, 6);
    }
    Ok(tot)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use crate::Rational;

    #[test]
    fn one_one_two() {
        let s = CosecantSumSpec::new(1, 1, 2, -1);
        assert_eq!(cosecant_sum::<Rational>(&s, Method::Brute).unwrap(), rat(-1, 2));
        assert_eq!(cosecant_sum::<Rational>(&s, Method::Reciprocity).unwrap(), rat(-1, 2));
    }

    #[test]
    fn vanishing_case() {
        let s = CosecantSumSpec::new(1, 2, 5, 1);
        assert_eq!(cosecant_sum::<Rational>(&s, Method::Brute).unwrap(), rat(0, 1));
        assert_eq!(cosecant_sum::<Rational>(&s, Method::Reciprocity).unwrap(), rat(0, 1));
    }

    #[test]
    fn not_coprime() {
        let s = CosecantSumSpec::new(3, 1, 6, -1);
        assert_eq!(cosecant_sum::<Rational>(&s, Method::Brute), Err(Error::NotCoprime(3, 6)));
    }

    #[test]
    fn expansion_terminates() {
        let (qs, al) = even_expansion(8, 13).unwrap();
        assert_eq!(qs.last().unwrap().abs(), 1);
        assert!(al.iter().all(|a| a % 2 == 0));
    }

    #[test]
    fn exhaustive_small_agreement() {
        for p in 2..14 {
            for q in -p..=p {
                for r in 1..p {
                    for eps in [1, -1] {
                        let s = CosecantSumSpec::new(q, r, p, eps);
                        if s.validate().is_err() {
                            continue;
                        }
                        let a: Rational = cosecant_sum(&s, Method::Brute).unwrap();
                        let b: Rational = cosecant_sum(&s, Method::Reciprocity).unwrap();
                        assert_eq!(a, b, "{s:?}");
                    }
                }
            }
        }
    }
}
