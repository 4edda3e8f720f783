//! Integer cyclotomic polynomials and reduction modulo them.

use std::ops::{Mul, SubAssign};

use num_traits::Zero;

/// Distinct prime factors of `n`, ascending.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Whether `n` is prime.
pub fn is_prime(n: u64) -> bool {
    n >= 2 && prime_factors(n) == [n]
}

/// Euler's totient.
pub fn euler_phi(n: u64) -> u64 {
    prime_factors(n).iter().fold(n, |acc, p| acc / p * (p - 1))
}

/// Coefficients of Φ_m in ascending degree. Φ_m is monic of degree φ(m).
///
/// Built from Φ_{np}(x) = Φ_n(x^p)/Φ_n(x) over the radical, then
/// Φ_m(x) = Φ_rad(x^{m/rad}).
pub fn cyclotomic_poly(m: u64) -> Vec<i64> {
    assert!(m >= 1, "cyclotomic_poly: modulus must be positive");
    let primes = prime_factors(m);
    let mut poly: Vec<i64> = vec![-1, 1];
    let mut n = 1u64;
    for &p in &primes {
        let stretched = stretch(&poly, p as usize);
        poly = exact_div(&stretched, &poly);
        n *= p;
    }
    stretch(&poly, (m / n) as usize)
}

fn stretch(poly: &[i64], k: usize) -> Vec<i64> {
    let mut out = vec![0; (poly.len() - 1) * k + 1];
    for (i, &c) in poly.iter().enumerate() {
        out[i * k] = c;
    }
    out
}

fn exact_div(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dn = den.len() - 1;
    let lead = den[dn];
    let mut quot = vec![0; num.len() - dn];
    for i in (0..quot.len()).rev() {
        let c = rem[i + dn] / lead;
        quot[i] = c;
        if c != 0 {
            for (j, &d) in den.iter().enumerate() {
                rem[i + j] -= c * d;
            }
        }
    }
    debug_assert!(rem.iter().all(|&c| c == 0), "inexact cyclotomic division");
    quot
}

/// Reduces `v` (ascending coefficients) modulo the monic polynomial `phi`,
/// truncating it to `deg(phi)` entries. `lift` maps integers into `C`.
pub fn reduce_mod<C, F>(v: &mut Vec<C>, phi: &[i64], lift: F)
where
    C: Clone + Zero + SubAssign + Mul<Output = C>,
    F: Fn(i64) -> C,
{
    let deg = phi.len() - 1;
    let terms: Vec<(usize, C)> = phi[..deg]
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(e, &c)| (e, lift(c)))
        .collect();
    for d in (deg..v.len()).rev() {
        if v[d].is_zero() {
            continue;
        }
        let c = std::mem::replace(&mut v[d], C::zero());
        let base = d - deg;
        for (e, t) in &terms {
            v[base + e] -= c.clone() * t.clone();
        }
    }
    v.truncate(deg);
    v.resize(deg, C::zero());
}

/// Like [`reduce_mod`] for `i128` data, failing on overflow.
pub fn reduce_mod_i128(v: &mut Vec<i128>, phi: &[i64]) -> Option<()> {
    let deg = phi.len() - 1;
    let terms: Vec<(usize, i128)> = phi[..deg]
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(e, &c)| (e, c as i128))
        .collect();
    for d in (deg..v.len()).rev() {
        let c = v[d];
        if c == 0 {
            continue;
        }
        v[d] = 0;
        let base = d - deg;
        for &(e, t) in &terms {
            v[base + e] = v[base + e].checked_sub(c.checked_mul(t)?)?;
        }
    }
    v.truncate(deg);
    v.resize(deg, 0);
    Some(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomics() {
        assert_eq!(cyclotomic_poly(1), vec![-1, 1]);
        assert_eq!(cyclotomic_poly(2), vec![1, 1]);
        assert_eq!(cyclotomic_poly(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_poly(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_poly(12), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn phi_105_has_a_minus_two() {
        let p = cyclotomic_poly(105);
        assert_eq!(p.len() as u64 - 1, euler_phi(105));
        assert!(p.contains(&-2));
    }

    #[test]
    fn degrees_match_totient() {
        for m in 1..200 {
            assert_eq!(cyclotomic_poly(m).len() as u64 - 1, euler_phi(m), "m={m}");
        }
    }
}
