//! Arithmetic constants attached to Σ(α₁, …, αₙ) and an order r.

use num_integer::Integer;

use super::data::SeifertData;
use crate::error::{Error, Result};
use crate::exact::{frac, Scalar};
use crate::Rational;

/// Constants β_i, γ_i, p_i, α'_i, A_i for a Seifert sphere and order r.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeifertConstants {
    /// The order r of the cyclic group.
    pub r: i64,
    /// (α/α_i)β_i ≡ −1 (mod α_i), 1 ≤ β_i < α_i.
    pub beta: Vec<i64>,
    /// (α/α_i)γ_i ≡ R (mod α_i), 0 ≤ γ_i < α_i.
    pub gamma: Vec<i64>,
    /// p_i β_i ≡ 1 (mod α_i), 0 ≤ p_i < α_i.
    pub p_small: Vec<i64>,
    /// α_i α'_i ≡ 1 (odd α_i) or 2 (even α_i) mod 2r, 0 ≤ α'_i < 2r.
    pub alpha_prime: Vec<i64>,
    /// A_i = 2α_i{(p_iγ_i + ρ)/α_i} − α_i.
    pub a: Vec<i64>,
    /// R = ρ + Σ α(α_j − 1)/(2α_j).
    pub big_r: i64,
}

impl SeifertConstants {
    /// A'_i(L) = ½ α'_i (A_i − 2L).
    pub fn a_prime(&self, i: usize, l: &Rational) -> Rational {
        Rational::from_frac(self.alpha_prime[i], 2) * (Rational::from_int(self.a[i]) - l * Rational::from_int(2))
    }

    /// The same constants with every α'_i replaced by the lift α'_i + 2r·shift.
    pub fn with_alpha_prime_lift(&self, shift: i64) -> Self {
        let mut c = self.clone();
        for v in &mut c.alpha_prime {
            *v += 2 * self.r * shift;
        }
        c
    }
}

/// Inverse of `x` modulo `m`, in [0, m).
pub(crate) fn mod_inverse(x: i64, m: i64) -> Option<i64> {
    let g = x.rem_euclid(m).extended_gcd(&m);
    (g.gcd == 1).then(|| g.x.rem_euclid(m))
}

/// Derives the constants for Y and the order r ≥ 2 with gcd(r, α_i) = 1.
pub fn derive_constants(y: &SeifertData, r: i64) -> Result<SeifertConstants> {
    if r < 2 {
        return Err(Error::InvalidInput(format!("order r must be >= 2, got {r}")));
    }
    y.check_coprime_order(r)?;
    let alpha = y.alpha();
    let rho = y.rho();
    let big_r_q = y
        .alphas()
        .iter()
        .fold(rho.clone(), |acc, &a| acc + Rational::from_frac(alpha / a * (a - 1), 2));
    let big_r = big_r_q
        .to_i64_exact()
        .ok_or_else(|| Error::InternalInvariant(format!("R = {big_r_q} is not an integer")))?;

    let mut c = SeifertConstants {
        r,
        beta: vec![],
        gamma: vec![],
        p_small: vec![],
        alpha_prime: vec![],
        a: vec![],
        big_r,
    };
    for &ai in y.alphas() {
        let co = (alpha / ai).rem_euclid(ai);
        let inv = mod_inverse(co, ai).ok_or(Error::NotCoprime(co, ai))?;
        let beta = (-inv).rem_euclid(ai);
        let gamma = (big_r.rem_euclid(ai) * inv).rem_euclid(ai);
        let p = mod_inverse(beta, ai).ok_or(Error::NotCoprime(beta, ai))?;
        if (p + alpha / ai).rem_euclid(ai) != 0 {
            return Err(Error::InternalInvariant(format!("p_i characterizations disagree at alpha_i={ai}")));
        }
        let a_val = Rational::from_int(2 * ai)
            * frac(&((Rational::from_int(p * gamma) + rho.clone()) / Rational::from_int(ai)))
            - Rational::from_int(ai);
        let a_int = a_val
            .to_i64_exact()
            .ok_or_else(|| Error::InternalInvariant(format!("A_i = {a_val} is not an integer")))?;
        let ap = if ai % 2 == 1 { mod_inverse(ai, 2 * r) } else { mod_inverse(ai / 2, r) }
            .ok_or(Error::NotCoprimeToFibers { r, alpha: ai })?;
        c.beta.push(beta);
        c.gamma.push(gamma);
        c.p_small.push(p);
        c.alpha_prime.push(ap);
        c.a.push(a_int);
    }
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_family_lists() {
        for p in [5, 7, 11, 13] {
            let y = SeifertData::brieskorn(2, 3, 12 * p - 1).unwrap();
            let c = derive_constants(&y, p).unwrap();
            assert_eq!(c.beta, vec![1, 2, 10 * p - 1]);
            assert_eq!(c.gamma, vec![1, 0, 7 * p - 1]);
            assert_eq!(c.p_small, vec![1, 2, 12 * p - 7]);
            assert_eq!(c.a, vec![1, -2, 6]);
        }
    }

    #[test]
    fn second_family_lists() {
        for p in [5, 7, 11, 13] {
            let y = SeifertData::brieskorn(2, 3, 6 * p + 1).unwrap();
            let c = derive_constants(&y, p).unwrap();
            assert_eq!(c.beta, vec![1, 1, p]);
            assert_eq!(c.gamma, vec![1, 2, (11 * p + 1) / 2]);
            assert_eq!(c.a, vec![1, 2, 6]);
        }
    }

    #[test]
    fn order_must_be_coprime() {
        let y = SeifertData::brieskorn(2, 3, 5).unwrap();
        assert_eq!(derive_constants(&y, 5), Err(Error::NotCoprimeToFibers { r: 5, alpha: 5 }));
    }

    #[test]
    fn small_beta() {
        let y = SeifertData::brieskorn(2, 3, 5).unwrap();
        assert_eq!(derive_constants(&y, 7).unwrap().beta[0], 1);
    }
}
