//! Equivariant Dirac correction terms n_L(Y, ρ̂_r) of a Seifert sphere and
//! the finite character transform relating them to equivariant Dirac eta
//! invariants.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::poly::is_prime;
use crate::exact::{delta, frac, sawtooth, Cyclotomic, Scalar, TrigKind};
use crate::seifert::{derive_constants, SeifertConstants, SeifertData};
use crate::sums::{dedekind_sum, rademacher_normalized};
use crate::{CyclotomicValue, Rational};

/// The r correction terms n_L(Y, ρ̂_r) over the admissible L, sorted by L.
#[derive(Clone, Debug, PartialEq)]
pub struct CorrectionVector {
    y: SeifertData,
    r: i64,
    entries: Vec<(Rational, Rational)>,
}

impl CorrectionVector {
    /// Wraps (L, n_L) pairs. Every L must be admissible for (Y, r); the
    /// vector may be partial.
    pub fn from_entries(y: SeifertData, r: i64, mut entries: Vec<(Rational, Rational)>) -> Result<Self> {
        for (l, _) in &entries {
            check_l(&y, r, l)?;
        }
        entries.sort_by(|a, b| a.0.cmp(&b.0));
        entries.dedup_by(|a, b| a.0 == b.0);
        Ok(CorrectionVector { y, r, entries })
    }

    /// The Seifert sphere.
    pub fn seifert(&self) -> &SeifertData {
        &self.y
    }

    /// The order r.
    pub fn r(&self) -> i64 {
        self.r
    }

    /// The (L, n_L) pairs in increasing L.
    pub fn entries(&self) -> &[(Rational, Rational)] {
        &self.entries
    }

    /// n_L for a given L, if present.
    pub fn get(&self, l: &Rational) -> Option<&Rational> {
        self.entries.iter().find(|(k, _)| k == l).map(|(_, v)| v)
    }

    /// Σ_L n_L.
    pub fn total(&self) -> Rational {
        self.entries.iter().fold(Rational::zero(), |acc, (_, v)| acc + v)
    }

    /// Whether all r admissible L are present.
    pub fn is_complete(&self) -> bool {
        self.entries.len() as i64 == self.r
    }
}

/// The admissible L for (Y, r): L ≡ ρ(Y) (mod Z), 0 ≤ L ≤ r − ½.
pub fn admissible_l(y: &SeifertData, r: i64) -> Vec<Rational> {
    (0..r).map(|k| y.rho() + Rational::from_int(k)).collect()
}

fn check_l(y: &SeifertData, r: i64, l: &Rational) -> Result<()> {
    let shifted = l - y.rho();
    if !shifted.is_int() {
        return Err(Error::InadmissibleL(format!("L = {l} is not congruent to rho(Y) = {} mod 1", y.rho())));
    }
    if l < &Rational::zero() || l > &(Rational::from_int(r) - Rational::from_frac(1, 2)) {
        return Err(Error::InadmissibleL(format!("L = {l} outside [0, {r} - 1/2]")));
    }
    Ok(())
}

/// n_L(Y, ρ̂_r, g, ∇^∞), evaluated term by term.
///
/// The Dedekind-Rademacher sums s(rβ_i, α_i; ·, −L/r) go through the
/// reciprocity evaluator. Debug builds recompute with a second lift of every
/// α'_i and require the same value.
pub fn correction_term(y: &SeifertData, r: i64, l: &Rational) -> Result<Rational> {
    let c = derive_constants(y, r)?;
    check_l(y, r, l)?;
    let v = correction_with(y, &c, l)?;
    if cfg!(debug_assertions) {
        let w = correction_with(y, &c.with_alpha_prime_lift(1), l)?;
        if v != w {
            return Err(Error::InternalInvariant(format!("n_L depends on the alpha' lift: {v} vs {w}")));
        }
    }
    Ok(v)
}

fn correction_with(y: &SeifertData, c: &SeifertConstants, l: &Rational) -> Result<Rational> {
    let q = |n: i64, d: i64| Rational::from_frac(n, d);
    let z = |n: i64| Rational::from_int(n);
    let r = c.r;
    let rho_half = y.has_even_fiber();
    let alpha = y.alpha();
    let two_r = z(2 * r);
    let y_arg = -l / z(r);
    let mut tot = Rational::zero();
    for (i, &ai) in y.alphas().iter().enumerate() {
        let (beta, gamma, p) = (c.beta[i], c.gamma[i], c.p_small[i]);
        let ap = c.a_prime(i, l);
        let ap_r = frac(&(ap.clone() / z(r)));
        let x_arg = if rho_half { (z(gamma) + q(beta, 2)) / z(ai) } else { q(gamma, ai) };
        tot += rademacher_normalized(r * beta, ai, &x_arg, &y_arg)?;
        tot += dedekind_sum::<Rational>(beta, ai)? / two_r.clone();
        let saw_arg = if rho_half { (z(p * gamma) + q(1, 2)) / z(ai) } else { q(p * gamma, ai) };
        tot += sawtooth(&saw_arg) / two_r.clone();
        if !rho_half {
            tot += q(1, 4) * (Rational::one() - z(2) * ap_r);
        } else if ai % 2 == 0 {
            let d = delta(&(z(c.a[i]) - z(2) * l), 2);
            if d != 0 {
                let half_r = q(r, 2);
                let inner = frac(&(half_r.clone() * ap_r.clone()));
                let bracket = inner.clone()
                    - frac(&half_r) * ap_r.clone()
                    - z(4) * frac(&q(r - 1, 2)) * inner * ap_r.clone();
                tot += q(d, 2) * frac(&(ap.clone() - q(1, 2))) * bracket;
            }
        } else {
            tot += q(1, 2) * frac(&ap) * (Rational::one() - z(2) * ap_r);
        }
    }
    let inv_sum = y.alphas().iter().fold(Rational::zero(), |acc, &a| acc + q(1, 2 * a));
    tot -= inv_sum * sawtooth(&(l / z(r)));
    tot += q(r, 12 * alpha);
    tot += l * (l - z(r)) / (z(2 * r) * z(alpha));
    tot += Rational::one() / (z(24 * r) * z(alpha));
    tot -= q(1, 8 * r);
    Ok(tot)
}

/// All r correction terms of (Y, r).
pub fn correction_vector(y: &SeifertData, r: i64) -> Result<CorrectionVector> {
    derive_constants(y, r)?;
    let entries = admissible_l(y, r)
        .into_iter()
        .map(|l| correction_term(y, r, &l).map(|v| (l, v)))
        .collect::<Result<Vec<_>>>()?;
    Ok(CorrectionVector { y: y.clone(), r, entries })
}

/// n(Y, g, ∇^∞) = Σ_L n_L(Y, ρ̂_r), evaluated at the smallest odd prime r
/// coprime to every fiber. The sum does not depend on r.
pub fn plain_correction_term(y: &SeifertData) -> Result<Rational> {
    let r = (3..)
        .step_by(2)
        .find(|&r| is_prime(r as u64) && y.check_coprime_order(r).is_ok())
        .ok_or_else(|| Error::InternalInvariant("no admissible order".into()))?;
    Ok(correction_vector(y, r)?.total())
}

/// The non-equivariant correction term and the equivariant Dirac eta
/// invariants η^{(q,r)}, q = 1, …, r − 1, recovered from a correction vector.
#[derive(Clone, Debug, PartialEq)]
pub struct DiracEta {
    /// The order r.
    pub r: i64,
    /// n(Y, g, ∇^∞), the trivial-character mode.
    pub n_plain: Rational,
    /// η^{(q,r)} for q = 1, …, r − 1, in Q(ζ_{2r}).
    pub etas: BTreeMap<i64, CyclotomicValue>,
}

/// ω_r^{k·L} as a power of ζ_{2r}, for L ∈ ½Z.
fn omega_pow(r: i64, k: i64, l: &Rational) -> Result<CyclotomicValue> {
    let e = Rational::from_int(2 * k) * l;
    let e = e
        .to_i64_exact()
        .ok_or_else(|| Error::InvalidInput(format!("character exponent {e} is not integral")))?;
    Ok(Cyclotomic::zeta_pow(TrigKind::ExpIPi.natural_modulus(r), e))
}

/// Inverts n_L = n/r + (1/(2r)) Σ_{q=1}^{r−1} ω_r^{−qL} η^{(q,r)}:
/// n = Σ_L n_L and η^{(q,r)} = 2 Σ_L ω_r^{qL} n_L.
pub fn dirac_eta_from_corrections(v: &CorrectionVector) -> Result<DiracEta> {
    if !v.is_complete() {
        return Err(Error::IncompleteVector { expected: v.r as usize, found: v.entries.len() });
    }
    let m = TrigKind::ExpIPi.natural_modulus(v.r);
    let mut etas = BTreeMap::new();
    for q in 1..v.r {
        let mut acc = Cyclotomic::zero(m);
        for (l, n) in &v.entries {
            acc = acc + omega_pow(v.r, q, l)?.scale(n);
        }
        etas.insert(q, acc.mul_int(2));
    }
    Ok(DiracEta { r: v.r, n_plain: v.total(), etas })
}

/// The forward transform: rebuilds n_L for every admissible L of (Y, r).
pub fn correction_from_dirac_eta(y: &SeifertData, d: &DiracEta) -> Result<CorrectionVector> {
    let r = d.r;
    if d.etas.len() as i64 != r - 1 || (1..r).any(|q| !d.etas.contains_key(&q)) {
        return Err(Error::IncompleteVector { expected: (r - 1) as usize, found: d.etas.len() });
    }
    let m = TrigKind::ExpIPi.natural_modulus(r);
    let entries = admissible_l(y, r)
        .into_iter()
        .map(|l| {
            let mut acc = Cyclotomic::constant(m, d.n_plain.clone() / Rational::from_int(r));
            for (&q, eta) in &d.etas {
                let term = omega_pow(r, -q, &l)? * eta.clone();
                acc = acc + term.scale(&Rational::from_frac(1, 2 * r));
            }
            Ok((l, acc.as_rational()?))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CorrectionVector { y: y.clone(), r, entries })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn y(a: i64, b: i64, c: i64) -> SeifertData {
        SeifertData::brieskorn(a, b, c).unwrap()
    }

    #[test]
    fn closed_form_fixtures() {
        assert_eq!(correction_term(&y(2, 3, 59), 5, &rat(5, 2)).unwrap(), rat(2, 5));
        assert_eq!(correction_term(&y(2, 3, 43), 7, &rat(7, 2)).unwrap(), rat(-5, 7));
        assert_eq!(correction_term(&y(2, 3, 131), 11, &rat(11, 2)).unwrap(), rat(2, 11));
    }

    #[test]
    fn inadmissible_l() {
        let s = y(2, 3, 11);
        assert!(matches!(correction_term(&s, 5, &rat(1, 1)), Err(Error::InadmissibleL(_))));
        assert!(matches!(correction_term(&s, 5, &rat(11, 2)), Err(Error::InadmissibleL(_))));
        assert!(matches!(correction_term(&s, 5, &rat(-1, 2)), Err(Error::InadmissibleL(_))));
        assert!(correction_term(&s, 5, &rat(9, 2)).is_ok());
    }

    #[test]
    fn odd_fibers_use_integer_l() {
        let v = correction_vector(&y(3, 5, 7), 4).unwrap();
        assert_eq!(v.entries().len(), 4);
        assert_eq!(v.entries()[0].0, rat(0, 1));
    }

    #[test]
    fn constant_vector_has_no_modes() {
        let s = y(2, 3, 7);
        let entries = admissible_l(&s, 5).into_iter().map(|l| (l, rat(3, 4))).collect();
        let v = CorrectionVector::from_entries(s.clone(), 5, entries).unwrap();
        let d = dirac_eta_from_corrections(&v).unwrap();
        assert_eq!(d.n_plain, rat(15, 4));
        assert!(d.etas.values().all(|e| e.is_zero()));
        assert_eq!(correction_from_dirac_eta(&s, &d).unwrap(), v);
    }

    #[test]
    fn incomplete_vector() {
        let s = y(2, 3, 7);
        let v = CorrectionVector::from_entries(s, 5, vec![(rat(1, 2), rat(0, 1))]).unwrap();
        assert_eq!(
            dirac_eta_from_corrections(&v),
            Err(Error::IncompleteVector { expected: 5, found: 1 })
        );
    }
}
