//! The vector 𝔖⃗(X, τ) of equivariant signature defects.

use num_traits::Zero;

use super::fixed_points::FixedPointData;
use crate::error::{Error, Result};
use crate::exact::{GroupRing, Scalar, TrigKind};
use crate::sums::{cosecant_sum, CosecantSumSpec, Method};
use crate::Rational;

fn sign(k: i64) -> i64 {
    if k.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// 𝔖_ℓ for ℓ = 0, …, p − 1:
///
/// 𝔖_ℓ = σ/p + (2/p) Σ_points Σ_k (−1)^{k(a+b+ℓ)} e^{−πikℓ/p} csc(kaπ/p) csc(kbπ/p)
///      + (2/p) Σ_surfaces Σ_k (−1)^{k(c+ℓ)} s e^{−πikℓ/p} csc(kcπ/p) cot(kcπ/p).
///
/// Each entry is evaluated in Q(ζ_{4p}) and must be rational; the entries
/// must sum to σ.
pub fn sigma_vector(d: &FixedPointData, sigma: i64) -> Result<Vec<Rational>> {
    let p = d.p();
    let m = TrigKind::Csc.natural_modulus(p);
    // T_k = Σ_points (−1)^{k(a+b)} csc csc + Σ_surfaces (−1)^{kc} s csc cot.
    let mut t = Vec::with_capacity((p - 1) as usize);
    for k in 1..p {
        let mut acc = GroupRing::zero(m);
        for &(a, b) in d.points() {
            let term = GroupRing::csc(m, k * a, p)?.mul(&GroupRing::csc(m, k * b, p)?)?;
            acc = acc.add(&term.scale(sign(k * (a + b)) as i128, 1)?)?;
        }
        for &(c, s) in d.surfaces() {
            let term = GroupRing::csc(m, k * c, p)?.mul(&GroupRing::cot(m, k * c, p)?)?;
            acc = acc.add(&term.scale((sign(k * c) * s) as i128, 1)?)?;
        }
        t.push(acc);
    }
    let mut out = Vec::with_capacity(p as usize);
    for l in 0..p {
        let mut acc = GroupRing::zero(m);
        for (idx, tk) in t.iter().enumerate() {
            let k = idx as i64 + 1;
            // (−1)^{kℓ} e^{−πikℓ/p} = ζ_{4p}^{2kℓ(p−1)}
            let rot = GroupRing::monomial(m, 2 * k * l * (p - 1), 1, 1);
            acc = acc.add(&rot.mul(tk)?)?;
        }
        let v = acc.scale(2, p as i128)?.to_cyclotomic::<Rational>()?.as_rational()?;
        out.push(Rational::from_frac(sigma, p) + v);
    }
    let total = out.iter().fold(Rational::zero(), |a, v| a + v);
    if total != Rational::from_int(sigma) {
        return Err(Error::InternalInvariant(format!("defect vector sums to {total}, not sigma = {sigma}")));
    }
    Ok(out)
}

/// 𝔖₀ = σ/p + Σ_points 2S(a, b, p; (−1)^{a+b}), through the cosecant-sum
/// reciprocity evaluator.
pub fn sigma0_via_cosecant(d: &FixedPointData, sigma: i64) -> Result<Rational> {
    if !d.is_pseudofree() {
        return Err(Error::SurfacesPresent);
    }
    let p = d.p();
    let mut acc = Rational::from_frac(sigma, p);
    for &(a, b) in d.points() {
        let spec = CosecantSumSpec::new(a, b, p, sign(a + b));
        let s: Rational = match cosecant_sum(&spec, Method::Reciprocity) {
            Err(Error::ParityObstruction { .. }) => cosecant_sum(&spec, Method::Brute)?,
            other => other?,
        };
        acc += s * Rational::from_int(2);
    }
    Ok(acc)
}
