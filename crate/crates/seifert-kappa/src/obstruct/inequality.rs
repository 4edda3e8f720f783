//! The equivariant relative 10/8-type inequalities for fillings and
//! cobordisms.

use std::fmt;

use super::defect::sigma_vector;
use super::fixed_points::EquivariantManifoldData;
use crate::error::{Error, Result};
use crate::exact::Scalar;
use crate::kappa::PosetVector;
use crate::Rational;

/// Outcome of an obstruction check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    /// Some required inequality fails: no smooth extension exists.
    Excluded,
    /// All inequalities hold; nothing is ruled out.
    NotExcluded,
    /// The hypotheses of the inequalities are not met.
    HypothesesUnmet,
}

impl Verdict {
    /// The CLI spelling.
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Excluded => "excluded",
            Verdict::NotExcluded => "not-excluded",
            Verdict::HypothesesUnmet => "hypotheses-unmet",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// C for fillings: 0 if b = 0, 1 if b is odd, 2 if b ≥ 2 is even.
pub fn filling_constant(b2_plus_0: i64) -> i64 {
    if b2_plus_0 == 0 {
        0
    } else if b2_plus_0 % 2 == 1 {
        1
    } else {
        2
    }
}

/// C for cobordisms, depending on whether the incoming end is split:
/// not split gives −1 (b odd) or 0 (b even); split gives the filling value.
pub fn cobordism_constant(b2_plus_0: i64, incoming_split: bool) -> i64 {
    if incoming_split {
        filling_constant(b2_plus_0)
    } else if b2_plus_0 % 2 == 1 {
        -1
    } else {
        0
    }
}

fn check_parity(m: &EquivariantManifoldData) -> Result<()> {
    if let Some(k) = (1..m.b2_plus.len()).find(|&k| m.b2_plus[k] % 2 != 0) {
        return Err(Error::ParityHypothesisViolated(format!(
            "b2+(X,tau)_{k} = {} is odd",
            m.b2_plus[k]
        )));
    }
    Ok(())
}

fn check_pi(v: &PosetVector) -> Result<()> {
    if v.dim() != 2 {
        return Err(Error::InvalidInput(format!("projected kappa elements live in Q^2, got dimension {}", v.dim())));
    }
    Ok(())
}

/// The two filling inequalities at one element (κ₀, κ₁) of K^π.
#[derive(Clone, Debug, PartialEq)]
pub struct ElementCheck {
    /// The element (κ₀, κ₁).
    pub kappa: PosetVector,
    /// b₂⁺(X,τ)₀ + κ₀ ≥ −⅛𝔖₀ + C.
    pub first: bool,
    /// b₂⁺(X) − b₂⁺(X,τ)₀ + κ₁ ≥ −⅛σ + ⅛𝔖₀.
    pub second: bool,
}

/// The filling inequalities over all of K^π.
#[derive(Clone, Debug, PartialEq)]
pub struct FillingReport {
    /// The constant C.
    pub c: i64,
    /// 𝔖₀(X, τ).
    pub sigma0: Rational,
    /// One entry per element of K^π.
    pub checks: Vec<ElementCheck>,
    /// Excluded if any inequality fails.
    pub verdict: Verdict,
}

/// Evaluates both filling inequalities for every (κ₀, κ₁) ∈ K^π.
///
/// Requires b₂⁺(X, τ)_k even for k ≥ 1.
pub fn check_filling(m: &EquivariantManifoldData, kappa_pi: &[PosetVector]) -> Result<FillingReport> {
    check_parity(m)?;
    let s0 = sigma_vector(&m.fpd, m.sigma)?[0].clone();
    let eighth = Rational::from_frac(1, 8);
    let b0 = m.b2_plus[0];
    let c = filling_constant(b0);
    let rhs0 = -(s0.clone() * eighth.clone()) + Rational::from_int(c);
    let rhs1 = Rational::from_frac(-m.sigma, 8) + s0.clone() * eighth;
    let rest = Rational::from_int(m.b2_plus_total() - b0);
    let mut checks = Vec::with_capacity(kappa_pi.len());
    for k in kappa_pi {
        check_pi(k)?;
        let first = Rational::from_int(b0) + k.entries()[0].clone() >= rhs0;
        let second = rest.clone() + k.entries()[1].clone() >= rhs1;
        checks.push(ElementCheck { kappa: k.clone(), first, second });
    }
    let verdict =
        if checks.iter().all(|c| c.first && c.second) { Verdict::NotExcluded } else { Verdict::Excluded };
    Ok(FillingReport { c, sigma0: s0, checks, verdict })
}

/// [`check_filling`] collapsed to a verdict; a parity violation yields
/// [`Verdict::HypothesesUnmet`].
pub fn filling_verdict(m: &EquivariantManifoldData, kappa_pi: &[PosetVector]) -> Result<Verdict> {
    match check_filling(m, kappa_pi) {
        Ok(r) => Ok(r.verdict),
        Err(Error::ParityHypothesisViolated(_)) => Ok(Verdict::HypothesesUnmet),
        Err(e) => Err(e),
    }
}

/// Checks the cobordism inequalities for X from Y₀ to Y₁.
///
/// For every κ⁰ ∈ K^π(Y₀): both implications hold for every κ¹ ∈ K^π(Y₁),
/// and some κ¹ satisfies both inequalities. Needs a nonempty fixed set and
/// even b₂⁺(X, τ)_k for k ≥ 1.
pub fn check_cobordism(
    m: &EquivariantManifoldData,
    incoming: &[PosetVector],
    incoming_split: bool,
    outgoing: &[PosetVector],
) -> Result<Verdict> {
    if m.fpd.is_empty() {
        return Ok(Verdict::HypothesesUnmet);
    }
    if check_parity(m).is_err() {
        return Ok(Verdict::HypothesesUnmet);
    }
    for v in incoming.iter().chain(outgoing) {
        check_pi(v)?;
    }
    let s0 = sigma_vector(&m.fpd, m.sigma)?[0].clone();
    let eighth = Rational::from_frac(1, 8);
    let b0 = Rational::from_int(m.b2_plus[0]);
    let rest = Rational::from_int(m.b2_plus_total() - m.b2_plus[0]);
    let c = Rational::from_int(cobordism_constant(m.b2_plus[0], incoming_split));
    for k0 in incoming {
        let rhs_a = -(s0.clone() * eighth.clone()) + k0.entries()[0].clone() + c.clone();
        let rhs_b = Rational::from_frac(-m.sigma, 8) + s0.clone() * eighth.clone() + k0.entries()[1].clone();
        let mut witnessed = false;
        for k1 in outgoing {
            let a = b0.clone() + k1.entries()[0].clone();
            let b = rest.clone() + k1.entries()[1].clone();
            if (a <= rhs_a && b < rhs_b) || (b <= rhs_b && a < rhs_a) {
                return Ok(Verdict::Excluded);
            }
            witnessed |= a >= rhs_a && b >= rhs_b;
        }
        if !witnessed {
            return Ok(Verdict::Excluded);
        }
    }
    Ok(Verdict::NotExcluded)
}
