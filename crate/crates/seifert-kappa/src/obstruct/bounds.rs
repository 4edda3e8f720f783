//! The comparing identity between 𝔖₀ and n_{p/2}, the bound on free
//! stabilizations, and the h-cobordism test between Seifert quotients and
//! lens spaces.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;

use super::defect::sigma_vector;
use super::fixed_points::{nucleus_fixed_point_data, p_family_fixed_point_data, EquivariantManifoldData};
use super::inequality::{check_filling, Verdict};
use crate::error::{Error, Result};
use crate::eta::{alpha_invariant_lens, alpha_invariant_seifert, correction_term, LensSpaceData};
use crate::exact::poly::is_prime;
use crate::exact::Scalar;
use crate::kappa::{kappa_set, Orientation};
use crate::seifert::{BrieskornFamily, SeifertData};
use crate::Rational;

/// The two families of pseudofree actions: ρ_p on N(2pn) and on P(2pn − p + 1).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ActionFamily {
    /// The nucleus N(2pn), boundary −Σ(2, 3, 12pn − 1).
    N,
    /// P(2pn − p + 1), boundary −Σ(2, 3, 12pn − 6p + 1).
    P,
}

impl fmt::Display for ActionFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ActionFamily::N => "N",
            ActionFamily::P => "P",
        })
    }
}

impl FromStr for ActionFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "N" | "n" => Ok(ActionFamily::N),
            "P" | "p" => Ok(ActionFamily::P),
            other => Err(Error::InvalidInput(format!("unknown action family {other:?}, expected N or P"))),
        }
    }
}

fn check_prime_at_least_5(p: i64) -> Result<()> {
    if p < 5 || !is_prime(p as u64) {
        return Err(Error::InvalidInput(format!("p must be a prime >= 5, got {p}")));
    }
    Ok(())
}

/// The boundary family and parameter n' of the action manifold.
fn boundary_of(family: ActionFamily, n: i64, p: i64) -> (BrieskornFamily, i64) {
    match family {
        ActionFamily::N => (BrieskornFamily::Minus1, p * n),
        ActionFamily::P => (BrieskornFamily::Minus5, p * n - (p - 1) / 2),
    }
}

/// The homologically trivial action on N(2pn) or P(2pn − p + 1) and the
/// Brieskorn sphere Y with boundary −Y.
pub fn action_manifold(family: ActionFamily, n: i64, p: i64) -> Result<(EquivariantManifoldData, SeifertData)> {
    check_prime_at_least_5(p)?;
    if n < 1 {
        return Err(Error::InvalidInput(format!("n must be >= 1, got {n}")));
    }
    let (bf, np) = boundary_of(family, n, p);
    let (name, sigma, fpd) = match family {
        ActionFamily::N => (format!("N({})", 2 * np), 0, nucleus_fixed_point_data(p)?),
        ActionFamily::P => (format!("P({})", 2 * np), -8, p_family_fixed_point_data(p)?),
    };
    let m = EquivariantManifoldData::homologically_trivial(Some(name), sigma, 1, fpd)?;
    Ok((m, bf.seifert(np)?))
}

/// The expected value of ⅛𝔖₀ + n_{p/2}(Y, ρ̂_p).
pub fn expected_comparing_offset(family: ActionFamily, p: i64) -> Result<Rational> {
    check_prime_at_least_5(p)?;
    let v = match family {
        ActionFamily::N => 0,
        ActionFamily::P => match p % 20 {
            _ if p == 5 => 4,
            _ if p == 7 => 0,
            13 | 17 => 2,
            1 | 9 | 11 | 19 => 0,
            3 | 7 => -2,
            _ => unreachable!("primes >= 7 are units mod 20"),
        },
    };
    Ok(Rational::from_int(v))
}

/// ⅛𝔖₀(X, τ) against −n_{p/2}(Y, ρ̂_p) for the action on X with ∂X = −Y.
#[derive(Clone, Debug, PartialEq)]
pub struct ComparingIdentity {
    /// ⅛𝔖₀.
    pub lhs: Rational,
    /// −n_{p/2}(Y, ρ̂_p).
    pub rhs: Rational,
    /// lhs − rhs.
    pub offset: Rational,
    /// The predicted offset.
    pub expected: Rational,
}

impl ComparingIdentity {
    /// Whether the offset equals its prediction.
    pub fn holds(&self) -> bool {
        self.offset == self.expected
    }
}

/// Evaluates both sides of the comparing identity.
pub fn comparing_identity(family: ActionFamily, n: i64, p: i64) -> Result<ComparingIdentity> {
    let (m, y) = action_manifold(family, n, p)?;
    let s0 = sigma_vector(&m.fpd, m.sigma)?[0].clone();
    let lhs = s0 * Rational::from_frac(1, 8);
    let rhs = -correction_term(&y, p, &Rational::from_frac(p, 2))?;
    let offset = lhs.clone() - rhs.clone();
    Ok(ComparingIdentity { lhs, rhs, offset, expected: expected_comparing_offset(family, p)? })
}

/// Bounds on the number N of free stabilizations after which the action
/// still cannot be smoothed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StabilizationBound {
    /// The largest even N certified non-smoothable by the closed-form chain
    /// of estimates: 2n − 2.
    pub certified: i64,
    /// The smallest N with (p − 1)N ≥ −σ/8 + ⅛𝔖₀ − min κ₁, from the exact
    /// kappa set.
    pub raw_threshold: i64,
    /// The largest even N below `raw_threshold`.
    pub exact_certified: i64,
}

/// The largest even e with e·(p − 1) < k.
fn largest_even_below(k: &Rational, p: i64) -> i64 {
    let q = k.clone() / Rational::from_int(p - 1);
    let mut e = q.ceil().to_integer().try_into().unwrap_or(i64::MAX) - 1;
    if e.rem_euclid(2) == 1 {
        e -= 1;
    }
    e
}

/// Free-stabilization bounds for the action on N(2pn) or P(2pn − p + 1).
pub fn min_free_stabilizations(family: ActionFamily, n: i64, p: i64) -> Result<StabilizationBound> {
    let (m, _) = action_manifold(family, n, p)?;
    let (bf, np) = boundary_of(family, n, p);
    // Closed-form chain: 2pn − 2n for N, 2pn − p − 2n − 2 for P.
    let paper = Rational::from_int(match family {
        ActionFamily::N => 2 * p * n - 2 * n,
        ActionFamily::P => 2 * p * n - p - 2 * n - 2,
    });
    let s0 = sigma_vector(&m.fpd, m.sigma)?[0].clone();
    let ks = kappa_set(bf, Orientation::Minus, np, p)?;
    let min_k1 = ks
        .projected
        .iter()
        .map(|v| v.entries()[1].clone())
        .min()
        .ok_or_else(|| Error::InternalInvariant("empty kappa set".into()))?;
    let exact = Rational::from_frac(-m.sigma, 8) + s0 * Rational::from_frac(1, 8) - min_k1;
    let q = exact.clone() / Rational::from_int(p - 1);
    let raw_threshold: i64 = q.ceil().to_integer().try_into().map_err(|_| Error::Overflow("stabilization threshold"))?;
    Ok(StabilizationBound {
        certified: largest_even_below(&paper, p),
        raw_threshold,
        exact_certified: largest_even_below(&exact, p),
    })
}

/// The filling verdict after N free stabilizations, from the inequality engine.
pub fn stabilized_verdict(family: ActionFamily, n: i64, p: i64, stabilizations: i64) -> Result<Verdict> {
    let (m, _) = action_manifold(family, n, p)?;
    let (bf, np) = boundary_of(family, n, p);
    let m = super::fixed_points::free_stabilize(&m, stabilizations)?;
    let ks = kappa_set(bf, Orientation::Minus, np, p)?;
    Ok(check_filling(&m, &ks.projected)?.verdict)
}

/// The three conditions for an h-cobordism between Q(p; α₁, α₂, α₃) and L(p; a, b).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HCobordismReport {
    /// α₁α₂α₃ ≡ ab (mod p).
    pub determinant: bool,
    /// {±α_i} and {±a, ±b, ±1} agree as multisets mod p.
    pub weights: bool,
    /// α(Q) = α(L).
    pub alpha: bool,
}

impl HCobordismReport {
    /// Whether every condition holds.
    pub fn holds(&self) -> bool {
        self.determinant && self.weights && self.alpha
    }
}

fn fold_pm(x: i64, p: i64) -> i64 {
    let r = x.rem_euclid(p);
    r.min(p - r)
}

/// Checks the h-cobordism conditions between the quotient Q(p; α₁, α₂, α₃)
/// of Σ(α₁, α₂, α₃) and L(p; a, b).
pub fn h_cobordism_check(q: &SeifertData, p: i64, l: &LensSpaceData) -> Result<HCobordismReport> {
    if q.alphas().len() != 3 {
        return Err(Error::InvalidInput(format!("expected three fibers, got {}", q.alphas().len())));
    }
    if let Some(&a) = q.alphas().iter().find(|a| a.gcd(&p) != 1) {
        return Err(Error::NotCoprime(a, p));
    }
    if l.p() != p {
        return Err(Error::InvalidInput(format!("lens space order {} differs from p = {p}", l.p())));
    }
    let (a, b) = l.weights();
    let prod = q.alphas().iter().fold(1i64, |acc, x| (acc * x.rem_euclid(p)).rem_euclid(p));
    let determinant = prod == (a.rem_euclid(p) * b.rem_euclid(p)).rem_euclid(p);
    let mut lhs: Vec<i64> = q.alphas().iter().map(|&x| fold_pm(x, p)).collect();
    let mut rhs = vec![fold_pm(a, p), fold_pm(b, p), 1];
    lhs.sort_unstable();
    rhs.sort_unstable();
    let weights = lhs == rhs;
    let aq = alpha_invariant_seifert(q, p)?;
    let al = alpha_invariant_lens(l)?;
    let m = aq.modulus().lcm(&al.modulus());
    let alpha = (aq.embed(m) - al.embed(m)).is_zero();
    Ok(HCobordismReport { determinant, weights, alpha })
}
