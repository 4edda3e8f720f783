//! The equivariant eta invariant of the odd signature operator and the
//! α-invariants of homology lens spaces.

use std::fmt;
use std::hash::{Hash, Hasher};

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::exact::{trig_value_in, Cyclotomic, Scalar, TrigKind};
use crate::seifert::SeifertData;
use crate::sums::dieter_at_fraction;
use crate::{CyclotomicValue, Rational};

/// η_sign^{(q,r)}(Y) = 1 − (1/α)csc²(qπ/r) − Σ_i c(p_i, α_i; p_i q/r, α_i q/r),
/// with p_i ≡ −α/α_i (mod α_i). The value lies in Q(ζ_{lcm(4, 2r)}).
pub fn eta_sign(y: &SeifertData, r: i64, q: i64) -> Result<CyclotomicValue> {
    if r < 2 {
        return Err(Error::InvalidInput(format!("order r must be >= 2, got {r}")));
    }
    if !(1..r).contains(&q) {
        return Err(Error::InvalidInput(format!("q must satisfy 1 <= q <= r-1, got q={q}, r={r}")));
    }
    y.check_coprime_order(r)?;
    let m = TrigKind::Csc2.natural_modulus(r);
    let alpha = y.alpha();
    let mut eta = Cyclotomic::one(m)
        - trig_value_in::<Rational>(TrigKind::Csc2, q, r, m)?.scale(&Rational::from_frac(1, alpha));
    for &ai in y.alphas() {
        let p = (-(alpha / ai)).rem_euclid(ai);
        eta = eta - dieter_at_fraction::<Rational>(p, ai, q, r)?.embed(m);
    }
    Ok(eta)
}

/// α(Q(r; α₁, …, αₙ)) = −η_sign^{(1,r)}(Y).
pub fn alpha_invariant_seifert(y: &SeifertData, r: i64) -> Result<CyclotomicValue> {
    Ok(-eta_sign(y, r, 1)?)
}

/// The generalized lens space L(p; a, b), with a and b units mod p.
///
/// Equality and hashing respect (a, b) ~ (b, a) ~ (−a, −b).
#[derive(Clone, Copy, Debug)]
pub struct LensSpaceData {
    p: i64,
    a: i64,
    b: i64,
}

impl LensSpaceData {
    /// Validates p ≥ 2 and gcd(a, p) = gcd(b, p) = 1.
    pub fn new(p: i64, a: i64, b: i64) -> Result<Self> {
        if p < 2 {
            return Err(Error::InvalidInput(format!("lens space order must be >= 2, got {p}")));
        }
        for v in [a, b] {
            if v.gcd(&p) != 1 {
                return Err(Error::NotCoprime(v, p));
            }
        }
        Ok(LensSpaceData { p, a, b })
    }

    /// The order p.
    pub fn p(&self) -> i64 {
        self.p
    }

    /// The weights (a, b) as given.
    pub fn weights(&self) -> (i64, i64) {
        (self.a, self.b)
    }

    /// A canonical representative of the weight class, reduced into [0, p).
    pub fn canonical(&self) -> (i64, i64) {
        let norm = |x: i64, y: i64| {
            let (x, y) = (x.rem_euclid(self.p), y.rem_euclid(self.p));
            (x.min(y), x.max(y))
        };
        norm(self.a, self.b).min(norm(-self.a, -self.b))
    }
}

impl PartialEq for LensSpaceData {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.canonical() == other.canonical()
    }
}

impl Eq for LensSpaceData {}

impl Hash for LensSpaceData {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.p.hash(state);
        self.canonical().hash(state);
    }
}

impl fmt::Display for LensSpaceData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L({};{},{})", self.p, self.a, self.b)
    }
}

/// α(L(p; a, b)) = cot(aπ/p)·cot(bπ/p), in Q(ζ_{lcm(4, 2p)}).
pub fn alpha_invariant_lens(l: &LensSpaceData) -> Result<CyclotomicValue> {
    let m = TrigKind::Cot.natural_modulus(l.p);
    Ok(trig_value_in(TrigKind::Cot, l.a, l.p, m)? * trig_value_in(TrigKind::Cot, l.b, l.p, m)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn fiber_free_case() {
        let y = SeifertData::new(vec![]).unwrap();
        let v = eta_sign(&y, 4, 1).unwrap();
        assert_eq!(v.as_rational().unwrap(), rat(-1, 1));
    }

    #[test]
    fn lens_equivalences() {
        let a = LensSpaceData::new(5, -2, 3).unwrap();
        assert_eq!(a, LensSpaceData::new(5, 3, 3).unwrap());
        assert_eq!(a, LensSpaceData::new(5, 2, -3).unwrap());
        assert_ne!(a, LensSpaceData::new(5, 2, 3).unwrap());
        assert_eq!(alpha_invariant_lens(&LensSpaceData::new(4, 1, 1).unwrap()).unwrap().as_rational().unwrap(), rat(1, 1));
    }

    #[test]
    fn rejects_bad_q() {
        let y = SeifertData::brieskorn(2, 3, 7).unwrap();
        assert!(eta_sign(&y, 5, 0).is_err());
        assert!(matches!(eta_sign(&y, 7, 1), Err(Error::NotCoprimeToFibers { .. })));
    }

    #[test]
    fn first_family_alpha() {
        let y = SeifertData::brieskorn(2, 3, 59).unwrap();
        let l = LensSpaceData::new(5, -2, 3).unwrap();
        assert_eq!(alpha_invariant_seifert(&y, 5).unwrap(), alpha_invariant_lens(&l).unwrap());
    }
}
