//! Rational elements of Q[x]/(x^m - 1) with an `i128` common denominator.
//!
//! This is the accumulator for long trigonometric sums. Values are collapsed
//! into canonical [`Cyclotomic`] form only at the end. Every operation is
//! checked and reports [`Error::Overflow`] instead of wrapping.

use num_integer::Integer;

use super::cyclotomic::Cyclotomic;
use super::poly::{cyclotomic_poly, reduce_mod_i128};
use super::scalar::{from_i128_frac, Scalar};
use crate::error::{Error, Result};

/// `num / den` with `num` indexed by powers of ζ_m.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupRing {
    m: u64,
    num: Vec<i128>,
    den: i128,
}

const OVF: Error = Error::Overflow("group ring");

impl GroupRing {
    /// The zero element.
    pub fn zero(m: u64) -> Self {
        assert!(m >= 1, "modulus must be positive");
        GroupRing { m, num: vec![0; m as usize], den: 1 }
    }

    /// `(n/d)·ζ_m^k`.
    pub fn monomial(m: u64, k: i64, n: i128, d: i128) -> Self {
        let mut g = GroupRing::zero(m);
        g.num[k.rem_euclid(m as i64) as usize] = n;
        g.den = d;
        g.normalized()
    }

    /// The rational constant `n/d`.
    pub fn constant(m: u64, n: i128, d: i128) -> Self {
        GroupRing::monomial(m, 0, n, d)
    }

    /// The modulus m.
    pub fn modulus(&self) -> u64 {
        self.m
    }

    /// Whether every coefficient vanishes in the group ring.
    pub fn is_zero(&self) -> bool {
        self.num.iter().all(|&c| c == 0)
    }

    fn normalized(mut self) -> Self {
        if self.den < 0 {
            self.den = -self.den;
            for c in &mut self.num {
                *c = -*c;
            }
        }
        let g = self.num.iter().fold(self.den, |g, &c| g.gcd(&c));
        if g > 1 {
            self.den /= g;
            for c in &mut self.num {
                *c /= g;
            }
        }
        self
    }

    fn check_modulus(&self, other: &Self) -> Result<()> {
        if self.m != other.m {
            return Err(Error::InvalidInput(format!(
                "group ring moduli differ: {} vs {}",
                self.m, other.m
            )));
        }
        Ok(())
    }

    /// `self + other`.
    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_modulus(other)?;
        let l = self.den.lcm(&other.den);
        let (fa, fb) = (l / self.den, l / other.den);
        let mut num = Vec::with_capacity(self.num.len());
        for (a, b) in self.num.iter().zip(&other.num) {
            let x = a.checked_mul(fa).ok_or(OVF)?;
            let y = b.checked_mul(fb).ok_or(OVF)?;
            num.push(x.checked_add(y).ok_or(OVF)?);
        }
        Ok(GroupRing { m: self.m, num, den: l }.normalized())
    }

    /// `self - other`.
    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(-1, 1)?)
    }

    /// `self · other` in Q[x]/(x^m - 1).
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_modulus(other)?;
        let m = self.m as usize;
        let mut num = vec![0i128; m];
        let rhs: Vec<(usize, i128)> = other
            .num
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(k, &c)| (k, c))
            .collect();
        for (i, &a) in self.num.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for &(j, b) in &rhs {
                let k = (i + j) % m;
                num[k] = num[k].checked_add(a.checked_mul(b).ok_or(OVF)?).ok_or(OVF)?;
            }
        }
        let den = self.den.checked_mul(other.den).ok_or(OVF)?;
        Ok(GroupRing { m: self.m, num, den }.normalized())
    }

    /// `self · n/d`.
    pub fn scale(&self, n: i128, d: i128) -> Result<Self> {
        if d == 0 {
            return Err(Error::InvalidInput("division by zero".into()));
        }
        let g = n.gcd(&d);
        let (n, d) = (n / g, d / g);
        let num = self
            .num
            .iter()
            .map(|&c| c.checked_mul(n).ok_or(OVF))
            .collect::<Result<Vec<_>>>()?;
        let den = self.den.checked_mul(d).ok_or(OVF)?;
        Ok(GroupRing { m: self.m, num, den }.normalized())
    }

    /// Applies ζ ↦ ζ^j. Only an automorphism when gcd(j, m) = 1.
    pub fn galois(&self, j: i64) -> Self {
        let m = self.m as i64;
        let mut num = vec![0i128; self.m as usize];
        for (k, &c) in self.num.iter().enumerate() {
            if c != 0 {
                num[(k as i64 * j).rem_euclid(m) as usize] += c;
            }
        }
        GroupRing { m: self.m, num, den: self.den }
    }

    /// Canonical form in Q(ζ_m).
    pub fn to_cyclotomic<T: Scalar>(&self) -> Result<Cyclotomic<T>> {
        let phi = cyclotomic_poly(self.m);
        let mut v = self.num.clone();
        reduce_mod_i128(&mut v, &phi).ok_or(OVF)?;
        let coeffs = v.into_iter().map(|c| from_i128_frac::<T>(c, self.den)).collect();
        Ok(Cyclotomic::from_canonical(self.m, coeffs))
    }
}

/// The trigonometric functions available as exact cyclotomic values.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TrigKind {
    /// cot(πa/b)
    Cot,
    /// csc(πa/b)
    Csc,
    /// csc²(πa/b)
    Csc2,
    /// cos(πa/b)
    Cos,
    /// sin(πa/b)
    Sin,
    /// e^{iπa/b}
    ExpIPi,
}

impl TrigKind {
    /// Lower-case name as used on the command line.
    pub fn name(self) -> &'static str {
        match self {
            TrigKind::Cot => "cot",
            TrigKind::Csc => "csc",
            TrigKind::Csc2 => "csc2",
            TrigKind::Cos => "cos",
            TrigKind::Sin => "sin",
            TrigKind::ExpIPi => "exp_i_pi",
        }
    }

    /// Smallest modulus that carries the value at π·a/b.
    pub fn natural_modulus(self, b: i64) -> u64 {
        let b = b.unsigned_abs();
        match self {
            TrigKind::Cos | TrigKind::ExpIPi => 2 * b,
            _ => (2 * b).lcm(&4),
        }
    }
}

fn reduced(a: i64, b: i64) -> (i64, i64) {
    assert!(b != 0, "trigonometric argument with zero denominator");
    let g = a.gcd(&b);
    let (a, b) = (a / g, b / g);
    if b < 0 {
        (-a, -b)
    } else {
        (a, b)
    }
}

fn require(m: u64, d: u64, what: &str) -> Result<()> {
    if m % d != 0 {
        return Err(Error::InvalidInput(format!(
            "modulus {m} cannot carry {what}; needs a multiple of {d}"
        )));
    }
    Ok(())
}

impl GroupRing {
    /// e^{iπa/b} as an element of the group ring of order `m`.
    pub fn exp_i_pi(m: u64, a: i64, b: i64) -> Result<Self> {
        let (a, b) = reduced(a, b);
        require(m, 2 * b as u64, "e^{iπa/b}")?;
        Ok(GroupRing::monomial(m, a * (m as i64 / (2 * b)), 1, 1))
    }

    /// cos(πa/b).
    pub fn cos(m: u64, a: i64, b: i64) -> Result<Self> {
        let (a, b) = reduced(a, b);
        require(m, 2 * b as u64, "cos(πa/b)")?;
        let s = a * (m as i64 / (2 * b));
        GroupRing::monomial(m, s, 1, 2).add(&GroupRing::monomial(m, -s, 1, 2))
    }

    /// sin(πa/b).
    pub fn sin(m: u64, a: i64, b: i64) -> Result<Self> {
        let (a, b) = reduced(a, b);
        require(m, TrigKind::Sin.natural_modulus(b), "sin(πa/b)")?;
        let s = a * (m as i64 / (2 * b));
        let q = m as i64 / 4;
        GroupRing::monomial(m, 3 * q + s, 1, 2).add(&GroupRing::monomial(m, q - s, 1, 2))
    }

    /// cot(πa/b) = i(1 + (2/n)Σ_{j<n} j ω^j) with ω = e^{2πia/b} of order n.
    pub fn cot(m: u64, a: i64, b: i64) -> Result<Self> {
        let (a, b) = reduced(a, b);
        if b == 1 {
            return Err(Error::Pole { kind: "cot", a, b });
        }
        require(m, TrigKind::Cot.natural_modulus(b), "cot(πa/b)")?;
        let mi = m as i64;
        let (q, step, n) = (mi / 4, a * (mi / b), b as i128);
        let mut g = GroupRing::zero(m);
        g.num[q as usize] = n;
        for j in 1..b {
            let k = (q + j * step).rem_euclid(mi) as usize;
            g.num[k] += 2 * j as i128;
        }
        g.den = n;
        Ok(g.normalized())
    }

    /// csc(πa/b) = (2i/n)Σ_{j<n} j u^{2j+1} with u = e^{iπa/b}.
    pub fn csc(m: u64, a: i64, b: i64) -> Result<Self> {
        let (a, b) = reduced(a, b);
        if b == 1 {
            return Err(Error::Pole { kind: "csc", a, b });
        }
        require(m, TrigKind::Csc.natural_modulus(b), "csc(πa/b)")?;
        let mi = m as i64;
        let (q, half, n) = (mi / 4, a * (mi / (2 * b)), b as i128);
        let mut g = GroupRing::zero(m);
        for j in 1..b {
            let k = (q + (2 * j + 1) * half).rem_euclid(mi) as usize;
            g.num[k] += 2 * j as i128;
        }
        g.den = n;
        Ok(g.normalized())
    }

    /// csc²(πa/b).
    pub fn csc2(m: u64, a: i64, b: i64) -> Result<Self> {
        let c = GroupRing::csc(m, a, b)?;
        c.mul(&c)
    }

    /// Dispatches on `kind`.
    pub fn trig(kind: TrigKind, m: u64, a: i64, b: i64) -> Result<Self> {
        match kind {
            TrigKind::Cot => GroupRing::cot(m, a, b),
            TrigKind::Csc => GroupRing::csc(m, a, b),
            TrigKind::Csc2 => GroupRing::csc2(m, a, b),
            TrigKind::Cos => GroupRing::cos(m, a, b),
            TrigKind::Sin => GroupRing::sin(m, a, b),
            TrigKind::ExpIPi => GroupRing::exp_i_pi(m, a, b),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    fn rational(g: &GroupRing) -> BigRational {
        g.to_cyclotomic::<BigRational>().unwrap().as_rational().unwrap()
    }

    #[test]
    fn cot_quarter_is_one() {
        assert_eq!(rational(&GroupRing::cot(8, 1, 4).unwrap()), BigRational::from_integer(1.into()));
    }

    #[test]
    fn cot_pole() {
        assert!(matches!(GroupRing::cot(8, 4, 4), Err(Error::Pole { .. })));
    }

    #[test]
    fn modulus_too_small() {
        assert!(matches!(GroupRing::cot(6, 1, 3), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn csc_squared_sixth_is_four() {
        assert_eq!(rational(&GroupRing::csc2(12, 1, 6).unwrap()), BigRational::from_integer(4.into()));
    }
}
