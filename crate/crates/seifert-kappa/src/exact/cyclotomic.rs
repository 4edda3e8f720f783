//! Elements of Q(ζ_m) in canonical form.
//!
//! A value is stored as the coefficient vector of its remainder modulo the
//! m-th cyclotomic polynomial Φ_m, so two values of the same modulus are equal
//! exactly when their vectors are. Mixed-modulus arithmetic embeds both
//! operands into Q(ζ_lcm).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer;

use super::poly::{cyclotomic_poly, euler_phi, reduce_mod};
use super::scalar::{mul_int, Scalar};
use crate::error::{Error, Result};

/// Σ c_k ζ_m^k with 0 ≤ k < φ(m), reduced modulo Φ_m.
#[derive(Clone, Debug)]
pub struct Cyclotomic<T> {
    m: u64,
    coeffs: Vec<T>,
}

impl<T: Scalar> Cyclotomic<T> {
    /// Wraps an already reduced coefficient vector of length φ(m).
    pub(crate) fn from_canonical(m: u64, coeffs: Vec<T>) -> Self {
        debug_assert_eq!(coeffs.len() as u64, euler_phi(m));
        Cyclotomic { m, coeffs }
    }

    /// Reduces an arbitrary coefficient list (indexed by powers of ζ_m).
    pub fn from_coeffs(m: u64, raw: &[(i64, T)]) -> Self {
        assert!(m >= 1, "modulus must be positive");
        let mut v = vec![T::zero(); m as usize];
        for (k, c) in raw {
            let i = k.rem_euclid(m as i64) as usize;
            v[i] = v[i].clone() + c.clone();
        }
        Self::reduce_dense(m, v)
    }

    fn reduce_dense(m: u64, mut v: Vec<T>) -> Self {
        let phi = cyclotomic_poly(m);
        reduce_mod(&mut v, &phi, T::from_int);
        Cyclotomic { m, coeffs: v }
    }

    /// The zero of Q(ζ_m).
    pub fn zero(m: u64) -> Self {
        Cyclotomic { m, coeffs: vec![T::zero(); euler_phi(m) as usize] }
    }

    /// The rational constant `c` in Q(ζ_m).
    pub fn constant(m: u64, c: T) -> Self {
        let mut z = Self::zero(m);
        z.coeffs[0] = c;
        z
    }

    /// The one of Q(ζ_m).
    pub fn one(m: u64) -> Self {
        Self::constant(m, T::one())
    }

    /// ζ_m^k.
    pub fn zeta_pow(m: u64, k: i64) -> Self {
        Self::from_coeffs(m, &[(k, T::one())])
    }

    /// The modulus m.
    pub fn modulus(&self) -> u64 {
        self.m
    }

    /// The canonical coefficients, of length φ(m).
    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// Nonzero canonical coefficients with their exponents.
    pub fn nonzero_terms(&self) -> Vec<(usize, T)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (k, c.clone()))
            .collect()
    }

    /// Whether the value is zero.
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Whether the value lies in Q.
    pub fn is_rational(&self) -> bool {
        self.coeffs.iter().skip(1).all(|c| c.is_zero())
    }

    /// The rational value, or [`Error::NotRational`] carrying the canonical form.
    pub fn as_rational(&self) -> Result<T> {
        if self.is_rational() {
            Ok(self.coeffs.first().cloned().unwrap_or_else(T::zero))
        } else {
            Err(Error::NotRational(self.to_string()))
        }
    }

    /// The same value in Q(ζ_{m'}); `m` must divide `m'`.
    pub fn embed(&self, m2: u64) -> Self {
        assert!(m2 % self.m == 0, "cannot embed modulus {} into {}", self.m, m2);
        if m2 == self.m {
            return self.clone();
        }
        let f = (m2 / self.m) as usize;
        let mut v = vec![T::zero(); m2 as usize];
        for (k, c) in self.coeffs.iter().enumerate() {
            v[k * f] = c.clone();
        }
        Self::reduce_dense(m2, v)
    }

    /// Image under ζ ↦ ζ^j; requires gcd(j, m) = 1.
    pub fn galois(&self, j: i64) -> Result<Self> {
        let m = self.m as i64;
        if j.gcd(&m) != 1 {
            return Err(Error::NotCoprime(j, m));
        }
        let mut v = vec![T::zero(); self.m as usize];
        for (k, c) in self.coeffs.iter().enumerate() {
            v[(k as i64 * j).rem_euclid(m) as usize] = c.clone();
        }
        Ok(Self::reduce_dense(self.m, v))
    }

    /// Complex conjugate.
    pub fn conj(&self) -> Self {
        self.galois(-1).expect("-1 is a unit")
    }

    /// Multiplies by a scalar.
    pub fn scale(&self, c: &T) -> Self {
        Cyclotomic { m: self.m, coeffs: self.coeffs.iter().map(|x| x.clone() * c.clone()).collect() }
    }

    /// Converts the coefficients to another scalar type, if they fit.
    pub fn convert<U: Scalar>(&self) -> Option<Cyclotomic<U>> {
        let coeffs = self.coeffs.iter().map(|c| U::from_big(&c.to_big())).collect::<Option<Vec<_>>>()?;
        Some(Cyclotomic { m: self.m, coeffs })
    }

    fn aligned(&self, other: &Self) -> (Self, Self) {
        if self.m == other.m {
            return (self.clone(), other.clone());
        }
        let l = self.m.lcm(&other.m);
        (self.embed(l), other.embed(l))
    }

    fn add_impl(&self, other: &Self) -> Self {
        if self.m != other.m {
            let (a, b) = self.aligned(other);
            return a.add_impl(&b);
        }
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.clone() + b.clone()).collect();
        Cyclotomic { m: self.m, coeffs }
    }

    fn mul_impl(&self, other: &Self) -> Self {
        if self.m != other.m {
            let (a, b) = self.aligned(other);
            return a.mul_impl(&b);
        }
        let n = self.coeffs.len();
        if n == 0 {
            return self.clone();
        }
        let mut v = vec![T::zero(); 2 * n - 1];
        let rhs = other.nonzero_terms();
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in &rhs {
                v[i + j] = v[i + j].clone() + a.clone() * b.clone();
            }
        }
        let phi = cyclotomic_poly(self.m);
        reduce_mod(&mut v, &phi, T::from_int);
        Cyclotomic { m: self.m, coeffs: v }
    }

    /// `self^k` for `k ≥ 0`.
    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.m);
        for _ in 0..k {
            acc = acc.mul_impl(self);
        }
        acc
    }

    /// Multiplies by a small integer.
    pub fn mul_int(&self, k: i64) -> Self {
        Cyclotomic { m: self.m, coeffs: self.coeffs.iter().map(|c| mul_int(c, k)).collect() }
    }
}

impl<T: Scalar> PartialEq for Cyclotomic<T> {
    fn eq(&self, other: &Self) -> bool {
        if self.m == other.m {
            return self.coeffs == other.coeffs;
        }
        let (a, b) = self.aligned(other);
        a.coeffs == b.coeffs
    }
}

impl<T: Scalar> fmt::Display for Cyclotomic<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.nonzero_terms();
        write!(f, "[Q(z_{})] ", self.m)?;
        if terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (k, c)) in terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})*z")?,
                _ => write!(f, "({c})*z^{k}")?,
            }
        }
        Ok(())
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $body:expr) => {
        impl<'a, T: Scalar> $tr<&'a Cyclotomic<T>> for &'a Cyclotomic<T> {
            type Output = Cyclotomic<T>;
            fn $method(self, rhs: &'a Cyclotomic<T>) -> Cyclotomic<T> {
                $body(self, rhs)
            }
        }
        impl<T: Scalar> $tr for Cyclotomic<T> {
            type Output = Cyclotomic<T>;
            fn $method(self, rhs: Cyclotomic<T>) -> Cyclotomic<T> {
                $body(&self, &rhs)
            }
        }
        impl<'a, T: Scalar> $tr<&'a Cyclotomic<T>> for Cyclotomic<T> {
            type Output = Cyclotomic<T>;
            fn $method(self, rhs: &'a Cyclotomic<T>) -> Cyclotomic<T> {
                $body(&self, rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a: &Cyclotomic<T>, b: &Cyclotomic<T>| a.add_impl(b));
forward_binop!(Sub, sub, |a: &Cyclotomic<T>, b: &Cyclotomic<T>| a.add_impl(&-b));
forward_binop!(Mul, mul, |a: &Cyclotomic<T>, b: &Cyclotomic<T>| a.mul_impl(b));

impl<T: Scalar> Neg for &Cyclotomic<T> {
    type Output = Cyclotomic<T>;
    fn neg(self) -> Cyclotomic<T> {
        Cyclotomic { m: self.m, coeffs: self.coeffs.iter().map(|c| -c.clone()).collect() }
    }
}

impl<T: Scalar> Neg for Cyclotomic<T> {
    type Output = Cyclotomic<T>;
    fn neg(self) -> Cyclotomic<T> {
        -&self
    }
}
