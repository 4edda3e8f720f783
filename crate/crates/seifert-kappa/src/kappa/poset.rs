//! Graded vectors in Q^p with the product order, the doubling maps and the
//! projection to Q².

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact::Scalar;
use crate::Rational;

/// A vector in Q^d ordered componentwise and graded by the sum of its entries.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PosetVector {
    entries: Vec<Rational>,
}

impl PosetVector {
    /// Wraps the entries; the dimension must be positive.
    pub fn new(entries: Vec<Rational>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::InvalidInput("poset vectors must have positive dimension".into()));
        }
        Ok(PosetVector { entries })
    }

    /// The vector with integer entries.
    pub fn from_ints(entries: &[i64]) -> Result<Self> {
        PosetVector::new(entries.iter().map(|&v| Rational::from_int(v)).collect())
    }

    /// The zero vector of dimension `dim`.
    pub fn zero(dim: usize) -> Self {
        PosetVector { entries: vec![Rational::zero(); dim.max(1)] }
    }

    /// `scale · e_i` in dimension `dim`.
    pub fn basis(dim: usize, i: usize, scale: i64) -> Result<Self> {
        if i >= dim {
            return Err(Error::IndexOutOfRange { index: i.to_string(), p: dim as i64 });
        }
        let mut v = PosetVector::zero(dim);
        v.entries[i] = Rational::from_int(scale);
        Ok(v)
    }

    /// The dimension.
    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    /// The entries.
    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    /// |v| = Σ entries.
    pub fn grading(&self) -> Rational {
        self.entries.iter().fold(Rational::zero(), |acc, v| acc + v)
    }

    /// k·v for an integer k.
    pub fn scale(&self, k: i64) -> Self {
        let k = Rational::from_int(k);
        PosetVector { entries: self.entries.iter().map(|v| v * &k).collect() }
    }

    /// π̃(a₀, …, a_{p−1}) = (a₀, a₁ + ⋯ + a_{p−1}).
    pub fn project(&self) -> PosetVector {
        let rest = self.entries[1..].iter().fold(Rational::zero(), |acc, v| acc + v);
        PosetVector { entries: vec![self.entries[0].clone(), rest] }
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&Rational, &Rational) -> Rational) -> Self {
        assert_eq!(self.dim(), other.dim(), "poset vectors of different dimension");
        PosetVector { entries: self.entries.iter().zip(&other.entries).map(|(a, b)| f(a, b)).collect() }
    }
}

impl PartialOrd for PosetVector {
    /// The product order; vectors of different dimension are incomparable.
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        if self.dim() != other.dim() {
            return None;
        }
        let le = self.entries.iter().zip(&other.entries).all(|(a, b)| a <= b);
        let ge = self.entries.iter().zip(&other.entries).all(|(a, b)| a >= b);
        match (le, ge) {
            (true, true) => Some(Ordering::Equal),
            (true, false) => Some(Ordering::Less),
            (false, true) => Some(Ordering::Greater),
            (false, false) => None,
        }
    }
}

impl Add for &PosetVector {
    type Output = PosetVector;
    fn add(self, rhs: &PosetVector) -> PosetVector {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub for &PosetVector {
    type Output = PosetVector;
    fn sub(self, rhs: &PosetVector) -> PosetVector {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Neg for &PosetVector {
    type Output = PosetVector;
    fn neg(self) -> PosetVector {
        self.scale(-1)
    }
}

impl fmt::Display for PosetVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(|v| v.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Parity of the spin lift: even vectors are indexed by 0, …, p−1, odd ones
/// by the half-integers ½, 3/2, …, (2p−1)/2.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LiftParity {
    /// Slots e_i.
    Even,
    /// Slots e_{(2i+1)/2}, stored at position i.
    Odd,
}

/// The image index of slot i under the doubling map: 2i or 2i − p (even),
/// 2i + 1 or 2i + 1 − p (odd).
pub fn doubling_index(kind: LiftParity, i: usize, p: i64) -> Result<usize> {
    let pu = p as usize;
    if i >= pu {
        let index = match kind {
            LiftParity::Even => i.to_string(),
            LiftParity::Odd => format!("{}/2", 2 * i + 1),
        };
        return Err(Error::IndexOutOfRange { index, p });
    }
    let raw = match kind {
        LiftParity::Even => 2 * i,
        LiftParity::Odd => 2 * i + 1,
    };
    Ok(if raw >= pu { raw - pu } else { raw })
}

/// Applies the doubling map to a vector of dimension p.
pub fn doubling_map(kind: LiftParity, v: &PosetVector, p: i64) -> Result<PosetVector> {
    if p < 3 || p % 2 == 0 {
        return Err(Error::InvalidInput(format!("doubling map needs an odd p >= 3, got {p}")));
    }
    if v.dim() != p as usize {
        return Err(Error::IndexOutOfRange { index: format!("dimension {}", v.dim()), p });
    }
    let mut out = PosetVector::zero(v.dim());
    for (i, x) in v.entries.iter().enumerate() {
        out.entries[doubling_index(kind, i, p)?] += x;
    }
    Ok(out)
}
