//! Rotation numbers of the fiberwise circle action on Seiberg-Witten
//! solution components, and the induced Chern-Simons-Dirac values.

use std::fmt;
use std::str::FromStr;

use num_traits::{Signed, Zero};

use super::data::{BrieskornFamily, SeifertData};
use crate::error::{Error, Result};
use crate::exact::Scalar;
use crate::Rational;

/// A Seifert fibration over an orbifold of genus g with cone points of
/// orders α_i, as the unit circle bundle of a line bundle of degree ℓ.
#[derive(Clone, Debug, PartialEq)]
pub struct SeifertFibration {
    /// Genus of the base orbifold.
    pub genus: i64,
    /// Degree ℓ of the defining orbifold line bundle.
    pub degree: Rational,
    /// Cone point orders.
    pub alphas: Vec<i64>,
}

impl SeifertFibration {
    /// The fibration of a homology sphere: g = 0, ℓ = −1/α.
    pub fn of_homology_sphere(y: &SeifertData) -> Self {
        SeifertFibration {
            genus: 0,
            degree: Rational::from_frac(-1, y.alpha()),
            alphas: y.alphas().to_vec(),
        }
    }

    fn is_homology_sphere(&self) -> bool {
        let alpha: i64 = self.alphas.iter().product();
        self.genus == 0 && self.degree == Rational::from_frac(-1, alpha)
    }
}

/// Seifert data (e; ε₁, …, εₙ) of an orbifold line bundle, 0 ≤ ε_i < α_i.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LineBundleData {
    /// Integer part e.
    pub e: i64,
    /// Local invariants ε_i.
    pub epsilons: Vec<i64>,
}

impl LineBundleData {
    /// Builds bundle data.
    pub fn new(e: i64, epsilons: Vec<i64>) -> Self {
        LineBundleData { e, epsilons }
    }
}

impl fmt::Display for LineBundleData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let eps: Vec<String> = self.epsilons.iter().map(|e| e.to_string()).collect();
        write!(f, "({};{})", self.e, eps.join(","))
    }
}

impl FromStr for LineBundleData {
    type Err = Error;

    /// Parses `(e;ε₁,…,εₙ)`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidInput(format!("bundle must look like (0;0,0,1), got {s:?}"));
        let inner = s.trim().strip_prefix('(').and_then(|t| t.strip_suffix(')')).ok_or_else(bad)?;
        let (e, rest) = inner.split_once(';').ok_or_else(bad)?;
        let e = e.trim().parse::<i64>().map_err(|_| bad())?;
        let epsilons = rest
            .split(',')
            .filter(|t| !t.trim().is_empty())
            .map(|t| t.trim().parse::<i64>().map_err(|_| bad()))
            .collect::<Result<Vec<_>>>()?;
        Ok(LineBundleData { e, epsilons })
    }
}

/// rot(E) = (1/ℓ)(g − e + (n−2)/2 − Σ (2ε_i + 1)/(2α_i)).
///
/// For homology-sphere fibrations the result is checked to lie in ½Z.
pub fn rotation_number(f: &SeifertFibration, e: &LineBundleData) -> Result<Rational> {
    if f.degree.is_zero() {
        return Err(Error::InvalidInput("degree must be nonzero".into()));
    }
    if e.epsilons.len() != f.alphas.len() {
        return Err(Error::InvalidInput(format!(
            "bundle has {} local invariants but the base has {} cone points",
            e.epsilons.len(),
            f.alphas.len()
        )));
    }
    for (&eps, &a) in e.epsilons.iter().zip(&f.alphas) {
        if !(0..a).contains(&eps) {
            return Err(Error::InvalidInput(format!("epsilon {eps} outside [0, {a})")));
        }
    }
    let n = f.alphas.len() as i64;
    let mut inner = Rational::from_int(f.genus - e.e) + Rational::from_frac(n - 2, 2);
    for (&eps, &a) in e.epsilons.iter().zip(&f.alphas) {
        inner -= Rational::from_frac(2 * eps + 1, 2 * a);
    }
    let rot = inner / f.degree.clone();
    if f.is_homology_sphere() && !(rot.clone() * Rational::from_int(2)).is_int() {
        return Err(Error::InternalInvariant(format!("rotation number {rot} is not a half-integer")));
    }
    Ok(rot)
}

/// The table value −½(12(n − k) − c') for bundle (0; 0, 0, k).
pub fn rotation_table_value(family: BrieskornFamily, n: i64, k: i64) -> Rational {
    Rational::from_frac(-(12 * (n - k) - family.rotation_constant()), 2)
}

/// The components E = (0; 0, 0, k), 0 ≤ k ≤ n − 1, of Σ(2, 3, 12n + c) with
/// their rotation numbers, each computed by [`rotation_number`] and checked
/// against the closed-form table.
pub fn brieskorn_components(family: BrieskornFamily, n: i64) -> Result<Vec<(LineBundleData, Rational)>> {
    let y = family.seifert(n)?;
    let f = SeifertFibration::of_homology_sphere(&y);
    (0..n)
        .map(|k| {
            let e = LineBundleData::new(0, vec![0, 0, k]);
            let rot = rotation_number(&f, &e)?;
            let table = rotation_table_value(family, n, k);
            if rot != table {
                return Err(Error::InternalInvariant(format!(
                    "rotation of {e} on {y} is {rot}, table says {table}"
                )));
            }
            Ok((e, rot))
        })
        .collect()
}

/// |CSD(E)|/(4π²) = rot²·|ℓ|.
///
/// A nonzero rotation number must carry the sign of ℓ; the opposite sign is
/// rejected with [`Error::SignMismatch`].
pub fn csd_from_rotation(rot: &Rational, degree: &Rational) -> Result<Rational> {
    if degree.is_zero() {
        return Err(Error::InvalidInput("degree must be nonzero".into()));
    }
    if !rot.is_zero() && rot.signum() != degree.signum() {
        return Err(Error::SignMismatch(format!("rotation {rot} against degree {degree}")));
    }
    Ok(rot.clone() * rot.clone() * degree.abs())
}
