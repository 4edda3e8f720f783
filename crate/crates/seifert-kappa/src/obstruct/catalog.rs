//! Intersection-form catalog of spin fillings and cobordisms of Brieskorn
//! spheres, sharpness of the relative 10/8 inequality, and the resulting
//! non-extension verdicts.

use std::fmt;

use super::bounds::{min_free_stabilizations, ActionFamily};
use super::inequality::{cobordism_constant, filling_constant, Verdict};
use crate::error::{Error, Result};
use crate::eta::plain_correction_term;
use crate::exact::Scalar;
use crate::kappa::{kappa_offsets, Orientation};
use crate::seifert::BrieskornFamily;
use crate::Rational;

/// ±Σ(2, 3, 12n + c).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Boundary {
    /// The family.
    pub family: BrieskornFamily,
    /// Y or −Y.
    pub orientation: Orientation,
    /// The family parameter.
    pub n: i64,
}

impl Boundary {
    /// Builds a boundary descriptor after checking n.
    pub fn new(family: BrieskornFamily, orientation: Orientation, n: i64) -> Result<Self> {
        family.check_n(n)?;
        Ok(Boundary { family, orientation, n })
    }

    /// Whether the sphere is Floer K-split (the families 12n + 5 and 12n + 1).
    pub fn is_split(&self) -> bool {
        matches!(self.family, BrieskornFamily::Plus5 | BrieskornFamily::Plus1)
    }
}

impl fmt::Display for Boundary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.orientation == Orientation::Minus { "-" } else { "" };
        write!(f, "{sign}sigma(2,3,{})", self.family.third_fiber(self.n))
    }
}

/// Manolescu's κ of ±Σ(2, 3, 12n + c).
///
/// For the split families the value is the grading of the single kappa
/// element, ∓n(Y).
pub fn manolescu_kappa(family: BrieskornFamily, orientation: Orientation) -> Rational {
    use BrieskornFamily::*;
    use Orientation::*;
    Rational::from_int(match (family, orientation) {
        (Minus1, Plus) => 2,
        (Minus1, Minus) => 0,
        (Minus5, _) => 1,
        (Plus5, Plus) => 1,
        (Plus5, Minus) => -1,
        (Plus1, _) => 0,
    })
}

/// Shape of a catalog manifold.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CatalogKind {
    /// The Gompf nucleus N(2n).
    Nucleus,
    /// N(2n) # S²×S².
    NucleusStabilized,
    /// P(2n).
    PManifold,
    /// P(2n) # S²×S².
    PStabilized,
    /// The Milnor fiber M(2, 3, 12n + c).
    MilnorFiber,
    /// User-supplied data.
    Custom,
}

/// A spin manifold with intersection form −k·E8 ⊕ h·H and boundary a
/// Brieskorn sphere.
#[derive(Clone, Debug, PartialEq)]
pub struct ManifoldCatalogEntry {
    /// Display name.
    pub name: String,
    /// Shape.
    pub kind: CatalogKind,
    /// Number k of −E8 summands.
    pub e8_summands: i64,
    /// Number h of hyperbolic summands.
    pub h_summands: i64,
    /// σ(X) = −8k.
    pub sigma: i64,
    /// b₂⁺(X) = h.
    pub b2_plus: i64,
    /// ∂X.
    pub boundary: Option<Boundary>,
    /// κ(∂X).
    pub kappa_boundary: Option<Rational>,
}

fn milnor_form(family: BrieskornFamily, n: i64) -> (i64, i64) {
    match family {
        BrieskornFamily::Plus5 => (2 * n + 1, 4 * n),
        BrieskornFamily::Minus5 => (2 * n - 1, 4 * n - 2),
        BrieskornFamily::Minus1 => (2 * n, 4 * n - 2),
        BrieskornFamily::Plus1 => (2 * n, 4 * n),
    }
}

impl ManifoldCatalogEntry {
    fn build(name: String, kind: CatalogKind, e8: i64, h: i64, boundary: Option<Boundary>) -> Self {
        let kappa_boundary = boundary.map(|b| manolescu_kappa(b.family, b.orientation));
        ManifoldCatalogEntry {
            name,
            kind,
            e8_summands: e8,
            h_summands: h,
            sigma: -8 * e8,
            b2_plus: h,
            boundary,
            kappa_boundary,
        }
    }

    /// N(2n): form H, boundary −Σ(2, 3, 12n − 1).
    pub fn nucleus(n: i64) -> Result<Self> {
        let b = Boundary::new(BrieskornFamily::Minus1, Orientation::Minus, n)?;
        Ok(Self::build(format!("N({})", 2 * n), CatalogKind::Nucleus, 0, 1, Some(b)))
    }

    /// N(2n) # S²×S²: form 2H.
    pub fn nucleus_stabilized(n: i64) -> Result<Self> {
        let b = Boundary::new(BrieskornFamily::Minus1, Orientation::Minus, n)?;
        Ok(Self::build(format!("N({})#S2xS2", 2 * n), CatalogKind::NucleusStabilized, 0, 2, Some(b)))
    }

    /// P(2n): form −E8 ⊕ H, boundary −Σ(2, 3, 12n − 5).
    pub fn p_manifold(n: i64) -> Result<Self> {
        let b = Boundary::new(BrieskornFamily::Minus5, Orientation::Minus, n)?;
        Ok(Self::build(format!("P({})", 2 * n), CatalogKind::PManifold, 1, 1, Some(b)))
    }

    /// P(2n) # S²×S²: form −E8 ⊕ 2H.
    pub fn p_stabilized(n: i64) -> Result<Self> {
        let b = Boundary::new(BrieskornFamily::Minus5, Orientation::Minus, n)?;
        Ok(Self::build(format!("P({})#S2xS2", 2 * n), CatalogKind::PStabilized, 1, 2, Some(b)))
    }

    /// The Milnor fiber M(2, 3, 12n + c), bounded by Σ(2, 3, 12n + c).
    pub fn milnor_fiber(family: BrieskornFamily, n: i64) -> Result<Self> {
        let b = Boundary::new(family, Orientation::Plus, n)?;
        let (e8, h) = milnor_form(family, n);
        Ok(Self::build(format!("M(2,3,{})", family.third_fiber(n)), CatalogKind::MilnorFiber, e8, h, Some(b)))
    }

    /// A user-described entry; κ(∂X) is left unset when no boundary is given.
    pub fn custom(name: &str, e8_summands: i64, h_summands: i64, boundary: Option<Boundary>) -> Self {
        Self::build(name.to_string(), CatalogKind::Custom, e8_summands, h_summands, boundary)
    }

    fn require_boundary(&self) -> Result<(Boundary, Rational)> {
        let b = self.boundary.ok_or_else(|| Error::MissingCatalogData(format!("{} has no boundary", self.name)))?;
        let k = self
            .kappa_boundary
            .clone()
            .ok_or_else(|| Error::MissingCatalogData(format!("{} has no boundary kappa", self.name)))?;
        Ok((b, k))
    }
}

/// Whether b₂⁺(X) + κ(∂X) = −σ(X)/8 + C(b₂⁺(X)), together with C.
pub fn sharpness(entry: &ManifoldCatalogEntry) -> Result<(bool, i64)> {
    let (_, kappa) = entry.require_boundary()?;
    let c = filling_constant(entry.b2_plus);
    let lhs = Rational::from_int(entry.b2_plus) + kappa;
    let rhs = Rational::from_frac(-entry.sigma, 8) + Rational::from_int(c);
    Ok((lhs == rhs, c))
}

/// The outcome of a non-extension test.
#[derive(Clone, Debug, PartialEq)]
pub struct VerdictReport {
    /// Manifold name.
    pub manifold: String,
    /// The prime.
    pub p: i64,
    /// The family parameter of the boundary.
    pub n: i64,
    /// Sharpness of the relative 10/8 inequality.
    pub sharp: bool,
    /// The constant C in the sharpness identity.
    pub c: i64,
    /// |K^π| of the relevant end.
    pub kappa_multiplicity: usize,
    /// Whether every element of K^π has grading κ.
    pub gradings_match: bool,
    /// Excluded iff sharp, |K^π| > 1 and the gradings match.
    pub verdict: Verdict,
    /// For the actions on N(2pn) and P(2pn − p + 1): the largest number of
    /// free stabilizations certified non-smoothable.
    pub max_certified_free_stabilizations: Option<i64>,
}

/// |K^π(∂, ρ_p)| and whether all its elements have grading κ.
fn multiplicity(b: &Boundary, kappa: &Rational, p: i64) -> Result<(usize, bool)> {
    let off = kappa_offsets(b.family, b.orientation, b.n, p)?;
    let n_plain = plain_correction_term(&b.family.seifert(b.n)?)?;
    let shift = n_plain * Rational::from_int(off.n_sign);
    let gradings = off.projected.iter().all(|v| v.grading() + shift.clone() == *kappa);
    Ok((off.projected.len(), gradings))
}

fn certified_for(entry: &ManifoldCatalogEntry, n: i64, p: i64) -> Result<Option<i64>> {
    if p < 5 {
        return Ok(None);
    }
    let shape = match entry.kind {
        CatalogKind::Nucleus if n % p == 0 => Some((ActionFamily::N, n / p)),
        CatalogKind::PManifold if (n + (p - 1) / 2) % p == 0 => Some((ActionFamily::P, (n + (p - 1) / 2) / p)),
        _ => None,
    };
    match shape {
        Some((f, m)) => Ok(Some(min_free_stabilizations(f, m, p)?.certified)),
        None => Ok(None),
    }
}

/// Whether ρ_p on ∂X cannot extend to a smooth homologically trivial
/// action over X: the relative 10/8 inequality is sharp and K^π(∂X, ρ_p)
/// has at least two elements of grading κ(∂X).
pub fn nonextension_verdict(entry: &ManifoldCatalogEntry, p: i64) -> Result<VerdictReport> {
    let (b, kappa) = entry.require_boundary()?;
    let (sharp, c) = sharpness(entry)?;
    let (mult, gradings_match) = multiplicity(&b, &kappa, p)?;
    let verdict =
        if sharp && mult > 1 && gradings_match { Verdict::Excluded } else { Verdict::NotExcluded };
    Ok(VerdictReport {
        manifold: entry.name.clone(),
        p,
        n: b.n,
        sharp,
        c,
        kappa_multiplicity: mult,
        gradings_match,
        verdict,
        max_certified_free_stabilizations: certified_for(entry, b.n, p)?,
    })
}

/// A spin cobordism X from Y₀ to Y₁ with σ(X) and b₂⁺(X).
#[derive(Clone, Debug, PartialEq)]
pub struct CobordismEntry {
    /// Display name.
    pub name: String,
    /// Y₀.
    pub incoming: Boundary,
    /// Y₁.
    pub outgoing: Boundary,
    /// σ(X).
    pub sigma: i64,
    /// b₂⁺(X).
    pub b2_plus: i64,
}

impl CobordismEntry {
    /// The complement of M(2, 3, 12n₀ + c₀) ⊂ M(2, 3, 12n₁ + c₁).
    pub fn milnor_complement(inner: (BrieskornFamily, i64), outer: (BrieskornFamily, i64)) -> Result<Self> {
        let a = ManifoldCatalogEntry::milnor_fiber(inner.0, inner.1)?;
        let b = ManifoldCatalogEntry::milnor_fiber(outer.0, outer.1)?;
        let b2_plus = b.b2_plus - a.b2_plus;
        if b2_plus < 0 || b.sigma > a.sigma {
            return Err(Error::InvalidInput(format!("{} does not embed in {} with these forms", a.name, b.name)));
        }
        Ok(CobordismEntry {
            name: format!("{}\\{}", b.name, a.name),
            incoming: a.boundary.expect("milnor fibers have boundary"),
            outgoing: b.boundary.expect("milnor fibers have boundary"),
            sigma: b.sigma - a.sigma,
            b2_plus,
        })
    }
}

/// Whether b₂⁺(X) + κ(Y₁) = −σ(X)/8 + κ(Y₀) + C, with C from the cobordism table.
pub fn cobordism_sharpness(entry: &CobordismEntry) -> (bool, i64) {
    let c = cobordism_constant(entry.b2_plus, entry.incoming.is_split());
    let k0 = manolescu_kappa(entry.incoming.family, entry.incoming.orientation);
    let k1 = manolescu_kappa(entry.outgoing.family, entry.outgoing.orientation);
    let lhs = Rational::from_int(entry.b2_plus) + k1;
    let rhs = Rational::from_frac(-entry.sigma, 8) + k0 + Rational::from_int(c);
    (lhs == rhs, c)
}

/// Whether ρ_p on −Y₀ ⊔ Y₁ cannot extend over X: sharpness, and one end split
/// while the other has at least two kappa elements of grading κ.
pub fn cobordism_verdict(entry: &CobordismEntry, p: i64) -> Result<VerdictReport> {
    let (sharp, c) = cobordism_sharpness(entry);
    let (y0, y1) = (&entry.incoming, &entry.outgoing);
    let candidate = if y0.is_split() && !y1.is_split() {
        Some(y1)
    } else if y1.is_split() && !y0.is_split() {
        Some(y0)
    } else {
        None
    };
    let (mult, gradings_match, n) = match candidate {
        Some(b) => {
            let (m, g) = multiplicity(b, &manolescu_kappa(b.family, b.orientation), p)?;
            (m, g, b.n)
        }
        None => (1, true, y1.n),
    };
    let verdict =
        if sharp && mult > 1 && gradings_match { Verdict::Excluded } else { Verdict::NotExcluded };
    Ok(VerdictReport {
        manifold: entry.name.clone(),
        p,
        n,
        sharp,
        c,
        kappa_multiplicity: mult,
        gradings_match,
        verdict,
        max_certified_free_stabilizations: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sharp_examples() {
        assert_eq!(sharpness(&ManifoldCatalogEntry::nucleus(2).unwrap()).unwrap(), (true, 1));
        assert_eq!(sharpness(&ManifoldCatalogEntry::p_manifold(1).unwrap()).unwrap(), (true, 1));
        let m237 = ManifoldCatalogEntry::milnor_fiber(BrieskornFamily::Minus5, 1).unwrap();
        assert_eq!(m237.name, "M(2,3,7)");
        assert_eq!(sharpness(&m237).unwrap(), (true, 2));
    }

    #[test]
    fn missing_boundary() {
        let e = ManifoldCatalogEntry::custom("K3", 2, 3, None);
        assert!(matches!(sharpness(&e), Err(Error::MissingCatalogData(_))));
    }

    #[test]
    fn exceptional_nucleus() {
        let n2 = ManifoldCatalogEntry::nucleus(1).unwrap();
        assert_eq!(nonextension_verdict(&n2, 5).unwrap().verdict, Verdict::NotExcluded);
        assert_eq!(nonextension_verdict(&n2, 7).unwrap().verdict, Verdict::Excluded);
    }

    #[test]
    fn cobordism_example() {
        let x = CobordismEntry::milnor_complement((BrieskornFamily::Plus5, 0), (BrieskornFamily::Minus5, 1)).unwrap();
        assert_eq!((x.sigma, x.b2_plus), (0, 2));
        assert_eq!(cobordism_sharpness(&x), (true, 2));
        assert_eq!(cobordism_verdict(&x, 3).unwrap().verdict, Verdict::Excluded);
    }
}
