//! Fixed-point data of pseudofree or surface-fixing Z/p actions, the
//! stabilization operations and the E8 construction.

use std::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::exact::poly::is_prime;

/// Fixed-point data: isolated points of type (a, b) and fixed surfaces of
/// type (c, [Σ]²), all weights units mod p.
///
/// Equality is up to (a, b) ~ (b, a) ~ (−a, −b), (c, s) ~ (−c, s) and
/// reordering.
#[derive(Clone, Debug)]
pub struct FixedPointData {
    p: i64,
    points: Vec<(i64, i64)>,
    surfaces: Vec<(i64, i64)>,
}

pub(crate) fn check_odd_prime(p: i64) -> Result<()> {
    if p < 3 || !is_prime(p as u64) {
        return Err(Error::InvalidInput(format!("p must be an odd prime, got {p}")));
    }
    Ok(())
}

fn check_unit(x: i64, p: i64) -> Result<()> {
    if x.gcd(&p) != 1 {
        return Err(Error::NotCoprime(x, p));
    }
    Ok(())
}

/// The canonical representative of the class of (a, b) in [0, p)².
pub fn canonical_point(a: i64, b: i64, p: i64) -> (i64, i64) {
    let r = |x: i64| x.rem_euclid(p);
    let norm = |x: i64, y: i64| (r(x).min(r(y)), r(x).max(r(y)));
    norm(a, b).min(norm(-a, -b))
}

fn canonical_surface(c: i64, s: i64, p: i64) -> (i64, i64) {
    (c.rem_euclid(p).min((-c).rem_euclid(p)), s)
}

impl FixedPointData {
    /// Validates p and every weight.
    pub fn new(p: i64, points: Vec<(i64, i64)>, surfaces: Vec<(i64, i64)>) -> Result<Self> {
        check_odd_prime(p)?;
        for &(a, b) in &points {
            check_unit(a, p)?;
            check_unit(b, p)?;
        }
        for &(c, _) in &surfaces {
            check_unit(c, p)?;
        }
        Ok(FixedPointData { p, points, surfaces })
    }

    /// Isolated fixed points only.
    pub fn pseudofree(p: i64, points: Vec<(i64, i64)>) -> Result<Self> {
        FixedPointData::new(p, points, vec![])
    }

    /// The order p.
    pub fn p(&self) -> i64 {
        self.p
    }

    /// The isolated points as given.
    pub fn points(&self) -> &[(i64, i64)] {
        &self.points
    }

    /// The fixed surfaces (c, [Σ]²) as given.
    pub fn surfaces(&self) -> &[(i64, i64)] {
        &self.surfaces
    }

    /// Whether there are no fixed surfaces.
    pub fn is_pseudofree(&self) -> bool {
        self.surfaces.is_empty()
    }

    /// Whether the fixed set is empty.
    pub fn is_empty(&self) -> bool {
        self.points.is_empty() && self.surfaces.is_empty()
    }

    /// Canonical point classes, sorted.
    pub fn canonical_points(&self) -> Vec<(i64, i64)> {
        let mut v: Vec<_> = self.points.iter().map(|&(a, b)| canonical_point(a, b, self.p)).collect();
        v.sort_unstable();
        v
    }

    /// Canonical surface classes, sorted.
    pub fn canonical_surfaces(&self) -> Vec<(i64, i64)> {
        let mut v: Vec<_> = self.surfaces.iter().map(|&(c, s)| canonical_surface(c, s, self.p)).collect();
        v.sort_unstable();
        v
    }

    /// Whether some fixed point has type (a, b).
    pub fn contains_point(&self, a: i64, b: i64) -> bool {
        let t = canonical_point(a, b, self.p);
        self.points.iter().any(|&(x, y)| canonical_point(x, y, self.p) == t)
    }

    /// The data with one more isolated point.
    pub fn with_point(&self, a: i64, b: i64) -> Result<Self> {
        let mut points = self.points.clone();
        points.push((a, b));
        FixedPointData::new(self.p, points, self.surfaces.clone())
    }

    /// The data with one point of type (a, b) removed.
    pub fn without_point(&self, a: i64, b: i64) -> Result<Self> {
        let t = canonical_point(a, b, self.p);
        let idx = self
            .points
            .iter()
            .position(|&(x, y)| canonical_point(x, y, self.p) == t)
            .ok_or(Error::NoSuchFixedPoint { a, b })?;
        let mut points = self.points.clone();
        points.remove(idx);
        Ok(FixedPointData { p: self.p, points, surfaces: self.surfaces.clone() })
    }
}

impl PartialEq for FixedPointData {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p
            && self.canonical_points() == other.canonical_points()
            && self.canonical_surfaces() == other.canonical_surfaces()
    }
}

impl Eq for FixedPointData {}

impl fmt::Display for FixedPointData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pts: Vec<String> = self.points.iter().map(|(a, b)| format!("({a},{b})")).collect();
        write!(f, "{{{}", pts.join(","))?;
        if !self.surfaces.is_empty() {
            let s: Vec<String> = self.surfaces.iter().map(|(c, s)| format!("({c},{s})")).collect();
            write!(f, ";{}", s.join(","))?;
        }
        write!(f, "}}")
    }
}

/// σ(X), the vector b⃗₂⁺(X, τ) and the fixed-point data of a Z/p action.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivariantManifoldData {
    /// Optional catalog key.
    pub name: Option<String>,
    /// σ(X).
    pub sigma: i64,
    /// b₂⁺(X, τ)_k for k = 0, …, p − 1.
    pub b2_plus: Vec<i64>,
    /// 𝒟(X, τ).
    pub fpd: FixedPointData,
}

impl EquivariantManifoldData {
    /// Checks that b⃗₂⁺ has p nonnegative entries.
    pub fn new(name: Option<String>, sigma: i64, b2_plus: Vec<i64>, fpd: FixedPointData) -> Result<Self> {
        if b2_plus.len() as i64 != fpd.p() {
            return Err(Error::InvalidInput(format!(
                "b2+ vector has {} entries, expected p = {}",
                b2_plus.len(),
                fpd.p()
            )));
        }
        if b2_plus.iter().any(|&b| b < 0) {
            return Err(Error::InvalidInput("b2+ entries must be nonnegative".into()));
        }
        Ok(EquivariantManifoldData { name, sigma, b2_plus, fpd })
    }

    /// A homologically trivial action: all of b₂⁺ in slot 0.
    pub fn homologically_trivial(name: Option<String>, sigma: i64, b2_plus: i64, fpd: FixedPointData) -> Result<Self> {
        let mut v = vec![0; fpd.p() as usize];
        v[0] = b2_plus;
        EquivariantManifoldData::new(name, sigma, v, fpd)
    }

    /// b₂⁺(X) = |b⃗₂⁺(X, τ)|.
    pub fn b2_plus_total(&self) -> i64 {
        self.b2_plus.iter().sum()
    }

    /// Whether b₂⁺(X, τ)₀ = b₂⁺(X).
    pub fn is_homologically_trivial(&self) -> bool {
        self.b2_plus[0] == self.b2_plus_total()
    }
}

/// Equivariant connected sum at a fixed point of type (a, b) with S²×S²
/// carrying the rotation action with data (a,b), (a,b), (−a,b), (−a,b).
///
/// One (a, b) of `d` and one (−a, b) of the summand are consumed, so the net
/// change is the cancelling pair (a, b), (−a, b).
pub fn ht_stabilize(d: &FixedPointData, at: (i64, i64)) -> Result<FixedPointData> {
    let (a, b) = at;
    if !d.contains_point(a, b) {
        return Err(Error::NoSuchFixedPoint { a, b });
    }
    d.with_point(a, b)?.with_point(-a, b)
}

/// Homologically trivial stabilization of a manifold: the data as in
/// [`ht_stabilize`], and b₂⁺(X, τ)₀ grows by one.
pub fn ht_stabilize_manifold(m: &EquivariantManifoldData, at: (i64, i64)) -> Result<EquivariantManifoldData> {
    let mut out = m.clone();
    out.fpd = ht_stabilize(&m.fpd, at)?;
    out.b2_plus[0] += 1;
    Ok(out)
}

/// N free stabilizations by p permuted copies of S²×S² each: every
/// b₂⁺(X, τ)_k grows by N; σ and the fixed-point data are unchanged.
pub fn free_stabilize(m: &EquivariantManifoldData, n: i64) -> Result<EquivariantManifoldData> {
    if n < 0 {
        return Err(Error::InvalidInput(format!("number of free stabilizations must be >= 0, got {n}")));
    }
    let mut out = m.clone();
    for b in &mut out.b2_plus {
        *b += n;
    }
    Ok(out)
}

/// The stages of the locally linear action on −E8 # S²×S².
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct E8Construction {
    /// The 24 points of the eight orientation-reversed CP²_{α_i}.
    pub union: FixedPointData,
    /// Cancelling pairs {(a, b), (−a, b)} removed along the chain.
    pub cancelled_pairs: usize,
    /// The 10 remaining points: the action on −E8.
    pub e8: FixedPointData,
    /// After a homologically trivial stabilization at (−2, 3): 12 points.
    pub stabilized: FixedPointData,
}

/// Reversed-orientation data {(a−c, c−b), (b−a, a−c), (a−b, b−c)} of CP²_α.
fn reversed_cp2(a: i64, b: i64, c: i64) -> [(i64, i64); 3] {
    [(a - c, c - b), (b - a, a - c), (a - b, b - c)]
}

/// Builds −E8 from eight copies of CP²_{α_i} with reversed orientation,
/// α_i = (−1, R(i), R(i) + 1), R(i) = i mod (p − 3), joined in a chain:
/// each consecutive pair of copies shares one cancelling pair.
pub fn e8_construction(p: i64) -> Result<E8Construction> {
    check_odd_prime(p)?;
    if p < 5 {
        return Err(Error::InvalidInput(format!("the E8 construction needs p >= 5, got {p}")));
    }
    let mut copies: Vec<Vec<(i64, i64)>> = (1..=8)
        .map(|i| {
            let r = i % (p - 3);
            reversed_cp2(-1, r, r + 1).to_vec()
        })
        .collect();
    let union = FixedPointData::pseudofree(p, copies.concat())?;
    let mut cancelled = 0;
    for i in 0..copies.len() - 1 {
        let mut left: Vec<(usize, (i64, i64))> =
            copies[i].iter().enumerate().map(|(j, &(a, b))| (j, canonical_point(a, b, p))).collect();
        left.sort_by_key(|e| e.1);
        let hit = left.iter().find_map(|&(j, (a, b))| {
            let partner = canonical_point(-a, b, p);
            copies[i + 1]
                .iter()
                .position(|&(x, y)| canonical_point(x, y, p) == partner)
                .map(|k| (j, k))
        });
        let (j, k) = hit.ok_or_else(|| {
            Error::InternalInvariant(format!("no cancelling pair between copies {} and {} at p={p}", i + 1, i + 2))
        })?;
        copies[i].remove(j);
        copies[i + 1].remove(k);
        cancelled += 1;
    }
    let e8 = FixedPointData::pseudofree(p, copies.concat())?;
    let stabilized = ht_stabilize(&e8, (-2, 3))?;
    Ok(E8Construction { union, cancelled_pairs: cancelled, e8, stabilized })
}

/// The 12-point data of −E8 # S²×S².
pub fn e8_fixed_point_data(p: i64) -> Result<FixedPointData> {
    Ok(e8_construction(p)?.stabilized)
}

/// 𝒟(N(2pn), τ_{p,n}) = {(2,3), (2,3), (−2,3)}.
pub fn nucleus_fixed_point_data(p: i64) -> Result<FixedPointData> {
    FixedPointData::pseudofree(p, vec![(2, 3), (2, 3), (-2, 3)])
}

/// 𝒟(P(2pn − p + 1), τ'_{p,n}): the 12-point data with one point of type
/// (2, 3) removed.
pub fn p_family_fixed_point_data(p: i64) -> Result<FixedPointData> {
    e8_fixed_point_data(p)?.without_point(2, 3)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn equivalences() {
        let a = FixedPointData::new(5, vec![(2, 3), (1, 4)], vec![(2, -1)]).unwrap();
        let b = FixedPointData::new(5, vec![(-1, 1), (-3, -2)], vec![(-2, -1)]).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, FixedPointData::new(5, vec![(2, 3), (1, 1)], vec![(2, -1)]).unwrap());
        assert!(matches!(FixedPointData::pseudofree(5, vec![(5, 1)]), Err(Error::NotCoprime(5, 5))));
    }

    #[test]
    fn ht_stabilization_bookkeeping() {
        let d = FixedPointData::pseudofree(7, vec![(2, 3)]).unwrap();
        let s = ht_stabilize(&d, (2, 3)).unwrap();
        assert_eq!(s, FixedPointData::pseudofree(7, vec![(2, 3), (2, 3), (-2, 3)]).unwrap());
        assert_eq!(ht_stabilize(&d, (1, 1)), Err(Error::NoSuchFixedPoint { a: 1, b: 1 }));
    }

    #[test]
    fn free_stabilization() {
        let d = FixedPointData::pseudofree(5, vec![(1, 1)]).unwrap();
        let m = EquivariantManifoldData::homologically_trivial(None, 0, 1, d).unwrap();
        let s = free_stabilize(&m, 2).unwrap();
        assert_eq!(s.b2_plus, vec![3, 2, 2, 2, 2]);
        assert_eq!(s.fpd, m.fpd);
        assert!(!s.is_homologically_trivial());
    }

    #[test]
    fn e8_p11() {
        let c = e8_construction(11).unwrap();
        assert_eq!(c.cancelled_pairs, 7);
        assert_eq!(c.e8.points().len(), 10);
        let want = FixedPointData::pseudofree(
            11,
            vec![
                (1, 1),
                (1, 2),
                (-1, 2),
                (-2, 3),
                (-2, 3),
                (2, 3),
                (-3, 4),
                (-4, 5),
                (-5, 6),
                (-6, 7),
                (-7, 8),
                (-8, 9),
            ],
        )
        .unwrap();
        assert_eq!(c.stabilized, want);
    }
}
