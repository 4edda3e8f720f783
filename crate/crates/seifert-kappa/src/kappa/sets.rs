//! The vectors n⃗(Y, p), the counting functions A and B, and the kappa sets
//! of the Brieskorn families Σ(2, 3, 12n + c) with the standard Z/p action.

use std::fmt;
use std::str::FromStr;

use super::poset::{doubling_map, LiftParity, PosetVector};
use crate::error::{Error, Result};
use crate::eta::correction_vector;
use crate::exact::poly::is_prime;
use crate::exact::Scalar;
use crate::seifert::{brieskorn_components, BrieskornFamily, SeifertData};
use crate::Rational;

/// Orientation of the boundary: Y or −Y.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Orientation {
    /// Y with its given orientation.
    Plus,
    /// −Y.
    Minus,
}

impl Orientation {
    /// +1 or −1.
    pub fn sign(self) -> i64 {
        match self {
            Orientation::Plus => 1,
            Orientation::Minus => -1,
        }
    }
}

impl fmt::Display for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Orientation::Plus => "plus",
            Orientation::Minus => "minus",
        })
    }
}

impl FromStr for Orientation {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "plus" | "+" => Ok(Orientation::Plus),
            "minus" | "-" => Ok(Orientation::Minus),
            _ => Err(Error::InvalidInput(format!("side must be plus or minus, got {s:?}"))),
        }
    }
}

fn check_odd_prime(p: i64) -> Result<()> {
    if p < 3 || !is_prime(p as u64) {
        return Err(Error::OutsideClassifiedRange(format!("p = {p} is not an odd prime")));
    }
    Ok(())
}

/// n⃗(Y, p) = 𝔇*(n⃗(Y, ρ̂_p, g, ∇^∞)) ∈ Q^p and its projection n⃗^π(Y, p) ∈ Q².
///
/// The correction term n_L sits in slot L of the even or odd lift and is
/// carried by the doubling map to index 2L mod p.
pub fn n_vector(y: &SeifertData, p: i64) -> Result<(PosetVector, PosetVector)> {
    check_odd_prime(p)?;
    let v = correction_vector(y, p)?;
    let kind = if y.has_even_fiber() { LiftParity::Odd } else { LiftParity::Even };
    let slots = PosetVector::new(v.entries().iter().map(|(_, n)| n.clone()).collect())?;
    let full = doubling_map(kind, &slots, p)?;
    let projected = full.project();
    Ok((full, projected))
}

/// n⃗(−Y, p) = −n⃗(Y, p), with the projection.
pub fn n_vector_reversed(y: &SeifertData, p: i64) -> Result<(PosetVector, PosetVector)> {
    let (full, projected) = n_vector(y, p)?;
    Ok((-&full, -&projected))
}

fn count(n: i64, p: i64, j: i64, c: i64) -> i64 {
    (1..=n).filter(|k| (12 * k - (c - j)).rem_euclid(p) == 0).count() as i64
}

/// A_{n,p,j} = #{1 ≤ k ≤ n : 12k ≡ 11 − j (mod p)}.
pub fn count_a(n: i64, p: i64, j: i64) -> i64 {
    count(n, p, j, 11)
}

/// B_{n,p,j} = #{1 ≤ k ≤ n : 12k ≡ 7 − j (mod p)}.
pub fn count_b(n: i64, p: i64, j: i64) -> i64 {
    count(n, p, j, 7)
}

/// The part of a kappa set that does not depend on n⃗: the set is
/// {o + sign·n⃗(Y, p) : o ∈ offsets}, where Y is the positively oriented sphere.
#[derive(Clone, Debug, PartialEq)]
pub struct KappaOffsets {
    /// Offsets in Q^p, sorted.
    pub representatives: Vec<PosetVector>,
    /// Their distinct projections in Q², sorted.
    pub projected: Vec<PosetVector>,
    /// The sign of n⃗(Y, p) in the set.
    pub n_sign: i64,
    /// For −Y in the non-split families, n_j = #{k : 2r_k ≡ j (mod p)}.
    pub counts: Option<Vec<i64>>,
}

fn sorted_dedup(mut v: Vec<PosetVector>) -> Vec<PosetVector> {
    v.sort_by(|a, b| a.entries().cmp(b.entries()));
    v.dedup();
    v
}

fn check_domain(family: BrieskornFamily, n: i64, p: i64) -> Result<()> {
    check_odd_prime(p)?;
    if n < family.min_n() {
        return Err(Error::OutsideClassifiedRange(format!("family {family} needs n >= {}, got {n}", family.min_n())));
    }
    Ok(())
}

/// Doubled rotation numbers 2r_k of the n irreducible components.
fn doubled_rotations(family: BrieskornFamily, n: i64) -> Result<Vec<i64>> {
    brieskorn_components(family, n)?
        .into_iter()
        .map(|(_, r)| {
            let d = r * Rational::from_int(2);
            d.to_i64_exact().ok_or_else(|| Error::InternalInvariant(format!("rotation {d}/2 not a half-integer")))
        })
        .collect()
}

/// The offsets of K(±Y, ρ_p) for Y = Σ(2, 3, 12n + c).
///
/// For Y in the families 12n − 5 and 12n − 1 the offsets come from the
/// rotation numbers: if every 2r_k ≡ ±2r_1 (mod p) they are
/// {2e₀, 2e_{2r₁}, 2e_{p−2r₁}}, otherwise {2e₀}. For −Y they are
/// 2(a⃗ − (n₀, …, n_{p−1})) over the canonical slice a⃗ = (n₀ + k, n − n₀ − k, 0, …),
/// 0 ≤ k ≤ n − n₀. The families 12n + 5 and 12n + 1 are split.
pub fn kappa_offsets(family: BrieskornFamily, orientation: Orientation, n: i64, p: i64) -> Result<KappaOffsets> {
    check_domain(family, n, p)?;
    let dim = p as usize;
    let split = matches!(family, BrieskornFamily::Plus5 | BrieskornFamily::Plus1);
    let (reps, counts) = if split {
        (vec![PosetVector::zero(dim)], None)
    } else {
        let rots = doubled_rotations(family, n)?;
        match orientation {
            Orientation::Plus => {
                let c = rots[rots.len() - 1].rem_euclid(p);
                let dagger = rots.iter().all(|r| {
                    let r = r.rem_euclid(p);
                    r == c || r == (p - c) % p
                });
                let mut reps = vec![PosetVector::basis(dim, 0, 2)?];
                if dagger {
                    reps.push(PosetVector::basis(dim, c as usize, 2)?);
                    reps.push(PosetVector::basis(dim, ((p - c) % p) as usize, 2)?);
                }
                (reps, None)
            }
            Orientation::Minus => {
                let mut counts = vec![0i64; dim];
                for r in &rots {
                    counts[r.rem_euclid(p) as usize] += 1;
                }
                let expected: Vec<i64> = (0..p)
                    .map(|j| if family == BrieskornFamily::Minus5 { count_a(n, p, j) } else { count_b(n, p, j) })
                    .collect();
                if counts != expected {
                    return Err(Error::InternalInvariant(format!(
                        "rotation counts {counts:?} disagree with the counting function {expected:?}"
                    )));
                }
                let n0 = counts[0];
                let base = PosetVector::from_ints(&counts)?;
                let reps = (0..=n - n0)
                    .map(|k| {
                        let mut a = vec![0i64; dim];
                        a[0] = n0 + k;
                        a[1] += n - n0 - k;
                        let a = PosetVector::from_ints(&a)?;
                        Ok((&a - &base).scale(2))
                    })
                    .collect::<Result<Vec<_>>>()?;
                (reps, Some(counts))
            }
        }
    };
    let reps = sorted_dedup(reps);
    let projected = sorted_dedup(reps.iter().map(PosetVector::project).collect());
    Ok(KappaOffsets { representatives: reps, projected, n_sign: -orientation.sign(), counts })
}

/// K(±Y, ρ_p) and K^π(±Y, ρ_p) for Y = Σ(2, 3, 12n + c).
///
/// For −Y in the non-split families the representatives are the canonical
/// finite slice described in [`kappa_offsets`]; K^π is complete.
#[derive(Clone, Debug, PartialEq)]
pub struct KappaSet {
    /// The prime p.
    pub p: i64,
    /// The family.
    pub family: BrieskornFamily,
    /// Y or −Y.
    pub orientation: Orientation,
    /// The family parameter n.
    pub n: i64,
    /// Representatives in Q^p, sorted.
    pub representatives: Vec<PosetVector>,
    /// K^π ⊂ Q², sorted.
    pub projected: Vec<PosetVector>,
    /// The counts n_j for −Y in the non-split families.
    pub counts: Option<Vec<i64>>,
}

impl KappaSet {
    /// |K^π|.
    pub fn multiplicity(&self) -> usize {
        self.projected.len()
    }

    /// The common grading of the elements of K^π, if they share one.
    pub fn common_grading(&self) -> Option<Rational> {
        let g = self.projected.first()?.grading();
        self.projected.iter().all(|v| v.grading() == g).then_some(g)
    }
}

/// Computes the kappa set. Needs gcd(p, 6(12n + c)) = 1 so that n⃗(Y, p) exists.
pub fn kappa_set(family: BrieskornFamily, orientation: Orientation, n: i64, p: i64) -> Result<KappaSet> {
    let off = kappa_offsets(family, orientation, n, p)?;
    let y = family.seifert(n)?;
    let (nv, _) = n_vector(&y, p)?;
    let shift = nv.scale(off.n_sign);
    let representatives = sorted_dedup(off.representatives.iter().map(|o| o + &shift).collect());
    let projected = sorted_dedup(representatives.iter().map(PosetVector::project).collect());
    let expected = sorted_dedup(off.projected.iter().map(|o| o + &shift.project()).collect());
    if projected != expected {
        return Err(Error::InternalInvariant("projection does not commute with the shift".into()));
    }
    Ok(KappaSet { p, family, orientation, n, representatives, projected, counts: off.counts })
}

/// Whether K^π(±Σ(2, 3, 12n − 5)) or K^π(±Σ(2, 3, 12n − 1)) has more than
/// one element, by the classification table.
pub fn has_multiple_elements(family: BrieskornFamily, orientation: Orientation, n: i64, p: i64) -> Result<bool> {
    check_domain(family, n, p)?;
    use BrieskornFamily::*;
    use Orientation::*;
    match (family, orientation) {
        (Minus5, Plus) => Ok(p == 3 || n == 1 || (n, p) == (2, 7)),
        (Minus1, Plus) => Ok(p == 3 || (p >= 7 && n == 1) || (n, p) == (2, 11)),
        (Minus5, Minus) => Ok(true),
        (Minus1, Minus) => Ok((n, p) != (1, 5)),
        _ => Err(Error::OutsideClassifiedRange(format!("family {family} is split; its kappa set is a singleton"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn counting_examples() {
        assert_eq!(count_b(1, 5, 0), 1);
        assert_eq!(count_a(1, 7, 0), 0);
        for p in [5, 7, 11, 13] {
            assert_eq!(count_b(p * 3, p, 0), 3);
        }
    }

    #[test]
    fn n_vector_grading_and_sign() {
        let y = SeifertData::brieskorn(2, 3, 59).unwrap();
        let (full, proj) = n_vector(&y, 5).unwrap();
        let total = correction_vector(&y, 5).unwrap().total();
        assert_eq!(full.grading(), total);
        assert_eq!(proj.grading(), total);
        assert_eq!(proj.entries()[0], full.entries()[0]);
        assert_eq!(n_vector_reversed(&y, 5).unwrap().1, -&proj);
    }

    #[test]
    fn dagger_case_for_sigma_2_3_7() {
        let k = kappa_set(BrieskornFamily::Minus5, Orientation::Plus, 1, 5).unwrap();
        let (_, np) = n_vector(&SeifertData::brieskorn(2, 3, 7).unwrap(), 5).unwrap();
        let want = sorted_dedup(vec![
            &PosetVector::from_ints(&[2, 0]).unwrap() - &np,
            &PosetVector::from_ints(&[0, 2]).unwrap() - &np,
        ]);
        assert_eq!(k.projected, want);
        assert_eq!(k.representatives.len(), 3);
        assert_eq!(k.common_grading(), Some(rat(1, 1)));
    }

    #[test]
    fn split_family_singleton() {
        let k = kappa_set(BrieskornFamily::Plus5, Orientation::Plus, 1, 5).unwrap();
        let (nv, _) = n_vector(&SeifertData::brieskorn(2, 3, 17).unwrap(), 5).unwrap();
        assert_eq!(k.representatives, vec![-&nv]);
    }

    #[test]
    fn minus_side_projection() {
        let k = kappa_set(BrieskornFamily::Minus1, Orientation::Minus, 2, 7).unwrap();
        let (_, np) = n_vector(&SeifertData::brieskorn(2, 3, 23).unwrap(), 7).unwrap();
        let b0 = count_b(2, 7, 0);
        let want: Vec<PosetVector> = (0..=2 - b0)
            .map(|k| &PosetVector::from_ints(&[2 * k, -2 * k]).unwrap() + &np)
            .collect();
        assert_eq!(k.projected, sorted_dedup(want));
        assert_eq!(k.counts.as_ref().unwrap().iter().sum::<i64>(), 2);
    }

    #[test]
    fn table_rejects_split_and_bad_p() {
        assert!(matches!(
            has_multiple_elements(BrieskornFamily::Plus1, Orientation::Plus, 1, 5),
            Err(Error::OutsideClassifiedRange(_))
        ));
        assert!(has_multiple_elements(BrieskornFamily::Minus1, Orientation::Plus, 1, 9).is_err());
        assert!(!has_multiple_elements(BrieskornFamily::Minus1, Orientation::Minus, 1, 5).unwrap());
        assert!(has_multiple_elements(BrieskornFamily::Minus1, Orientation::Plus, 2, 11).unwrap());
    }
}
