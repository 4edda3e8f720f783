//! Kappa sets against the classification table and the catalog gradings.

use proptest::prelude::*;
use seifert_kappa::exact::rat;
use seifert_kappa::kappa::*;
use seifert_kappa::seifert::BrieskornFamily;
use seifert_kappa::Rational;

const PRIMES: [i64; 8] = [3, 5, 7, 11, 13, 17, 19, 23];

fn coprime_to_fibers(f: BrieskornFamily, n: i64, p: i64) -> bool {
    p > 3 && f.third_fiber(n) % p != 0
}

#[test]
fn multiplicity_table_matches_rotation_mechanism() {
    for f in [BrieskornFamily::Minus5, BrieskornFamily::Minus1] {
        for side in [Orientation::Plus, Orientation::Minus] {
            for &p in &PRIMES {
                for n in 1..=6 {
                    let off = kappa_offsets(f, side, n, p).unwrap();
                    let table = has_multiple_elements(f, side, n, p).unwrap();
                    assert_eq!(off.projected.len() > 1, table, "{side} {f} n={n} p={p}");
                    if coprime_to_fibers(f, n, p) {
                        let k = kappa_set(f, side, n, p).unwrap();
                        assert_eq!(k.multiplicity() > 1, table);
                    }
                }
            }
        }
    }
}

fn expected_kappa(f: BrieskornFamily, side: Orientation) -> Rational {
    use BrieskornFamily::*;
    use Orientation::*;
    match (f, side) {
        (Minus1, Plus) => rat(2, 1),
        (Minus1, Minus) => rat(0, 1),
        (Minus5, _) => rat(1, 1),
        (Plus5, Plus) => rat(1, 1),
        (Plus5, Minus) => rat(-1, 1),
        (Plus1, _) => rat(0, 1),
    }
}

#[test]
fn gradings_equal_kappa() {
    for f in BrieskornFamily::ALL {
        for side in [Orientation::Plus, Orientation::Minus] {
            for p in [5, 7, 11] {
                for n in f.min_n().max(1)..=3 {
                    if !coprime_to_fibers(f, n, p) {
                        continue;
                    }
                    let k = kappa_set(f, side, n, p).unwrap();
                    assert_eq!(k.common_grading(), Some(expected_kappa(f, side)), "{side} {f} n={n} p={p}");
                    for r in &k.representatives {
                        assert_eq!(r.grading(), expected_kappa(f, side));
                    }
                }
            }
        }
    }
}

#[test]
fn minus_side_slice_satisfies_constraint() {
    let f = BrieskornFamily::Minus5;
    let k = kappa_set(f, Orientation::Minus, 3, 7).unwrap();
    let counts = k.counts.clone().unwrap();
    let y = f.seifert(3).unwrap();
    let (nv, _) = n_vector(&y, 7).unwrap();
    let floor: Vec<i64> = counts.iter().enumerate().map(|(j, &c)| if j == 0 { 0 } else { -c }).collect();
    let floor = PosetVector::from_ints(&floor).unwrap();
    for r in &k.representatives {
        let a = r - &nv;
        let half = PosetVector::new(a.entries().iter().map(|v| v / Rational::from_integer(2.into())).collect()).unwrap();
        assert!(half >= floor);
        assert_eq!(half.grading(), rat(0, 1));
    }
}

#[test]
fn n_vector_of_reversed_sphere() {
    let y = BrieskornFamily::Minus1.seifert(2).unwrap();
    let (full, proj) = n_vector(&y, 7).unwrap();
    let (rf, rp) = n_vector_reversed(&y, 7).unwrap();
    assert_eq!(&full + &rf, PosetVector::zero(7));
    assert_eq!(&proj + &rp, PosetVector::zero(2));
}

proptest! {
    #[test]
    fn counts_partition_n(n in 1i64..40, pi in 1usize..8) {
        let p = PRIMES[pi];
        let a: i64 = (0..p).map(|j| count_a(n, p, j)).sum();
        let b: i64 = (0..p).map(|j| count_b(n, p, j)).sum();
        prop_assert_eq!(a, n);
        prop_assert_eq!(b, n);
    }

    #[test]
    fn doubling_preserves_grading(entries in prop::collection::vec(-50i64..50, 7), odd in any::<bool>()) {
        let v = PosetVector::from_ints(&entries).unwrap();
        let kind = if odd { LiftParity::Odd } else { LiftParity::Even };
        let d = doubling_map(kind, &v, 7).unwrap();
        prop_assert_eq!(d.grading(), v.grading());
        prop_assert_eq!(d.project().grading(), v.grading());
    }
}
