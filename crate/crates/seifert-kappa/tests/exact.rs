//! Field axioms of the cyclotomic arithmetic and exact trigonometric values
//! against an independent high-precision evaluation.

use num_rational::Ratio;
use proptest::prelude::*;
use seifert_kappa::exact::numeric::{evaluate, rational_approx, trig_numeric};
use seifert_kappa::exact::{rat, trig_value, Cyclotomic, Scalar, TrigKind};
use seifert_kappa::{CyclotomicValue, Rational};

const MODULI: [u64; 12] = [1, 2, 3, 4, 5, 8, 12, 15, 24, 60, 360, 720];

fn element(m: u64) -> impl Strategy<Value = CyclotomicValue> {
    prop::collection::vec((0..m as i64, -9i64..10, 1i64..6), 0..5).prop_map(move |terms| {
        let raw: Vec<(i64, Rational)> = terms.into_iter().map(|(k, n, d)| (k, rat(n, d))).collect();
        Cyclotomic::from_coeffs(m, &raw)
    })
}

fn triple() -> impl Strategy<Value = (CyclotomicValue, CyclotomicValue, CyclotomicValue)> {
    prop::sample::select(MODULI.to_vec()).prop_flat_map(|m| (element(m), element(m), element(m)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn ring_axioms((a, b, c) in triple()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &Cyclotomic::one(a.modulus()), a.clone());
    }

    #[test]
    fn galois_and_embedding_are_homomorphisms((a, b, _c) in triple(), j in 1i64..720, f in 1u64..4) {
        let m = a.modulus() as i64;
        let j = (1..=m).map(|t| (j + t) % m.max(1)).find(|t| num_integer::Integer::gcd(t, &m) == 1).unwrap_or(1);
        prop_assert_eq!((&a * &b).galois(j).unwrap(), &a.galois(j).unwrap() * &b.galois(j).unwrap());
        prop_assert_eq!((&a + &b).galois(j).unwrap(), &a.galois(j).unwrap() + &b.galois(j).unwrap());
        prop_assert_eq!(a.conj().conj(), a.clone());
        let m2 = a.modulus() * f;
        prop_assert_eq!((&a * &b).embed(m2), &a.embed(m2) * &b.embed(m2));
        prop_assert_eq!(a.embed(m2), a.clone());
    }

    #[test]
    fn fixed_width_scalar_agrees_with_big((a, b, _c) in triple()) {
        let a64: Cyclotomic<Ratio<i64>> = a.convert().unwrap();
        let b64: Cyclotomic<Ratio<i64>> = b.convert().unwrap();
        let prod: Cyclotomic<Ratio<i128>> = (&a * &b).convert().unwrap();
        prop_assert_eq!((&a64 * &b64).convert::<Ratio<i128>>().unwrap(), prod);
    }
}

#[test]
fn trig_values_match_hundred_digit_evaluation() {
    let kinds = [TrigKind::Cot, TrigKind::Csc, TrigKind::Csc2, TrigKind::Cos, TrigKind::Sin, TrigKind::ExpIPi];
    for b in [1, 2, 3, 5, 7, 9, 12, 13, 30] {
        for a in -b..=2 * b {
            for kind in kinds {
                let Some(num) = trig_numeric(kind, a, b, 100) else {
                    assert!(trig_value::<Rational>(kind, a, b).is_err(), "{} {a}/{b}", kind.name());
                    continue;
                };
                let exact = trig_value::<Rational>(kind, a, b).unwrap();
                assert!(evaluate(&exact, 100).close_to(&num, 95), "{} {a}/{b}", kind.name());
            }
        }
    }
}

#[test]
fn csc_squared_power_sum() {
    // Σ_{k=1}^{n−1} csc²(kπ/n) = (n² − 1)/3.
    for n in 2..=24 {
        let mut acc = Cyclotomic::zero(TrigKind::Csc2.natural_modulus(n));
        for k in 1..n {
            acc = acc + trig_value::<Rational>(TrigKind::Csc2, k, n).unwrap();
        }
        assert_eq!(acc.as_rational().unwrap(), rat(n * n - 1, 3));
    }
}

#[test]
fn rational_values_collapse() {
    let v = trig_value::<Rational>(TrigKind::Cot, 1, 3).unwrap().pow(2);
    assert_eq!(v.as_rational().unwrap(), rat(1, 3));
    assert!(evaluate(&v, 100).close_to(&rational_approx(&rat(1, 3), 100), 98));
    assert!(trig_value::<Rational>(TrigKind::Cot, 1, 3).unwrap().as_rational().is_err());
    assert_eq!(Rational::from_frac(6, -4), rat(-3, 2));
}
