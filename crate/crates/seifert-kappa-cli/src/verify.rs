//! Named verification suites. Each fixture becomes one record with the
//! expected and computed values and a pass flag.

use num_integer::Integer;
use seifert_kappa::eta::{alpha_invariant_lens, alpha_invariant_seifert, correction_term, LensSpaceData};
use seifert_kappa::obstruct::{comparing_identity, e8_construction, ActionFamily, FixedPointData};
use seifert_kappa::seifert::{rotation_number, BrieskornFamily, LineBundleData, SeifertData, SeifertFibration};
use seifert_kappa::sums::{
    cosecant_sum, dedekind_rademacher, dedekind_sum_with, CosecantSumSpec, DedekindRademacherSpec, Method,
};
use seifert_kappa::{CyclotomicValue, Error, Rational};

use crate::commands::sweep;
use crate::output::{Record, Report};
use crate::{parse, Failure};

const PRIMES: &str = "5,7,11,13,17,19,23";

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

fn fixture(suite: &str, name: String, expected: String, actual: String) -> Record {
    let pass = expected == actual;
    Record::new().with("suite", suite).with("fixture", name).with("expected", expected).with("actual", actual).with("pass", pass)
}

fn same(a: &CyclotomicValue, b: &CyclotomicValue) -> bool {
    let m = a.modulus().lcm(&b.modulus());
    (a.embed(m) - b.embed(m)).is_zero()
}

fn is_prime(n: i64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

/// Runs `suite`; the flag is false if any fixture fails.
pub fn run(suite: &str, p: Option<&str>, n: Option<&str>) -> Result<(Report, bool), Failure> {
    let list = |v: Option<&str>, default: &str, what: &str| parse::int_list(v.unwrap_or(default), what);
    let records = match suite {
        "correction-terms" => correction_terms(&list(p, PRIMES, "p")?, &list(n, "1,2", "n")?)?,
        "cosecant-tables" => cosecant_tables()?,
        "alpha-equality" => alpha_equality(&list(p, "5,7,11,13", "p")?, &list(n, "1,2", "n")?)?,
        "rotation-table" => rotation_table(&list(n, "1-5", "n")?)?,
        "comparing" => comparing(&list(p, PRIMES, "p")?, &list(n, "1,2,3", "n")?)?,
        "e8" => e8(&list(p, "5,7,11,13,17", "p")?)?,
        "reciprocity" => reciprocity(*list(p, "31", "p")?.last().unwrap())?,
        other => {
            return Err(Failure::Usage(format!(
                "unknown suite {other:?}; expected correction-terms, cosecant-tables, alpha-equality, \
                 rotation-table, comparing, e8 or reciprocity"
            )))
        }
    };
    let ok = records.iter().all(|r| r.0.iter().any(|(k, v)| k == "pass" && matches!(v, crate::output::Cell::Bool(true))));
    Ok((Report::many(records), ok))
}

fn correction_terms(ps: &[i64], ns: &[i64]) -> Result<Vec<Record>, Failure> {
    let cells: Vec<(i64, i64, bool)> =
        ps.iter().flat_map(|&p| ns.iter().flat_map(move |&n| [(p, n, false), (p, n, true)])).collect();
    sweep(&cells, |&(p, n, second)| {
        let s = if p % 12 == 1 || p % 12 == 5 { 1 } else { -1 };
        let near_one = p % 12 == 1 || p % 12 == 11;
        let (c, want) = match (second, near_one) {
            (false, true) => (12 * p * n - 1, q(p * p - s * 14 * p + 13, 144 * p)),
            (false, false) => (12 * p * n - 1, q(p * p + s * 50 * p + 13, 144 * p)),
            (true, true) => (12 * p * n - 6 * p + 1, q(-p * p + s * 158 * p - 13, 144 * p)),
            (true, false) => (12 * p * n - 6 * p + 1, q(-p * p + s * 94 * p - 13, 144 * p)),
        };
        let got = correction_term(&SeifertData::brieskorn(2, 3, c)?, p, &q(p, 2))?;
        Ok(fixture("correction-terms", format!("n_{{{p}/2}}(sigma(2,3,{c}))"), want.to_string(), got.to_string()))
    })
}

/// (q, r) ↦ (M, D, K, lead, rows): S(q, r, p; −1) = (lead·p² ± c·p + K)/(D·p)
/// for p in the listed classes mod M.
type Table = ((i64, i64), (i64, i64, i64, i64, &'static [&'static str]));

const TABLES: &[Table] = &[
    ((1, 2), (4, 12, -5, -1, &["+ 6 : +1"])),
    ((2, 3), (12, 36, -13, -1, &["+ 14 : +1", "- 50 : +5"])),
    ((-1, 10), (20, 60, 101, 1, &["- 102 : +1", "- 90 : +3 +7", "- 198 : +9"])),
    ((-2, 3), (12, 36, 13, 1, &["- 14 : +1", "+ 50 : +5"])),
    ((-3, 4), (24, 72, 25, 1, &["- 26 : +1", "- 10 : +5", "+ 154 : +7", "- 118 : +11"])),
    ((-4, 5), (40, 120, 41, 1, &["- 42 : +1", "+ 90 : +3 -13", "- 150 : +7 -17", "+ 342 : +9", "- 102 : +11", "+ 282 : +19"])),
    ((-5, 6), (60, 180, 61, 1, &["- 62 : +1", "+ 190 : +7 -17", "+ 638 : +11", "- 350 : +13 -23", "- 98 : +19", "- 478 : +29"])),
    (
        (-6, 7),
        (84, 252, 85, 1, &[
            "- 86 : +1", "- 22 : +5 +17", "- 202 : +11 +23", "+ 1066 : +13",
            "- 554 : +19 +31", "+ 778 : +25 +37", "- 310 : +29", "+ 842 : +41",
        ]),
    ),
    (
        (-7, 8),
        (112, 336, 113, 1, &[
            "- 114 : +1", "+ 258 : +3 +19 -37 -53", "+ 510 : +5 -11 +45 -51", "+ 78 : +9 +25",
            "- 642 : +13 -43", "+ 1650 : +15", "- 498 : +17 +33", "- 846 : +23 +39",
            "- 894 : +27 -29", "+ 1266 : +31 +47", "- 306 : +41", "- 1230 : +55",
        ]),
    ),
    (
        (-8, 9),
        (144, 432, 145, 1, &[
            "- 146 : +1", "- 34 : +5 +29 -43 -67", "+ 466 : +7 -41", "+ 290 : +11 -13 +59 -61",
            "+ 2414 : +17", "- 1118 : +19 -53", "+ 722 : +23 -25", "- 1262 : +31 -65",
            "+ 1442 : +35 -37", "- 1006 : +47 -49", "- 686 : +55", "+ 1874 : +71",
        ]),
    ),
    (
        (-9, 10),
        (180, 540, 181, 1, &[
            "- 182 : +1", "- 650 : +7 +43 +67 -77", "+ 758 : +11 -49", "+ 970 : +13 -23 -47 -83",
            "- 790 : +17 +53", "+ 3382 : +19", "- 1078 : +29 -31", "+ 2410 : +37 +73",
            "- 1942 : +41 -79", "+ 1622 : +59 -61", "- 682 : +71", "- 2518 : +89",
        ]),
    ),
];

fn signed(tok: &str) -> i64 {
    let t: String = tok.chars().filter(|c| !c.is_whitespace()).collect();
    let v: i64 = t[1..].parse().expect("table entries are well formed");
    if t.starts_with('-') {
        -v
    } else {
        v
    }
}

fn cosecant_tables() -> Result<Vec<Record>, Failure> {
    let mut cells = Vec::new();
    for &((qq, r), (m, d, k, lead, rows)) in TABLES {
        for row in rows {
            let (coef, classes) = row.split_once(':').expect("table rows have a colon");
            let coef = signed(coef);
            for cl in classes.split_whitespace() {
                for side in [1, -1] {
                    let res = (side * signed(cl)).rem_euclid(m);
                    let p = (17..).find(|&x| x % m == res && is_prime(x)).expect("primes exist in every unit class");
                    cells.push((qq, r, m, res, p, q(lead * p * p + side * coef * p + k, d * p)));
                }
            }
        }
    }
    let mut out = sweep(&cells, |(qq, r, m, res, p, want)| {
        let got: Rational = cosecant_sum(&CosecantSumSpec::new(*qq, *r, *p, -1), Method::Brute)?;
        Ok(fixture(
            "cosecant-tables",
            format!("S({qq},{r},{p};-1), p = {res} mod {m}"),
            want.to_string(),
            got.to_string(),
        ))
    })?;
    let got: Rational = cosecant_sum(&CosecantSumSpec::new(1, 1, 2, -1), Method::Brute)?;
    out.insert(0, fixture("cosecant-tables", "S(1,1,2;-1)".into(), "-1/2".into(), got.to_string()));
    Ok(out)
}

fn alpha_equality(ps: &[i64], ns: &[i64]) -> Result<Vec<Record>, Failure> {
    let cells: Vec<(i64, i64, i64, i64)> = ps
        .iter()
        .flat_map(|&p| ns.iter().flat_map(move |&n| [(p, n, 12 * p * n - 1, -2), (p, n, 12 * p * n - 6 * p + 1, 2)]))
        .collect();
    sweep(&cells, |&(p, _, c, w)| {
        let lhs = alpha_invariant_seifert(&SeifertData::brieskorn(2, 3, c)?, p)?;
        let rhs = alpha_invariant_lens(&LensSpaceData::new(p, w, 3)?)?;
        let ok = same(&lhs, &rhs);
        Ok(Record::new()
            .with("suite", "alpha-equality")
            .with("fixture", format!("alpha(sigma(2,3,{c})/Z_{p}) = alpha(L({p};{w},3))"))
            .with("expected", "equal")
            .with("actual", if ok { "equal" } else { "different" })
            .with("pass", ok))
    })
}

fn rotation_table(ns: &[i64]) -> Result<Vec<Record>, Failure> {
    let mut out = Vec::new();
    for f in BrieskornFamily::ALL {
        let c = match f {
            BrieskornFamily::Plus5 => 1,
            BrieskornFamily::Minus5 => 11,
            BrieskornFamily::Minus1 => 7,
            BrieskornFamily::Plus1 => 5,
        };
        for &n in ns.iter().filter(|&&n| n >= 1) {
            let fib = SeifertFibration::of_homology_sphere(&f.seifert(n)?);
            for k in 0..n {
                let rot = rotation_number(&fib, &LineBundleData::new(0, vec![0, 0, k]))?;
                out.push(fixture(
                    "rotation-table",
                    format!("rot(0;0,0,{k}) on sigma(2,3,{})", f.third_fiber(n)),
                    q(-(12 * (n - k) - c), 2).to_string(),
                    rot.to_string(),
                ));
            }
        }
    }
    Ok(out)
}

fn comparing(ps: &[i64], ns: &[i64]) -> Result<Vec<Record>, Failure> {
    let cells: Vec<(i64, i64, ActionFamily)> = ps
        .iter()
        .flat_map(|&p| ns.iter().flat_map(move |&n| [(p, n, ActionFamily::N), (p, n, ActionFamily::P)]))
        .collect();
    sweep(&cells, |&(p, n, f)| {
        let c = comparing_identity(f, n, p)?;
        Ok(fixture(
            "comparing",
            format!("S0/8 + n_{{p/2}}, family {f}, p={p}, n={n}"),
            c.expected.to_string(),
            c.offset.to_string(),
        ))
    })
}

fn lemma_list(p: i64) -> Vec<(i64, i64)> {
    match p {
        5 => [vec![(1, 1); 4], vec![(1, 2), (-1, 2)], vec![(-2, 3); 5], vec![(2, 3)]].concat(),
        7 => [vec![(1, 1); 2], vec![(1, 2), (-1, 2)], vec![(-2, 3); 5], vec![(2, 3), (3, 3), (3, 3)]].concat(),
        11 => vec![(1, 1), (1, 2), (-1, 2), (-2, 3), (-2, 3), (2, 3), (-3, 4), (-4, 5), (-5, 6), (-6, 7), (-7, 8), (-8, 9)],
        _ => vec![(1, 2), (-1, 10), (-2, 3), (-2, 3), (2, 3), (-3, 4), (-4, 5), (-5, 6), (-6, 7), (-7, 8), (-8, 9), (-9, 10)],
    }
}

fn e8(ps: &[i64]) -> Result<Vec<Record>, Failure> {
    let show = |v: &[(i64, i64)]| v.iter().map(|(a, b)| format!("({a},{b})")).collect::<Vec<_>>().join(" ");
    let mut out = Vec::new();
    for &p in ps {
        let c = e8_construction(p)?;
        out.push(fixture("e8", format!("cancelled pairs, p={p}"), "7".into(), c.cancelled_pairs.to_string()));
        let mut want = FixedPointData::pseudofree(p, lemma_list(p))?.canonical_points();
        let mut got = c.stabilized.canonical_points();
        want.sort_unstable();
        got.sort_unstable();
        out.push(fixture("e8", format!("stabilized E8 data, p={p}"), show(&want), show(&got)));
    }
    Ok(out)
}

/// Outcome of one brute-versus-reciprocity comparison.
enum Outcome {
    Agree,
    Skipped,
    Mismatch(String),
}

fn outcome(equal: bool, name: impl FnOnce() -> String) -> Outcome {
    if equal {
        Outcome::Agree
    } else {
        Outcome::Mismatch(name())
    }
}

fn tally(name: &str, outcomes: Vec<Outcome>) -> Record {
    let agree = outcomes.iter().filter(|o| matches!(o, Outcome::Agree)).count();
    let skipped = outcomes.iter().filter(|o| matches!(o, Outcome::Skipped)).count();
    let bad: Vec<String> =
        outcomes.into_iter().filter_map(|o| if let Outcome::Mismatch(s) = o { Some(s) } else { None }).collect();
    let checked = agree + bad.len();
    Record::new()
        .with("suite", "reciprocity")
        .with("fixture", format!("{name} ({skipped} outside the reciprocity domain)"))
        .with("expected", format!("{checked} agreements"))
        .with("actual", format!("{agree} agreements"))
        .with("mismatches", bad.clone())
        .with("pass", bad.is_empty())
}

fn reciprocity(pmax: i64) -> Result<Vec<Record>, Failure> {
    let pairs: Vec<(i64, i64)> =
        (1..=pmax).flat_map(|a| (-2 * a..=2 * a).map(move |b| (b, a))).filter(|(b, a)| b.gcd(a) == 1).collect();
    let dedekind = sweep(&pairs, |&(b, a)| {
        let x: Rational = dedekind_sum_with(b, a, Method::Brute)?;
        let y: Rational = dedekind_sum_with(b, a, Method::Reciprocity)?;
        Ok(outcome(x == y, || format!("s({b},{a})")))
    })?;
    let shifts: Vec<(i64, i64, i64, i64)> = (1..=pmax.min(40))
        .flat_map(|a| (a + 1..=a + 12).flat_map(move |b| (1..6).flat_map(move |d| (0..d).map(move |j| (b, a, j, d)))))
        .filter(|&(b, a, j, d)| b.gcd(&a) == 1 && j.gcd(&d) == 1)
        .collect();
    let rademacher = sweep(&shifts, |&(b, a, j, d)| {
        let y = q(j, d);
        let x = (q(1, 1) - Rational::from_integer(b.into()) * &y) / Rational::from_integer(a.into());
        if x.is_integer() && y.is_integer() {
            return Ok(Outcome::Skipped);
        }
        let spec = DedekindRademacherSpec::new(b, a, x.clone(), y.clone());
        let u: Rational = dedekind_rademacher(&spec, Method::Brute)?;
        let v: Rational = dedekind_rademacher(&spec, Method::Reciprocity)?;
        Ok(outcome(u == v, || format!("s({b},{a};{x},{y})")))
    })?;
    let specs: Vec<CosecantSumSpec> = (2..=pmax)
        .flat_map(|p| {
            (-p..=p).flat_map(move |qq| (1..=p).flat_map(move |r| [1, -1].map(|e| CosecantSumSpec::new(qq, r, p, e))))
        })
        .filter(|s| s.q.gcd(&s.p) == 1 && s.r.gcd(&s.p) == 1)
        .collect();
    let cosecant = sweep(&specs, |s| {
        let v = match cosecant_sum::<Rational>(s, Method::Reciprocity) {
            Ok(v) => v,
            Err(Error::ParityObstruction { .. }) => return Ok(Outcome::Skipped),
            Err(e) => return Err(e),
        };
        let u: Rational = cosecant_sum(s, Method::Brute)?;
        Ok(outcome(u == v, || format!("S({},{},{};{})", s.q, s.r, s.p, s.eps)))
    })?;
    Ok(vec![
        tally("dedekind brute vs reciprocity", dedekind),
        tally("rademacher brute vs reciprocity", rademacher),
        tally("cosecant brute vs reciprocity", cosecant),
    ])
}
