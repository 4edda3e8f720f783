//! One function per subcommand.

use rayon::prelude::*;
use seifert_kappa::eta::{
    alpha_invariant_lens, alpha_invariant_seifert, correction_term, correction_vector, eta_sign as eta_sign_value,
    LensSpaceData,
};
use seifert_kappa::kappa::{kappa_set, PosetVector};
use seifert_kappa::obstruct::{
    cobordism_verdict, e8_construction, h_cobordism_check, min_free_stabilizations, nonextension_verdict,
    sigma0_via_cosecant, sigma_vector, ActionFamily, Boundary, CobordismEntry, FixedPointData, ManifoldCatalogEntry,
    VerdictReport,
};
use seifert_kappa::seifert::{
    brieskorn_components, rotation_number, rotation_table_value, BrieskornFamily, LineBundleData, SeifertFibration,
};
use seifert_kappa::sums::{
    cosecant_sum, dedekind_dieter, dedekind_rademacher, dedekind_sum_with, CosecantSumSpec, DedekindDieterSpec,
    DedekindRademacherSpec, Method,
};
use seifert_kappa::{Error, Rational};

use crate::output::{Cell, Record, Report};
use crate::parse;
use crate::*;

fn method(s: &str) -> Result<Method, Failure> {
    s.parse().map_err(|_| Failure::Usage(format!("--method: expected brute or reciprocity, got {s:?}")))
}

/// Runs `f` over `cells` in parallel, keeping input order.
pub fn sweep<K: Sync, T: Send>(cells: &[K], f: impl Fn(&K) -> Result<T, Error> + Sync) -> Result<Vec<T>, Failure> {
    let out: Vec<Result<T, Error>> = cells.par_iter().map(&f).collect();
    out.into_iter().map(|r| r.map_err(Failure::from)).collect()
}

fn grid(a: &[i64], b: &[i64]) -> Vec<(i64, i64)> {
    a.iter().flat_map(|&x| b.iter().map(move |&y| (x, y))).collect()
}

pub fn sum(a: SumArgs) -> Result<Report, Failure> {
    let m = method(&a.method)?;
    let ctx = format!("sum --family {}", a.family);
    let rec = Record::new().with("family", a.family.as_str()).with("method", m.to_string());
    let rec = match a.family.as_str() {
        "dedekind" => {
            let (b, n) = (parse::required(a.b, "b", &ctx)?, parse::required(a.a, "a", &ctx)?);
            let v: Rational = dedekind_sum_with(b, n, m)?;
            rec.with("b", b).with("a", n).with("value", v)
        }
        "rademacher" | "dieter" => {
            let (b, n) = (parse::required(a.b, "b", &ctx)?, parse::required(a.a, "a", &ctx)?);
            let x = parse::rational(&parse::required(a.x, "x", &ctx)?, "x")?;
            let y = parse::rational(&parse::required(a.y, "y", &ctx)?, "y")?;
            let rec = rec.with("b", b).with("a", n).with("x", x.clone()).with("y", y.clone());
            if a.family == "rademacher" {
                rec.with("value", dedekind_rademacher::<Rational>(&DedekindRademacherSpec::new(b, n, x, y), m)?)
            } else {
                rec.with("value", dedekind_dieter::<Rational>(&DedekindDieterSpec::new(b, n, x, y), m)?)
            }
        }
        "cosecant" => {
            let q = parse::required(a.q, "q", &ctx)?;
            let r = parse::required(a.r, "r", &ctx)?;
            let p = parse::required(a.p, "p", &ctx)?;
            let eps = parse::required(a.eps, "eps", &ctx)?;
            let v: Rational = cosecant_sum(&CosecantSumSpec::new(q, r, p, eps), m)?;
            rec.with("q", q).with("r", r).with("p", p).with("eps", eps).with("value", v)
        }
        other => {
            return Err(Failure::Usage(format!(
                "--family: expected dedekind, rademacher, dieter or cosecant, got {other:?}"
            )))
        }
    };
    Ok(Report::one(rec))
}

pub fn eta_sign(a: EtaSignArgs) -> Result<Report, Failure> {
    let y = parse::seifert(&a.seifert)?;
    let v = eta_sign_value(&y, a.r, a.q)?;
    Ok(Report::one(Record::new().with("seifert", y.to_string()).with("r", a.r).with("q", a.q).with("value", v)))
}

pub fn alpha(a: AlphaArgs) -> Result<Report, Failure> {
    match (a.seifert, a.lens) {
        (Some(s), None) => {
            let y = parse::seifert(&s)?;
            let r = parse::required(a.r, "r", "alpha --seifert")?;
            let v = alpha_invariant_seifert(&y, r)?;
            Ok(Report::one(Record::new().with("seifert", y.to_string()).with("r", r).with("value", v)))
        }
        (None, Some(l)) => {
            let w = parse::ints(&l, 3, "lens")?;
            let lens = LensSpaceData::new(w[0], w[1], w[2])?;
            let v = alpha_invariant_lens(&lens)?;
            Ok(Report::one(Record::new().with("lens", lens.to_string()).with("value", v)))
        }
        _ => Err(Failure::Usage("alpha needs exactly one of --seifert (with --r) or --lens p,a,b".into())),
    }
}

pub fn correction(a: CorrectionArgs) -> Result<Report, Failure> {
    let y = parse::seifert(&a.seifert)?;
    let base = Record::new().with("seifert", y.to_string()).with("r", a.r);
    if let Some(l) = a.l {
        let l = parse::rational(&l, "L")?;
        let v = correction_term(&y, a.r, &l)?;
        return Ok(Report::one(base.with("L", l).with("value", v)));
    }
    let v = correction_vector(&y, a.r)?;
    let records = v.entries().iter().map(|(l, n)| base.clone().with("L", l.clone()).with("value", n.clone())).collect();
    Ok(Report::many(records))
}

/// The c in −½(12(n − k) − c) for each family row.
fn table_constant(f: BrieskornFamily) -> i64 {
    match f {
        BrieskornFamily::Plus5 => 1,
        BrieskornFamily::Minus5 => 11,
        BrieskornFamily::Minus1 => 7,
        BrieskornFamily::Plus1 => 5,
    }
}

fn rotation_tex() -> Result<String, Failure> {
    for f in BrieskornFamily::ALL {
        for n in 1..=5 {
            for (k, (_, rot)) in brieskorn_components(f, n)?.into_iter().enumerate() {
                let k = k as i64;
                let want = Rational::new((-(12 * (n - k) - table_constant(f))).into(), 2.into());
                if rot != want || rotation_table_value(f, n, k) != want {
                    return Err(Failure::Domain(format!("rotation table mismatch: {f} n={n} k={k}")));
                }
            }
        }
    }
    let mut s = String::from("\\begin{center}\n\\begin{tabular}{|c|c|c|}\n\\hline\n");
    s += "$Y$ & $E$ & $\\rot(E)$ \\\\ \\hline\n";
    for f in [BrieskornFamily::Plus5, BrieskornFamily::Minus5, BrieskornFamily::Minus1, BrieskornFamily::Plus1] {
        let c = f.offset();
        let sign = if c < 0 { "-" } else { "+" };
        s += &format!(
            "$\\Sigma(2,3,12n{sign}{})$ & $(0;0,0,k),\\;0\\le k\\le n-1$ & $-\\tfrac{{1}}{{2}}(12(n-k)-{})$ \\\\ \\hline\n",
            c.abs(),
            table_constant(f)
        );
    }
    Ok(s + "\\end{tabular}\n\\end{center}\n")
}

pub fn rotation(a: RotationArgs) -> Result<Report, Failure> {
    if a.table {
        let mut records = Vec::new();
        for f in BrieskornFamily::ALL {
            records.push(
                Record::new()
                    .with("family", f.to_string())
                    .with("bundle", "(0;0,0,k), 0<=k<=n-1")
                    .with("rotation", format!("-(12(n-k)-{})/2", table_constant(f))),
            );
        }
        let mut r = Report::many(records);
        r.tex = Some(rotation_tex()?);
        return Ok(r);
    }
    match (a.seifert, a.family) {
        (Some(s), None) => {
            let y = parse::seifert(&s)?;
            let b = parse::required(a.bundle, "bundle", "rotation --seifert")?;
            let e: LineBundleData = b.parse().map_err(|e: Error| Failure::Usage(format!("--bundle: {e}")))?;
            let rot = rotation_number(&SeifertFibration::of_homology_sphere(&y), &e)?;
            Ok(Report::one(Record::new().with("seifert", y.to_string()).with("bundle", e.to_string()).with("rotation", rot)))
        }
        (None, Some(f)) => {
            let f = parse::family(&f)?;
            let ns = parse::int_list(&parse::required(a.n, "n", "rotation --family")?, "n")?;
            let mut records = Vec::new();
            for n in ns {
                let y = f.seifert(n)?;
                for (k, (e, rot)) in brieskorn_components(f, n)?.into_iter().enumerate() {
                    records.push(
                        Record::new()
                            .with("family", f.to_string())
                            .with("n", n)
                            .with("seifert", y.to_string())
                            .with("k", k)
                            .with("bundle", e.to_string())
                            .with("rotation", rot),
                    );
                }
            }
            Ok(Report::many(records))
        }
        _ => Err(Failure::Usage("rotation needs --table, --seifert with --bundle, or --family with --n".into())),
    }
}

fn vectors(v: &[PosetVector]) -> Cell {
    Cell::List(v.iter().map(|x| Cell::List(x.entries().iter().cloned().map(Cell::Rat).collect())).collect())
}

pub fn kappa(a: KappaArgs) -> Result<Report, Failure> {
    let f = parse::family(&a.family)?;
    let side = parse::side(&a.side)?;
    let cells = grid(&parse::int_list(&a.p, "p")?, &parse::int_list(&a.n, "n")?);
    let sets = sweep(&cells, |&(p, n)| kappa_set(f, side, n, p))?;
    let records = sets
        .into_iter()
        .map(|k| {
            Record::new()
                .with("family", f.to_string())
                .with("side", side.to_string())
                .with("n", k.n)
                .with("p", k.p)
                .with("multiplicity", k.multiplicity())
                .with("grading", k.common_grading())
                .with("projected", vectors(&k.projected))
                .with("representatives", vectors(&k.representatives))
                .with("counts", k.counts.clone())
        })
        .collect();
    Ok(Report::many(records))
}

pub fn sigma(a: SigmaArgs) -> Result<Report, Failure> {
    let d = FixedPointData::new(a.p, parse::pairs(&a.points, "points")?, parse::pairs(&a.surfaces, "surfaces")?)?;
    let v = sigma_vector(&d, a.signature)?;
    let via = if d.is_pseudofree() { Some(sigma0_via_cosecant(&d, a.signature)?) } else { None };
    Ok(Report::one(
        Record::new()
            .with("p", a.p)
            .with("data", d.to_string())
            .with("signature", a.signature)
            .with("vector", v)
            .with("sigma0_via_cosecant", via),
    ))
}

fn verdict_record(r: VerdictReport) -> Record {
    Record::new()
        .with("manifold", r.manifold)
        .with("p", r.p)
        .with("n", r.n)
        .with("sharp", r.sharp)
        .with("c", r.c)
        .with("kappa_multiplicity", r.kappa_multiplicity)
        .with("gradings_match", r.gradings_match)
        .with("verdict", r.verdict.as_str())
        .with("max_certified_free_stabilizations", r.max_certified_free_stabilizations)
}

/// M(2, 3, m) as a family and parameter.
fn milnor(m: i64) -> Result<(BrieskornFamily, i64), Failure> {
    BrieskornFamily::ALL
        .into_iter()
        .find(|f| (m - f.offset()).rem_euclid(12) == 0 && (m - f.offset()) / 12 >= f.min_n())
        .map(|f| (f, (m - f.offset()) / 12))
        .ok_or_else(|| Failure::Usage(format!("M(2,3,{m}) is not in a supported family")))
}

pub fn check_extension(a: CheckExtensionArgs) -> Result<Report, Failure> {
    let ps = parse::int_list(&a.p, "p")?;
    let ctx = format!("check-extension --manifold {}", a.manifold);
    let entries: Vec<ManifoldCatalogEntry> = match a.manifold.as_str() {
        "N" | "N#" | "P" | "P#" => {
            let ns = parse::int_list(&parse::required(a.n, "n", &ctx)?, "n")?;
            ns.into_iter()
                .map(|n| match a.manifold.as_str() {
                    "N" => ManifoldCatalogEntry::nucleus(n),
                    "N#" => ManifoldCatalogEntry::nucleus_stabilized(n),
                    "P" => ManifoldCatalogEntry::p_manifold(n),
                    _ => ManifoldCatalogEntry::p_stabilized(n),
                })
                .collect::<Result<_, _>>()?
        }
        "milnor" => {
            let (f, n) = milnor(parse::required(a.m, "m", &ctx)?)?;
            vec![ManifoldCatalogEntry::milnor_fiber(f, n)?]
        }
        "custom" => {
            let boundary = match a.boundary {
                Some(b) => {
                    let parts: Vec<&str> = b.split(':').collect();
                    let [f, s, n] = parts[..] else {
                        return Err(Failure::Usage("--boundary must look like 12n-1:minus:2".into()));
                    };
                    let n = n.trim().parse().map_err(|_| Failure::Usage(format!("--boundary: bad n {n:?}")))?;
                    Some(Boundary::new(parse::family(f)?, parse::side(s)?, n)?)
                }
                None => None,
            };
            vec![ManifoldCatalogEntry::custom("X", a.e8, a.h, boundary)]
        }
        "cobordism" => {
            let inner = milnor(parse::required(a.inner, "inner", &ctx)?)?;
            let outer = milnor(parse::required(a.outer, "outer", &ctx)?)?;
            let entry = CobordismEntry::milnor_complement(inner, outer)?;
            let reports = sweep(&ps, |&p| cobordism_verdict(&entry, p))?;
            return Ok(Report::many(reports.into_iter().map(verdict_record).collect()));
        }
        other => {
            return Err(Failure::Usage(format!(
                "--manifold: expected N, N#, P, P#, milnor, cobordism or custom, got {other:?}"
            )))
        }
    };
    let cells: Vec<(usize, i64)> = (0..entries.len()).flat_map(|i| ps.iter().map(move |&p| (i, p))).collect();
    let reports = sweep(&cells, |&(i, p)| nonextension_verdict(&entries[i], p))?;
    let records: Vec<Record> = reports.into_iter().map(verdict_record).collect();
    Ok(if records.len() == 1 { Report::one(records.into_iter().next().unwrap()) } else { Report::many(records) })
}

pub fn stab_bound(a: StabBoundArgs) -> Result<Report, Failure> {
    let f: ActionFamily = a.family.parse().map_err(|_| Failure::Usage(format!("--family: expected N or P, got {:?}", a.family)))?;
    let cells = grid(&parse::int_list(&a.p, "p")?, &parse::int_list(&a.n, "n")?);
    let bounds = sweep(&cells, |&(p, n)| min_free_stabilizations(f, n, p))?;
    let records = cells
        .iter()
        .zip(bounds)
        .map(|(&(p, n), b)| {
            Record::new()
                .with("family", f.to_string())
                .with("p", p)
                .with("n", n)
                .with("certified", b.certified)
                .with("exact_certified", b.exact_certified)
                .with("raw_threshold", b.raw_threshold)
        })
        .collect();
    Ok(Report::many(records))
}

pub fn h_cob(a: HCobArgs) -> Result<Report, Failure> {
    let y = parse::seifert(&a.seifert)?;
    let w = parse::ints(&a.lens, 2, "lens")?;
    let l = LensSpaceData::new(a.p, w[0], w[1])?;
    let r = h_cobordism_check(&y, a.p, &l)?;
    Ok(Report::one(
        Record::new()
            .with("seifert", y.to_string())
            .with("lens", l.to_string())
            .with("determinant", r.determinant)
            .with("weights", r.weights)
            .with("alpha", r.alpha)
            .with("holds", r.holds()),
    ))
}

fn points(d: &FixedPointData) -> Cell {
    let mut v = d.canonical_points();
    v.sort_unstable();
    Cell::List(v.into_iter().map(|(a, b)| Cell::Str(format!("({a},{b})"))).collect())
}

pub fn e8_data(a: E8Args) -> Result<Report, Failure> {
    let ps = parse::int_list(&a.p, "p")?;
    let cs = sweep(&ps, |&p| e8_construction(p))?;
    let records = ps
        .iter()
        .zip(cs)
        .map(|(&p, c)| {
            Record::new()
                .with("p", p)
                .with("cancelled_pairs", c.cancelled_pairs)
                .with("union", points(&c.union))
                .with("e8", points(&c.e8))
                .with("stabilized", points(&c.stabilized))
        })
        .collect();
    Ok(Report::many(records))
}
