//! Argument parsers. Every failure is a usage error.

use std::str::FromStr;

use seifert_kappa::kappa::Orientation;
use seifert_kappa::seifert::{BrieskornFamily, SeifertData};
use seifert_kappa::Rational;

use crate::Failure;

fn usage(msg: String) -> Failure {
    Failure::Usage(msg)
}

/// Integers as `5,7,11` or inclusive ranges `1-4`; sorted and deduplicated.
pub fn int_list(s: &str, what: &str) -> Result<Vec<i64>, Failure> {
    let mut out = Vec::new();
    for part in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let bad = || usage(format!("--{what}: cannot parse {part:?}; use 5,7,11 or 1-4"));
        match part[1..].find('-').map(|i| i + 1) {
            Some(i) => {
                let lo: i64 = part[..i].parse().map_err(|_| bad())?;
                let hi: i64 = part[i + 1..].parse().map_err(|_| bad())?;
                out.extend(lo..=hi);
            }
            None => out.push(part.parse().map_err(|_| bad())?),
        }
    }
    if out.is_empty() {
        return Err(usage(format!("--{what} needs at least one value")));
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

/// A rational such as `5/2` or `-3`.
pub fn rational(s: &str, what: &str) -> Result<Rational, Failure> {
    Rational::from_str(s.trim()).map_err(|_| usage(format!("--{what}: {s:?} is not a rational like 5/2")))
}

/// Seifert invariants `2,3,59` or `sigma(2,3,59)`.
pub fn seifert(s: &str) -> Result<SeifertData, Failure> {
    SeifertData::from_str(s).map_err(|e| usage(format!("--seifert: {e}")))
}

/// A Brieskorn family.
pub fn family(s: &str) -> Result<BrieskornFamily, Failure> {
    BrieskornFamily::from_str(s).map_err(|_| usage(format!("--family: expected 12n+5, 12n-5, 12n-1 or 12n+1, got {s:?}")))
}

/// `plus` or `minus`.
pub fn side(s: &str) -> Result<Orientation, Failure> {
    Orientation::from_str(s).map_err(|_| usage(format!("--side: expected plus or minus, got {s:?}")))
}

/// Pairs `a,b;a,b`.
pub fn pairs(s: &str, what: &str) -> Result<Vec<(i64, i64)>, Failure> {
    s.split(';')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| {
            let v = t
                .split(',')
                .map(|x| x.trim().parse::<i64>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(|_| usage(format!("--{what}: cannot parse {t:?}")))?;
            match v[..] {
                [a, b] => Ok((a, b)),
                _ => Err(usage(format!("--{what}: {t:?} must be two integers a,b"))),
            }
        })
        .collect()
}

/// Exactly `k` comma-separated integers.
pub fn ints(s: &str, k: usize, what: &str) -> Result<Vec<i64>, Failure> {
    let v = s
        .split(',')
        .map(|x| x.trim().parse::<i64>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|_| usage(format!("--{what}: cannot parse {s:?}")))?;
    if v.len() != k {
        return Err(usage(format!("--{what}: expected {k} integers, got {}", v.len())));
    }
    Ok(v)
}

/// Unwraps a required option.
pub fn required<T>(v: Option<T>, what: &str, context: &str) -> Result<T, Failure> {
    v.ok_or_else(|| usage(format!("{context} needs --{what}")))
}
