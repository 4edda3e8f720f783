//! Dedekind-type sums: the classical Dedekind sum, Dedekind-Rademacher sums,
//! Dedekind-Dieter cotangent sums and Dedekind cosecant sums.
//!
//! Each family has a definitional evaluator, which serves as the oracle, and a
//! Euclidean reciprocity evaluator.

pub mod cosecant;
pub mod dedekind;
pub mod dieter;
pub mod rademacher;

pub use cosecant::{cosecant_sum, CosecantSumSpec};
pub use dedekind::{dedekind_sum, dedekind_sum_with};
pub use dieter::{dedekind_dieter, dieter_at_fraction, DedekindDieterSpec};
pub use rademacher::{dedekind_rademacher, rademacher_normalized, DedekindRademacherSpec};

use std::fmt;
use std::str::FromStr;

use crate::error::Error;

/// Evaluation strategy for a sum.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    /// The defining finite sum.
    Brute,
    /// The Euclidean reciprocity recursion.
    Reciprocity,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Brute => "brute",
            Method::Reciprocity => "reciprocity",
        })
    }
}

impl FromStr for Method {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "brute" => Ok(Method::Brute),
            "reciprocity" => Ok(Method::Reciprocity),
            _ => Err(Error::InvalidInput(format!("unknown method {s:?}"))),
        }
    }
}

/// Floor-quotient Euclidean chain `a0, a1, ...` ending at 1, with quotients.
pub(crate) fn euclid_chain(a0: i64, a1: i64) -> (Vec<i64>, Vec<i64>) {
    let mut a = vec![a0, a1];
    let mut q = Vec::new();
    while *a.last().unwrap() != 1 {
        let n = a.len();
        let qj = a[n - 2].div_euclid(a[n - 1]);
        q.push(qj);
        a.push(a[n - 2] - qj * a[n - 1]);
    }
    (a, q)
}
