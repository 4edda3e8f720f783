//! Bit-exact JSON encoding of rationals and cyclotomic values.
//!
//! A rational is `{"num": "<int>", "den": "<int>"}`. A cyclotomic value is
//! `{"m": <int>, "coeffs": [[k, "<num>", "<den>"], ...]}` listing only the
//! nonzero canonical coefficients.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{json, Value};

use super::cyclotomic::Cyclotomic;
use super::scalar::Scalar;
use crate::error::{Error, Result};

/// Encodes a rational.
pub fn rational_to_json<T: Scalar>(x: &T) -> Value {
    let b = x.to_big();
    json!({"num": b.numer().to_string(), "den": b.denom().to_string()})
}

/// Decodes a rational, normalizing to lowest terms.
pub fn rational_from_json(v: &Value) -> Result<BigRational> {
    let part = |key: &str| -> Result<BigInt> {
        v.get(key)
            .and_then(Value::as_str)
            .and_then(|s| s.parse::<BigInt>().ok())
            .ok_or_else(|| Error::InvalidInput(format!("rational JSON needs string field {key:?}")))
    };
    let (n, d) = (part("num")?, part("den")?);
    if d == BigInt::from(0) {
        return Err(Error::InvalidInput("zero denominator".into()));
    }
    Ok(BigRational::new(n, d))
}

/// Encodes a cyclotomic value.
pub fn cyclotomic_to_json<T: Scalar>(v: &Cyclotomic<T>) -> Value {
    let coeffs: Vec<Value> = v
        .nonzero_terms()
        .into_iter()
        .map(|(k, c)| {
            let b = c.to_big();
            json!([k, b.numer().to_string(), b.denom().to_string()])
        })
        .collect();
    json!({"m": v.modulus(), "coeffs": coeffs})
}

/// Decodes a cyclotomic value, re-reducing the coefficients.
pub fn cyclotomic_from_json(v: &Value) -> Result<Cyclotomic<BigRational>> {
    let bad = |what: &str| Error::InvalidInput(format!("cyclotomic JSON: {what}"));
    let m = v.get("m").and_then(Value::as_u64).filter(|&m| m > 0).ok_or_else(|| bad("missing modulus"))?;
    let list = v.get("coeffs").and_then(Value::as_array).ok_or_else(|| bad("missing coeffs"))?;
    let mut raw = Vec::with_capacity(list.len());
    for item in list {
        let arr = item.as_array().filter(|a| a.len() == 3).ok_or_else(|| bad("entry must be [k, num, den]"))?;
        let k = arr[0].as_i64().ok_or_else(|| bad("exponent"))?;
        let c = rational_from_json(&json!({"num": arr[1], "den": arr[2]}))?;
        raw.push((k, c));
    }
    Ok(Cyclotomic::from_coeffs(m, &raw))
}
