//! Wire formats for polynomials and rationals.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use gue_core::{PolyN, Rational};

use crate::error::CliError;

/// `{"var": "N", "coeffs": {"<degree>": "<decimal>"}}`, zero coefficients omitted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub var: String,
    pub coeffs: BTreeMap<u64, String>,
}

impl PolyJson {
    pub fn from_poly(p: &PolyN, var: &str) -> Self {
        let coeffs = p.terms().filter(|(_, c)| !c.is_zero()).map(|(d, c)| (d as u64, c.to_string())).collect();
        PolyJson { var: var.to_string(), coeffs }
    }

    pub fn to_poly(&self) -> Result<PolyN, CliError> {
        let top = self.coeffs.keys().next_back().map_or(0, |&d| d as usize + 1);
        let mut c = vec![BigInt::zero(); top];
        for (&d, s) in &self.coeffs {
            c[d as usize] = parse_int(s)?;
        }
        Ok(PolyN::new(c))
    }
}

fn parse_int(s: &str) -> Result<BigInt, CliError> {
    s.parse().map_err(|_| CliError::Parse(format!("not an integer: {s:?}")))
}

pub fn poly_to_json(p: &PolyN, var: &str) -> Value {
    serde_json::to_value(PolyJson::from_poly(p, var)).expect("map of strings serializes")
}

/// Parses a polynomial, accepting coefficients as decimal strings or JSON integers.
pub fn poly_from_json(v: &Value) -> Result<(String, PolyN), CliError> {
    let obj = v.as_object().ok_or_else(|| CliError::Parse("polynomial must be an object".into()))?;
    let var = obj.get("var").and_then(Value::as_str).ok_or_else(|| CliError::Parse("missing \"var\"".into()))?;
    let coeffs = obj.get("coeffs").and_then(Value::as_object).ok_or_else(|| CliError::Parse("missing \"coeffs\"".into()))?;
    let mut map = BTreeMap::new();
    for (d, c) in coeffs {
        let d: u64 = d.parse().map_err(|_| CliError::Parse(format!("bad degree {d:?}")))?;
        let c = match c {
            Value::String(s) => s.clone(),
            Value::Number(n) if n.is_i64() || n.is_u64() => n.to_string(),
            _ => return Err(CliError::Parse(format!("bad coefficient at degree {d}"))),
        };
        map.insert(d, c);
    }
    let p = PolyJson { var: var.to_string(), coeffs: map }.to_poly()?;
    Ok((var.to_string(), p))
}

pub fn rational_to_json(q: &Rational) -> Value {
    json!({ "num": q.numer().to_string(), "den": q.denom().to_string() })
}

pub fn rational_from_json(v: &Value) -> Result<Rational, CliError> {
    let field = |k: &str| {
        v.get(k).and_then(Value::as_str).ok_or_else(|| CliError::Parse(format!("missing \"{k}\""))).and_then(parse_int)
    };
    let (num, den) = (field("num")?, field("den")?);
    if den.is_zero() {
        return Err(CliError::Parse("zero denominator".into()));
    }
    Ok(Rational::new(num, den))
}
