//! JSON form of polynomials: a list of `{"exp": [i, j], "coeff": "p/q"}`
//! objects in graded order. Coefficients are decimal strings so that nothing
//! passes through a float.

use std::str::FromStr;

use serde_json::{json, Value};

use super::poly::{MPoly, Ring};
use super::ratfun::RatFun;
use super::BigRat;
use crate::error::{Error, Result};

pub fn poly_to_json(p: &MPoly) -> Value {
    let n = p.ring().nvars();
    Value::Array(
        p.terms()
            .map(|(m, c)| {
                json!({
                    "exp": &m.0[..n],
                    "coeff": c.to_string(),
                })
            })
            .collect(),
    )
}

pub fn ratfun_to_json(f: &RatFun) -> Value {
    json!({
        "num": poly_to_json(f.num()),
        "den": poly_to_json(f.den()),
    })
}

pub fn poly_from_json(v: &Value, ring: Ring) -> Result<MPoly> {
    let items = v
        .as_array()
        .ok_or_else(|| Error::Parse("polynomial must be a JSON array".into()))?;
    let n = ring.nvars();
    let mut terms = Vec::with_capacity(items.len());
    for item in items {
        let exp = item
            .get("exp")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Parse("term without an \"exp\" array".into()))?;
        if exp.len() != n {
            return Err(Error::Parse(format!(
                "exponent vector of length {} in a {}-variable ring",
                exp.len(),
                n
            )));
        }
        let mut e = [0u32; 2];
        for (slot, x) in e.iter_mut().zip(exp) {
            *slot = x
                .as_u64()
                .and_then(|x| u32::try_from(x).ok())
                .ok_or_else(|| Error::Parse(format!("bad exponent {x}")))?;
        }
        let coeff = item
            .get("coeff")
            .and_then(Value::as_str)
            .ok_or_else(|| Error::Parse("term without a string \"coeff\"".into()))?;
        let c = BigRat::from_str(coeff)
            .map_err(|_| Error::Parse(format!("bad coefficient {coeff:?}")))?;
        terms.push((e, c));
    }
    Ok(MPoly::from_terms(ring, terms))
}

pub fn ratfun_from_json(v: &Value, ring: Ring) -> Result<RatFun> {
    let num = poly_from_json(
        v.get("num")
            .ok_or_else(|| Error::Parse("missing \"num\"".into()))?,
        ring,
    )?;
    let den = poly_from_json(
        v.get("den")
            .ok_or_else(|| Error::Parse("missing \"den\"".into()))?,
        ring,
    )?;
    if den.is_zero() {
        return Err(Error::Parse("zero denominator".into()));
    }
    Ok(RatFun::new(num, den))
}
