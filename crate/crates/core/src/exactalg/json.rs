//! JSON form: `{"vars": [..], "terms": [{"exp": [..], "re": [num, den], "im": [num, den]}, ..]}`.
//!
//! Integers of any size are written as JSON numbers verbatim, so the round
//! trip is exact.

use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde_json::{json, Number, Value};

use super::gaussian::GaussianRational;
use super::mpoly::{Monomial, MPoly};
use super::vars::{Var, VarTable};
use crate::error::{Error, Result};

fn big_number(n: &BigInt) -> Value {
    Value::Number(Number::from_str(&n.to_string()).expect("integer literal"))
}

fn rat_json(r: &BigRational) -> Value {
    Value::Array(vec![big_number(r.numer()), big_number(r.denom())])
}

fn json_err(msg: impl Into<String>) -> Error {
    Error::Json(msg.into())
}

fn parse_big(v: &Value) -> Result<BigInt> {
    match v {
        Value::Number(n) => BigInt::from_str(&n.to_string())
            .map_err(|_| json_err(format!("not an integer: {n}"))),
        _ => Err(json_err("expected an integer")),
    }
}

fn parse_rat(v: &Value) -> Result<BigRational> {
    let arr = v.as_array().ok_or_else(|| json_err("expected [num, den]"))?;
    if arr.len() != 2 {
        return Err(json_err("expected [num, den]"));
    }
    let num = parse_big(&arr[0])?;
    let den = parse_big(&arr[1])?;
    if den.is_zero() {
        return Err(json_err("zero denominator"));
    }
    Ok(BigRational::new(num, den))
}

impl MPoly {
    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms()
            .rev()
            .map(|(m, c)| {
                json!({
                    "exp": m.exps(),
                    "re": rat_json(c.re()),
                    "im": rat_json(c.im()),
                })
            })
            .collect();
        json!({ "vars": self.vars().names(), "terms": terms })
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(&self.to_json()).expect("serializable")
    }

    /// Reads a polynomial over an existing table; the variable names must
    /// match it exactly.
    pub fn from_json_with(value: &Value, vars: &Arc<VarTable>) -> Result<MPoly> {
        let names = read_names(value)?;
        if names != vars.names() {
            return Err(Error::VarTableMismatch);
        }
        read_terms(value, vars)
    }

    /// Reads a polynomial, building an unweighted table from its `vars`. A
    /// variable carrying a negative exponent becomes the Laurent slot.
    pub fn from_json(value: &Value) -> Result<MPoly> {
        let names = read_names(value)?;
        let terms = value
            .get("terms")
            .and_then(Value::as_array)
            .ok_or_else(|| json_err("missing `terms`"))?;
        let mut laurent = vec![false; names.len()];
        for t in terms {
            if let Some(exp) = t.get("exp").and_then(Value::as_array) {
                for (i, e) in exp.iter().enumerate() {
                    if e.as_i64().is_some_and(|e| e < 0) && i < laurent.len() {
                        laurent[i] = true;
                    }
                }
            }
        }
        let table = VarTable::new(
            names
                .into_iter()
                .zip(laurent)
                .map(|(name, laurent)| Var {
                    name,
                    weight: BigRational::zero(),
                    laurent,
                })
                .collect(),
        )?;
        read_terms(value, &table)
    }

    pub fn from_json_str(src: &str) -> Result<MPoly> {
        let v: Value = serde_json::from_str(src).map_err(|e| json_err(e.to_string()))?;
        Self::from_json(&v)
    }
}

fn read_names(value: &Value) -> Result<Vec<String>> {
    value
        .get("vars")
        .and_then(Value::as_array)
        .ok_or_else(|| json_err("missing `vars`"))?
        .iter()
        .map(|v| {
            v.as_str()
                .map(str::to_string)
                .ok_or_else(|| json_err("variable names must be strings"))
        })
        .collect()
}

fn read_terms(value: &Value, vars: &Arc<VarTable>) -> Result<MPoly> {
    let terms = value
        .get("terms")
        .and_then(Value::as_array)
        .ok_or_else(|| json_err("missing `terms`"))?;
    let mut p = MPoly::zero(vars);
    for t in terms {
        let exp = t
            .get("exp")
            .and_then(Value::as_array)
            .ok_or_else(|| json_err("term without `exp`"))?;
        if exp.len() != vars.len() {
            return Err(json_err("exponent vector has the wrong length"));
        }
        let mut exps = Vec::with_capacity(exp.len());
        for (i, e) in exp.iter().enumerate() {
            let e = e
                .as_i64()
                .and_then(|e| i32::try_from(e).ok())
                .ok_or_else(|| json_err("exponents must be small integers"))?;
            if e < 0 && !vars.is_laurent(i) {
                return Err(Error::InadmissibleExponent {
                    var: vars.name(i).to_string(),
                    exponent: e,
                });
            }
            exps.push(e);
        }
        let re = parse_rat(t.get("re").ok_or_else(|| json_err("term without `re`"))?)?;
        let im = match t.get("im") {
            Some(v) => parse_rat(v)?,
            None => BigRational::zero(),
        };
        p.add_term(Monomial::from_exps(exps), &GaussianRational::new(re, im));
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn huge_denominators_survive() {
        let v = VarTable::plain(&["t4"]);
        let p = MPoly::parse("t4^31/245764125000245764125000245764125000", &v).unwrap();
        let back = MPoly::from_json_with(&p.to_json(), &v).unwrap();
        assert_eq!(back, p);
        let text = p.to_json_string();
        assert!(text.contains("245764125000245764125000245764125000"));
    }

    #[test]
    fn laurent_slot_is_inferred() {
        let v = VarTable::builder()
            .var("t4", BigRational::zero())
            .laurent_var("s", BigRational::zero())
            .build()
            .unwrap();
        let p = MPoly::parse("t4^2/(2*s) + I*s", &v).unwrap();
        let back = MPoly::from_json_str(&p.to_json_string()).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn rejects_wrong_names() {
        let p = MPoly::var(&VarTable::plain(&["x"]), 0);
        assert!(MPoly::from_json_with(&p.to_json(), &VarTable::plain(&["y"])).is_err());
    }
}
