//! Random small polynomials shared by the property tests and the acceptance
//! suite.

#![allow(dead_code)]

use std::sync::Arc;

use frobenius_open::exactalg::{rat, GaussianRational, MPoly, Monomial, VarTable};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

/// `t1, t2` (weights 1, 2/3) and a Laurent `s` (weight 1/3).
pub fn table() -> Arc<VarTable> {
    VarTable::builder()
        .var("t1", rat(1, 1))
        .var("t2", rat(2, 3))
        .laurent_var("s", rat(1, 3))
        .build()
        .unwrap()
}

fn coeff() -> impl Strategy<Value = GaussianRational> {
    (-9i64..=9, 1i64..=6, -3i64..=3, 1i64..=4, 0u8..4).prop_map(|(a, b, c, d, im)| {
        let re = BigRational::new(BigInt::from(a), BigInt::from(b));
        // three in four coefficients are real
        let im = if im == 0 { BigRational::new(BigInt::from(c), BigInt::from(d)) } else { rat(0, 1) };
        GaussianRational::new(re, im)
    })
}

fn term() -> impl Strategy<Value = (Vec<i32>, GaussianRational)> {
    (0i32..4, 0i32..4, -2i32..4, coeff()).prop_map(|(a, b, c, k)| (vec![a, b, c], k))
}

pub fn poly() -> impl Strategy<Value = MPoly> {
    prop::collection::vec(term(), 0..6).prop_map(|terms| {
        let v = table();
        let mut p = MPoly::zero(&v);
        for (e, c) in terms {
            p.add_term(Monomial::from_exps(e), &c);
        }
        p
    })
}

/// `Σ w_i x_i ∂_i p`, built from derivatives rather than degrees.
pub fn euler_by_derivatives(p: &MPoly) -> MPoly {
    let v = p.vars().clone();
    let mut out = MPoly::zero(&v);
    for i in 0..v.len() {
        let xi = MPoly::var(&v, i).scale(&GaussianRational::real(v.weight(i).clone()));
        out.add_product(&xi, &p.diff(i));
    }
    out
}

/// The four property families; each returns an error message on failure.
pub fn ring_axioms(a: &MPoly, b: &MPoly, c: &MPoly) -> Result<(), String> {
    let one = MPoly::one(a.vars());
    let checks = [
        (&(a + b) + c == a + &(b + c), "additive associativity"),
        (a + b == b + a, "additive commutativity"),
        (&(a * b) * c == a * &(b * c), "multiplicative associativity"),
        (a * b == b * a, "multiplicative commutativity"),
        (a * &(b + c) == &(a * b) + &(a * c), "distributivity"),
        ((a - a).is_zero(), "additive inverse"),
        (a * &one == *a, "unit"),
    ];
    match checks.iter().find(|(ok, _)| !ok) {
        Some((_, what)) => Err(what.to_string()),
        None => Ok(()),
    }
}

pub fn derivative_laws(a: &MPoly, b: &MPoly) -> Result<(), String> {
    for i in 0..3 {
        for j in 0..3 {
            if a.diff(i).diff(j) != a.diff(j).diff(i) {
                return Err(format!("∂{i}∂{j} ≠ ∂{j}∂{i}"));
            }
        }
        let lhs = (a * b).diff(i);
        let rhs = &(&a.diff(i) * b) + &(a * &b.diff(i));
        if lhs != rhs {
            return Err(format!("Leibniz fails for ∂{i}"));
        }
    }
    Ok(())
}

pub fn euler_identity(p: &MPoly) -> Result<(), String> {
    for (d, comp) in p.weighted_degree_decompose() {
        if euler_by_derivatives(&comp) != comp.scale(&GaussianRational::real(d.clone())) {
            return Err(format!("E({comp}) ≠ {d}·({comp})"));
        }
    }
    Ok(())
}

pub fn round_trip(p: &MPoly) -> Result<(), String> {
    let v = p.vars();
    let text = MPoly::parse(&p.to_string(), v).map_err(|e| e.to_string())?;
    if &text != p {
        return Err(format!("text round trip changed {p}"));
    }
    let json = MPoly::from_json_with(&p.to_json(), v).map_err(|e| e.to_string())?;
    if &json != p {
        return Err(format!("json round trip changed {p}"));
    }
    let loose = MPoly::from_json_str(&p.to_json_string()).map_err(|e| e.to_string())?;
    if loose.to_string() != p.to_string() {
        return Err(format!("untyped json round trip changed {p}"));
    }
    Ok(())
}
