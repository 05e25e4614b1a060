use std::sync::Arc;

use num_rational::BigRational;
use num_traits::One;

use crate::error::{Error, Result};
use crate::exactalg::{indexed_names, rat, GaussianRational, MPoly, Monomial, Var, VarTable};
use crate::milnor::{build_unfolding, Family, Unfolding};

/// All `α ∈ ℕ^k` with `Σ w_i α_i = target`.
pub(crate) fn weighted_tuples(weights: &[i64], target: i64) -> Vec<Vec<i32>> {
    fn go(w: &[i64], i: usize, left: i64, cur: &mut Vec<i32>, out: &mut Vec<Vec<i32>>) {
        if i == w.len() {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let mut a = 0;
        while a as i64 * w[i] <= left {
            cur.push(a);
            go(w, i + 1, left - a as i64 * w[i], cur, out);
            cur.pop();
            a += 1;
        }
    }
    let mut out = Vec::new();
    go(weights, 0, target, &mut Vec::new(), &mut out);
    out
}

fn factorial_product(alpha: &[i32]) -> BigRational {
    let mut f = BigRational::one();
    for &a in alpha {
        for k in 2..=a {
            f *= rat(k as i64, 1);
        }
    }
    f
}

/// Flat coordinates `t^1, …, t^N` as polynomials in `v1, …, vN`.
pub fn flat_coords(u: &Unfolding) -> Result<Vec<MPoly>> {
    match u.family() {
        Family::A => Ok(closed_form_a(u)),
        Family::D => Ok(closed_form_d(u)),
        Family::E => Err(Error::Unsupported("flat coordinates of E_N".into())),
    }
}

pub fn flat_coords_a(n: usize) -> Result<Vec<MPoly>> {
    Ok(closed_form_a(&build_unfolding(Family::A, n)?))
}

pub fn flat_coords_d(n: usize) -> Result<Vec<MPoly>> {
    Ok(closed_form_d(&build_unfolding(Family::D, n)?))
}

fn closed_form_a(u: &Unfolding) -> Vec<MPoly> {
    let n = u.rank() as i64;
    let vars = u.v_vars();
    let w: Vec<i64> = (1..=n).map(|i| n + 2 - i).collect();
    (1..=n)
        .map(|gamma| {
            let mut t = MPoly::zero(vars);
            for alpha in weighted_tuples(&w, n + 2 - gamma) {
                let len: i64 = alpha.iter().map(|&a| a as i64).sum();
                let mut c = rat(1, n + 1 - gamma);
                for k in 0..len {
                    c *= rat(n + 1 - gamma - k * (n + 1), 1);
                }
                c /= factorial_product(&alpha);
                t.add_term(Monomial::from_exps(alpha), &GaussianRational::real(c));
            }
            t
        })
        .collect()
}

fn closed_form_d(u: &Unfolding) -> Vec<MPoly> {
    let n = u.rank() as i64;
    let vars = u.v_vars();
    let w: Vec<i64> = (1..n).map(|i| n - i).collect();
    let mut out: Vec<MPoly> = (1..n)
        .map(|gamma| {
            let mut t = MPoly::zero(vars);
            for mut alpha in weighted_tuples(&w, n - gamma) {
                let len: i64 = alpha.iter().map(|&a| a as i64).sum();
                let mut c = rat(-1, 2).pow(len as i32 - 1);
                for k in 0..len - 1 {
                    c *= rat(2 * gamma - 1 + 2 * k * (n - 1), 1);
                }
                c /= factorial_product(&alpha);
                alpha.push(0);
                t.add_term(Monomial::from_exps(alpha), &GaussianRational::real(c));
            }
            t
        })
        .collect();
    out.push(MPoly::var(vars, n as usize - 1));
    out
}

/// `t1, …, tN` weighted by `weights`.
pub fn t_table(weights: &[BigRational]) -> Arc<VarTable> {
    VarTable::new(
        indexed_names("t", weights.len())
            .into_iter()
            .zip(weights)
            .map(|(name, w)| Var {
                name,
                weight: w.clone(),
                laurent: false,
            })
            .collect(),
    )
    .expect("valid names and weights")
}

/// Inverts a triangular change of coordinates `t^i = v_i + h_i(v)`, where `h_i`
/// involves only variables of strictly smaller weight than `v_i`.
///
/// The inverse is built by back-substitution in increasing weight order:
/// `v_i = t_i − h_i(v(t))`, with the lighter `v_j(t)` already known.
pub fn invert_coords(t_of_v: &[MPoly], t_vars: &Arc<VarTable>) -> Result<Vec<MPoly>> {
    let n = t_of_v.len();
    let v_vars = t_of_v
        .first()
        .ok_or_else(|| Error::NotTriangular("empty coordinate list".into()))?
        .vars()
        .clone();
    if v_vars.len() != n || t_vars.len() != n || t_of_v.iter().any(|t| t.vars() != &v_vars) {
        return Err(Error::Mismatch("coordinate lists must be square".into()));
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| v_vars.weight(a).cmp(v_vars.weight(b)));

    let mut rest: Vec<MPoly> = Vec::with_capacity(n);
    for (i, t) in t_of_v.iter().enumerate() {
        let lin = Monomial::one(n).with_exp(i, 1);
        if t.coeff(&lin) != GaussianRational::one() {
            return Err(Error::NotTriangular(format!("t{} does not start with v{}", i + 1, i + 1)));
        }
        let h = t - &MPoly::var(&v_vars, i);
        for (m, _) in h.terms() {
            let heavy = m
                .exps()
                .iter()
                .enumerate()
                .any(|(j, &e)| e != 0 && v_vars.weight(j) >= v_vars.weight(i));
            if heavy {
                return Err(Error::NotTriangular(format!(
                    "t{} involves a variable not lighter than v{}",
                    i + 1,
                    i + 1
                )));
            }
        }
        rest.push(h);
    }

    let mut v_of_t: Vec<MPoly> = vec![MPoly::zero(t_vars); n];
    for &i in &order {
        let h = rest[i].compose(t_vars, &v_of_t)?;
        v_of_t[i] = &MPoly::var(t_vars, i) - &h;
    }
    Ok(v_of_t)
}

/// `p(v)` rewritten in `t` through `v = v(t)`.
pub fn to_flat(p: &MPoly, v_of_t: &[MPoly]) -> Result<MPoly> {
    let t_vars = v_of_t
        .first()
        .ok_or_else(|| Error::Mismatch("empty coordinate list".into()))?
        .vars()
        .clone();
    p.compose(&t_vars, v_of_t)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn strs(ps: &[MPoly]) -> Vec<String> {
        ps.iter().map(|p| p.to_string()).collect()
    }

    #[test]
    fn tuples_enumerate_exactly() {
        // 3a + 2b + c = 3: (1,0,0), (0,1,1), (0,0,3)
        let mut t = weighted_tuples(&[3, 2, 1], 3);
        t.sort();
        assert_eq!(t, vec![vec![0, 0, 3], vec![0, 1, 1], vec![1, 0, 0]]);
    }

    #[test]
    fn a_series_examples() {
        assert_eq!(strs(&flat_coords_a(2).unwrap()), ["v1", "v2"]);
        assert_eq!(strs(&flat_coords_a(3).unwrap()), ["-1/2*v3^2 + v1", "v2", "v3"]);
        for n in 1..=7 {
            let t = flat_coords_a(n).unwrap();
            assert_eq!(t[n - 1].to_string(), format!("v{n}"));
        }
    }

    #[test]
    fn d_series_examples() {
        let t = flat_coords_d(4).unwrap();
        assert_eq!(t[0].to_string(), "7/24*v3^3 - 1/2*v2*v3 + v1");
        assert_eq!(t[1].to_string(), "-3/4*v3^2 + v2");
        for n in 4..=7 {
            let t = flat_coords_d(n).unwrap();
            assert_eq!(t[n - 2].to_string(), format!("v{}", n - 1));
            assert_eq!(t[n - 1].to_string(), format!("v{n}"));
            assert!(t[..n - 1].iter().all(|p| p.is_free_of(n - 1)));
        }
    }

    #[test]
    fn flat_coordinates_are_homogeneous() {
        for u in [
            build_unfolding(Family::A, 6).unwrap(),
            build_unfolding(Family::D, 6).unwrap(),
        ] {
            for (i, t) in flat_coords(&u).unwrap().iter().enumerate() {
                assert_eq!(t.homogeneous_degree().as_ref(), Some(&u.weights()[i]));
            }
        }
    }

    #[test]
    fn inversion_round_trip() {
        let u = build_unfolding(Family::A, 3).unwrap();
        let tv = t_table(&u.weights());
        let v = invert_coords(&flat_coords(&u).unwrap(), &tv).unwrap();
        assert_eq!(v[0].to_string(), "1/2*t3^2 + t1");
        let u = build_unfolding(Family::D, 4).unwrap();
        let tv = t_table(&u.weights());
        let v = invert_coords(&flat_coords(&u).unwrap(), &tv).unwrap();
        assert_eq!(v[0].to_string(), "1/12*t3^3 + 1/2*t2*t3 + t1");
        assert_eq!(v[3].to_string(), "t4");

        // oracle: t(v(t)) = t, by plain substitution
        for (f, n) in [(Family::A, 6), (Family::D, 6), (Family::A, 1)] {
            let u = build_unfolding(f, n).unwrap();
            let tv = t_table(&u.weights());
            let t_of_v = flat_coords(&u).unwrap();
            let v = invert_coords(&t_of_v, &tv).unwrap();
            for (i, t) in t_of_v.iter().enumerate() {
                assert_eq!(t.compose(&tv, &v).unwrap(), MPoly::var(&tv, i));
            }
        }
    }

    #[test]
    fn non_triangular_is_rejected() {
        let u = build_unfolding(Family::A, 3).unwrap();
        let vv = u.v_vars();
        let tv = t_table(&u.weights());
        let bad = vec![
            MPoly::parse("v1 + v2^2", vv).unwrap(),
            MPoly::parse("v2 + v1", vv).unwrap(),
            MPoly::parse("v3", vv).unwrap(),
        ];
        assert!(matches!(invert_coords(&bad, &tv), Err(Error::NotTriangular(_))));
        let bad = vec![
            MPoly::parse("2*v1", vv).unwrap(),
            MPoly::parse("v2", vv).unwrap(),
            MPoly::parse("v3", vv).unwrap(),
        ];
        assert!(invert_coords(&bad, &tv).is_err());
    }
}
