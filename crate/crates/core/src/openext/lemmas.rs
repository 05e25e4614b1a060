use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactalg::{factorial, q, GaussianRational, MPoly, VarTable};
use crate::milnor::{build_extended_algebra, build_unfolding, Family};
use crate::report::Report;
use crate::saito::{flat_coords_d, leading, weighted_tuples};

/// `ω_0, …, ω_k` for `D_N`, polynomials in `v1, …, v_{N−1}` through
/// `s_i = (1 − i) v_i`.
#[derive(Clone, Debug)]
pub struct OmegaSequence {
    pub n: usize,
    pub omegas: Vec<MPoly>,
}

/// `s_i = (1 − i) v_i` over `vars`, for `1 ≤ i ≤ N − 1`; index 0 is unused.
fn s_vars(vars: &Arc<VarTable>, n: usize) -> Vec<MPoly> {
    (0..n)
        .map(|i| {
            if i == 0 {
                MPoly::zero(vars)
            } else {
                MPoly::var(vars, i - 1).scale_int(1 - i as i64)
            }
        })
        .collect()
}

/// Closed multinomial form, checked against
/// `ω_{k+1} = Σ_{i=1}^{N−1} s_{N−i} ω_{k+1−i}`.
pub fn omega_sequence(n: usize, kmax: usize) -> Result<OmegaSequence> {
    if n < 4 || kmax > 2 * n {
        return Err(Error::Unsupported(format!("ω sequence for N = {n}, k ≤ {kmax}")));
    }
    let vars = build_unfolding(Family::D, n)?.v_vars().clone();
    let s = s_vars(&vars, n);
    // tuple entry i-1 is the exponent of s_i, of weight N − i
    let weights: Vec<i64> = (1..n).map(|i| (n - i) as i64).collect();
    let mut closed = Vec::with_capacity(kmax + 1);
    for k in 0..=kmax {
        let mut w = MPoly::zero(&vars);
        for alpha in weighted_tuples(&weights, k as i64) {
            let total: i32 = alpha.iter().sum();
            let mut c = factorial(total as u64);
            let mut term = MPoly::one(&vars);
            for (i, &a) in alpha.iter().enumerate() {
                c = &c / &factorial(a as u64);
                if a > 0 {
                    term = &term * &s[i + 1].pow(a as u32);
                }
            }
            w.add_assign_ref(&term.scale(&c));
        }
        closed.push(w);
    }

    let mut rec: Vec<MPoly> = vec![MPoly::one(&vars)];
    for k in 1..=kmax {
        let mut w = MPoly::zero(&vars);
        for i in 1..n {
            if i <= k {
                w.add_product(&s[n - i], &rec[k - i]);
            }
        }
        rec.push(w);
    }
    for k in 0..=kmax {
        if closed[k] != rec[k] {
            return Err(Error::Mismatch(format!("ω_{k}: {} vs {}", closed[k], rec[k])));
        }
    }
    Ok(OmegaSequence { n, omegas: closed })
}

/// The `[w]`-coefficient of `[x^{a−1}]·[x^{b−1}]` in the extended `D_N`
/// algebra against `Σ_k ω_k v_{N+1}^{2(a+b)−2N−1−2k} / 2^{a+b−N−k}`, for
/// `1 ≤ a, b ≤ N − 1`.
pub fn check_coefw_lemma(n: usize) -> Result<Report> {
    let u = build_unfolding(Family::D, n)?;
    let alg = build_extended_algebra(&u)?;
    let cv = alg.coeff_vars().clone();
    let omega: Vec<MPoly> = omega_sequence(n, n - 2)?
        .omegas
        .iter()
        .map(|w| w.embed(&cv))
        .collect::<Result<_>>()?;
    let x = alg.generator("x")?;
    let w_idx = alg.rank() - 1;
    let mut r = Report::new("coefw-lemma");
    for a in 1..n {
        for b in a..n {
            let lhs = alg.coordinates(&x.pow((a + b - 2) as u32))?.swap_remove(w_idx);
            let mut rhs = MPoly::zero(&cv);
            let p = a + b;
            if p > n {
                for k in 0..p - n {
                    let e = 2 * p as i32 - 2 * n as i32 - 1 - 2 * k as i32;
                    let c = GaussianRational::from_int(1 << (p - n - k)).inv().unwrap();
                    rhs.add_product(&omega[k], &MPoly::var_pow(&cv, n, e).scale(&c));
                }
            }
            let resid = &lhs - &rhs;
            r.expect(resid.is_zero(), "coefw", vec![a, b], || leading(&resid));
        }
    }
    Ok(r)
}

/// `∂²t^γ/∂v_a∂v_b − Σ_{i<a} s_{N−i} ∂²t^γ/∂v_{a−i}∂v_b
///  = −((2(a+b−N) − 1)/2) ∂t^γ/∂v_{a+b−N}` for `a + b > N`, and
/// `∂²t^γ/∂v_a∂v_b = 0` for `a + b ≤ N`; `1 ≤ a, b, γ ≤ N − 1`.
pub fn check_dn_second_derivative_identity(n: usize) -> Result<Report> {
    let t = flat_coords_d(n)?;
    let vars = t[0].vars().clone();
    let s = s_vars(&vars, n);
    let mut r = Report::new("dn-identity");
    for g in 1..n {
        for a in 1..n {
            for b in 1..n {
                let d2 = |i: usize| t[g - 1].diff(i - 1).diff(b - 1);
                let resid = if a + b <= n {
                    d2(a)
                } else {
                    let mut lhs = d2(a);
                    for i in 1..a {
                        lhs = &lhs - &(&s[n - i] * &d2(a - i));
                    }
                    let k = a + b - n;
                    let rhs = t[g - 1].diff(k - 1).scale(&q(-(2 * k as i64 - 1), 2));
                    &lhs - &rhs
                };
                r.expect(resid.is_zero(), "dn-identity", vec![a, b, g], || leading(&resid));
            }
        }
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_omegas() {
        let om = omega_sequence(6, 3).unwrap().omegas;
        // s_5 = −4 v5, s_4 = −3 v4, s_3 = −2 v3
        assert_eq!(om[0].to_string(), "1");
        assert_eq!(om[1].to_string(), "-4*v5");
        assert_eq!(om[2].to_string(), "16*v5^2 - 3*v4");
        assert_eq!(om[3].to_string(), "-64*v5^3 + 24*v4*v5 - 2*v3");
    }

    #[test]
    fn closed_form_equals_recursion() {
        for n in 4..=7 {
            omega_sequence(n, 2 * n).unwrap();
        }
        assert!(omega_sequence(4, 9).is_err());
    }

    #[test]
    fn coefw_n4_by_hand() {
        // a = b = 3: v5³/4 + s_3 v5/2 = v5³/4 − v3 v5
        let u = build_unfolding(Family::D, 4).unwrap();
        let alg = build_extended_algebra(&u).unwrap();
        let x = alg.generator("x").unwrap();
        let w = alg.coordinates(&x.pow(4)).unwrap().pop().unwrap();
        assert_eq!(w.to_string(), "1/4*v5^3 - v3*v5");
        let w = alg.coordinates(&x.pow(2)).unwrap().pop().unwrap();
        assert!(w.is_zero());
    }

    #[test]
    fn lemma_sweeps() {
        for n in 4..=6 {
            let r = check_coefw_lemma(n).unwrap();
            assert!(r.passed(), "{r}");
            let r = check_dn_second_derivative_identity(n).unwrap();
            assert!(r.passed(), "{r}");
        }
    }
}
