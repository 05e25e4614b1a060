use std::sync::Arc;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactalg::{factorial, q, rat, GaussianRational, MPoly, Monomial, Var, VarTable};
use crate::milnor::Family;
use crate::report::Report;
use crate::saito::{leading, saito_structure, weighted_tuples, FrobeniusStructure};

/// `t1, …, tN, s` with `deg s = (1 − δ)/2`; `s` is the Laurent slot.
pub fn open_table(base: &FrobeniusStructure) -> Arc<VarTable> {
    let mut vars = base.t_vars().vars().to_vec();
    vars.push(Var {
        name: "s".into(),
        weight: (BigRational::one() - base.delta()) / rat(2, 1),
        laurent: true,
    });
    VarTable::new(vars).expect("t-names never clash with `s`")
}

/// A Frobenius structure together with a function `F°(t, s)`.
#[derive(Clone, Debug)]
pub struct OpenExtension {
    base: FrobeniusStructure,
    vars: Arc<VarTable>,
    potential: MPoly,
}

impl OpenExtension {
    /// `potential` may live over any table whose names are `t1, …, tN, s`.
    pub fn new(base: FrobeniusStructure, potential: MPoly) -> Result<Self> {
        let vars = open_table(&base);
        let potential = potential.embed(&vars)?;
        Ok(OpenExtension { base, vars, potential })
    }

    pub fn base(&self) -> &FrobeniusStructure {
        &self.base
    }

    pub fn rank(&self) -> usize {
        self.base.rank()
    }

    /// `t1, …, tN, s`.
    pub fn vars(&self) -> &Arc<VarTable> {
        &self.vars
    }

    /// Index of `s` in [`Self::vars`].
    pub fn s(&self) -> usize {
        self.rank()
    }

    pub fn potential(&self) -> &MPoly {
        &self.potential
    }

    /// The closed potential moved into the open table.
    pub fn closed_potential(&self) -> MPoly {
        self.base.potential().embed(&self.vars).expect("sub-table")
    }

    /// `(η^{1μ}∂F/∂t^μ, …, η^{Nμ}∂F/∂t^μ, F°)`.
    pub fn vector_potential(&self) -> Vec<MPoly> {
        let mut out: Vec<MPoly> = self
            .base
            .vector_potential()
            .iter()
            .map(|f| f.embed(&self.vars).expect("sub-table"))
            .collect();
        out.push(self.potential.clone());
        out
    }

    /// Weights of `t1, …, tN, s`.
    pub fn weights(&self) -> Vec<BigRational> {
        self.vars.vars().iter().map(|v| v.weight.clone()).collect()
    }

    /// `Σ q_α t^α ∂_α F° + ((1−δ)/2) s ∂_s F° = ((3−δ)/2) F°`.
    pub fn verify_homogeneity(&self) -> Report {
        let mut r = Report::new("open-homogeneity");
        let d = (rat(3, 1) - self.base.delta()) / rat(2, 1);
        let f = &self.potential;
        let resid = &f.euler() - &f.scale(&GaussianRational::real(d));
        r.expect(resid.is_zero(), "euler-open-potential", vec![], || leading(&resid));
        r
    }

    /// `λ^{-1} F°(t, λs)`; `λ = 0` is the limit, admissible only when the
    /// `s`-free part vanishes.
    pub fn rescale(&self, lambda: &GaussianRational) -> Result<OpenExtension> {
        let s = self.s();
        let potential = if lambda.is_zero() {
            if !self.potential.coeff_of_power(s, 0).is_zero() {
                return Err(Error::InvalidLambda("λ = 0 needs F° to vanish at s = 0".into()));
            }
            MPoly::from_terms(
                &self.vars,
                self.potential
                    .terms()
                    .filter(|(m, _)| m.exp(s) == 1)
                    .map(|(m, c)| (m.clone(), c.clone())),
            )
        } else {
            MPoly::from_terms(
                &self.vars,
                self.potential.terms().map(|(m, c)| {
                    let f = lambda.pow(m.exp(s) - 1).expect("λ ≠ 0");
                    (m.clone(), c * &f)
                }),
            )
        };
        Ok(OpenExtension {
            base: self.base.clone(),
            vars: self.vars.clone(),
            potential,
        })
    }
}

/// `⟨τ_{α_1}…τ_{α_n} σ^k⟩°` for `A_N` in closed form: `(n+k−2)!` when
/// `Σ(N+2−α_i) + k = N+2`, otherwise zero.
pub fn a_open_correlator(n_rank: usize, alphas: &[usize], k: usize) -> GaussianRational {
    let np2 = n_rank as i64 + 2;
    let total: i64 = alphas.iter().map(|&a| np2 - a as i64).sum::<i64>() + k as i64;
    let n = alphas.len() + k;
    if total != np2 || n < 2 || alphas.iter().any(|&a| a == 0 || a > n_rank) {
        return GaussianRational::zero();
    }
    factorial(n as u64 - 2)
}

/// `F°_{A_N}` assembled from the closed-form correlators.
pub fn open_potential_a(n: usize) -> Result<OpenExtension> {
    let base = saito_structure(Family::A, n)?;
    let vars = open_table(&base);
    // weight of t^α is N+2−α, weight of s is 1
    let mut weights: Vec<i64> = (1..=n).map(|a| (n + 2 - a) as i64).collect();
    weights.push(1);
    let mut f = MPoly::zero(&vars);
    for exps in weighted_tuples(&weights, n as i64 + 2) {
        let alphas: Vec<usize> = exps[..n]
            .iter()
            .enumerate()
            .flat_map(|(i, &e)| std::iter::repeat(i + 1).take(e as usize))
            .collect();
        let k = exps[n] as usize;
        let corr = a_open_correlator(n, &alphas, k);
        let mut denom = GaussianRational::one();
        for &e in &exps {
            denom = &denom * &factorial(e as u64);
        }
        f.add_term(Monomial::from_exps(exps), &(&corr / &denom));
    }
    OpenExtension::new(base, f)
}

/// `∂F°/∂s = s^{N+1}/(N+1) + Σ_k s^{k−1} v_k(t)`.
pub fn check_foan_relation(ext: &OpenExtension) -> Result<bool> {
    let n = ext.rank();
    let vars = ext.vars();
    let s = ext.s();
    let v = ext.base().v_of_t();
    if v.len() != n {
        return Err(Error::Unsupported("base carries no unfolding coordinates".into()));
    }
    let mut rhs = MPoly::var_pow(vars, s, n as i32 + 1).scale(&q(1, n as i64 + 1));
    for (k, vk) in v.iter().enumerate() {
        rhs.add_product(&vk.embed(vars)?, &MPoly::var_pow(vars, s, k as i32));
    }
    Ok(ext.potential().diff(s) == rhs)
}

fn pow2(e: usize) -> GaussianRational {
    GaussianRational::from_int(1 << e)
}

/// `F°_{D_N} = Σ_{k<N} v_k s^{2k−1} / (2^{k−1}(2k−1)) + s^{2N−1} / (2^{N−2}(2N−1)(2N−2)) + v_N² / (2s)`
/// with `v = v(t)`.
pub fn open_potential_d(n: usize) -> Result<OpenExtension> {
    let base = saito_structure(Family::D, n)?;
    let vars = open_table(&base);
    let s = n;
    let v: Vec<MPoly> = base.v_of_t().iter().map(|p| p.embed(&vars)).collect::<Result<_>>()?;
    let mut f = MPoly::zero(&vars);
    for k in 1..n {
        let c = (&pow2(k - 1) * &GaussianRational::from_int(2 * k as i64 - 1)).inv().unwrap();
        f.add_product(&v[k - 1], &MPoly::var_pow(&vars, s, 2 * k as i32 - 1).scale(&c));
    }
    let c = &pow2(n - 2) * &GaussianRational::from_int((2 * n as i64 - 1) * (2 * n as i64 - 2));
    f.add_assign_ref(&MPoly::var_pow(&vars, s, 2 * n as i32 - 1).scale(&c.inv().unwrap()));
    f.add_product(&v[n - 1].pow(2), &MPoly::var_pow(&vars, s, -1).scale(&q(1, 2)));
    OpenExtension::new(base, f)
}

/// `v_k = 2^{k−1}(2k−1) Coef_{s^{2k−1}} F°` for `k < N`, `v_N = √(2 Coef_{s^{−1}} F°)`.
pub fn extract_v_from_open_d(ext: &OpenExtension) -> Result<Vec<MPoly>> {
    let n = ext.rank();
    let s = ext.s();
    let t_vars = ext.base().t_vars();
    let mapping: Vec<Option<usize>> = (0..=n).map(|i| (i < n).then_some(i)).collect();
    let f = ext.potential();
    let mut out = Vec::with_capacity(n);
    for k in 1..n {
        let c = &pow2(k - 1) * &GaussianRational::from_int(2 * k as i64 - 1);
        out.push(f.coeff_of_power(s, 2 * k as i32 - 1).scale(&c).remap(t_vars, &mapping)?);
    }
    let vn = f.coeff_of_power(s, -1).scale_int(2).sqrt_monomial()?;
    out.push(vn.remap(t_vars, &mapping)?);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fixture(ext: &OpenExtension, src: &str) -> MPoly {
        MPoly::parse(src.trim(), ext.vars()).unwrap()
    }

    #[test]
    fn small_a_examples() {
        assert_eq!(open_potential_a(1).unwrap().potential().to_string(), "1/6*s^3 + t1*s");
        assert_eq!(
            open_potential_a(2).unwrap().potential().to_string(),
            "1/12*s^4 + 1/2*t2*s^2 + t1*s + 1/2*t2^2"
        );
    }

    /// Brute force over every monomial of bounded degree, independent of the
    /// weighted enumeration.
    #[test]
    fn a_coefficients_match_brute_force() {
        for n in 1..=4usize {
            let ext = open_potential_a(n).unwrap();
            let f = ext.potential();
            let mut seen = 0;
            let bound = n + 3;
            let mut exps = vec![0i32; n + 1];
            loop {
                let alphas: Vec<usize> = exps[..n]
                    .iter()
                    .enumerate()
                    .flat_map(|(i, &e)| std::iter::repeat(i + 1).take(e as usize))
                    .collect();
                let m = Monomial::from_exps(exps.clone());
                let mut d = f.clone();
                for (i, &e) in exps.iter().enumerate() {
                    d = d.diff_n(i, e as usize);
                }
                let expect = a_open_correlator(n, &alphas, exps[n] as usize);
                assert_eq!(d.at_origin().unwrap(), expect, "A{n} {exps:?}");
                if !f.coeff(&m).is_zero() {
                    seen += 1;
                }
                // odometer
                let mut i = 0;
                loop {
                    if i > n {
                        break;
                    }
                    exps[i] += 1;
                    if exps[i] as usize <= bound {
                        break;
                    }
                    exps[i] = 0;
                    i += 1;
                }
                if i > n {
                    break;
                }
            }
            assert_eq!(seen, f.len());
        }
    }

    #[test]
    fn top_s_coefficient() {
        for n in 1..=6 {
            let ext = open_potential_a(n).unwrap();
            let c = ext.potential().coeff(&Monomial::one(n + 1).with_exp(n, n as i32 + 2));
            assert_eq!(c, &factorial(n as u64) / &factorial(n as u64 + 2));
        }
    }

    #[test]
    fn foan_relation() {
        for n in 1..=6 {
            assert!(check_foan_relation(&open_potential_a(n).unwrap()).unwrap(), "A{n}");
        }
        let ext = open_potential_a(3).unwrap();
        let bent = ext.rescale(&q(2, 1)).unwrap();
        assert!(!check_foan_relation(&bent).unwrap());
    }

    #[test]
    fn printed_d_examples() {
        for (n, src) in [
            (4, include_str!("../../fixtures/Fo_D4.txt")),
            (5, include_str!("../../fixtures/Fo_D5.txt")),
        ] {
            let ext = open_potential_d(n).unwrap();
            assert_eq!(ext.potential().to_string(), fixture(&ext, src).to_string());
            assert_eq!(ext.potential().min_exponent(n), Some(-1));
            assert_eq!(ext.potential().coeff_of_power(n, -1).len(), 1);
        }
    }

    #[test]
    fn extraction_recovers_inverse_coordinates() {
        for n in 4..=6 {
            let ext = open_potential_d(n).unwrap();
            assert_eq!(extract_v_from_open_d(&ext).unwrap(), ext.base().v_of_t());
        }
        let ext = open_potential_d(4).unwrap();
        assert_eq!(extract_v_from_open_d(&ext).unwrap()[0].to_string(), "1/12*t3^3 + 1/2*t2*t3 + t1");
    }

    #[test]
    fn bad_pole_is_rejected() {
        let ext = open_potential_d(4).unwrap();
        let extra = MPoly::parse("t3/s", ext.vars()).unwrap();
        let bad = OpenExtension::new(ext.base().clone(), ext.potential() + &extra).unwrap();
        assert!(matches!(extract_v_from_open_d(&bad), Err(Error::NotPerfectSquare(_))));
    }

    #[test]
    fn homogeneity() {
        for n in 1..=5 {
            assert!(open_potential_a(n).unwrap().verify_homogeneity().passed());
        }
        for n in 4..=6 {
            assert!(open_potential_d(n).unwrap().verify_homogeneity().passed());
        }
        let ext = open_potential_a(2).unwrap();
        let bent = OpenExtension::new(
            ext.base().clone(),
            ext.potential() + &MPoly::parse("s^2", ext.vars()).unwrap(),
        )
        .unwrap();
        assert!(!bent.verify_homogeneity().passed());
    }

    #[test]
    fn rescaling() {
        let ext = open_potential_a(1).unwrap();
        assert_eq!(ext.rescale(&q(1, 1)).unwrap().potential(), ext.potential());
        assert_eq!(ext.rescale(&q(2, 1)).unwrap().potential().to_string(), "2/3*s^3 + t1*s");
        assert_eq!(ext.rescale(&q(0, 1)).unwrap().potential().to_string(), "t1*s");
        assert!(open_potential_a(2).unwrap().rescale(&q(0, 1)).is_err());
    }
}
