use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::families::{open_family, Branch, SolutionFamily};
use super::groups::{potential_coxeter, CoxeterGroup};
use crate::error::{Error, Result};
use crate::exactalg::{factorial, rat, GaussianRational, MPoly, Monomial, VarTable};
use crate::openext::{open_table, verify_open_wdvv, OpenExtension};
use crate::report::Report;

/// One solved branch of the `I_2(k)` ansatz.
#[derive(Clone, Debug)]
pub struct I2Solution {
    pub branch: Branch,
    /// `β_0, β_1, …` in the ansatz `t^1 s + Σ β_i s^{e_i}/e_i! (t^2)^i/i!`.
    pub betas: Vec<GaussianRational>,
    pub extension: OpenExtension,
    pub open_wdvv: Report,
    /// Canonical-form equality with the corresponding member of
    /// [`open_family`] at `λ = 1`.
    pub matches_family: bool,
}

#[derive(Clone, Debug)]
pub struct I2Classification {
    pub k: usize,
    /// `F_{I_2(k)} = (t^1)^2 t^2/2 + α_k (t^2)^{k+1}/(k+1)!`.
    pub alpha_k: GaussianRational,
    pub solutions: Vec<I2Solution>,
}

impl I2Classification {
    pub fn solution(&self, branch: Branch) -> Option<&I2Solution> {
        self.solutions.iter().find(|s| s.branch == branch)
    }

    pub fn passed(&self) -> bool {
        self.solutions.iter().all(|s| s.open_wdvv.passed() && s.matches_family)
    }
}

/// `l` and the number of `β`s: `k = 2l + 1` gives `β_0..β_{l+1}`, `k = 2l`
/// gives `β_0..β_l`.
fn shape(k: usize) -> (usize, usize) {
    let l = k / 2;
    if k % 2 == 1 {
        (l, l + 2)
    } else {
        (l, l + 1)
    }
}

/// s-exponent attached to `β_i`.
fn s_exp(k: usize, i: usize) -> usize {
    let (l, _) = shape(k);
    if k % 2 == 1 {
        2 * l + 2 - 2 * i
    } else {
        2 * l + 1 - 2 * i
    }
}

struct Ansatz {
    k: usize,
    vars: std::sync::Arc<VarTable>,
    nb: usize,
    /// Coefficients (in the `β`s) of the `(t^2)^a s^b` monomials of
    /// `F_{222} + F°_{22} F°_{ss} − (F°_{2s})²`.
    equations: Vec<MPoly>,
}

const T2: usize = 1;
const S: usize = 2;

fn b_idx(i: usize) -> usize {
    3 + i
}

impl Ansatz {
    fn new(k: usize, closed: &MPoly) -> Result<Self> {
        let (_, nb) = shape(k);
        let mut b = VarTable::builder()
            .var("t1", BigRational::one())
            .var("t2", rat(2, k as i64))
            .var("s", rat(1, k as i64));
        for i in 0..nb {
            b = b.var(format!("b{i}"), BigRational::zero());
        }
        let vars = b.build()?;
        let mut fo = &MPoly::var(&vars, 0) * &MPoly::var(&vars, S);
        for i in 0..nb {
            let e = s_exp(k, i);
            let c = (&factorial(e as u64) * &factorial(i as u64)).inv().expect("nonzero");
            let mut exps = vec![0; vars.len()];
            exps[T2] = i as i32;
            exps[S] = e as i32;
            exps[b_idx(i)] = 1;
            fo.add_term(Monomial::from_exps(exps), &c);
        }
        let f = closed.embed(&vars)?;
        let mut r = f.diff_n(T2, 3);
        r.add_product(&fo.diff_n(T2, 2), &fo.diff_n(S, 2));
        let f2s = fo.diff(T2).diff(S);
        r = &r - &(&f2s * &f2s);
        let mut groups: BTreeMap<(i32, i32, i32), MPoly> = BTreeMap::new();
        for (m, c) in r.terms() {
            let key = (m.exp(0), m.exp(T2), m.exp(S));
            let mono = m.with_exp(0, 0).with_exp(T2, 0).with_exp(S, 0);
            groups
                .entry(key)
                .or_insert_with(|| MPoly::zero(&vars))
                .add_term(mono, c);
        }
        // order by increasing s-power, i.e. P_0, P_1, ...
        let mut eqs: Vec<((i32, i32, i32), MPoly)> = groups.into_iter().collect();
        eqs.sort_by_key(|((_, a, b), _)| (*b, -*a));
        Ok(Ansatz {
            k,
            vars,
            nb,
            equations: eqs.into_iter().map(|(_, p)| p).collect(),
        })
    }

    fn substitute(&self, p: &MPoly, known: &[Option<GaussianRational>]) -> Result<MPoly> {
        let subs: Vec<(usize, MPoly)> = known
            .iter()
            .enumerate()
            .filter_map(|(i, v)| v.as_ref().map(|v| (b_idx(i), MPoly::constant(&self.vars, v.clone()))))
            .collect();
        p.substitute(&subs)
    }

    fn unknowns(&self, p: &MPoly) -> Vec<usize> {
        (0..self.nb).filter(|&i| !p.is_free_of(b_idx(i))).collect()
    }

    /// Repeatedly solves equations that are linear in a single unknown.
    fn propagate(&self, known: &mut [Option<GaussianRational>]) -> Result<()> {
        loop {
            let mut progress = false;
            for e in &self.equations {
                let e = self.substitute(e, known)?;
                let u = self.unknowns(&e);
                if u.len() != 1 || e.max_exponent(b_idx(u[0])) != Some(1) {
                    continue;
                }
                let j = b_idx(u[0]);
                let a = e.coeff_of_power(j, 1).as_constant().expect("single unknown");
                let c = e.coeff_of_power(j, 0).as_constant().expect("single unknown");
                known[u[0]] = Some(-(&c / &a));
                progress = true;
            }
            if !progress {
                return Ok(());
            }
        }
    }

    fn finish(&self, known: &[Option<GaussianRational>]) -> Result<Vec<GaussianRational>> {
        for e in &self.equations {
            let e = self.substitute(e, known)?;
            if !e.is_zero() {
                return Err(Error::Inconsistent(format!("I2({}): residual equation {e} ≠ 0", self.k)));
            }
        }
        known
            .iter()
            .enumerate()
            .map(|(i, v)| v.clone().ok_or_else(|| Error::Inconsistent(format!("β_{i} undetermined"))))
            .collect()
    }

    fn build(&self, betas: &[GaussianRational], base: &crate::saito::FrobeniusStructure) -> Result<OpenExtension> {
        let vars = open_table(base);
        let mut f = &MPoly::var(&vars, 0) * &MPoly::var(&vars, 2);
        for (i, b) in betas.iter().enumerate() {
            let e = s_exp(self.k, i);
            let c = &(&factorial(e as u64) * &factorial(i as u64)).inv().expect("nonzero") * b;
            f.add_term(Monomial::from_exps(vec![0, i as i32, e as i32]), &c);
        }
        OpenExtension::new(base.clone(), f)
    }
}

/// `β_i` read off an `I_2(k)` open potential.
fn betas_of(k: usize, ext: &OpenExtension) -> Vec<GaussianRational> {
    let (_, nb) = shape(k);
    (0..nb)
        .map(|i| {
            let e = s_exp(k, i);
            let c = ext.potential().coeff(&Monomial::from_exps(vec![0, i as i32, e as i32]));
            &(&c * &factorial(e as u64)) * &factorial(i as u64)
        })
        .collect()
}

/// Solves open WDVV for the general homogeneous `I_2(k)` ansatz satisfying
/// the unit condition.
///
/// Only `(α, β) = (2, 2)` of the second family is nontrivial; its
/// coefficients `P_i` form a triangular system. For odd `k` the top `β` is
/// the λ-parameter and everything else follows linearly. For even `k`,
/// `P_0` fixes `β_l` up to sign (the two branches), `β_{l−1}` is the
/// λ-parameter and the rest again follows linearly. The free parameter is
/// normalized to the value in the corresponding family generator, so each
/// solution must coincide with that generator exactly.
pub fn classify_i2(k: usize) -> Result<I2Classification> {
    classify_i2_normalized(k, &GaussianRational::one())
}

/// As [`classify_i2`], with the free parameter normalized to the family
/// member at `λ` instead of `λ = 1`.
pub fn classify_i2_normalized(k: usize, lambda: &GaussianRational) -> Result<I2Classification> {
    if k < 3 {
        return Err(Error::Unsupported("I2(k) needs k >= 3".into()));
    }
    let group = CoxeterGroup::I2(k);
    let base = potential_coxeter(group)?;
    let alpha_k = &base
        .potential()
        .coeff(&Monomial::from_exps(vec![0, k as i32 + 1]))
        * &factorial(k as u64 + 1);
    if alpha_k.is_zero() {
        return Err(Error::Inconsistent(format!("{group}: α_k = 0")));
    }
    let fam: SolutionFamily = open_family(group)?;
    let ansatz = Ansatz::new(k, base.potential())?;
    let (l, nb) = shape(k);
    let mut solutions = Vec::new();

    let mut finish = |branch: Branch, known: Vec<Option<GaussianRational>>| -> Result<()> {
        let mut known = known;
        ansatz.propagate(&mut known)?;
        let betas = ansatz.finish(&known)?;
        let extension = ansatz.build(&betas, &base)?;
        let open_wdvv = verify_open_wdvv(&extension);
        let target = fam.member(lambda, branch)?;
        let matches_family = target.potential().to_string() == extension.potential().to_string();
        solutions.push(I2Solution { branch, betas, extension, open_wdvv, matches_family });
        Ok(())
    };

    if k % 2 == 1 {
        let target = betas_of(k, &fam.member(lambda, Branch::Plus)?);
        let mut known = vec![None; nb];
        known[l + 1] = Some(target[l + 1].clone());
        finish(Branch::Plus, known)?;
    } else {
        // P_0 = a β_l² + c
        let p0 = ansatz
            .equations
            .iter()
            .find(|e| ansatz.unknowns(e) == vec![l])
            .ok_or_else(|| Error::Inconsistent(format!("{group}: no equation in β_{l} alone")))?;
        let j = b_idx(l);
        if p0.max_exponent(j) != Some(2) || !p0.coeff_of_power(j, 1).is_zero() {
            return Err(Error::Inconsistent(format!("{group}: P_0 = {p0} is not a pure square")));
        }
        let a = p0.coeff_of_power(j, 2).as_constant().expect("constant");
        let c = p0.coeff_of_power(j, 0).as_constant().expect("constant");
        let sq = -(&c / &a);
        let root = sq
            .sqrt_rational()
            .ok_or_else(|| Error::NotPerfectSquare(format!("β_{l}² = {sq}")))?;
        for branch in [Branch::Plus, Branch::Minus] {
            let target = betas_of(k, &fam.member(lambda, branch)?);
            let bl = if target[l] == root { root.clone() } else { -root.clone() };
            if bl != target[l] {
                return Err(Error::Inconsistent(format!("{group}: β_{l} = ±{root} misses the {branch:?} branch")));
            }
            let mut known = vec![None; nb];
            known[l] = Some(bl);
            known[l - 1] = Some(target[l - 1].clone());
            finish(branch, known)?;
        }
    }
    Ok(I2Classification { k, alpha_k, solutions })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::q;

    #[test]
    fn small_cases() {
        for k in 3..=6 {
            let c = classify_i2(k).unwrap();
            assert_eq!(c.solutions.len(), if k % 2 == 0 { 2 } else { 1 });
            for s in &c.solutions {
                assert!(s.open_wdvv.passed(), "I2({k}) {:?}: {}", s.branch, s.open_wdvv);
                assert!(s.matches_family, "I2({k}) {:?}: {}", s.branch, s.extension.potential());
            }
        }
    }

    #[test]
    fn k3_is_a2() {
        let c = classify_i2(3).unwrap();
        let a2 = crate::openext::open_potential_a(2).unwrap();
        assert_eq!(c.solutions[0].extension.potential().to_string(), a2.potential().to_string());
    }

    #[test]
    fn k4_branches_are_reflections() {
        let c = classify_i2(4).unwrap();
        let p = c.solution(Branch::Plus).unwrap().extension.potential().clone();
        let m = c.solution(Branch::Minus).unwrap().extension.potential().clone();
        let vars = p.vars().clone();
        let two_ts = (&MPoly::var(&vars, 0) * &MPoly::var(&vars, 2)).scale_int(2);
        assert_eq!(&two_ts - &p, m);
    }

    #[test]
    fn other_lambda_stays_in_orbit() {
        for k in [5, 6] {
            let c = classify_i2_normalized(k, &q(2, 1)).unwrap();
            assert!(c.passed());
        }
    }
}
