use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use num_rational::BigRational;
use num_traits::One;

use super::tensor::StructureTensor;
use super::unfolding::{Family, Unfolding};
use crate::error::{Error, Result};
use crate::exactalg::{GaussianRational, MPoly, Monomial, Var, VarTable};

/// Guard against a non-terminating rule set.
const MAX_REWRITES: usize = 1 << 22;

/// `lhs → rhs`, where `lhs` is a pure generator monomial.
#[derive(Clone, Debug, PartialEq)]
pub struct Rule {
    pub lhs: Monomial,
    pub rhs: MPoly,
}

/// A free module over a (Laurent) polynomial ring in `v`, presented as
/// `ring[x, y, w] / ideal` with a rewrite system for the ideal.
///
/// The table lists the coefficient variables first and the generators
/// (`x`, `y` and possibly `w`) last. The basis order is the order of
/// `Ψ(∂/∂v_1), Ψ(∂/∂v_2), …`.
#[derive(Clone, Debug)]
pub struct QuotientAlgebra {
    vars: Arc<VarTable>,
    coeff_vars: Arc<VarTable>,
    ncoeff: usize,
    gens: Gens,
    basis: Vec<Monomial>,
    labels: Vec<String>,
    index: HashMap<Vec<i32>, usize>,
    rules: Vec<Rule>,
}

type Key = (BigRational, i32, i32, i32);

/// Generator part of a table: where it starts and how `x`, `y` are weighted.
#[derive(Clone, Debug)]
struct Gens {
    ncoeff: usize,
    weights: [BigRational; 2],
}

impl Gens {
    /// Ordering key on generator monomials: weighted `(x, y)`-degree, then
    /// `w`-degree, then `y`-degree, then `x`-degree. Every rule decreases it.
    fn key(&self, g: &[i32]) -> Key {
        let deg = &self.weights[0] * BigRational::from_integer(g[0].into())
            + &self.weights[1] * BigRational::from_integer(g[1].into());
        (deg, g.get(2).copied().unwrap_or(0), g[1], g[0])
    }

    fn split(&self, m: &Monomial) -> (Vec<i32>, Monomial) {
        let e = m.exps();
        let mut coeff = e.to_vec();
        for c in &mut coeff[self.ncoeff..] {
            *c = 0;
        }
        (e[self.ncoeff..].to_vec(), Monomial::from_exps(coeff))
    }

    fn join(&self, g: &[i32], nvars: usize) -> Monomial {
        let mut e = vec![0; nvars];
        e[self.ncoeff..].copy_from_slice(g);
        Monomial::from_exps(e)
    }

    /// Rewrites `p` until no generator monomial is divisible by a left-hand
    /// side. Terms sharing a generator monomial are rewritten together.
    /// `alt` flips both the term and the rule priorities.
    fn reduce(&self, rules: &[Rule], p: &MPoly, alt: bool) -> Result<MPoly> {
        let vars = p.vars();
        let n = vars.len();
        let mut pending: BTreeMap<Key, (Vec<i32>, MPoly)> = BTreeMap::new();
        let push = |pending: &mut BTreeMap<Key, (Vec<i32>, MPoly)>, g: Vec<i32>, poly: MPoly| {
            pending
                .entry(self.key(&g))
                .or_insert_with(|| (g, MPoly::zero(vars)))
                .1
                .add_assign_ref(&poly);
        };
        for (m, c) in p.terms() {
            let (g, cm) = self.split(m);
            push(&mut pending, g, MPoly::monomial(vars, cm, c.clone()));
        }
        let lhs: Vec<Vec<i32>> = rules.iter().map(|r| r.lhs.exps()[self.ncoeff..].to_vec()).collect();
        let rhs: Vec<Vec<(Vec<i32>, Monomial, GaussianRational)>> = rules
            .iter()
            .map(|r| {
                r.rhs
                    .terms()
                    .map(|(m, c)| {
                        let (g, cm) = self.split(m);
                        (g, cm, c.clone())
                    })
                    .collect()
            })
            .collect();
        let mut out = MPoly::zero(vars);
        let mut steps = 0usize;
        loop {
            let next = if alt { pending.pop_first() } else { pending.pop_last() };
            let Some((_, (g, coeff))) = next else { break };
            if coeff.is_zero() {
                continue;
            }
            let divides = |l: &Vec<i32>| l.iter().zip(&g).all(|(a, b)| a <= b);
            let found = if alt {
                lhs.iter().rposition(divides)
            } else {
                lhs.iter().position(divides)
            };
            match found {
                None => out.add_assign_ref(&coeff.mul_term(&self.join(&g, n), &GaussianRational::one())),
                Some(i) => {
                    steps += 1;
                    if steps > MAX_REWRITES {
                        return Err(Error::Reduction("rewrite limit exceeded".into()));
                    }
                    for (rg, cm, c) in &rhs[i] {
                        let g2: Vec<i32> = g.iter().zip(&lhs[i]).zip(rg).map(|((a, b), r)| a - b + r).collect();
                        push(&mut pending, g2, coeff.mul_term(cm, c));
                    }
                }
            }
        }
        Ok(out)
    }
}

/// Solves `rel = 0` for the generator monomial `lhs`. The coefficient of
/// `lhs` in `rel` must be a unit of the coefficient ring.
fn orient(rel: &MPoly, lhs: &Monomial, ncoeff: usize) -> Result<Rule> {
    let vars = rel.vars();
    let mut unit: Option<(Monomial, GaussianRational)> = None;
    let mut rest = MPoly::zero(vars);
    for (m, c) in rel.terms() {
        if m.exps()[ncoeff..] == lhs.exps()[ncoeff..] {
            if unit.is_some() {
                return Err(Error::Reduction(format!(
                    "coefficient of the leading monomial in `{rel}` is not a unit"
                )));
            }
            unit = Some((m.div(lhs), c.clone()));
        } else {
            rest.add_term(m.clone(), c);
        }
    }
    let (um, uc) = unit.ok_or_else(|| {
        Error::Reduction(format!("relation `{rel}` does not contain the chosen monomial"))
    })?;
    for (i, &e) in um.exps().iter().enumerate() {
        if e != 0 && !vars.is_laurent(i) {
            return Err(Error::Reduction(format!(
                "coefficient of the leading monomial in `{rel}` is not a unit"
            )));
        }
    }
    let inv = Monomial::from_exps(um.exps().iter().map(|e| -e).collect());
    let factor = -uc.inv().expect("nonzero coefficient");
    Ok(Rule {
        lhs: lhs.clone(),
        rhs: rest.mul_term(&inv, &factor),
    })
}

fn label(vars: &VarTable, ncoeff: usize, m: &Monomial) -> String {
    let mut s = String::new();
    for (i, &e) in m.exps().iter().enumerate().skip(ncoeff) {
        match e {
            0 => {}
            1 => s.push_str(vars.name(i)),
            _ => s.push_str(&format!("{}^{}", vars.name(i), e)),
        }
    }
    if s.is_empty() {
        s.push('1');
    }
    format!("[{s}]")
}

struct Setup {
    vars: Arc<VarTable>,
    ncoeff: usize,
    has_w: bool,
    u: Unfolding,
}

impl Setup {
    fn new(u: &Unfolding, ext: bool) -> Result<Self> {
        let n = u.rank();
        let mut vars: Vec<Var> = u.vars().vars()[2..].to_vec();
        let qx = u.q_x().clone();
        let qy = u.q_y().clone();
        let mut w_weight = BigRational::one() - &qx;
        if ext {
            let (weight, laurent) = match u.family() {
                Family::A => (qx.clone(), false),
                Family::D => (&qx / BigRational::from_integer(2.into()), true),
                Family::E => return Err(Error::Unsupported("no extension for E".into())),
            };
            if laurent {
                w_weight += &weight;
            }
            vars.push(Var {
                name: format!("v{}", n + 1),
                weight,
                laurent,
            });
        }
        let ncoeff = vars.len();
        vars.push(Var { name: "x".into(), weight: qx, laurent: false });
        vars.push(Var { name: "y".into(), weight: qy, laurent: false });
        if ext {
            vars.push(Var { name: "w".into(), weight: w_weight, laurent: false });
        }
        Ok(Setup {
            vars: VarTable::new(vars)?,
            ncoeff,
            has_w: ext,
            u: u.clone(),
        })
    }

    fn gen(&self, x: i32, y: i32, w: i32) -> Monomial {
        let mut e = vec![0; self.vars.len()];
        e[self.ncoeff] = x;
        e[self.ncoeff + 1] = y;
        if self.has_w {
            e[self.ncoeff + 2] = w;
        } else {
            assert_eq!(w, 0);
        }
        Monomial::from_exps(e)
    }

    fn gen_poly(&self, x: i32, y: i32, w: i32) -> MPoly {
        MPoly::monomial(&self.vars, self.gen(x, y, w), GaussianRational::one())
    }

    fn v(&self, k: usize) -> MPoly {
        MPoly::var(&self.vars, k - 1)
    }

    fn lambda(&self) -> MPoly {
        self.u.lambda().embed(&self.vars).expect("unfolding variables are present")
    }

    fn orient(&self, rel: &MPoly, x: i32, y: i32, w: i32) -> Result<Rule> {
        orient(rel, &self.gen(x, y, w), self.ncoeff)
    }

    fn gens(&self) -> Gens {
        Gens {
            ncoeff: self.ncoeff,
            weights: [self.u.q_x().clone(), self.u.q_y().clone()],
        }
    }

    fn reduce(&self, rules: &[&Rule], p: &MPoly) -> Result<MPoly> {
        let owned: Vec<Rule> = rules.iter().map(|r| (*r).clone()).collect();
        self.gens().reduce(&owned, p, false)
    }

    fn finish(self, basis: Vec<(i32, i32, i32)>, rules: Vec<Rule>) -> QuotientAlgebra {
        let basis: Vec<Monomial> = basis.into_iter().map(|(x, y, w)| self.gen(x, y, w)).collect();
        let coeff_vars = VarTable::new(self.vars.vars()[..self.ncoeff].to_vec())
            .expect("sub-table of a valid table");
        let labels = basis.iter().map(|m| label(&self.vars, self.ncoeff, m)).collect();
        let index = basis
            .iter()
            .enumerate()
            .map(|(i, m)| (m.exps()[self.ncoeff..].to_vec(), i))
            .collect();
        QuotientAlgebra {
            gens: self.gens(),
            vars: self.vars,
            coeff_vars,
            ncoeff: self.ncoeff,
            basis,
            labels,
            index,
            rules,
        }
    }
}

/// `Â_W = ℂ[x, y, v] / (∂_xΛ, ∂_yΛ)` with basis `[φ_1], …, [φ_N]`.
pub fn build_closed_algebra(u: &Unfolding) -> Result<QuotientAlgebra> {
    let s = Setup::new(u, false)?;
    let n = u.rank() as i32;
    let lam = s.lambda();
    let dx = lam.diff(s.ncoeff);
    let dy = lam.diff(s.ncoeff + 1);
    let rules = match u.family() {
        Family::A => vec![s.orient(&dy, 0, 1, 0)?, s.orient(&dx, n, 0, 0)?],
        Family::D => {
            let xy = s.orient(&dy, 1, 1, 0)?;
            let y2 = s.orient(&dx, 0, 2, 0)?;
            // x·∂_xΛ with xy² reduced through [xy].
            let rel = s.reduce(&[&xy], &(&s.gen_poly(1, 0, 0) * &dx))?;
            let xn = s.orient(&rel, n - 1, 0, 0)?;
            vec![xy, y2, xn]
        }
        Family::E => match n {
            6 => vec![s.orient(&dy, 0, 2, 0)?, s.orient(&dx, 3, 0, 0)?],
            8 => vec![s.orient(&dy, 0, 2, 0)?, s.orient(&dx, 4, 0, 0)?],
            _ => {
                let y2 = s.orient(&dy, 0, 2, 0)?;
                let x2y = s.orient(&dx, 2, 1, 0)?;
                // x²·∂_yΛ with x²y² reduced through [x²y] only.
                let rel = s.reduce(&[&x2y], &(&s.gen_poly(2, 0, 0) * &dy))?;
                let x5 = s.orient(&rel, 5, 0, 0)?;
                vec![y2, x2y, x5]
            }
        },
    };
    let basis = u.phi().iter().map(|&(a, b)| (a, b, 0)).collect();
    Ok(s.finish(basis, rules))
}

/// `Â^ext_W` for `W = A_N` or `D_N`; the extra basis element `[w]` is last.
pub fn build_extended_algebra(u: &Unfolding) -> Result<QuotientAlgebra> {
    let s = Setup::new(u, true)?;
    let n = u.rank();
    let ni = n as i32;
    let lam = s.lambda();
    let dx = lam.diff(s.ncoeff);
    let dy = lam.diff(s.ncoeff + 1);
    let vn1 = s.v(n + 1);
    let w = s.gen_poly(0, 0, 1);
    let x = s.gen_poly(1, 0, 0);
    let rules = match u.family() {
        Family::A => {
            let rel_w = &w - &dx;
            let rel_xw = &(&w * &x) - &(&vn1 * &w);
            let y = s.orient(&dy, 0, 1, 0)?;
            let xn = s.orient(&rel_w, ni, 0, 0)?;
            let xw = s.orient(&rel_xw, 1, 0, 1)?;
            let rel = s.reduce(&[&xw], &(&w * &rel_w))?;
            let w2 = s.orient(&rel, 0, 0, 2)?;
            vec![y, xn, xw, w2]
        }
        Family::D => {
            let rel_w = &w - &(&vn1 * &dx);
            let rel_xw = &(&w * &x).scale_int(2) - &(&vn1.pow(2) * &w);
            let xy = s.orient(&dy, 1, 1, 0)?;
            let xw = s.orient(&rel_xw, 1, 0, 1)?;
            let rel = s.reduce(&[&xw], &(&w * &dy))?;
            let yw = s.orient(&rel, 0, 1, 1)?;
            let y2 = s.orient(&rel_w, 0, 2, 0)?;
            let rel = s.reduce(&[&xy, &xw], &(&x * &rel_w))?;
            let xn = s.orient(&rel, ni - 1, 0, 0)?;
            let rel = s.reduce(&[&xw, &yw], &(&w * &rel_w))?;
            let w2 = s.orient(&rel, 0, 0, 2)?;
            vec![xy, xw, yw, y2, xn, w2]
        }
        Family::E => unreachable!("rejected in Setup::new"),
    };
    let mut basis: Vec<(i32, i32, i32)> = u.phi().iter().map(|&(a, b)| (a, b, 0)).collect();
    basis.push((0, 0, 1));
    Ok(s.finish(basis, rules))
}

impl QuotientAlgebra {
    /// Coefficient variables followed by the generators.
    pub fn vars(&self) -> &Arc<VarTable> {
        &self.vars
    }

    /// The coefficient ring's variables (`v1, …`).
    pub fn coeff_vars(&self) -> &Arc<VarTable> {
        &self.coeff_vars
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    pub fn basis_element(&self, i: usize) -> MPoly {
        MPoly::monomial(&self.vars, self.basis[i].clone(), GaussianRational::one())
    }

    /// Generator `name` (`x`, `y` or `w`) as a polynomial.
    pub fn generator(&self, name: &str) -> Result<MPoly> {
        MPoly::var_named(&self.vars, name)
    }

    /// Replaces the right-hand side of the rule with the given left-hand side.
    pub fn with_rule(&self, lhs: &Monomial, rhs: MPoly) -> Result<Self> {
        let mut out = self.clone();
        let r = out
            .rules
            .iter_mut()
            .find(|r| &r.lhs == lhs)
            .ok_or_else(|| Error::Reduction("no rule with that left-hand side".into()))?;
        r.rhs = rhs;
        Ok(out)
    }

    pub fn normal_form(&self, p: &MPoly) -> Result<MPoly> {
        self.gens.reduce(&self.rules, p, false)
    }

    /// Normal form computed with the opposite term and rule priorities; used
    /// to test that the result does not depend on the reduction order.
    pub fn normal_form_alt(&self, p: &MPoly) -> Result<MPoly> {
        self.gens.reduce(&self.rules, p, true)
    }

    /// Coordinates of `p` in the basis, as polynomials in the coefficient
    /// variables.
    pub fn coordinates(&self, p: &MPoly) -> Result<Vec<MPoly>> {
        let nf = self.normal_form(p)?;
        let mut out = vec![MPoly::zero(&self.coeff_vars); self.rank()];
        for (m, c) in nf.terms() {
            let i = *self.index.get(&m.exps()[self.ncoeff..]).ok_or_else(|| {
                Error::Reduction(format!("irreducible monomial outside the basis in `{nf}`"))
            })?;
            out[i].add_term(Monomial::from_exps(m.exps()[..self.ncoeff].to_vec()), c);
        }
        Ok(out)
    }

    /// `(c_v)^a_{bc}` with `∂/∂v_k ↦` the k-th basis element.
    pub fn structure_constants(&self) -> Result<StructureTensor> {
        let n = self.rank();
        let mut t = StructureTensor::zeros(&self.coeff_vars, n);
        for b in 0..n {
            for c in b..n {
                let prod = &self.basis_element(b) * &self.basis_element(c);
                for (a, coord) in self.coordinates(&prod)?.into_iter().enumerate() {
                    t.set(a, b, c, coord.clone());
                    t.set(a, c, b, coord);
                }
            }
        }
        Ok(t)
    }

    /// Exhaustive check over basis triples; returns the first failing triple.
    pub fn check_associativity(&self) -> Result<Option<(usize, usize, usize)>> {
        let n = self.rank();
        let mut pair = vec![vec![MPoly::zero(&self.vars); n]; n];
        for a in 0..n {
            for b in a..n {
                let p = self.normal_form(&(&self.basis_element(a) * &self.basis_element(b)))?;
                pair[a][b] = p.clone();
                pair[b][a] = p;
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let left = self.normal_form(&(&pair[a][b] * &self.basis_element(c)))?;
                    let right = self.normal_form(&(&self.basis_element(a) * &pair[b][c]))?;
                    if left != right {
                        return Ok(Some((a, b, c)));
                    }
                }
            }
        }
        Ok(None)
    }

    /// Compares both reduction orders on every basis-pair product.
    pub fn check_confluence(&self) -> Result<Option<(usize, usize)>> {
        let n = self.rank();
        for a in 0..n {
            for b in a..n {
                let p = &self.basis_element(a) * &self.basis_element(b);
                if self.normal_form(&p)? != self.normal_form_alt(&p)? {
                    return Ok(Some((a, b)));
                }
            }
        }
        Ok(None)
    }

    /// Every rule strictly decreases the generator monomial in the order of
    /// `Gens::key`, which is a well-order on the monomials that occur.
    pub fn check_termination(&self) -> bool {
        let key = |m: &Monomial| self.gens.key(&m.exps()[self.ncoeff..]);
        self.rules.iter().all(|r| {
            let k = key(&r.lhs);
            r.rhs.terms().all(|(m, _)| key(m) < k)
        })
    }
}

/// `(c^ext)^a_{bc} = (c)^a_{bc}` for `a, b, c ≤ N`, and `(c^ext)^a_{b,N+1} = 0`
/// for `a ≤ N`.
pub fn ideal_quotient_consistency(ext: &QuotientAlgebra, closed: &QuotientAlgebra) -> Result<bool> {
    let n = closed.rank();
    if ext.rank() != n + 1 {
        return Err(Error::Mismatch("extended rank must be closed rank + 1".into()));
    }
    let ce = ext.structure_constants()?;
    let cc = closed.structure_constants()?;
    let target = ext.coeff_vars();
    for a in 0..n {
        for b in 0..=n {
            for c in 0..=n {
                let lhs = ce.get(a, b, c);
                let ok = if b < n && c < n {
                    lhs == &cc.get(a, b, c).embed(target)?
                } else {
                    lhs.is_zero()
                };
                if !ok {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::milnor::build_unfolding;

    fn alg(f: Family, n: usize, ext: bool) -> QuotientAlgebra {
        let u = build_unfolding(f, n).unwrap();
        if ext {
            build_extended_algebra(&u).unwrap()
        } else {
            build_closed_algebra(&u).unwrap()
        }
    }

    fn p(a: &QuotientAlgebra, s: &str) -> MPoly {
        MPoly::parse(s, a.vars()).unwrap()
    }

    #[test]
    fn closed_normal_forms() {
        let a2 = alg(Family::A, 2, false);
        assert_eq!(a2.normal_form(&p(&a2, "x^2")).unwrap(), p(&a2, "-v2"));
        assert_eq!(a2.normal_form(&p(&a2, "1")).unwrap(), p(&a2, "1"));
        let d4 = alg(Family::D, 4, false);
        assert_eq!(d4.normal_form(&p(&d4, "x*y")).unwrap(), p(&d4, "-v4/2"));
        assert_eq!(d4.labels(), ["[1]", "[x]", "[x^2]", "[y]"]);
    }

    #[test]
    fn extended_normal_forms() {
        for n in 1..=5 {
            let a = alg(Family::A, n, true);
            let mut expect = format!("v{}^{n}", n + 1);
            for k in 2..=n {
                expect += &format!(" + {}*v{k}*v{}^{}", k - 1, n + 1, k - 2);
            }
            let expect = &p(&a, &expect) * &p(&a, "w");
            assert_eq!(a.normal_form(&p(&a, "w^2")).unwrap(), expect, "A{n}");
        }
        for n in 4..=6 {
            let a = alg(Family::D, n, true);
            let v = format!("v{}", n + 1);
            let mut w2 = format!("{v}^{}/2^{} + v{n}^2/{v}^3", 2 * n - 3, n - 2);
            let mut y2 = format!("w/{v} - x^{}", n - 2);
            for k in 2..n {
                w2 += &format!(" + {}*v{k}*{v}^{}/2^{}", k - 1, 2 * k - 3, k - 2);
                y2 += &format!(" - {}*v{k}*x^{}", k - 1, k - 2);
            }
            let w2 = &p(&a, &format!("({w2})")) * &p(&a, "w");
            assert_eq!(a.normal_form(&p(&a, "w^2")).unwrap(), w2, "D{n}");
            assert_eq!(a.normal_form(&p(&a, "y^2")).unwrap(), p(&a, &y2), "D{n}");
            assert_eq!(
                a.normal_form(&p(&a, "w*x")).unwrap(),
                p(&a, &format!("{v}^2*w/2"))
            );
            assert_eq!(
                a.normal_form(&p(&a, "w*y")).unwrap(),
                p(&a, &format!("-v{n}*w/{v}^2"))
            );
        }
    }

    #[test]
    fn printed_products() {
        let d5 = alg(Family::D, 5, false).structure_constants().unwrap();
        let vars = d5.vars().clone();
        // ∂v2 ∘ ∂v5 = −v5/2 ∂v1
        assert_eq!(d5.get(0, 1, 4), &MPoly::parse("-v5/2", &vars).unwrap());
        assert!((1..5).all(|a| d5.get(a, 1, 4).is_zero()));

        let e6 = alg(Family::E, 6, false).structure_constants().unwrap();
        let v = e6.vars().clone();
        let expect = ["-v3/3", "-v5/3", "0", "-v6/3", "0", "0"];
        for (a, e) in expect.iter().enumerate() {
            assert_eq!(e6.get(a, 2, 2), &MPoly::parse(e, &v).unwrap(), "E6 a={a}");
        }
        let e7 = alg(Family::E, 7, false).structure_constants().unwrap();
        let v = e7.vars().clone();
        let expect = ["-v2/3", "-2*v4/3", "-v5/3", "-v6", "0", "-4*v7/3", "0"];
        for (a, e) in expect.iter().enumerate() {
            assert_eq!(e7.get(a, 2, 3), &MPoly::parse(e, &v).unwrap(), "E7 a={a}");
        }
        let e8 = alg(Family::E, 8, false).structure_constants().unwrap();
        let v = e8.vars().clone();
        let expect = ["-v3/3", "-v5/3", "0", "-v7/3", "0", "-v8/3", "0", "0"];
        for (a, e) in expect.iter().enumerate() {
            assert_eq!(e8.get(a, 2, 2), &MPoly::parse(e, &v).unwrap(), "E8 a={a}");
        }
    }

    #[test]
    fn extended_w_column() {
        let n = 4;
        let c = alg(Family::A, n, true).structure_constants().unwrap();
        for k in 0..n {
            let expect = MPoly::var_pow(c.vars(), n, k as i32);
            assert_eq!(c.get(n, k, n), &expect);
        }
    }

    #[test]
    fn unit_and_symmetry() {
        for (f, n, ext) in [(Family::A, 3, true), (Family::D, 5, true), (Family::E, 7, false)] {
            let c = alg(f, n, ext).structure_constants().unwrap();
            assert!(c.is_symmetric());
            for a in 0..c.dim() {
                for b in 0..c.dim() {
                    let expect = if a == b { MPoly::one(c.vars()) } else { MPoly::zero(c.vars()) };
                    assert_eq!(c.get(a, 0, b), &expect);
                }
            }
        }
    }

    #[test]
    fn rewrite_systems_are_sound() {
        let mut cases = vec![(Family::E, 6, false), (Family::E, 7, false), (Family::E, 8, false)];
        for n in 1..=5 {
            cases.push((Family::A, n, false));
            cases.push((Family::A, n, true));
        }
        for n in 4..=5 {
            cases.push((Family::D, n, false));
            cases.push((Family::D, n, true));
        }
        for (f, n, ext) in cases {
            let a = alg(f, n, ext);
            assert!(a.check_termination(), "{f}{n} ext={ext}");
            assert_eq!(a.check_confluence().unwrap(), None, "{f}{n} ext={ext}");
            assert_eq!(a.check_associativity().unwrap(), None, "{f}{n} ext={ext}");
        }
    }

    #[test]
    fn ideal_quotient() {
        for (f, n) in [(Family::A, 3), (Family::D, 4)] {
            let u = build_unfolding(f, n).unwrap();
            let ext = build_extended_algebra(&u).unwrap();
            let closed = build_closed_algebra(&u).unwrap();
            assert!(ideal_quotient_consistency(&ext, &closed).unwrap());
        }
    }

    #[test]
    fn corrupted_rules_are_detected() {
        let u = build_unfolding(Family::A, 3).unwrap();
        let ext = build_extended_algebra(&u).unwrap();
        let closed = build_closed_algebra(&u).unwrap();
        let lhs = ext.rules()[1].lhs.clone();
        let bad = ext.with_rule(&lhs, p(&ext, "w - v2")).unwrap();
        assert!(!ideal_quotient_consistency(&bad, &closed).unwrap());
        assert!(bad.check_associativity().unwrap().is_some());
    }
}
