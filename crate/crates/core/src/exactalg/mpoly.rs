//! Sparse multivariate (Laurent) polynomials over `ℚ(i)`.

use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::gaussian::GaussianRational;
use super::vars::VarTable;
use crate::error::{Error, Result};

/// Exponent vector, one entry per variable of the owning [`VarTable`].
///
/// Ordered graded-lexicographically: total degree first, then exponents
/// compared left to right.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(Vec<i32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn from_exps(exps: Vec<i32>) -> Self {
        Monomial(exps)
    }

    pub fn exps(&self) -> &[i32] {
        &self.0
    }

    pub fn exp(&self, var: usize) -> i32 {
        self.0[var]
    }

    pub fn total_degree(&self) -> i64 {
        self.0.iter().map(|&e| e as i64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self / other` if every exponent stays non-negative on the divided part.
    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn with_exp(&self, var: usize, e: i32) -> Monomial {
        let mut m = self.clone();
        m.0[var] = e;
        m
    }

    /// Exponent-wise difference `self / other` (may go negative).
    pub fn div(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse polynomial keyed by exponent vectors. Zero coefficients are never
/// stored, so structural equality is mathematical equality.
#[derive(Clone)]
pub struct MPoly {
    vars: Arc<VarTable>,
    terms: BTreeMap<Monomial, GaussianRational>,
}

impl PartialEq for MPoly {
    fn eq(&self, other: &Self) -> bool {
        same_table(&self.vars, &other.vars) && self.terms == other.terms
    }
}

impl Eq for MPoly {}

fn same_table(a: &Arc<VarTable>, b: &Arc<VarTable>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

impl MPoly {
    pub fn zero(vars: &Arc<VarTable>) -> Self {
        MPoly {
            vars: vars.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(vars: &Arc<VarTable>) -> Self {
        Self::constant(vars, GaussianRational::one())
    }

    pub fn constant(vars: &Arc<VarTable>, c: GaussianRational) -> Self {
        Self::monomial(vars, Monomial::one(vars.len()), c)
    }

    pub fn from_int(vars: &Arc<VarTable>, n: i64) -> Self {
        Self::constant(vars, GaussianRational::from_int(n))
    }

    pub fn monomial(vars: &Arc<VarTable>, m: Monomial, c: GaussianRational) -> Self {
        assert_eq!(m.0.len(), vars.len(), "monomial arity");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        MPoly {
            vars: vars.clone(),
            terms,
        }
    }

    pub fn var(vars: &Arc<VarTable>, idx: usize) -> Self {
        Self::var_pow(vars, idx, 1)
    }

    pub fn var_pow(vars: &Arc<VarTable>, idx: usize, e: i32) -> Self {
        let m = Monomial::one(vars.len()).with_exp(idx, e);
        Self::monomial(vars, m, GaussianRational::one())
    }

    pub fn var_named(vars: &Arc<VarTable>, name: &str) -> Result<Self> {
        Ok(Self::var(vars, vars.require(name)?))
    }

    /// Collects terms, summing repeated monomials and dropping zeros.
    pub fn from_terms<I>(vars: &Arc<VarTable>, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, GaussianRational)>,
    {
        let mut p = Self::zero(vars);
        for (m, c) in terms {
            p.add_term(m, &c);
        }
        p
    }

    pub fn vars(&self) -> &Arc<VarTable> {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &GaussianRational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> GaussianRational {
        self.terms.get(m).cloned().unwrap_or_else(GaussianRational::zero)
    }

    pub fn constant_term(&self) -> GaussianRational {
        self.coeff(&Monomial::one(self.nvars()))
    }

    /// The value if the polynomial is constant.
    pub fn as_constant(&self) -> Option<GaussianRational> {
        match self.terms.len() {
            0 => Some(GaussianRational::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.is_one().then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn is_real(&self) -> bool {
        self.terms.values().all(GaussianRational::is_real)
    }

    pub fn im_part(&self) -> MPoly {
        self.map_coeffs(|c| GaussianRational::real(c.im().clone()))
    }

    pub fn re_part(&self) -> MPoly {
        self.map_coeffs(|c| GaussianRational::real(c.re().clone()))
    }

    pub fn map_coeffs<F: Fn(&GaussianRational) -> GaussianRational>(&self, f: F) -> MPoly {
        MPoly::from_terms(&self.vars, self.terms.iter().map(|(m, c)| (m.clone(), f(c))))
    }

    /// Removes and returns the smallest term.
    pub fn pop_first(&mut self) -> Option<(Monomial, GaussianRational)> {
        self.terms.pop_first()
    }

    /// Removes and returns the largest term.
    pub fn pop_last(&mut self) -> Option<(Monomial, GaussianRational)> {
        self.terms.pop_last()
    }

    /// `c·m·self`.
    pub fn mul_term(&self, m: &Monomial, c: &GaussianRational) -> MPoly {
        MPoly::from_terms(
            &self.vars,
            self.terms.iter().map(|(k, v)| (k.mul(m), v * c)),
        )
    }

    pub fn add_term(&mut self, m: Monomial, c: &GaussianRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_table(&self, other: &MPoly) -> Result<()> {
        if same_table(&self.vars, &other.vars) {
            Ok(())
        } else {
            Err(Error::VarTableMismatch)
        }
    }

    pub fn try_add(&self, other: &MPoly) -> Result<MPoly> {
        self.check_table(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c);
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &MPoly) -> Result<MPoly> {
        self.check_table(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), &-c);
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &MPoly) -> Result<MPoly> {
        self.check_table(other)?;
        let mut out = MPoly::zero(&self.vars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), &(ca * cb));
            }
        }
        Ok(out)
    }

    pub fn add_assign_ref(&mut self, other: &MPoly) {
        assert!(same_table(&self.vars, &other.vars), "variable table mismatch");
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c);
        }
    }

    /// `self += a * b` without materialising the product.
    pub fn add_product(&mut self, a: &MPoly, b: &MPoly) {
        assert!(same_table(&a.vars, &b.vars), "variable table mismatch");
        for (ma, ca) in &a.terms {
            for (mb, cb) in &b.terms {
                self.add_term(ma.mul(mb), &(ca * cb));
            }
        }
    }

    pub fn scale(&self, c: &GaussianRational) -> MPoly {
        if c.is_zero() {
            return MPoly::zero(&self.vars);
        }
        MPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn scale_int(&self, n: i64) -> MPoly {
        self.scale(&GaussianRational::from_int(n))
    }

    pub fn pow(&self, e: u32) -> MPoly {
        let mut acc = MPoly::one(&self.vars);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Formal partial derivative. Negative exponents in the Laurent slot may
    /// become more negative; use [`MPoly::diff_admissible`] where the result
    /// must stay within simple poles.
    pub fn diff(&self, var: usize) -> MPoly {
        let mut out = MPoly::zero(&self.vars);
        for (m, c) in &self.terms {
            let e = m.0[var];
            if e == 0 {
                continue;
            }
            let nm = m.with_exp(var, e - 1);
            out.add_term(nm, &(c * &GaussianRational::from_int(e as i64)));
        }
        out
    }

    pub fn diff_n(&self, var: usize, n: usize) -> MPoly {
        (0..n).fold(self.clone(), |p, _| p.diff(var))
    }

    pub fn diff_admissible(&self, var: usize) -> Result<MPoly> {
        let d = self.diff(var);
        d.check_admissible()?;
        Ok(d)
    }

    /// Laurent-slot exponents must be at least `-1`; every other exponent is
    /// non-negative.
    pub fn check_admissible(&self) -> Result<()> {
        for m in self.terms.keys() {
            for (i, &e) in m.0.iter().enumerate() {
                let min = if self.vars.is_laurent(i) { -1 } else { 0 };
                if e < min {
                    return Err(Error::InadmissibleExponent {
                        var: self.vars.name(i).to_string(),
                        exponent: e,
                    });
                }
            }
        }
        Ok(())
    }

    pub fn is_admissible(&self) -> bool {
        self.check_admissible().is_ok()
    }

    pub fn min_exponent(&self, var: usize) -> Option<i32> {
        self.terms.keys().map(|m| m.0[var]).min()
    }

    pub fn max_exponent(&self, var: usize) -> Option<i32> {
        self.terms.keys().map(|m| m.0[var]).max()
    }

    /// Coefficient of `var^k`, as a polynomial with that exponent cleared.
    pub fn coeff_of_power(&self, var: usize, k: i32) -> MPoly {
        MPoly::from_terms(
            &self.vars,
            self.terms
                .iter()
                .filter(|(m, _)| m.0[var] == k)
                .map(|(m, c)| (m.with_exp(var, 0), c.clone())),
        )
    }

    /// Sets the listed variables to zero. Fails if one of them appears with a
    /// negative exponent.
    pub fn at_zero(&self, vars: &[usize]) -> Result<MPoly> {
        let mut out = MPoly::zero(&self.vars);
        for (m, c) in &self.terms {
            let mut keep = true;
            for &v in vars {
                let e = m.0[v];
                if e < 0 {
                    return Err(Error::InadmissibleExponent {
                        var: self.vars.name(v).to_string(),
                        exponent: e,
                    });
                }
                if e > 0 {
                    keep = false;
                }
            }
            if keep {
                out.add_term(m.clone(), c);
            }
        }
        Ok(out)
    }

    /// Value at the origin of every variable.
    pub fn at_origin(&self) -> Result<GaussianRational> {
        let all: Vec<usize> = (0..self.nvars()).collect();
        Ok(self.at_zero(&all)?.constant_term())
    }

    /// Moves the polynomial into `target`, sending variable `i` to
    /// `mapping[i]`. Variables mapped to `None` must not occur.
    pub fn remap(&self, target: &Arc<VarTable>, mapping: &[Option<usize>]) -> Result<MPoly> {
        assert_eq!(mapping.len(), self.nvars());
        let mut out = MPoly::zero(target);
        for (m, c) in &self.terms {
            let mut exps = vec![0; target.len()];
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                match mapping[i] {
                    Some(j) => {
                        if e < 0 && !target.is_laurent(j) {
                            return Err(Error::InadmissibleExponent {
                                var: target.name(j).to_string(),
                                exponent: e,
                            });
                        }
                        exps[j] += e;
                    }
                    None => {
                        return Err(Error::UnknownVariable(self.vars.name(i).to_string()))
                    }
                }
            }
            out.add_term(Monomial(exps), c);
        }
        Ok(out)
    }

    /// Moves into a table that contains every variable of `self` by name.
    pub fn embed(&self, target: &Arc<VarTable>) -> Result<MPoly> {
        let mapping: Vec<Option<usize>> = self
            .vars
            .vars()
            .iter()
            .map(|v| target.index_of(&v.name))
            .collect();
        self.remap(target, &mapping)
    }

    /// Composition: variable `i` is replaced by `images[i]`, every image living
    /// over `target`. A negative power may only be taken of an image that is a
    /// single invertible monomial in the Laurent slot.
    pub fn compose(&self, target: &Arc<VarTable>, images: &[MPoly]) -> Result<MPoly> {
        assert_eq!(images.len(), self.nvars(), "one image per variable");
        for img in images {
            if !same_table(img.vars(), target) {
                return Err(Error::VarTableMismatch);
            }
        }
        let mut cache = PowerCache::new(images);
        let mut out = MPoly::zero(target);
        for (m, c) in &self.terms {
            let mut term = MPoly::constant(target, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let p = cache.power(i, e, &self.vars)?;
                term = &term * p;
                if term.is_zero() {
                    break;
                }
            }
            out.add_assign_ref(&term);
        }
        Ok(out)
    }

    /// Replaces the assigned variables, leaving the rest untouched.
    pub fn substitute(&self, assignments: &[(usize, MPoly)]) -> Result<MPoly> {
        let mut images: Vec<MPoly> = (0..self.nvars()).map(|i| MPoly::var(&self.vars, i)).collect();
        for (i, img) in assignments {
            self.check_table(img)?;
            images[*i] = img.clone();
        }
        self.compose(&self.vars.clone(), &images)
    }

    pub fn substitute_named(&self, assignments: &[(&str, MPoly)]) -> Result<MPoly> {
        let idx: Result<Vec<(usize, MPoly)>> = assignments
            .iter()
            .map(|(n, p)| Ok((self.vars.require(n)?, p.clone())))
            .collect();
        self.substitute(&idx?)
    }

    pub fn weighted_degree(&self, m: &Monomial) -> BigRational {
        let mut d = BigRational::zero();
        for (i, &e) in m.0.iter().enumerate() {
            if e != 0 {
                d += self.vars.weight(i) * BigRational::from_integer(BigInt::from(e));
            }
        }
        d
    }

    /// Splits into weighted-homogeneous components, in increasing degree.
    pub fn weighted_degree_decompose(&self) -> Vec<(BigRational, MPoly)> {
        let mut parts: BTreeMap<BigRational, MPoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            parts
                .entry(self.weighted_degree(m))
                .or_insert_with(|| MPoly::zero(&self.vars))
                .add_term(m.clone(), c);
        }
        parts.into_iter().collect()
    }

    /// The weighted degree, if the polynomial is nonzero and homogeneous.
    pub fn homogeneous_degree(&self) -> Option<BigRational> {
        let mut degs = self.terms.keys().map(|m| self.weighted_degree(m));
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    /// Euler operator `Σ w_i x_i ∂/∂x_i`, applied termwise.
    pub fn euler(&self) -> MPoly {
        MPoly::from_terms(
            &self.vars,
            self.terms.iter().map(|(m, c)| {
                (m.clone(), c * &GaussianRational::real(self.weighted_degree(m)))
            }),
        )
    }

    /// Inverse of the Euler operator on components of nonzero degree; the
    /// degree-zero component is discarded.
    pub fn euler_inverse(&self) -> MPoly {
        MPoly::from_terms(
            &self.vars,
            self.terms.iter().filter_map(|(m, c)| {
                let d = self.weighted_degree(m);
                (!d.is_zero()).then(|| (m.clone(), c * &GaussianRational::real(d.recip())))
            }),
        )
    }

    /// Total degree of the highest term, ignoring weights.
    pub fn total_degree(&self) -> Option<i64> {
        self.terms.keys().map(Monomial::total_degree).max()
    }

    /// Drops all terms of total degree below `d`.
    pub fn truncate_below(&self, d: i64) -> MPoly {
        MPoly::from_terms(
            &self.vars,
            self.terms
                .iter()
                .filter(|(m, _)| m.total_degree() >= d)
                .map(|(m, c)| (m.clone(), c.clone())),
        )
    }

    /// True if no term mentions `var`.
    pub fn is_free_of(&self, var: usize) -> bool {
        self.terms.keys().all(|m| m.0[var] == 0)
    }

    /// Largest term in graded-lex order.
    pub fn leading_term(&self) -> Option<(&Monomial, &GaussianRational)> {
        self.terms.iter().next_back()
    }

    /// Exact square root of a single-term polynomial with even exponents and
    /// a square rational coefficient. The positive root is returned.
    pub fn sqrt_monomial(&self) -> Result<MPoly> {
        let describe = || format!("{self}");
        if self.terms.len() != 1 {
            return Err(Error::NotPerfectSquare(describe()));
        }
        let (m, c) = self.terms.iter().next().unwrap();
        if m.0.iter().any(|e| e % 2 != 0) {
            return Err(Error::NotPerfectSquare(describe()));
        }
        let root = c.sqrt_rational().ok_or_else(|| Error::NotPerfectSquare(describe()))?;
        let half = Monomial(m.0.iter().map(|e| e / 2).collect());
        Ok(MPoly::monomial(&self.vars, half, root))
    }
}

struct PowerCache<'a> {
    images: &'a [MPoly],
    pos: Vec<Vec<MPoly>>,
    neg: Vec<Vec<MPoly>>,
}

impl<'a> PowerCache<'a> {
    fn new(images: &'a [MPoly]) -> Self {
        PowerCache {
            images,
            pos: images.iter().map(|img| vec![MPoly::one(img.vars()), img.clone()]).collect(),
            neg: vec![Vec::new(); images.len()],
        }
    }

    fn power(&mut self, i: usize, e: i32, src: &VarTable) -> Result<&MPoly> {
        if e > 0 {
            let e = e as usize;
            while self.pos[i].len() <= e {
                let next = self.pos[i].last().unwrap() * &self.images[i];
                self.pos[i].push(next);
            }
            return Ok(&self.pos[i][e]);
        }
        if self.neg[i].is_empty() {
            let img = &self.images[i];
            let bad = || Error::InadmissibleSubstitution(src.name(i).to_string());
            if img.len() != 1 {
                return Err(bad());
            }
            let (m, c) = img.terms.iter().next().unwrap();
            let cinv = c.inv().ok_or_else(bad)?;
            for (j, &ej) in m.0.iter().enumerate() {
                if ej != 0 && !img.vars.is_laurent(j) {
                    return Err(bad());
                }
            }
            let minv = Monomial(m.0.iter().map(|e| -e).collect());
            self.neg[i] = vec![MPoly::one(img.vars()), MPoly::monomial(img.vars(), minv, cinv)];
        }
        let k = (-e) as usize;
        while self.neg[i].len() <= k {
            let next = self.neg[i].last().unwrap() * &self.neg[i][1];
            self.neg[i].push(next);
        }
        Ok(&self.neg[i][k])
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MPoly({self})")
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $try:ident) => {
        impl<'a> $tr<&'a MPoly> for &'a MPoly {
            type Output = MPoly;
            /// Panics if the operands live over different variable tables.
            fn $m(self, rhs: &MPoly) -> MPoly {
                self.$try(rhs).expect("variable table mismatch")
            }
        }
        impl $tr<MPoly> for MPoly {
            type Output = MPoly;
            fn $m(self, rhs: MPoly) -> MPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        self.map_coeffs(|c| -c)
    }
}

impl Neg for MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::vars::VarTable;

    fn q(n: i64, d: i64) -> GaussianRational {
        GaussianRational::ratio(n, d)
    }

    fn table() -> Arc<VarTable> {
        VarTable::builder()
            .var("x", BigRational::new(1.into(), 3.into()))
            .var("t2", BigRational::new(1.into(), 2.into()))
            .laurent_var("s", BigRational::new(1.into(), 4.into()))
            .build()
            .unwrap()
    }

    #[test]
    fn difference_of_squares() {
        let v = table();
        let x = MPoly::var(&v, 0);
        let one = MPoly::one(&v);
        let p = &(&x + &one) * &(&x - &one);
        assert_eq!(p, &x.pow(2) - &one);
    }

    #[test]
    fn laurent_cancellation() {
        let v = table();
        let s = MPoly::var(&v, 2);
        let sinv = MPoly::var_pow(&v, 2, -1);
        assert_eq!(&sinv * &s, MPoly::one(&v));
    }

    #[test]
    fn like_terms_merge() {
        let v = table();
        let half = MPoly::var(&v, 1).scale(&q(1, 2)) * MPoly::var_pow(&v, 2, 2);
        let sum = &half + &half;
        assert_eq!(sum, MPoly::var(&v, 1) * MPoly::var_pow(&v, 2, 2));
        assert_eq!(sum.len(), 1);
    }

    #[test]
    fn derivatives() {
        let v = VarTable::plain(&["t1", "t2", "t3"]);
        let t1 = MPoly::var(&v, 0);
        let t3 = MPoly::var(&v, 2);
        let p = (&t1.pow(2) * &t3).scale(&q(1, 2));
        assert_eq!(p.diff(0), &t1 * &t3);
        assert!(MPoly::from_int(&v, 7).diff(1).is_zero());
    }

    #[test]
    fn laurent_derivative_and_admissibility() {
        let v = table();
        let p = (MPoly::var(&v, 1).pow(2) * MPoly::var_pow(&v, 2, -1)).scale(&q(1, 2));
        let d = p.diff(2);
        let expected = (MPoly::var(&v, 1).pow(2) * MPoly::var_pow(&v, 2, -2)).scale(&q(-1, 2));
        assert_eq!(d, expected);
        assert!(p.is_admissible());
        assert!(p.diff_admissible(2).is_err());
    }

    #[test]
    fn table_mismatch_is_an_error() {
        let a = MPoly::var(&VarTable::plain(&["x"]), 0);
        let b = MPoly::var(&VarTable::plain(&["y"]), 0);
        assert_eq!(a.try_add(&b), Err(Error::VarTableMismatch));
        assert_eq!(a.try_mul(&b), Err(Error::VarTableMismatch));
    }

    #[test]
    fn substitution_zeroing() {
        let v = VarTable::plain(&["x", "y", "v1", "v2"]);
        let x = MPoly::var(&v, 0);
        let y = MPoly::var(&v, 1);
        let lam = x.pow(3).scale(&q(1, 3)) + y.pow(2) + MPoly::var(&v, 2) + MPoly::var(&v, 3) * x;
        let z = MPoly::zero(&v);
        let r = lam.substitute(&[(0, z.clone()), (1, z)]).unwrap();
        assert_eq!(r, MPoly::var(&v, 2));
    }

    #[test]
    fn substitution_into_pole_needs_monomial() {
        let v = table();
        let p = MPoly::var_pow(&v, 2, -1);
        let ok = p.substitute(&[(2, MPoly::var(&v, 2).scale(&q(3, 1)))]).unwrap();
        assert_eq!(ok, MPoly::var_pow(&v, 2, -1).scale(&q(1, 3)));
        let bad = p.substitute(&[(2, MPoly::var(&v, 2) + MPoly::one(&v))]);
        assert!(matches!(bad, Err(Error::InadmissibleSubstitution(_))));
    }

    #[test]
    fn decomposition_by_weight() {
        let v = VarTable::builder()
            .var("t1", BigRational::one())
            .laurent_var("s", BigRational::new(1.into(), 5.into()))
            .build()
            .unwrap();
        let p = MPoly::var(&v, 0) + MPoly::var(&v, 1);
        let parts = p.weighted_degree_decompose();
        assert_eq!(parts.len(), 2);
        assert_eq!(parts[0].0, BigRational::new(1.into(), 5.into()));
        assert_eq!(parts[1].0, BigRational::one());
        assert!(MPoly::zero(&v).weighted_degree_decompose().is_empty());
    }

    #[test]
    fn perfect_square_monomial() {
        let v = table();
        let p = MPoly::var(&v, 1).pow(2).scale(&q(9, 4));
        assert_eq!(p.sqrt_monomial().unwrap(), MPoly::var(&v, 1).scale(&q(3, 2)));
        assert!(MPoly::var(&v, 1).sqrt_monomial().is_err());
    }
}
