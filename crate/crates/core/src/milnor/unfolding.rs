use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactalg::{q, rat, GaussianRational, MPoly, Monomial, VarTable};

/// Singularity family. `E` covers E6, E7 and E8.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    A,
    D,
    E,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::A => "A",
            Family::D => "D",
            Family::E => "E",
        })
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "A" | "a" => Ok(Family::A),
            "D" | "d" => Ok(Family::D),
            "E" | "e" => Ok(Family::E),
            _ => Err(Error::Unsupported(format!("unknown family `{s}`"))),
        }
    }
}

/// A universal unfolding `Λ = f + Σ v_k φ_k` together with its grading.
///
/// The variable table is `x, y, v1, …, vN`, weighted by `q_x, q_y, q_1, …`.
#[derive(Clone, Debug)]
pub struct Unfolding {
    family: Family,
    rank: usize,
    vars: Arc<VarTable>,
    v_vars: Arc<VarTable>,
    lambda: MPoly,
    /// `φ_k = x^a y^b`, stored as `(a, b)`.
    phi: Vec<(i32, i32)>,
    l: usize,
}

impl Unfolding {
    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// `x, y, v1, …, vN` with their weights.
    pub fn vars(&self) -> &Arc<VarTable> {
        &self.vars
    }

    /// `v1, …, vN` alone, with their weights.
    pub fn v_vars(&self) -> &Arc<VarTable> {
        &self.v_vars
    }

    pub fn lambda(&self) -> &MPoly {
        &self.lambda
    }

    pub fn phi(&self) -> &[(i32, i32)] {
        &self.phi
    }

    pub fn q_x(&self) -> &BigRational {
        self.vars.weight(0)
    }

    pub fn q_y(&self) -> &BigRational {
        self.vars.weight(1)
    }

    /// `q_1, …, q_N`.
    pub fn weights(&self) -> Vec<BigRational> {
        (0..self.rank).map(|k| self.vars.weight(k + 2).clone()).collect()
    }

    /// The distinguished 1-based index with minimal weight.
    pub fn l(&self) -> usize {
        self.l
    }

    /// Conformal dimension `1 − q_l`.
    pub fn delta(&self) -> BigRational {
        BigRational::one() - self.vars.weight(self.l + 1)
    }

    /// Short name such as `A3` or `E7`.
    pub fn name(&self) -> String {
        format!("{}{}", self.family, self.rank)
    }

    /// `q_x x Λ_x + q_y y Λ_y + Σ q_k v_k Λ_{v_k} = Λ`.
    pub fn euler_holds(&self) -> bool {
        self.lambda.euler() == self.lambda
    }
}

fn exps_xy(n: usize, a: i32, b: i32) -> Monomial {
    let mut e = vec![0; n];
    e[0] = a;
    e[1] = b;
    Monomial::from_exps(e)
}

/// Builds `Λ_W` for `A_N` (N ≥ 1), `D_N` (N ≥ 4) or `E_N` (N ∈ {6, 7, 8}).
pub fn build_unfolding(family: Family, n: usize) -> Result<Unfolding> {
    // f as a list of (coefficient, a, b); φ as (a, b).
    let (f, phi, l): (Vec<(GaussianRational, i32, i32)>, Vec<(i32, i32)>, usize) = match family {
        Family::A => {
            if n < 1 {
                return Err(Error::Unsupported("A_N needs N >= 1".into()));
            }
            let f = vec![(q(1, n as i64 + 1), n as i32 + 1, 0), (q(1, 1), 0, 2)];
            (f, (0..n as i32).map(|k| (k, 0)).collect(), n)
        }
        Family::D => {
            if n < 4 {
                return Err(Error::Unsupported("D_N needs N >= 4".into()));
            }
            let f = vec![(q(1, n as i64 - 1), n as i32 - 1, 0), (q(1, 1), 1, 2)];
            let mut phi: Vec<(i32, i32)> = (0..n as i32 - 1).map(|k| (k, 0)).collect();
            phi.push((0, 1));
            (f, phi, n - 1)
        }
        Family::E => {
            let one = || q(1, 1);
            match n {
                6 => (
                    vec![(one(), 4, 0), (one(), 0, 3)],
                    vec![(0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (2, 1)],
                    6,
                ),
                7 => (
                    vec![(one(), 3, 1), (one(), 0, 3)],
                    vec![(0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (3, 0), (4, 0)],
                    7,
                ),
                8 => (
                    vec![(one(), 5, 0), (one(), 0, 3)],
                    vec![(0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (3, 0), (2, 1), (3, 1)],
                    8,
                ),
                _ => return Err(Error::Unsupported(format!("E_{n} does not exist"))),
            }
        }
    };

    // Solve a1 qx + b1 qy = 1, a2 qx + b2 qy = 1 for the two monomials of f.
    let (a1, b1, a2, b2) = (f[0].1 as i64, f[0].2 as i64, f[1].1 as i64, f[1].2 as i64);
    let det = a1 * b2 - a2 * b1;
    let qx = rat(b2 - b1, det);
    let qy = rat(a1 - a2, det);
    let weight_of = |(a, b): (i32, i32)| {
        BigRational::one() - &qx * BigRational::from_integer(a.into())
            - &qy * BigRational::from_integer(b.into())
    };

    let mut builder = VarTable::builder().var("x", qx.clone()).var("y", qy.clone());
    for (k, &p) in phi.iter().enumerate() {
        builder = builder.var(format!("v{}", k + 1), weight_of(p));
    }
    let vars = builder.build()?;
    let nv = vars.len();

    let mut lambda = MPoly::zero(&vars);
    for (c, a, b) in &f {
        lambda.add_term(exps_xy(nv, *a, *b), c);
    }
    for (k, &(a, b)) in phi.iter().enumerate() {
        lambda.add_term(exps_xy(nv, a, b).with_exp(k + 2, 1), &GaussianRational::one());
    }

    let v_vars = VarTable::new(vars.vars()[2..].to_vec())?;
    let u = Unfolding {
        family,
        rank: n,
        vars,
        v_vars,
        lambda,
        phi,
        l,
    };
    debug_assert!(u.weights().iter().all(|w| !w.is_zero()));
    if !u.euler_holds() {
        return Err(Error::Inconsistent(format!("{} is not quasi-homogeneous", u.name())));
    }
    let min = u.weights().into_iter().min().expect("rank >= 1");
    if u.vars.weight(l + 1) != &min {
        return Err(Error::Inconsistent(format!("q_l is not minimal for {}", u.name())));
    }
    Ok(u)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn text(f: Family, n: usize) -> String {
        build_unfolding(f, n).unwrap().lambda().to_string()
    }

    #[test]
    fn displayed_unfoldings() {
        let u = build_unfolding(Family::A, 2).unwrap();
        let expect = MPoly::parse("x^3/3 + y^2 + v1 + v2*x", u.vars()).unwrap();
        assert_eq!(u.lambda(), &expect);
        let u = build_unfolding(Family::D, 4).unwrap();
        let expect = MPoly::parse("x^3/3 + x*y^2 + v1 + v2*x + v3*x^2 + v4*y", u.vars()).unwrap();
        assert_eq!(u.lambda(), &expect);
        assert_eq!(text(Family::A, 1), "1/2*x^2 + y^2 + v1");
    }

    #[test]
    fn weights_and_l() {
        let u = build_unfolding(Family::D, 4).unwrap();
        assert_eq!(u.weights(), vec![rat(1, 1), rat(2, 3), rat(1, 3), rat(2, 3)]);
        assert_eq!(u.l(), 3);
        assert_eq!(u.delta(), rat(2, 3));
        let e6 = build_unfolding(Family::E, 6).unwrap();
        assert_eq!(
            e6.weights(),
            vec![rat(1, 1), rat(3, 4), rat(2, 3), rat(1, 2), rat(5, 12), rat(1, 6)]
        );
        let e7 = build_unfolding(Family::E, 7).unwrap();
        assert_eq!(e7.delta(), rat(8, 9));
        let a = build_unfolding(Family::A, 5).unwrap();
        assert_eq!(a.weights()[1], rat(5, 6));
        assert_eq!(a.l(), 5);
    }

    #[test]
    fn rejects_bad_ranks() {
        assert!(build_unfolding(Family::D, 3).is_err());
        assert!(build_unfolding(Family::E, 5).is_err());
        assert!(build_unfolding(Family::A, 0).is_err());
    }
}
