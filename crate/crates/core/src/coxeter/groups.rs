use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::exactalg::{rat, GaussianRational, MPoly};
use crate::milnor::Family;
use crate::saito::{saito_structure, t_table, FrobeniusStructure};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CoxeterGroup {
    A(usize),
    B(usize),
    D(usize),
    E(usize),
    F4,
    H3,
    H4,
    I2(usize),
}

impl CoxeterGroup {
    /// From a family tag (`A`, `B`, `D`, `E`, `F`, `H`, `I2`) and a number
    /// (the rank, or `k` for `I2`).
    pub fn from_parts(family: &str, n: usize) -> Result<Self> {
        let g = match family.to_ascii_uppercase().as_str() {
            "A" if n >= 1 => CoxeterGroup::A(n),
            "B" if n >= 2 => CoxeterGroup::B(n),
            "D" if n >= 4 => CoxeterGroup::D(n),
            "E" if (6..=8).contains(&n) => CoxeterGroup::E(n),
            "F" if n == 4 => CoxeterGroup::F4,
            "H" if n == 3 => CoxeterGroup::H3,
            "H" if n == 4 => CoxeterGroup::H4,
            "I2" | "I" if n >= 3 => CoxeterGroup::I2(n),
            _ => return Err(Error::Unsupported(format!("no Coxeter group {family}{n}"))),
        };
        Ok(g)
    }

    pub fn rank(&self) -> usize {
        match *self {
            CoxeterGroup::A(n) | CoxeterGroup::B(n) | CoxeterGroup::D(n) | CoxeterGroup::E(n) => n,
            CoxeterGroup::F4 | CoxeterGroup::H4 => 4,
            CoxeterGroup::H3 => 3,
            CoxeterGroup::I2(_) => 2,
        }
    }
}

impl fmt::Display for CoxeterGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoxeterGroup::A(n) => write!(f, "A{n}"),
            CoxeterGroup::B(n) => write!(f, "B{n}"),
            CoxeterGroup::D(n) => write!(f, "D{n}"),
            CoxeterGroup::E(n) => write!(f, "E{n}"),
            CoxeterGroup::F4 => write!(f, "F4"),
            CoxeterGroup::H3 => write!(f, "H3"),
            CoxeterGroup::H4 => write!(f, "H4"),
            CoxeterGroup::I2(k) => write!(f, "I2({k})"),
        }
    }
}

impl FromStr for CoxeterGroup {
    type Err = Error;
    /// `A3`, `D5`, `I2(5)`, `I25`, `F4`, ...
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (fam, num) = if let Some(rest) = s.strip_prefix("I2") {
            ("I2", rest.trim_start_matches('(').trim_end_matches(')'))
        } else if s.is_char_boundary(1) {
            s.split_at(1)
        } else {
            return Err(Error::Unsupported(format!("group `{s}`")));
        };
        let n: usize = num.parse().map_err(|_| Error::Unsupported(format!("group `{s}`")))?;
        Self::from_parts(fam, n)
    }
}

/// Degrees of the basic invariants, listed so that `q_α = d_α / h` follows
/// the ordering of the flat coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoxeterSpec {
    pub group: CoxeterGroup,
    pub degrees: Vec<usize>,
    pub h: usize,
}

impl CoxeterSpec {
    pub fn new(group: CoxeterGroup) -> Self {
        let degrees: Vec<usize> = match group {
            CoxeterGroup::A(n) => (2..=n + 1).rev().collect(),
            CoxeterGroup::B(n) => (1..=n).rev().map(|i| 2 * i).collect(),
            CoxeterGroup::D(n) => {
                let mut d: Vec<usize> = (1..n).rev().map(|i| 2 * i).collect();
                d.push(n);
                d
            }
            CoxeterGroup::E(6) => vec![12, 9, 8, 6, 5, 2],
            CoxeterGroup::E(7) => vec![18, 14, 12, 10, 8, 6, 2],
            CoxeterGroup::E(_) => vec![30, 24, 20, 18, 14, 12, 8, 2],
            CoxeterGroup::F4 => vec![12, 8, 6, 2],
            CoxeterGroup::H3 => vec![10, 6, 2],
            CoxeterGroup::H4 => vec![30, 20, 12, 2],
            CoxeterGroup::I2(k) => vec![k, 2],
        };
        let h = *degrees.iter().max().expect("nonempty");
        CoxeterSpec { group, degrees, h }
    }

    pub fn weights(&self) -> Vec<BigRational> {
        self.degrees.iter().map(|&d| rat(d as i64, self.h as i64)).collect()
    }

    /// `δ = 1 − 2/h`.
    pub fn delta(&self) -> BigRational {
        rat(1, 1) - rat(2, self.h as i64)
    }
}

/// `F(t)` with every `t^α` replaced by `images[α]`, the images living over
/// the flat coordinates of `group`.
fn substituted(f: &MPoly, group: CoxeterGroup, images: &[Option<(usize, GaussianRational)>]) -> Result<MPoly> {
    let vars = t_table(&CoxeterSpec::new(group).weights());
    let imgs: Vec<MPoly> = images
        .iter()
        .map(|img| match img {
            Some((i, c)) => MPoly::var(&vars, *i).scale(c),
            None => MPoly::zero(&vars),
        })
        .collect();
    f.compose(&vars, &imgs)
}

fn keep(i: usize) -> Option<(usize, GaussianRational)> {
    Some((i, GaussianRational::from_int(1)))
}

fn printed(src: &str, group: CoxeterGroup) -> Result<MPoly> {
    let vars = t_table(&CoxeterSpec::new(group).weights());
    MPoly::parse(src.trim(), &vars)
}

pub(crate) const F4_PRINTED: &str = include_str!("../../fixtures/F_F4.txt");
pub(crate) const H3_PRINTED: &str = include_str!("../../fixtures/F_H3.txt");
pub(crate) const H4_PRINTED: &str = include_str!("../../fixtures/F_H4.txt");

/// The potential of `group`: Saito's construction for `A`/`D`, substitution
/// into `F_{A}` for `B_N` and `I_2(k)`, and the printed potentials (in their
/// own normalization) for `F_4`, `H_3`, `H_4`. `E_N` is not available.
pub fn potential_coxeter(group: CoxeterGroup) -> Result<FrobeniusStructure> {
    let f = match group {
        CoxeterGroup::A(n) => return saito_structure(Family::A, n),
        CoxeterGroup::D(n) => return saito_structure(Family::D, n),
        CoxeterGroup::E(_) => {
            return Err(Error::Unsupported("E_N potentials (flat coordinates of E)".into()))
        }
        CoxeterGroup::B(n) => {
            let fa = saito_structure(Family::A, 2 * n - 1)?;
            // t^{2j−1} ↦ t^j, t^{2j} ↦ 0
            let images: Vec<_> = (0..2 * n - 1).map(|i| (i % 2 == 0).then(|| keep(i / 2)).flatten()).collect();
            substituted(fa.potential(), group, &images)?
        }
        CoxeterGroup::I2(k) => {
            let fa = saito_structure(Family::A, k - 1)?;
            let images: Vec<_> = (0..k - 1)
                .map(|i| match i {
                    0 => keep(0),
                    _ if i == k - 2 => keep(1),
                    _ => None,
                })
                .collect();
            substituted(fa.potential(), group, &images)?
        }
        CoxeterGroup::F4 => printed(F4_PRINTED, group)?,
        CoxeterGroup::H3 => printed(H3_PRINTED, group)?,
        CoxeterGroup::H4 => printed(H4_PRINTED, group)?,
    };
    FrobeniusStructure::from_potential(f)
}

/// `F_{D_6}(t^1, 0, t^2, 0, t^3, √−1 t^2)`; fails unless every coefficient
/// comes out rational.
pub fn h3_via_d6() -> Result<FrobeniusStructure> {
    let d6 = saito_structure(Family::D, 6)?;
    let one = GaussianRational::from_int(1);
    let images = vec![
        Some((0, one.clone())),
        None,
        Some((1, one.clone())),
        None,
        Some((2, one)),
        Some((1, GaussianRational::i())),
    ];
    let f = substituted(d6.potential(), CoxeterGroup::H3, &images)?;
    if !f.is_real() {
        return Err(Error::Inconsistent(format!("imaginary coefficients survive: {}", f.im_part())));
    }
    FrobeniusStructure::from_potential(f)
}

/// Weights of the unfolding coordinates for `D`/`E` (used by the obstruction
/// computations).
#[cfg(test)]
fn unfolding_weights(family: Family, n: usize) -> Result<Vec<BigRational>> {
    Ok(crate::milnor::build_unfolding(family, n)?.weights())
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::saito::{verify_homogeneity_with, verify_wdvv};

    #[test]
    fn parse_groups() {
        assert_eq!("I2(5)".parse::<CoxeterGroup>().unwrap(), CoxeterGroup::I2(5));
        assert_eq!("D4".parse::<CoxeterGroup>().unwrap(), CoxeterGroup::D(4));
        assert_eq!(CoxeterGroup::from_parts("h", 3).unwrap(), CoxeterGroup::H3);
        assert!("E9".parse::<CoxeterGroup>().is_err());
        assert!("B1".parse::<CoxeterGroup>().is_err());
    }

    #[test]
    fn spec_invariants() {
        for g in [
            CoxeterGroup::A(4),
            CoxeterGroup::B(3),
            CoxeterGroup::D(5),
            CoxeterGroup::E(6),
            CoxeterGroup::E(7),
            CoxeterGroup::E(8),
            CoxeterGroup::F4,
            CoxeterGroup::H3,
            CoxeterGroup::H4,
            CoxeterGroup::I2(7),
        ] {
            let s = CoxeterSpec::new(g);
            assert_eq!(s.degrees.len(), g.rank());
            assert_eq!(s.weights()[0], rat(1, 1));
            assert_eq!((rat(1, 1) - s.delta()) / rat(2, 1), rat(1, s.h as i64));
        }
        // D and E weights agree with the unfolding grading
        for (f, n, g) in [
            (Family::D, 5, CoxeterGroup::D(5)),
            (Family::E, 6, CoxeterGroup::E(6)),
            (Family::E, 7, CoxeterGroup::E(7)),
            (Family::E, 8, CoxeterGroup::E(8)),
        ] {
            assert_eq!(unfolding_weights(f, n).unwrap(), CoxeterSpec::new(g).weights());
        }
    }

    #[test]
    fn i2_3_is_a2() {
        let f = potential_coxeter(CoxeterGroup::I2(3)).unwrap();
        assert_eq!(f.potential().to_string(), "-1/24*t2^4 + 1/2*t1^2*t2");
    }

    #[test]
    fn substituted_potentials_are_frobenius() {
        for g in [CoxeterGroup::B(2), CoxeterGroup::B(3), CoxeterGroup::I2(6), CoxeterGroup::F4, CoxeterGroup::H3] {
            let fs = potential_coxeter(g).unwrap();
            let spec = CoxeterSpec::new(g);
            assert!(verify_wdvv(&fs).passed(), "{g}");
            assert!(verify_homogeneity_with(fs.potential(), &spec.weights(), &spec.delta()).passed(), "{g}");
        }
        assert!(potential_coxeter(CoxeterGroup::E(6)).is_err());
    }

    #[test]
    fn h3_from_d6_is_rational_and_frobenius() {
        let fs = h3_via_d6().unwrap();
        assert!(verify_wdvv(&fs).passed());
        let spec = CoxeterSpec::new(CoxeterGroup::H3);
        assert!(verify_homogeneity_with(fs.potential(), &spec.weights(), &spec.delta()).passed());
    }
}
