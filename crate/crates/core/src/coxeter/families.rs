use num_traits::Zero;

use super::groups::{potential_coxeter, CoxeterGroup};
use crate::error::{Error, Result};
use crate::exactalg::{GaussianRational, MPoly};
use crate::openext::{open_potential_a, OpenExtension};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Branch {
    Plus,
    Minus,
}

/// All homogeneous open solutions for `A_N`, `B_N` or `I_2(k)`:
/// `λ^{−1} F°(t, λs)` with `F°` the generator (or, for even `k`, either
/// sign branch).
#[derive(Clone, Debug)]
pub struct SolutionFamily {
    pub group: CoxeterGroup,
    pub generator: OpenExtension,
    /// `F^{o,−} = 2 t^1 s − F°`, present for even `k`.
    pub minus: Option<OpenExtension>,
    /// Whether `λ = 0` belongs to the parameter domain.
    pub zero_admissible: bool,
}

impl SolutionFamily {
    pub fn member(&self, lambda: &GaussianRational, branch: Branch) -> Result<OpenExtension> {
        let g = match (branch, &self.minus) {
            (Branch::Plus, _) => &self.generator,
            (Branch::Minus, Some(m)) => m,
            (Branch::Minus, None) => {
                return Err(Error::Unsupported(format!("{} has no minus branch", self.group)))
            }
        };
        if lambda.is_zero() && !self.zero_admissible {
            return Err(Error::InvalidLambda(format!("λ = 0 is outside the domain for {}", self.group)));
        }
        lambda_rescale(g, lambda)
    }

    pub fn branches(&self) -> Vec<Branch> {
        if self.minus.is_some() {
            vec![Branch::Plus, Branch::Minus]
        } else {
            vec![Branch::Plus]
        }
    }
}

/// `λ^{−1} F°(t, λs)`.
pub fn lambda_rescale(ext: &OpenExtension, lambda: &GaussianRational) -> Result<OpenExtension> {
    ext.rescale(lambda)
}

/// `F°_{A_M}` restricted along `t^α ↦ images[α]` (an index into the
/// target's flat coordinates or zero), `s ↦ s`.
fn restricted(group: CoxeterGroup, m: usize, keep: impl Fn(usize) -> Option<usize>) -> Result<OpenExtension> {
    let a = open_potential_a(m)?;
    let base = potential_coxeter(group)?;
    let vars = crate::openext::open_table(&base);
    let mut images: Vec<MPoly> = (0..m)
        .map(|i| match keep(i) {
            Some(j) => MPoly::var(&vars, j),
            None => MPoly::zero(&vars),
        })
        .collect();
    images.push(MPoly::var(&vars, group.rank()));
    let f = a.potential().compose(&vars, &images)?;
    OpenExtension::new(base, f)
}

pub fn open_family(group: CoxeterGroup) -> Result<SolutionFamily> {
    let generator = match group {
        CoxeterGroup::A(n) => open_potential_a(n)?,
        CoxeterGroup::B(n) => restricted(group, 2 * n - 1, |i| (i % 2 == 0).then_some(i / 2))?,
        CoxeterGroup::I2(k) => restricted(group, k - 1, |i| match i {
            0 => Some(0),
            _ if i == k - 2 => Some(1),
            _ => None,
        })?,
        _ => return Err(Error::Unsupported(format!("{group} has no homogeneous open solutions"))),
    };
    let minus = match group {
        CoxeterGroup::I2(k) if k % 2 == 0 => {
            let vars = generator.vars();
            let ts = &MPoly::var(vars, 0) * &MPoly::var(vars, generator.s());
            let f = &ts.scale_int(2) - generator.potential();
            Some(OpenExtension::new(generator.base().clone(), f)?)
        }
        _ => None,
    };
    let zero_admissible = generator.potential().coeff_of_power(generator.s(), 0).is_zero();
    let expected = match group {
        CoxeterGroup::A(n) => n == 1,
        CoxeterGroup::B(_) => true,
        CoxeterGroup::I2(k) => k % 2 == 0,
        _ => unreachable!(),
    };
    if zero_admissible != expected {
        return Err(Error::Inconsistent(format!(
            "{group}: the s-free part of F° disagrees with the parameter domain"
        )));
    }
    Ok(SolutionFamily {
        group,
        generator,
        minus,
        zero_admissible,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::q;
    use crate::openext::verify_open_wdvv;

    #[test]
    fn i2_3_generator_is_a2() {
        let fam = open_family(CoxeterGroup::I2(3)).unwrap();
        assert_eq!(fam.generator.potential().to_string(), open_potential_a(2).unwrap().potential().to_string());
        assert!(!fam.zero_admissible);
        assert!(fam.member(&q(0, 1), Branch::Plus).is_err());
    }

    #[test]
    fn b2_admits_zero() {
        let fam = open_family(CoxeterGroup::I2(4)).unwrap();
        assert!(fam.zero_admissible);
        let z = fam.member(&q(0, 1), Branch::Plus).unwrap();
        assert!(z.potential().terms().all(|(m, _)| m.exp(2) == 1));
        assert!(verify_open_wdvv(&z).passed());
    }

    #[test]
    fn members_solve_open_wdvv() {
        for g in [CoxeterGroup::A(1), CoxeterGroup::A(3), CoxeterGroup::B(2), CoxeterGroup::B(3), CoxeterGroup::I2(5), CoxeterGroup::I2(6)] {
            let fam = open_family(g).unwrap();
            for b in fam.branches() {
                for l in [q(1, 1), q(2, 1), q(-1, 1), q(0, 1)] {
                    if l.is_zero() && !fam.zero_admissible {
                        continue;
                    }
                    let m = fam.member(&l, b).unwrap();
                    let r = verify_open_wdvv(&m);
                    assert!(r.passed(), "{g} {b:?} λ={l}: {r}");
                    assert!(m.verify_homogeneity().passed());
                }
            }
        }
    }

    #[test]
    fn a1_lambda_two() {
        let ext = open_potential_a(1).unwrap();
        assert_eq!(lambda_rescale(&ext, &q(2, 1)).unwrap().potential().to_string(), "2/3*s^3 + t1*s");
    }

    #[test]
    fn b_correlators_with_one_even_insertion_vanish() {
        for n in 2..=3 {
            let fa = crate::saito::saito_structure(crate::milnor::Family::A, 2 * n - 1).unwrap();
            let even: Vec<usize> = (1..2 * n - 1).step_by(2).collect();
            for &mu in &even {
                let d = fa.potential().diff(mu).at_zero(&even).unwrap();
                assert!(d.is_zero(), "A{}: t{}", 2 * n - 1, mu + 1);
            }
        }
    }

    #[test]
    fn no_family_for_h3() {
        assert!(open_family(CoxeterGroup::H3).is_err());
    }
}
