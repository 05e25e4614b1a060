use std::sync::Arc;

use num_rational::BigRational;
use num_traits::Zero;
use rayon::prelude::*;

use super::flat::{invert_coords, t_table};
use crate::error::{Error, Result};
use crate::exactalg::{invert_matrix, GaussianRational, MPoly, VarTable};
use crate::milnor::{StructureTensor, Unfolding};

/// A Frobenius manifold in flat coordinates `t1, …, tN`.
///
/// For structures coming from an unfolding, `t_of_v` and `v_of_t` hold the
/// coordinate changes; for potentials given directly they are empty.
#[derive(Clone, Debug)]
pub struct FrobeniusStructure {
    t_vars: Arc<VarTable>,
    delta: BigRational,
    eta: Vec<Vec<GaussianRational>>,
    eta_inv: Vec<Vec<GaussianRational>>,
    potential: MPoly,
    t_of_v: Vec<MPoly>,
    v_of_t: Vec<MPoly>,
}

impl FrobeniusStructure {
    /// Reads `η_{αβ} = ∂³F/∂t¹∂t^α∂t^β` and `δ = 3 − deg F` off a potential.
    /// The weights are those of the potential's table.
    pub fn from_potential(potential: MPoly) -> Result<Self> {
        let n = potential.nvars();
        let mut eta = vec![vec![GaussianRational::zero(); n]; n];
        let d1 = potential.diff(0);
        for a in 0..n {
            let da = d1.diff(a);
            for b in 0..n {
                eta[a][b] = da.diff(b).as_constant().ok_or_else(|| {
                    Error::Inconsistent(format!("η_{}{} is not constant", a + 1, b + 1))
                })?;
            }
        }
        let eta_inv = invert_matrix(&eta)
            .ok_or_else(|| Error::Inconsistent("η is degenerate".into()))?;
        let deg = potential
            .homogeneous_degree()
            .ok_or_else(|| Error::Inconsistent("potential is not quasi-homogeneous".into()))?;
        Ok(FrobeniusStructure {
            t_vars: potential.vars().clone(),
            delta: BigRational::from_integer(3.into()) - deg,
            eta,
            eta_inv,
            potential,
            t_of_v: Vec::new(),
            v_of_t: Vec::new(),
        })
    }

    pub fn rank(&self) -> usize {
        self.t_vars.len()
    }

    pub fn t_vars(&self) -> &Arc<VarTable> {
        &self.t_vars
    }

    /// `q_1, …, q_N`.
    pub fn weights(&self) -> Vec<BigRational> {
        self.t_vars.vars().iter().map(|v| v.weight.clone()).collect()
    }

    pub fn delta(&self) -> &BigRational {
        &self.delta
    }

    pub fn eta(&self) -> &[Vec<GaussianRational>] {
        &self.eta
    }

    pub fn eta_inv(&self) -> &[Vec<GaussianRational>] {
        &self.eta_inv
    }

    pub fn potential(&self) -> &MPoly {
        &self.potential
    }

    pub fn t_of_v(&self) -> &[MPoly] {
        &self.t_of_v
    }

    pub fn v_of_t(&self) -> &[MPoly] {
        &self.v_of_t
    }

    /// `F^α = η^{αμ} ∂F/∂t^μ`, the first `N` entries of the vector potential.
    pub fn vector_potential(&self) -> Vec<MPoly> {
        let n = self.rank();
        let grads: Vec<MPoly> = (0..n).map(|m| self.potential.diff(m)).collect();
        (0..n)
            .map(|a| {
                let mut f = MPoly::zero(&self.t_vars);
                for (m, g) in grads.iter().enumerate() {
                    if !self.eta_inv[a][m].is_zero() {
                        f.add_assign_ref(&g.scale(&self.eta_inv[a][m]));
                    }
                }
                f
            })
            .collect()
    }

    /// `c^α_{βγ} = η^{αμ} ∂³F/∂t^μ∂t^β∂t^γ`.
    pub fn structure_constants(&self) -> StructureTensor {
        let n = self.rank();
        let third = third_derivatives(&self.potential);
        let mut c = StructureTensor::zeros(&self.t_vars, n);
        for b in 0..n {
            for g in b..n {
                for a in 0..n {
                    let mut e = MPoly::zero(&self.t_vars);
                    for m in 0..n {
                        if !self.eta_inv[a][m].is_zero() {
                            e.add_assign_ref(&third.get(m, b, g).scale(&self.eta_inv[a][m]));
                        }
                    }
                    c.set(a, g, b, e.clone());
                    c.set(a, b, g, e);
                }
            }
        }
        c
    }
}

/// `∂³F/∂t^a∂t^b∂t^c` for all index triples.
pub fn third_derivatives(f: &MPoly) -> StructureTensor {
    let n = f.nvars();
    let mut t = StructureTensor::zeros(f.vars(), n);
    for a in 0..n {
        let fa = f.diff(a);
        for b in a..n {
            let fab = fa.diff(b);
            for c in b..n {
                let e = fab.diff(c);
                for (x, y, z) in [(a, b, c), (a, c, b), (b, a, c), (b, c, a), (c, a, b), (c, b, a)] {
                    t.set(x, y, z, e.clone());
                }
            }
        }
    }
    t
}

/// `(∂v_b/∂t^β)` as `jac[b][β]`.
pub(crate) fn jacobian(v_of_t: &[MPoly]) -> Vec<Vec<MPoly>> {
    let n = v_of_t.len();
    v_of_t.iter().map(|v| (0..n).map(|b| v.diff(b)).collect()).collect()
}

/// Rewrites `c^a_{bc}(v)` in the coordinates `t`:
/// `c^α_{βγ} = ∂t^α/∂v_a · c^a_{bc} · ∂v_b/∂t^β · ∂v_c/∂t^γ`, everything at `v(t)`.
pub(crate) fn tensor_to_flat(
    c_v: &StructureTensor,
    t_of_v: &[MPoly],
    v_of_t: &[MPoly],
    t_vars: &Arc<VarTable>,
) -> Result<StructureTensor> {
    let n = c_v.dim();
    let jac = jacobian(v_of_t);
    let back: Vec<Vec<MPoly>> = (0..n)
        .into_par_iter()
        .map(|a| {
            (0..n)
                .map(|k| t_of_v[a].diff(k).compose(t_vars, v_of_t))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<_>>()?;

    // p^a_{βγ} = Σ_{b,c} c^a_{bc}(v(t)) J^b_β J^c_γ, done in two contractions.
    let stage: Vec<Vec<Vec<MPoly>>> = (0..n)
        .into_par_iter()
        .map(|a| -> Result<Vec<Vec<MPoly>>> {
            let cv: Vec<Vec<MPoly>> = (0..n)
                .map(|b| (0..n).map(|c| c_v.get(a, b, c).compose(t_vars, v_of_t)).collect())
                .collect::<Result<_>>()?;
            let mut m = vec![vec![MPoly::zero(t_vars); n]; n];
            for beta in 0..n {
                for c in 0..n {
                    let mut e = MPoly::zero(t_vars);
                    for b in 0..n {
                        if !jac[b][beta].is_zero() && !cv[b][c].is_zero() {
                            e.add_product(&cv[b][c], &jac[b][beta]);
                        }
                    }
                    m[beta][c] = e;
                }
            }
            let mut p = vec![vec![MPoly::zero(t_vars); n]; n];
            for beta in 0..n {
                for gamma in beta..n {
                    let mut e = MPoly::zero(t_vars);
                    for c in 0..n {
                        if !jac[c][gamma].is_zero() && !m[beta][c].is_zero() {
                            e.add_product(&m[beta][c], &jac[c][gamma]);
                        }
                    }
                    p[gamma][beta] = e.clone();
                    p[beta][gamma] = e;
                }
            }
            Ok(p)
        })
        .collect::<Result<_>>()?;

    let mut out = StructureTensor::zeros(t_vars, n);
    for alpha in 0..n {
        for beta in 0..n {
            for gamma in beta..n {
                let mut e = MPoly::zero(t_vars);
                for a in 0..n {
                    if !back[alpha][a].is_zero() && !stage[a][beta][gamma].is_zero() {
                        e.add_product(&back[alpha][a], &stage[a][beta][gamma]);
                    }
                }
                out.set(alpha, gamma, beta, e.clone());
                out.set(alpha, beta, gamma, e);
            }
        }
    }
    Ok(out)
}

/// Recovers `F` from `c_{αβγ} = ∂³F/∂t^α∂t^β∂t^γ` by inverting the Euler
/// operator three times; components of degree zero (quadratic and lower
/// terms of `F`) are dropped.
pub fn potential_from_third_derivatives(c: &StructureTensor) -> Result<MPoly> {
    let n = c.dim();
    let vars = c.vars().clone();
    let euler_row = |a: usize, b: usize, entry: &dyn Fn(usize, usize, usize) -> MPoly| {
        let mut s = MPoly::zero(&vars);
        for g in 0..n {
            let e = entry(a, b, g);
            if !e.is_zero() {
                let qt = MPoly::var(&vars, g).scale(&GaussianRational::real(vars.weight(g).clone()));
                s.add_product(&qt, &e);
            }
        }
        s.euler_inverse()
    };
    let g2 = |a: usize, b: usize, g: usize| c.get(a, b, g).clone();
    let mut second = vec![vec![MPoly::zero(&vars); n]; n];
    for a in 0..n {
        for b in a..n {
            let e = euler_row(a, b, &g2);
            second[b][a] = e.clone();
            second[a][b] = e;
        }
    }
    let g1 = |a: usize, _b: usize, g: usize| second[a][g].clone();
    let first: Vec<MPoly> = (0..n).map(|a| euler_row(a, 0, &g1)).collect();
    let g0 = |_a: usize, _b: usize, g: usize| first[g].clone();
    let f = euler_row(0, 0, &g0);

    let third = third_derivatives(&f);
    for a in 0..n {
        for b in a..n {
            for g in b..n {
                if third.get(a, b, g) != c.get(a, b, g) {
                    return Err(Error::Integrability(format!(
                        "∂³F/∂t{}∂t{}∂t{} does not match the structure constants",
                        a + 1,
                        b + 1,
                        g + 1
                    )));
                }
            }
        }
    }
    Ok(f)
}

/// The Saito structure: metric `η(∂v_i, ∂v_j) = (c_v)^l_{ij}`, the product
/// moved to flat coordinates, and the potential `F`.
pub fn metric_and_potential(
    u: &Unfolding,
    c_v: &StructureTensor,
    t_of_v: &[MPoly],
) -> Result<FrobeniusStructure> {
    let n = u.rank();
    if c_v.dim() != n || t_of_v.len() != n {
        return Err(Error::Mismatch("rank of the structure constants".into()));
    }
    let t_vars = t_table(&u.weights());
    let v_of_t = invert_coords(t_of_v, &t_vars)?;
    let c_t = tensor_to_flat(c_v, t_of_v, &v_of_t, &t_vars)?;

    let l = u.l() - 1;
    let jac = jacobian(&v_of_t);
    let mut eta = vec![vec![GaussianRational::zero(); n]; n];
    for a in 0..n {
        for b in 0..n {
            let mut e = MPoly::zero(&t_vars);
            for i in 0..n {
                for j in 0..n {
                    let ev = c_v.get(l, i, j);
                    if ev.is_zero() || jac[i][a].is_zero() || jac[j][b].is_zero() {
                        continue;
                    }
                    let ev = ev.compose(&t_vars, &v_of_t)?;
                    e.add_assign_ref(&(&(&ev * &jac[i][a]) * &jac[j][b]));
                }
            }
            eta[a][b] = e.as_constant().ok_or_else(|| {
                Error::Inconsistent(format!("η_{}{} is not constant in t", a + 1, b + 1))
            })?;
        }
    }
    let eta_inv = invert_matrix(&eta).ok_or_else(|| Error::Inconsistent("η is degenerate".into()))?;

    let lowered = StructureTensor::from_fn(&t_vars, n, |a, b, g| {
        let mut e = MPoly::zero(&t_vars);
        for m in 0..n {
            if !eta[a][m].is_zero() {
                e.add_assign_ref(&c_t.get(m, b, g).scale(&eta[a][m]));
            }
        }
        e
    });
    let potential = potential_from_third_derivatives(&lowered)?;
    Ok(FrobeniusStructure {
        t_vars,
        delta: u.delta(),
        eta,
        eta_inv,
        potential,
        t_of_v: t_of_v.to_vec(),
        v_of_t,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::milnor::Family;
    use crate::saito::{saito_structure, verify_homogeneity, verify_wdvv};
    use num_traits::One;

    fn one() -> GaussianRational {
        GaussianRational::one()
    }

    #[test]
    fn a_series_metric_is_antidiagonal() {
        for n in 1..=6 {
            let fs = saito_structure(Family::A, n).unwrap();
            for a in 0..n {
                for b in 0..n {
                    let expect = if a + b + 2 == n + 1 { one() } else { GaussianRational::zero() };
                    assert_eq!(fs.eta()[a][b], expect, "A{n} η_{}{}", a + 1, b + 1);
                }
            }
        }
    }

    #[test]
    fn a2_potential() {
        let fs = saito_structure(Family::A, 2).unwrap();
        assert_eq!(fs.potential().to_string(), "-1/24*t2^4 + 1/2*t1^2*t2");
    }

    /// Three- and four-point correlators at the origin.
    #[test]
    fn a_series_correlators() {
        for n in 1..=5 {
            let fs = saito_structure(Family::A, n).unwrap();
            let f = fs.potential();
            for a in 1..=n {
                for b in a..=n {
                    for c in b..=n {
                        let d3 = f.diff(a - 1).diff(b - 1).diff(c - 1);
                        let expect = if a + b + c == n + 2 { 1 } else { 0 };
                        assert_eq!(d3.at_origin().unwrap(), GaussianRational::from_int(expect));
                        for d in c..=n {
                            let d4 = d3.diff(d - 1).at_origin().unwrap();
                            let al = [a, b, c, d];
                            let expect = if al.iter().sum::<usize>() == 2 * n + 4 {
                                -(al.iter().map(|&x| (x - 1).min(n + 1 - x)).min().unwrap() as i64)
                            } else {
                                0
                            };
                            assert_eq!(d4, GaussianRational::from_int(expect), "A{n} {al:?}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn jacobian_is_unitriangular_and_inverts() {
        for (f, n) in [(Family::A, 5), (Family::D, 5)] {
            let fs = saito_structure(f, n).unwrap();
            let tv = fs.t_vars().clone();
            let j = jacobian(fs.v_of_t());
            for (i, row) in j.iter().enumerate() {
                assert_eq!(row[i], MPoly::one(&tv));
            }
            // (∂t/∂v)(v(t)) · (∂v/∂t) = 1
            for a in 0..n {
                for b in 0..n {
                    let mut e = MPoly::zero(&tv);
                    for k in 0..n {
                        let dt = fs.t_of_v()[a].diff(k).compose(&tv, fs.v_of_t()).unwrap();
                        e.add_product(&dt, &j[k][b]);
                    }
                    let expect = if a == b { MPoly::one(&tv) } else { MPoly::zero(&tv) };
                    assert_eq!(e, expect);
                }
            }
        }
    }

    #[test]
    fn unit_row_in_flat_coordinates() {
        let fs = saito_structure(Family::D, 5).unwrap();
        let c = fs.structure_constants();
        for a in 0..5 {
            for b in 0..5 {
                let expect = if a == b { MPoly::one(c.vars()) } else { MPoly::zero(c.vars()) };
                assert_eq!(c.get(a, 0, b), &expect);
            }
        }
    }

    #[test]
    fn printed_potentials_are_reproduced() {
        for (n, src) in [
            (4, include_str!("../../fixtures/F_D4.txt")),
            (5, include_str!("../../fixtures/F_D5.txt")),
        ] {
            let fs = saito_structure(Family::D, n).unwrap();
            let printed = MPoly::parse(src.trim(), fs.t_vars()).unwrap();
            assert_eq!(fs.potential().to_string(), printed.to_string());
        }
    }

    #[test]
    fn wdvv_and_homogeneity_small() {
        for (f, n) in [(Family::A, 4), (Family::D, 4)] {
            let fs = saito_structure(f, n).unwrap();
            assert!(verify_wdvv(&fs).passed());
            assert!(verify_homogeneity(&fs).passed());
        }
    }

    #[test]
    fn integrability_failure_is_reported() {
        let tv = crate::saito::t_table(&[crate::exactalg::rat(1, 1), crate::exactalg::rat(1, 2)]);
        let mut c = StructureTensor::zeros(&tv, 2);
        c.set(0, 0, 1, MPoly::one(&tv));
        c.set(1, 1, 1, MPoly::var(&tv, 0));
        assert!(matches!(
            potential_from_third_derivatives(&c),
            Err(Error::Integrability(_))
        ));
    }
}
