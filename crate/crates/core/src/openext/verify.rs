use std::sync::Arc;

use num_rational::BigRational;
use num_traits::One;
use rayon::prelude::*;

use super::extension::{open_table, OpenExtension};
use crate::error::Result;
use crate::exactalg::{GaussianRational, MPoly, Var, VarTable};
use crate::milnor::{build_extended_algebra, build_unfolding, Family};
use crate::report::Report;
use crate::saito::{leading, saito_structure, tensor_to_flat};

fn hessian(f: &MPoly) -> Vec<Vec<MPoly>> {
    let n = f.nvars();
    let grad: Vec<MPoly> = (0..n).map(|i| f.diff(i)).collect();
    grad.iter().map(|g| (0..n).map(|j| g.diff(j)).collect()).collect()
}

/// Open WDVV (both families) and the unit condition, as exact identities.
pub fn verify_open_wdvv(ext: &OpenExtension) -> Report {
    let n = ext.rank();
    let s = ext.s();
    let vars = ext.vars();
    let c: Vec<Vec<Vec<MPoly>>> = {
        let ct = ext.base().structure_constants();
        (0..n)
            .map(|nu| {
                (0..n)
                    .map(|a| (0..n).map(|b| ct.get(nu, a, b).embed(vars).expect("sub-table")).collect())
                    .collect()
            })
            .collect()
    };
    let h = hessian(ext.potential());

    // c^ν_{αβ} ∂_ν∂_x F° + ∂_α∂_β F° ∂_s∂_x F°
    let lhs = |a: usize, b: usize, x: usize| {
        let mut e = MPoly::zero(vars);
        for nu in 0..n {
            if !c[nu][a][b].is_zero() && !h[nu][x].is_zero() {
                e.add_product(&c[nu][a][b], &h[nu][x]);
            }
        }
        e.add_product(&h[a][b], &h[s][x]);
        e
    };

    let triples: Vec<(usize, usize, usize)> = (0..n)
        .flat_map(|a| (0..n).flat_map(move |b| (0..n).map(move |g| (a, b, g))))
        .collect();
    let first: Vec<(usize, usize, usize, MPoly)> = triples
        .par_iter()
        .map(|&(a, b, g)| (a, b, g, &lhs(a, b, g) - &lhs(g, b, a)))
        .collect();

    let mut r = Report::new("open-wdvv");
    for (a, b, g, resid) in first {
        r.expect(resid.is_zero(), "open-wdvv-1", vec![a + 1, b + 1, g + 1], || leading(&resid));
    }
    for a in 0..n {
        for b in 0..n {
            let resid = &lhs(a, b, s) - &(&h[s][b] * &h[s][a]);
            r.expect(resid.is_zero(), "open-wdvv-2", vec![a + 1, b + 1], || leading(&resid));
        }
    }
    for a in 0..=n {
        let expect = if a == s { MPoly::one(vars) } else { MPoly::zero(vars) };
        let resid = &h[0][a] - &expect;
        r.expect(resid.is_zero(), "unit", vec![1, a + 1], || leading(&resid));
    }
    r
}

/// Flat F-manifold axioms for a vector potential `(F^1, …, F^M)` over
/// `t^1, …, t^M`: `∂_1∂_β F^α = δ^α_β` and
/// `∂_β∂_μ F^α ∂_γ∂_δ F^μ = ∂_γ∂_μ F^α ∂_β∂_δ F^μ`. When `weights` are given
/// (the Euler field `Σ d_α t^α ∂_α`), also `E(F^α) − (d_α + 1)F^α` must be
/// affine.
pub fn verify_vector_potential(fs: &[MPoly], weights: Option<&[BigRational]>) -> Report {
    let mut r = Report::new("vector-potential");
    let m = fs.len();
    if m == 0 || fs.iter().any(|f| f.nvars() != m || f.vars() != fs[0].vars()) {
        r.fail("shape", vec![], "need M functions of the same M variables");
        return r;
    }
    let vars = fs[0].vars().clone();
    let h: Vec<Vec<Vec<MPoly>>> = fs.par_iter().map(hessian).collect();

    for a in 0..m {
        for b in 0..m {
            let expect = if a == b { MPoly::one(&vars) } else { MPoly::zero(&vars) };
            let resid = &h[a][0][b] - &expect;
            r.expect(resid.is_zero(), "axiom1", vec![a + 1, b + 1], || leading(&resid));
        }
    }

    let pairs: Vec<(usize, usize)> = (0..m).flat_map(|g| (g..m).map(move |d| (g, d))).collect();
    // p[α][β][(γ,δ)] = Σ_μ H^α_{βμ} H^μ_{γδ}
    let prod: Vec<Vec<Vec<MPoly>>> = (0..m)
        .into_par_iter()
        .map(|a| {
            (0..m)
                .map(|b| {
                    pairs
                        .iter()
                        .map(|&(g, d)| {
                            let mut e = MPoly::zero(&vars);
                            for mu in 0..m {
                                if !h[a][b][mu].is_zero() && !h[mu][g][d].is_zero() {
                                    e.add_product(&h[a][b][mu], &h[mu][g][d]);
                                }
                            }
                            e
                        })
                        .collect()
                })
                .collect()
        })
        .collect();
    let idx = |g: usize, d: usize| {
        let (g, d) = if g <= d { (g, d) } else { (d, g) };
        g * m - g * (g + 1) / 2 + d
    };
    for a in 0..m {
        for b in 0..m {
            for g in 0..m {
                for d in 0..m {
                    let resid = &prod[a][b][idx(g, d)] - &prod[a][g][idx(b, d)];
                    r.expect(resid.is_zero(), "axiom2", vec![a + 1, b + 1, g + 1, d + 1], || {
                        leading(&resid)
                    });
                }
            }
        }
    }

    if let Some(w) = weights {
        let table = VarTable::new(
            vars.vars()
                .iter()
                .zip(w)
                .map(|(v, w)| Var { weight: w.clone(), ..v.clone() })
                .collect(),
        );
        let table = match table {
            Ok(t) if w.len() == m => t,
            _ => {
                r.fail("homogeneity", vec![], "weights do not fit the variables");
                return r;
            }
        };
        for (a, f) in fs.iter().enumerate() {
            let f = f.embed(&table).expect("same names");
            let d = GaussianRational::real(&w[a] + BigRational::one());
            let resid = &f.euler() - &f.scale(&d);
            let affine = resid
                .terms()
                .all(|(mono, _)| mono.total_degree() <= 1 && mono.exps().iter().all(|&e| e >= 0));
            r.expect(affine, "homogeneity", vec![a + 1], || leading(&resid));
        }
    }
    r
}

/// Builds the extended product from the quotient algebra, moves it to the
/// coordinates `(t, t^{N+1} = v_{N+1})` and compares it with
/// `η^{αμ} F_{μβγ}` (for `α ≤ N`) and `∂_α∂_β F°` (for `α = N+1`).
pub fn verify_extension_theorems(family: Family, n: usize) -> Result<Report> {
    let ext = match family {
        Family::A => super::open_potential_a(n)?,
        Family::D => super::open_potential_d(n)?,
        Family::E => return Err(crate::Error::Unsupported("no extension for E".into())),
    };
    let fs = saito_structure(family, n)?;
    let u = build_unfolding(family, n)?;
    let alg = build_extended_algebra(&u)?;
    let c_v = alg.structure_constants()?;
    let cv_vars: Arc<VarTable> = alg.coeff_vars().clone();
    let vars = open_table(&fs);

    let mut t_of_v: Vec<MPoly> = fs.t_of_v().iter().map(|t| t.embed(&cv_vars)).collect::<Result<_>>()?;
    t_of_v.push(MPoly::var(&cv_vars, n));
    let mut v_of_t: Vec<MPoly> = fs.v_of_t().iter().map(|v| v.embed(&vars)).collect::<Result<_>>()?;
    v_of_t.push(MPoly::var(&vars, n));
    let c_t = tensor_to_flat(&c_v, &t_of_v, &v_of_t, &vars)?;

    let closed = fs.structure_constants();
    let h = hessian(ext.potential());
    let mut r = Report::new("extension");
    for a in 0..=n {
        for b in 0..=n {
            for g in 0..=n {
                let expect = if a == n {
                    h[b][g].clone()
                } else if b < n && g < n {
                    closed.get(a, b, g).embed(&vars)?
                } else {
                    MPoly::zero(&vars)
                };
                let resid = c_t.get(a, b, g) - &expect;
                let check = if a == n { "second-property" } else { "first-property" };
                r.expect(resid.is_zero(), check, vec![a + 1, b + 1, g + 1], || leading(&resid));
            }
        }
    }
    Ok(r)
}
