use num_rational::BigRational;
use rayon::prelude::*;

use super::flat::t_table;
use super::frobenius::{third_derivatives, FrobeniusStructure};
use crate::exactalg::{GaussianRational, MPoly};
use crate::report::Report;

/// Leading term of a nonzero residual, for failure reports.
pub(crate) fn leading(p: &MPoly) -> String {
    match p.leading_term() {
        Some((m, c)) => MPoly::monomial(p.vars(), m.clone(), c.clone()).to_string(),
        None => "0".into(),
    }
}

/// WDVV: `F_{αβμ} η^{μν} F_{νγδ}` is symmetric under `β ↔ γ`, for all
/// `(α, β, γ, δ)`.
pub fn verify_wdvv(fs: &FrobeniusStructure) -> Report {
    let n = fs.rank();
    let third = third_derivatives(fs.potential());
    let c = fs.structure_constants();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a..n).map(move |b| (a, b))).collect();
    let idx = |a: usize, b: usize| {
        let (a, b) = if a <= b { (a, b) } else { (b, a) };
        a * n - a * (a + 1) / 2 + b
    };
    // prod[p][q] = Σ_μ F_{p μ} c^μ_{q}
    let prod: Vec<Vec<MPoly>> = pairs
        .par_iter()
        .map(|&(a, b)| {
            pairs
                .iter()
                .map(|&(g, d)| {
                    let mut e = MPoly::zero(fs.t_vars());
                    for m in 0..n {
                        let x = third.get(a, b, m);
                        let y = c.get(m, g, d);
                        if !x.is_zero() && !y.is_zero() {
                            e.add_product(x, y);
                        }
                    }
                    e
                })
                .collect()
        })
        .collect();

    let mut report = Report::new("wdvv");
    for a in 0..n {
        for b in 0..n {
            for g in 0..n {
                for d in 0..n {
                    let lhs = &prod[idx(a, b)][idx(g, d)];
                    let rhs = &prod[idx(a, g)][idx(b, d)];
                    report.expect(lhs == rhs, "wdvv", vec![a + 1, b + 1, g + 1, d + 1], || {
                        leading(&(lhs - rhs))
                    });
                }
            }
        }
    }
    report
}

/// `E(F) = (3 − δ) F` and `E(t^i(v)) = q_i t^i(v)`.
pub fn verify_homogeneity(fs: &FrobeniusStructure) -> Report {
    let mut report = Report::new("homogeneity");
    let f = fs.potential();
    let expect = f.scale(&GaussianRational::real(BigRational::from_integer(3.into()) - fs.delta()));
    report.expect(f.euler() == expect, "euler-potential", vec![], || leading(&(&f.euler() - &expect)));
    let weights = fs.weights();
    for (i, t) in fs.t_of_v().iter().enumerate() {
        let expect = t.scale(&GaussianRational::real(weights[i].clone()));
        report.expect(t.euler() == expect, "euler-flat-coordinate", vec![i + 1], || {
            leading(&(&t.euler() - &expect))
        });
    }
    report
}

/// Homogeneity of the potential under explicitly supplied weights and `δ`.
pub fn verify_homogeneity_with(f: &MPoly, weights: &[BigRational], delta: &BigRational) -> Report {
    let mut report = Report::new("homogeneity");
    let table = t_table(weights);
    let mapping: Vec<Option<usize>> = (0..f.nvars()).map(Some).collect();
    let Ok(g) = f.remap(&table, &mapping) else {
        report.fail("euler-potential", vec![], "potential does not fit the weights");
        return report;
    };
    let expect = g.scale(&GaussianRational::real(BigRational::from_integer(3.into()) - delta));
    report.expect(g.euler() == expect, "euler-potential", vec![], || leading(&(&g.euler() - &expect)));
    report
}
