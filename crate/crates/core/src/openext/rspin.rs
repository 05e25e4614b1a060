use crate::exactalg::{GaussianRational, MPoly};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    ToRspin,
    FromRspin,
}

/// Converts between the `A_N` potentials and the `r`-spin generating series,
/// `r = N + 1`:
/// `F_{A_N}(t) = (−r)^{−3} F_{r-spin}((−r)t)` for closed potentials and
/// `F°_{A_N}(t, s) = (−r)^{−2} F^{ext}_{r-spin}((−r)t, (−r)s)` for open ones.
/// A table containing `s` marks the open case.
pub fn rspin_convention_rescale(p: &MPoly, dir: Direction) -> MPoly {
    let vars = p.vars();
    let open = vars.index_of("s").is_some();
    let n = if open { vars.len() - 1 } else { vars.len() };
    let minus_r = GaussianRational::from_int(-(n as i64 + 1));
    let overall: i32 = if open { 2 } else { 3 };
    // F_{A}(t) = (−r)^{d − k} F_{r}-coefficient for a term of total degree d;
    // going to r-spin inverts that.
    let sign = match dir {
        Direction::ToRspin => 1,
        Direction::FromRspin => -1,
    };
    MPoly::from_terms(
        vars,
        p.terms().map(|(m, c)| {
            let d = m.total_degree() as i32;
            let f = minus_r.pow(sign * (overall - d)).expect("r ≠ 0");
            (m.clone(), c * &f)
        }),
    )
}
