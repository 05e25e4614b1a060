//! Quotient algebra of the D4 unfolding and its structure constants in the
//! unfolding coordinates.

use frobenius_open::milnor::{build_closed_algebra, build_unfolding, Family};

fn main() -> frobenius_open::Result<()> {
    let u = build_unfolding(Family::D, 4)?;
    println!("Λ = {}", u.lambda());
    let alg = build_closed_algebra(&u)?;
    for r in alg.rules() {
        let lhs = frobenius_open::exactalg::MPoly::monomial(alg.vars(), r.lhs.clone(), frobenius_open::exactalg::q(1, 1));
        println!("rule: {lhs} -> {}", r.rhs);
    }
    let c = alg.structure_constants()?;
    for a in 0..4 {
        println!("c^{}_(2,4) = {}", a + 1, c.get(a, 1, 3));
    }
    println!("associative: {}", alg.check_associativity()?.is_none());
    Ok(())
}
