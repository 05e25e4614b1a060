//! The computations ruling out homogeneous open solutions for D, E, F4,
//! H3 and H4.

use frobenius_open::coxeter::{h3_ansatz_residual, obstruction_check};

fn main() -> frobenius_open::Result<()> {
    for g in ["D5", "E6", "E7", "E8", "F4", "H4", "H3"] {
        print!("{}", obstruction_check(g.parse()?)?);
    }
    let (n, lhs, rhs) = h3_ansatz_residual()?;
    println!("H3 ansatz with {n} free coefficients: {lhs} = {rhs} is impossible");
    Ok(())
}
