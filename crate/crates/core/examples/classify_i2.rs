//! Solving the general homogeneous I2(k) open ansatz.

use frobenius_open::coxeter::classify_i2;

fn main() -> frobenius_open::Result<()> {
    for k in 3..=6 {
        let c = classify_i2(k)?;
        println!("I2({k}): α_k = {}", c.alpha_k);
        for s in &c.solutions {
            let betas: Vec<String> = s.betas.iter().map(ToString::to_string).collect();
            println!("  {:?}: β = [{}], matches family: {}", s.branch, betas.join(", "), s.matches_family);
        }
    }
    Ok(())
}
