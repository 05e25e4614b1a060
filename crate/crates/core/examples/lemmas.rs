//! The ω sequence and the two D_N coefficient identities.

use frobenius_open::openext::{check_coefw_lemma, check_dn_second_derivative_identity, omega_sequence};

fn main() -> frobenius_open::Result<()> {
    let om = omega_sequence(6, 6)?;
    for (k, w) in om.omegas.iter().enumerate().skip(1) {
        println!("ω{k} = {w}");
    }
    print!("{}", check_coefw_lemma(5)?);
    print!("{}", check_dn_second_derivative_identity(5)?);
    Ok(())
}
