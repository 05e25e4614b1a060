//! The extended algebra reproduces the open structure: vector potential
//! axioms, the two extension properties, ∂F°/∂s and the D_N v-extraction.

use frobenius_open::milnor::Family;
use frobenius_open::openext::{
    check_foan_relation, extract_v_from_open_d, open_potential_a, open_potential_d,
    verify_extension_theorems, verify_vector_potential,
};

fn main() -> frobenius_open::Result<()> {
    print!("{}", verify_extension_theorems(Family::A, 4)?);
    print!("{}", verify_extension_theorems(Family::D, 5)?);
    let a = open_potential_a(4)?;
    let w = a.weights();
    print!("{}", verify_vector_potential(&a.vector_potential(), Some(&w)));
    println!("∂F°/∂s relation for A4: {}", check_foan_relation(&a)?);
    for (i, v) in extract_v_from_open_d(&open_potential_d(5)?)?.iter().enumerate() {
        println!("v{} = {v}", i + 1);
    }
    Ok(())
}
