//! Frobenius potential of D4 and its WDVV and homogeneity checks.

use frobenius_open::milnor::Family;
use frobenius_open::saito::{saito_structure, verify_homogeneity, verify_wdvv};

fn main() -> frobenius_open::Result<()> {
    let fs = saito_structure(Family::D, 4)?;
    println!("F = {}", fs.potential());
    print!("{}", verify_wdvv(&fs));
    print!("{}", verify_homogeneity(&fs));
    Ok(())
}
