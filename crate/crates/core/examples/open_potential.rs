//! Open potentials for A3 and D4 together with the open WDVV check.

use frobenius_open::openext::{open_potential_a, open_potential_d, verify_open_wdvv};

fn main() -> frobenius_open::Result<()> {
    for ext in [open_potential_a(3)?, open_potential_d(4)?] {
        println!("F° = {}", ext.potential());
        print!("{}", verify_open_wdvv(&ext));
        print!("{}", ext.verify_homogeneity());
    }
    Ok(())
}
