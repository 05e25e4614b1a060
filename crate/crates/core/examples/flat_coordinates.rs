//! Flat coordinates of the A4 and D5 unfoldings and their inverses.

use frobenius_open::milnor::Family;
use frobenius_open::saito::saito_structure;

fn main() -> frobenius_open::Result<()> {
    for (f, n) in [(Family::A, 4), (Family::D, 5)] {
        let fs = saito_structure(f, n)?;
        println!("{f}{n}");
        for (i, t) in fs.t_of_v().iter().enumerate() {
            println!("  t{} = {t}", i + 1);
        }
        for (i, v) in fs.v_of_t().iter().enumerate() {
            println!("  v{} = {v}", i + 1);
        }
    }
    Ok(())
}
