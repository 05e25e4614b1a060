//! Potentials of the non-ADE Coxeter groups, by substitution and from the
//! printed forms, plus H3 through D6.

use frobenius_open::coxeter::{h3_via_d6, potential_coxeter, CoxeterGroup, CoxeterSpec};
use frobenius_open::saito::verify_wdvv;

fn main() -> frobenius_open::Result<()> {
    for g in ["B3", "I2(5)", "F4", "H3", "H4"] {
        let g: CoxeterGroup = g.parse()?;
        let spec = CoxeterSpec::new(g);
        let fs = potential_coxeter(g)?;
        println!("{g}: h = {}, degrees {:?}", spec.h, spec.degrees);
        println!("  F = {}", fs.potential());
        print!("  {}", verify_wdvv(&fs));
    }
    println!("H3 via D6: {}", h3_via_d6()?.potential());
    Ok(())
}
