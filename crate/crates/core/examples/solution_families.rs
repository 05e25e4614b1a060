//! The λ-families of open solutions for B and I2, including λ = 0 and the
//! minus branch.

use frobenius_open::coxeter::{open_family, CoxeterGroup};
use frobenius_open::exactalg::q;
use frobenius_open::openext::verify_open_wdvv;

fn main() -> frobenius_open::Result<()> {
    for g in [CoxeterGroup::B(3), CoxeterGroup::I2(4), CoxeterGroup::I2(5)] {
        let fam = open_family(g)?;
        println!("{g}: λ = 0 admissible: {}", fam.zero_admissible);
        for b in fam.branches() {
            for l in [q(1, 1), q(1, 2), q(0, 1)] {
                if l == q(0, 1) && !fam.zero_admissible {
                    continue;
                }
                let m = fam.member(&l, b)?;
                let ok = verify_open_wdvv(&m).passed();
                println!("  {b:?} λ={l}: {} [{}]", m.potential(), if ok { "ok" } else { "FAIL" });
            }
        }
    }
    Ok(())
}
