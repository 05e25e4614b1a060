//! Conversion of the A_{r-1} potentials to the r-spin normalization and back.

use frobenius_open::openext::{open_potential_a, rspin_convention_rescale, Direction};

fn main() -> frobenius_open::Result<()> {
    let ext = open_potential_a(2)?;
    let spin = rspin_convention_rescale(ext.potential(), Direction::ToRspin);
    println!("F°      = {}", ext.potential());
    println!("r-spin  = {spin}");
    let back = rspin_convention_rescale(&spin, Direction::FromRspin);
    assert_eq!(&back, ext.potential());
    Ok(())
}
