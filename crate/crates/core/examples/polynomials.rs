//! Exact Laurent polynomials: parse, multiply, differentiate, serialize.

use frobenius_open::exactalg::{rat, MPoly, VarTable};

fn main() -> frobenius_open::Result<()> {
    let vars = VarTable::builder()
        .var("t1", rat(1, 1))
        .var("t2", rat(1, 2))
        .laurent_var("s", rat(1, 4))
        .build()?;
    let p = MPoly::parse("t1*s + t2^2/(2*s) + I*t2", &vars)?;
    let q = MPoly::parse("s^2/3 - t2", &vars)?;
    println!("p       = {p}");
    println!("p*q     = {}", &p * &q);
    println!("dp/ds   = {}", p.diff(2));
    println!("E(p)    = {}", p.euler());
    println!("json    = {}", p.to_json_string());
    assert_eq!(MPoly::from_json_str(&p.to_json_string())?.to_string(), p.to_string());
    Ok(())
}
