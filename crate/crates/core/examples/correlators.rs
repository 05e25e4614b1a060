//! Open A4 correlators from the splitting recursion.

use frobenius_open::coxeter::correlator_recursion_a;

fn main() {
    let t = correlator_recursion_a(4, 4);
    println!("<σ^6> = {}", t.sigma_only);
    for (al, v) in &t.values {
        println!("<τ{al:?} σ^{}> = {v}", t.k_of(al));
    }
}
