//! Exact coefficient arithmetic and sparse (Laurent) polynomials.

mod gaussian;
mod json;
mod linalg;
mod mpoly;
mod text;
mod vars;

pub use gaussian::GaussianRational;
pub use linalg::invert_matrix;
pub use mpoly::{MPoly, Monomial};
pub use vars::{indexed_names, Var, VarTable, VarTableBuilder};

use num_bigint::BigInt;
use num_rational::BigRational;

/// Shorthand for the rational `n/d`.
pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Shorthand for the real scalar `n/d`.
pub fn q(n: i64, d: i64) -> GaussianRational {
    GaussianRational::ratio(n, d)
}

/// `n!` as a real scalar.
pub fn factorial(n: u64) -> GaussianRational {
    let mut f = BigInt::from(1);
    for k in 2..=n {
        f *= k;
    }
    GaussianRational::real(BigRational::from_integer(f))
}
