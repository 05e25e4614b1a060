//! Universal unfoldings, their quotient algebras and structure constants in
//! the unfolding coordinates `v`.

mod algebra;
mod tensor;
mod unfolding;

pub use algebra::{
    build_closed_algebra, build_extended_algebra, ideal_quotient_consistency, QuotientAlgebra,
    Rule,
};
pub use tensor::StructureTensor;
pub use unfolding::{build_unfolding, Family, Unfolding};
