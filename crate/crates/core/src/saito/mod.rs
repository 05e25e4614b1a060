//! Flat coordinates, the Saito metric and potential, and the WDVV verifier.

mod flat;
mod frobenius;
mod verify;

pub(crate) use flat::weighted_tuples;
pub use flat::{flat_coords, flat_coords_a, flat_coords_d, invert_coords, t_table, to_flat};
pub use frobenius::{
    metric_and_potential, potential_from_third_derivatives, third_derivatives, FrobeniusStructure,
};
pub(crate) use frobenius::tensor_to_flat;
pub(crate) use verify::leading;
pub use verify::{verify_homogeneity, verify_homogeneity_with, verify_wdvv};

use crate::error::Result;
use crate::milnor::{build_closed_algebra, build_unfolding, Family};

/// The full pipeline for `A_N` or `D_N`: unfolding, algebra, flat
/// coordinates, metric and potential.
pub fn saito_structure(family: Family, n: usize) -> Result<FrobeniusStructure> {
    let u = build_unfolding(family, n)?;
    let c_v = build_closed_algebra(&u)?.structure_constants()?;
    let t_of_v = flat_coords(&u)?;
    metric_and_potential(&u, &c_v, &t_of_v)
}
