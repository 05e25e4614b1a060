//! Coxeter-group potentials, the families of homogeneous open solutions for
//! `A_N`, `B_N`, `I_2(k)`, the open correlator recursion and the
//! nonexistence obstructions for the remaining groups.

mod classify;
mod correlators;
mod families;
mod groups;
mod obstruction;

pub use classify::{classify_i2, I2Classification, I2Solution};
pub use correlators::{correlator_recursion_a, CorrelatorTable};
pub use families::{lambda_rescale, open_family, Branch, SolutionFamily};
pub use groups::{h3_via_d6, potential_coxeter, CoxeterGroup, CoxeterSpec};
pub use obstruction::{h3_ansatz_residual, obstruction_check};
