//! Open extensions: the functions `F°(t, s)` solving the open WDVV equations
//! for `A_N` and `D_N`, their verifiers, and the combinatorial lemmas behind
//! the `D_N` construction.

mod extension;
mod lemmas;
mod rspin;
mod verify;

pub use extension::{
    a_open_correlator, check_foan_relation, extract_v_from_open_d, open_potential_a,
    open_potential_d, open_table, OpenExtension,
};
pub use lemmas::{check_coefw_lemma, check_dn_second_derivative_identity, omega_sequence, OmegaSequence};
pub use rspin::{rspin_convention_rescale, Direction};
pub use verify::{verify_extension_theorems, verify_open_wdvv, verify_vector_potential};
