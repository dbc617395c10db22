//! Instance generators, validators and the on-disk formats.

mod format;
mod phs;
mod random;
mod sat;

pub use format::{
    format_witness, parse_instance, parse_phs_sets, parse_witness, write_instance, write_phs_sets,
};
pub use phs::{
    decode_permutation, gen_phs_instance, permutation_walk, random_phs_input, PhsInput, PhsLayout,
};
pub use random::{gen_random, gen_random_symmetric};
pub use sat::{gen_3sat_instance, random_compliant_cnf, Cnf, SatLayout};
