//! Automorphisms of `Ω_2k` and `Ω̃_2k`: bit permutations, translations, twin
//! swaps, the quotient homomorphism, and a backtracking search for groups,
//! stabilizers and isomorphisms.

mod automorphism;
mod perm;
mod search;

pub use automorphism::{
    arc_transitivity_witness, is_automorphism, lift, normal_form, normal_form_membership, perm_automorphism,
    quotient_map, translation, twin_swap_set, Automorphism, Provenance, QuotientAutomorphism,
};
pub use perm::BitPermutation;
pub use search::{
    automorphism_group, find_isomorphism, first_nontrivial, pointwise_stabilizer, stabilizer_is_trivial, AutGroup,
    GroupReport, DEFAULT_ELEMENT_CAP, MAX_SEARCH_ORDER,
};
