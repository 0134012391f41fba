//! Structural queries on enumerated groups.

pub mod classes;
pub mod frobenius;
pub mod pgroup;
pub mod structure;

pub use classes::{conjugacy_classes, is_real, ConjClasses};
pub use frobenius::{is_frobenius_with_complement, FrobeniusCheck};
pub use pgroup::{frattini_pgroup, involution_subgroup, is_elementary_abelian, min_generators, omega1};
pub use structure::{
    center, centralizer, commutator, derived_length, derived_of, derived_series, derived_subgroup, exponent,
    fitting_length, fitting_subgroup, is_abelian, is_nilpotent, is_solvable, normal_closure, normal_closure_in,
    normalizer, normalizer_cyclic, p_core, sylow,
};
