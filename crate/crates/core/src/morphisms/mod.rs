//! Isomorphisms, automorphism groups and involution classes.

mod group;
mod iso;
mod search;

pub use group::{
    automorphism_group, automorphism_group_of, conjugacy_classes, involution_classes, involution_classes_of,
    involutive_automorphisms, n_ci, AutGroup, ConjugacyClass,
};
pub use iso::{
    algebras_isomorphic, algebras_isomorphic_pinned, are_isomorphic, braided_isomorphic, descriptors_isomorphic, intertwiner_from_quasigroup_iso,
    lbds_isomorphic, lbds_quasigroup_isomorphic, verify_ap3, Ap3Report, IsoOutcome, NonIsoCertificate,
};
pub use search::{Algebra, SearchError, SearchOptions, DEFAULT_BUDGET};
