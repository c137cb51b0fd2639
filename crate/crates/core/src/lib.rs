//! Finite loops, quasigroups and braided sets: constructions, law checking, isomorphism search
//! and classification of dihedral solutions of the set-theoretic Yang-Baxter equation.

pub mod braided;
pub mod classify;
pub mod constructions;
pub mod format;
pub mod morphisms;
pub mod perm;
pub mod tables;

pub use braided::{BraidedError, BraidedFlags, BraidedSet, DiagonalPair};
pub use perm::{PermError, Permutation};
