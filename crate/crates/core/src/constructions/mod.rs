//! Explicit loops, quasigroups and solutions.

mod ap3;
mod bpq;
mod gf;
mod groups;
mod householder;
mod l3;
mod lbds;
mod quandle;
mod stock;
mod symspace;

use thiserror::Error;

use crate::tables::LoopError;

pub use ap3::{ap3_group, Ap3Element, LambdaMap};
pub use bpq::{bpq_coords, bpq_label, bpq_table, build_bp3_condensed, build_bpq, build_bpq_with_setup};
pub use gf::{gf2_setup, gf2_setup_with_omega, omega_candidates, smallest_nonresidue, Gf2Element, Gf2Setup};
pub use groups::{cyclic_group, direct_product, elementary_abelian, product_permutation, signed_diagonal};
pub use householder::{householder, householder_braiding_check, HouseholderReport};
pub use l3::{build_l3, l3_coords, l3_involutions, l3_label, l3_table};
pub use lbds::{descriptor_from_braided, descriptor_from_lbds, lbds_from_descriptor, Lbds, LbdsDescriptor};
pub use quandle::{bruck_to_quandle, derived_bds_from_rack, quandle_to_bruck};
pub use stock::{
    cml_derived_solution, elementary_lbts_descriptor, l3_descriptor, lbts_solution, smith_solution, stock_solution,
    STOCK_FAMILIES,
};
pub use symspace::{symmetric_space_solutions, PointedSymmetricSpace};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ConstructionError {
    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),
    #[error("q = {q} is not an odd prime dividing p² − 1 for p = {p}")]
    BadOrderPair { p: u64, q: u64 },
    #[error("ω^{i} + ω^-{i} has no inverse in the base field")]
    DenominatorZero { i: u64 },
    #[error("coefficient undefined at (i, k) = ({i}, {k})")]
    CoefficientUndefined { i: usize, k: usize },
    #[error("S is not an involution")]
    NotInvolutive,
    #[error("S is not an automorphism of the loop")]
    NotAutomorphism,
    #[error("not a Bruck loop: {0}")]
    NotBruck(String),
    #[error("not uniquely 2-divisible: 2·{x} = 2·{y}")]
    NotTwoDivisible { x: usize, y: usize },
    #[error("not a Latin braided dihedral set: {0}")]
    NotLbds(String),
    #[error("{0} is not idempotent")]
    NotIdempotent(usize),
    #[error("not a left-symmetric Latin quandle: {0}")]
    NotLsQuandle(String),
    #[error("invalid symmetric space: {axiom} fails at {witness:?}")]
    InvalidSymmetricSpace { axiom: &'static str, witness: Vec<usize> },
    #[error("residual {worst:e} exceeds tolerance {tol:e}")]
    ToleranceExceeded { worst: f64, tol: f64 },
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("internal error: {0}")]
    Internal(String),
}

impl From<LoopError> for ConstructionError {
    fn from(e: LoopError) -> Self {
        match e {
            LoopError::NotTwoDivisible { x, y } => ConstructionError::NotTwoDivisible { x, y },
            other => ConstructionError::NotBruck(other.to_string()),
        }
    }
}
