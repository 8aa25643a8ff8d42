//! Exact integer linear algebra: normal forms, sublattices, saturation,
//! indices and coset representatives.
//!
//! Everything here works over arbitrary-precision integers; nothing can
//! overflow silently.

mod matrix;
mod normal_form;
mod sublattice;

use thiserror::Error;

pub use matrix::{int_vector, IntMatrix, IntVector};
pub use normal_form::{
    extended_gcd, hermite_normal_form, invariant_factors, smith_normal_form, unimodular_inverse,
};
pub use sublattice::{coset_representatives, lattice_index, CosetSet, LatticeIndex, Sublattice};
pub(crate) use sublattice::is_zero_vector;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("generator is not contained in the ambient lattice")]
    NotASublattice,
    #[error("sublattice has smaller rank, so the index is infinite")]
    InfiniteIndex,
}

/// Membership of `v` in `lattice`.
pub fn member(v: &[num_bigint::BigInt], lattice: &Sublattice) -> Result<bool, LatticeError> {
    lattice.contains(v)
}
