//! Exact convex geometry of a configuration: validation of the standing
//! hypotheses, cone facets and faces, convex hulls of `Δ_F = conv(0, F)`,
//! normalized volumes and the column-augmentation procedure.

mod config;
mod hull;
mod volume;

use num_bigint::BigInt;
use thiserror::Error;

pub use config::{cone_facets, face_of, faces, validate, Configuration, Face};
pub use hull::{hull, Inequality, PolytopeHull};
pub use volume::{
    augment, columns_in_delta, delta_cap, is_pyramid, normalized_volume, pyramid_excess, volume,
    volume_in_saturation, volume_in_span, DeltaMode,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolytopeError {
    #[error("configuration has no columns")]
    EmptyConfiguration,
    #[error("columns have inconsistent dimensions: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("column {index} is zero or repeats an earlier column")]
    DuplicateOrZeroColumn { index: usize },
    #[error("columns span a space of rank {rank} < d = {d}")]
    NotFullRank { rank: usize, d: usize },
    #[error("columns generate a sublattice of index {index} in Z^d")]
    LatticeNotZd { index: BigInt },
    #[error("the semigroup is not pointed (column {witness} is not positive on the cone)")]
    NotPointed { witness: usize },
    #[error("column index {index} out of range for n = {n}")]
    ColumnOutOfRange { index: usize, n: usize },
    #[error("lattice must satisfy F ⊆ Λ ⊆ Z^d ∩ QF with full rank")]
    LambdaOutOfRange,
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
}
