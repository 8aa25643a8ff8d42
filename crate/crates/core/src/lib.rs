//! Exact combinatorics behind the holonomic rank of A-hypergeometric systems.
//!
//! A configuration is an integer `d × n` matrix `A` whose columns generate
//! `Z^d` and a pointed cone. From it the crate computes normalized volumes,
//! the face lattice of the cone, holes and Hilbert bases of the semigroup
//! `NA`, the ranking lattices attached to a rational parameter `β`, and the
//! rank of simple parameters together with the known volume bounds. The
//! [`family`] module builds the configurations `A_{d,b}`, whose maximal rank
//! over volume tends to `d - 1`.
//!
//! ```
//! use gkz_rank::family::FamilySpec;
//! use gkz_rank::ranking::{rank_simple, Parameter};
//!
//! let a = FamilySpec::new(3, 2).unwrap().build();
//! let report = rank_simple(&Parameter::zero(3), &a).unwrap();
//! assert_eq!(report.volume, 4.into());
//! assert_eq!(report.rank, 5.into());
//! ```

pub mod cli;
pub mod family;
pub mod lattice;
pub mod linalg;
pub mod polytope;
pub mod ranking;
pub mod semigroup;
