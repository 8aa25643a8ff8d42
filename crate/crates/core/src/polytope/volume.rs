use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{hull, Configuration, Face, PolytopeError};
use crate::lattice::{lattice_index, IntMatrix, IntVector, LatticeIndex, Sublattice};
use crate::linalg::{to_rational, RatVector};

fn check_indices(a: &Configuration, f: &[usize]) -> Result<Vec<usize>, PolytopeError> {
    if let Some(&j) = f.iter().find(|&&j| j >= a.n()) {
        return Err(PolytopeError::ColumnOutOfRange { index: j, n: a.n() });
    }
    let mut idx = f.to_vec();
    idx.sort_unstable();
    idx.dedup();
    Ok(idx)
}

/// Normalized volume of `Δ_F = conv(0, F)` in a lattice `Λ` with
/// `F ⊆ Λ ⊆ Z^d ∩ QF`.
///
/// The points of `F` are written in a basis of the saturation `Z^d ∩ QF`,
/// where the placing triangulation gives `dim! · vol` in lattice units as a
/// sum of absolute determinants; the result is divided by `[Z^d ∩ QF : Λ]`.
pub fn normalized_volume(
    f: &[usize],
    a: &Configuration,
    lambda: &Sublattice,
) -> Result<BigRational, PolytopeError> {
    let f = check_indices(a, f)?;
    let zf = a.span_lattice(&f);
    let sat = zf.saturate();
    let in_range = lambda.ambient_dim() == a.d()
        && lambda.rank() == sat.rank()
        && zf.is_sublattice_of(lambda).unwrap_or(false)
        && lambda.is_sublattice_of(&sat).unwrap_or(false);
    if !in_range {
        return Err(PolytopeError::LambdaOutOfRange);
    }
    let index = match lattice_index(lambda, &sat) {
        Ok(LatticeIndex::Finite(i)) => i,
        _ => return Err(PolytopeError::LambdaOutOfRange),
    };
    Ok(saturated_volume(&f, a, &sat) / BigRational::from_integer(index))
}

fn saturated_volume(f: &[usize], a: &Configuration, sat: &Sublattice) -> BigRational {
    let r = sat.rank();
    if r == 0 {
        return BigRational::one();
    }
    let mut points: Vec<RatVector> = vec![vec![BigRational::zero(); r]];
    for &j in f {
        let c = sat
            .coordinates(a.column(j))
            .expect("dimension checked")
            .expect("column lies in the saturation of its span");
        points.push(to_rational(&c));
    }
    hull(&points)
        .lattice_volume()
        .expect("origin and F span the saturated lattice")
}

/// `vol_{Z^d ∩ QF}(F)`, an integer.
pub fn volume_in_saturation(f: &[usize], a: &Configuration) -> BigInt {
    let f = check_indices(a, f).expect("face indices are in range");
    let sat = a.span_lattice(&f).saturate();
    saturated_volume(&f, a, &sat).to_integer()
}

/// `vol_{ZF}(F)`, an integer.
pub fn volume_in_span(f: &[usize], a: &Configuration) -> BigInt {
    let f = check_indices(a, f).expect("face indices are in range");
    let zf = a.span_lattice(&f);
    let v = saturated_volume(&f, a, &zf.saturate()) / BigRational::from_integer(zf.index_in_saturation());
    debug_assert!(v.is_integer());
    v.to_integer()
}

/// `vol(A)`: normalized volume of all columns in `Z^d`.
pub fn volume(a: &Configuration) -> BigInt {
    let all: Vec<usize> = (0..a.n()).collect();
    let mut points: Vec<RatVector> = vec![vec![BigRational::zero(); a.d()]];
    points.extend(all.iter().map(|&j| to_rational(a.column(j))));
    hull(&points)
        .lattice_volume()
        .expect("A has full rank")
        .to_integer()
}

/// Which points of `Δ_F` to report.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DeltaMode {
    /// Columns of `A` lying in `Δ_F`.
    Columns,
    /// All lattice points of `Δ_F`.
    Lattice,
}

fn delta_hull(f: &[usize], a: &Configuration) -> super::PolytopeHull {
    let mut points: Vec<RatVector> = vec![vec![BigRational::zero(); a.d()]];
    points.extend(f.iter().map(|&j| to_rational(a.column(j))));
    hull(&points)
}

/// Indices of the columns lying in `Δ_F`.
pub fn columns_in_delta(f: &[usize], a: &Configuration) -> Vec<usize> {
    let h = delta_hull(f, a);
    (0..a.n())
        .filter(|&j| h.contains(&to_rational(a.column(j))))
        .collect()
}

/// Points of `Δ_F`, either the columns it contains or all its lattice points.
///
/// Lattice mode scans the integer bounding box of `{0} ∪ F`, so its cost is
/// the product of the box side lengths.
pub fn delta_cap(f: &[usize], a: &Configuration, mode: DeltaMode) -> Vec<IntVector> {
    match mode {
        DeltaMode::Columns => columns_in_delta(f, a)
            .into_iter()
            .map(|j| a.column(j).clone())
            .collect(),
        DeltaMode::Lattice => {
            let h = delta_hull(f, a);
            let d = a.d();
            let mut lo = vec![BigInt::zero(); d];
            let mut hi = vec![BigInt::zero(); d];
            for &j in f {
                for (k, x) in a.column(j).iter().enumerate() {
                    if x < &lo[k] {
                        lo[k] = x.clone();
                    }
                    if x > &hi[k] {
                        hi[k] = x.clone();
                    }
                }
            }
            crate::semigroup::IntBox::new(lo, hi)
                .points()
                .filter(|p| h.contains(&to_rational(p)))
                .collect()
        }
    }
}

/// Adds one column to `τ` without capturing any other column, following the
/// replacement argument: take a candidate (raising the dimension when `Δ_τ`
/// is not full-dimensional) and, while `Δ_{τ∪{a}}` contains extra columns,
/// replace `a` by the lowest-indexed one. Each replacement strictly shrinks
/// the set of extra columns.
pub fn augment(tau: &[usize], a: &Configuration) -> Result<usize, PolytopeError> {
    let tau = check_indices(a, tau)?;
    if tau.len() == a.n() {
        return Err(PolytopeError::PreconditionViolated(
            "τ already contains every column".into(),
        ));
    }
    if columns_in_delta(&tau, a) != tau {
        return Err(PolytopeError::PreconditionViolated(
            "Δ_τ contains columns outside τ".into(),
        ));
    }
    let rank = a.rank_of(&tau);
    let with = |j: usize| {
        let mut s = tau.clone();
        s.push(j);
        s.sort_unstable();
        s
    };
    let outside = (0..a.n()).filter(|j| tau.binary_search(j).is_err());
    let mut candidate = if rank == a.d() {
        outside.clone().next()
    } else {
        outside.clone().find(|&j| a.rank_of(&with(j)) == rank + 1)
    }
    .expect("A has full rank, so a candidate exists");
    loop {
        let set = with(candidate);
        let cap = columns_in_delta(&set, a);
        match cap.into_iter().find(|j| set.binary_search(j).is_err()) {
            None => return Ok(candidate),
            Some(next) => candidate = next,
        }
    }
}

/// `n - |F| - codim(F)`; zero exactly when `A` is a pyramid over `F`.
pub fn pyramid_excess(f: &Face, a: &Configuration) -> usize {
    a.n() - f.len() - f.codim
}

/// Whether `A` is a pyramid over the face `F`.
///
/// When it is, `Z^d = ZF ⊕ (⊕_{j∉F} Z a_j)` is asserted: a basis of `ZF`
/// together with the remaining columns must be unimodular.
pub fn is_pyramid(f: &Face, a: &Configuration) -> bool {
    if pyramid_excess(f, a) != 0 {
        return false;
    }
    let mut rows: Vec<IntVector> = a.span_lattice(&f.indices).basis().to_vec();
    rows.extend((0..a.n()).filter(|j| !f.contains_index(*j)).map(|j| a.column(j).clone()));
    let det = IntMatrix::from_rows(a.d(), &rows).determinant();
    assert!(
        det.abs().is_one(),
        "pyramid over {} without a lattice splitting",
        f.label()
    );
    true
}
