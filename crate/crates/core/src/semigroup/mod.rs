//! Affine semigroups: membership in `NA` and in `NA + ZF`, holes, Hilbert
//! bases and normality.

mod hilbert;
mod membership;

use num_bigint::BigInt;
use num_traits::One;
use thiserror::Error;

use crate::lattice::IntVector;
use crate::polytope::Configuration;

pub use hilbert::{hilbert_basis, is_normal, parallelepiped_points};
pub use membership::{contains_mod_face, FaceQuotient, MembershipIndex, QuotientPoint, QuotientSemigroup};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SemigroupError {
    #[error("column set {0} is not a face of the configuration")]
    NotAFace(String),
    #[error("vector has dimension {found}, expected {expected}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("box bounds have dimension {found}, expected {expected}")]
    BoxDimension { expected: usize, found: usize },
}

/// An axis-parallel integer box `lower ≤ x ≤ upper`, bounds inclusive.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntBox {
    pub lower: IntVector,
    pub upper: IntVector,
}

impl IntBox {
    pub fn new(lower: IntVector, upper: IntVector) -> IntBox {
        assert_eq!(lower.len(), upper.len(), "box bounds of different dimension");
        IntBox { lower, upper }
    }

    /// `[lo, hi]^d`.
    pub fn cube(d: usize, lo: i64, hi: i64) -> IntBox {
        IntBox::new(vec![BigInt::from(lo); d], vec![BigInt::from(hi); d])
    }

    pub fn dim(&self) -> usize {
        self.lower.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lower.iter().zip(&self.upper).any(|(l, u)| l > u)
    }

    pub fn contains(&self, v: &[BigInt]) -> bool {
        v.len() == self.dim()
            && v.iter().zip(self.lower.iter().zip(&self.upper)).all(|(x, (l, u))| l <= x && x <= u)
    }

    /// Number of lattice points in the box.
    pub fn size(&self) -> BigInt {
        if self.is_empty() {
            return BigInt::from(0);
        }
        self.lower
            .iter()
            .zip(&self.upper)
            .map(|(l, u)| u - l + BigInt::one())
            .product()
    }

    /// Lattice points in lexicographic order.
    pub fn points(&self) -> BoxPoints {
        BoxPoints {
            bounds: self.clone(),
            next: (!self.is_empty()).then(|| self.lower.clone()),
        }
    }
}

/// Iterator over the points of an [`IntBox`].
pub struct BoxPoints {
    bounds: IntBox,
    next: Option<IntVector>,
}

impl Iterator for BoxPoints {
    type Item = IntVector;

    fn next(&mut self) -> Option<IntVector> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        let mut i = succ.len();
        loop {
            if i == 0 {
                break;
            }
            i -= 1;
            if succ[i] < self.bounds.upper[i] {
                succ[i] += 1;
                self.next = Some(succ);
                break;
            }
            succ[i] = self.bounds.lower[i].clone();
        }
        Some(current)
    }
}

/// Holes of `NA` found in a box.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HoleReport {
    pub bounds: IntBox,
    pub holes: Vec<IntVector>,
}

/// Lattice points of the box that lie in the real cone over `A` but not in `NA`.
pub fn holes_in_box(a: &Configuration, bounds: &IntBox) -> Result<HoleReport, SemigroupError> {
    if bounds.dim() != a.d() {
        return Err(SemigroupError::BoxDimension {
            expected: a.d(),
            found: bounds.dim(),
        });
    }
    let mut index = MembershipIndex::new(a);
    let holes = bounds
        .points()
        .filter(|p| a.cone_contains(p))
        .filter(|p| !index.contains(p))
        .collect();
    Ok(HoleReport {
        bounds: bounds.clone(),
        holes,
    })
}

/// Integer bounding box of `Δ_A = conv(0, A)`.
pub fn delta_bounding_box(a: &Configuration) -> IntBox {
    let d = a.d();
    let mut lower = vec![BigInt::from(0); d];
    let mut upper = vec![BigInt::from(0); d];
    for c in a.columns() {
        for k in 0..d {
            if c[k] < lower[k] {
                lower[k] = c[k].clone();
            }
            if c[k] > upper[k] {
                upper[k] = c[k].clone();
            }
        }
    }
    IntBox::new(lower, upper)
}
