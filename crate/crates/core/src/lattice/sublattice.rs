use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{
    hermite_normal_form, smith_normal_form, unimodular_inverse, IntMatrix, IntVector, LatticeError,
};

/// A subgroup of `Z^d` given by generators.
///
/// The basis is the nonzero part of the row Hermite normal form of the
/// generator matrix, which is unique for a given lattice. Two sublattices are
/// equal iff their bases are equal.
#[derive(Clone, Debug)]
pub struct Sublattice {
    ambient_dim: usize,
    generators: Vec<IntVector>,
    basis: Vec<IntVector>,
    pivots: Vec<usize>,
}

impl PartialEq for Sublattice {
    fn eq(&self, other: &Self) -> bool {
        self.ambient_dim == other.ambient_dim && self.basis == other.basis
    }
}

impl Eq for Sublattice {}

impl Sublattice {
    pub fn new(ambient_dim: usize, generators: Vec<IntVector>) -> Result<Self, LatticeError> {
        if let Some(g) = generators.iter().find(|g| g.len() != ambient_dim) {
            return Err(LatticeError::DimensionMismatch {
                expected: ambient_dim,
                found: g.len(),
            });
        }
        let (h, _) = hermite_normal_form(&IntMatrix::from_rows(ambient_dim, &generators));
        let mut basis = Vec::new();
        let mut pivots = Vec::new();
        for row in h.to_rows() {
            if let Some(p) = row.iter().position(|x| !x.is_zero()) {
                pivots.push(p);
                basis.push(row);
            }
        }
        Ok(Sublattice {
            ambient_dim,
            generators,
            basis,
            pivots,
        })
    }

    /// The full lattice `Z^d`.
    pub fn full(ambient_dim: usize) -> Self {
        let gens = (0..ambient_dim)
            .map(|i| {
                let mut e = vec![BigInt::zero(); ambient_dim];
                e[i] = BigInt::one();
                e
            })
            .collect();
        Self::new(ambient_dim, gens).expect("unit vectors have the ambient dimension")
    }

    pub fn zero(ambient_dim: usize) -> Self {
        Self::new(ambient_dim, Vec::new()).expect("no generators")
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn generators(&self) -> &[IntVector] {
        &self.generators
    }

    pub fn basis(&self) -> &[IntVector] {
        &self.basis
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    fn check_dim(&self, len: usize) -> Result<(), LatticeError> {
        if len == self.ambient_dim {
            Ok(())
        } else {
            Err(LatticeError::DimensionMismatch {
                expected: self.ambient_dim,
                found: len,
            })
        }
    }

    /// Integer coordinates of `v` in the basis, or `None` if `v` is not in the lattice.
    pub fn coordinates(&self, v: &[BigInt]) -> Result<Option<IntVector>, LatticeError> {
        self.check_dim(v.len())?;
        let mut rest = v.to_vec();
        let mut coords = Vec::with_capacity(self.rank());
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            if rest[..p].iter().any(|x| !x.is_zero()) {
                return Ok(None);
            }
            let (q, r) = rest[p].div_rem(&row[p]);
            if !r.is_zero() {
                return Ok(None);
            }
            for (x, b) in rest.iter_mut().zip(row) {
                *x -= &q * b;
            }
            coords.push(q);
        }
        Ok(rest.iter().all(Zero::is_zero).then_some(coords))
    }

    /// Lattice membership by back-substitution against the Hermite basis.
    pub fn contains(&self, v: &[BigInt]) -> Result<bool, LatticeError> {
        Ok(self.coordinates(v)?.is_some())
    }

    /// Rational coordinates of `v` in the basis, or `None` when `v` is outside
    /// the rational span.
    pub fn rational_coordinates(&self, v: &[BigRational]) -> Option<Vec<BigRational>> {
        if v.len() != self.ambient_dim {
            return None;
        }
        let mut rest = v.to_vec();
        let mut coords = Vec::with_capacity(self.rank());
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            let q = &rest[p] / BigRational::from_integer(row[p].clone());
            for (x, b) in rest.iter_mut().zip(row) {
                *x -= &q * BigRational::from_integer(b.clone());
            }
            coords.push(q);
        }
        rest.iter().all(Zero::is_zero).then_some(coords)
    }

    /// Canonical representative of `v + L`: the unique element whose entries at
    /// the pivot columns lie in `[0, pivot)`.
    pub fn reduce(&self, v: &[BigInt]) -> IntVector {
        let mut out = v.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            let q = out[p].div_floor(&row[p]);
            if !q.is_zero() {
                for (x, b) in out.iter_mut().zip(row) {
                    *x -= &q * b;
                }
            }
        }
        out
    }

    pub fn is_sublattice_of(&self, other: &Sublattice) -> Result<bool, LatticeError> {
        for b in &self.basis {
            if !other.contains(b)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `Z^d ∩ Q L`: same rank and rational span, torsion-free quotient.
    pub fn saturate(&self) -> Sublattice {
        if self.rank() == 0 {
            return self.clone();
        }
        let b = IntMatrix::from_rows(self.ambient_dim, &self.basis);
        let (_, _, v) = smith_normal_form(&b);
        let v_inv = unimodular_inverse(&v);
        let gens = (0..self.rank()).map(|i| v_inv.row(i).to_vec()).collect();
        Sublattice::new(self.ambient_dim, gens).expect("rows of a d x d matrix")
    }

    pub fn is_saturated(&self) -> bool {
        self.saturate() == *self
    }

    /// `[Z^d ∩ Q L : L]`, the product of the invariant factors.
    pub fn index_in_saturation(&self) -> BigInt {
        if self.rank() == 0 {
            return BigInt::one();
        }
        let b = IntMatrix::from_rows(self.ambient_dim, &self.basis);
        let (s, _, _) = smith_normal_form(&b);
        (0..self.rank()).map(|i| s[(i, i)].clone()).product()
    }
}

impl fmt::Display for Sublattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .basis
            .iter()
            .map(|r| {
                let r: Vec<String> = r.iter().map(ToString::to_string).collect();
                format!("({})", r.join(","))
            })
            .collect();
        write!(f, "Z<{}>", rows.join(", "))
    }
}

/// Index of a sublattice; infinite when the ranks differ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LatticeIndex {
    Finite(BigInt),
    Infinite,
}

impl LatticeIndex {
    pub fn finite(&self) -> Option<&BigInt> {
        match self {
            LatticeIndex::Finite(x) => Some(x),
            LatticeIndex::Infinite => None,
        }
    }
}

/// `[sup : sub]`. Fails if `sub` is not contained in `sup`.
pub fn lattice_index(sub: &Sublattice, sup: &Sublattice) -> Result<LatticeIndex, LatticeError> {
    let coords = coordinates_in(sub, sup)?;
    if sub.rank() != sup.rank() {
        return Ok(LatticeIndex::Infinite);
    }
    if sub.rank() == 0 {
        return Ok(LatticeIndex::Finite(BigInt::one()));
    }
    let c = IntMatrix::from_rows(sup.rank(), &coords);
    Ok(LatticeIndex::Finite(c.determinant().abs()))
}

fn coordinates_in(sub: &Sublattice, sup: &Sublattice) -> Result<Vec<IntVector>, LatticeError> {
    if sub.ambient_dim != sup.ambient_dim {
        return Err(LatticeError::DimensionMismatch {
            expected: sup.ambient_dim,
            found: sub.ambient_dim,
        });
    }
    sub.basis
        .iter()
        .map(|b| sup.coordinates(b)?.ok_or(LatticeError::NotASublattice))
        .collect()
}

/// Representatives of `sup / sub`.
#[derive(Clone, Debug)]
pub struct CosetSet {
    pub sublattice: Sublattice,
    pub ambient: Sublattice,
    pub representatives: Vec<IntVector>,
}

impl CosetSet {
    /// The representative congruent to `v` modulo the sublattice.
    pub fn representative_of(&self, v: &[BigInt]) -> Option<&IntVector> {
        self.representatives.iter().find(|r| {
            let diff: IntVector = v.iter().zip(r.iter()).map(|(a, b)| a - b).collect();
            self.sublattice.contains(&diff).unwrap_or(false)
        })
    }
}

/// Canonical coset representatives of `sub` in `sup`.
///
/// Representatives are the lattice points of `sup` in the half-open
/// fundamental parallelepiped of the Hermite basis of `sub`, listed in
/// lexicographic order. They are enumerated through the Smith form of the
/// inclusion map, so the work is proportional to the index.
pub fn coset_representatives(sub: &Sublattice, sup: &Sublattice) -> Result<CosetSet, LatticeError> {
    let coords = coordinates_in(sub, sup)?;
    if sub.rank() != sup.rank() {
        return Err(LatticeError::InfiniteIndex);
    }
    let r = sup.rank();
    let d = sup.ambient_dim;
    let mut reps = Vec::new();
    if r == 0 {
        reps.push(vec![BigInt::zero(); d]);
    } else {
        // sub = Z^r C in sup-coordinates; with U C V = S, x ∈ Z^r C iff x V ∈ ⊕ s_i Z.
        let c = IntMatrix::from_rows(r, &coords);
        let (s, _, v) = smith_normal_form(&c);
        let v_inv = unimodular_inverse(&v);
        let sup_basis = IntMatrix::from_rows(d, &sup.basis);
        let moduli: Vec<BigInt> = (0..r).map(|i| s[(i, i)].clone()).collect();
        let mut y = vec![BigInt::zero(); r];
        loop {
            let x = v_inv.left_mul_vector(&y);
            let point = sup_basis.left_mul_vector(&x);
            reps.push(into_parallelepiped(sub, &point));
            // odometer over 0 <= y_i < s_i
            let mut i = 0;
            loop {
                if i == r {
                    reps.sort();
                    return Ok(CosetSet {
                        sublattice: sub.clone(),
                        ambient: sup.clone(),
                        representatives: reps,
                    });
                }
                y[i] += 1;
                if y[i] < moduli[i] {
                    break;
                }
                y[i] = BigInt::zero();
                i += 1;
            }
        }
    }
    Ok(CosetSet {
        sublattice: sub.clone(),
        ambient: sup.clone(),
        representatives: reps,
    })
}

/// Moves `v` into the half-open parallelepiped spanned by the basis of `lattice`.
fn into_parallelepiped(lattice: &Sublattice, v: &[BigInt]) -> IntVector {
    let q: Vec<BigRational> = v.iter().cloned().map(BigRational::from_integer).collect();
    let coords = lattice
        .rational_coordinates(&q)
        .expect("point lies in the span of the lattice");
    let mut out = v.to_vec();
    for (c, b) in coords.iter().zip(&lattice.basis) {
        let f = c.floor().to_integer();
        if !f.is_zero() {
            for (x, bi) in out.iter_mut().zip(b) {
                *x -= &f * bi;
            }
        }
    }
    out
}

/// Returns `true` when every entry of `v` is zero.
pub(crate) fn is_zero_vector(v: &[BigInt]) -> bool {
    v.iter().all(Zero::is_zero)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::int_vector;

    fn lat(d: usize, gens: &[&[i64]]) -> Sublattice {
        Sublattice::new(d, gens.iter().map(|g| int_vector(g)).collect()).unwrap()
    }

    #[test]
    fn saturation_of_scaled_axis() {
        assert_eq!(lat(2, &[&[2, 0]]).saturate(), lat(2, &[&[1, 0]]));
    }

    #[test]
    fn saturation_of_family_face_lattice() {
        for d in 3..6usize {
            for b in 2..7i64 {
                let mut g = vec![0; d];
                g[d - 1] = b;
                let l = lat(d, &[&g]);
                let mut e = vec![0; d];
                e[d - 1] = 1;
                assert_eq!(l.saturate(), lat(d, &[&e]));
                assert_eq!(l.index_in_saturation(), BigInt::from(b));
            }
        }
    }

    #[test]
    fn index_two_diagonal_lattice() {
        let l = lat(2, &[&[1, 1], &[1, -1]]);
        assert_eq!(
            lattice_index(&l, &Sublattice::full(2)).unwrap(),
            LatticeIndex::Finite(BigInt::from(2))
        );
        assert_eq!(l.saturate(), Sublattice::full(2));
    }

    #[test]
    fn index_basic_cases() {
        let two_z = lat(1, &[&[2]]);
        let z = Sublattice::full(1);
        assert_eq!(lattice_index(&two_z, &z).unwrap().finite().unwrap(), &BigInt::from(2));
        assert_eq!(lattice_index(&z, &z).unwrap().finite().unwrap(), &BigInt::one());
        assert_eq!(
            lattice_index(&z, &two_z).unwrap_err(),
            LatticeError::NotASublattice
        );
        assert_eq!(
            lattice_index(&lat(2, &[&[1, 0]]), &Sublattice::full(2)).unwrap(),
            LatticeIndex::Infinite
        );
    }

    #[test]
    fn cosets_of_two_z() {
        let c = coset_representatives(&lat(1, &[&[2]]), &Sublattice::full(1)).unwrap();
        assert_eq!(c.representatives, vec![int_vector(&[0]), int_vector(&[1])]);
        let same = coset_representatives(&Sublattice::full(2), &Sublattice::full(2)).unwrap();
        assert_eq!(same.representatives, vec![int_vector(&[0, 0])]);
    }

    #[test]
    fn cosets_of_family_face_lattice_are_vertical_steps() {
        let b = 5;
        let sub = lat(3, &[&[0, 0, b]]);
        let sup = sub.saturate();
        let c = coset_representatives(&sub, &sup).unwrap();
        let expected: Vec<IntVector> = (0..b).map(|k| int_vector(&[0, 0, k])).collect();
        assert_eq!(c.representatives, expected);
    }

    #[test]
    fn infinite_index_cosets_rejected() {
        let err = coset_representatives(&lat(2, &[&[1, 0]]), &Sublattice::full(2)).unwrap_err();
        assert_eq!(err, LatticeError::InfiniteIndex);
    }

    #[test]
    fn membership() {
        let zf = lat(3, &[&[0, 0, 2]]);
        assert!(zf.contains(&int_vector(&[0, 0, 2])).unwrap());
        assert!(!zf.contains(&int_vector(&[0, 0, 1])).unwrap());
        assert!(matches!(
            zf.contains(&int_vector(&[0, 1])),
            Err(LatticeError::DimensionMismatch { .. })
        ));
        let za = lat(3, &[&[1, 0, 0], &[0, 1, 0], &[1, 0, 1], &[0, 1, 1], &[0, 0, 2]]);
        assert!(za.contains(&int_vector(&[1, 1, 0])).unwrap());
        assert_eq!(za, Sublattice::full(3));
    }

    #[test]
    fn reduce_is_canonical() {
        let l = lat(2, &[&[2, 1], &[0, 3]]);
        let a = l.reduce(&int_vector(&[5, 7]));
        let b = l.reduce(&int_vector(&[5 - 4, 7 - 2 + 9]));
        assert_eq!(a, b);
    }
}
