use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::SemigroupError;
use crate::lattice::{smith_normal_form, unimodular_inverse, IntMatrix, IntVector, Sublattice};
use crate::linalg::dot_int;
use crate::polytope::{Configuration, Face};

/// An element of `Z^d / L`: coordinates on the free part and residues on the
/// cyclic torsion factors.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QuotientPoint {
    pub free: IntVector,
    pub torsion: IntVector,
}

impl QuotientPoint {
    pub fn is_zero(&self) -> bool {
        self.free.iter().all(Zero::is_zero) && self.torsion.iter().all(Zero::is_zero)
    }
}

/// Coordinates on `Z^d / L` from the Smith form `S = U·M·V` of a basis `M` of `L`.
///
/// With `w = v·V`, the lattice `L` becomes `⊕ s_i Z e_i` (`i < rank L`), so
/// the class of `v` is determined by `w_i mod s_i` for `i < rank L` and by the
/// free coordinates `w_i`, `i ≥ rank L`.
#[derive(Clone, Debug)]
pub struct FaceQuotient {
    rank: usize,
    v: IntMatrix,
    v_inv: IntMatrix,
    torsion_slots: Vec<(usize, BigInt)>,
}

impl FaceQuotient {
    pub fn new(lattice: &Sublattice) -> FaceQuotient {
        let d = lattice.ambient_dim();
        let rank = lattice.rank();
        if rank == 0 {
            return FaceQuotient {
                rank,
                v: IntMatrix::identity(d),
                v_inv: IntMatrix::identity(d),
                torsion_slots: Vec::new(),
            };
        }
        let m = IntMatrix::from_rows(d, lattice.basis());
        let (s, _, v) = smith_normal_form(&m);
        let v_inv = unimodular_inverse(&v);
        let torsion_slots = (0..rank)
            .map(|i| (i, s[(i, i)].clone()))
            .filter(|(_, m)| m > &BigInt::from(1))
            .collect();
        FaceQuotient {
            rank,
            v,
            v_inv,
            torsion_slots,
        }
    }

    /// Rank of the lattice being divided out.
    pub fn lattice_rank(&self) -> usize {
        self.rank
    }

    pub fn free_rank(&self) -> usize {
        self.v.nrows() - self.rank
    }

    /// Orders of the cyclic torsion factors, all greater than one.
    pub fn torsion(&self) -> Vec<BigInt> {
        self.torsion_slots.iter().map(|(_, m)| m.clone()).collect()
    }

    pub fn project(&self, v: &[BigInt]) -> QuotientPoint {
        let w = self.v.left_mul_vector(v);
        QuotientPoint {
            free: w[self.rank..].to_vec(),
            torsion: self.torsion_slots.iter().map(|(i, m)| w[*i].mod_floor(m)).collect(),
        }
    }

    /// A functional vanishing on `L`, expressed on the free coordinates.
    pub fn functional(&self, phi: &[BigInt]) -> IntVector {
        let t = self.v_inv.mul_vector(phi);
        debug_assert!(t[..self.rank].iter().all(Zero::is_zero), "functional does not vanish on the lattice");
        t[self.rank..].to_vec()
    }

    /// Free coordinates of a rational vector; the affine space `β + QL` meets
    /// `Z^d` exactly when they are all integers.
    pub fn rational_free_part(&self, beta: &[BigRational]) -> Vec<BigRational> {
        let d = self.v.nrows();
        (self.rank..d)
            .map(|j| {
                (0..d)
                    .map(|i| &beta[i] * BigRational::from_integer(self.v[(i, j)].clone()))
                    .sum()
            })
            .collect()
    }

    /// The integer vector with zero coordinates along `L` and the given free part.
    pub fn lift_free(&self, free: &[BigInt]) -> IntVector {
        let mut w = vec![BigInt::zero(); self.rank];
        w.extend_from_slice(free);
        self.v_inv.left_mul_vector(&w)
    }
}

/// Memoized reachability in a pointed quotient semigroup: `p` is reachable
/// iff `p = 0` or `p - g` is reachable for some generator `g`. The level
/// functional is positive on every generator, so the search terminates.
#[derive(Clone, Debug)]
struct Dp {
    generators: Vec<QuotientPoint>,
    moduli: Vec<BigInt>,
    level: IntVector,
    walls: Vec<IntVector>,
    memo: HashMap<QuotientPoint, bool>,
}

impl Dp {
    /// Generators are tried from the highest level down, which finds a
    /// decomposition quickly when one exists.
    fn new(quotient: &FaceQuotient, mut generators: Vec<QuotientPoint>, level: &[BigInt], walls: &[IntVector]) -> Dp {
        let level = quotient.functional(level);
        debug_assert!(generators.iter().all(|g| dot_int(&level, &g.free).is_positive()));
        generators.sort_by_cached_key(|g| std::cmp::Reverse(dot_int(&level, &g.free)));
        Dp {
            generators,
            moduli: quotient.torsion(),
            level,
            walls: walls.iter().map(|w| quotient.functional(w)).collect(),
            memo: HashMap::new(),
        }
    }

    fn settled(&self, p: &QuotientPoint) -> Option<bool> {
        if p.is_zero() {
            return Some(true);
        }
        if !dot_int(&self.level, &p.free).is_positive()
            || self.walls.iter().any(|w| dot_int(w, &p.free).is_negative())
        {
            return Some(false);
        }
        self.memo.get(p).copied()
    }

    fn step(&self, p: &QuotientPoint, g: &QuotientPoint) -> QuotientPoint {
        QuotientPoint {
            free: p.free.iter().zip(&g.free).map(|(a, b)| a - b).collect(),
            torsion: p
                .torsion
                .iter()
                .zip(&g.torsion)
                .zip(&self.moduli)
                .map(|((a, b), m)| (a - b).mod_floor(m))
                .collect(),
        }
    }

    fn contains(&mut self, start: QuotientPoint) -> bool {
        if let Some(known) = self.settled(&start) {
            return known;
        }
        let mut stack: Vec<(QuotientPoint, usize)> = vec![(start, 0)];
        while let Some((p, next)) = stack.last_mut() {
            if *next == self.generators.len() {
                let p = p.clone();
                stack.pop();
                self.memo.insert(p, false);
                continue;
            }
            let child = self.step(p, &self.generators[*next]);
            *next += 1;
            match self.settled(&child) {
                Some(true) => {
                    for (q, _) in stack.drain(..) {
                        self.memo.insert(q, true);
                    }
                    return true;
                }
                Some(false) => {}
                None => stack.push((child, 0)),
            }
        }
        false
    }
}

/// Membership oracle for `NA`, memoized across queries.
///
/// The table is mutable, so one index belongs to one task at a time.
#[derive(Clone, Debug)]
pub struct MembershipIndex<'a> {
    configuration: &'a Configuration,
    dp: Dp,
}

impl<'a> MembershipIndex<'a> {
    pub fn new(a: &'a Configuration) -> MembershipIndex<'a> {
        let quotient = FaceQuotient::new(&Sublattice::zero(a.d()));
        let generators = a.columns().iter().map(|c| quotient.project(c)).collect();
        let dp = Dp::new(&quotient, generators, a.positivity_functional(), a.facets());
        MembershipIndex { configuration: a, dp }
    }

    pub fn configuration(&self) -> &Configuration {
        self.configuration
    }

    pub fn functional(&self) -> &[BigInt] {
        self.configuration.positivity_functional()
    }

    /// Number of memoized vectors.
    pub fn table_len(&self) -> usize {
        self.dp.memo.len()
    }

    /// Whether `v` is a nonnegative integer combination of the columns.
    pub fn contains(&mut self, v: &[BigInt]) -> bool {
        assert_eq!(v.len(), self.configuration.d(), "dimension mismatch");
        self.dp.contains(QuotientPoint {
            free: v.to_vec(),
            torsion: Vec::new(),
        })
    }
}

/// The image of `NA` in `Z^d / ZF` for a face `F`, a pointed semigroup with
/// possible torsion.
#[derive(Clone, Debug)]
pub struct QuotientSemigroup {
    face: Face,
    quotient: FaceQuotient,
    dp: Dp,
}

impl QuotientSemigroup {
    pub fn new(face: &Face, a: &Configuration) -> Result<QuotientSemigroup, SemigroupError> {
        if !face.verify(a) {
            return Err(SemigroupError::NotAFace(face.label()));
        }
        let quotient = FaceQuotient::new(&a.span_lattice(&face.indices));
        let generators = (0..a.n())
            .filter(|j| !face.contains_index(*j))
            .map(|j| quotient.project(a.column(j)))
            .collect();
        let walls: Vec<IntVector> = a
            .facets()
            .iter()
            .filter(|f| face.indices.iter().all(|&j| dot_int(f, a.column(j)).is_zero()))
            .cloned()
            .collect();
        let dp = Dp::new(&quotient, generators, &face.normal, &walls);
        Ok(QuotientSemigroup {
            face: face.clone(),
            quotient,
            dp,
        })
    }

    pub fn face(&self) -> &Face {
        &self.face
    }

    pub fn quotient(&self) -> &FaceQuotient {
        &self.quotient
    }

    /// `codim(F)`, the rank of the free part.
    pub fn free_rank(&self) -> usize {
        self.quotient.free_rank()
    }

    pub fn torsion(&self) -> Vec<BigInt> {
        self.quotient.torsion()
    }

    /// Images of the columns outside `F`.
    pub fn projected_generators(&self) -> &[QuotientPoint] {
        &self.dp.generators
    }

    /// The supporting functional of `F` on the free part.
    pub fn functional(&self) -> &[BigInt] {
        &self.dp.level
    }

    /// Whether `v ∈ NA + ZF`.
    pub fn contains(&mut self, v: &[BigInt]) -> bool {
        let p = self.quotient.project(v);
        self.dp.contains(p)
    }
}

/// Whether `v ∈ NA + ZF`.
pub fn contains_mod_face(v: &[BigInt], face: &Face, a: &Configuration) -> Result<bool, SemigroupError> {
    if v.len() != a.d() {
        return Err(SemigroupError::DimensionMismatch {
            expected: a.d(),
            found: v.len(),
        });
    }
    Ok(QuotientSemigroup::new(face, a)?.contains(v))
}
