use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::PolytopeError;
use crate::lattice::{invariant_factors, is_zero_vector, IntMatrix, IntVector, Sublattice};
use crate::linalg::{self, dot_int};

/// A configuration `A`: `n` distinct nonzero columns in `Z^d` spanning the
/// lattice `Z^d` and generating a pointed cone.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Configuration {
    d: usize,
    columns: Vec<IntVector>,
    facets: Vec<IntVector>,
    positivity_functional: IntVector,
}

impl Configuration {
    pub fn d(&self) -> usize {
        self.d
    }

    pub fn n(&self) -> usize {
        self.columns.len()
    }

    pub fn columns(&self) -> &[IntVector] {
        &self.columns
    }

    pub fn column(&self, j: usize) -> &IntVector {
        &self.columns[j]
    }

    /// `h` with `h · a_j > 0` for every column.
    pub fn positivity_functional(&self) -> &IntVector {
        &self.positivity_functional
    }

    /// Primitive inner facet normals of the cone, in lexicographic order.
    pub fn facets(&self) -> &[IntVector] {
        &self.facets
    }

    pub fn matrix(&self) -> IntMatrix {
        IntMatrix::from_columns(self.d, &self.columns)
    }

    /// Columns selected by an index set.
    pub fn select(&self, indices: &[usize]) -> Vec<IntVector> {
        indices.iter().map(|&j| self.columns[j].clone()).collect()
    }

    /// `true` when `v` satisfies every facet inequality, i.e. lies in the real cone.
    pub fn cone_contains(&self, v: &[BigInt]) -> bool {
        self.facets.iter().all(|f| !dot_int(f, v).is_negative())
    }

    pub fn rank_of(&self, indices: &[usize]) -> usize {
        linalg::rank_int(&self.select(indices))
    }

    /// The lattice `ZF` spanned by a set of columns.
    pub fn span_lattice(&self, indices: &[usize]) -> Sublattice {
        Sublattice::new(self.d, self.select(indices)).expect("columns have dimension d")
    }
}

impl fmt::Display for Configuration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.matrix())
    }
}

/// Checks the standing hypotheses and attaches the cone data.
pub fn validate(columns: Vec<IntVector>) -> Result<Configuration, PolytopeError> {
    let Some(first) = columns.first() else {
        return Err(PolytopeError::EmptyConfiguration);
    };
    let d = first.len();
    if d == 0 {
        return Err(PolytopeError::EmptyConfiguration);
    }
    if let Some(bad) = columns.iter().find(|c| c.len() != d) {
        return Err(PolytopeError::DimensionMismatch {
            expected: d,
            found: bad.len(),
        });
    }
    for (j, c) in columns.iter().enumerate() {
        if is_zero_vector(c) || columns[..j].contains(c) {
            return Err(PolytopeError::DuplicateOrZeroColumn { index: j });
        }
    }
    let rank = linalg::rank_int(&columns);
    if rank < d {
        return Err(PolytopeError::NotFullRank { rank, d });
    }
    let factors = invariant_factors(&IntMatrix::from_rows(d, &columns));
    let index: BigInt = factors.iter().product();
    if !index.is_one() {
        return Err(PolytopeError::LatticeNotZd { index });
    }
    let facets = facet_normals(d, &columns);
    let mut h = vec![BigInt::zero(); d];
    for f in &facets {
        for (x, y) in h.iter_mut().zip(f) {
            *x += y;
        }
    }
    if let Some(j) = columns.iter().position(|c| !dot_int(&h, c).is_positive()) {
        return Err(PolytopeError::NotPointed { witness: j });
    }
    Ok(Configuration {
        d,
        columns,
        facets,
        positivity_functional: h,
    })
}

/// Exhaustive facet search: every linearly independent `(d-1)`-subset of
/// columns spans a hyperplane; it supports a facet when all columns lie on
/// one side.
fn facet_normals(d: usize, columns: &[IntVector]) -> Vec<IntVector> {
    let mut found = BTreeSet::new();
    if d == 1 {
        let signs: BTreeSet<_> = columns.iter().map(|c| c[0].signum()).collect();
        if signs.len() == 1 {
            found.insert(vec![signs.into_iter().next().expect("one sign")]);
        }
        return found.into_iter().collect();
    }
    for subset in (0..columns.len()).combinations(d - 1) {
        let rows: Vec<_> = subset.iter().map(|&j| linalg::to_rational(&columns[j])).collect();
        let ns = linalg::nullspace(&rows, d);
        if ns.len() != 1 {
            continue;
        }
        let normal = linalg::primitive(&ns[0]);
        let values: Vec<BigInt> = columns.iter().map(|c| dot_int(&normal, c)).collect();
        if values.iter().all(|v| !v.is_negative()) {
            found.insert(normal);
        } else if values.iter().all(|v| !v.is_positive()) {
            found.insert(normal.iter().map(|x| -x).collect());
        }
    }
    found.into_iter().collect()
}

/// Primitive inner facet normals of the cone over `A`.
pub fn cone_facets(a: &Configuration) -> Vec<IntVector> {
    a.facets.clone()
}

/// A face of `A`, identified with its sorted column index set.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Face {
    pub indices: Vec<usize>,
    /// Supporting functional: zero on the face, positive on the other columns.
    pub normal: IntVector,
    pub dim: usize,
    pub codim: usize,
}

impl Face {
    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn contains_index(&self, j: usize) -> bool {
        self.indices.binary_search(&j).is_ok()
    }

    /// Checks the supporting certificate and `F = A ∩ RF`.
    pub fn verify(&self, a: &Configuration) -> bool {
        if self.normal.len() != a.d() || self.indices.iter().any(|&j| j >= a.n()) {
            return false;
        }
        let certificate = (0..a.n()).all(|j| {
            let v = dot_int(&self.normal, a.column(j));
            if self.contains_index(j) {
                v.is_zero()
            } else {
                v.is_positive()
            }
        });
        let rank = a.rank_of(&self.indices);
        let closed = (0..a.n()).filter(|j| !self.contains_index(*j)).all(|j| {
            let mut with = self.indices.clone();
            with.push(j);
            a.rank_of(&with) > rank
        });
        certificate && closed && rank == self.dim && self.dim + self.codim == a.d()
    }

    /// Builds the face for an index set cut out by facets, with the
    /// certificate given by the sum of the facet normals containing it.
    pub(crate) fn from_indices(a: &Configuration, indices: Vec<usize>) -> Face {
        let mut normal = vec![BigInt::zero(); a.d()];
        for f in a.facets() {
            if indices.iter().all(|&j| dot_int(f, a.column(j)).is_zero()) {
                for (x, y) in normal.iter_mut().zip(f) {
                    *x += y;
                }
            }
        }
        let dim = a.rank_of(&indices);
        Face {
            indices,
            normal,
            dim,
            codim: a.d() - dim,
        }
    }

    /// Display form with 1-based column labels, as in `{a1, a3}`.
    pub fn label(&self) -> String {
        let parts: Vec<String> = self.indices.iter().map(|j| format!("a{}", j + 1)).collect();
        format!("{{{}}}", parts.join(", "))
    }
}

/// All faces of `A`, from the empty face up to `A` itself, ordered by
/// dimension and then by index set.
///
/// Faces are the column sets cut out by intersections of facets, found by
/// closing `{A}` under intersection with each facet. The cost is
/// `#faces · #facets` rank tests, which suits configurations with a dozen
/// or so columns in dimension up to about seven.
pub fn faces(a: &Configuration) -> Vec<Face> {
    let facet_sets: Vec<Vec<usize>> = a
        .facets()
        .iter()
        .map(|f| (0..a.n()).filter(|&j| dot_int(f, a.column(j)).is_zero()).collect())
        .collect();
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    let full: Vec<usize> = (0..a.n()).collect();
    seen.insert(full.clone());
    let mut queue = VecDeque::from([full]);
    while let Some(f) = queue.pop_front() {
        for fs in &facet_sets {
            let g: Vec<usize> = f.iter().copied().filter(|j| fs.binary_search(j).is_ok()).collect();
            if seen.insert(g.clone()) {
                queue.push_back(g);
            }
        }
    }
    let mut out: Vec<Face> = seen.into_iter().map(|s| Face::from_indices(a, s)).collect();
    out.sort_by(|x, y| x.dim.cmp(&y.dim).then_with(|| x.indices.cmp(&y.indices)));
    out
}

/// Looks up the face with the given index set.
pub fn face_of(a: &Configuration, indices: &[usize]) -> Option<Face> {
    let mut idx = indices.to_vec();
    idx.sort_unstable();
    idx.dedup();
    let face = Face::from_indices(a, idx);
    face.verify(a).then_some(face)
}
