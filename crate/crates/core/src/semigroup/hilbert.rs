use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::MembershipIndex;
use crate::lattice::{coset_representatives, IntVector, Sublattice};
use crate::linalg::{self, to_rational, RatVector};
use crate::polytope::{Configuration, PolytopeHull};

/// Lattice points of the half-open parallelepiped `{Σ λ_i g_i : 0 ≤ λ_i < 1}`
/// of a simplicial cone with linearly independent generators `g`.
///
/// There are exactly `|det g|` of them, one per coset of `Zg` in `Z^d`.
pub fn parallelepiped_points(generators: &[IntVector]) -> Vec<IntVector> {
    let d = generators[0].len();
    let lattice = Sublattice::new(d, generators.to_vec()).expect("uniform dimension");
    let cosets = coset_representatives(&lattice, &Sublattice::full(d)).expect("full-rank generators");
    let gt: Vec<RatVector> = (0..d)
        .map(|i| generators.iter().map(|g| BigRational::from_integer(g[i].clone())).collect())
        .collect();
    let mut out: Vec<IntVector> = cosets
        .representatives
        .iter()
        .map(|x| {
            let lambda = linalg::solve(&gt, &to_rational(x)).expect("generators are independent");
            let mut y = x.clone();
            for (l, g) in lambda.iter().zip(generators) {
                let f = l.floor().to_integer();
                if !f.is_zero() {
                    for (yi, gi) in y.iter_mut().zip(g) {
                        *yi -= &f * gi;
                    }
                }
            }
            y
        })
        .collect();
    out.sort();
    out
}

/// Hilbert basis of the saturated semigroup `R≥0 A ∩ Z^d`.
///
/// The cone is covered by the simplicial cones of the placing triangulation
/// of `Δ_A` (origin placed first) at the origin. The columns and the nonzero
/// parallelepiped points of those cones generate the saturation; an element
/// is kept when no other candidate can be subtracted from it inside the cone.
pub fn hilbert_basis(a: &Configuration) -> Vec<IntVector> {
    let mut points: Vec<RatVector> = vec![vec![BigRational::zero(); a.d()]];
    points.extend(a.columns().iter().map(|c| to_rational(c)));
    let triangulation = PolytopeHull::placing(points).triangulation;

    let mut candidates: BTreeSet<IntVector> = a.columns().iter().cloned().collect();
    for simplex in triangulation.iter().filter(|s| s.contains(&0)) {
        let gens: Vec<IntVector> = simplex
            .iter()
            .filter(|&&i| i != 0)
            .map(|&i| a.column(i - 1).clone())
            .collect();
        for p in parallelepiped_points(&gens) {
            if p.iter().any(|x| !x.is_zero()) {
                candidates.insert(p);
            }
        }
    }
    let candidates: Vec<IntVector> = candidates.into_iter().collect();
    candidates
        .iter()
        .filter(|x| {
            !candidates.iter().any(|y| {
                y != *x && a.cone_contains(&x.iter().zip(y).map(|(p, q)| p - q).collect::<Vec<BigInt>>())
            })
        })
        .cloned()
        .collect()
}

/// Whether `NA = R≥0 A ∩ Z^d`, i.e. every Hilbert basis element lies in `NA`.
pub fn is_normal(a: &Configuration) -> bool {
    let mut index = MembershipIndex::new(a);
    hilbert_basis(a).iter().all(|h| index.contains(h))
}
