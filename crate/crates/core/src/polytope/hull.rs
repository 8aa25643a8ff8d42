//! Exact beneath-beyond convex hull with a placing triangulation.

use std::collections::HashMap;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::linalg::{self, dot, sub, RatVector};

/// A half-space `normal · x <= offset` (or an equation `normal · x = offset`).
pub type Inequality = (RatVector, BigRational);

/// Convex hull of finitely many rational points.
#[derive(Clone, Debug)]
pub struct PolytopeHull {
    /// Input points in insertion order (sorted and deduplicated by [`hull`]).
    pub points: Vec<RatVector>,
    /// Extreme points of the hull.
    pub vertices: Vec<RatVector>,
    /// Affine dimension.
    pub dim: usize,
    /// Equations of the affine hull; empty when full-dimensional.
    pub equations: Vec<Inequality>,
    /// Facet inequalities, one per facet hyperplane, with primitive integer normals.
    pub facet_inequalities: Vec<Inequality>,
    /// Simplices of the placing triangulation as indices into `points`.
    pub triangulation: Vec<Vec<usize>>,
}

/// Hull of a nonempty point set. Points are sorted lexicographically and
/// deduplicated first, so the triangulation is deterministic.
///
/// # Panics
/// On empty input or points of differing dimension.
pub fn hull(points: &[RatVector]) -> PolytopeHull {
    let mut pts = points.to_vec();
    pts.sort();
    pts.dedup();
    PolytopeHull::placing(pts)
}

#[derive(Clone, Debug)]
struct Facet {
    verts: Vec<usize>,
    normal: RatVector,
    offset: BigRational,
}

/// Affine chart identifying the affine hull of the points with `Q^k`.
enum Frame {
    Identity,
    Affine {
        origin: RatVector,
        pivots: Vec<usize>,
        // inverse of the k x k pivot block of the direction matrix
        block_inv: Vec<RatVector>,
        directions: Vec<RatVector>,
    },
}

impl Frame {
    fn chart(&self, x: &[BigRational]) -> RatVector {
        match self {
            Frame::Identity => x.to_vec(),
            Frame::Affine {
                origin,
                pivots,
                block_inv,
                ..
            } => {
                let rel = sub(x, origin);
                let picked: RatVector = pivots.iter().map(|&p| rel[p].clone()).collect();
                // λ = picked · M^{-1}
                let k = pivots.len();
                (0..k)
                    .map(|j| (0..k).map(|i| &picked[i] * &block_inv[i][j]).sum())
                    .collect()
            }
        }
    }

    /// Pulls a chart inequality back to the ambient space.
    fn lift(&self, ambient: usize, normal: &[BigRational], offset: &BigRational) -> Inequality {
        match self {
            Frame::Identity => (normal.to_vec(), offset.clone()),
            Frame::Affine {
                origin,
                pivots,
                block_inv,
                ..
            } => {
                let mut w = vec![BigRational::zero(); ambient];
                for (i, &p) in pivots.iter().enumerate() {
                    w[p] = block_inv[i].iter().zip(normal).map(|(a, b)| a * b).sum();
                }
                let off = offset + dot(&w, origin);
                (w, off)
            }
        }
    }

    fn equations(&self, ambient: usize) -> Vec<Inequality> {
        match self {
            Frame::Identity => Vec::new(),
            Frame::Affine {
                origin, directions, ..
            } => linalg::nullspace(directions, ambient)
                .into_iter()
                .map(|e| {
                    let e = linalg::to_rational(&linalg::primitive(&e));
                    let off = dot(&e, origin);
                    (e, off)
                })
                .collect(),
        }
    }
}

fn hyperplane(points: &[&RatVector], k: usize) -> (RatVector, BigRational) {
    let normal = if k == 1 {
        vec![BigRational::one()]
    } else {
        let rows: Vec<RatVector> = points[1..].iter().map(|p| sub(p, points[0])).collect();
        let ns = linalg::nullspace(&rows, k);
        debug_assert_eq!(ns.len(), 1, "facet points must be affinely independent");
        ns.into_iter().next().expect("one-dimensional normal space")
    };
    let offset = dot(&normal, points[0]);
    (normal, offset)
}

fn oriented_facet(verts: Vec<usize>, coords: &[RatVector], k: usize, interior: &[BigRational]) -> Facet {
    let pts: Vec<&RatVector> = verts.iter().map(|&i| &coords[i]).collect();
    let (mut normal, mut offset) = hyperplane(&pts, k);
    if dot(&normal, interior) > offset {
        normal = normal.into_iter().map(|x| -x).collect();
        offset = -offset;
    }
    Facet {
        verts,
        normal,
        offset,
    }
}

impl PolytopeHull {
    /// Placing triangulation in the given insertion order, without sorting.
    pub fn placing(points: Vec<RatVector>) -> PolytopeHull {
        assert!(!points.is_empty(), "hull of an empty point set");
        let ambient = points[0].len();
        assert!(
            points.iter().all(|p| p.len() == ambient),
            "points of mixed dimension"
        );

        // greedy affine basis in insertion order
        let mut basis = vec![0usize];
        let mut directions: Vec<RatVector> = Vec::new();
        for (i, p) in points.iter().enumerate().skip(1) {
            if directions.len() == ambient {
                break;
            }
            let mut trial = directions.clone();
            trial.push(sub(p, &points[0]));
            if linalg::rank(&trial) > directions.len() {
                directions = trial;
                basis.push(i);
            }
        }
        let k = directions.len();

        let frame = if k == ambient {
            Frame::Identity
        } else {
            let mut echelon = directions.clone();
            let pivots = linalg::rref(&mut echelon);
            let block: Vec<RatVector> = directions
                .iter()
                .map(|d| pivots.iter().map(|&p| d[p].clone()).collect())
                .collect();
            let block_inv = invert(&block);
            Frame::Affine {
                origin: points[0].clone(),
                pivots,
                block_inv,
                directions: directions.clone(),
            }
        };
        let coords: Vec<RatVector> = points.iter().map(|p| frame.chart(p)).collect();

        let mut triangulation = vec![basis.clone()];
        let mut facets: Vec<Facet> = Vec::new();
        if k > 0 {
            let n = BigRational::from_integer((k as i64 + 1).into());
            let interior: RatVector = (0..k)
                .map(|j| basis.iter().map(|&i| coords[i][j].clone()).sum::<BigRational>() / &n)
                .collect();
            for skip in 0..=k {
                let verts: Vec<usize> = basis
                    .iter()
                    .enumerate()
                    .filter(|&(j, _)| j != skip)
                    .map(|(_, &i)| i)
                    .collect();
                facets.push(oriented_facet(verts, &coords, k, &interior));
            }
            for p in 0..points.len() {
                if basis.contains(&p) {
                    continue;
                }
                let (visible, hidden): (Vec<Facet>, Vec<Facet>) = facets
                    .into_iter()
                    .partition(|f| dot(&f.normal, &coords[p]) > f.offset);
                if visible.is_empty() {
                    facets = hidden;
                    continue;
                }
                let mut ridges: HashMap<Vec<usize>, usize> = HashMap::new();
                for f in &visible {
                    let mut simplex = f.verts.clone();
                    simplex.push(p);
                    triangulation.push(simplex);
                    for skip in 0..k {
                        let ridge: Vec<usize> = f
                            .verts
                            .iter()
                            .enumerate()
                            .filter(|&(j, _)| j != skip)
                            .map(|(_, &i)| i)
                            .collect();
                        *ridges.entry(ridge).or_default() += 1;
                    }
                }
                facets = hidden;
                let mut horizon: Vec<Vec<usize>> = ridges
                    .into_iter()
                    .filter(|&(_, c)| c == 1)
                    .map(|(r, _)| r)
                    .collect();
                horizon.sort();
                for mut ridge in horizon {
                    ridge.push(p);
                    ridge.sort();
                    facets.push(oriented_facet(ridge, &coords, k, &interior));
                }
            }
        }

        let mut vertices = Vec::new();
        let mut used: Vec<usize> = triangulation.iter().flatten().copied().collect();
        used.sort();
        used.dedup();
        for &i in &used {
            let tight: Vec<RatVector> = facets
                .iter()
                .filter(|f| dot(&f.normal, &coords[i]) == f.offset)
                .map(|f| f.normal.clone())
                .collect();
            if linalg::rank(&tight) == k {
                vertices.push(points[i].clone());
            }
        }

        let mut facet_inequalities: Vec<Inequality> = facets
            .iter()
            .map(|f| normalize(frame.lift(ambient, &f.normal, &f.offset)))
            .collect();
        facet_inequalities.sort();
        facet_inequalities.dedup();

        PolytopeHull {
            equations: frame.equations(ambient),
            points,
            vertices,
            dim: k,
            facet_inequalities,
            triangulation,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.points[0].len()
    }

    /// Exact membership test against the equations and facet inequalities.
    pub fn contains(&self, x: &[BigRational]) -> bool {
        self.equations.iter().all(|(e, c)| &dot(e, x) == c)
            && self.facet_inequalities.iter().all(|(n, c)| &dot(n, x) <= c)
    }

    /// Sum of `|det|` over the simplices: `dim! · volume` in the units of the
    /// ambient coordinates. `None` unless the hull is full-dimensional.
    pub fn lattice_volume(&self) -> Option<BigRational> {
        let d = self.ambient_dim();
        if self.dim != d {
            return None;
        }
        if d == 0 {
            return Some(BigRational::one());
        }
        Some(
            self.triangulation
                .iter()
                .map(|s| {
                    let rows: Vec<RatVector> = s[1..]
                        .iter()
                        .map(|&i| sub(&self.points[i], &self.points[s[0]]))
                        .collect();
                    linalg::determinant(&rows).abs()
                })
                .sum(),
        )
    }
}

fn normalize((normal, offset): Inequality) -> Inequality {
    let prim = linalg::primitive(&normal);
    // scale factor: prim = normal * t for some positive rational t
    let (i, nz) = normal
        .iter()
        .enumerate()
        .find(|(_, x)| !x.is_zero())
        .expect("nonzero facet normal");
    let t = BigRational::from_integer(prim[i].clone()) / nz;
    (linalg::to_rational(&prim), offset * t)
}

fn invert(m: &[RatVector]) -> Vec<RatVector> {
    let n = m.len();
    let mut aug: Vec<RatVector> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| {
                if i == j {
                    BigRational::one()
                } else {
                    BigRational::zero()
                }
            }));
            r
        })
        .collect();
    linalg::rref(&mut aug);
    aug.into_iter().map(|r| r[n..].to_vec()).collect()
}
