//! Independent brute-force oracles and shared fixtures for the integration
//! tests. The oracles never call the library's geometry, lattice or
//! semigroup code; the library is used only to build fixtures.
#![allow(dead_code, clippy::needless_range_loop)]

use std::collections::HashMap;

use itertools::Itertools;

use gkz_rank::family::{build_noncm_example, FamilySpec};
use gkz_rank::polytope::{validate, Configuration};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type V = Vec<BigInt>;

pub fn iv(x: &[i64]) -> V {
    x.iter().map(|&v| BigInt::from(v)).collect()
}

pub fn cols(rows: &[&[i64]]) -> Vec<V> {
    rows.iter().map(|c| iv(c)).collect()
}

pub fn config(rows: &[&[i64]]) -> Configuration {
    validate(cols(rows)).expect("fixture satisfies the standing hypotheses")
}

fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Determinant by cofactor expansion along the first row.
pub fn det_laplace(m: &[V]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    if n == 1 {
        return m[0][0].clone();
    }
    let mut total = BigInt::zero();
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<V> = m[1..]
            .iter()
            .map(|r| r.iter().enumerate().filter(|(k, _)| *k != j).map(|(_, x)| x.clone()).collect())
            .collect();
        let term = &m[0][j] * det_laplace(&minor);
        if j % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

/// Fraction-free (Bareiss) elimination: the determinant of a square matrix.
pub fn det_bareiss(m: &[V]) -> BigInt {
    let n = m.len();
    let mut a: Vec<V> = m.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(i, k);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    if n == 0 {
        BigInt::one()
    } else {
        sign * &a[n - 1][n - 1]
    }
}

/// Rank over Q by Gaussian elimination on rationals.
pub fn rank_q(rows: &[V]) -> usize {
    let mut m: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|r| r.iter().map(|x| BigRational::from_integer(x.clone())).collect())
        .collect();
    let ncols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..ncols {
        let Some(p) = (rank..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        for i in 0..m.len() {
            if i != rank && !m[i][c].is_zero() {
                let f = &m[i][c] / &m[rank][c];
                for k in 0..ncols {
                    let t = &f * &m[rank][k];
                    m[i][k] -= t;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Solves `Σ λ_i g_i = x` for linearly independent `g_i` spanning Q^d.
pub fn solve_q(generators: &[V], x: &[BigInt]) -> Vec<BigRational> {
    let d = x.len();
    let mut m: Vec<Vec<BigRational>> = (0..d)
        .map(|r| {
            let mut row: Vec<BigRational> =
                generators.iter().map(|g| BigRational::from_integer(g[r].clone())).collect();
            row.push(BigRational::from_integer(x[r].clone()));
            row
        })
        .collect();
    let n = generators.len();
    for c in 0..n {
        let p = (c..d).find(|&i| !m[i][c].is_zero()).expect("independent generators");
        m.swap(c, p);
        let piv = m[c][c].clone();
        for k in 0..=n {
            m[c][k] = &m[c][k] / &piv;
        }
        for i in 0..d {
            if i != c && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for k in 0..=n {
                    let t = &f * &m[c][k];
                    m[i][k] -= t;
                }
            }
        }
    }
    (0..n).map(|i| m[i][n].clone()).collect()
}

/// Normal of the hyperplane through the origin spanned by `d − 1` vectors,
/// by signed maximal minors.
fn cross(vs: &[V], d: usize) -> V {
    (0..d)
        .map(|j| {
            let minor: Vec<V> = vs
                .iter()
                .map(|v| v.iter().enumerate().filter(|(k, _)| *k != j).map(|(_, x)| x.clone()).collect())
                .collect();
            let m = det_laplace(&minor);
            if j % 2 == 0 {
                m
            } else {
                -m
            }
        })
        .collect()
}

/// A full-dimensional polytope as `{x : n·x ≤ c}`, found by testing every
/// hyperplane through `d` of the points.
pub struct NaiveHull {
    pub facets: Vec<(V, BigInt)>,
}

impl NaiveHull {
    pub fn new(points: &[V]) -> NaiveHull {
        let d = points[0].len();
        let mut facets: Vec<(V, BigInt)> = Vec::new();
        for s in (0..points.len()).combinations(d) {
            let p0 = &points[s[0]];
            let diffs: Vec<V> = s[1..].iter().map(|&i| points[i].iter().zip(p0).map(|(a, b)| a - b).collect()).collect();
            let n = cross(&diffs, d);
            if n.iter().all(Zero::is_zero) {
                continue;
            }
            let c = dot(&n, p0);
            let le = points.iter().all(|p| dot(&n, p) <= c);
            let ge = points.iter().all(|p| dot(&n, p) >= c);
            let facet = if le {
                (n, c)
            } else if ge {
                (n.iter().map(|x| -x).collect(), -c)
            } else {
                continue;
            };
            let g = facet.0.iter().chain(std::iter::once(&facet.1)).fold(BigInt::zero(), |g, x| num_integer::Integer::gcd(&g, x));
            let facet = (facet.0.iter().map(|x| x / &g).collect::<V>(), &facet.1 / &g);
            if !facets.contains(&facet) {
                facets.push(facet);
            }
        }
        NaiveHull { facets }
    }

    /// Membership in `k` times the polytope.
    pub fn contains_scaled(&self, x: &[BigInt], k: i64) -> bool {
        self.facets.iter().all(|(n, c)| dot(n, x) <= c * BigInt::from(k))
    }
}

fn box_points(lo: &[i64], hi: &[i64]) -> Vec<V> {
    let mut out = vec![vec![]];
    for (l, h) in lo.iter().zip(hi) {
        out = out
            .into_iter()
            .flat_map(|p: Vec<BigInt>| {
                (*l..=*h).map(move |x| {
                    let mut q = p.clone();
                    q.push(BigInt::from(x));
                    q
                })
            })
            .collect();
    }
    out
}

fn to_i64(x: &BigInt) -> i64 {
    i64::try_from(x).expect("small fixture")
}

/// Normalized volume of `conv(0, A)` from its Ehrhart polynomial: the `d`-th
/// finite difference of `k ↦ #(kΔ ∩ Z^d)` at zero equals `d! · vol`.
pub fn ehrhart_volume(columns: &[V]) -> BigInt {
    let d = columns[0].len();
    let mut points = vec![vec![BigInt::zero(); d]];
    points.extend(columns.iter().cloned());
    let hull = NaiveHull::new(&points);
    let lo: Vec<i64> = (0..d).map(|r| points.iter().map(|p| to_i64(&p[r])).min().unwrap()).collect();
    let hi: Vec<i64> = (0..d).map(|r| points.iter().map(|p| to_i64(&p[r])).max().unwrap()).collect();
    let counts: Vec<BigInt> = (0..=d as i64)
        .map(|k| {
            let l: Vec<i64> = lo.iter().map(|x| x * k).collect();
            let h: Vec<i64> = hi.iter().map(|x| x * k).collect();
            BigInt::from(box_points(&l, &h).iter().filter(|p| hull.contains_scaled(p, k)).count())
        })
        .collect();
    let mut total = BigInt::zero();
    let mut binom = BigInt::one();
    for i in 0..=d {
        let term = &binom * &counts[d - i];
        if i % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
        binom = binom * BigInt::from(d - i) / BigInt::from(i + 1);
    }
    total
}

/// The cone `R≥0 A` through its facet normals, found by brute force over
/// `(d − 1)`-subsets of columns.
pub struct NaiveCone {
    pub columns: Vec<V>,
    pub normals: Vec<V>,
    pub positive: V,
}

impl NaiveCone {
    pub fn new(columns: &[V]) -> NaiveCone {
        let d = columns[0].len();
        let mut normals: Vec<V> = Vec::new();
        for s in (0..columns.len()).combinations(d - 1) {
            let vs: Vec<V> = s.iter().map(|&i| columns[i].clone()).collect();
            let n = cross(&vs, d);
            if n.iter().all(Zero::is_zero) {
                continue;
            }
            let n = if columns.iter().all(|c| dot(&n, c) >= BigInt::zero()) {
                n
            } else if columns.iter().all(|c| dot(&n, c) <= BigInt::zero()) {
                n.iter().map(|x| -x).collect()
            } else {
                continue;
            };
            let g = n.iter().fold(BigInt::zero(), |g, x| num_integer::Integer::gcd(&g, x));
            let n: V = n.iter().map(|x| x / &g).collect();
            if !normals.contains(&n) {
                normals.push(n);
            }
        }
        let mut positive = vec![BigInt::zero(); d];
        for n in &normals {
            for (p, x) in positive.iter_mut().zip(n) {
                *p += x;
            }
        }
        NaiveCone {
            columns: columns.to_vec(),
            normals,
            positive,
        }
    }

    pub fn contains(&self, x: &[BigInt]) -> bool {
        self.normals.iter().all(|n| dot(n, x) >= BigInt::zero())
    }

    pub fn level(&self, x: &[BigInt]) -> BigInt {
        dot(&self.positive, x)
    }
}

/// Membership in `NA` by exhaustive search over non-negative combinations,
/// bounded by a functional positive on every column.
pub struct NaiveSemigroup {
    cone: NaiveCone,
    memo: HashMap<V, bool>,
}

impl NaiveSemigroup {
    pub fn new(columns: &[V]) -> NaiveSemigroup {
        NaiveSemigroup {
            cone: NaiveCone::new(columns),
            memo: HashMap::new(),
        }
    }

    pub fn cone(&self) -> &NaiveCone {
        &self.cone
    }

    pub fn contains(&mut self, v: &[BigInt]) -> bool {
        if v.iter().all(Zero::is_zero) {
            return true;
        }
        if !self.cone.level(v).is_positive() {
            return false;
        }
        if let Some(&r) = self.memo.get(v) {
            return r;
        }
        let columns = self.cone.columns.clone();
        let r = columns.iter().any(|c| {
            let w: V = v.iter().zip(c).map(|(a, b)| a - b).collect();
            self.contains(&w)
        });
        self.memo.insert(v.to_vec(), r);
        r
    }
}

/// Lower and upper corners of the zonotope `Σ [0,1] a_j`.
pub fn zonotope_box(columns: &[V]) -> (Vec<i64>, Vec<i64>) {
    let d = columns[0].len();
    let lo = (0..d).map(|r| columns.iter().map(|c| to_i64(&c[r]).min(0)).sum()).collect();
    let hi = (0..d).map(|r| columns.iter().map(|c| to_i64(&c[r]).max(0)).sum()).collect();
    (lo, hi)
}

/// Irreducible lattice points of the cone, searched in the zonotope box.
pub fn brute_hilbert_basis(columns: &[V]) -> Vec<V> {
    let cone = NaiveCone::new(columns);
    let (lo, hi) = zonotope_box(columns);
    let pts: Vec<V> = box_points(&lo, &hi)
        .into_iter()
        .filter(|p| cone.contains(p) && !p.iter().all(Zero::is_zero))
        .collect();
    let mut out: Vec<V> = pts
        .iter()
        .filter(|x| {
            !pts.iter().any(|y| {
                let z: V = x.iter().zip(y.iter()).map(|(a, b)| a - b).collect();
                y != *x && !z.iter().all(Zero::is_zero) && cone.contains(&z)
            })
        })
        .cloned()
        .collect();
    out.sort();
    out
}

/// Lattice points with coordinates in `[0,1)^d` relative to `generators`.
pub fn brute_parallelepiped(generators: &[V]) -> Vec<V> {
    let (lo, hi) = zonotope_box(generators);
    let mut out: Vec<V> = box_points(&lo, &hi)
        .into_iter()
        .filter(|p| {
            solve_q(generators, p)
                .iter()
                .all(|l| !l.is_negative() && l < &BigRational::one())
        })
        .collect();
    out.sort();
    out
}

/// Lattice points of the cone in a box that are not in `NA`.
pub fn brute_holes(columns: &[V], lo: &[i64], hi: &[i64]) -> Vec<V> {
    let mut s = NaiveSemigroup::new(columns);
    let mut out: Vec<V> = box_points(lo, hi)
        .into_iter()
        .filter(|p| s.cone().contains(p) && !s.contains(p))
        .collect();
    out.sort();
    out
}

pub fn all_box_points(lo: &[i64], hi: &[i64]) -> Vec<V> {
    box_points(lo, hi)
}

/// Every configuration in dimension at most three used across the tests.
pub fn small_fixtures() -> Vec<(String, Configuration)> {
    let mut out = vec![
        ("unit simplex 2".to_string(), config(&[&[1, 0], &[0, 1]])),
        ("unit simplex 3".to_string(), config(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]])),
        ("rational normal curve".to_string(), config(&[&[1, 0], &[1, 1], &[1, 2], &[1, 3]])),
        ("gap curve 0,1,3,4".to_string(), config(&[&[1, 0], &[1, 1], &[1, 3], &[1, 4]])),
        ("square cone".to_string(), config(&[&[1, 0, 0], &[1, 1, 0], &[1, 0, 1], &[1, 1, 1]])),
        ("lopsided triangle".to_string(), config(&[&[1, 0, 0], &[1, 2, 0], &[1, 0, 3], &[1, 1, 1]])),
    ];
    for n in 4..=6 {
        out.push((format!("plane example n={n}"), build_noncm_example(2, n).unwrap()));
    }
    out.push(("plane example pyramid".to_string(), build_noncm_example(3, 5).unwrap()));
    for b in 2..=4 {
        out.push((format!("A_{{3,{b}}}"), FamilySpec::new(3, b).unwrap().build()));
    }
    out
}

pub fn unit_simplex(d: usize) -> Configuration {
    validate(
        (0..d)
            .map(|k| {
                let mut v = vec![BigInt::zero(); d];
                v[k] = BigInt::one();
                v
            })
            .collect(),
    )
    .unwrap()
}
