//! Small dense rational linear algebra used by the geometry code.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::lattice::IntVector;

pub type Rational = BigRational;
pub type RatVector = Vec<BigRational>;

pub fn to_rational(v: &[BigInt]) -> RatVector {
    v.iter().cloned().map(BigRational::from_integer).collect()
}

pub fn dot(a: &[BigRational], b: &[BigRational]) -> BigRational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn dot_int(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn sub(a: &[BigRational], b: &[BigRational]) -> RatVector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn sub_int(a: &[BigInt], b: &[BigInt]) -> IntVector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn add_int(a: &[BigInt], b: &[BigInt]) -> IntVector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref(rows: &mut [RatVector]) -> Vec<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        for x in rows[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                let pivot_row = rows[r].clone();
                for (x, y) in rows[i].iter_mut().zip(&pivot_row) {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(rows: &[RatVector]) -> usize {
    let mut m = rows.to_vec();
    rref(&mut m).len()
}

pub fn rank_int(rows: &[IntVector]) -> usize {
    let q: Vec<RatVector> = rows.iter().map(|r| to_rational(r)).collect();
    rank(&q)
}

/// Basis of `{x : rows · x = 0}` for a matrix with `ncols` columns.
pub fn nullspace(rows: &[RatVector], ncols: usize) -> Vec<RatVector> {
    let mut m = rows.to_vec();
    let pivots = rref(&mut m);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut x = vec![BigRational::zero(); ncols];
            x[f] = BigRational::one();
            for (r, &p) in pivots.iter().enumerate() {
                x[p] = -m[r][f].clone();
            }
            x
        })
        .collect()
}

/// Solves the square system `m x = b`; `None` when `m` is singular.
pub fn solve(m: &[RatVector], b: &[BigRational]) -> Option<RatVector> {
    let n = m.len();
    let mut aug: Vec<RatVector> = m
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.len() != n || pivots.iter().enumerate().any(|(i, &p)| p != i) {
        return None;
    }
    Some(aug.into_iter().map(|mut r| r.pop().expect("augmented column")).collect())
}

pub fn determinant(m: &[RatVector]) -> BigRational {
    let n = m.len();
    let mut a = m.to_vec();
    let mut det = BigRational::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else {
            return BigRational::zero();
        };
        if p != c {
            a.swap(p, c);
            det = -det;
        }
        det *= &a[c][c];
        let inv = a[c][c].recip();
        for i in c + 1..n {
            if a[i][c].is_zero() {
                continue;
            }
            let f = &a[i][c] * &inv;
            let pivot_row = a[c].clone();
            for (x, y) in a[i].iter_mut().zip(&pivot_row) {
                *x -= &f * y;
            }
        }
    }
    det
}

/// Scales a nonzero rational vector to the primitive integer vector with the
/// same direction.
pub fn primitive(v: &[BigRational]) -> IntVector {
    let lcm = v
        .iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: IntVector = v.iter().map(|x| (x * BigRational::from_integer(lcm.clone())).to_integer()).collect();
    primitive_int(&ints)
}

pub fn primitive_int(v: &[BigInt]) -> IntVector {
    let g = v.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return v.to_vec();
    }
    v.iter().map(|x| x / &g).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: &[i64]) -> RatVector {
        v.iter().map(|&x| BigRational::from_integer(x.into())).collect()
    }

    #[test]
    fn nullspace_of_plane() {
        let ns = nullspace(&[q(&[1, 1, 0]), q(&[0, 1, 1])], 3);
        assert_eq!(ns.len(), 1);
        assert_eq!(primitive(&ns[0]), vec![BigInt::from(1), BigInt::from(-1), BigInt::from(1)]);
    }

    #[test]
    fn determinant_matches_integer_bareiss() {
        let rows = [q(&[2, 1, 3]), q(&[0, 4, 1]), q(&[5, 2, 2])];
        let int = crate::lattice::IntMatrix::from_i64_rows(&[&[2, 1, 3], &[0, 4, 1], &[5, 2, 2]]);
        assert_eq!(determinant(&rows), BigRational::from_integer(int.determinant()));
    }

    #[test]
    fn solve_singular_is_none() {
        assert!(solve(&[q(&[1, 2]), q(&[2, 4])], &q(&[1, 1])).is_none());
        assert_eq!(solve(&[q(&[2, 0]), q(&[0, 4])], &q(&[1, 1])).unwrap()[1], BigRational::new(1.into(), 4.into()));
    }
}
