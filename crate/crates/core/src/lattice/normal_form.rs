//! Hermite and Smith normal forms with explicit unimodular transforms.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::IntMatrix;

/// Extended gcd: returns `(g, x, y)` with `x*a + y*b = g` and `g >= 0`.
pub fn extended_gcd(a: &BigInt, b: &BigInt) -> (BigInt, BigInt, BigInt) {
    let (mut old_r, mut r) = (a.clone(), b.clone());
    let (mut old_s, mut s) = (BigInt::one(), BigInt::zero());
    let (mut old_t, mut t) = (BigInt::zero(), BigInt::one());
    while !r.is_zero() {
        let q = &old_r / &r;
        let next_r = &old_r - &q * &r;
        old_r = std::mem::replace(&mut r, next_r);
        let next_s = &old_s - &q * &s;
        old_s = std::mem::replace(&mut s, next_s);
        let next_t = &old_t - &q * &t;
        old_t = std::mem::replace(&mut t, next_t);
    }
    if old_r.is_negative() {
        (-old_r, -old_s, -old_t)
    } else {
        (old_r, old_s, old_t)
    }
}

/// Row-style Hermite normal form.
///
/// Returns `(h, u)` with `u` unimodular and `h = u * m` in echelon form: pivots
/// are positive, and entries above a pivot lie in `[0, pivot)`. Zero rows
/// collect at the bottom. The column-style form is obtained by transposing.
pub fn hermite_normal_form(m: &IntMatrix) -> (IntMatrix, IntMatrix) {
    let rows = m.nrows();
    let mut h = m.clone();
    let mut u = IntMatrix::identity(rows);
    let mut pivot_row = 0;
    for col in 0..m.ncols() {
        if pivot_row == rows {
            break;
        }
        for i in pivot_row + 1..rows {
            if h[(i, col)].is_zero() {
                continue;
            }
            let a = h[(pivot_row, col)].clone();
            let b = h[(i, col)].clone();
            let (g, x, y) = extended_gcd(&a, &b);
            let c = -(&b / &g);
            let d = &a / &g;
            h.combine_rows(pivot_row, i, [&x, &y, &c, &d]);
            u.combine_rows(pivot_row, i, [&x, &y, &c, &d]);
        }
        if h[(pivot_row, col)].is_zero() {
            continue;
        }
        if h[(pivot_row, col)].is_negative() {
            h.negate_row(pivot_row);
            u.negate_row(pivot_row);
        }
        let p = h[(pivot_row, col)].clone();
        for i in 0..pivot_row {
            let q = h[(i, col)].div_floor(&p);
            if !q.is_zero() {
                let k = -q;
                h.add_row_multiple(i, pivot_row, &k);
                u.add_row_multiple(i, pivot_row, &k);
            }
        }
        pivot_row += 1;
    }
    (h, u)
}

/// Smith normal form.
///
/// Returns `(s, u, v)` with `u`, `v` unimodular, `s = u * m * v` diagonal,
/// nonnegative diagonal entries, and each nonzero entry dividing the next.
pub fn smith_normal_form(m: &IntMatrix) -> (IntMatrix, IntMatrix, IntMatrix) {
    let (rows, cols) = (m.nrows(), m.ncols());
    let mut s = m.clone();
    let mut u = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);
    for t in 0..rows.min(cols) {
        loop {
            // smallest nonzero entry of the trailing block becomes the pivot
            let mut best: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    let x = &s[(i, j)];
                    if x.is_zero() {
                        continue;
                    }
                    if best.is_none_or(|(bi, bj)| x.abs() < s[(bi, bj)].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                return (s, u, v);
            };
            s.swap_rows(t, pi);
            u.swap_rows(t, pi);
            s.swap_cols(t, pj);
            v.swap_cols(t, pj);

            let mut clean = true;
            for i in t + 1..rows {
                let q = &s[(i, t)] / &s[(t, t)];
                if !q.is_zero() {
                    let k = -q;
                    s.add_row_multiple(i, t, &k);
                    u.add_row_multiple(i, t, &k);
                }
                clean &= s[(i, t)].is_zero();
            }
            for j in t + 1..cols {
                let q = &s[(t, j)] / &s[(t, t)];
                if !q.is_zero() {
                    let k = -q;
                    s.add_col_multiple(j, t, &k);
                    v.add_col_multiple(j, t, &k);
                }
                clean &= s[(t, j)].is_zero();
            }
            if !clean {
                continue;
            }
            let pivot = s[(t, t)].clone();
            let offender = (t + 1..rows).find(|&i| {
                (t + 1..cols).any(|j| !s[(i, j)].is_multiple_of(&pivot))
            });
            match offender {
                Some(i) => {
                    let one = BigInt::one();
                    s.add_row_multiple(t, i, &one);
                    u.add_row_multiple(t, i, &one);
                }
                None => break,
            }
        }
        if s[(t, t)].is_negative() {
            s.negate_row(t);
            u.negate_row(t);
        }
    }
    (s, u, v)
}

/// Invariant factors: the nonzero diagonal of the Smith normal form.
pub fn invariant_factors(m: &IntMatrix) -> Vec<BigInt> {
    let (s, _, _) = smith_normal_form(m);
    (0..s.nrows().min(s.ncols()))
        .map(|i| s[(i, i)].clone())
        .filter(|x| !x.is_zero())
        .collect()
}

/// Inverse of a unimodular matrix, exact over the integers.
pub fn unimodular_inverse(m: &IntMatrix) -> IntMatrix {
    let (h, u) = hermite_normal_form(m);
    assert_eq!(
        h,
        IntMatrix::identity(m.nrows()),
        "unimodular_inverse called on a non-unimodular matrix"
    );
    u
}
