//! Mode-specific determinant and rank algorithms.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::matrix::Matrix;
use crate::scalar::{Exact, Float, Scalar};

/// Float pivots below this magnitude are structural zeros.
pub const PIVOT_FLOOR: f64 = 1e-300;

/// Exact determinant by fraction-free (Bareiss) elimination.
///
/// Each row is first scaled by the lcm of its denominators so elimination
/// runs over integers; the product of those scales is divided out at the end.
pub fn bareiss_determinant(m: &Matrix<Exact>) -> Exact {
    let n = m.rows();
    if n == 0 {
        return Exact::one();
    }
    let mut scale = BigInt::one();
    let mut a: Vec<Vec<BigInt>> = (0..n)
        .map(|i| {
            let row = m.row(i);
            let l = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            scale *= &l;
            row.iter().map(|x| x.numer() * (&l / x.denom())).collect()
        })
        .collect();

    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    negate = !negate;
                }
                None => return Exact::zero(),
            }
        }
        let (top, bottom) = a.split_at_mut(k + 1);
        let pivot_row = &top[k];
        let pivot = &pivot_row[k];
        for row in bottom.iter_mut() {
            for j in k + 1..n {
                let v = &row[j] * pivot - &row[k] * &pivot_row[j];
                // Sylvester's identity guarantees the division is exact.
                row[j] = v / &prev;
            }
            row[k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    let det = if negate { -det } else { det };
    Exact::from_ratio(BigRational::new(det, scale))
}

/// Rank by Gaussian elimination over the rationals.
pub fn exact_rank(m: &Matrix<Exact>) -> usize {
    let (rows, cols) = (m.rows(), m.cols());
    let mut a: Vec<Vec<BigRational>> = (0..rows)
        .map(|i| m.row(i).iter().map(|x| x.as_ratio().clone()).collect())
        .collect();
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        let (top, bottom) = a.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        for row in bottom.iter_mut() {
            if row[c].is_zero() {
                continue;
            }
            let factor = &row[c] / &pivot_row[c];
            for j in c..cols {
                let d = &factor * &pivot_row[j];
                row[j] -= d;
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

/// Float determinant by Gaussian elimination with partial pivoting.
pub fn lu_determinant(m: &Matrix<Float>) -> Float {
    let n = m.rows();
    let mut a: Vec<f64> = m.entries().iter().map(|x| x.get()).collect();
    let mut det = 1.0f64;
    for k in 0..n {
        let (p, max) = (k..n)
            .map(|i| (i, a[i * n + k].abs()))
            .fold(
                (k, -1.0),
                |best, cur| if cur.1 > best.1 { cur } else { best },
            );
        if max < PIVOT_FLOOR {
            return Float::zero();
        }
        if p != k {
            for j in 0..n {
                a.swap(k * n + j, p * n + j);
            }
            det = -det;
        }
        let pivot = a[k * n + k];
        det *= pivot;
        for i in k + 1..n {
            let f = a[i * n + k] / pivot;
            if f == 0.0 {
                continue;
            }
            for j in k + 1..n {
                a[i * n + j] -= f * a[k * n + j];
            }
        }
    }
    Float::new(det).unwrap_or_else(|_| Float::zero())
}

/// Numerical rank of `A` read off the pivots of its Gram matrix.
///
/// Elimination on `AᵗA` uses complete pivoting; a pivot counts when its
/// magnitude exceeds `max(n, k) * 2^-52` times the largest pivot.
pub fn float_rank(m: &Matrix<Float>) -> usize {
    let k = m.cols();
    let g = m.gram();
    let mut a: Vec<f64> = g.as_matrix().entries().iter().map(|x| x.get()).collect();
    let tol_factor = m.rows().max(k) as f64 * f64::EPSILON;
    let mut largest = 0.0f64;
    let mut rank = 0;
    let mut row_perm: Vec<usize> = (0..k).collect();
    let mut col_perm: Vec<usize> = (0..k).collect();
    for step in 0..k {
        let mut best = (step, step, 0.0f64);
        for i in step..k {
            for j in step..k {
                let v = a[row_perm[i] * k + col_perm[j]].abs();
                if v > best.2 {
                    best = (i, j, v);
                }
            }
        }
        largest = largest.max(best.2);
        if best.2 == 0.0 || best.2 <= tol_factor * largest {
            break;
        }
        row_perm.swap(step, best.0);
        col_perm.swap(step, best.1);
        let (pr, pc) = (row_perm[step], col_perm[step]);
        let pivot = a[pr * k + pc];
        for &r in &row_perm[step + 1..] {
            let f = a[r * k + pc] / pivot;
            for &c in &col_perm[step..] {
                a[r * k + c] -= f * a[pr * k + c];
            }
        }
        rank += 1;
    }
    rank
}
