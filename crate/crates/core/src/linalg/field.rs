//! Exact Gaussian elimination over a field.

use crate::matrix::Matrix;
use crate::rig::Field;

/// Reduced row echelon form and pivot columns.
pub fn rref<F: Field>(m: &Matrix<F>) -> (Matrix<F>, Vec<usize>) {
    let mut a = m.to_rows();
    let rows = m.rows();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..m.cols() {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][c].inv().expect("nonzero pivot");
        for x in a[r].iter_mut() {
            *x = inv.times(x);
        }
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let factor = a[i][c].clone();
                for j in 0..m.cols() {
                    let delta = factor.times(&a[r][j]);
                    a[i][j] = a[i][j].minus(&delta);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    let out = if rows == 0 {
        Matrix::zero(0, m.cols())
    } else {
        Matrix::from_rows(a)
    };
    (out, pivots)
}

pub fn rank<F: Field>(m: &Matrix<F>) -> usize {
    rref(m).1.len()
}

pub fn inverse<F: Field>(m: &Matrix<F>) -> Option<Matrix<F>> {
    if !m.is_square() {
        return None;
    }
    let n = m.rows();
    solve(m, &Matrix::identity(n)).ok()
}

/// A solution of `m · x = b` (textbook product), with free variables set to
/// zero; on failure, the row of the reduced system and the column of `b`
/// whose equation reads `0 = nonzero`.
pub fn solve<F: Field>(m: &Matrix<F>, b: &Matrix<F>) -> Result<Matrix<F>, (usize, usize)> {
    assert_eq!(m.rows(), b.rows(), "solve: row mismatch");
    let n = m.cols();
    let aug = m.hcat(b);
    let (red, pivots) = rref(&aug);
    if let Some(&p) = pivots.iter().find(|&&p| p >= n) {
        let row = pivots.iter().position(|&q| q == p).expect("pivot row");
        return Err((row, p - n));
    }
    let mut x = Matrix::zero(n, b.cols());
    for (row, &p) in pivots.iter().enumerate() {
        for c in 0..b.cols() {
            x.set(p, c, red.get(row, n + c).clone());
        }
    }
    Ok(x)
}

/// Columns spanning `{v : m · v = 0}`.
pub fn nullspace<F: Field>(m: &Matrix<F>) -> Matrix<F> {
    let (red, pivots) = rref(m);
    let n = m.cols();
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    let mut out = Matrix::zero(n, free.len());
    for (k, &f) in free.iter().enumerate() {
        out.set(f, k, F::one());
        for (row, &p) in pivots.iter().enumerate() {
            out.set(p, k, red.get(row, f).neg());
        }
    }
    out
}

/// `m = c · r` with `c` the pivot columns of `m` and `r` the nonzero rows of
/// its reduced echelon form.
pub fn full_rank_factorization<F: Field>(m: &Matrix<F>) -> (Matrix<F>, Matrix<F>) {
    let (red, pivots) = rref(m);
    let k = pivots.len();
    let c = Matrix::from_fn(m.rows(), k, |i, j| m.get(i, pivots[j]).clone());
    let r = red.submatrix(0..k, 0..m.cols());
    (c, r)
}
