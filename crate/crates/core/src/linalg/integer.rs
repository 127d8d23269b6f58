//! Integer linear systems through the Smith normal form.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::matrix::Matrix;

/// `u · m · v = d` with `u`, `v` unimodular and `d` diagonal, each diagonal
/// entry dividing the next.
#[derive(Clone, Debug)]
pub struct Smith {
    pub u: Matrix<BigInt>,
    pub d: Matrix<BigInt>,
    pub v: Matrix<BigInt>,
    pub rank: usize,
}

type Rows = Vec<Vec<BigInt>>;

fn identity_rows(n: usize) -> Rows {
    (0..n)
        .map(|i| (0..n).map(|j| BigInt::from(u8::from(i == j))).collect())
        .collect()
}

fn to_matrix(rows: Rows, cols: usize) -> Matrix<BigInt> {
    if rows.is_empty() {
        Matrix::zero(0, cols)
    } else {
        Matrix::from_rows(rows)
    }
}

/// `row[dst] -= q * row[src]` on every matrix given.
fn row_axpy(a: &mut Rows, dst: usize, src: usize, q: &BigInt) {
    for j in 0..a[dst].len() {
        let delta = q * &a[src][j];
        a[dst][j] -= delta;
    }
}

fn col_axpy(a: &mut Rows, dst: usize, src: usize, q: &BigInt) {
    for row in a.iter_mut() {
        let delta = q * &row[src];
        row[dst] -= delta;
    }
}

fn col_swap(a: &mut Rows, i: usize, j: usize) {
    for row in a.iter_mut() {
        row.swap(i, j);
    }
}

pub fn smith(m: &Matrix<BigInt>) -> Smith {
    let (rows, cols) = (m.rows(), m.cols());
    let mut d = m.to_rows();
    let mut u = identity_rows(rows);
    let mut v = identity_rows(cols);
    let mut t = 0;
    while t < rows.min(cols) {
        // Smallest nonzero entry of the trailing block as pivot.
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if !d[i][j].is_zero()
                    && best.map_or(true, |(bi, bj)| d[i][j].abs() < d[bi][bj].abs())
                {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        d.swap(t, pi);
        u.swap(t, pi);
        col_swap(&mut d, t, pj);
        col_swap(&mut v, t, pj);

        loop {
            let mut changed = false;
            for i in t + 1..rows {
                if d[i][t].is_zero() {
                    continue;
                }
                let q = d[i][t].div_floor(&d[t][t]);
                row_axpy(&mut d, i, t, &q);
                row_axpy(&mut u, i, t, &q);
                if !d[i][t].is_zero() {
                    d.swap(t, i);
                    u.swap(t, i);
                    changed = true;
                }
            }
            for j in t + 1..cols {
                if d[t][j].is_zero() {
                    continue;
                }
                let q = d[t][j].div_floor(&d[t][t]);
                col_axpy(&mut d, j, t, &q);
                col_axpy(&mut v, j, t, &q);
                if !d[t][j].is_zero() {
                    col_swap(&mut d, t, j);
                    col_swap(&mut v, t, j);
                    changed = true;
                }
            }
            if changed {
                continue;
            }
            // Divisibility: fold an offending row into the pivot row.
            let offending = (t + 1..rows)
                .find(|&i| (t + 1..cols).any(|j| !d[i][j].is_multiple_of(&d[t][t])));
            match offending {
                Some(i) => {
                    let one = BigInt::from(-1);
                    row_axpy(&mut d, t, i, &one);
                    row_axpy(&mut u, t, i, &one);
                }
                None => break,
            }
        }
        if d[t][t].is_negative() {
            for x in d[t].iter_mut() {
                *x = -&*x;
            }
            for x in u[t].iter_mut() {
                *x = -&*x;
            }
        }
        t += 1;
    }
    Smith {
        u: to_matrix(u, rows),
        d: to_matrix(d, cols),
        v: to_matrix(v, cols),
        rank: t,
    }
}

/// A solution of `m · x = b` (textbook product) over the integers, or the
/// row of `u · b` and the column of `b` that cannot be matched.
pub fn solve(m: &Matrix<BigInt>, b: &Matrix<BigInt>) -> Result<Matrix<BigInt>, (usize, usize)> {
    assert_eq!(m.rows(), b.rows(), "solve: row mismatch");
    let s = smith(m);
    let ub = s.u.product(b);
    let mut y = Matrix::zero(m.cols(), b.cols());
    for c in 0..b.cols() {
        for i in 0..m.rows() {
            let rhs = ub.get(i, c);
            if i < s.rank {
                let (q, r) = rhs.div_rem(s.d.get(i, i));
                if !r.is_zero() {
                    return Err((i, c));
                }
                y.set(i, c, q);
            } else if !rhs.is_zero() {
                return Err((i, c));
            }
        }
    }
    Ok(s.v.product(&y))
}

pub fn is_unimodular(m: &Matrix<BigInt>) -> bool {
    if !m.is_square() {
        return false;
    }
    let s = smith(m);
    s.rank == m.rows() && (0..s.rank).all(|i| s.d.get(i, i).is_one())
}

#[cfg(test)]
mod tests {
    use proptest::prelude::*;

    use super::*;

    fn z(rows: &[&[i64]]) -> Matrix<BigInt> {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
    }

    #[test]
    fn divisibility() {
        assert_eq!(solve(&z(&[&[2]]), &z(&[&[0]])), Ok(z(&[&[0]])));
        assert_eq!(solve(&z(&[&[2]]), &z(&[&[1]])), Err((0, 0)));
        let m = z(&[&[2, 4], &[6, 8]]);
        let s = smith(&m);
        assert_eq!(s.u.product(&m).product(&s.v), s.d);
        assert_eq!(s.d, z(&[&[2, 0], &[0, 4]]));
    }

    proptest! {
        #[test]
        fn smith_is_a_factorization(
            rows in 0usize..4, cols in 0usize..4,
            entries in proptest::collection::vec(-6i64..7, 16)
        ) {
            let m = Matrix::from_fn(rows, cols, |r, c| BigInt::from(entries[r * 4 + c]));
            let s = smith(&m);
            prop_assert_eq!(s.u.product(&m).product(&s.v), s.d.clone());
            prop_assert!(is_unimodular(&s.u) && is_unimodular(&s.v));
            for i in 0..rows {
                for j in 0..cols {
                    if i != j {
                        prop_assert!(s.d.get(i, j).is_zero());
                    }
                }
            }
            for i in 1..s.rank {
                prop_assert!(s.d.get(i, i).is_multiple_of(s.d.get(i - 1, i - 1)));
            }
        }

        #[test]
        fn solutions_solve(
            entries in proptest::collection::vec(-4i64..5, 9),
            xs in proptest::collection::vec(-4i64..5, 3)
        ) {
            let m = Matrix::from_fn(3, 3, |r, c| BigInt::from(entries[r * 3 + c]));
            let x = Matrix::from_fn(3, 1, |r, _| BigInt::from(xs[r]));
            let b = m.product(&x);
            let sol = solve(&m, &b).unwrap();
            prop_assert_eq!(m.product(&sol), b);
        }
    }
}
