//! Linear systems over each shipped rig.
//!
//! `solve_right(m, b)` looks for `i` with `i then m = b`; `solve_left(m, b)`
//! looks for `k` with `m then k = b`.

pub mod field;
pub mod integer;
pub mod search;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{dims, MatError};
use crate::matrix::Matrix;
use crate::rig::{Bool, Dual, Field, Gaussian, Gf2, Rig, WordMonoid, WordSum};
use crate::verdict::{Certificate, Verdict};

pub trait Solve: Rig {
    fn solve_right(m: &Matrix<Self>, b: &Matrix<Self>) -> Verdict<Matrix<Self>>;

    fn solve_left(m: &Matrix<Self>, b: &Matrix<Self>) -> Verdict<Matrix<Self>>;
}

/// [`Solve::solve_right`] with a dimension check.
pub fn solve_right<R: Solve>(m: &Matrix<R>, b: &Matrix<R>) -> Result<Verdict<Matrix<R>>, MatError> {
    if m.rows() != b.rows() {
        return Err(dims(
            "solve_right",
            format!("codomains {} and {} differ", m.rows(), b.rows()),
        ));
    }
    Ok(R::solve_right(m, b))
}

/// [`Solve::solve_left`] with a dimension check.
pub fn solve_left<R: Solve>(m: &Matrix<R>, b: &Matrix<R>) -> Result<Verdict<Matrix<R>>, MatError> {
    if m.cols() != b.cols() {
        return Err(dims(
            "solve_left",
            format!("domains {} and {} differ", m.cols(), b.cols()),
        ));
    }
    Ok(R::solve_left(m, b))
}

fn unsolvable(row: usize, col: usize, detail: impl Into<String>) -> Certificate {
    Certificate::Unsolvable {
        row,
        col,
        detail: detail.into(),
    }
}

fn field_right<F: Field>(m: &Matrix<F>, b: &Matrix<F>) -> Verdict<Matrix<F>> {
    match field::solve(m, b) {
        Ok(x) => Verdict::Exists(x),
        Err((row, col)) => Verdict::NotExists(unsolvable(
            row,
            col,
            "reduced row reads 0 = nonzero",
        )),
    }
}

fn field_left<F: Field>(m: &Matrix<F>, b: &Matrix<F>) -> Verdict<Matrix<F>> {
    field_right(&m.transpose(), &b.transpose()).map(|k| k.transpose())
}

macro_rules! field_solve {
    ($t:ty) => {
        impl Solve for $t {
            fn solve_right(m: &Matrix<Self>, b: &Matrix<Self>) -> Verdict<Matrix<Self>> {
                field_right(m, b)
            }

            fn solve_left(m: &Matrix<Self>, b: &Matrix<Self>) -> Verdict<Matrix<Self>> {
                field_left(m, b)
            }
        }
    };
}

field_solve!(BigRational);
field_solve!(Gaussian);
field_solve!(Gf2);

impl Solve for BigInt {
    fn solve_right(m: &Matrix<Self>, b: &Matrix<Self>) -> Verdict<Matrix<Self>> {
        match integer::solve(m, b) {
            Ok(x) => Verdict::Exists(x),
            Err((row, col)) => Verdict::NotExists(unsolvable(
                row,
                col,
                "Smith-transformed right-hand side is not divisible by the invariant factor",
            )),
        }
    }

    fn solve_left(m: &Matrix<Self>, b: &Matrix<Self>) -> Verdict<Matrix<Self>> {
        Self::solve_right(&m.transpose(), &b.transpose()).map(|k| k.transpose())
    }
}

fn dual_parts(m: &Matrix<Dual>) -> (Matrix<BigInt>, Matrix<BigInt>) {
    (m.map(|d| d.a.clone()), m.map(|d| d.b.clone()))
}

impl Solve for Dual {
    /// `(m0 + m1 x)(x0 + x1 x) = b0 + b1 x` splits into `m0 x0 = b0` and
    /// `m1 x0 + m0 x1 = b1`, one stacked integer system.
    fn solve_right(m: &Matrix<Self>, b: &Matrix<Self>) -> Verdict<Matrix<Self>> {
        let (m0, m1) = dual_parts(m);
        let (b0, b1) = dual_parts(b);
        let zero = Matrix::zero(m.rows(), m.cols());
        let stacked = Matrix::blocks2(&m0, &zero, &m1, &m0);
        let rhs = b0.vcat(&b1);
        match integer::solve(&stacked, &rhs) {
            Ok(x) => {
                let n = m.cols();
                Verdict::Exists(Matrix::from_fn(n, b.cols(), |r, c| {
                    Dual::new(x.get(r, c).clone(), x.get(n + r, c).clone())
                }))
            }
            Err((row, col)) => Verdict::NotExists(unsolvable(
                row,
                col,
                "stacked constant/x-coefficient integer system is unsolvable",
            )),
        }
    }

    fn solve_left(m: &Matrix<Self>, b: &Matrix<Self>) -> Verdict<Matrix<Self>> {
        Self::solve_right(&m.transpose(), &b.transpose()).map(|k| k.transpose())
    }
}

/// Greatest `x` with `m · x <= b` (textbook product): each entry is the
/// conjunction of implications `m[i][j] -> b[i][c]`.
pub fn residual(m: &Matrix<Bool>, b: &Matrix<Bool>) -> Matrix<Bool> {
    Matrix::from_fn(m.cols(), b.cols(), |j, c| {
        Bool((0..m.rows()).all(|i| m.get(i, j).implies(*b.get(i, c)).0))
    })
}

impl Solve for Bool {
    /// Residuation: if any solution exists, the greatest candidate is one.
    fn solve_right(m: &Matrix<Self>, b: &Matrix<Self>) -> Verdict<Matrix<Self>> {
        let x = residual(m, b);
        let got = m.product(&x);
        for i in 0..b.rows() {
            for c in 0..b.cols() {
                if got.get(i, c) != b.get(i, c) {
                    return Verdict::NotExists(unsolvable(
                        i,
                        c,
                        "greatest residuated candidate misses a required 1",
                    ));
                }
            }
        }
        Verdict::Exists(x)
    }

    fn solve_left(m: &Matrix<Self>, b: &Matrix<Self>) -> Verdict<Matrix<Self>> {
        Self::solve_right(&m.transpose(), &b.transpose()).map(|k| k.transpose())
    }
}

impl<W: WordMonoid> Solve for WordSum<W> {
    fn solve_right(m: &Matrix<Self>, b: &Matrix<Self>) -> Verdict<Matrix<Self>> {
        search::bounded_solve_right(m, b)
    }

    fn solve_left(m: &Matrix<Self>, b: &Matrix<Self>) -> Verdict<Matrix<Self>> {
        search::bounded_solve_left(m, b)
    }
}
