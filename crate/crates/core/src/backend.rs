//! Per-rig decision procedures behind pseudoinverses and the order on maps.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{dims, MatError};
use crate::linalg::field::rank;
use crate::linalg::Solve;
use crate::matrix::Matrix;
use crate::pinv::{self, PinvResult};
use crate::positivity;
use crate::rig::{Bool, DaggerRig, Dual, FreeIsometry, Gaussian, Gf2};
use crate::verdict::Verdict;

/// A dagger rig whose matrices come with pseudoinverse and positivity
/// procedures.
pub trait Backend: DaggerRig + Solve {
    fn pinv(f: &Matrix<Self>) -> PinvResult<Self>;

    /// A witness `h` with `g = f + h then h†`.
    fn leq_positive(f: &Matrix<Self>, g: &Matrix<Self>) -> Verdict<Matrix<Self>>;

    /// A witness `g` with `f then f† + g then g† = id`.
    fn is_contraction(f: &Matrix<Self>) -> Verdict<Matrix<Self>> {
        Self::leq_positive(&f.then(&f.dagger()), &Matrix::identity(f.cols()))
    }

    /// Whether `m` is mono, where decidable; by default only split monos are
    /// recognised.
    fn is_mono(m: &Matrix<Self>) -> Option<bool> {
        Self::solve_left(m, &Matrix::identity(m.cols()))
            .is_exists()
            .then_some(true)
    }
}

impl Backend for BigRational {
    fn pinv(f: &Matrix<Self>) -> PinvResult<Self> {
        pinv::field_pinv(f)
    }

    fn is_mono(m: &Matrix<Self>) -> Option<bool> {
        Some(rank(m) == m.cols())
    }

    fn leq_positive(f: &Matrix<Self>, g: &Matrix<Self>) -> Verdict<Matrix<Self>> {
        positivity::subfield_leq_positive(f, g)
    }
}

impl Backend for Gaussian {
    fn pinv(f: &Matrix<Self>) -> PinvResult<Self> {
        pinv::field_pinv(f)
    }

    fn is_mono(m: &Matrix<Self>) -> Option<bool> {
        Some(rank(m) == m.cols())
    }

    fn leq_positive(f: &Matrix<Self>, g: &Matrix<Self>) -> Verdict<Matrix<Self>> {
        positivity::subfield_leq_positive(f, g)
    }
}

impl Backend for Gf2 {
    fn pinv(f: &Matrix<Self>) -> PinvResult<Self> {
        pinv::field_pinv(f)
    }

    fn is_mono(m: &Matrix<Self>) -> Option<bool> {
        Some(rank(m) == m.cols())
    }

    fn leq_positive(f: &Matrix<Self>, g: &Matrix<Self>) -> Verdict<Matrix<Self>> {
        positivity::gf2_leq_positive(f, g)
    }
}

impl Backend for BigInt {
    fn pinv(f: &Matrix<Self>) -> PinvResult<Self> {
        pinv::integer_pinv(f)
    }

    fn leq_positive(f: &Matrix<Self>, g: &Matrix<Self>) -> Verdict<Matrix<Self>> {
        positivity::integer_leq_positive(f, g)
    }

    fn is_contraction(f: &Matrix<Self>) -> Verdict<Matrix<Self>> {
        positivity::integer_is_contraction(f)
    }

    fn is_mono(m: &Matrix<Self>) -> Option<bool> {
        Some(rank(&m.map(|z| BigRational::from_integer(z.clone()))) == m.cols())
    }
}

impl Backend for Dual {
    fn pinv(f: &Matrix<Self>) -> PinvResult<Self> {
        pinv::dual_pinv(f)
    }

    fn leq_positive(f: &Matrix<Self>, g: &Matrix<Self>) -> Verdict<Matrix<Self>> {
        positivity::dual_leq_positive(f, g)
    }
}

impl Backend for Bool {
    fn pinv(f: &Matrix<Self>) -> PinvResult<Self> {
        pinv::bool_pinv(f)
    }

    fn leq_positive(f: &Matrix<Self>, g: &Matrix<Self>) -> Verdict<Matrix<Self>> {
        positivity::bool_leq_positive(f, g)
    }
}

impl Backend for FreeIsometry {
    fn pinv(f: &Matrix<Self>) -> PinvResult<Self> {
        pinv::bounded_pinv(f)
    }

    fn leq_positive(f: &Matrix<Self>, g: &Matrix<Self>) -> Verdict<Matrix<Self>> {
        if !(0..g.rows()).all(|i| (0..g.cols()).all(|j| f.get(i, j).dominated_by(g.get(i, j)))) {
            return Verdict::NotExists(crate::Certificate::Structural {
                detail: "some coefficient of f exceeds the matching coefficient of g".into(),
            });
        }
        positivity::bounded_leq_positive(f, g)
    }
}

/// `f <= g`, checking that both are endomorphisms of the same object.
pub fn leq_positive<R: Backend>(
    f: &Matrix<R>,
    g: &Matrix<R>,
) -> Result<Verdict<Matrix<R>>, MatError> {
    if !f.is_square() || f.rows() != g.rows() || f.cols() != g.cols() {
        return Err(dims(
            "leq_positive",
            format!(
                "{}x{} and {}x{} are not endomorphisms of one object",
                f.rows(),
                f.cols(),
                g.rows(),
                g.cols()
            ),
        ));
    }
    Ok(R::leq_positive(f, g))
}

pub fn is_contraction<R: Backend>(f: &Matrix<R>) -> Verdict<Matrix<R>> {
    R::is_contraction(f)
}

/// `f` is a cocontraction iff `f†` is a contraction.
pub fn is_cocontraction<R: Backend>(f: &Matrix<R>) -> Verdict<Matrix<R>> {
    R::is_contraction(&f.dagger())
}
