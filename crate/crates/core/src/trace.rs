//! Partial traces of `f: A ⊕ X -> B ⊕ X`: the kernel-image trace, which
//! only needs linear systems, and the pseudotrace, which needs a
//! pseudoinverse of `id - f_XX`.
//!
//! Components are named source first: `f_AX: A -> X`, `f_XB: X -> B`.

use crate::backend::Backend;
use crate::error::MatError;
use crate::linalg::Solve;
use crate::matcat::{is_coisometry, is_isometry, is_unitary};
use crate::matrix::{BlockPartition, Matrix};
use crate::pinv::pinv;
use crate::rig::{Rig, Ring};
use crate::verdict::{Certificate, Verdict};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceProblem<R: Rig> {
    f: Matrix<R>,
    dom: BlockPartition,
    cod: BlockPartition,
}

impl<R: Rig> TraceProblem<R> {
    /// `f: A ⊕ X -> B ⊕ X` with the given sizes of `A`, `B` and `X`.
    pub fn new(f: Matrix<R>, a: usize, b: usize, x: usize) -> Result<Self, MatError> {
        let dom = BlockPartition::of(f.cols(), vec![a, x])?;
        let cod = BlockPartition::of(f.rows(), vec![b, x])?;
        Ok(TraceProblem { f, dom, cod })
    }

    /// Traces out the last `x` coordinates of domain and codomain.
    pub fn trailing(f: Matrix<R>, x: usize) -> Result<Self, MatError> {
        if x > f.cols() || x > f.rows() {
            return Err(MatError::PartitionMismatch {
                sizes: vec![x],
                dim: f.cols().min(f.rows()),
            });
        }
        let (a, b) = (f.cols() - x, f.rows() - x);
        Self::new(f, a, b, x)
    }

    pub fn f(&self) -> &Matrix<R> {
        &self.f
    }

    pub fn a(&self) -> usize {
        self.dom.size(0)
    }

    pub fn b(&self) -> usize {
        self.cod.size(0)
    }

    pub fn x(&self) -> usize {
        self.dom.size(1)
    }

    fn component(&self, from: usize, to: usize) -> Matrix<R> {
        self.f
            .block(&self.cod, &self.dom, to, from)
            .expect("partitions fit by construction")
    }

    pub fn f_ab(&self) -> Matrix<R> {
        self.component(0, 0)
    }

    pub fn f_ax(&self) -> Matrix<R> {
        self.component(0, 1)
    }

    pub fn f_xb(&self) -> Matrix<R> {
        self.component(1, 0)
    }

    pub fn f_xx(&self) -> Matrix<R> {
        self.component(1, 1)
    }

    /// `id_X - f_XX`, when `f_XX` has a negative.
    pub fn one_minus_f_xx(&self) -> Verdict<Matrix<R>> {
        match self.f_xx().try_negate() {
            Verdict::Exists(n) => Verdict::Exists(Matrix::identity(self.x()).plus(&n)),
            Verdict::NotExists(c) => Verdict::NotExists(Certificate::because("id - f_XX", c)),
            Verdict::Unknown(r) => Verdict::Unknown(r),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceResult<R: Rig> {
    pub verdict: Verdict<Matrix<R>>,
    /// `(i, k)` with `f_AX = i;(id - f_XX)` and `(id - f_XX);k = f_XB`.
    pub witnesses: Option<(Matrix<R>, Matrix<R>)>,
    /// `(id - f_XX)⁺`.
    pub pinv_used: Option<Matrix<R>>,
}

impl<R: Rig> TraceResult<R> {
    fn bare(verdict: Verdict<Matrix<R>>) -> Self {
        TraceResult {
            verdict,
            witnesses: None,
            pinv_used: None,
        }
    }
}

/// The value `f_AB + i;f_XB` for a witness `i`.
pub fn kernel_image_value_i<R: Rig>(tp: &TraceProblem<R>, i: &Matrix<R>) -> Matrix<R> {
    tp.f_ab().plus(&i.then(&tp.f_xb()))
}

/// The value `f_AB + f_AX;k` for a witness `k`.
pub fn kernel_image_value_k<R: Rig>(tp: &TraceProblem<R>, k: &Matrix<R>) -> Matrix<R> {
    tp.f_ab().plus(&tp.f_ax().then(k))
}

/// Whether `(i, k)` are witnesses for the kernel-image trace.
pub fn is_kernel_image_witness<R: Rig>(tp: &TraceProblem<R>, i: &Matrix<R>, k: &Matrix<R>) -> bool {
    let Some(m) = tp.one_minus_f_xx().into_exists() else {
        return false;
    };
    i.rows() == tp.x()
        && i.cols() == tp.a()
        && k.rows() == tp.b()
        && k.cols() == tp.x()
        && i.then(&m) == tp.f_ax()
        && m.then(k) == tp.f_xb()
}

pub fn kernel_image_trace<R: Solve>(tp: &TraceProblem<R>) -> TraceResult<R> {
    let m = match tp.one_minus_f_xx() {
        Verdict::Exists(m) => m,
        other => return TraceResult::bare(other),
    };
    let i = R::solve_right(&m, &tp.f_ax());
    let k = R::solve_left(&m, &tp.f_xb());
    let (i, k) = match (i, k) {
        (Verdict::Exists(i), Verdict::Exists(k)) => (i, k),
        (Verdict::NotExists(c), _) => {
            return TraceResult::bare(Verdict::NotExists(Certificate::because(
                "no i with f_AX = i;(id - f_XX)",
                c,
            )))
        }
        (_, Verdict::NotExists(c)) => {
            return TraceResult::bare(Verdict::NotExists(Certificate::because(
                "no k with (id - f_XX);k = f_XB",
                c,
            )))
        }
        (Verdict::Unknown(r), _) | (_, Verdict::Unknown(r)) => {
            return TraceResult::bare(Verdict::Unknown(r))
        }
    };
    let value = kernel_image_value_i(tp, &i);
    assert_eq!(
        value,
        kernel_image_value_k(tp, &k),
        "kernel-image trace depends on the witnesses"
    );
    TraceResult {
        verdict: Verdict::Exists(value),
        witnesses: Some((i, k)),
        pinv_used: None,
    }
}

/// `f_AB + f_AX;(id - f_XX)⁺;f_XB`.
pub fn pseudotrace<R: Backend>(tp: &TraceProblem<R>) -> TraceResult<R> {
    let m = match tp.one_minus_f_xx() {
        Verdict::Exists(m) => m,
        other => return TraceResult::bare(other),
    };
    match pinv(&m).verdict {
        Verdict::Exists(g) => TraceResult {
            verdict: Verdict::Exists(tp.f_ab().plus(&tp.f_ax().then(&g).then(&tp.f_xb()))),
            witnesses: None,
            pinv_used: Some(g),
        },
        Verdict::NotExists(c) => TraceResult::bare(Verdict::NotExists(Certificate::because(
            "id - f_XX has no pseudoinverse",
            c,
        ))),
        Verdict::Unknown(r) => TraceResult::bare(Verdict::Unknown(r)),
    }
}

/// Where both traces are defined, they agree; vacuously true otherwise.
pub fn coincidence_check<R: Backend>(tp: &TraceProblem<R>) -> bool {
    match (kernel_image_trace(tp).verdict, pseudotrace(tp).verdict) {
        (Verdict::Exists(a), Verdict::Exists(b)) => a == b,
        _ => true,
    }
}

/// Pseudotraces of `f;(id_A ⊕ g)` and `(id_A ⊕ g);f` for the fixed rational
/// pair on `1 ⊕ 2` that breaks dinaturality.
pub fn dinaturality_failure_demo() -> (num_rational::BigRational, num_rational::BigRational) {
    use num_rational::BigRational;
    let f = Matrix::<BigRational>::parse_rows(&[&["0", "1", "0"], &["1", "1", "0"], &["0", "0", "1"]])
        .expect("literal");
    let g = Matrix::<BigRational>::parse_rows(&[&["1", "-1"], &["0", "1"]]).expect("literal");
    let h = Matrix::identity(1).oplus(&g);
    let value = |m: Matrix<BigRational>| {
        let tp = TraceProblem::trailing(m, 2).expect("1 + 2 split");
        let v = pseudotrace(&tp)
            .verdict
            .into_exists()
            .expect("rational pseudotraces are total");
        v.get(0, 0).clone()
    };
    let pre = value(f.then(&h));
    let post = value(h.then(&f));
    assert_ne!(pre, post);
    (pre, post)
}

/// Subcategories on which the kernel-image trace is total.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ArrowClass {
    Unitary,
    Isometry,
    Coisometry,
    Contraction,
}

impl ArrowClass {
    pub const ALL: [ArrowClass; 4] = [
        ArrowClass::Unitary,
        ArrowClass::Isometry,
        ArrowClass::Coisometry,
        ArrowClass::Contraction,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ArrowClass::Unitary => "unitary",
            ArrowClass::Isometry => "isometry",
            ArrowClass::Coisometry => "coisometry",
            ArrowClass::Contraction => "contraction",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|c| c.name() == name)
    }

    /// Membership; `None` when a contraction check is undecided.
    pub fn contains<R: Backend>(self, f: &Matrix<R>) -> Option<bool> {
        match self {
            ArrowClass::Unitary => Some(is_unitary(f)),
            ArrowClass::Isometry => Some(is_isometry(f)),
            ArrowClass::Coisometry => Some(is_coisometry(f)),
            ArrowClass::Contraction => match R::is_contraction(f) {
                Verdict::Exists(_) => Some(true),
                Verdict::NotExists(_) => Some(false),
                Verdict::Unknown(_) => None,
            },
        }
    }
}

/// The kernel-image trace of a member of `class` exists and lies in
/// `class` again.
pub fn closure_check<R: Backend + Ring>(tp: &TraceProblem<R>, class: ArrowClass) -> bool {
    match kernel_image_trace(tp).verdict {
        Verdict::Exists(t) => class.contains(&t) == Some(true),
        _ => false,
    }
}

#[cfg(test)]
mod tests {
    use num_bigint::BigInt;
    use num_rational::BigRational;

    use super::*;
    use crate::rig::{Dual, WordRigXY};

    type Q = Matrix<BigRational>;

    fn q(rows: &[&[&str]]) -> Q {
        Q::parse_rows(rows).unwrap()
    }

    #[test]
    fn zero_feedback() {
        let f = q(&[&["1", "2"], &["3", "0"]]);
        let tp = TraceProblem::trailing(f, 1).unwrap();
        let r = kernel_image_trace(&tp);
        assert_eq!(r.verdict, Verdict::Exists(q(&[&["7"]])));
        let (i, k) = r.witnesses.unwrap();
        assert_eq!(i, tp.f_ax());
        assert_eq!(k, tp.f_xb());
        assert!(coincidence_check(&tp));
    }

    #[test]
    fn integer_reflection() {
        let f = Matrix::<BigInt>::parse_rows(&[&["1", "0"], &["0", "-1"]]).unwrap();
        let tp = TraceProblem::trailing(f, 1).unwrap();
        let r = kernel_image_trace(&tp);
        assert_eq!(r.verdict, Verdict::Exists(Matrix::identity(1)));
        let (i, k) = r.witnesses.unwrap();
        assert!(i.is_zero() && k.is_zero());
        assert!(pseudotrace(&tp).verdict.is_not_exists());
        assert!(coincidence_check(&tp));
    }

    #[test]
    fn dual_numbers_split_the_traces() {
        let f = Matrix::<Dual>::parse_rows(&[&["-1", "x"], &["x", "1"]]).unwrap();
        let tp = TraceProblem::trailing(f, 1).unwrap();
        assert!(kernel_image_trace(&tp).verdict.is_not_exists());
        assert_eq!(
            pseudotrace(&tp).verdict,
            Verdict::Exists(Matrix::<Dual>::parse_rows(&[&["-1"]]).unwrap())
        );
    }

    #[test]
    fn rotation() {
        let f = q(&[&["3/5", "-4/5"], &["4/5", "3/5"]]);
        let tp = TraceProblem::trailing(f, 1).unwrap();
        assert_eq!(pseudotrace(&tp).verdict, Verdict::Exists(q(&[&["-1"]])));
        assert_eq!(kernel_image_trace(&tp).verdict, Verdict::Exists(q(&[&["-1"]])));
        assert!(closure_check(&tp, ArrowClass::Unitary));
    }

    #[test]
    fn dinaturality_pair() {
        let (pre, post) = dinaturality_failure_demo();
        assert_eq!(pre, BigRational::from_integer(0.into()));
        assert_eq!(post, BigRational::from_integer((-1).into()));
    }

    #[test]
    fn word_rig_needs_negatives() {
        let f = Matrix::<WordRigXY>::parse_rows(&[&["0", "x"], &["y", "y x"]]).unwrap();
        let tp = TraceProblem::trailing(f, 1).unwrap();
        assert!(matches!(
            kernel_image_trace(&tp).verdict,
            Verdict::NotExists(Certificate::Because { .. })
        ));
        let g = Matrix::<WordRigXY>::parse_rows(&[&["0", "x"], &["y", "0"]]).unwrap();
        let tp = TraceProblem::trailing(g, 1).unwrap();
        assert!(kernel_image_trace(&tp).verdict.is_exists());
    }

    #[test]
    fn vanishing_dimension() {
        let f = q(&[&["1", "2"], &["3", "4"]]);
        let tp = TraceProblem::trailing(f.clone(), 0).unwrap();
        assert_eq!(kernel_image_trace(&tp).verdict, Verdict::Exists(f));
    }
}
