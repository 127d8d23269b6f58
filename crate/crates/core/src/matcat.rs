//! Arrow predicates of the matrix category. Composites are diagram order:
//! an isometry `f: A -> B` satisfies `f;f† = id_A`.

use crate::error::MatError;
use crate::matrix::Matrix;
use crate::rig::{DaggerRig, Rig, Ring};

pub fn is_isometry<R: DaggerRig>(f: &Matrix<R>) -> bool {
    f.then(&f.dagger()).is_identity()
}

pub fn is_coisometry<R: DaggerRig>(f: &Matrix<R>) -> bool {
    f.dagger().then(f).is_identity()
}

pub fn is_unitary<R: DaggerRig>(f: &Matrix<R>) -> bool {
    f.is_square() && is_isometry(f) && is_coisometry(f)
}

pub fn is_self_adjoint<R: DaggerRig>(f: &Matrix<R>) -> bool {
    f.is_self_adjoint()
}

pub fn is_idempotent<R: Rig>(p: &Matrix<R>) -> bool {
    p.is_square() && p.then(p) == *p
}

pub fn is_dagger_idempotent<R: DaggerRig>(p: &Matrix<R>) -> bool {
    is_idempotent(p) && p.is_self_adjoint()
}

/// For an isometry `f: A -> B`, the unitary on `A ⊕ B` with components
/// `0: A -> A`, `f: A -> B`, `f†: B -> A` and `id - f†;f: B -> B`.
pub fn unitary_completion<R: DaggerRig + Ring>(f: &Matrix<R>) -> Result<Matrix<R>, MatError> {
    if !is_isometry(f) {
        return Err(MatError::NotIsometry);
    }
    let (a, b) = (f.cols(), f.rows());
    let corner = Matrix::identity(b).minus(&f.dagger().then(f));
    let u = Matrix::blocks2(&Matrix::zero(a, a), &f.dagger(), f, &corner);
    assert!(is_unitary(&u), "completion of an isometry must be unitary");
    Ok(u)
}

/// `p + q = id` with `p;q = 0 = q;p`, for idempotents on one object.
pub fn complementary<R: Rig>(p: &Matrix<R>, q: &Matrix<R>) -> bool {
    p.is_square()
        && p.rows() == q.rows()
        && q.is_square()
        && is_idempotent(p)
        && is_idempotent(q)
        && p.plus(q).is_identity()
        && p.then(q).is_zero()
        && q.then(p).is_zero()
}

/// The complement `id - p`, which is forced for any complement of `p` in a
/// rig with negatives.
pub fn complement_of<R: Ring>(p: &Matrix<R>) -> Matrix<R> {
    Matrix::identity(p.rows()).minus(p)
}

#[cfg(test)]
mod tests {
    use num_bigint::BigInt;
    use num_rational::BigRational;

    use super::*;
    use crate::rig::{Bool, FreeIsometry, Gf2};

    #[test]
    fn appendix_style_predicates() {
        let row = Matrix::<Gf2>::parse_rows(&[&["1", "1", "1"]]).unwrap();
        assert!(is_coisometry(&row));
        assert!(!is_isometry(&row));
        let col = Matrix::<Bool>::parse_rows(&[&["1"], &["1"]]).unwrap();
        assert!(is_isometry(&col));
        assert!(!is_coisometry(&col));
        let d = Matrix::<BigInt>::parse_rows(&[&["1", "0"], &["0", "-1"]]).unwrap();
        assert!(is_unitary(&d));
        let x = Matrix::<FreeIsometry>::parse_rows(&[&["x"]]).unwrap();
        assert!(is_isometry(&x) && !is_coisometry(&x));
    }

    #[test]
    fn completions() {
        let id = Matrix::<BigRational>::identity(2);
        let u = unitary_completion(&id).unwrap();
        let swap = Matrix::blocks2(&Matrix::zero(2, 2), &id, &id, &Matrix::zero(2, 2));
        assert_eq!(u, swap);
        let e = Matrix::<BigRational>::parse_rows(&[&["1"], &["0"]]).unwrap();
        let u = unitary_completion(&e).unwrap();
        assert_eq!((u.rows(), u.cols()), (3, 3));
        assert_eq!(u.submatrix(1..3, 0..1), e);
        let ones = Matrix::<BigInt>::parse_rows(&[&["1"], &["1"]]).unwrap();
        assert_eq!(unitary_completion(&ones), Err(MatError::NotIsometry));
    }

    #[test]
    fn complements() {
        let one = Matrix::<Bool>::identity(1);
        assert!(!complementary(&one, &one));
        let p = Matrix::<BigRational>::parse_rows(&[&["1", "0"], &["0", "0"]]).unwrap();
        let q = Matrix::<BigRational>::parse_rows(&[&["0", "0"], &["0", "1"]]).unwrap();
        assert!(complementary(&p, &q));
        assert_eq!(complement_of(&p), q);
        let id = Matrix::<BigRational>::identity(3);
        assert!(complementary(&id, &Matrix::zero(3, 3)));
    }
}
