//! The dagger idempotent completion: objects are dagger idempotents on a
//! base dimension, arrows are matrices fixed by the idempotents on either
//! side.

use crate::backend::Backend;
use crate::error::{dims, MatError};
use crate::matcat::{complementary, is_dagger_idempotent};
use crate::matrix::{BlockPartition, Matrix};
use crate::pinv::{is_ep, pinv};
use crate::rig::{DaggerRig, Ring};
use crate::verdict::Verdict;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitObject<R: DaggerRig> {
    idem: Matrix<R>,
}

impl<R: DaggerRig> SplitObject<R> {
    pub fn new(idem: Matrix<R>) -> Result<Self, MatError> {
        if !is_dagger_idempotent(&idem) {
            return Err(MatError::NotDaggerIdempotent);
        }
        Ok(SplitObject { idem })
    }

    /// The object `id_n`.
    pub fn full(n: usize) -> Self {
        SplitObject {
            idem: Matrix::identity(n),
        }
    }

    pub fn idem(&self) -> &Matrix<R> {
        &self.idem
    }

    pub fn base_dim(&self) -> usize {
        self.idem.rows()
    }

    /// Isomorphic to the zero object.
    pub fn is_zero(&self) -> bool {
        self.idem.is_zero()
    }

    pub fn oplus(&self, other: &Self) -> Self {
        SplitObject {
            idem: self.idem.oplus(&other.idem),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitArrow<R: DaggerRig> {
    src: SplitObject<R>,
    dst: SplitObject<R>,
    mat: Matrix<R>,
}

impl<R: DaggerRig> SplitArrow<R> {
    pub fn new(src: SplitObject<R>, dst: SplitObject<R>, mat: Matrix<R>) -> Result<Self, MatError> {
        if mat.cols() != src.base_dim() || mat.rows() != dst.base_dim() {
            return Err(dims(
                "SplitArrow::new",
                format!(
                    "{}x{} matrix between bases {} and {}",
                    mat.rows(),
                    mat.cols(),
                    src.base_dim(),
                    dst.base_dim()
                ),
            ));
        }
        if src.idem.then(&mat).then(&dst.idem) != mat {
            return Err(MatError::NotIntertwining);
        }
        Ok(SplitArrow { src, dst, mat })
    }

    pub fn src(&self) -> &SplitObject<R> {
        &self.src
    }

    pub fn dst(&self) -> &SplitObject<R> {
        &self.dst
    }

    pub fn mat(&self) -> &Matrix<R> {
        &self.mat
    }

    pub fn is_identity(&self) -> bool {
        self.src == self.dst && self.mat == self.src.idem
    }
}

pub fn comp_identity<R: DaggerRig>(o: &SplitObject<R>) -> SplitArrow<R> {
    SplitArrow {
        src: o.clone(),
        dst: o.clone(),
        mat: o.idem.clone(),
    }
}

/// `f` then `g`.
pub fn comp_compose<R: DaggerRig>(f: &SplitArrow<R>, g: &SplitArrow<R>) -> Result<SplitArrow<R>, MatError> {
    if f.dst != g.src {
        return Err(dims("comp_compose", "target of f is not the source of g"));
    }
    SplitArrow::new(f.src.clone(), g.dst.clone(), f.mat.then(&g.mat))
}

pub fn comp_dagger<R: DaggerRig>(f: &SplitArrow<R>) -> SplitArrow<R> {
    SplitArrow {
        src: f.dst.clone(),
        dst: f.src.clone(),
        mat: f.mat.dagger(),
    }
}

pub fn comp_oplus<R: DaggerRig>(f: &SplitArrow<R>, g: &SplitArrow<R>) -> SplitArrow<R> {
    SplitArrow {
        src: f.src.oplus(&g.src),
        dst: f.dst.oplus(&g.dst),
        mat: f.mat.oplus(&g.mat),
    }
}

/// `p` split through the object `(p)`: `section;retraction = id_(p)` and
/// `retraction;section = p` on the full object.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Splitting<R: DaggerRig> {
    pub object: SplitObject<R>,
    /// `(p) -> full`.
    pub section: SplitArrow<R>,
    /// `full -> (p)`.
    pub retraction: SplitArrow<R>,
}

pub fn split<R: DaggerRig>(p: &Matrix<R>) -> Result<Splitting<R>, MatError> {
    let object = SplitObject::new(p.clone())?;
    let full = SplitObject::full(p.rows());
    let section = SplitArrow::new(object.clone(), full.clone(), p.clone())?;
    let retraction = SplitArrow::new(full, object.clone(), p.clone())?;
    debug_assert!(comp_compose(&section, &retraction).unwrap().is_identity());
    debug_assert_eq!(comp_compose(&retraction, &section).unwrap().mat, *p);
    Ok(Splitting {
        object,
        section,
        retraction,
    })
}

/// The full object presented as `(p) ⊕ (q)` by a unitary.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DirectSum<R: DaggerRig> {
    pub first: SplitObject<R>,
    pub second: SplitObject<R>,
    /// `(p) ⊕ (q) -> full`.
    pub unitary: SplitArrow<R>,
}

pub fn decompose_complementary<R: DaggerRig>(p: &Matrix<R>, q: &Matrix<R>) -> Result<DirectSum<R>, MatError> {
    if !complementary(p, q) {
        return Err(MatError::NotComplementary);
    }
    let first = SplitObject::new(p.clone())?;
    let second = SplitObject::new(q.clone())?;
    let n = p.rows();
    let unitary = SplitArrow::new(first.oplus(&second), SplitObject::full(n), p.hcat(q))?;
    let u = &unitary.mat;
    let ud = u.dagger();
    assert_eq!(u.then(&ud), p.oplus(q));
    assert!(ud.then(u).is_identity());
    assert_eq!(u.then(p).then(&ud), p.oplus(&Matrix::zero(n, n)));
    assert_eq!(u.then(q).then(&ud), Matrix::zero(n, n).oplus(q));
    Ok(DirectSum {
        first,
        second,
        unitary,
    })
}

/// `f` as an isomorphism from its coimage projection to its image
/// projection, with inverse carried by `f⁺`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PinvIso<R: DaggerRig> {
    pub coimage: SplitObject<R>,
    pub image: SplitObject<R>,
    pub iso: SplitArrow<R>,
    pub inv: SplitArrow<R>,
}

fn pinv_of<R: Backend>(f: &Matrix<R>) -> Result<Matrix<R>, MatError> {
    match pinv(f).verdict {
        Verdict::Exists(g) => Ok(g),
        Verdict::NotExists(c) => Err(MatError::PinvMissing(c.to_string())),
        Verdict::Unknown(r) => Err(MatError::PinvMissing(r)),
    }
}

fn iso_with<R: DaggerRig>(f: &Matrix<R>, g: &Matrix<R>) -> Result<PinvIso<R>, MatError> {
    let coimage = SplitObject::new(f.then(g))?;
    let image = SplitObject::new(g.then(f))?;
    let iso = SplitArrow::new(coimage.clone(), image.clone(), f.clone())?;
    let inv = SplitArrow::new(image.clone(), coimage.clone(), g.clone())?;
    assert!(comp_compose(&iso, &inv)?.is_identity());
    assert!(comp_compose(&inv, &iso)?.is_identity());
    Ok(PinvIso {
        coimage,
        image,
        iso,
        inv,
    })
}

pub fn pinv_as_iso<R: Backend>(f: &Matrix<R>) -> Result<PinvIso<R>, MatError> {
    let g = pinv_of(f)?;
    iso_with(f, &g)
}

/// `f: A -> B` as `diag(a, 0): A1 ⊕ A2 -> B1 ⊕ B2` with `a` invertible.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Svd<R: DaggerRig> {
    pub a1: SplitObject<R>,
    pub a2: SplitObject<R>,
    pub b1: SplitObject<R>,
    pub b2: SplitObject<R>,
    /// `A1 -> B1`, carried by `f`.
    pub a: SplitArrow<R>,
    /// `B1 -> A1`, carried by `f⁺`.
    pub a_inv: SplitArrow<R>,
    /// `f` conjugated into `A1 ⊕ A2 -> B1 ⊕ B2`.
    pub block: SplitArrow<R>,
}

pub fn svd_decompose<R: Backend + Ring>(f: &Matrix<R>) -> Result<Svd<R>, MatError> {
    let g = pinv_of(f)?;
    let PinvIso {
        coimage: a1,
        image: b1,
        iso: a,
        inv: a_inv,
    } = iso_with(f, &g)?;
    let (n, m) = (f.cols(), f.rows());
    let a2 = SplitObject::new(Matrix::identity(n).minus(a1.idem()))?;
    let b2 = SplitObject::new(Matrix::identity(m).minus(b1.idem()))?;
    let ua = decompose_complementary(a1.idem(), a2.idem())?;
    let ub = decompose_complementary(b1.idem(), b2.idem())?;

    let r_a1 = split(a1.idem())?.retraction;
    let s_b1 = split(b1.idem())?.section;
    let rebuilt = comp_compose(&comp_compose(&r_a1, &a)?, &s_b1)?;
    assert_eq!(rebuilt.mat, *f);

    let block = comp_compose(
        &comp_compose(&ua.unitary, &SplitArrow::new(SplitObject::full(n), SplitObject::full(m), f.clone())?)?,
        &comp_dagger(&ub.unitary),
    )?;
    let rp = BlockPartition::new(vec![m, m]);
    let cp = BlockPartition::new(vec![n, n]);
    for (i, j) in [(0, 1), (1, 0), (1, 1)] {
        assert!(block.mat.block(&rp, &cp, i, j)?.is_zero());
    }
    assert_eq!(block.mat.block(&rp, &cp, 0, 0)?, *f);
    // a⁻¹ is the first injection, then f⁺, then the first projection.
    let inv_block = comp_compose(
        &comp_compose(&ub.unitary, &SplitArrow::new(SplitObject::full(m), SplitObject::full(n), g)?)?,
        &comp_dagger(&ua.unitary),
    )?;
    assert_eq!(inv_block.mat.block(&cp, &rp, 0, 0)?, a_inv.mat);
    Ok(Svd {
        a1,
        a2,
        b1,
        b2,
        a,
        a_inv,
        block,
    })
}

/// An EP endomorphism as `diag(a, 0)` on `A1 ⊕ A2` with `a` an automorphism.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EpDecomposition<R: DaggerRig> {
    pub a1: SplitObject<R>,
    pub a2: SplitObject<R>,
    pub a: SplitArrow<R>,
    pub a_inv: SplitArrow<R>,
}

pub fn ep_decompose<R: Backend + Ring>(f: &Matrix<R>) -> Result<EpDecomposition<R>, MatError> {
    match is_ep(f) {
        Verdict::Exists(_) => {}
        Verdict::NotExists(_) => return Err(MatError::NotEp),
        Verdict::Unknown(r) => return Err(MatError::PinvMissing(r)),
    }
    let svd = svd_decompose(f)?;
    assert_eq!(svd.a1, svd.b1);
    Ok(EpDecomposition {
        a1: svd.a1,
        a2: svd.a2,
        a: svd.a,
        a_inv: svd.a_inv,
    })
}

/// The kernel `id - f;f⁺` of `f` and its inclusion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Kernel<R: DaggerRig> {
    pub object: SplitObject<R>,
    pub inclusion: SplitArrow<R>,
}

impl<R: DaggerRig> Kernel<R> {
    /// For a test arrow `m` into the domain of `f`: `m;f = 0` iff `m` is
    /// fixed by the kernel idempotent. Returns whether both sides agree.
    pub fn universal_property(&self, f: &Matrix<R>, m: &Matrix<R>) -> bool {
        let kills = m.then(f).is_zero();
        let fixed = m.then(self.object.idem()) == *m;
        kills == fixed
    }
}

pub fn kernel_of<R: Backend + Ring>(f: &Matrix<R>) -> Result<Kernel<R>, MatError> {
    let g = pinv_of(f)?;
    let k = Matrix::identity(f.cols()).minus(&f.then(&g));
    let s = split(&k)?;
    Ok(Kernel {
        object: s.object,
        inclusion: s.section,
    })
}

#[cfg(test)]
mod tests {
    use num_rational::BigRational;

    use super::*;
    use crate::rig::Bool;

    type Q = Matrix<BigRational>;

    fn q(rows: &[&[&str]]) -> Q {
        Q::parse_rows(rows).unwrap()
    }

    #[test]
    fn completion_structure() {
        let full = SplitObject::<BigRational>::full(2);
        assert!(comp_identity(&full).mat.is_identity());
        let f = SplitArrow::new(full.clone(), full.clone(), q(&[&["1", "2"], &["3", "4"]])).unwrap();
        assert_eq!(comp_dagger(&comp_dagger(&f)), f);
        let s = comp_oplus(&comp_identity(&full), &comp_identity(&SplitObject::full(1)));
        assert_eq!(s.src, SplitObject::full(3));
        let p = SplitObject::new(q(&[&["1", "0"], &["0", "0"]])).unwrap();
        assert_eq!(
            SplitArrow::new(p, full, q(&[&["1", "1"], &["1", "1"]])),
            Err(MatError::NotIntertwining)
        );
    }

    #[test]
    fn splittings() {
        for p in [
            Q::identity(2),
            Q::zero(2, 2),
            q(&[&["1/2", "1/2"], &["1/2", "1/2"]]),
        ] {
            let s = split(&p).unwrap();
            assert!(comp_compose(&s.section, &s.retraction).unwrap().is_identity());
            assert_eq!(comp_compose(&s.retraction, &s.section).unwrap().mat, p);
        }
        assert!(split(&q(&[&["1", "1"], &["0", "0"]])).is_err());
    }

    #[test]
    fn complementary_presentations() {
        let p = q(&[&["1/2", "1/2"], &["1/2", "1/2"]]);
        let d = decompose_complementary(&p, &Q::identity(2).minus(&p)).unwrap();
        assert_eq!(d.first.idem(), &p);
        let one = Matrix::<Bool>::identity(1);
        assert_eq!(
            decompose_complementary(&one, &one),
            Err(MatError::NotComplementary)
        );
    }

    #[test]
    fn pinv_isomorphisms() {
        let iso = pinv_as_iso(&q(&[&["1"], &["1"]])).unwrap();
        assert_eq!(iso.coimage.idem(), &q(&[&["1"]]));
        assert_eq!(iso.image.idem(), &q(&[&["1/2", "1/2"], &["1/2", "1/2"]]));
        let zero = pinv_as_iso(&Q::zero(2, 2)).unwrap();
        assert!(zero.coimage.is_zero() && zero.image.is_zero());
    }

    #[test]
    fn svd_of_nilpotent() {
        let f = q(&[&["0", "1"], &["0", "0"]]);
        let s = svd_decompose(&f).unwrap();
        assert_eq!(s.a1.idem(), &q(&[&["0", "0"], &["0", "1"]]));
        assert_eq!(s.b1.idem(), &q(&[&["1", "0"], &["0", "0"]]));
        assert_eq!(s.a.mat(), &f);
        let id = svd_decompose(&Q::identity(2)).unwrap();
        assert!(id.a2.is_zero() && id.b2.is_zero());
    }

    #[test]
    fn ep_presentations() {
        let d = ep_decompose(&q(&[&["2", "0"], &["0", "0"]])).unwrap();
        assert_eq!(d.a1.idem(), &q(&[&["1", "0"], &["0", "0"]]));
        assert_eq!(d.a.mat(), &q(&[&["2", "0"], &["0", "0"]]));
        assert_eq!(d.a_inv.mat(), &q(&[&["1/2", "0"], &["0", "0"]]));
        assert_eq!(
            ep_decompose(&q(&[&["0", "1"], &["0", "0"]])),
            Err(MatError::NotEp)
        );
    }

    #[test]
    fn kernels() {
        let k = kernel_of(&q(&[&["1", "1"]])).unwrap();
        assert_eq!(k.object.idem(), &q(&[&["1/2", "-1/2"], &["-1/2", "1/2"]]));
        let f = q(&[&["1", "1"]]);
        for m in [q(&[&["1"], &["-1"]]), q(&[&["1"], &["0"]]), q(&[&["2", "0"], &["-2", "0"]])] {
            assert!(k.universal_property(&f, &m));
        }
        assert!(kernel_of(&Q::identity(2)).unwrap().object.is_zero());
        let diag = kernel_of(&q(&[&["1", "0"], &["0", "0"]])).unwrap();
        assert_eq!(diag.object.idem(), &q(&[&["0", "0"], &["0", "1"]]));
    }
}
