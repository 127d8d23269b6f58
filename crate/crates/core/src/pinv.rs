//! Moore-Penrose pseudoinverses, EP maps and the projections they induce.
//!
//! For `f: A -> B` a pseudoinverse is `g: B -> A` with `f;g;f = f`,
//! `g;f;g = g` and both `f;g`, `g;f` self-adjoint (`;` is diagram order).

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::backend::Backend;
use crate::error::{dims, MatError};
use crate::linalg::field::{full_rank_factorization, inverse, rank, solve};
use crate::matrix::Matrix;
use crate::rig::{as_integer, Bool, DaggerRig, Dual, Enumerable, Field, Rig};
use crate::verdict::{Certificate, Verdict};

/// How a pseudoinverse verdict was reached.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PinvMethod {
    FullRankFactorization,
    FractionFieldLift,
    DaggerCandidate,
    Exhaustive,
    BoundedDegree,
}

impl PinvMethod {
    pub fn tag(self) -> &'static str {
        match self {
            PinvMethod::FullRankFactorization => "full-rank-factorization",
            PinvMethod::FractionFieldLift => "fraction-field-lift",
            PinvMethod::DaggerCandidate => "dagger-candidate",
            PinvMethod::Exhaustive => "exhaustive",
            PinvMethod::BoundedDegree => "bounded-degree",
        }
    }
}

impl fmt::Display for PinvMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PinvResult<R: Rig> {
    pub verdict: Verdict<Matrix<R>>,
    pub method: PinvMethod,
}

impl<R: Rig> PinvResult<R> {
    fn new(verdict: Verdict<Matrix<R>>, method: PinvMethod) -> Self {
        PinvResult { verdict, method }
    }
}

/// Pseudoinverse of `f`, by the procedure registered for its rig.
pub fn pinv<R: Backend>(f: &Matrix<R>) -> PinvResult<R> {
    let out = R::pinv(f);
    if let Verdict::Exists(g) = &out.verdict {
        debug_assert!(verify_penrose(f, g), "pseudoinverse failed Penrose check");
    }
    out
}

fn shapes_fit<R: Rig>(f: &Matrix<R>, g: &Matrix<R>) -> bool {
    f.rows() == g.cols() && f.cols() == g.rows()
}

/// The four defining equations.
pub fn penrose_equations<R: DaggerRig>(f: &Matrix<R>, g: &Matrix<R>) -> bool {
    if !shapes_fit(f, g) {
        return false;
    }
    let fg = f.then(g);
    let gf = g.then(f);
    fg.then(f) == *f && gf.then(g) == *g && fg.is_self_adjoint() && gf.is_self_adjoint()
}

/// The equivalent characterization `f = f;f†;g†`, `f = g†;f†;f`,
/// `g = g;g†;f†`, `g = f†;g†;g`.
pub fn penrose_dagger_equations<R: DaggerRig>(f: &Matrix<R>, g: &Matrix<R>) -> bool {
    if !shapes_fit(f, g) {
        return false;
    }
    let fd = f.dagger();
    let gd = g.dagger();
    f.then(&fd).then(&gd) == *f
        && gd.then(&fd).then(f) == *f
        && g.then(&gd).then(&fd) == *g
        && fd.then(&gd).then(g) == *g
}

/// Whether `g` is a pseudoinverse of `f`; both characterizations are
/// evaluated and must agree.
pub fn verify_penrose<R: DaggerRig>(f: &Matrix<R>, g: &Matrix<R>) -> bool {
    let first = penrose_equations(f, g);
    let second = penrose_dagger_equations(f, g);
    assert_eq!(
        first, second,
        "Penrose characterizations disagree on f = {f}, g = {g}"
    );
    first
}

/// Over a field: `f = C R` with full-rank factors gives
/// `f⁺ = R†(RR†)⁻¹(C†C)⁻¹C†` whenever both Gram matrices are invertible.
pub fn field_pinv<F: Field + DaggerRig>(f: &Matrix<F>) -> PinvResult<F> {
    let (c, r) = full_rank_factorization(f);
    let cd = c.dagger();
    let rd = r.dagger();
    let verdict = match (inverse(&cd.product(&c)), inverse(&r.product(&rd))) {
        (Some(ci), Some(ri)) => Verdict::Exists(rd.product(&ri).product(&ci).product(&cd)),
        _ => Verdict::NotExists(Certificate::RankCondition {
            rank: c.cols(),
            rank_domain_gram: rank(&f.then(&f.dagger())),
            rank_codomain_gram: rank(&f.dagger().then(f)),
        }),
    };
    PinvResult::new(verdict, PinvMethod::FullRankFactorization)
}

fn lift_z(m: &Matrix<BigInt>) -> Matrix<BigRational> {
    m.map(|z| BigRational::from_integer(z.clone()))
}

fn first_non_integer(m: &Matrix<BigRational>) -> Option<(usize, usize)> {
    (0..m.rows())
        .flat_map(|r| (0..m.cols()).map(move |c| (r, c)))
        .find(|&(r, c)| !m.get(r, c).is_integer())
}

fn strings<T: fmt::Display>(rows: usize, cols: usize, f: impl Fn(usize, usize) -> T) -> Vec<Vec<String>> {
    (0..rows)
        .map(|r| (0..cols).map(|c| f(r, c).to_string()).collect())
        .collect()
}

/// Over the integers: the rational pseudoinverse is the only candidate, so
/// it either has integer entries or there is none.
pub fn integer_pinv(f: &Matrix<BigInt>) -> PinvResult<BigInt> {
    let lifted = field_pinv(&lift_z(f))
        .verdict
        .into_exists()
        .expect("every rational matrix has a pseudoinverse");
    let verdict = match first_non_integer(&lifted) {
        None => Verdict::Exists(lifted.map(|q| as_integer(q).expect("integral"))),
        Some((row, col)) => Verdict::NotExists(Certificate::NotInRig {
            lifted: strings(lifted.rows(), lifted.cols(), |r, c| lifted.get(r, c)),
            row,
            col,
        }),
    };
    PinvResult::new(verdict, PinvMethod::FractionFieldLift)
}

struct LiftedDual {
    a: BigRational,
    b: BigRational,
}

impl fmt::Display for LiftedDual {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a.is_zero(), self.b.is_zero()) {
            (_, true) => write!(f, "{}", self.a),
            (true, false) => write!(f, "{}x", self.b),
            (false, false) if self.b < BigRational::zero() => write!(f, "{}{}x", self.a, self.b),
            (false, false) => write!(f, "{}+{}x", self.a, self.b),
        }
    }
}

/// First-order Penrose residual for `G = G0 + G1 x` given `F = F0 + F1 x`
/// and the constant part `G0 = F0⁺`, in textbook products.
fn dual_residual(
    f0: &Matrix<BigRational>,
    f1: &Matrix<BigRational>,
    g0: &Matrix<BigRational>,
    g1: &Matrix<BigRational>,
) -> Vec<BigRational> {
    let e1 = f0
        .product(g1)
        .product(f0)
        .plus(&f1.product(g0).product(f0))
        .plus(&f0.product(g0).product(f1))
        .minus(f1);
    let e2 = g0
        .product(f0)
        .product(g1)
        .plus(&g0.product(f1).product(g0))
        .plus(&g1.product(f0).product(g0))
        .minus(g1);
    let s = f0.product(g1).plus(&f1.product(g0));
    let t = g1.product(f0).plus(&g0.product(f1));
    let e3 = s.minus(&s.transpose());
    let e4 = t.minus(&t.transpose());
    [e1, e2, e3, e4]
        .into_iter()
        .flat_map(|m| m.entries().to_vec())
        .collect()
}

/// Over the dual numbers: `G0 = F0⁺` over the rationals, then the
/// coefficients of `x` in the Penrose equations are affine in `G1`. A
/// solution is unique when it exists; it must then be integral.
pub fn dual_pinv(f: &Matrix<Dual>) -> PinvResult<Dual> {
    let method = PinvMethod::FractionFieldLift;
    let f0 = f.map(|d| BigRational::from_integer(d.a.clone()));
    let f1 = f.map(|d| BigRational::from_integer(d.b.clone()));
    let g0 = field_pinv(&f0)
        .verdict
        .into_exists()
        .expect("every rational matrix has a pseudoinverse");
    let (n, m) = (f.cols(), f.rows());
    let zero = Matrix::zero(n, m);
    let base = dual_residual(&f0, &f1, &g0, &zero);
    let mut columns = Vec::with_capacity(n * m);
    for k in 0..n * m {
        let mut unit = zero.clone();
        unit.set(k / m, k % m, BigRational::one());
        let probe = dual_residual(&f0, &f1, &g0, &unit);
        columns.push(
            probe
                .iter()
                .zip(&base)
                .map(|(p, b)| p - b)
                .collect::<Vec<_>>(),
        );
    }
    let eqs = base.len();
    let system = Matrix::from_fn(eqs, n * m, |i, k| columns[k][i].clone());
    let rhs = Matrix::from_fn(eqs, 1, |i, _| -base[i].clone());
    let g1 = match solve(&system, &rhs) {
        Ok(v) => Matrix::from_fn(n, m, |r, c| v.get(r * m + c, 0).clone()),
        Err((row, _)) => {
            return PinvResult::new(
                Verdict::NotExists(Certificate::LiftInconsistent {
                    detail: format!(
                        "x-coefficient equations are inconsistent (reduced row {row}) over the constant part {g0}"
                    ),
                }),
                method,
            )
        }
    };
    let bad = first_non_integer(&g0).or_else(|| first_non_integer(&g1));
    let verdict = match bad {
        None => Verdict::Exists(Matrix::from_fn(n, m, |r, c| {
            Dual::new(
                as_integer(g0.get(r, c)).expect("integral"),
                as_integer(g1.get(r, c)).expect("integral"),
            )
        })),
        Some((row, col)) => Verdict::NotExists(Certificate::NotInRig {
            lifted: strings(n, m, |r, c| LiftedDual {
                a: g0.get(r, c).clone(),
                b: g1.get(r, c).clone(),
            }),
            row,
            col,
        }),
    };
    PinvResult::new(verdict, method)
}

/// Largest `rows * cols` for which Boolean pseudoinverses are searched
/// exhaustively.
pub const BOOL_EXHAUSTIVE_ENTRIES: usize = 16;

/// Every `rows x cols` Boolean matrix, in binary counting order.
pub fn all_bool_matrices(rows: usize, cols: usize) -> impl Iterator<Item = Matrix<Bool>> {
    let n = rows * cols;
    assert!(n < 64, "too many entries to enumerate");
    (0u64..1 << n).map(move |bits| Matrix::from_fn(rows, cols, |r, c| Bool(bits >> (r * cols + c) & 1 == 1)))
}

/// Over the Booleans: the dagger is tried first, then every candidate when
/// the matrix is small enough.
pub fn bool_pinv(f: &Matrix<Bool>) -> PinvResult<Bool> {
    let fd = f.dagger();
    if verify_penrose(f, &fd) {
        return PinvResult::new(Verdict::Exists(fd), PinvMethod::DaggerCandidate);
    }
    let n = f.rows() * f.cols();
    if n > BOOL_EXHAUSTIVE_ENTRIES {
        return PinvResult::new(
            Verdict::Unknown(format!(
                "dagger candidate fails and {n} entries exceed the exhaustive bound {BOOL_EXHAUSTIVE_ENTRIES}"
            )),
            PinvMethod::Exhaustive,
        );
    }
    let verdict = match all_bool_matrices(f.cols(), f.rows()).find(|g| verify_penrose(f, g)) {
        Some(g) => Verdict::Exists(g),
        None => Verdict::NotExists(Certificate::ExhaustedSearch {
            candidates: 1u64 << n,
        }),
    };
    PinvResult::new(verdict, PinvMethod::Exhaustive)
}

/// Candidate evaluations allowed in [`bounded_pinv`].
pub const PINV_SEARCH_BUDGET: u64 = 100_000;

/// Dagger candidate, then every matrix with entries among the small
/// elements up to the degree of `f`; never certifies absence.
pub fn bounded_pinv<R: DaggerRig + Enumerable>(f: &Matrix<R>) -> PinvResult<R> {
    let fd = f.dagger();
    if verify_penrose(f, &fd) {
        return PinvResult::new(Verdict::Exists(fd), PinvMethod::DaggerCandidate);
    }
    let degree = f.degree().max(1);
    let cands = R::small_elements(degree);
    let (rows, cols) = (f.cols(), f.rows());
    let slots = rows * cols;
    let mut idx = vec![0usize; slots];
    let mut budget = PINV_SEARCH_BUDGET;
    loop {
        if budget == 0 {
            return PinvResult::new(
                Verdict::Unknown(format!(
                    "no pseudoinverse among {PINV_SEARCH_BUDGET} candidates of degree <= {degree}"
                )),
                PinvMethod::BoundedDegree,
            );
        }
        budget -= 1;
        let g = Matrix::from_fn(rows, cols, |r, c| cands[idx[r * cols + c]].clone());
        if verify_penrose(f, &g) {
            return PinvResult::new(Verdict::Exists(g), PinvMethod::BoundedDegree);
        }
        let mut k = 0;
        loop {
            if k == slots {
                return PinvResult::new(
                    Verdict::Unknown(format!(
                        "no pseudoinverse with entries of degree <= {degree}"
                    )),
                    PinvMethod::BoundedDegree,
                );
            }
            idx[k] += 1;
            if idx[k] < cands.len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
    }
}

/// EP: pseudoinvertible with `f;f⁺ = f⁺;f`. The witness is `f⁺`.
pub fn is_ep<R: Backend>(f: &Matrix<R>) -> Verdict<Matrix<R>> {
    if !f.is_square() {
        return Verdict::NotExists(Certificate::Structural {
            detail: format!("{}x{} is not an endomorphism", f.rows(), f.cols()),
        });
    }
    match pinv(f).verdict {
        Verdict::Exists(g) => {
            let left = f.then(&g);
            let right = g.then(f);
            if left == right {
                Verdict::Exists(g)
            } else {
                Verdict::NotExists(Certificate::Structural {
                    detail: format!("f;f+ = {left} differs from f+;f = {right}"),
                })
            }
        }
        Verdict::NotExists(c) => Verdict::NotExists(Certificate::because("pseudoinverse", c)),
        Verdict::Unknown(r) => Verdict::Unknown(format!("pseudoinverse: {r}")),
    }
}

/// The dagger idempotents induced by a pseudoinverse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Projections<R: Rig> {
    /// `f;f⁺` on the domain.
    pub coimage: Matrix<R>,
    /// `f⁺;f` on the codomain.
    pub image: Matrix<R>,
    /// `id - coimage`, when the rig can subtract it.
    pub kernel: Option<Matrix<R>>,
    /// `id - image`, when the rig can subtract it.
    pub cokernel: Option<Matrix<R>>,
}

fn complement<R: Rig>(p: &Matrix<R>) -> Option<Matrix<R>> {
    p.try_negate()
        .into_exists()
        .map(|n| Matrix::identity(p.rows()).plus(&n))
}

pub fn projections<R: Backend>(f: &Matrix<R>) -> Result<Projections<R>, MatError> {
    let g = match pinv(f).verdict {
        Verdict::Exists(g) => g,
        other => return Err(MatError::PinvMissing(other.tag().to_string())),
    };
    Ok(projections_with(f, &g))
}

/// Projections from a known pseudoinverse `g` of `f`.
pub fn projections_with<R: DaggerRig>(f: &Matrix<R>, g: &Matrix<R>) -> Projections<R> {
    let coimage = f.then(g);
    let image = g.then(f);
    Projections {
        kernel: complement(&coimage),
        cokernel: complement(&image),
        coimage,
        image,
    }
}

/// `(f;g)⁺ = g⁺;f⁺` when the image of `f` is the coimage of `g`. Otherwise
/// the candidate is reported as `Unknown`, with its Penrose status, since the
/// condition is only sufficient.
pub fn pinv_compose<R: Backend>(f: &Matrix<R>, g: &Matrix<R>) -> Result<Verdict<Matrix<R>>, MatError> {
    let fg = f.compose(g)?;
    let fp = match pinv(f).verdict {
        Verdict::Exists(p) => p,
        Verdict::NotExists(c) => return Ok(Verdict::NotExists(Certificate::because("pseudoinverse of f", c))),
        Verdict::Unknown(r) => return Ok(Verdict::Unknown(format!("pseudoinverse of f: {r}"))),
    };
    let gp = match pinv(g).verdict {
        Verdict::Exists(p) => p,
        Verdict::NotExists(c) => return Ok(Verdict::NotExists(Certificate::because("pseudoinverse of g", c))),
        Verdict::Unknown(r) => return Ok(Verdict::Unknown(format!("pseudoinverse of g: {r}"))),
    };
    let candidate = gp.then(&fp);
    if fp.then(f) == g.then(&gp) {
        assert!(verify_penrose(&fg, &candidate));
        assert_eq!(candidate.then(&fg), gp.then(g));
        assert_eq!(fg.then(&candidate), f.then(&fp));
        return Ok(Verdict::Exists(candidate));
    }
    let status = if verify_penrose(&fg, &candidate) {
        "passes"
    } else {
        "fails"
    };
    Ok(Verdict::Unknown(format!(
        "image of f differs from coimage of g; candidate g+;f+ = {candidate} {status} the Penrose equations"
    )))
}

/// Whether `m` is mono, where that can be decided.
pub fn is_mono<R: Backend>(m: &Matrix<R>) -> Option<bool> {
    R::is_mono(m)
}

/// The retraction `m⁺` of a mono `m`, so that `m;m⁺ = id`.
pub fn split_mono_retraction<R: Backend>(m: &Matrix<R>) -> Result<Verdict<Matrix<R>>, MatError> {
    if is_mono(m) == Some(false) {
        return Err(MatError::NotMono);
    }
    match pinv(m).verdict {
        Verdict::Exists(g) => {
            if m.then(&g).is_identity() {
                Ok(Verdict::Exists(g))
            } else {
                Err(MatError::NotMono)
            }
        }
        Verdict::NotExists(c) => Ok(Verdict::NotExists(Certificate::because("pseudoinverse", c))),
        Verdict::Unknown(r) => Ok(Verdict::Unknown(r)),
    }
}

/// Pseudoinverse of the column of `n` ones over the rationals: the row of
/// `1/n`.
pub fn diagonal_pinv_demo(n: usize) -> Result<Matrix<BigRational>, MatError> {
    if n == 0 {
        return Err(dims("diagonal_pinv_demo", "n must be at least 1"));
    }
    let column = Matrix::from_fn(n, 1, |_, _| BigRational::one());
    let g = pinv(&column)
        .verdict
        .into_exists()
        .expect("rational pseudoinverse");
    let expected = Matrix::from_fn(1, n, |_, _| BigRational::new(1.into(), BigInt::from(n)));
    assert_eq!(g, expected);
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rig::{FreeIsometry, Gaussian, Gf2};

    fn q(rows: &[&[&str]]) -> Matrix<BigRational> {
        Matrix::parse_rows(rows).unwrap()
    }

    #[test]
    fn invertible_rational() {
        let f = q(&[&["1", "1"], &["0", "1"]]);
        let r = pinv(&f);
        assert_eq!(r.method, PinvMethod::FullRankFactorization);
        assert_eq!(r.verdict, Verdict::Exists(q(&[&["1", "-1"], &["0", "1"]])));
    }

    #[test]
    fn column_of_ones() {
        let f = q(&[&["1"], &["1"]]);
        let g = q(&[&["1/2", "1/2"]]);
        assert!(verify_penrose(&f, &g));
        assert_eq!(pinv(&f).verdict, Verdict::Exists(g));
        let z = Matrix::<BigInt>::parse_rows(&[&["1"], &["1"]]).unwrap();
        let r = pinv(&z);
        assert_eq!(r.method, PinvMethod::FractionFieldLift);
        match r.verdict {
            Verdict::NotExists(Certificate::NotInRig { lifted, row, col }) => {
                assert_eq!(lifted, vec![vec!["1/2".to_string(), "1/2".to_string()]]);
                assert_eq!((row, col), (0, 0));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn nilpotent_is_not_its_own_pinv() {
        let f = q(&[&["0", "1"], &["0", "0"]]);
        assert!(!verify_penrose(&f, &f));
        assert_eq!(pinv(&f).verdict, Verdict::Exists(f.dagger()));
        let v = is_ep(&f);
        assert!(v.is_not_exists());
        let p = projections(&f).unwrap();
        assert_ne!(p.coimage, p.image);
    }

    #[test]
    fn boolean_idempotent() {
        let f = Matrix::<Bool>::parse_rows(&[&["1", "0"], &["1", "0"]]).unwrap();
        let r = pinv(&f);
        assert_eq!(r.method, PinvMethod::DaggerCandidate);
        let g = Matrix::<Bool>::parse_rows(&[&["1", "1"], &["0", "0"]]).unwrap();
        assert_eq!(r.verdict, Verdict::Exists(g));
    }

    #[test]
    fn boolean_without_pinv() {
        // [[1,1],[0,1]] is invertible only over a ring.
        let f = Matrix::<Bool>::parse_rows(&[&["1", "1"], &["0", "1"]]).unwrap();
        let r = pinv(&f);
        assert_eq!(r.method, PinvMethod::Exhaustive);
        assert_eq!(
            r.verdict,
            Verdict::NotExists(Certificate::ExhaustedSearch { candidates: 16 })
        );
    }

    #[test]
    fn gf2_rank_condition() {
        let f = Matrix::<Gf2>::parse_rows(&[&["1", "1"]]).unwrap();
        assert!(matches!(
            pinv(&f).verdict,
            Verdict::NotExists(Certificate::RankCondition { rank: 1, .. })
        ));
        let g = Matrix::<Gf2>::parse_rows(&[&["1", "1", "1"]]).unwrap();
        assert_eq!(pinv(&g).verdict, Verdict::Exists(g.dagger()));
    }

    #[test]
    fn dual_numbers() {
        let one_plus_x = Matrix::<Dual>::parse_rows(&[&["1+x"]]).unwrap();
        let inv = Matrix::<Dual>::parse_rows(&[&["1-x"]]).unwrap();
        assert_eq!(pinv(&one_plus_x).verdict, Verdict::Exists(inv));
        let x = Matrix::<Dual>::parse_rows(&[&["x"]]).unwrap();
        assert!(matches!(
            pinv(&x).verdict,
            Verdict::NotExists(Certificate::LiftInconsistent { .. })
        ));
        let two = Matrix::<Dual>::parse_rows(&[&["2"]]).unwrap();
        match pinv(&two).verdict {
            Verdict::NotExists(Certificate::NotInRig { lifted, .. }) => {
                assert_eq!(lifted[0][0], "1/2")
            }
            other => panic!("{other:?}"),
        }
        let zero = Matrix::<Dual>::zero(2, 1);
        assert_eq!(pinv(&zero).verdict, Verdict::Exists(Matrix::zero(1, 2)));
    }

    #[test]
    fn free_isometry_dagger_candidate() {
        let x = Matrix::<FreeIsometry>::parse_rows(&[&["x"]]).unwrap();
        let r = pinv(&x);
        assert_eq!(r.method, PinvMethod::DaggerCandidate);
        assert_eq!(r.verdict, Verdict::Exists(x.dagger()));
    }

    #[test]
    fn gaussian_rank_one() {
        let f = Matrix::<Gaussian>::parse_rows(&[&["1", "i"]]).unwrap();
        let g = pinv(&f).verdict.into_exists().unwrap();
        assert_eq!(g, Matrix::parse_rows(&[&["1/2"], &["-1/2i"]]).unwrap());
    }

    #[test]
    fn projections_of_column() {
        let p = projections(&q(&[&["1"], &["1"]])).unwrap();
        assert_eq!(p.coimage, q(&[&["1"]]));
        assert_eq!(p.image, q(&[&["1/2", "1/2"], &["1/2", "1/2"]]));
        assert_eq!(p.kernel, Some(q(&[&["0"]])));
        let z = projections(&Matrix::<BigRational>::zero(2, 3)).unwrap();
        assert_eq!(z.kernel, Some(Matrix::identity(3)));
        assert_eq!(z.cokernel, Some(Matrix::identity(2)));
    }

    #[test]
    fn compose_counterexamples() {
        let p = q(&[&["1", "0"], &["0", "0"]]);
        let a = q(&[&["1", "1"], &["0", "1"]]);
        let v = pinv_compose(&p, &a).unwrap();
        assert!(v.is_unknown());
        assert_eq!(pinv(&p.then(&a)).verdict, Verdict::Exists(p.clone()));
        let a_inv = pinv(&a).verdict.into_exists().unwrap();
        assert_eq!(a_inv.then(&p), q(&[&["1", "-1"], &["0", "0"]]));

        let b = Matrix::<Bool>::parse_rows(&[&["1", "0"], &["1", "0"]]).unwrap();
        let v = pinv_compose(&b, &b).unwrap();
        assert!(matches!(v, Verdict::Unknown(ref r) if r.contains("passes")));
        let id = Matrix::<BigRational>::identity(2);
        assert_eq!(pinv_compose(&id, &id).unwrap(), Verdict::Exists(id));
    }

    #[test]
    fn retractions() {
        let e = q(&[&["1"], &["0"]]);
        assert_eq!(split_mono_retraction(&e).unwrap(), Verdict::Exists(q(&[&["1", "0"]])));
        let ones = q(&[&["1"], &["1"]]);
        assert_eq!(split_mono_retraction(&ones).unwrap(), Verdict::Exists(q(&[&["1/2", "1/2"]])));
        let z = Matrix::<BigInt>::parse_rows(&[&["1"], &["1"]]).unwrap();
        assert_eq!(is_mono(&z), Some(true));
        assert!(split_mono_retraction(&z).unwrap().is_not_exists());
        let split = Matrix::<BigInt>::parse_rows(&[&["1", "0"]]).unwrap();
        assert!(z.then(&split).is_identity());
        assert!(matches!(split_mono_retraction(&q(&[&["1", "1"]])), Err(MatError::NotMono)));
    }

    #[test]
    fn diagonal_demo() {
        assert_eq!(diagonal_pinv_demo(1).unwrap(), q(&[&["1"]]));
        assert_eq!(diagonal_pinv_demo(2).unwrap(), q(&[&["1/2", "1/2"]]));
        assert_eq!(diagonal_pinv_demo(3).unwrap(), q(&[&["1/3", "1/3", "1/3"]]));
    }
}
