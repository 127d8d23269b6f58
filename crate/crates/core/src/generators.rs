//! Seeded samplers of unitaries, isometries, contractions and dagger
//! idempotents with exact entries.
//!
//! Sample `index` of a run always comes from its own ChaCha stream, so
//! results depend only on `(seed, index)`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::backend::Backend;
use crate::error::{dims, MatError};
use crate::linalg::field::inverse;
use crate::matcat::{is_dagger_idempotent, is_isometry, is_unitary};
use crate::matrix::Matrix;
use crate::rig::{DaggerRig, Dual, Field, Gaussian, Ring};
use crate::trace::ArrowClass;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GenConfig {
    pub seed: u64,
    pub max_dim: usize,
    /// Bound on numerators and denominators of random scalars.
    pub coeff_bound: u32,
}

impl Default for GenConfig {
    fn default() -> Self {
        GenConfig {
            seed: 0,
            max_dim: 6,
            coeff_bound: 10,
        }
    }
}

impl GenConfig {
    pub fn with_seed(seed: u64) -> Self {
        GenConfig {
            seed,
            ..Self::default()
        }
    }

    /// The random stream of sample `index`.
    pub fn rng(&self, index: u64) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(index);
        rng
    }
}

/// Rigs the samplers know how to populate.
pub trait Sample: Backend + Ring {
    fn random_scalar(rng: &mut ChaCha8Rng, bound: u32) -> Self;

    /// A unit scalar, used for the signs of signed permutations.
    fn random_unit(rng: &mut ChaCha8Rng) -> Self;

    /// A unitary outside the signed permutations, where the rig has them.
    fn random_rotation(_rng: &mut ChaCha8Rng, _n: usize, _bound: u32) -> Option<Matrix<Self>> {
        None
    }
}

fn random_rational(rng: &mut ChaCha8Rng, bound: u32) -> BigRational {
    let b = bound.max(1) as i64;
    let num = rng.gen_range(-b..=b);
    let den = rng.gen_range(1..=b);
    BigRational::new(num.into(), den.into())
}

fn sign(rng: &mut ChaCha8Rng) -> i64 {
    if rng.gen_bool(0.5) {
        1
    } else {
        -1
    }
}

/// `(1 - s)(1 + s)⁻¹`, unitary whenever `s` is skew-adjoint.
pub fn cayley<F: Field + DaggerRig>(s: &Matrix<F>) -> Matrix<F> {
    let n = s.rows();
    let id = Matrix::identity(n);
    let inv = inverse(&id.plus(s)).expect("1 + s is invertible for skew-adjoint s");
    id.minus(s).product(&inv)
}

fn random_skew<F: Sample>(rng: &mut ChaCha8Rng, n: usize, bound: u32, diagonal: impl Fn(&mut ChaCha8Rng) -> F) -> Matrix<F> {
    let mut s = Matrix::zero(n, n);
    for r in 0..n {
        s.set(r, r, diagonal(rng));
        for c in r + 1..n {
            if rng.gen_bool(0.5) {
                let v = F::random_scalar(rng, bound);
                s.set(c, r, v.dagger().neg());
                s.set(r, c, v);
            }
        }
    }
    s
}

impl Sample for BigRational {
    fn random_scalar(rng: &mut ChaCha8Rng, bound: u32) -> Self {
        random_rational(rng, bound)
    }

    fn random_unit(rng: &mut ChaCha8Rng) -> Self {
        BigRational::from_integer(sign(rng).into())
    }

    fn random_rotation(rng: &mut ChaCha8Rng, n: usize, bound: u32) -> Option<Matrix<Self>> {
        Some(cayley(&random_skew(rng, n, bound, |_| BigRational::zero())))
    }
}

impl Sample for Gaussian {
    fn random_scalar(rng: &mut ChaCha8Rng, bound: u32) -> Self {
        let re = random_rational(rng, bound);
        let im = if rng.gen_bool(0.5) {
            random_rational(rng, bound)
        } else {
            BigRational::zero()
        };
        Gaussian::new(re, im)
    }

    fn random_unit(rng: &mut ChaCha8Rng) -> Self {
        let one = BigRational::from_integer(sign(rng).into());
        if rng.gen_bool(0.5) {
            Gaussian::real(one)
        } else {
            Gaussian::new(BigRational::zero(), one)
        }
    }

    fn random_rotation(rng: &mut ChaCha8Rng, n: usize, bound: u32) -> Option<Matrix<Self>> {
        let skew = random_skew(rng, n, bound, |rng| {
            if rng.gen_bool(0.5) {
                Gaussian::new(BigRational::zero(), random_rational(rng, bound))
            } else {
                Gaussian::zero()
            }
        });
        Some(cayley(&skew))
    }
}

impl Sample for BigInt {
    fn random_scalar(rng: &mut ChaCha8Rng, bound: u32) -> Self {
        let b = bound.max(1) as i64;
        BigInt::from(rng.gen_range(-b..=b))
    }

    fn random_unit(rng: &mut ChaCha8Rng) -> Self {
        BigInt::from(sign(rng))
    }
}

impl Sample for Dual {
    fn random_scalar(rng: &mut ChaCha8Rng, bound: u32) -> Self {
        let b = bound.max(1) as i64;
        let nil = if rng.gen_bool(0.5) { rng.gen_range(-b..=b) } else { 0 };
        Dual::new(rng.gen_range(-b..=b), nil)
    }

    fn random_unit(rng: &mut ChaCha8Rng) -> Self {
        Dual::new(sign(rng), 0)
    }
}

/// A random map with roughly half of its entries zero.
pub fn gen_matrix<R: Sample>(rng: &mut ChaCha8Rng, rows: usize, cols: usize, bound: u32) -> Matrix<R> {
    Matrix::from_fn(rows, cols, |_, _| {
        if rng.gen_bool(0.5) {
            R::random_scalar(rng, bound)
        } else {
            R::zero()
        }
    })
}

/// A permutation matrix with unit scalars in place of its ones.
pub fn signed_permutation<R: Sample>(rng: &mut ChaCha8Rng, n: usize) -> Matrix<R> {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let mut m = Matrix::zero(n, n);
    for (c, &r) in perm.iter().enumerate() {
        m.set(r, c, R::random_unit(rng));
    }
    m
}

pub fn gen_unitary<R: Sample>(cfg: &GenConfig, rng: &mut ChaCha8Rng, n: usize) -> Matrix<R> {
    let roll: f64 = rng.gen();
    let u = if n == 0 {
        Matrix::identity(0)
    } else if roll < 0.15 {
        signed_permutation(rng, n)
    } else if roll < 0.35 && n >= 2 {
        let k = rng.gen_range(1..n);
        let sum = gen_unitary(cfg, rng, k).oplus(&gen_unitary(cfg, rng, n - k));
        let p = signed_permutation::<R>(rng, n);
        p.then(&sum).then(&p.dagger())
    } else {
        match R::random_rotation(rng, n, cfg.coeff_bound) {
            Some(c) => {
                if rng.gen_bool(0.5) {
                    c.then(&signed_permutation(rng, n))
                } else {
                    c
                }
            }
            None => signed_permutation(rng, n),
        }
    };
    assert!(is_unitary(&u), "generated unitary fails unitarity");
    u
}

fn check_dim(cfg: &GenConfig, n: usize) -> Result<(), MatError> {
    if n > cfg.max_dim {
        return Err(dims(
            "generator",
            format!("dimension {n} exceeds ambient bound {}", cfg.max_dim),
        ));
    }
    Ok(())
}

/// An isometry `dom -> cod`: the first `dom` columns of a unitary.
pub fn gen_isometry<R: Sample>(cfg: &GenConfig, rng: &mut ChaCha8Rng, dom: usize, cod: usize) -> Result<Matrix<R>, MatError> {
    check_dim(cfg, cod)?;
    if dom > cod {
        return Err(dims(
            "gen_isometry",
            format!("no isometry from {dom} into {cod}"),
        ));
    }
    let u = gen_unitary::<R>(cfg, rng, cod);
    let f = u.submatrix(0..cod, 0..dom);
    assert!(is_isometry(&f));
    Ok(f)
}

pub fn gen_coisometry<R: Sample>(cfg: &GenConfig, rng: &mut ChaCha8Rng, dom: usize, cod: usize) -> Result<Matrix<R>, MatError> {
    Ok(gen_isometry::<R>(cfg, rng, cod, dom)?.dagger())
}

/// A contraction `dom -> cod`: a block of a unitary on an ambient object
/// at least as large as both, occasionally composed with a second one
/// through a smaller object to force rank deficiency.
pub fn gen_contraction<R: Sample>(cfg: &GenConfig, rng: &mut ChaCha8Rng, dom: usize, cod: usize) -> Result<Matrix<R>, MatError> {
    let base = dom.max(cod);
    check_dim(cfg, base)?;
    let ambient = rng.gen_range(base..=cfg.max_dim.max(base));
    let u = gen_unitary::<R>(cfg, rng, ambient);
    let mut f = u.submatrix(0..cod, 0..dom);
    if base > 0 && rng.gen_bool(0.2) {
        let mid = rng.gen_range(0..base);
        let first = gen_contraction_block::<R>(cfg, rng, dom, mid);
        let second = gen_contraction_block::<R>(cfg, rng, mid, cod);
        f = first.then(&second);
    }
    debug_assert!(R::is_contraction(&f).is_exists(), "generated contraction fails");
    Ok(f)
}

fn gen_contraction_block<R: Sample>(cfg: &GenConfig, rng: &mut ChaCha8Rng, dom: usize, cod: usize) -> Matrix<R> {
    let ambient = dom.max(cod);
    gen_unitary::<R>(cfg, rng, ambient).submatrix(0..cod, 0..dom)
}

/// `e†;e` for a random isometry `e` into `n`.
pub fn gen_dagger_idempotent<R: Sample>(cfg: &GenConfig, rng: &mut ChaCha8Rng, n: usize) -> Result<Matrix<R>, MatError> {
    let k = rng.gen_range(0..=n);
    let e = gen_isometry::<R>(cfg, rng, k, n)?;
    let p = e.dagger().then(&e);
    assert!(is_dagger_idempotent(&p));
    Ok(p)
}

/// A member of `class` (any map when `None`), `dom -> cod`.
pub fn gen_in_class<R: Sample>(
    cfg: &GenConfig,
    rng: &mut ChaCha8Rng,
    class: Option<ArrowClass>,
    dom: usize,
    cod: usize,
) -> Result<Matrix<R>, MatError> {
    match class {
        None => Ok(gen_matrix(rng, cod, dom, cfg.coeff_bound)),
        Some(ArrowClass::Unitary) => {
            if dom != cod {
                return Err(dims("gen_in_class", "unitaries are square"));
            }
            check_dim(cfg, dom)?;
            Ok(gen_unitary(cfg, rng, dom))
        }
        Some(ArrowClass::Isometry) => gen_isometry(cfg, rng, dom, cod),
        Some(ArrowClass::Coisometry) => gen_coisometry(cfg, rng, dom, cod),
        Some(ArrowClass::Contraction) => gen_contraction(cfg, rng, dom, cod),
    }
}

impl GenConfig {
    /// Shapes `(a, b, x)` for a trace problem `a ⊕ x -> b ⊕ x` in `class`,
    /// with `a + x, b + x <= max_dim` and `x <= max_x`.
    pub fn trace_shape(&self, rng: &mut ChaCha8Rng, class: Option<ArrowClass>, max_x: usize) -> (usize, usize, usize) {
        let x = rng.gen_range(0..=max_x.min(self.max_dim));
        let room = self.max_dim - x;
        let a = rng.gen_range(0..=room);
        let b = match class {
            Some(ArrowClass::Unitary) => a,
            Some(ArrowClass::Isometry) => rng.gen_range(a..=room),
            Some(ArrowClass::Coisometry) => rng.gen_range(0..=a),
            _ => rng.gen_range(0..=room),
        };
        (a, b, x)
    }
}
