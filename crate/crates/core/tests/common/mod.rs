#![allow(dead_code)]

use daggertrace::generators::Sample;
use daggertrace::rig::{Enumerable, Rig};
use daggertrace::{BigInt, BigRational, Bool, Dual, FreeIsometry, Gaussian, Gf2, Matrix, WordRigXY};
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random elements for property tests, for every shipped rig.
pub trait Elem: Rig {
    fn elem(rng: &mut ChaCha8Rng) -> Self;
}

macro_rules! via_sample {
    ($($t:ty),*) => {$(
        impl Elem for $t {
            fn elem(rng: &mut ChaCha8Rng) -> Self {
                if rng.gen_bool(0.2) {
                    Self::zero()
                } else {
                    <$t as Sample>::random_scalar(rng, 4)
                }
            }
        }
    )*};
}

via_sample!(BigRational, BigInt, Gaussian, Dual);

fn pick<R: Enumerable>(rng: &mut ChaCha8Rng, degree: usize) -> R {
    let all = R::small_elements(degree);
    all[rng.gen_range(0..all.len())].clone()
}

macro_rules! via_enumeration {
    ($($t:ty),*) => {$(
        impl Elem for $t {
            fn elem(rng: &mut ChaCha8Rng) -> Self {
                let terms = rng.gen_range(1..=2);
                (0..terms).fold(Self::zero(), |acc, _| acc.plus(&pick::<$t>(rng, 2)))
            }
        }
    )*};
}

via_enumeration!(Gf2, Bool, WordRigXY, FreeIsometry);

pub fn matrix<R: Elem>(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> Matrix<R> {
    Matrix::from_fn(rows, cols, |_, _| R::elem(rng))
}

pub fn dims(rng: &mut ChaCha8Rng, n: usize, max: usize) -> Vec<usize> {
    (0..n).map(|_| rng.gen_range(0..=max)).collect()
}
