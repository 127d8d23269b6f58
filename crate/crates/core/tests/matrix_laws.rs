mod common;

use common::{dims, matrix, rng, Elem};
use daggertrace::rig::DaggerRig;
use daggertrace::{BigInt, BigRational, Bool, Dual, FreeIsometry, Gaussian, Gf2, Matrix, WordRigXY};
use proptest::prelude::*;

fn category_laws<R: Elem>(seed: u64) -> Result<(), TestCaseError> {
    let mut r = rng(seed);
    let d = dims(&mut r, 6, 3);
    let f: Matrix<R> = matrix(&mut r, d[1], d[0]);
    let g: Matrix<R> = matrix(&mut r, d[2], d[1]);
    let h: Matrix<R> = matrix(&mut r, d[3], d[2]);
    prop_assert_eq!(f.then(&g).then(&h), f.then(&g.then(&h)));
    prop_assert_eq!(Matrix::identity(d[0]).then(&f), f.clone());
    prop_assert_eq!(f.then(&Matrix::identity(d[1])), f.clone());
    prop_assert_eq!(f.then(&g), g.product(&f));

    // Additive enrichment.
    let f2: Matrix<R> = matrix(&mut r, d[1], d[0]);
    let f3: Matrix<R> = matrix(&mut r, d[1], d[0]);
    prop_assert_eq!(f.plus(&f2).plus(&f3), f.plus(&f2.plus(&f3)));
    prop_assert_eq!(f.plus(&f2), f2.plus(&f));
    prop_assert_eq!(f.plus(&Matrix::zero(d[1], d[0])), f.clone());
    prop_assert_eq!(f.plus(&f2).then(&g), f.then(&g).plus(&f2.then(&g)));
    let g2: Matrix<R> = matrix(&mut r, d[2], d[1]);
    prop_assert_eq!(f.then(&g.plus(&g2)), f.then(&g).plus(&f.then(&g2)));
    prop_assert!(f.then(&Matrix::zero(d[2], d[1])).is_zero());

    // Biproduct: oplus is a bifunctor with the evident block form.
    let k: Matrix<R> = matrix(&mut r, d[4], d[5]);
    let k2: Matrix<R> = matrix(&mut r, d[3], d[4]);
    prop_assert_eq!(f.oplus(&k).then(&g.oplus(&k2)), f.then(&g).oplus(&k.then(&k2)));
    prop_assert!(Matrix::<R>::identity(d[0]).oplus(&Matrix::identity(d[5])).is_identity());
    prop_assert_eq!(
        f.oplus(&k),
        Matrix::blocks2(&f, &Matrix::zero(d[1], d[5]), &Matrix::zero(d[4], d[0]), &k)
    );
    let s = Matrix::<R>::swap(d[0], d[5]);
    prop_assert_eq!(s.then(&Matrix::swap(d[5], d[0])), Matrix::identity(d[0] + d[5]));
    prop_assert_eq!(f.oplus(&k).then(&Matrix::swap(d[1], d[4])), Matrix::swap(d[0], d[5]).then(&k.oplus(&f)));
    Ok(())
}

fn dagger_laws<R: Elem + DaggerRig>(seed: u64) -> Result<(), TestCaseError> {
    let mut r = rng(seed);
    let d = dims(&mut r, 4, 3);
    let f: Matrix<R> = matrix(&mut r, d[1], d[0]);
    let g: Matrix<R> = matrix(&mut r, d[2], d[1]);
    let k: Matrix<R> = matrix(&mut r, d[3], d[2]);
    prop_assert_eq!(f.dagger().dagger(), f.clone());
    prop_assert_eq!(f.then(&g).dagger(), g.dagger().then(&f.dagger()));
    prop_assert_eq!(f.oplus(&k).dagger(), f.dagger().oplus(&k.dagger()));
    let f2: Matrix<R> = matrix(&mut r, d[1], d[0]);
    prop_assert_eq!(f.plus(&f2).dagger(), f.dagger().plus(&f2.dagger()));
    prop_assert!(Matrix::<R>::identity(d[0]).dagger().is_identity());
    Ok(())
}

macro_rules! dagger_rig_cases {
    ($($name:ident: $t:ty;)*) => {
        proptest! {
            #![proptest_config(ProptestConfig::with_cases(64))]
            $(
                #[test]
                fn $name(seed in any::<u64>()) {
                    category_laws::<$t>(seed)?;
                    dagger_laws::<$t>(seed)?;
                }
            )*
        }
    };
}

dagger_rig_cases! {
    rationals: BigRational;
    integers: BigInt;
    gaussian: Gaussian;
    dual: Dual;
    gf2: Gf2;
    boolean: Bool;
    free_isometry: FreeIsometry;
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn word_xy(seed in any::<u64>()) {
        category_laws::<WordRigXY>(seed)?;
    }
}
