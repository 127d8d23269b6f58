mod common;

use common::{rng, Elem};
use daggertrace::rig::{DaggerRig, Enumerable, Rig};
use daggertrace::{BigInt, BigRational, Bool, Dual, FreeIsometry, Gaussian, Gf2, WordRigXY};
use proptest::prelude::*;

fn rig_axioms<R: Elem>(seed: u64) -> Result<(), TestCaseError> {
    let mut r = rng(seed);
    let (a, b, c) = (R::elem(&mut r), R::elem(&mut r), R::elem(&mut r));
    prop_assert_eq!(a.plus(&b).plus(&c), a.plus(&b.plus(&c)));
    prop_assert_eq!(a.plus(&b), b.plus(&a));
    prop_assert_eq!(a.plus(&R::zero()), a.clone());
    prop_assert_eq!(a.times(&b).times(&c), a.times(&b.times(&c)));
    prop_assert_eq!(a.times(&R::one()), a.clone());
    prop_assert_eq!(R::one().times(&a), a.clone());
    prop_assert_eq!(a.times(&R::zero()), R::zero());
    prop_assert_eq!(R::zero().times(&a), R::zero());
    prop_assert_eq!(a.times(&b.plus(&c)), a.times(&b).plus(&a.times(&c)));
    prop_assert_eq!(a.plus(&b).times(&c), a.times(&c).plus(&b.times(&c)));
    if let Some(n) = a.negate().into_exists() {
        prop_assert_eq!(a.plus(&n), R::zero());
    }
    let shown = a.to_string();
    prop_assert_eq!(R::parse(&shown).ok(), Some(a.clone()), "round trip of {}", shown);
    Ok(())
}

fn dagger_laws<R: Elem + DaggerRig>(seed: u64) -> Result<(), TestCaseError> {
    let mut r = rng(seed);
    let (a, b) = (R::elem(&mut r), R::elem(&mut r));
    prop_assert_eq!(a.dagger().dagger(), a.clone());
    prop_assert_eq!(a.times(&b).dagger(), b.dagger().times(&a.dagger()));
    prop_assert_eq!(a.plus(&b).dagger(), a.dagger().plus(&b.dagger()));
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn rationals(seed in any::<u64>()) {
        rig_axioms::<BigRational>(seed)?;
        dagger_laws::<BigRational>(seed)?;
    }

    #[test]
    fn integers(seed in any::<u64>()) {
        rig_axioms::<BigInt>(seed)?;
        dagger_laws::<BigInt>(seed)?;
    }

    #[test]
    fn gaussian(seed in any::<u64>()) {
        rig_axioms::<Gaussian>(seed)?;
        dagger_laws::<Gaussian>(seed)?;
    }

    #[test]
    fn dual(seed in any::<u64>()) {
        rig_axioms::<Dual>(seed)?;
        dagger_laws::<Dual>(seed)?;
    }

    #[test]
    fn word_xy(seed in any::<u64>()) {
        rig_axioms::<WordRigXY>(seed)?;
    }

    #[test]
    fn free_isometry(seed in any::<u64>()) {
        rig_axioms::<FreeIsometry>(seed)?;
        dagger_laws::<FreeIsometry>(seed)?;
    }
}

fn exhaustive<R: Enumerable + DaggerRig>() {
    let all = R::small_elements(0);
    for a in &all {
        assert_eq!(a.dagger().dagger(), *a);
        for b in &all {
            assert_eq!(a.plus(b), b.plus(a));
            assert_eq!(a.times(b).dagger(), b.dagger().times(&a.dagger()));
            for c in &all {
                assert_eq!(a.times(&b.plus(c)), a.times(b).plus(&a.times(c)));
                assert_eq!(a.times(b).times(c), a.times(&b.times(c)));
                assert_eq!(a.plus(b).plus(c), a.plus(&b.plus(c)));
            }
        }
    }
}

#[test]
fn two_element_rigs_exhaustively() {
    exhaustive::<Gf2>();
    exhaustive::<Bool>();
}

#[test]
fn gf2_has_negatives_and_bool_does_not() {
    assert_eq!(Gf2(true).negate().into_exists(), Some(Gf2(true)));
    assert!(Bool(true).negate().is_not_exists());
}
