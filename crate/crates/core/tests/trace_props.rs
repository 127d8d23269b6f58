mod common;

use common::{matrix, rng};
use daggertrace::backend::is_contraction;
use daggertrace::generators::{gen_contraction, gen_in_class, gen_unitary, GenConfig, Sample};
use daggertrace::linalg::field::nullspace;
use daggertrace::pinv::{is_ep, projections};
use daggertrace::trace::{
    is_kernel_image_witness, kernel_image_trace, kernel_image_value_i, kernel_image_value_k,
    pseudotrace, ArrowClass, TraceProblem,
};
use daggertrace::{BigInt, BigRational, Dual, Gaussian, Matrix, Verdict};
use proptest::prelude::*;
use rand::Rng;

type Q = Matrix<BigRational>;

/// A problem whose `id - f_XX` is singular but whose off-diagonal blocks
/// factor through it.
fn singular_problem(seed: u64) -> TraceProblem<BigRational> {
    let mut r = rng(seed);
    let x = r.gen_range(1..=3);
    let rank = r.gen_range(0..x);
    let (a, b) = (r.gen_range(0..=2), r.gen_range(0..=2));
    let m: Q = matrix::<BigRational>(&mut r, rank, x).then(&matrix(&mut r, x, rank));
    let f_ax = matrix::<BigRational>(&mut r, x, a).then(&m);
    let f_xb = m.then(&matrix(&mut r, b, x));
    let f_ab: Q = matrix(&mut r, b, a);
    let f = Matrix::blocks2(&f_ab, &f_xb, &f_ax, &Matrix::identity(x).minus(&m));
    TraceProblem::new(f, a, b, x).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn witness_independence(seed in any::<u64>()) {
        let tp = singular_problem(seed);
        let res = kernel_image_trace(&tp);
        let (i, k) = res.witnesses.clone().expect("factoring blocks give witnesses");
        let value = res.verdict.into_exists().unwrap();
        let m = tp.one_minus_f_xx().into_exists().unwrap();
        // Perturb each witness by something that `id - f_XX` annihilates.
        let mut r = rng(seed ^ 0x5eed);
        let right_null = nullspace(&m);
        let left_null = nullspace(&m.transpose()).transpose();
        let i2 = i.plus(&matrix::<BigRational>(&mut r, right_null.cols(), tp.a()).then(&right_null));
        let k2 = k.plus(&left_null.then(&matrix::<BigRational>(&mut r, tp.b(), left_null.rows())));
        prop_assert!(is_kernel_image_witness(&tp, &i2, &k2));
        prop_assert_eq!(kernel_image_value_i(&tp, &i2), value.clone());
        prop_assert_eq!(kernel_image_value_k(&tp, &k2), value.clone());
        prop_assert_eq!(pseudotrace(&tp).verdict, Verdict::Exists(value));
    }

    #[test]
    fn contractions_are_traced(seed in any::<u64>()) {
        contraction_totality::<BigRational>(seed)?;
        contraction_totality::<Gaussian>(seed)?;
        contraction_totality::<BigInt>(seed)?;
    }

    #[test]
    fn pseudotrace_is_total_over_subfields(seed in any::<u64>()) {
        let mut r = rng(seed);
        let (a, b, x) = (r.gen_range(0..=2), r.gen_range(0..=2), r.gen_range(0..=3));
        let q: Q = matrix(&mut r, b + x, a + x);
        prop_assert!(pseudotrace(&TraceProblem::new(q, a, b, x).unwrap()).verdict.is_exists());
        let g: Matrix<Gaussian> = matrix(&mut r, b + x, a + x);
        prop_assert!(pseudotrace(&TraceProblem::new(g, a, b, x).unwrap()).verdict.is_exists());
    }

    #[test]
    fn witnesses_are_checked_over_integers_and_duals(seed in any::<u64>()) {
        witnesses_valid::<BigInt>(seed)?;
        witnesses_valid::<Dual>(seed)?;
    }

    #[test]
    fn contractions_closed_under_composition_and_sums(seed in any::<u64>()) {
        closure::<BigRational>(seed)?;
        closure::<Gaussian>(seed)?;
        closure::<BigInt>(seed)?;
    }

    #[test]
    fn fixed_points_are_two_sided(seed in any::<u64>()) {
        let cfg = GenConfig::with_seed(seed);
        let mut r = cfg.rng(0);
        let n = r.gen_range(1..=4);
        let fixed = r.gen_range(1..=n);
        let u = gen_unitary::<BigRational>(&cfg, &mut r, n);
        let c = gen_contraction::<BigRational>(&cfg, &mut r, n - fixed, n - fixed).unwrap();
        let f = u.dagger().then(&Matrix::identity(fixed).oplus(&c)).then(&u);
        let p = projections(&Matrix::identity(n).minus(&f)).unwrap().kernel.unwrap();
        prop_assert!(!p.is_zero());
        prop_assert_eq!(p.then(&f).then(&p), p.clone());
        prop_assert_eq!(p.then(&f), p.clone());
        prop_assert_eq!(f.then(&p), p.clone());
    }

    #[test]
    fn id_minus_contraction_is_ep(seed in any::<u64>()) {
        let cfg = GenConfig::with_seed(seed);
        let mut r = cfg.rng(1);
        let n = r.gen_range(0..=4);
        let f = gen_contraction::<BigRational>(&cfg, &mut r, n, n).unwrap();
        prop_assert!(is_ep(&Matrix::identity(n).minus(&f)).is_exists());
    }
}

fn contraction_totality<R: Sample>(seed: u64) -> Result<(), TestCaseError> {
    let cfg = GenConfig::with_seed(seed);
    let mut r = cfg.rng(2);
    let (a, b, x) = cfg.trace_shape(&mut r, Some(ArrowClass::Contraction), 3);
    let f = gen_contraction::<R>(&cfg, &mut r, a + x, b + x).unwrap();
    let tp = TraceProblem::new(f, a, b, x).unwrap();
    let t = kernel_image_trace(&tp).verdict;
    prop_assert!(t.is_exists(), "{}", tp.f());
    prop_assert!(is_contraction(t.exists().unwrap()).is_exists());
    Ok(())
}

fn witnesses_valid<R: Sample + common::Elem>(seed: u64) -> Result<(), TestCaseError> {
    let mut r = rng(seed);
    let (a, b, x) = (r.gen_range(0..=2), r.gen_range(0..=2), r.gen_range(1..=2));
    let f: Matrix<R> = matrix(&mut r, b + x, a + x);
    let tp = TraceProblem::new(f, a, b, x).unwrap();
    let res = kernel_image_trace(&tp);
    if let Some((i, k)) = &res.witnesses {
        prop_assert!(is_kernel_image_witness(&tp, i, k));
        prop_assert_eq!(res.verdict, Verdict::Exists(kernel_image_value_k(&tp, k)));
    }
    Ok(())
}

fn closure<R: Sample>(seed: u64) -> Result<(), TestCaseError> {
    let cfg = GenConfig::with_seed(seed);
    let mut r = cfg.rng(3);
    let d: Vec<usize> = (0..4).map(|_| r.gen_range(0..=3)).collect();
    let f = gen_in_class::<R>(&cfg, &mut r, Some(ArrowClass::Contraction), d[0], d[1]).unwrap();
    let g = gen_in_class::<R>(&cfg, &mut r, Some(ArrowClass::Contraction), d[1], d[2]).unwrap();
    let h = gen_in_class::<R>(&cfg, &mut r, Some(ArrowClass::Contraction), d[3], d[0]).unwrap();
    prop_assert!(is_contraction(&f.then(&g)).is_exists());
    prop_assert!(is_contraction(&f.oplus(&h)).is_exists());
    Ok(())
}
