//! Seeded property suites over the sampled classes, shared by the command
//! line and the acceptance tests.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::Rng;

use crate::backend::Backend;
use crate::completion::{ep_decompose, split};
use crate::generators::{gen_contraction, gen_in_class, gen_isometry, gen_matrix, GenConfig, Sample};
use crate::laws::{run_law, Axiom};
use crate::matcat::is_dagger_idempotent;
use crate::matrix::Matrix;
use crate::pinv::{all_bool_matrices, is_ep, pinv, projections_with, verify_penrose};
use crate::rig::{Bool, Gf2, Rig};
use crate::trace::{coincidence_check, kernel_image_trace, pseudotrace, ArrowClass, TraceProblem};
use crate::verdict::Verdict;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: String,
    pub rig: &'static str,
    pub seed: u64,
    /// Samples drawn.
    pub cases: usize,
    /// Samples on which the property was actually exercised.
    pub checked: usize,
    pub failures: Vec<String>,
    pub notes: Vec<String>,
}

impl SuiteReport {
    fn new(suite: impl Into<String>, rig: &'static str, seed: u64) -> Self {
        SuiteReport {
            suite: suite.into(),
            rig,
            seed,
            cases: 0,
            checked: 0,
            failures: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn fail(&mut self, i: usize, msg: impl fmt::Display) {
        self.failures.push(format!("#{i}: {msg}"));
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} [{}] seed {}: {}/{} checked, {} failures",
            self.suite,
            self.rig,
            self.seed,
            self.checked,
            self.cases,
            self.failures.len()
        )
    }
}

/// Kernel-image traces of class members exist and stay in the class.
pub fn closure_suite<R: Sample>(class: ArrowClass, cfg: &GenConfig, cases: usize) -> SuiteReport {
    let mut report = SuiteReport::new(format!("{}-closure", class.name()), R::DESCRIPTOR.name, cfg.seed);
    for i in 0..cases {
        report.cases += 1;
        let mut rng = cfg.rng(i as u64);
        let (a, b, x) = cfg.trace_shape(&mut rng, Some(class), 3);
        let f = match gen_in_class::<R>(cfg, &mut rng, Some(class), a + x, b + x) {
            Ok(f) => f,
            Err(e) => {
                report.fail(i, e);
                continue;
            }
        };
        let tp = TraceProblem::new(f.clone(), a, b, x).expect("shape from trace_shape");
        match kernel_image_trace(&tp).verdict {
            Verdict::Exists(t) => match class.contains(&t) {
                Some(true) => report.checked += 1,
                Some(false) => report.fail(i, format!("trace {t} of {f} over {x} leaves the class")),
                None => report.fail(i, format!("membership of {t} undecided")),
            },
            other => report.fail(i, format!("trace of {f} over {x} is {}", other.tag())),
        }
    }
    report
}

/// `id - m` for a rank-deficient `m`, with `f_AX` and `f_XB` factoring
/// through it: the kernel-image trace exists although `id - f_XX` is
/// singular.
fn singular_feedback(cfg: &GenConfig, rng: &mut rand_chacha::ChaCha8Rng) -> TraceProblem<BigRational> {
    let x = rng.gen_range(1..=3);
    let a = rng.gen_range(0..=2);
    let b = rng.gen_range(0..=2);
    let r = rng.gen_range(0..x);
    let bound = 3;
    let m = gen_matrix::<BigRational>(rng, r, x, bound).then(&gen_matrix(rng, x, r, bound));
    let f_xx = Matrix::identity(x).minus(&m);
    let i = gen_matrix::<BigRational>(rng, x, a, bound);
    let k = gen_matrix::<BigRational>(rng, b, x, bound);
    let f_ab = gen_matrix::<BigRational>(rng, b, a, cfg.coeff_bound);
    let f = Matrix::blocks2(&f_ab, &m.then(&k), &i.then(&m), &f_xx);
    TraceProblem::new(f, a, b, x).expect("assembled shape")
}

/// Where both traces exist they coincide. Samples are drawn until `target`
/// doubly-defined problems have been compared.
pub fn coincidence_suite(cfg: &GenConfig, target: usize) -> SuiteReport {
    let mut report = SuiteReport::new("coincidence", BigRational::DESCRIPTOR.name, cfg.seed);
    let mut i = 0;
    while report.checked < target && i < target * 4 {
        let mut rng = cfg.rng(i as u64);
        report.cases += 1;
        let tp = match i % 4 {
            3 => singular_feedback(cfg, &mut rng),
            k => {
                let class = [None, Some(ArrowClass::Contraction), Some(ArrowClass::Unitary)][k];
                let (a, b, x) = cfg.trace_shape(&mut rng, class, 3);
                let f = gen_in_class::<BigRational>(cfg, &mut rng, class, a + x, b + x)
                    .expect("shape within bounds");
                TraceProblem::new(f, a, b, x).expect("shape")
            }
        };
        let ki = kernel_image_trace(&tp).verdict;
        let pt = pseudotrace(&tp).verdict;
        if let (Verdict::Exists(l), Verdict::Exists(r)) = (&ki, &pt) {
            report.checked += 1;
            if l != r {
                report.fail(i, format!("kernel-image {l} differs from pseudotrace {r} on {}", tp.f()));
            }
        }
        debug_assert!(coincidence_check(&tp));
        i += 1;
    }
    if report.checked < target {
        report.failures.push(format!(
            "only {} doubly-defined problems among {} samples",
            report.checked, report.cases
        ));
    }
    report
}

/// One trace axiom over `class` (any map when `None`).
pub fn law_suite<R: Sample>(axiom: Axiom, class: Option<ArrowClass>, cfg: &GenConfig, cases: usize) -> SuiteReport {
    let law = run_law::<R>(axiom, class, cfg, cases);
    let mut report = SuiteReport::new(
        format!("{}/{}", axiom.name(), law.class_name()),
        R::DESCRIPTOR.name,
        cfg.seed,
    );
    report.cases = law.instances;
    report.checked = law.agreed;
    if law.one_sided > 0 || law.undefined > 0 {
        report.notes.push(format!(
            "{} one-sided and {} undefined instances",
            law.one_sided, law.undefined
        ));
    }
    report.failures = law.failures;
    report
}

/// `id - f` is EP for endo-contractions `f`, and its EP presentation
/// rebuilds it.
pub fn ep_suite(cfg: &GenConfig, cases: usize) -> SuiteReport {
    let mut report = SuiteReport::new("ep", BigRational::DESCRIPTOR.name, cfg.seed);
    for i in 0..cases {
        report.cases += 1;
        let mut rng = cfg.rng(i as u64);
        let n = rng.gen_range(1..=4);
        let f = gen_contraction::<BigRational>(cfg, &mut rng, n, n).expect("within bounds");
        let g = Matrix::identity(n).minus(&f);
        if !is_ep(&g).is_exists() {
            report.fail(i, format!("id - {f} is not EP"));
            continue;
        }
        match ep_decompose(&g) {
            Ok(d) => {
                let s = split(d.a1.idem()).expect("dagger idempotent");
                let rebuilt = s.retraction.mat().then(d.a.mat()).then(s.section.mat());
                let inverse_ok = d.a.mat().then(d.a_inv.mat()) == *d.a1.idem();
                if rebuilt == g && inverse_ok {
                    report.checked += 1;
                } else {
                    report.fail(i, format!("presentation of {g} does not rebuild it"));
                }
            }
            Err(e) => report.fail(i, format!("ep_decompose({g}): {e}")),
        }
    }
    report
}

/// Contractions with an isometric component have zero remaining components,
/// both for stacked columns and for a unit corner.
pub fn maxed_out_suite<R: Sample>(cfg: &GenConfig, cases: usize) -> SuiteReport {
    let mut report = SuiteReport::new("maxed-out", R::DESCRIPTOR.name, cfg.seed);
    let mut contractions = 0;
    for i in 0..cases {
        report.cases += 1;
        let mut rng = cfg.rng(i as u64);
        let bound = 2;

        let a = rng.gen_range(1..=2);
        let b1 = rng.gen_range(a..=3);
        let b2 = rng.gen_range(1..=2);
        let f1 = gen_isometry::<R>(cfg, &mut rng, a, b1).expect("within bounds");
        let f2 = if rng.gen_bool(0.4) {
            Matrix::zero(b2, a)
        } else {
            gen_matrix::<R>(&mut rng, b2, a, bound)
        };
        let stacked = f1.vcat(&f2);
        let column_ok = match R::is_contraction(&stacked) {
            Verdict::Exists(_) => {
                contractions += 1;
                f2.is_zero()
            }
            Verdict::NotExists(_) => !f2.is_zero(),
            Verdict::Unknown(_) => false,
        };

        let n = rng.gen_range(1..=2);
        let f22 = gen_contraction::<R>(cfg, &mut rng, n, n).expect("within bounds");
        let (f12, f21) = if rng.gen_bool(0.4) {
            (Matrix::zero(1, n), Matrix::zero(n, 1))
        } else {
            (gen_matrix::<R>(&mut rng, 1, n, bound), gen_matrix::<R>(&mut rng, n, 1, bound))
        };
        let corner = Matrix::blocks2(&Matrix::identity(1), &f12, &f21, &f22);
        let off_zero = f12.is_zero() && f21.is_zero();
        let corner_ok = match R::is_contraction(&corner) {
            Verdict::Exists(_) => {
                contractions += 1;
                off_zero
            }
            Verdict::NotExists(_) => !off_zero,
            Verdict::Unknown(_) => false,
        };

        let (gr, gc) = (rng.gen_range(0..=3), rng.gen_range(0..=3));
        let g = gen_matrix::<R>(&mut rng, gr, gc, bound);
        let definite_ok = !g.then(&g.dagger()).is_zero() || g.is_zero();

        if column_ok && corner_ok && definite_ok {
            report.checked += 1;
        } else {
            if !column_ok {
                report.fail(i, format!("stacked {stacked} with isometric top"));
            }
            if !corner_ok {
                report.fail(i, format!("unit corner {corner}"));
            }
            if !definite_ok {
                report.fail(i, format!("{g} has g;g† = 0"));
            }
        }
    }
    report
        .notes
        .push(format!("{contractions} sampled arrows were contractions"));
    report
}

fn penrose_one<R: Backend>(report: &mut SuiteReport, i: usize, f: &Matrix<R>) {
    let r = pinv(f);
    match &r.verdict {
        Verdict::Exists(g) => {
            let dual = pinv(&f.dagger()).verdict;
            let p = projections_with(f, g);
            if !verify_penrose(f, g) {
                report.fail(i, format!("{g} fails the Penrose equations for {f}"));
            } else if dual != Verdict::Exists(g.dagger()) {
                report.fail(i, format!("pinv of the dagger of {f} is not the dagger of {g}"));
            } else if !is_dagger_idempotent(&p.coimage) || !is_dagger_idempotent(&p.image) {
                report.fail(i, format!("projections of {f} are not dagger idempotents"));
            } else {
                report.checked += 1;
            }
        }
        Verdict::NotExists(_) => {
            if pinv(&f.dagger()).verdict.is_exists() {
                report.fail(i, format!("{f} has no pseudoinverse but its dagger does"));
            }
        }
        Verdict::Unknown(_) => {}
    }
}

/// Sampled pseudoinverses satisfy both characterizations and commute with
/// the dagger.
pub fn penrose_suite<R: Sample>(cfg: &GenConfig, cases: usize) -> SuiteReport {
    let mut report = SuiteReport::new("penrose", R::DESCRIPTOR.name, cfg.seed);
    for i in 0..cases {
        report.cases += 1;
        let mut rng = cfg.rng(i as u64);
        let rows = rng.gen_range(0..=4);
        let cols = rng.gen_range(0..=4);
        let f = if rng.gen_bool(0.3) {
            let inner = rng.gen_range(0..=rows.min(cols));
            gen_matrix::<R>(&mut rng, inner, cols, 3).then(&gen_matrix(&mut rng, rows, inner, 3))
        } else {
            gen_matrix::<R>(&mut rng, rows, cols, 3)
        };
        let f = if rng.gen_bool(0.5) { f } else { f.then(&Matrix::identity(rows)) };
        penrose_one(&mut report, i, &f);
    }
    report
}

/// Every matrix of each shape up to `max x max` over a two-element rig:
/// the computed verdict must match an exhaustive count of Penrose
/// solutions, which is at most one.
fn exhaustive_penrose<R: Backend>(max: usize, all: impl Fn(usize, usize) -> Vec<Matrix<R>>) -> SuiteReport {
    let mut report = SuiteReport::new("penrose-exhaustive", R::DESCRIPTOR.name, 0);
    let mut i = 0;
    for rows in 0..=max {
        for cols in 0..=max {
            let candidates = all(cols, rows);
            for f in all(rows, cols) {
                report.cases += 1;
                let passing: Vec<&Matrix<R>> =
                    candidates.iter().filter(|g| verify_penrose(&f, g)).collect();
                let verdict = pinv(&f).verdict;
                let ok = match (&verdict, passing.as_slice()) {
                    (Verdict::Exists(g), [only]) => g == *only,
                    (Verdict::NotExists(_), []) => true,
                    _ => false,
                };
                if ok {
                    report.checked += 1;
                } else {
                    report.fail(
                        i,
                        format!("{f}: verdict {} with {} Penrose solutions", verdict.tag(), passing.len()),
                    );
                }
                i += 1;
            }
        }
    }
    report
}

pub fn exhaustive_penrose_bool(max: usize) -> SuiteReport {
    exhaustive_penrose::<Bool>(max, |r, c| all_bool_matrices(r, c).collect())
}

pub fn exhaustive_penrose_gf2(max: usize) -> SuiteReport {
    exhaustive_penrose::<Gf2>(max, |r, c| {
        all_bool_matrices(r, c).map(|m| m.map(|b| Gf2(b.0))).collect()
    })
}

/// The rotation by the Pythagorean angle of `(p, q, h)`,
/// `[[p/h, -q/h], [q/h, p/h]]`.
pub fn rotation(p: i64, q: i64, h: i64) -> Matrix<BigRational> {
    let r = |n: i64| BigRational::new(n.into(), h.into());
    Matrix::from_rows(vec![vec![r(p), r(-q)], vec![r(q), r(p)]])
}

/// Traces of rotations over their second coordinate: `1` for the identity
/// and `-1` for every other rational rotation.
pub fn rotation_suite() -> SuiteReport {
    let mut report = SuiteReport::new("rotations", BigRational::DESCRIPTOR.name, 0);
    let mut family = vec![(1, 0, 1)];
    for m in 2..8i64 {
        for n in 1..m {
            family.push((m * m - n * n, 2 * m * n, m * m + n * n));
            family.push((2 * m * n, m * m - n * n, m * m + n * n));
        }
    }
    family.extend([(-1, 0, 1), (0, 1, 1), (-3, 4, 5)]);
    for (i, &(p, q, h)) in family.iter().enumerate() {
        report.cases += 1;
        let f = rotation(p, q, h);
        let expected = if (p, q) == (h, 0) { 1 } else { -1 };
        let tp = TraceProblem::trailing(f.clone(), 1).expect("2 = 1 + 1");
        let want = Matrix::from_rows(vec![vec![BigRational::from_integer(expected.into())]]);
        match kernel_image_trace(&tp).verdict {
            Verdict::Exists(t) if t == want => report.checked += 1,
            other => report.fail(i, format!("rotation {f}: trace {}", other.tag())),
        }
    }
    report
}

/// Sampled integer contractions, for totality of the kernel-image trace.
pub fn integer_contraction_traces(cfg: &GenConfig, cases: usize) -> SuiteReport {
    let mut report = SuiteReport::new("integer-contraction-traces", BigInt::DESCRIPTOR.name, cfg.seed);
    for i in 0..cases {
        report.cases += 1;
        let mut rng = cfg.rng(i as u64);
        let (a, b, x) = cfg.trace_shape(&mut rng, Some(ArrowClass::Contraction), 3);
        let f = gen_contraction::<BigInt>(cfg, &mut rng, a + x, b + x).expect("within bounds");
        let tp = TraceProblem::new(f.clone(), a, b, x).expect("shape");
        match kernel_image_trace(&tp).verdict {
            Verdict::Exists(t) if BigInt::is_contraction(&t).is_exists() => report.checked += 1,
            other => report.fail(i, format!("{f} over {x}: {}", other.tag())),
        }
    }
    report
}

/// Suites addressable by name from the command line.
pub const SUITES: &[&str] = &[
    "unitary-closure",
    "isometry-closure",
    "coisometry-closure",
    "contraction-closure",
    "coincidence",
    "yanking",
    "tightening",
    "sliding",
    "vanishing-1",
    "vanishing-2",
    "superposing",
    "dagger-trace",
    "ep",
    "maxed-out",
    "penrose",
    "penrose-exhaustive",
    "rotations",
];

/// Rigs a suite can run over.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SuiteRig {
    Rationals,
    Gaussian,
    Integers,
}

/// Runs the named suite; `None` for an unknown name or an unsupported rig.
pub fn run_suite(name: &str, rig: SuiteRig, cfg: &GenConfig, cases: usize) -> Option<Vec<SuiteReport>> {
    use crate::rig::Gaussian;
    macro_rules! per_rig {
        ($f:ident $(, $arg:expr)*) => {
            match rig {
                SuiteRig::Rationals => $f::<BigRational>($($arg,)* cfg, cases),
                SuiteRig::Gaussian => $f::<Gaussian>($($arg,)* cfg, cases),
                SuiteRig::Integers => $f::<BigInt>($($arg,)* cfg, cases),
            }
        };
    }
    if let Some(class) = name.strip_suffix("-closure").and_then(ArrowClass::from_name) {
        return match rig {
            SuiteRig::Integers if class == ArrowClass::Contraction => {
                Some(vec![integer_contraction_traces(cfg, cases)])
            }
            SuiteRig::Integers => None,
            _ => Some(vec![per_rig!(closure_suite, class)]),
        };
    }
    if let Some(axiom) = Axiom::from_name(name) {
        let classes = [None, Some(ArrowClass::Contraction), Some(ArrowClass::Unitary)];
        return Some(
            classes
                .into_iter()
                .map(|class| per_rig!(law_suite, axiom, class))
                .collect(),
        );
    }
    let rational_only = |r: SuiteReport| (rig == SuiteRig::Rationals).then(|| vec![r]);
    match name {
        "coincidence" if rig == SuiteRig::Rationals => Some(vec![coincidence_suite(cfg, cases)]),
        "ep" if rig == SuiteRig::Rationals => Some(vec![ep_suite(cfg, cases)]),
        "rotations" => rational_only(rotation_suite()),
        "maxed-out" => Some(vec![per_rig!(maxed_out_suite)]),
        "penrose" => Some(vec![per_rig!(penrose_suite)]),
        "penrose-exhaustive" => Some(vec![exhaustive_penrose_gf2(3), exhaustive_penrose_bool(3)]),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_runs_pass() {
        let cfg = GenConfig::with_seed(1);
        for r in [
            closure_suite::<BigRational>(ArrowClass::Contraction, &cfg, 10),
            coincidence_suite(&cfg, 20),
            ep_suite(&cfg, 10),
            maxed_out_suite::<BigInt>(&cfg, 20),
            penrose_suite::<BigRational>(&cfg, 20),
            rotation_suite(),
            exhaustive_penrose_bool(2),
        ] {
            assert!(r.passed(), "{r}: {:?}", r.failures);
        }
    }
}
