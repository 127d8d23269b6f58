//! Randomized instances of the partial trace axioms for the kernel-image
//! trace.
//!
//! Sides are compared Kleene-style: an instance fails only if both sides are
//! defined and differ. Inside a subcategory on which the trace is total,
//! undefined sides also fail.

use std::fmt;

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::error::MatError;
use crate::generators::{gen_in_class, GenConfig, Sample};
use crate::matrix::Matrix;
use crate::rig::Rig;
use crate::trace::{kernel_image_trace, ArrowClass, TraceProblem};
use crate::verdict::Verdict;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Axiom {
    Yanking,
    Tightening,
    Sliding,
    VanishingI,
    VanishingII,
    Superposing,
    DaggerTrace,
}

impl Axiom {
    pub const ALL: [Axiom; 7] = [
        Axiom::Yanking,
        Axiom::Tightening,
        Axiom::Sliding,
        Axiom::VanishingI,
        Axiom::VanishingII,
        Axiom::Superposing,
        Axiom::DaggerTrace,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Axiom::Yanking => "yanking",
            Axiom::Tightening => "tightening",
            Axiom::Sliding => "sliding",
            Axiom::VanishingI => "vanishing-1",
            Axiom::VanishingII => "vanishing-2",
            Axiom::Superposing => "superposing",
            Axiom::DaggerTrace => "dagger-trace",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|a| a.name() == name)
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// `Tr^X` of `f: A ⊕ X -> B ⊕ X`.
pub fn tr<R: Sample>(f: &Matrix<R>, a: usize, b: usize, x: usize) -> Verdict<Matrix<R>> {
    match TraceProblem::new(f.clone(), a, b, x) {
        Ok(tp) => kernel_image_trace(&tp).verdict,
        Err(e) => panic!("ill-shaped trace instance: {e}"),
    }
}

/// One evaluated axiom instance.
#[derive(Clone, Debug)]
pub struct Instance<R: Rig> {
    pub lhs: Verdict<Matrix<R>>,
    pub rhs: Verdict<Matrix<R>>,
    pub inputs: Vec<(&'static str, Matrix<R>)>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    Agree,
    Disagree,
    /// Exactly one side is defined.
    OneSided,
    /// Neither side is defined.
    Undefined,
}

impl<R: Rig> Instance<R> {
    pub fn outcome(&self) -> Outcome {
        match (&self.lhs, &self.rhs) {
            (Verdict::Exists(l), Verdict::Exists(r)) if l == r => Outcome::Agree,
            (Verdict::Exists(_), Verdict::Exists(_)) => Outcome::Disagree,
            (Verdict::Exists(_), _) | (_, Verdict::Exists(_)) => Outcome::OneSided,
            _ => Outcome::Undefined,
        }
    }

    fn describe(&self) -> String {
        let inputs: Vec<String> = self
            .inputs
            .iter()
            .map(|(n, m)| format!("{n} = {m}"))
            .collect();
        format!(
            "lhs {}, rhs {}; {}",
            self.lhs.tag_with_value(),
            self.rhs.tag_with_value(),
            inputs.join(", ")
        )
    }
}

trait TagWithValue {
    fn tag_with_value(&self) -> String;
}

impl<R: Rig> TagWithValue for Verdict<Matrix<R>> {
    fn tag_with_value(&self) -> String {
        match self {
            Verdict::Exists(m) => m.to_string(),
            other => other.tag().to_string(),
        }
    }
}

/// Dimensions `d0, d1, ...` such that class arrows `d0 -> d1 -> ...`
/// exist: equal for unitaries, increasing for isometries, decreasing for
/// coisometries.
fn chain(rng: &mut ChaCha8Rng, class: Option<ArrowClass>, len: usize, max: usize) -> Vec<usize> {
    let mut d: Vec<usize> = (0..len).map(|_| rng.gen_range(0..=max)).collect();
    match class {
        Some(ArrowClass::Unitary) => {
            let first = d[0];
            d.iter_mut().for_each(|v| *v = first)
        }
        Some(ArrowClass::Isometry) => d.sort_unstable(),
        Some(ArrowClass::Coisometry) => d.sort_unstable_by(|p, q| q.cmp(p)),
        _ => {}
    }
    d
}

fn shapes(rng: &mut ChaCha8Rng, class: Option<ArrowClass>, max: usize) -> (usize, usize) {
    let d = chain(rng, class, 2, max);
    (d[0], d[1])
}

/// Evaluates one random instance of `axiom` with inputs from `class` (any
/// map when `None`).
pub fn instance<R: Sample>(
    axiom: Axiom,
    cfg: &GenConfig,
    rng: &mut ChaCha8Rng,
    class: Option<ArrowClass>,
) -> Result<Instance<R>, MatError> {
    let x = rng.gen_range(0..=2);
    Ok(match axiom {
        Axiom::Yanking => {
            let s = Matrix::<R>::swap(x, x);
            Instance {
                lhs: tr(&s, x, x, x),
                rhs: Verdict::Exists(Matrix::identity(x)),
                inputs: vec![("symmetry", s)],
            }
        }
        Axiom::Tightening => {
            let d = chain(rng, class, 4, 2);
            let (a0, a, b, b1) = (d[0], d[1], d[2], d[3]);
            let f = gen_in_class::<R>(cfg, rng, class, a + x, b + x)?;
            let g = gen_in_class::<R>(cfg, rng, class, a0, a)?;
            let h = gen_in_class::<R>(cfg, rng, class, b, b1)?;
            let id = Matrix::identity(x);
            let lhs = tr(&g.oplus(&id).then(&f).then(&h.oplus(&id)), a0, b1, x);
            let rhs = tr(&f, a, b, x).map(|t| g.then(&t).then(&h));
            Instance {
                lhs,
                rhs,
                inputs: vec![("f", f), ("g", g), ("h", h)],
            }
        }
        Axiom::Sliding => {
            let (a, b) = shapes(rng, class, 2);
            let x2 = match class {
                None | Some(ArrowClass::Contraction) => rng.gen_range(0..=2),
                _ => x,
            };
            let f = gen_in_class::<R>(cfg, rng, class, a + x, b + x2)?;
            let k = gen_in_class::<R>(cfg, rng, class, x2, x)?;
            let lhs = tr(&f.then(&Matrix::identity(b).oplus(&k)), a, b, x);
            let rhs = tr(&Matrix::identity(a).oplus(&k).then(&f), a, b, x2);
            Instance {
                lhs,
                rhs,
                inputs: vec![("f", f), ("k", k)],
            }
        }
        Axiom::VanishingI => {
            let (a, b) = shapes(rng, class, 3);
            let f = gen_in_class::<R>(cfg, rng, class, a, b)?;
            Instance {
                lhs: tr(&f, a, b, 0),
                rhs: Verdict::Exists(f.clone()),
                inputs: vec![("f", f)],
            }
        }
        Axiom::VanishingII => {
            let (a, b) = shapes(rng, class, 2);
            let y = rng.gen_range(0..=2);
            let f = gen_in_class::<R>(cfg, rng, class, a + x + y, b + x + y)?;
            let lhs = tr(&f, a, b, x + y);
            let rhs = tr(&f, a + x, b + x, y).and_then(|inner| tr(&inner, a, b, x));
            Instance {
                lhs,
                rhs,
                inputs: vec![("f", f)],
            }
        }
        Axiom::Superposing => {
            let (a, b) = shapes(rng, class, 2);
            let (c, d) = shapes(rng, class, 2);
            let f = gen_in_class::<R>(cfg, rng, class, a + x, b + x)?;
            let g = gen_in_class::<R>(cfg, rng, class, c, d)?;
            let lhs = tr(&g.oplus(&f), c + a, d + b, x);
            let rhs = tr(&f, a, b, x).map(|t| g.oplus(&t));
            Instance {
                lhs,
                rhs,
                inputs: vec![("f", f), ("g", g)],
            }
        }
        Axiom::DaggerTrace => {
            let (a, b) = shapes(rng, class, 3);
            let f = gen_in_class::<R>(cfg, rng, class, a + x, b + x)?;
            let lhs = tr(&f.dagger(), b, a, x);
            let rhs = tr(&f, a, b, x).map(|t| t.dagger());
            Instance {
                lhs,
                rhs,
                inputs: vec![("f", f)],
            }
        }
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LawReport {
    pub axiom: Axiom,
    pub class: Option<ArrowClass>,
    pub seed: u64,
    pub instances: usize,
    pub agreed: usize,
    pub one_sided: usize,
    pub undefined: usize,
    pub failures: Vec<String>,
}

impl LawReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn class_name(&self) -> &'static str {
        self.class.map_or("all", |c| c.name())
    }
}

/// Runs `cases` instances, sample `i` drawn from stream `i` of the seed.
pub fn run_law<R: Sample>(
    axiom: Axiom,
    class: Option<ArrowClass>,
    cfg: &GenConfig,
    cases: usize,
) -> LawReport {
    let mut report = LawReport {
        axiom,
        class,
        seed: cfg.seed,
        instances: cases,
        agreed: 0,
        one_sided: 0,
        undefined: 0,
        failures: Vec::new(),
    };
    for i in 0..cases {
        let mut rng = cfg.rng(i as u64);
        let inst = match instance::<R>(axiom, cfg, &mut rng, class) {
            Ok(inst) => inst,
            Err(e) => {
                report.failures.push(format!("#{i}: generator error {e}"));
                continue;
            }
        };
        match inst.outcome() {
            Outcome::Agree => report.agreed += 1,
            Outcome::Disagree => report
                .failures
                .push(format!("#{i}: sides differ: {}", inst.describe())),
            Outcome::OneSided | Outcome::Undefined => {
                if inst.outcome() == Outcome::OneSided {
                    report.one_sided += 1;
                } else {
                    report.undefined += 1;
                }
                if class.is_some() {
                    report
                        .failures
                        .push(format!("#{i}: trace undefined in a total subcategory: {}", inst.describe()));
                }
            }
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use num_rational::BigRational;

    use super::*;
    use crate::rig::Gaussian;

    #[test]
    fn every_axiom_on_a_few_instances() {
        let cfg = GenConfig::with_seed(3);
        for axiom in Axiom::ALL {
            for class in [None, Some(ArrowClass::Contraction), Some(ArrowClass::Unitary)] {
                let r = run_law::<BigRational>(axiom, class, &cfg, 12);
                assert!(r.passed(), "{axiom} {:?}: {:?}", class, r.failures);
            }
            let r = run_law::<Gaussian>(axiom, Some(ArrowClass::Isometry), &cfg, 6);
            assert!(r.passed(), "{axiom}: {:?}", r.failures);
        }
    }

    #[test]
    fn yanking_is_identity() {
        let s = Matrix::<BigRational>::swap(2, 2);
        assert_eq!(tr(&s, 2, 2, 2), Verdict::Exists(Matrix::identity(2)));
    }
}
