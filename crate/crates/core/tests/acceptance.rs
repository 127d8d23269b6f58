//! One line per acceptance criterion; exits nonzero if any fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use daggertrace::checks::{
    closure_suite, coincidence_suite, ep_suite, exhaustive_penrose_bool, exhaustive_penrose_gf2,
    law_suite, maxed_out_suite, penrose_suite, rotation_suite, SuiteReport,
};
use daggertrace::corpus::run_all;
use daggertrace::generators::GenConfig;
use daggertrace::laws::Axiom;
use daggertrace::trace::ArrowClass;
use daggertrace::{BigInt, BigRational, Dual, Gaussian};

const SEED: u64 = 20_240_601;

struct Line {
    passed: bool,
    summary: String,
    problems: Vec<String>,
}

fn suites(reports: &[SuiteReport], min_checked: usize) -> Line {
    let mut problems = Vec::new();
    for r in reports {
        if r.checked < min_checked {
            problems.push(format!("{r}: fewer than {min_checked} checked"));
        }
        problems.extend(r.failures.iter().take(3).map(|f| format!("{}: {f}", r.suite)));
    }
    let checked: usize = reports.iter().map(|r| r.checked).sum();
    Line {
        passed: problems.is_empty(),
        summary: format!("{} suites, {checked} checked samples", reports.len()),
        problems,
    }
}

fn timed(limit: Duration, f: impl FnOnce() -> Line) -> Line {
    let start = Instant::now();
    let mut line = f();
    let took = start.elapsed();
    line.summary = format!("{} in {:.2}s", line.summary, took.as_secs_f64());
    if took > limit {
        line.passed = false;
        line.problems.push(format!("exceeded {}s", limit.as_secs()));
    }
    line
}

fn c1() -> Line {
    timed(Duration::from_secs(10), || {
        let reports = run_all();
        let failed: Vec<String> = reports
            .iter()
            .filter(|r| !r.passed)
            .map(|r| format!("{r}: {:?}", r.details))
            .collect();
        Line {
            passed: failed.is_empty() && reports.len() == 17,
            summary: format!("{}/{} corpus cases", reports.len() - failed.len(), reports.len()),
            problems: failed,
        }
    })
}

fn c2(cfg: &GenConfig) -> Line {
    timed(Duration::from_secs(120), || {
        let mut reports = Vec::new();
        for class in ArrowClass::ALL {
            reports.push(closure_suite::<BigRational>(class, cfg, 200));
            reports.push(closure_suite::<Gaussian>(class, cfg, 200));
        }
        suites(&reports, 200)
    })
}

fn c3(cfg: &GenConfig) -> Line {
    let sampled = [
        penrose_suite::<BigRational>(cfg, 300),
        penrose_suite::<Gaussian>(cfg, 300),
        penrose_suite::<BigInt>(cfg, 300),
        penrose_suite::<Dual>(cfg, 300),
    ];
    let mut line = suites(&sampled, 1);
    let exhaustive = [exhaustive_penrose_gf2(3), exhaustive_penrose_bool(3)];
    let ex = suites(&exhaustive, 1);
    for r in &exhaustive {
        if r.checked != r.cases {
            line.problems.push(format!("{r}: not every matrix matched"));
        }
    }
    line.problems.extend(ex.problems);
    line.passed = line.problems.is_empty();
    line.summary = format!("sampled {}; exhaustive {}", line.summary, ex.summary);
    line
}

fn c4(cfg: &GenConfig) -> Line {
    suites(&[coincidence_suite(cfg, 500)], 500)
}

fn c5(cfg: &GenConfig) -> Line {
    let mut reports = Vec::new();
    for axiom in Axiom::ALL {
        reports.push(law_suite::<BigRational>(axiom, None, cfg, 200));
        reports.push(law_suite::<BigRational>(axiom, Some(ArrowClass::Contraction), cfg, 200));
    }
    reports.push(law_suite::<BigRational>(Axiom::DaggerTrace, Some(ArrowClass::Unitary), cfg, 200));
    // Agreement is required only where both sides are defined.
    let mut line = suites(&reports, 0);
    for r in &reports {
        if r.cases < 200 {
            line.problems.push(format!("{r}: fewer than 200 instances"));
        }
    }
    line.passed = line.problems.is_empty();
    line
}

fn c6(cfg: &GenConfig) -> Line {
    suites(&[ep_suite(cfg, 200)], 200)
}

fn c7(cfg: &GenConfig) -> Line {
    let reports = [
        maxed_out_suite::<BigRational>(cfg, 500),
        maxed_out_suite::<Gaussian>(cfg, 500),
        maxed_out_suite::<BigInt>(cfg, 500),
    ];
    let mut line = suites(&reports, 500);
    let notes: Vec<String> = reports.iter().map(|r| format!("{} {}", r.rig, r.notes.join("; "))).collect();
    line.summary = format!("{} ({})", line.summary, notes.join(", "));
    line
}

fn c8() -> Line {
    let r = rotation_suite();
    let mut line = suites(&[r.clone()], 3);
    line.passed &= r.checked == r.cases;
    line
}

fn main() -> ExitCode {
    let cfg = GenConfig::with_seed(SEED);
    let criteria: [(&str, &dyn Fn() -> Line); 8] = [
        ("C1 corpus", &c1),
        ("C2 class closure", &|| c2(&cfg)),
        ("C3 penrose", &|| c3(&cfg)),
        ("C4 coincidence", &|| c4(&cfg)),
        ("C5 trace axioms", &|| c5(&cfg)),
        ("C6 ep pipeline", &|| c6(&cfg)),
        ("C7 maxed-out", &|| c7(&cfg)),
        ("C8 rotations", &c8),
    ];
    let mut all = true;
    for (name, run) in criteria {
        let line = run();
        all &= line.passed;
        let status = if line.passed { "PASS" } else { "FAIL" };
        println!("{status} {name}: {}", line.summary);
        for p in line.problems.iter().take(5) {
            println!("    {p}");
        }
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
