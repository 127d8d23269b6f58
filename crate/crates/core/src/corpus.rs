//! Fixed counterexamples with hard-coded expectations.
//!
//! Every expected value below is a literal; none is recomputed from the
//! routines under test.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::backend::{is_cocontraction, is_contraction};
use crate::checks::rotation;
use crate::linalg::{solve_left, solve_right};
use crate::linalg::field::rank;
use crate::matcat::{
    complement_of, complementary, is_coisometry, is_isometry, is_unitary, unitary_completion,
};
use crate::matrix::Matrix;
use crate::pinv::{
    all_bool_matrices, diagonal_pinv_demo, is_mono, pinv, pinv_compose, projections, split_mono_retraction,
};
use crate::rig::{Bool, Dual, FreeIsometry, Gf2, Rig, WordRigXY};
use crate::trace::{dinaturality_failure_demo, kernel_image_trace, pseudotrace, TraceProblem};
use crate::verdict::{Certificate, Verdict};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaseReport {
    pub id: &'static str,
    pub title: &'static str,
    pub rig: &'static str,
    pub passed: bool,
    /// Observed values, one line per check.
    pub details: Vec<String>,
}

impl fmt::Display for CaseReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "pass" } else { "FAIL" };
        write!(f, "{} {status} [{}] {}", self.id, self.rig, self.title)
    }
}

pub struct Case {
    pub id: &'static str,
    pub title: &'static str,
    pub rig: &'static str,
    run: fn(&mut Checks),
}

/// Accumulates named expectations for one case.
#[derive(Default)]
struct Checks {
    passed: bool,
    details: Vec<String>,
}

impl Checks {
    fn expect(&mut self, what: impl fmt::Display, ok: bool) {
        self.passed &= ok;
        let mark = if ok { "ok" } else { "MISMATCH" };
        self.details.push(format!("{mark}: {what}"));
    }

    fn expect_eq<T: PartialEq + fmt::Display>(&mut self, what: &str, got: &T, want: &T) {
        let ok = got == want;
        self.expect(format!("{what} = {got} (expected {want})"), ok);
    }

    fn expect_verdict<T: PartialEq + fmt::Display>(&mut self, what: &str, got: &Verdict<T>, want: &Verdict<T>) {
        let ok = match (got, want) {
            (Verdict::Exists(g), Verdict::Exists(w)) => g == w,
            _ => got.tag() == want.tag(),
        };
        let shown = |v: &Verdict<T>| match v {
            Verdict::Exists(x) => x.to_string(),
            other => other.tag().to_string(),
        };
        self.expect(format!("{what}: {} (expected {})", shown(got), shown(want)), ok);
    }
}

fn m<R: Rig>(rows: &[&[&str]]) -> Matrix<R> {
    Matrix::parse_rows(rows).expect("corpus literal")
}

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn absent<T>() -> Verdict<T> {
    Verdict::NotExists(Certificate::Structural { detail: String::new() })
}

pub const CASES: &[Case] = &[
    Case { id: "C01", title: "pseudotrace breaks dinaturality", rig: "rationals", run: c01 },
    Case { id: "C02", title: "integer contractions are kernel-image traced, [2] has no pseudoinverse", rig: "integers", run: c02 },
    Case { id: "C03", title: "image projections of shifts stabilize late", rig: "rationals", run: c03 },
    Case { id: "C04", title: "isometry that is no unitary column without dimension one", rig: "rationals", run: c04 },
    Case { id: "C05", title: "row of ones is a coisometry", rig: "gf2", run: c05 },
    Case { id: "C06", title: "pseudoinverses do not compose", rig: "rationals", run: c06 },
    Case { id: "C07", title: "pseudoinverses compose without commuting projections", rig: "booleans", run: c07 },
    Case { id: "C08", title: "split mono without pseudoinverse", rig: "integers", run: c08 },
    Case { id: "C09", title: "kernel-image trace without pseudotrace", rig: "integers", run: c09 },
    Case { id: "C10", title: "pseudotrace without kernel-image trace", rig: "dual-numbers-z", run: c10 },
    Case { id: "C11", title: "isometry that is not a kernel", rig: "booleans", run: c11 },
    Case { id: "C12", title: "idempotents summing to the identity without being complementary", rig: "booleans", run: c12 },
    Case { id: "C13", title: "naive kernel-image formula breaks dinaturality", rig: "word-rig-xy", run: c13 },
    Case { id: "C14", title: "contraction that is not a cocontraction", rig: "booleans", run: c14 },
    Case { id: "C15", title: "x x! is no isometry followed by a coisometry", rig: "free-isometry", run: c15 },
    Case { id: "C16", title: "trace of rotations is discontinuous", rig: "rationals", run: c16 },
    Case { id: "C17", title: "pseudoinverse of a column of ones", rig: "rationals", run: c17 },
];

fn c01(c: &mut Checks) {
    let (pre, post) = dinaturality_failure_demo();
    let mut got = [pre, post];
    got.sort();
    c.expect(
        format!("value pair {{{}, {}}} (expected {{-1, 0}})", got[0], got[1]),
        got == [q(-1, 1), q(0, 1)],
    );
}

/// Square-free sign patterns: at most one `±1` per row and column.
fn signed_partial_permutations(rows: usize, cols: usize) -> Vec<Matrix<BigInt>> {
    let mut out = vec![Matrix::zero(rows, cols)];
    for r in 0..rows {
        let mut next = Vec::new();
        for f in &out {
            next.push(f.clone());
            for col in 0..cols {
                if (0..r).all(|r2| f.get(r2, col) == &BigInt::from(0)) {
                    for s in [1, -1] {
                        let mut g = f.clone();
                        g.set(r, col, s.into());
                        next.push(g);
                    }
                }
            }
        }
        out = next;
    }
    out
}

fn c02(c: &mut Checks) {
    let mut problems = 0;
    let mut traced = 0;
    let mut stays_contraction = true;
    for rows in 1..=3 {
        for cols in 1..=3 {
            for f in signed_partial_permutations(rows, cols) {
                for x in 1..=rows.min(cols) {
                    problems += 1;
                    let tp = TraceProblem::new(f.clone(), cols - x, rows - x, x).expect("shape");
                    if let Verdict::Exists(t) = kernel_image_trace(&tp).verdict {
                        traced += 1;
                        stays_contraction &= is_contraction(&t).is_exists();
                    }
                }
            }
        }
    }
    c.expect(format!("{traced} of {problems} trace problems on signed partial permutations traced"), traced == problems && problems > 0);
    c.expect("every trace is again a contraction", stays_contraction);
    let two = m::<BigInt>(&[&["2"]]);
    c.expect_verdict("pinv [2]", &pinv(&two).verdict, &absent());
    c.expect("[-1] is a contraction", is_contraction(&m::<BigInt>(&[&["-1"]])).is_exists());
}

fn c03(c: &mut Checks) {
    for n in 1..=5usize {
        let shift: Matrix<BigRational> = Matrix::from_fn(n, n, |r, col| {
            if r == col + 1 {
                q(1, 1)
            } else {
                q(0, 1)
            }
        });
        let image = |k: usize| projections(&shift.pow(k)).expect("rational").image;
        let first_stable = (0..=n + 1).find(|&k| image(k) == image(k + 1));
        c.expect_eq(&format!("first stable power of the {n}-shift"), &first_stable.map_or(-1, |k| k as i64), &(n as i64));
    }
}

fn c04(c: &mut Checks) {
    let inclusion = m::<BigRational>(&[&["1", "0"], &["0", "1"], &["0", "0"]]);
    c.expect("inclusion 2 -> 3 is an isometry", is_isometry(&inclusion));
    // A unitary column [f | g] needs g to split the complementary projection.
    let complement = complement_of(&inclusion.dagger().then(&inclusion));
    let missing = rank(&complement);
    c.expect_eq("dimension of the complementary summand", &missing, &1);
    c.expect("that dimension is excluded from the subcategory", missing == 1);
    let g = m::<BigRational>(&[&["0"], &["0"], &["1"]]);
    let column = inclusion.hcat(&g);
    c.expect("with dimension one allowed, [f | g] is unitary", is_unitary(&column));
    let u = unitary_completion(&inclusion).expect("isometry");
    c.expect_eq("dimension of the component completion", &u.rows(), &5);
    c.expect("f is still a component of a unitary on 2 + 3", is_unitary(&u));
}

fn c05(c: &mut Checks) {
    let row = m::<Gf2>(&[&["1", "1", "1"]]);
    c.expect("[1 1 1] is a coisometry", is_coisometry(&row));
    c.expect("[1 1 1] is not an isometry", !is_isometry(&row));
}

fn c06(c: &mut Checks) {
    let p = m::<BigRational>(&[&["1", "0"], &["0", "0"]]);
    let a = m::<BigRational>(&[&["1", "1"], &["0", "1"]]);
    c.expect_eq("p;a", &p.then(&a), &p);
    c.expect_verdict("pinv(p;a)", &pinv(&p.then(&a)).verdict, &Verdict::Exists(p.clone()));
    let reversed = pinv(&a).verdict.into_exists().unwrap().then(&pinv(&p).verdict.into_exists().unwrap());
    c.expect_eq("pinv(a);pinv(p)", &reversed, &m(&[&["1", "-1"], &["0", "0"]]));
}

fn c07(c: &mut Checks) {
    let p = m::<Bool>(&[&["1", "0"], &["1", "0"]]);
    let pp = m::<Bool>(&[&["1", "1"], &["0", "0"]]);
    c.expect_verdict("pinv(p)", &pinv(&p).verdict, &Verdict::Exists(pp.clone()));
    c.expect_verdict("pinv(p;p)", &pinv(&p.then(&p)).verdict, &Verdict::Exists(pp.then(&pp)));
    let pr = projections(&p).expect("boolean pinv");
    c.expect_eq("image projection", &pr.image, &m(&[&["1", "1"], &["1", "1"]]));
    c.expect_eq("coimage projection", &pr.coimage, &m(&[&["1", "0"], &["0", "0"]]));
    c.expect(
        "projections do not commute",
        pr.image.then(&pr.coimage) != pr.coimage.then(&pr.image),
    );
    let composite = pinv_compose(&p, &p).expect("composable");
    let ok = matches!(&composite, Verdict::Unknown(msg) if msg.to_string().contains("passes"));
    c.expect(
        format!("sufficient condition fails but the reversed composite passes ({})", composite.tag()),
        ok,
    );
}

fn c08(c: &mut Checks) {
    let col = m::<BigInt>(&[&["1"], &["1"]]);
    let r = solve_left(&col, &Matrix::identity(1)).expect("shapes");
    let ok = matches!(&r, Verdict::Exists(s) if col.then(s).is_identity());
    c.expect("[1;1] has an integer retraction", ok);
    c.expect("[1;1] is decided mono", is_mono(&col) == Some(true));
    let via_pinv = split_mono_retraction(&col).expect("mono");
    c.expect_verdict("retraction through the pseudoinverse", &via_pinv, &absent());
    c.expect_verdict("pinv over the integers", &pinv(&col).verdict, &absent());
    let lifted = col.map(|z| BigRational::from_integer(z.clone()));
    c.expect_verdict("pinv over the rationals", &pinv(&lifted).verdict, &Verdict::Exists(Matrix::from_rows(vec![vec![q(1, 2), q(1, 2)]])));
}

fn c09(c: &mut Checks) {
    let f = m::<BigInt>(&[&["1", "0"], &["0", "-1"]]);
    let tp = TraceProblem::trailing(f, 1).expect("1 + 1");
    c.expect_verdict("kernel-image trace", &kernel_image_trace(&tp).verdict, &Verdict::Exists(m(&[&["1"]])));
    c.expect_verdict("pseudotrace", &pseudotrace(&tp).verdict, &absent());
}

fn c10(c: &mut Checks) {
    let f = m::<Dual>(&[&["-1", "x"], &["x", "1"]]);
    c.expect("[[-1,x],[x,1]] is unitary", is_unitary(&f));
    let tp = TraceProblem::trailing(f, 1).expect("1 + 1");
    c.expect_verdict("pseudotrace", &pseudotrace(&tp).verdict, &Verdict::Exists(m(&[&["-1"]])));
    c.expect_verdict("kernel-image trace", &kernel_image_trace(&tp).verdict, &absent());
}

fn c11(c: &mut Checks) {
    let col = m::<Bool>(&[&["1"], &["1"]]);
    c.expect("[1;1] is an isometry", is_isometry(&col));
    // A kernel of f receives every g with g;f = 0. Only f = 0 is killed by
    // [1;1], and then id_2 would have to factor through it.
    let killers = (0..=3)
        .flat_map(|k| all_bool_matrices(k, 2))
        .filter(|f| col.then(f).is_zero())
        .all(|f| f.is_zero());
    c.expect("every f with [1;1];f = 0 is zero", killers);
    let factorizations = all_bool_matrices(1, 2)
        .filter(|h| h.then(&col).is_identity())
        .count();
    c.expect_eq("factorizations of id_2 through [1;1]", &factorizations, &0);
    let solved = solve_right(&col, &Matrix::identity(2)).expect("shapes");
    c.expect_verdict("solver for h;[1;1] = id_2", &solved, &absent());
}

fn c12(c: &mut Checks) {
    let p = m::<Bool>(&[&["1"]]);
    c.expect_eq("p + q", &p.plus(&p), &Matrix::identity(1));
    c.expect("p;q is nonzero", !p.then(&p).is_zero());
    c.expect("p and q are not complementary", !complementary(&p, &p));
    let isos = all_bool_matrices(2, 1)
        .flat_map(|s| all_bool_matrices(1, 2).map(move |r| (s.clone(), r)))
        .filter(|(s, r)| s.then(r).is_identity() && r.then(s).is_identity())
        .count();
    c.expect_eq("isomorphisms between 1 and 2", &isos, &0);
}

fn c13(c: &mut Checks) {
    let x = m::<WordRigXY>(&[&["x"]]);
    let y = m::<WordRigXY>(&[&["y"]]);
    let full = |f: Matrix<WordRigXY>| TraceProblem::new(f, 0, 0, 1).expect("1 = 0 + 1");
    let zero_side = y.then(&x);
    c.expect_eq("[y];[x]", &zero_side, &m(&[&["0"]]));
    let defined = kernel_image_trace(&full(zero_side)).verdict;
    c.expect_verdict("trace of [y];[x]", &defined, &Verdict::Exists(Matrix::zero(0, 0)));
    let other = x.then(&y);
    c.expect_eq("[x];[y]", &other, &m(&[&["y x"]]));
    let undefined = kernel_image_trace(&full(other)).verdict;
    c.expect_verdict("trace of [x];[y]", &undefined, &absent());
}

fn c14(c: &mut Checks) {
    let col = m::<Bool>(&[&["1"], &["1"]]);
    c.expect_verdict("contraction", &is_contraction(&col).map(|_| 1), &Verdict::Exists(1));
    c.expect_verdict("cocontraction", &is_cocontraction(&col).map(|_| 1), &absent());
}

/// Isometries `1 -> n` have a single nonzero entry `x^a`; coisometries
/// `n -> 1` are their daggers. Composites are therefore monomials
/// `x!^b x^a`, which reduce to powers of one generator.
fn c15(c: &mut Checks) {
    let target = m::<FreeIsometry>(&[&["x x!"]]);
    let power = |name: &str, k: usize| -> FreeIsometry {
        if k == 0 {
            FreeIsometry::parse("1").unwrap()
        } else {
            FreeIsometry::parse(&format!("{name}^{k}")).unwrap()
        }
    };
    let mut tried = 0;
    let mut hits = 0;
    let mut bad_candidates = 0;
    for n in 1..=3 {
        for slot_i in 0..n {
            for a in 0..=6 {
                let mut i = Matrix::<FreeIsometry>::zero(n, 1);
                i.set(slot_i, 0, power("x", a));
                for slot_c in 0..n {
                    for b in 0..=6 {
                        let mut co = Matrix::<FreeIsometry>::zero(1, n);
                        co.set(0, slot_c, power("x!", b));
                        tried += 1;
                        if !is_isometry(&i) || !is_coisometry(&co) {
                            bad_candidates += 1;
                        }
                        if i.then(&co) == target {
                            hits += 1;
                        }
                    }
                }
            }
        }
    }
    c.expect_eq("candidates failing the class predicates", &bad_candidates, &0);
    c.expect(format!("{hits} of {tried} isometry-then-coisometry composites equal x x!"), hits == 0);
    c.expect("x x! is a coisometry-then-isometry composite", {
        let x = m::<FreeIsometry>(&[&["x"]]);
        is_isometry(&x) && x.dagger().then(&x) == target
    });
}

fn c16(c: &mut Checks) {
    for ((p, qq, h), want) in [((1, 0, 1), "1"), ((3, 4, 5), "-1"), ((5, 12, 13), "-1")] {
        let tp = TraceProblem::trailing(rotation(p, qq, h), 1).expect("1 + 1");
        c.expect_verdict(
            &format!("trace of the ({p}, {qq}, {h}) rotation"),
            &kernel_image_trace(&tp).verdict,
            &Verdict::Exists(m(&[&[want]])),
        );
    }
}

fn c17(c: &mut Checks) {
    let expected = [
        &["1"][..],
        &["1/2", "1/2"][..],
        &["1/3", "1/3", "1/3"][..],
        &["1/4", "1/4", "1/4", "1/4"][..],
    ];
    for (n, row) in (1..=4).zip(expected) {
        let got = diagonal_pinv_demo(n).expect("n >= 1");
        c.expect_eq(&format!("pinv of {n} ones"), &got, &m(&[row]));
    }
}

pub fn case(id: &str) -> Option<&'static Case> {
    CASES.iter().find(|c| c.id.eq_ignore_ascii_case(id))
}

pub fn run_case(case: &Case) -> CaseReport {
    let mut checks = Checks {
        passed: true,
        details: Vec::new(),
    };
    let outcome = std::panic::catch_unwind(std::panic::AssertUnwindSafe(|| {
        (case.run)(&mut checks);
        checks
    }));
    let (passed, details) = match outcome {
        Ok(ch) => (ch.passed && !ch.details.is_empty(), ch.details),
        Err(e) => {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            (false, vec![format!("panicked: {msg}")])
        }
    };
    CaseReport {
        id: case.id,
        title: case.title,
        rig: case.rig,
        passed,
        details,
    }
}

/// All cases, ordered by id.
pub fn run_all() -> Vec<CaseReport> {
    CASES.iter().map(run_case).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partial_permutation_count() {
        // 1 + 2*2*... : 2x2 signed partial permutations number 1 + 8 + 8 = 17.
        assert_eq!(signed_partial_permutations(2, 2).len(), 17);
        assert_eq!(signed_partial_permutations(1, 3).len(), 7);
    }

    #[test]
    fn every_case_passes() {
        for r in run_all() {
            assert!(r.passed, "{r}: {:#?}", r.details);
        }
    }

    #[test]
    fn lookup_is_case_insensitive() {
        assert_eq!(case("c09").map(|c| c.id), Some("C09"));
        assert!(case("C18").is_none());
    }
}
