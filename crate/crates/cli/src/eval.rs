//! Evaluation of parsed sessions over one rig.

use std::collections::HashMap;

use daggertrace::backend::{self, Backend};
use daggertrace::linalg::Solve;
use daggertrace::matcat;
use daggertrace::pinv;
use daggertrace::trace::{kernel_image_trace, pseudotrace, TraceProblem, TraceResult};
use daggertrace::{
    BigInt, BigRational, Bool, Dual, FreeIsometry, Gaussian, Gf2, Matrix, Rig, Verdict,
    WordRigXY,
};
use thiserror::Error;

use crate::session::{Expr, Statement, StatementKind};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("line {line} ({statement}): {message}")]
pub struct EvalError {
    pub line: usize,
    pub statement: String,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Truth {
    True,
    False,
    Unknown(String),
}

impl Truth {
    fn from_verdict<T>(v: &Verdict<T>) -> Self {
        match v {
            Verdict::Exists(_) => Truth::True,
            Verdict::NotExists(_) => Truth::False,
            Verdict::Unknown(r) => Truth::Unknown(r.clone()),
        }
    }
}

impl From<bool> for Truth {
    fn from(b: bool) -> Self {
        if b {
            Truth::True
        } else {
            Truth::False
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value<R: Rig> {
    /// A matrix, or the verdict of an operation that may not produce one.
    Partial {
        verdict: Verdict<Matrix<R>>,
        method: Option<&'static str>,
    },
    Truth(Truth),
    Trace {
        kernel_image: Verdict<Matrix<R>>,
        pseudotrace: Verdict<Matrix<R>>,
        /// `(i, k)` behind the kernel-image value.
        witnesses: Option<(Matrix<R>, Matrix<R>)>,
        /// `(id - f_XX)⁺` behind the pseudotrace.
        pinv_used: Option<Matrix<R>>,
    },
    Sizes(Vec<usize>),
    Nat(usize),
}

impl<R: Rig> Value<R> {
    fn matrix(m: Matrix<R>) -> Self {
        Value::Partial {
            verdict: Verdict::Exists(m),
            method: None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Ok,
    Pass,
    Fail,
    Unknown,
}

impl Status {
    pub fn name(self) -> &'static str {
        match self {
            Status::Ok => "ok",
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Unknown => "unknown",
        }
    }
}

#[derive(Clone, Debug)]
pub struct Outcome<R: Rig> {
    pub line: usize,
    pub statement: String,
    pub keyword: &'static str,
    pub value: Value<R>,
    pub status: Status,
}

/// What a rig can do beyond plain rig arithmetic.
pub trait SessionRig: Rig + Solve {
    fn dagger_of(m: &Matrix<Self>) -> Option<Matrix<Self>>;

    fn pinv_of(m: &Matrix<Self>) -> (Verdict<Matrix<Self>>, Option<&'static str>);

    fn pseudotrace_of(tp: &TraceProblem<Self>) -> TraceResult<Self>;

    fn pinv_compose_of(f: &Matrix<Self>, g: &Matrix<Self>) -> Result<Verdict<Matrix<Self>>, String>;

    /// Predicates that need the dagger or positivity.
    fn decide(name: &str, args: &[Matrix<Self>]) -> Result<Truth, String>;
}

fn decide_backend<R: Backend>(name: &str, args: &[Matrix<R>]) -> Result<Truth, String> {
    let one = || match args {
        [f] => Ok(f),
        _ => Err(format!("{name} takes one matrix")),
    };
    Ok(match name {
        "is_isometry" => matcat::is_isometry(one()?).into(),
        "is_coisometry" => matcat::is_coisometry(one()?).into(),
        "is_unitary" => matcat::is_unitary(one()?).into(),
        "is_self_adjoint" => matcat::is_self_adjoint(one()?).into(),
        "is_dagger_idempotent" => matcat::is_dagger_idempotent(one()?).into(),
        "is_contraction" => Truth::from_verdict(&backend::is_contraction(one()?)),
        "is_cocontraction" => Truth::from_verdict(&backend::is_cocontraction(one()?)),
        "is_ep" => Truth::from_verdict(&pinv::is_ep(one()?)),
        "is_mono" => match pinv::is_mono(one()?) {
            Some(b) => b.into(),
            None => Truth::Unknown("monicity is not decidable here".into()),
        },
        "leq" => match args {
            [f, g] => Truth::from_verdict(&backend::leq_positive(f, g).map_err(|e| e.to_string())?),
            _ => return Err("leq takes two matrices".into()),
        },
        _ => return Err(format!("unknown predicate {name}")),
    })
}

macro_rules! backend_rig {
    ($($t:ty),*) => {$(
        impl SessionRig for $t {
            fn dagger_of(m: &Matrix<Self>) -> Option<Matrix<Self>> {
                Some(m.dagger())
            }

            fn pinv_of(m: &Matrix<Self>) -> (Verdict<Matrix<Self>>, Option<&'static str>) {
                let r = pinv::pinv(m);
                (r.verdict, Some(r.method.tag()))
            }

            fn pseudotrace_of(tp: &TraceProblem<Self>) -> TraceResult<Self> {
                pseudotrace(tp)
            }

            fn pinv_compose_of(f: &Matrix<Self>, g: &Matrix<Self>) -> Result<Verdict<Matrix<Self>>, String> {
                pinv::pinv_compose(f, g).map_err(|e| e.to_string())
            }

            fn decide(name: &str, args: &[Matrix<Self>]) -> Result<Truth, String> {
                decide_backend(name, args)
            }
        }
    )*};
}

backend_rig!(BigRational, Gaussian, BigInt, Gf2, Dual, Bool, FreeIsometry);

const NO_DAGGER: &str = "word-rig-xy has no dagger";

impl SessionRig for WordRigXY {
    fn dagger_of(_m: &Matrix<Self>) -> Option<Matrix<Self>> {
        None
    }

    fn pinv_of(_m: &Matrix<Self>) -> (Verdict<Matrix<Self>>, Option<&'static str>) {
        (Verdict::Unknown(NO_DAGGER.into()), None)
    }

    fn pseudotrace_of(_tp: &TraceProblem<Self>) -> TraceResult<Self> {
        TraceResult {
            verdict: Verdict::Unknown(NO_DAGGER.into()),
            witnesses: None,
            pinv_used: None,
        }
    }

    fn pinv_compose_of(_f: &Matrix<Self>, _g: &Matrix<Self>) -> Result<Verdict<Matrix<Self>>, String> {
        Ok(Verdict::Unknown(NO_DAGGER.into()))
    }

    fn decide(name: &str, _args: &[Matrix<Self>]) -> Result<Truth, String> {
        if PREDICATES.contains(&name) {
            Ok(Truth::Unknown(NO_DAGGER.into()))
        } else {
            Err(format!("unknown predicate {name}"))
        }
    }
}

const PREDICATES: &[&str] = &[
    "is_isometry",
    "is_coisometry",
    "is_unitary",
    "is_self_adjoint",
    "is_dagger_idempotent",
    "is_contraction",
    "is_cocontraction",
    "is_ep",
    "is_mono",
    "leq",
];

/// Splits `f` for tracing from the domain and codomain size lists. A list
/// summing to the dimension traces its last block; a shorter list gives the
/// outer blocks and the remainder is traced.
fn trace_shape(rows: usize, cols: usize, dom: &[usize], cod: &[usize]) -> Result<(usize, usize, usize), String> {
    let split = |sizes: &[usize], dim: usize, side: &str| -> Result<(usize, usize), String> {
        let sum: usize = sizes.iter().sum();
        match sum.cmp(&dim) {
            std::cmp::Ordering::Equal => {
                let x = *sizes.last().ok_or_else(|| format!("empty {side} partition"))?;
                Ok((sum - x, x))
            }
            std::cmp::Ordering::Less => Ok((sum, dim - sum)),
            std::cmp::Ordering::Greater => Err(format!("{side} partition {sizes:?} exceeds dimension {dim}")),
        }
    };
    let (a, x) = split(dom, cols, "domain")?;
    let (b, x2) = split(cod, rows, "codomain")?;
    if x != x2 {
        return Err(format!("traced blocks differ: {x} in the domain, {x2} in the codomain"));
    }
    Ok((a, b, x))
}

pub fn parse_literal<R: Rig>(rows: &[Vec<String>], cols: usize) -> Result<Matrix<R>, String> {
    let mut data = Vec::with_capacity(rows.len() * cols);
    for row in rows {
        for e in row {
            data.push(R::parse(e).map_err(|err| format!("entry '{e}' {err}"))?);
        }
    }
    Matrix::new(rows.len(), cols, data).map_err(|e| e.to_string())
}

pub struct Evaluator<R: Rig> {
    env: HashMap<String, Value<R>>,
}

impl<R: SessionRig> Default for Evaluator<R> {
    fn default() -> Self {
        Evaluator { env: HashMap::new() }
    }
}

impl<R: SessionRig> Evaluator<R> {
    pub fn binding(&self, name: &str) -> Option<&Value<R>> {
        self.env.get(name)
    }

    pub fn run(&mut self, st: &Statement) -> Result<Outcome<R>, EvalError> {
        let fail = |message: String| EvalError {
            line: st.line,
            statement: st.text.clone(),
            message,
        };
        let (value, status) = match &st.kind {
            StatementKind::Let(name, e) => {
                let v = self.eval(e).map_err(fail)?;
                self.env.insert(name.clone(), v.clone());
                (v, Status::Ok)
            }
            StatementKind::Show(e) => (self.eval(e).map_err(fail)?, Status::Ok),
            StatementKind::Assert(e, None) => {
                let v = self.eval(e).map_err(fail)?;
                let status = match truth_of(&v).map_err(fail)? {
                    Truth::True => Status::Pass,
                    Truth::False => Status::Fail,
                    Truth::Unknown(_) => Status::Unknown,
                };
                (v, status)
            }
            StatementKind::Assert(lhs, Some(rhs)) => {
                let l = self.eval(lhs).map_err(fail)?;
                let r = self.eval(rhs).map_err(fail)?;
                let status = match (defined(&l).map_err(fail)?, defined(&r).map_err(fail)?) {
                    (Verdict::Unknown(_), _) | (_, Verdict::Unknown(_)) => Status::Unknown,
                    (Verdict::Exists(a), Verdict::Exists(b)) if a == b => Status::Pass,
                    _ => Status::Fail,
                };
                (l, status)
            }
            StatementKind::Refute(e) => {
                let v = self.eval(e).map_err(fail)?;
                let status = match truth_of(&v).map_err(fail)? {
                    Truth::True => Status::Fail,
                    Truth::False => Status::Pass,
                    Truth::Unknown(_) => Status::Unknown,
                };
                (v, status)
            }
        };
        Ok(Outcome {
            line: st.line,
            statement: st.text.clone(),
            keyword: st.kind.keyword(),
            value,
            status,
        })
    }

    fn eval(&self, e: &Expr) -> Result<Value<R>, String> {
        Ok(match e {
            Expr::Name(n) => self.env.get(n).cloned().ok_or_else(|| format!("'{n}' is not defined"))?,
            Expr::Literal { rows, cols } => Value::matrix(parse_literal(rows, *cols)?),
            Expr::Sizes(s) => Value::Sizes(s.clone()),
            Expr::Nat(n) => Value::Nat(*n),
            Expr::Then(f, g) => {
                let (f, g) = (self.partial(f)?, self.partial(g)?);
                lift2(f, g, |f, g| f.compose(&g).map_err(|e| e.to_string()))?
            }
            Expr::Add(f, g) => {
                let (f, g) = (self.partial(f)?, self.partial(g)?);
                lift2(f, g, |f, g| f.add(&g).map_err(|e| e.to_string()))?
            }
            Expr::Dagger(f) => {
                let f = self.partial(f)?;
                lift1(f, |f| R::dagger_of(&f).ok_or_else(|| NO_DAGGER.to_string()))?
            }
            Expr::Call(name, args) => self.call(name, args)?,
        })
    }

    fn partial(&self, e: &Expr) -> Result<Verdict<Matrix<R>>, String> {
        match self.eval(e)? {
            Value::Partial { verdict, .. } => Ok(verdict),
            Value::Trace { kernel_image, .. } => Ok(kernel_image),
            _ => Err(format!("{e} is not a matrix")),
        }
    }

    fn matrices(&self, name: &str, args: &[Expr]) -> Result<Verdict<Vec<Matrix<R>>>, String> {
        let mut out = Vec::new();
        for a in args {
            match self.partial(a)? {
                Verdict::Exists(m) => out.push(m),
                Verdict::NotExists(c) => return Ok(Verdict::NotExists(c)),
                Verdict::Unknown(r) => return Ok(Verdict::Unknown(r)),
            }
        }
        if out.is_empty() && name != "oplus" {
            return Err(format!("{name} needs an argument"));
        }
        Ok(Verdict::Exists(out))
    }

    fn nat(&self, e: &Expr) -> Result<usize, String> {
        match self.eval(e)? {
            Value::Nat(n) => Ok(n),
            _ => Err(format!("{e} is not a size")),
        }
    }

    fn sizes(&self, e: &Expr) -> Result<Vec<usize>, String> {
        match self.eval(e)? {
            Value::Sizes(s) => Ok(s),
            Value::Nat(n) => Ok(vec![n]),
            _ => Err(format!("{e} is not a size list")),
        }
    }

    fn call(&self, name: &str, args: &[Expr]) -> Result<Value<R>, String> {
        let arity = |n: usize| {
            if args.len() == n {
                Ok(())
            } else {
                Err(format!("{name} takes {n} arguments, got {}", args.len()))
            }
        };
        match name {
            "id" => {
                arity(1)?;
                return Ok(Value::matrix(Matrix::identity(self.nat(&args[0])?)));
            }
            "zero" => {
                arity(2)?;
                return Ok(Value::matrix(Matrix::zero(self.nat(&args[0])?, self.nat(&args[1])?)));
            }
            "swap" => {
                arity(2)?;
                return Ok(Value::matrix(Matrix::swap(self.nat(&args[0])?, self.nat(&args[1])?)));
            }
            "trace" | "kitrace" | "pseudotrace" => {
                arity(3)?;
                let dom = self.sizes(&args[1])?;
                let cod = self.sizes(&args[2])?;
                let f = match self.partial(&args[0])? {
                    Verdict::Exists(f) => f,
                    other => {
                        return Ok(match name {
                            "trace" => Value::Trace {
                                kernel_image: other.clone(),
                                pseudotrace: other,
                                witnesses: None,
                                pinv_used: None,
                            },
                            _ => Value::Partial { verdict: other, method: None },
                        })
                    }
                };
                let (a, b, x) = trace_shape(f.rows(), f.cols(), &dom, &cod)?;
                let tp = TraceProblem::new(f, a, b, x).map_err(|e| e.to_string())?;
                return Ok(match name {
                    "kitrace" => Value::Partial {
                        verdict: kernel_image_trace(&tp).verdict,
                        method: None,
                    },
                    "pseudotrace" => Value::Partial {
                        verdict: R::pseudotrace_of(&tp).verdict,
                        method: None,
                    },
                    _ => {
                        let ki = kernel_image_trace(&tp);
                        let pt = R::pseudotrace_of(&tp);
                        Value::Trace {
                            kernel_image: ki.verdict,
                            pseudotrace: pt.verdict,
                            witnesses: ki.witnesses,
                            pinv_used: pt.pinv_used,
                        }
                    }
                });
            }
            _ => {}
        }
        let ms = match self.matrices(name, args)? {
            Verdict::Exists(ms) => ms,
            Verdict::NotExists(c) => {
                return Ok(Value::Partial {
                    verdict: Verdict::NotExists(c),
                    method: None,
                })
            }
            Verdict::Unknown(r) => {
                return Ok(if PREDICATES.contains(&name) || RIG_PREDICATES.contains(&name) {
                    Value::Truth(Truth::Unknown(r))
                } else {
                    Value::Partial {
                        verdict: Verdict::Unknown(r),
                        method: None,
                    }
                })
            }
        };
        let m = |v: Matrix<R>| Value::matrix(v);
        Ok(match (name, ms.as_slice()) {
            ("dagger", [f]) => m(R::dagger_of(f).ok_or(NO_DAGGER)?),
            ("then", [f, g]) => m(f.compose(g).map_err(|e| e.to_string())?),
            ("add", [f, g]) => m(f.add(g).map_err(|e| e.to_string())?),
            ("oplus", fs) => m(fs.iter().fold(Matrix::zero(0, 0), |acc, f| acc.oplus(f))),
            ("neg", [f]) => Value::Partial {
                verdict: f.try_negate(),
                method: None,
            },
            ("pinv", [f]) => {
                let (verdict, method) = R::pinv_of(f);
                Value::Partial { verdict, method }
            }
            ("pinv_compose", [f, g]) => Value::Partial {
                verdict: R::pinv_compose_of(f, g)?,
                method: None,
            },
            ("is_idempotent", [f]) => Value::Truth(matcat::is_idempotent(f).into()),
            ("is_zero", [f]) => Value::Truth(f.is_zero().into()),
            ("is_identity", [f]) => Value::Truth(f.is_identity().into()),
            ("complementary", [p, q]) => Value::Truth(matcat::complementary(p, q).into()),
            (p, args) if PREDICATES.contains(&p) => Value::Truth(R::decide(p, args)?),
            (other, args) if FUNCTIONS.contains(&other) => {
                return Err(format!("{other} does not take {} matrices", args.len()))
            }
            (other, _) => return Err(format!("unknown function {other}")),
        })
    }
}

const RIG_PREDICATES: &[&str] = &["is_idempotent", "is_zero", "is_identity", "complementary"];

const FUNCTIONS: &[&str] = &["dagger", "then", "add", "oplus", "neg", "pinv", "pinv_compose"];

fn lift1<R: Rig>(f: Verdict<Matrix<R>>, op: impl FnOnce(Matrix<R>) -> Result<Matrix<R>, String>) -> Result<Value<R>, String> {
    let verdict = match f {
        Verdict::Exists(f) => Verdict::Exists(op(f)?),
        Verdict::NotExists(c) => Verdict::NotExists(c),
        Verdict::Unknown(r) => Verdict::Unknown(r),
    };
    Ok(Value::Partial { verdict, method: None })
}

fn lift2<R: Rig>(
    f: Verdict<Matrix<R>>,
    g: Verdict<Matrix<R>>,
    op: impl FnOnce(Matrix<R>, Matrix<R>) -> Result<Matrix<R>, String>,
) -> Result<Value<R>, String> {
    match (f, g) {
        (Verdict::Exists(f), g) => lift1(g, |g| op(f, g)),
        (other, _) => lift1(other, |_| unreachable!()),
    }
}

fn truth_of<R: Rig>(v: &Value<R>) -> Result<Truth, String> {
    Ok(match v {
        Value::Truth(t) => t.clone(),
        Value::Partial { verdict, .. } => Truth::from_verdict(verdict),
        Value::Trace { kernel_image, .. } => Truth::from_verdict(kernel_image),
        Value::Sizes(_) | Value::Nat(_) => return Err("sizes cannot be asserted".into()),
    })
}

/// The matrix behind a value, for equality assertions. Truth values compare
/// as 1x1 booleans would not, so they are rejected.
fn defined<R: Rig>(v: &Value<R>) -> Result<Verdict<Matrix<R>>, String> {
    match v {
        Value::Partial { verdict, .. } => Ok(verdict.clone()),
        Value::Trace { kernel_image, .. } => Ok(kernel_image.clone()),
        _ => Err("only matrices can be compared".into()),
    }
}

/// Runs every statement; stops at the first evaluation error.
#[cfg(test)]
pub fn run_session<R: SessionRig>(session: &crate::session::Session) -> (Vec<Outcome<R>>, Option<EvalError>) {
    let mut ev = Evaluator::<R>::default();
    let mut out = Vec::new();
    for st in &session.statements {
        match ev.run(st) {
            Ok(o) => out.push(o),
            Err(e) => return (out, Some(e)),
        }
    }
    (out, None)
}

/// Applies `f` to the concrete scalar type of `kind`.
#[macro_export]
macro_rules! with_rig {
    ($kind:expr, $f:ident $(, $arg:expr)*) => {
        match $kind {
            daggertrace::RigKind::Rationals => $f::<daggertrace::BigRational>($($arg),*),
            daggertrace::RigKind::GaussianRationals => $f::<daggertrace::Gaussian>($($arg),*),
            daggertrace::RigKind::Integers => $f::<daggertrace::BigInt>($($arg),*),
            daggertrace::RigKind::Gf2 => $f::<daggertrace::Gf2>($($arg),*),
            daggertrace::RigKind::DualNumbersZ => $f::<daggertrace::Dual>($($arg),*),
            daggertrace::RigKind::Booleans => $f::<daggertrace::Bool>($($arg),*),
            daggertrace::RigKind::WordRigXY => $f::<daggertrace::WordRigXY>($($arg),*),
            daggertrace::RigKind::FreeIsometry => $f::<daggertrace::FreeIsometry>($($arg),*),
        }
    };
}
