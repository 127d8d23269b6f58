//! `daggertrace`: evaluate sessions, run law suites and replay the
//! counterexample corpus.

mod eval;
mod report;
mod session;

use std::io::Read as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use daggertrace::checks::{self, SuiteReport, SuiteRig};
use daggertrace::corpus::{self, CaseReport};
use daggertrace::generators::GenConfig;
use daggertrace::RigKind;
use serde::Serialize;

use eval::{Evaluator, SessionRig, Value};
use report::{ErrorJson, Report, ResultJson};
use session::{parse_session, Expr, Session, Statement, StatementKind};

#[derive(Parser)]
#[command(name = "daggertrace", version, about = "Exact partial traces and pseudoinverses over dagger rigs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct OutputArgs {
    /// Report format.
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the report here instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct SessionArgs {
    /// Session file, or `-` for stdin.
    session: PathBuf,
    /// Rig name; overrides the session's `rig` line.
    #[arg(long)]
    rig: Option<String>,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate every statement of a session.
    Eval(SessionArgs),
    /// Pseudoinverse of every binding of a session.
    Pinv(SessionArgs),
    /// Kernel-image trace and pseudotrace of every binding over its trailing dimensions.
    Trace {
        #[command(flatten)]
        args: SessionArgs,
        /// Number of trailing dimensions to trace out.
        #[arg(long, default_value_t = 1)]
        traced: usize,
    },
    /// Run a randomized law suite.
    Check {
        /// Suite name, or `all`.
        #[arg(long)]
        suite: String,
        #[arg(long, default_value = "rationals")]
        rig: String,
        #[arg(long, env = "DAGGERTRACE_SEED", default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        cases: usize,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Replay the counterexample corpus.
    Corpus {
        /// Run a single case, e.g. C09.
        #[arg(long)]
        case: Option<String>,
        #[command(flatten)]
        out: OutputArgs,
    },
}

enum Mode {
    Eval,
    Pinv,
    Trace(usize),
}

impl Mode {
    fn name(&self) -> &'static str {
        match self {
            Mode::Eval => "eval",
            Mode::Pinv => "pinv",
            Mode::Trace(_) => "trace",
        }
    }
}

fn emit(out: &OutputArgs, text: &str, json: &str) -> Result<(), String> {
    let body = match out.format {
        Format::Text => text,
        Format::Json => json,
    };
    match &out.output {
        Some(p) => std::fs::write(p, body).map_err(|e| format!("{}: {e}", p.display())),
        None => {
            print!("{body}");
            Ok(())
        }
    }
}

fn read_source(path: &Path) -> Result<String, String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| format!("stdin: {e}"))?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
    }
}

fn usage_error(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("daggertrace: {msg}");
    ExitCode::from(2)
}

/// Statements for `pinv` and `trace`: the session's bindings, then one
/// `show` per bound matrix.
fn derived<R: SessionRig>(session: &Session, mode: &Mode) -> Result<Vec<Statement>, eval::EvalError> {
    let lets: Vec<&Statement> = session
        .statements
        .iter()
        .filter(|s| matches!(s.kind, StatementKind::Let(..)))
        .collect();
    let mut ev = Evaluator::<R>::default();
    for st in &lets {
        ev.run(st)?;
    }
    let mut out = Vec::new();
    for st in &lets {
        let StatementKind::Let(name, _) = &st.kind else { unreachable!() };
        if lets.iter().rev().find(|s| matches!(&s.kind, StatementKind::Let(n, _) if n == name)).map(|s| s.line) != Some(st.line) {
            continue;
        }
        let Some(Value::Partial { verdict, .. }) = ev.binding(name) else { continue };
        let target = Expr::Name(name.clone());
        let expr = match mode {
            Mode::Pinv => Expr::Call("pinv".into(), vec![target]),
            Mode::Trace(t) => {
                let (rows, cols) = verdict.exists().map_or((*t, *t), |m| (m.rows(), m.cols()));
                if rows < *t || cols < *t {
                    return Err(eval::EvalError {
                        line: st.line,
                        statement: st.text.clone(),
                        message: format!("{name} is {rows}x{cols}; cannot trace out {t} dimensions"),
                    });
                }
                Expr::Call(
                    "trace".into(),
                    vec![target, Expr::Sizes(vec![cols - t]), Expr::Sizes(vec![rows - t])],
                )
            }
            Mode::Eval => unreachable!(),
        };
        out.push(Statement {
            line: st.line,
            text: format!("show {expr}"),
            kind: StatementKind::Show(expr),
        });
    }
    Ok(lets.into_iter().cloned().chain(out).collect())
}

fn evaluate<R: SessionRig>(session: &Session, mode: &Mode) -> (Vec<ResultJson>, Option<eval::EvalError>) {
    let statements = match mode {
        Mode::Eval => session.statements.clone(),
        _ => match derived::<R>(session, mode) {
            Ok(s) => s,
            Err(e) => return (Vec::new(), Some(e)),
        },
    };
    let bindings = statements.len() - statements.iter().filter(|s| !matches!(s.kind, StatementKind::Let(..))).count();
    let mut ev = Evaluator::<R>::default();
    let mut results = Vec::new();
    for (i, st) in statements.iter().enumerate() {
        match ev.run(st) {
            // The derived commands report only their synthesized rows.
            Ok(o) if matches!(mode, Mode::Eval) || i >= bindings => results.push(ResultJson::of(&o)),
            Ok(_) => {}
            Err(e) => return (results, Some(e)),
        }
    }
    (results, None)
}

fn run_session(args: &SessionArgs, mode: Mode) -> ExitCode {
    let source = read_source(&args.session);
    let src_name = args.session.display().to_string();
    let text = match source {
        Ok(t) => t,
        Err(e) => return usage_error(e),
    };
    let finish = |rig: Option<&str>, results, error| {
        let report = Report::new(mode.name(), &src_name, rig, results, error);
        if let Some(e) = &report.error {
            match &e.statement {
                Some(st) => eprintln!("{}: error in '{st}': {}", e.location, e.message),
                None => eprintln!("{}: {}", e.location, e.message),
            }
        }
        if let Err(e) = emit(&args.out, &report.to_text(), &report.to_json()) {
            return usage_error(e);
        }
        ExitCode::from(report.summary.exit_code as u8)
    };
    let session = match parse_session(&text) {
        Ok(s) => s,
        Err(e) => {
            let err = ErrorJson {
                location: format!("{src_name}:{}:{}", e.line, e.column),
                statement: None,
                message: e.message,
            };
            return finish(args.rig.as_deref(), Vec::new(), Some(err));
        }
    };
    let Some(rig_name) = args.rig.clone().or(session.rig.clone()) else {
        return usage_error(format!("{src_name}: no rig; add a `rig NAME` line or pass --rig"));
    };
    let Some(kind) = RigKind::from_name(&rig_name) else {
        let names: Vec<&str> = RigKind::ALL.iter().map(|k| k.name()).collect();
        return usage_error(format!("unknown rig '{rig_name}'; expected one of {}", names.join(", ")));
    };
    let (results, err) = with_rig!(kind, evaluate, &session, &mode);
    let err = err.map(|e| ErrorJson {
        location: format!("{src_name}:{}:1", e.line),
        statement: Some(e.statement),
        message: e.message,
    });
    finish(Some(kind.name()), results, err)
}

#[derive(Serialize)]
struct SuiteJson<'a> {
    suite: &'a str,
    rig: &'a str,
    seed: u64,
    cases: usize,
    checked: usize,
    passed: bool,
    failures: &'a [String],
    notes: &'a [String],
}

#[derive(Serialize)]
struct CheckJson<'a> {
    schema: &'static str,
    suite: &'a str,
    rig: &'a str,
    seed: u64,
    cases: usize,
    passed: bool,
    reports: Vec<SuiteJson<'a>>,
}

fn suite_rig(name: &str) -> Option<SuiteRig> {
    match name {
        "rationals" => Some(SuiteRig::Rationals),
        "gaussian-rationals" => Some(SuiteRig::Gaussian),
        "integers" => Some(SuiteRig::Integers),
        _ => None,
    }
}

fn run_check(suite: &str, rig: &str, seed: u64, cases: usize, out: &OutputArgs) -> ExitCode {
    let Some(srig) = suite_rig(rig) else {
        return usage_error(format!("check runs over rationals, gaussian-rationals or integers, not '{rig}'"));
    };
    let cfg = GenConfig::with_seed(seed);
    let reports: Vec<SuiteReport> = if suite == "all" {
        checks::SUITES
            .iter()
            .filter_map(|s| checks::run_suite(s, srig, &cfg, cases))
            .flatten()
            .collect()
    } else {
        match checks::run_suite(suite, srig, &cfg, cases) {
            Some(r) => r,
            None if checks::SUITES.contains(&suite) => {
                return usage_error(format!("suite '{suite}' does not run over {rig}"))
            }
            None => return usage_error(format!("unknown suite '{suite}'; expected all or one of {}", checks::SUITES.join(", "))),
        }
    };
    let passed = reports.iter().all(SuiteReport::passed);
    let mut text = String::new();
    for r in &reports {
        text += &format!("{} {r}\n", if r.passed() { "pass" } else { "FAIL" });
        for n in &r.notes {
            text += &format!("  note: {n}\n");
        }
        for f in r.failures.iter().take(5) {
            text += &format!("  {f}\n");
        }
    }
    let json = CheckJson {
        schema: "daggertrace.check/v1",
        suite,
        rig,
        seed,
        cases,
        passed,
        reports: reports
            .iter()
            .map(|r| SuiteJson {
                suite: &r.suite,
                rig: r.rig,
                seed: r.seed,
                cases: r.cases,
                checked: r.checked,
                passed: r.passed(),
                failures: &r.failures,
                notes: &r.notes,
            })
            .collect(),
    };
    let json = serde_json::to_string_pretty(&json).expect("serializes") + "\n";
    if let Err(e) = emit(out, &text, &json) {
        return usage_error(e);
    }
    ExitCode::from(if passed { 0 } else { 1 })
}

#[derive(Serialize)]
struct CorpusJson<'a> {
    schema: &'static str,
    passed: bool,
    cases: Vec<CaseJson<'a>>,
}

#[derive(Serialize)]
struct CaseJson<'a> {
    id: &'a str,
    title: &'a str,
    rig: &'a str,
    passed: bool,
    details: &'a [String],
}

fn run_corpus(case: Option<&str>, out: &OutputArgs) -> ExitCode {
    let reports: Vec<CaseReport> = match case {
        Some(id) => match corpus::case(id) {
            Some(c) => vec![corpus::run_case(c)],
            None => return usage_error(format!("unknown case '{id}'")),
        },
        None => corpus::run_all(),
    };
    let passed = reports.iter().all(|r| r.passed);
    let mut text = String::new();
    for r in &reports {
        text += &format!("{r}\n");
        for d in &r.details {
            text += &format!("  {d}\n");
        }
    }
    let json = CorpusJson {
        schema: "daggertrace.corpus/v1",
        passed,
        cases: reports
            .iter()
            .map(|r| CaseJson {
                id: r.id,
                title: r.title,
                rig: r.rig,
                passed: r.passed,
                details: &r.details,
            })
            .collect(),
    };
    let json = serde_json::to_string_pretty(&json).expect("serializes") + "\n";
    if let Err(e) = emit(out, &text, &json) {
        return usage_error(e);
    }
    ExitCode::from(if passed { 0 } else { 1 })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match &cli.command {
        Command::Eval(args) => run_session(args, Mode::Eval),
        Command::Pinv(args) => run_session(args, Mode::Pinv),
        Command::Trace { args, traced } => run_session(args, Mode::Trace(*traced)),
        Command::Check {
            suite,
            rig,
            seed,
            cases,
            out,
        } => run_check(suite, rig, *seed, *cases, out),
        Command::Corpus { case, out } => run_corpus(case.as_deref(), out),
    }
}
