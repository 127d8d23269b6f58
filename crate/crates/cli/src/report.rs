//! Machine-readable and text reports.

use std::fmt::Write as _;

use daggertrace::{Matrix, Rig, Verdict};
use serde::{Deserialize, Serialize};

use crate::eval::{Outcome, Truth, Value};

pub const SCHEMA: &str = "daggertrace.report/v1";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixJson {
    pub rows: usize,
    pub cols: usize,
    /// Entries in the rig's element grammar, row-major.
    pub entries: Vec<Vec<String>>,
    pub text: String,
}

impl MatrixJson {
    pub fn of<R: Rig>(m: &Matrix<R>) -> Self {
        MatrixJson {
            rows: m.rows(),
            cols: m.cols(),
            entries: m.to_rows().iter().map(|r| r.iter().map(|e| e.to_string()).collect()).collect(),
            text: m.to_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictJson {
    pub verdict: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub matrix: Option<MatrixJson>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub reason: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub method: Option<String>,
}

impl VerdictJson {
    fn of<R: Rig>(v: &Verdict<Matrix<R>>, method: Option<&str>) -> Self {
        let (matrix, reason) = match v {
            Verdict::Exists(m) => (Some(MatrixJson::of(m)), None),
            Verdict::NotExists(c) => (None, Some(c.to_string())),
            Verdict::Unknown(r) => (None, Some(r.clone())),
        };
        VerdictJson {
            verdict: v.tag().to_string(),
            matrix,
            reason,
            method: method.map(str::to_string),
        }
    }

    fn text(&self) -> String {
        let mut s = match (&self.matrix, &self.reason) {
            (Some(m), _) => m.text.clone(),
            (None, Some(r)) => format!("{} ({r})", self.verdict),
            (None, None) => self.verdict.clone(),
        };
        if let Some(m) = &self.method {
            let _ = write!(s, " via {m}");
        }
        s
    }
}

/// Kernel-image witnesses: `f_AX = i;(id - f_XX)` and `(id - f_XX);k = f_XB`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessJson {
    pub i: MatrixJson,
    pub k: MatrixJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum ValueJson {
    Matrix(VerdictJson),
    Truth {
        value: String,
        #[serde(skip_serializing_if = "Option::is_none", default)]
        reason: Option<String>,
    },
    Trace {
        kernel_image: VerdictJson,
        pseudotrace: VerdictJson,
        #[serde(skip_serializing_if = "Option::is_none", default)]
        witnesses: Option<WitnessJson>,
        #[serde(skip_serializing_if = "Option::is_none", default)]
        pinv_used: Option<MatrixJson>,
    },
    Sizes {
        sizes: Vec<usize>,
    },
    Nat {
        value: usize,
    },
}

impl ValueJson {
    pub fn of<R: Rig>(v: &Value<R>) -> Self {
        match v {
            Value::Partial { verdict, method } => ValueJson::Matrix(VerdictJson::of(verdict, *method)),
            Value::Truth(t) => {
                let (value, reason) = match t {
                    Truth::True => ("true", None),
                    Truth::False => ("false", None),
                    Truth::Unknown(r) => ("unknown", Some(r.clone())),
                };
                ValueJson::Truth {
                    value: value.into(),
                    reason,
                }
            }
            Value::Trace {
                kernel_image,
                pseudotrace,
                witnesses,
                pinv_used,
            } => ValueJson::Trace {
                kernel_image: VerdictJson::of(kernel_image, None),
                pseudotrace: VerdictJson::of(pseudotrace, None),
                witnesses: witnesses.as_ref().map(|(i, k)| WitnessJson {
                    i: MatrixJson::of(i),
                    k: MatrixJson::of(k),
                }),
                pinv_used: pinv_used.as_ref().map(MatrixJson::of),
            },
            Value::Sizes(s) => ValueJson::Sizes { sizes: s.clone() },
            Value::Nat(n) => ValueJson::Nat { value: *n },
        }
    }

    pub fn text(&self) -> String {
        match self {
            ValueJson::Matrix(v) => v.text(),
            ValueJson::Truth { value, reason: Some(r) } => format!("{value} ({r})"),
            ValueJson::Truth { value, reason: None } => value.clone(),
            ValueJson::Trace {
                kernel_image,
                pseudotrace,
                ..
            } => format!("kernel-image {}; pseudotrace {}", kernel_image.text(), pseudotrace.text()),
            ValueJson::Sizes { sizes } => format!("{sizes:?}"),
            ValueJson::Nat { value } => value.to_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResultJson {
    pub line: usize,
    pub statement: String,
    pub kind: String,
    pub value: ValueJson,
    pub status: String,
}

impl ResultJson {
    pub fn of<R: Rig>(o: &Outcome<R>) -> Self {
        ResultJson {
            line: o.line,
            statement: o.statement.clone(),
            kind: o.keyword.to_string(),
            value: ValueJson::of(&o.value),
            status: o.status.name().to_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrorJson {
    pub location: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub statement: Option<String>,
    pub message: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub statements: usize,
    pub passed: usize,
    pub failed: usize,
    pub unknown: usize,
    pub exit_code: i32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub schema: String,
    pub command: String,
    pub source: String,
    pub rig: Option<String>,
    pub results: Vec<ResultJson>,
    pub error: Option<ErrorJson>,
    pub summary: Summary,
}

impl Report {
    pub fn new(command: &str, source: &str, rig: Option<&str>, results: Vec<ResultJson>, error: Option<ErrorJson>) -> Self {
        let count = |s: &str| results.iter().filter(|r| r.status == s).count();
        let exit = if error.is_some() {
            2
        } else if count("fail") > 0 {
            1
        } else if count("unknown") > 0 {
            3
        } else {
            0
        };
        let summary = Summary {
            statements: results.len(),
            passed: count("pass"),
            failed: count("fail"),
            unknown: count("unknown"),
            exit_code: exit,
        };
        Report {
            schema: SCHEMA.into(),
            command: command.into(),
            source: source.into(),
            rig: rig.map(str::to_string),
            results,
            error,
            summary,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }

    /// Text form; errors go to stderr separately.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for r in &self.results {
            let _ = writeln!(out, "{}:{} {} {} => {}", self.source, r.line, r.status, r.statement, r.value.text());
        }
        let s = &self.summary;
        let _ = writeln!(
            out,
            "{} statements, {} passed, {} failed, {} unknown",
            s.statements, s.passed, s.failed, s.unknown
        );
        out
    }
}
