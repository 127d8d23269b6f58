//! Three-valued outcomes for queries whose decision procedure may be
//! incomplete over a given rig.

use std::fmt;

/// Outcome of an existence query.
///
/// `NotExists` always carries a [`Certificate`] explaining why no witness can
/// exist; `Unknown` means a bounded search ran out before deciding.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict<T> {
    Exists(T),
    NotExists(Certificate),
    Unknown(String),
}

impl<T> Verdict<T> {
    pub fn is_exists(&self) -> bool {
        matches!(self, Verdict::Exists(_))
    }

    pub fn is_not_exists(&self) -> bool {
        matches!(self, Verdict::NotExists(_))
    }

    pub fn is_unknown(&self) -> bool {
        matches!(self, Verdict::Unknown(_))
    }

    pub fn exists(&self) -> Option<&T> {
        match self {
            Verdict::Exists(t) => Some(t),
            _ => None,
        }
    }

    pub fn into_exists(self) -> Option<T> {
        match self {
            Verdict::Exists(t) => Some(t),
            _ => None,
        }
    }

    pub fn certificate(&self) -> Option<&Certificate> {
        match self {
            Verdict::NotExists(c) => Some(c),
            _ => None,
        }
    }

    pub fn as_ref(&self) -> Verdict<&T> {
        match self {
            Verdict::Exists(t) => Verdict::Exists(t),
            Verdict::NotExists(c) => Verdict::NotExists(c.clone()),
            Verdict::Unknown(r) => Verdict::Unknown(r.clone()),
        }
    }

    pub fn map<U>(self, f: impl FnOnce(T) -> U) -> Verdict<U> {
        match self {
            Verdict::Exists(t) => Verdict::Exists(f(t)),
            Verdict::NotExists(c) => Verdict::NotExists(c),
            Verdict::Unknown(r) => Verdict::Unknown(r),
        }
    }

    pub fn and_then<U>(self, f: impl FnOnce(T) -> Verdict<U>) -> Verdict<U> {
        match self {
            Verdict::Exists(t) => f(t),
            Verdict::NotExists(c) => Verdict::NotExists(c),
            Verdict::Unknown(r) => Verdict::Unknown(r),
        }
    }

    /// Short tag used by reports: `exists`, `not-exists` or `unknown`.
    pub fn tag(&self) -> &'static str {
        match self {
            Verdict::Exists(_) => "exists",
            Verdict::NotExists(_) => "not-exists",
            Verdict::Unknown(_) => "unknown",
        }
    }
}

/// Evidence attached to a `NotExists` verdict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    /// The element has no additive inverse in its rig.
    NoNegative { element: String },
    /// The unique pseudoinverse over the fraction field (or coefficient lift)
    /// has an entry outside the rig.
    NotInRig {
        lifted: Vec<Vec<String>>,
        row: usize,
        col: usize,
    },
    /// The first-order equations of the coefficient lift have no solution.
    LiftInconsistent { detail: String },
    /// Rank identity `rank f = rank(f f†) = rank(f† f)` fails.
    RankCondition {
        rank: usize,
        rank_domain_gram: usize,
        rank_codomain_gram: usize,
    },
    /// Every candidate of a finite search space was rejected.
    ExhaustedSearch { candidates: u64 },
    /// A linear system has no solution; `row`/`col` locate an unsatisfiable
    /// coordinate of the transformed right-hand side.
    Unsolvable {
        row: usize,
        col: usize,
        detail: String,
    },
    /// A matrix that would have to be positive is not.
    NotPositive { detail: String },
    /// A structural characterization of the rig rules the witness out.
    Structural { detail: String },
    /// A prerequisite query was itself refuted.
    Because {
        step: String,
        inner: Box<Certificate>,
    },
}

impl Certificate {
    pub fn because(step: impl Into<String>, inner: Certificate) -> Self {
        Certificate::Because {
            step: step.into(),
            inner: Box::new(inner),
        }
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Certificate::NoNegative { element } => write!(f, "{element} has no negative"),
            Certificate::NotInRig { lifted, row, col } => write!(
                f,
                "lifted pseudoinverse entry ({row},{col}) = {} lies outside the rig",
                lifted[*row][*col]
            ),
            Certificate::LiftInconsistent { detail } => {
                write!(f, "lifted Penrose system is inconsistent: {detail}")
            }
            Certificate::RankCondition {
                rank,
                rank_domain_gram,
                rank_codomain_gram,
            } => write!(
                f,
                "rank condition fails: rank {rank}, domain Gram rank {rank_domain_gram}, codomain Gram rank {rank_codomain_gram}"
            ),
            Certificate::ExhaustedSearch { candidates } => {
                write!(f, "all {candidates} candidates rejected")
            }
            Certificate::Unsolvable { row, col, detail } => {
                write!(f, "unsolvable at ({row},{col}): {detail}")
            }
            Certificate::NotPositive { detail } => write!(f, "not positive: {detail}"),
            Certificate::Structural { detail } => write!(f, "{detail}"),
            Certificate::Because { step, inner } => write!(f, "{step}: {inner}"),
        }
    }
}

impl<T: fmt::Display> fmt::Display for Verdict<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Exists(t) => write!(f, "Exists({t})"),
            Verdict::NotExists(c) => write!(f, "NotExists({c})"),
            Verdict::Unknown(r) => write!(f, "Unknown({r})"),
        }
    }
}
