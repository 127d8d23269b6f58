//! Scalars of the matrix categories: rigs with an optional involution.
//!
//! Element multiplication is written in the usual (applicative) order:
//! `a.times(b)` is `ab`. Arrow composition in [`crate::Matrix`] is diagram
//! order, so composing `f` then `g` multiplies entries as `g_jk * f_ij`.

mod dual;
mod finite;
mod gaussian;
mod numbers;
mod parse;
mod words;

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::verdict::Verdict;

pub(crate) use numbers::as_integer;
pub use dual::Dual;
pub use finite::{Bool, Gf2};
pub use gaussian::Gaussian;
pub use parse::{parse_element, ParseError};
pub use words::{FreeIsometry, IsoWord, WordMonoid, WordRigXY, WordSum, XyWord};

/// Static facts about a rig, used for runtime capability checks and reports.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RigDescriptor {
    pub name: &'static str,
    pub has_negatives: bool,
    pub has_dagger: bool,
    pub is_commutative: bool,
    pub element_grammar: &'static str,
}

/// A rig (semiring) with canonical element representations.
///
/// Equality is structural: every constructor normalizes.
pub trait Rig:
    Clone + Debug + Display + Eq + Hash + Zero + One + Send + Sync + 'static
{
    const DESCRIPTOR: RigDescriptor;

    fn plus(&self, other: &Self) -> Self;

    fn times(&self, other: &Self) -> Self;

    /// Additive inverse, if one exists.
    fn negate(&self) -> Verdict<Self>;

    /// Image of an integer under the unique rig map from the integers
    /// (naturals for rigs without negatives).
    fn from_integer(n: &BigInt) -> Result<Self, String>;

    /// Image of `num/den`; the default accepts exact quotients only.
    fn from_fraction(num: &BigInt, den: &BigInt) -> Result<Self, String> {
        if den.is_zero() {
            return Err("zero denominator".into());
        }
        if (num % den).is_zero() {
            Self::from_integer(&(num / den))
        } else {
            Err(format!("{num}/{den} is not an element of {}", Self::DESCRIPTOR.name))
        }
    }

    /// Named generator such as `i` or `x`, optionally under the dagger marker.
    fn generator(_name: &str, _daggered: bool) -> Option<Self> {
        None
    }

    /// Word length of the longest monomial; zero for rigs without generators
    /// of positive degree.
    fn degree(&self) -> usize {
        0
    }

    fn parse(text: &str) -> Result<Self, ParseError> {
        parse_element(text)
    }

    fn descriptor() -> &'static RigDescriptor {
        &Self::DESCRIPTOR
    }
}

/// A rig with an involutive anti-homomorphism.
pub trait DaggerRig: Rig {
    fn dagger(&self) -> Self;
}

/// A rig with negatives.
pub trait Ring: Rig {
    fn neg(&self) -> Self;

    fn minus(&self, other: &Self) -> Self {
        self.plus(&other.neg())
    }
}

/// A commutative ring in which every nonzero element is invertible.
pub trait Field: Ring {
    fn inv(&self) -> Option<Self>;
}

/// Rigs whose elements the bounded searches may enumerate.
pub trait Enumerable: Rig {
    /// Elements of word length at most `degree`, smallest first, always
    /// starting with zero.
    fn small_elements(degree: usize) -> Vec<Self>;

    /// Whether adding further terms to `partial` could still produce
    /// `target`. Rigs whose addition only grows elements override this to
    /// prune searches.
    fn may_reach(_partial: &Self, _target: &Self) -> bool {
        true
    }
}

/// A dagger subfield of the complex numbers: self-adjoint elements are
/// rationals and the order on them is the order of the reals.
pub trait ComplexSubfield: Field + DaggerRig {
    /// The element as a rational, if it is self-adjoint.
    fn as_rational(&self) -> Option<num_rational::BigRational>;

    fn from_rational(q: &num_rational::BigRational) -> Self;
}

/// Runtime identifiers for the shipped rigs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RigKind {
    Rationals,
    GaussianRationals,
    Integers,
    Gf2,
    DualNumbersZ,
    Booleans,
    WordRigXY,
    FreeIsometry,
}

impl RigKind {
    pub const ALL: [RigKind; 8] = [
        RigKind::Rationals,
        RigKind::GaussianRationals,
        RigKind::Integers,
        RigKind::Gf2,
        RigKind::DualNumbersZ,
        RigKind::Booleans,
        RigKind::WordRigXY,
        RigKind::FreeIsometry,
    ];

    pub fn descriptor(self) -> &'static RigDescriptor {
        use num_rational::BigRational;
        match self {
            RigKind::Rationals => BigRational::descriptor(),
            RigKind::GaussianRationals => Gaussian::descriptor(),
            RigKind::Integers => BigInt::descriptor(),
            RigKind::Gf2 => Gf2::descriptor(),
            RigKind::DualNumbersZ => Dual::descriptor(),
            RigKind::Booleans => Bool::descriptor(),
            RigKind::WordRigXY => WordRigXY::descriptor(),
            RigKind::FreeIsometry => FreeIsometry::descriptor(),
        }
    }

    pub fn name(self) -> &'static str {
        self.descriptor().name
    }

    pub fn from_name(name: &str) -> Option<RigKind> {
        RigKind::ALL.into_iter().find(|k| k.name() == name)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn descriptor_flags() {
        let negatives: Vec<_> = RigKind::ALL
            .into_iter()
            .filter(|k| k.descriptor().has_negatives)
            .collect();
        assert_eq!(
            negatives,
            vec![
                RigKind::Rationals,
                RigKind::GaussianRationals,
                RigKind::Integers,
                RigKind::Gf2,
                RigKind::DualNumbersZ
            ]
        );
        let no_dagger: Vec<_> = RigKind::ALL
            .into_iter()
            .filter(|k| !k.descriptor().has_dagger)
            .collect();
        assert_eq!(no_dagger, vec![RigKind::WordRigXY]);
    }

    #[test]
    fn names_round_trip() {
        for k in RigKind::ALL {
            assert_eq!(RigKind::from_name(k.name()), Some(k));
        }
        assert_eq!(RigKind::from_name("reals"), None);
    }
}
