use std::fmt;
use std::ops::{Add, Mul};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{DaggerRig, Enumerable, Field, Rig, RigDescriptor, Ring};
use crate::verdict::{Certificate, Verdict};

/// The two-element field; the dagger is the identity.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Gf2(pub bool);

/// The Boolean rig `({0,1}, or, and)`; the dagger is the identity.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Bool(pub bool);

macro_rules! bit_rig {
    ($t:ident, $plus:expr) => {
        impl Zero for $t {
            fn zero() -> Self {
                $t(false)
            }

            fn is_zero(&self) -> bool {
                !self.0
            }
        }

        impl One for $t {
            fn one() -> Self {
                $t(true)
            }
        }

        impl Add for $t {
            type Output = $t;

            fn add(self, rhs: Self) -> Self {
                self.plus(&rhs)
            }
        }

        impl Mul for $t {
            type Output = $t;

            fn mul(self, rhs: Self) -> Self {
                $t(self.0 && rhs.0)
            }
        }

        impl DaggerRig for $t {
            fn dagger(&self) -> Self {
                *self
            }
        }

        impl Enumerable for $t {
            fn small_elements(_degree: usize) -> Vec<Self> {
                vec![$t(false), $t(true)]
            }
        }

        impl fmt::Display for $t {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(if self.0 { "1" } else { "0" })
            }
        }

        impl From<bool> for $t {
            fn from(b: bool) -> Self {
                $t(b)
            }
        }

        impl $t {
            #[allow(clippy::redundant_closure_call)]
            fn add_bits(a: bool, b: bool) -> bool {
                ($plus)(a, b)
            }
        }
    };
}

bit_rig!(Gf2, |a: bool, b: bool| a ^ b);
bit_rig!(Bool, |a: bool, b: bool| a || b);

impl Rig for Gf2 {
    const DESCRIPTOR: RigDescriptor = RigDescriptor {
        name: "gf2",
        has_negatives: true,
        has_dagger: true,
        is_commutative: true,
        element_grammar: "bit",
    };

    fn plus(&self, other: &Self) -> Self {
        Gf2(Gf2::add_bits(self.0, other.0))
    }

    fn times(&self, other: &Self) -> Self {
        Gf2(self.0 && other.0)
    }

    fn negate(&self) -> Verdict<Self> {
        Verdict::Exists(*self)
    }

    fn from_integer(n: &BigInt) -> Result<Self, String> {
        Ok(Gf2(n.is_odd()))
    }

    fn from_fraction(num: &BigInt, den: &BigInt) -> Result<Self, String> {
        if den.is_even() {
            return Err(format!("{num}/{den}: denominator is zero in gf2"));
        }
        Ok(Gf2(num.is_odd()))
    }
}

impl Ring for Gf2 {
    fn neg(&self) -> Self {
        *self
    }
}

impl Field for Gf2 {
    fn inv(&self) -> Option<Self> {
        self.0.then_some(Gf2(true))
    }
}

impl Bool {
    /// Boolean implication, the residual of conjunction.
    pub fn implies(self, other: Bool) -> Bool {
        Bool(!self.0 || other.0)
    }
}

impl Rig for Bool {
    const DESCRIPTOR: RigDescriptor = RigDescriptor {
        name: "booleans",
        has_negatives: false,
        has_dagger: true,
        is_commutative: true,
        element_grammar: "bit",
    };

    fn plus(&self, other: &Self) -> Self {
        Bool(Bool::add_bits(self.0, other.0))
    }

    fn times(&self, other: &Self) -> Self {
        Bool(self.0 && other.0)
    }

    fn negate(&self) -> Verdict<Self> {
        if self.0 {
            Verdict::NotExists(Certificate::NoNegative {
                element: "1".into(),
            })
        } else {
            Verdict::Exists(*self)
        }
    }

    fn from_integer(n: &BigInt) -> Result<Self, String> {
        if n.is_negative() {
            return Err(format!("{n} is not a natural number"));
        }
        Ok(Bool(!n.is_zero()))
    }
}
