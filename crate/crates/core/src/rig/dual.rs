use std::fmt;
use std::ops::{Add, Mul};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{DaggerRig, Enumerable, Rig, RigDescriptor, Ring};
use crate::verdict::Verdict;

/// A dual number `a + b·x` over the integers, with `x² = 0`.
///
/// The dagger fixes `x`, so it is the identity on elements.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Dual {
    pub a: BigInt,
    pub b: BigInt,
}

impl Dual {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>) -> Self {
        Dual {
            a: a.into(),
            b: b.into(),
        }
    }

    pub fn x() -> Self {
        Dual::new(0, 1)
    }
}

impl Zero for Dual {
    fn zero() -> Self {
        Dual::new(0, 0)
    }

    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl One for Dual {
    fn one() -> Self {
        Dual::new(1, 0)
    }
}

impl Add for Dual {
    type Output = Dual;

    fn add(self, rhs: Self) -> Self {
        self.plus(&rhs)
    }
}

impl Mul for Dual {
    type Output = Dual;

    fn mul(self, rhs: Self) -> Self {
        self.times(&rhs)
    }
}

impl Rig for Dual {
    const DESCRIPTOR: RigDescriptor = RigDescriptor {
        name: "dual-numbers-z",
        has_negatives: true,
        has_dagger: true,
        is_commutative: true,
        element_grammar: "dual",
    };

    fn plus(&self, other: &Self) -> Self {
        Dual::new(&self.a + &other.a, &self.b + &other.b)
    }

    fn times(&self, other: &Self) -> Self {
        Dual::new(&self.a * &other.a, &self.a * &other.b + &self.b * &other.a)
    }

    fn negate(&self) -> Verdict<Self> {
        Verdict::Exists(self.neg())
    }

    fn from_integer(n: &BigInt) -> Result<Self, String> {
        Ok(Dual::new(n.clone(), 0))
    }

    fn generator(name: &str, _daggered: bool) -> Option<Self> {
        (name == "x").then(Dual::x)
    }

    fn degree(&self) -> usize {
        usize::from(!self.b.is_zero())
    }
}

impl DaggerRig for Dual {
    fn dagger(&self) -> Self {
        self.clone()
    }
}

impl Ring for Dual {
    fn neg(&self) -> Self {
        Dual::new(-&self.a, -&self.b)
    }
}

impl Enumerable for Dual {
    fn small_elements(degree: usize) -> Vec<Self> {
        let bs: &[i64] = if degree == 0 { &[0] } else { &[0, 1, -1] };
        let mut out = Vec::new();
        for &b in bs {
            for a in [0i64, 1, -1, 2, -2] {
                out.push(Dual::new(a, b));
            }
        }
        out
    }
}

impl fmt::Display for Dual {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        if !self.a.is_zero() {
            write!(f, "{}", self.a)?;
            f.write_str(if self.b.is_negative() { "-" } else { "+" })?;
        } else if self.b.is_negative() {
            f.write_str("-")?;
        }
        let mag = self.b.abs();
        if mag.is_one() {
            f.write_str("x")
        } else {
            write!(f, "{mag}x")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nilpotent_generator() {
        assert!(Dual::x().times(&Dual::x()).is_zero());
        assert_eq!(Dual::new(1, 2).times(&Dual::new(3, -1)), Dual::new(3, 5));
    }

    #[test]
    fn display_round_trip() {
        for d in [
            Dual::new(2, -3),
            Dual::new(0, 1),
            Dual::new(0, -1),
            Dual::new(-1, 0),
            Dual::new(5, 1),
        ] {
            assert_eq!(Dual::parse(&d.to_string()).unwrap(), d);
        }
        assert_eq!(Dual::new(2, -3).to_string(), "2-3x");
        assert_eq!(Dual::parse("x!").unwrap(), Dual::x());
    }
}
