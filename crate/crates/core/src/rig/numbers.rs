use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::{ComplexSubfield, DaggerRig, Enumerable, Field, Rig, RigDescriptor, Ring};
use crate::verdict::Verdict;

impl Rig for BigRational {
    const DESCRIPTOR: RigDescriptor = RigDescriptor {
        name: "rationals",
        has_negatives: true,
        has_dagger: true,
        is_commutative: true,
        element_grammar: "fraction",
    };

    fn plus(&self, other: &Self) -> Self {
        self + other
    }

    fn times(&self, other: &Self) -> Self {
        self * other
    }

    fn negate(&self) -> Verdict<Self> {
        Verdict::Exists(-self)
    }

    fn from_integer(n: &BigInt) -> Result<Self, String> {
        Ok(BigRational::from_integer(n.clone()))
    }

    fn from_fraction(num: &BigInt, den: &BigInt) -> Result<Self, String> {
        if den.is_zero() {
            return Err("zero denominator".into());
        }
        Ok(BigRational::new(num.clone(), den.clone()))
    }
}

impl DaggerRig for BigRational {
    fn dagger(&self) -> Self {
        self.clone()
    }
}

impl Ring for BigRational {
    fn neg(&self) -> Self {
        -self
    }

    fn minus(&self, other: &Self) -> Self {
        self - other
    }
}

impl Field for BigRational {
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }
}

impl ComplexSubfield for BigRational {
    fn as_rational(&self) -> Option<BigRational> {
        Some(self.clone())
    }

    fn from_rational(q: &BigRational) -> Self {
        q.clone()
    }
}

impl Rig for BigInt {
    const DESCRIPTOR: RigDescriptor = RigDescriptor {
        name: "integers",
        has_negatives: true,
        has_dagger: true,
        is_commutative: true,
        element_grammar: "integer",
    };

    fn plus(&self, other: &Self) -> Self {
        self + other
    }

    fn times(&self, other: &Self) -> Self {
        self * other
    }

    fn negate(&self) -> Verdict<Self> {
        Verdict::Exists(-self)
    }

    fn from_integer(n: &BigInt) -> Result<Self, String> {
        Ok(n.clone())
    }
}

impl DaggerRig for BigInt {
    fn dagger(&self) -> Self {
        self.clone()
    }
}

impl Ring for BigInt {
    fn neg(&self) -> Self {
        -self
    }

    fn minus(&self, other: &Self) -> Self {
        self - other
    }
}

impl Enumerable for BigInt {
    fn small_elements(_degree: usize) -> Vec<Self> {
        [0, 1, -1, 2, -2].into_iter().map(BigInt::from).collect()
    }
}

/// Whether a rational is an integer, and that integer.
pub(crate) fn as_integer(q: &BigRational) -> Option<BigInt> {
    q.is_integer().then(|| q.to_integer())
}


#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn fraction_arithmetic() {
        assert_eq!(q(1, 2).plus(&q(1, 3)), q(5, 6));
        assert_eq!(q(3, 5).dagger(), q(3, 5));
        assert_eq!(q(2, 3).inv(), Some(q(3, 2)));
        assert_eq!(BigRational::zero().inv(), None);
    }

    #[test]
    fn integer_negation() {
        assert_eq!(BigInt::from(3).negate(), Verdict::Exists(BigInt::from(-3)));
        assert!(BigInt::from_fraction(&1.into(), &2.into()).is_err());
        assert_eq!(
            BigInt::from_fraction(&4.into(), &2.into()),
            Ok(BigInt::from(2))
        );
    }
}
