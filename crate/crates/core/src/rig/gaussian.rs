use std::fmt;
use std::ops::{Add, Mul};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{ComplexSubfield, DaggerRig, Field, Rig, RigDescriptor, Ring};
use crate::verdict::Verdict;

/// A Gaussian rational `re + im·i`; the dagger is complex conjugation.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Gaussian {
    pub re: BigRational,
    pub im: BigRational,
}

impl Gaussian {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Gaussian { re, im }
    }

    pub fn real(re: BigRational) -> Self {
        Gaussian {
            re,
            im: BigRational::zero(),
        }
    }

    pub fn i() -> Self {
        Gaussian {
            re: BigRational::zero(),
            im: BigRational::one(),
        }
    }

    pub fn norm_squared(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }
}

impl Zero for Gaussian {
    fn zero() -> Self {
        Gaussian::real(BigRational::zero())
    }

    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for Gaussian {
    fn one() -> Self {
        Gaussian::real(BigRational::one())
    }
}

impl Add for Gaussian {
    type Output = Gaussian;

    fn add(self, rhs: Self) -> Self {
        self.plus(&rhs)
    }
}

impl Mul for Gaussian {
    type Output = Gaussian;

    fn mul(self, rhs: Self) -> Self {
        self.times(&rhs)
    }
}

impl Rig for Gaussian {
    const DESCRIPTOR: RigDescriptor = RigDescriptor {
        name: "gaussian-rationals",
        has_negatives: true,
        has_dagger: true,
        is_commutative: true,
        element_grammar: "gaussian",
    };

    fn plus(&self, other: &Self) -> Self {
        Gaussian::new(&self.re + &other.re, &self.im + &other.im)
    }

    fn times(&self, other: &Self) -> Self {
        Gaussian::new(
            &self.re * &other.re - &self.im * &other.im,
            &self.re * &other.im + &self.im * &other.re,
        )
    }

    fn negate(&self) -> Verdict<Self> {
        Verdict::Exists(self.neg())
    }

    fn from_integer(n: &BigInt) -> Result<Self, String> {
        Ok(Gaussian::real(BigRational::from_integer(n.clone())))
    }

    fn from_fraction(num: &BigInt, den: &BigInt) -> Result<Self, String> {
        if den.is_zero() {
            return Err("zero denominator".into());
        }
        Ok(Gaussian::real(BigRational::new(num.clone(), den.clone())))
    }

    fn generator(name: &str, daggered: bool) -> Option<Self> {
        match name {
            "i" if daggered => Some(Gaussian::i().neg()),
            "i" => Some(Gaussian::i()),
            _ => None,
        }
    }
}

impl DaggerRig for Gaussian {
    fn dagger(&self) -> Self {
        Gaussian::new(self.re.clone(), -&self.im)
    }
}

impl Ring for Gaussian {
    fn neg(&self) -> Self {
        Gaussian::new(-&self.re, -&self.im)
    }
}

impl Field for Gaussian {
    fn inv(&self) -> Option<Self> {
        let n = self.norm_squared();
        if n.is_zero() {
            return None;
        }
        Some(Gaussian::new(&self.re / &n, -&self.im / &n))
    }
}

impl ComplexSubfield for Gaussian {
    fn as_rational(&self) -> Option<BigRational> {
        self.im.is_zero().then(|| self.re.clone())
    }

    fn from_rational(q: &BigRational) -> Self {
        Gaussian::real(q.clone())
    }
}

impl fmt::Display for Gaussian {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let unit = |q: &BigRational| q.abs().is_one();
        if self.im.is_zero() {
            return write!(f, "{}", self.re);
        }
        let sign = if self.im.is_negative() { "-" } else { "+" };
        let mag = self.im.abs();
        if !self.re.is_zero() {
            write!(f, "{}{sign}", self.re)?;
        } else if self.im.is_negative() {
            write!(f, "-")?;
        }
        if unit(&self.im) {
            write!(f, "i")
        } else {
            write!(f, "{mag}i")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(a: i64, b: i64) -> Gaussian {
        Gaussian::new(BigRational::from_integer(a.into()), BigRational::from_integer(b.into()))
    }

    #[test]
    fn conjugation() {
        assert_eq!(g(1, 2).dagger(), g(1, -2));
        assert_eq!(g(0, 1).dagger(), g(0, -1));
    }

    #[test]
    fn display_and_parse() {
        for (z, s) in [
            (g(1, 2), "1+2i"),
            (g(1, -2), "1-2i"),
            (g(0, 1), "i"),
            (g(0, -1), "-i"),
            (g(0, 3), "3i"),
            (g(-4, 0), "-4"),
        ] {
            assert_eq!(z.to_string(), s);
            assert_eq!(Gaussian::parse(s).unwrap(), z);
        }
        let z = Gaussian::new(
            BigRational::new(3.into(), 5.into()),
            BigRational::new((-4).into(), 5.into()),
        );
        assert_eq!(z.to_string(), "3/5-4/5i");
        assert_eq!(Gaussian::parse("3/5-4/5i").unwrap(), z);
    }

    #[test]
    fn inverse() {
        let z = g(3, 4);
        assert_eq!(z.times(&z.inv().unwrap()), Gaussian::one());
    }
}
