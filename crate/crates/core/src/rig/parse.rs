//! One grammar for the elements of every shipped rig:
//!
//! ```text
//! expr   := ['-'] term (('+' | '-') term)*
//! term   := factor (['*'] factor)*
//! factor := atom ['^' nat]
//! atom   := nat ['/' nat] | letter ['!'] | '(' expr ')'
//! ```
//!
//! Letters are single-character generators (`i`, `x`, `y`); `!` marks the
//! dagger of a generator. Adjacent factors multiply.

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use super::Rig;
use crate::verdict::Verdict;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at {}: {}", self.position, self.message)
    }
}

impl std::error::Error for ParseError {}

pub fn parse_element<R: Rig>(text: &str) -> Result<R, ParseError> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
    };
    let value = p.expr::<R>()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.error(format!("unexpected '{}'", p.src[p.pos] as char)));
    }
    Ok(value)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError {
            position: self.pos,
            message: message.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn negated<R: Rig>(&self, value: R) -> Result<R, ParseError> {
        match value.negate() {
            Verdict::Exists(v) => Ok(v),
            _ => Err(self.error(format!(
                "{value} has no negative in {}",
                R::DESCRIPTOR.name
            ))),
        }
    }

    fn expr<R: Rig>(&mut self) -> Result<R, ParseError> {
        let negative = self.eat(b'-');
        if !negative {
            self.eat(b'+');
        }
        let mut acc = self.term::<R>()?;
        if negative {
            acc = self.negated(acc)?;
        }
        loop {
            if self.eat(b'+') {
                acc = acc.plus(&self.term::<R>()?);
            } else if self.eat(b'-') {
                let t = self.term::<R>()?;
                acc = acc.plus(&self.negated(t)?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term<R: Rig>(&mut self) -> Result<R, ParseError> {
        let mut acc = self.factor::<R>()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = acc.times(&self.factor::<R>()?);
                }
                Some(c) if c.is_ascii_alphanumeric() || c == b'(' => {
                    acc = acc.times(&self.factor::<R>()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor<R: Rig>(&mut self) -> Result<R, ParseError> {
        let base = self.atom::<R>()?;
        if !self.eat(b'^') {
            return Ok(base);
        }
        self.skip_ws();
        let n = self.nat()?;
        let n: u32 = n
            .try_into()
            .map_err(|_| self.error("exponent too large"))?;
        let mut acc = R::one();
        for _ in 0..n {
            acc = acc.times(&base);
        }
        Ok(acc)
    }

    fn nat(&mut self) -> Result<BigInt, ParseError> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a number"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(digits.parse().expect("decimal digits"))
    }

    fn atom<R: Rig>(&mut self) -> Result<R, ParseError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr::<R>()?;
                if !self.eat(b')') {
                    return Err(self.error("expected ')'"));
                }
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                let num = self.nat()?;
                let den = if self.eat(b'/') {
                    self.skip_ws();
                    self.nat()?
                } else {
                    BigInt::one()
                };
                R::from_fraction(&num, &den).map_err(|message| ParseError {
                    position: start,
                    message,
                })
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                self.pos += 1;
                let name = (c as char).to_string();
                let daggered = self.src.get(self.pos) == Some(&b'!');
                if daggered {
                    self.pos += 1;
                }
                R::generator(&name, daggered).ok_or_else(|| ParseError {
                    position: start,
                    message: format!(
                        "unknown generator '{name}{}' in {}",
                        if daggered { "!" } else { "" },
                        R::DESCRIPTOR.name
                    ),
                })
            }
            Some(c) => Err(self.error(format!("unexpected '{}'", c as char))),
            None => Err(self.error("unexpected end of input")),
        }
    }
}

#[cfg(test)]
mod tests {
    use num_rational::BigRational;

    use super::*;

    #[test]
    fn fractions_and_precedence() {
        let v: BigRational = parse_element("1/2 + 2*3 - (1/2)^2").unwrap();
        assert_eq!(v, BigRational::new(25.into(), 4.into()));
        let v: BigRational = parse_element("-3/4").unwrap();
        assert_eq!(v, BigRational::new((-3).into(), 4.into()));
    }

    #[test]
    fn errors_carry_positions() {
        let e = parse_element::<BigInt>("1 + ").unwrap_err();
        assert_eq!(e.position, 4);
        let e = parse_element::<BigInt>("1/2").unwrap_err();
        assert_eq!(e.position, 0);
        assert!(parse_element::<BigInt>("x").is_err());
        assert!(parse_element::<BigInt>("(1").is_err());
    }
}
