//! Text form of cyclotomic numbers, e.g. `-1+3/2*E(5)^2-E(5)^3`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::Cyclo;
use crate::error::{Error, Result};

impl fmt::Display for Cyclo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.conductor();
        let mut first = true;
        for (i, c) in self.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let term = if i == 0 {
                c.to_string()
            } else {
                let atom = if i == 1 {
                    format!("E({n})")
                } else {
                    format!("E({n})^{i}")
                };
                if c.is_one() {
                    atom
                } else if (-c).is_one() {
                    format!("-{atom}")
                } else {
                    format!("{c}*{atom}")
                }
            };
            if !first && !term.starts_with('-') {
                f.write_str("+")?;
            }
            f.write_str(&term)?;
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn err(&self, message: &str) -> Error {
        Error::Parse {
            line: 1,
            column: self.pos + 1,
            message: message.to_string(),
        }
    }

    fn ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.ws();
        self.s.get(self.pos).copied()
    }

    fn expect(&mut self, b: u8) -> Result<()> {
        if self.peek() == Some(b) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(&format!("expected '{}'", b as char)))
        }
    }

    fn int(&mut self) -> Result<BigInt> {
        self.ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected a number"));
        }
        let digits = std::str::from_utf8(&self.s[start..self.pos]).expect("ascii digits");
        Ok(digits.parse().expect("digits parse"))
    }

    fn rational(&mut self) -> Result<BigRational> {
        let num = self.int()?;
        if self.peek() == Some(b'/') {
            self.pos += 1;
            let den = self.int()?;
            if den.is_zero() {
                return Err(self.err("zero denominator"));
            }
            Ok(BigRational::new(num, den))
        } else {
            Ok(BigRational::from_integer(num))
        }
    }

    fn atom(&mut self) -> Result<Cyclo> {
        self.expect(b'E')?;
        self.expect(b'(')?;
        let n_pos = self.pos;
        let n: u64 = self
            .int()?
            .try_into()
            .map_err(|_| self.err("conductor too large"))?;
        if n == 0 {
            self.pos = n_pos;
            return Err(self.err("conductor must be positive"));
        }
        self.expect(b')')?;
        let mut k: i64 = 1;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let neg = if self.peek() == Some(b'-') {
                self.pos += 1;
                true
            } else {
                false
            };
            let v: i64 = self
                .int()?
                .try_into()
                .map_err(|_| self.err("exponent too large"))?;
            k = if neg { -v } else { v };
        }
        Ok(Cyclo::root_of_unity(n, k))
    }

    fn term(&mut self) -> Result<Cyclo> {
        match self.peek() {
            Some(b'E') => self.atom(),
            Some(c) if c.is_ascii_digit() => {
                let r = Cyclo::from_rational(self.rational()?);
                if self.peek() == Some(b'*') {
                    self.pos += 1;
                    Ok(&r * &self.atom()?)
                } else {
                    Ok(r)
                }
            }
            _ => Err(self.err("expected a term")),
        }
    }

    fn expr(&mut self) -> Result<Cyclo> {
        let mut neg = false;
        if self.peek() == Some(b'-') {
            self.pos += 1;
            neg = true;
        } else if self.peek() == Some(b'+') {
            self.pos += 1;
        }
        let mut acc = self.term()?;
        if neg {
            acc = -acc;
        }
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = acc + self.term()?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = acc - self.term()?;
                }
                None => return Ok(acc),
                _ => return Err(self.err("expected '+', '-' or end of input")),
            }
        }
    }
}

impl FromStr for Cyclo {
    type Err = Error;

    fn from_str(s: &str) -> Result<Cyclo> {
        Parser {
            s: s.as_bytes(),
            pos: 0,
        }
        .expr()
    }
}

impl serde::Serialize for Cyclo {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> serde::Deserialize<'de> for Cyclo {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn print_and_parse() {
        let a: Cyclo = "-E(5)-E(5)^4".parse().unwrap();
        assert_eq!(a.to_string(), "1+E(5)^2+E(5)^3");
        assert!((a.to_complex().0 + 0.6180339887).abs() < 1e-9);
        assert_eq!(a.to_string().parse::<Cyclo>().unwrap(), a);
        let b: Cyclo = "3/2*E(12)^5 - 7".parse().unwrap();
        assert_eq!(b.to_string().parse::<Cyclo>().unwrap(), b);
        assert_eq!("0".parse::<Cyclo>().unwrap(), Cyclo::zero());
        assert_eq!(Cyclo::zero().to_string(), "0");
        assert_eq!("-1/2".parse::<Cyclo>().unwrap().to_string(), "-1/2");
        assert_eq!("E(4)^-1".parse::<Cyclo>().unwrap(), "-E(4)".parse().unwrap());
    }

    #[test]
    fn parse_errors() {
        for bad in ["", "E(0)", "E(3", "1/0", "2*", "1 2", "x", "E(3)^"] {
            assert!(bad.parse::<Cyclo>().is_err(), "{bad}");
        }
        match "1+*".parse::<Cyclo>() {
            Err(Error::Parse { column, .. }) => assert_eq!(column, 3),
            other => panic!("{other:?}"),
        }
    }
}
