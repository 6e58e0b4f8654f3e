//! Expression parser for polynomials.
//!
//! Grammar (whitespace insensitive):
//!
//! ```text
//! expr   := ["+"|"-"] term { ("+"|"-") term }
//! term   := factor { ("*"|"/") factor }      division needs a constant divisor
//! factor := atom [ "^" integer ]
//! atom   := integer | variable | "(" expr ")"
//! ```
//!
//! Rational coefficients can be written either as `1/2` or `x/2`.

use super::{Polynomial, RingSpec};
use crate::error::{Error, Result};
use crate::Rat;
use num_bigint::BigInt;
use num_traits::Zero;
use std::sync::Arc;

pub fn parse(ring: &Arc<RingSpec>, input: &str) -> Result<Polynomial> {
    let mut p = Parser {
        ring,
        bytes: input.as_bytes(),
        pos: 0,
    };
    let poly = p.expr()?;
    p.skip_ws();
    if p.pos != p.bytes.len() {
        return Err(p.err("trailing input"));
    }
    Ok(poly)
}

struct Parser<'a> {
    ring: &'a Arc<RingSpec>,
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Parse {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.bytes.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let c = self.peek();
        if c.is_some() {
            self.pos += 1;
        }
        c
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut negate = false;
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                negate = true;
            }
            Some(b'+') => {
                self.pos += 1;
            }
            _ => {}
        }
        let mut acc = self.term()?;
        if negate {
            acc = -&acc;
        }
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = acc.add_ref(&t);
                }
                Some(b'-') => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = acc.sub_ref(&t);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    let f = self.factor()?;
                    acc = acc.mul_ref(&f);
                }
                Some(b'/') => {
                    self.pos += 1;
                    let f = self.factor()?;
                    let c = match (f.nterms(), f.constant_term()) {
                        (1, c) if !c.is_zero() => c,
                        (_, _) => return Err(self.err("divisor must be a nonzero constant")),
                    };
                    acc = acc.scale(&(Rat::from(BigInt::from(1)) / c));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let e = self.integer()?;
            let e: u32 = e
                .try_into()
                .map_err(|_| self.err("exponent out of range"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Polynomial> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.bump() != Some(b')') {
                    return Err(self.err("expected )"));
                }
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                Ok(Polynomial::constant(
                    self.ring,
                    Rat::from(BigInt::from(n)),
                ))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let name = self.ident();
                match self.ring.index_of(&name) {
                    Some(i) => Ok(Polynomial::var(self.ring, i)),
                    None => Err(self.err(format!(
                        "unknown variable {name} (ring has {})",
                        self.ring.describe()
                    ))),
                }
            }
            Some(c) => Err(self.err(format!("unexpected character {:?}", c as char))),
            None => Err(self.err("unexpected end of input")),
        }
    }

    fn integer(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        while self.bytes.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("expected integer"));
        }
        std::str::from_utf8(&self.bytes[start..self.pos])
            .expect("digits are ascii")
            .parse()
            .map_err(|_| self.err("integer out of range"))
    }

    fn ident(&mut self) -> String {
        self.skip_ws();
        let start = self.pos;
        while self
            .bytes
            .get(self.pos)
            .is_some_and(|c| c.is_ascii_alphanumeric() || *c == b'_')
        {
            self.pos += 1;
        }
        String::from_utf8(self.bytes[start..self.pos].to_vec()).expect("idents are ascii")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring() -> Arc<RingSpec> {
        RingSpec::new([("t", 1), ("c2", 2), ("c3", 3), ("g3", 3)])
    }

    #[test]
    fn parses_relation_shapes() {
        let r = ring();
        let f = Polynomial::parse(&r, "c3 - 2*g3").unwrap();
        assert_eq!(f.to_string(), "c3 - 2*g3");
        let g = Polynomial::parse(&r, "(c3 - 2*t^3)/2 + g3").unwrap();
        assert_eq!(g.to_string(), "-t^3 + 1/2*c3 + g3");
    }

    #[test]
    fn rational_literals() {
        let r = ring();
        let f = Polynomial::parse(&r, "1/2 + 1/3").unwrap();
        assert_eq!(f.constant_term(), Rat::new(BigInt::from(5), BigInt::from(6)));
    }

    #[test]
    fn display_parse_roundtrip() {
        let r = ring();
        for s in [
            "c2 - 4*t^2",
            "3*g3^2 - 6*t*c2*g3 - t^3",
            "-t + 1/2",
            "0",
        ] {
            let f = Polynomial::parse(&r, s).unwrap();
            let g = Polynomial::parse(&r, &f.to_string()).unwrap();
            assert_eq!(f, g, "{s}");
        }
    }

    #[test]
    fn error_positions() {
        let r = ring();
        assert!(Polynomial::parse(&r, "c2 + q").is_err());
        assert!(Polynomial::parse(&r, "c2 +").is_err());
        assert!(Polynomial::parse(&r, "(c2").is_err());
        assert!(Polynomial::parse(&r, "c2 c3").is_err());
        assert!(Polynomial::parse(&r, "1/0").is_err());
        assert!(Polynomial::parse(&r, "t / c2").is_err());
    }

    #[test]
    fn unary_signs() {
        let r = ring();
        let f = Polynomial::parse(&r, "-t^2 + t*t").unwrap();
        assert!(f.is_zero());
        let g = Polynomial::parse(&r, "+t - t").unwrap();
        assert!(g.is_zero());
    }
}
