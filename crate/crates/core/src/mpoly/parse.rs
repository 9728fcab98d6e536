//! Text grammar for integer polynomials.
//!
//! ```text
//! expr    := ['+'|'-'] term (('+'|'-') term)*
//! term    := power (['*'] power)*
//! power   := atom ['^' integer]
//! atom    := integer | variable | '(' expr ')'
//! ```
//!
//! Variables are `x0..x3, u, v, w, t`; whitespace is ignored.

use num_bigint::BigInt;
use thiserror::Error;

use super::{var_index, MPoly, MAX_PROJECTIVE};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at byte {pos}: {msg}")]
pub struct ParseError {
    pub pos: usize,
    pub msg: String,
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

type Poly = MPoly<BigInt>;

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError { pos: self.pos, msg: msg.into() })
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

    fn expr(&mut self) -> Result<Poly, ParseError> {
        let mut acc = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                self.term()?.neg()
            }
            Some(b'+') => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Poly, ParseError> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = &acc * &self.power()?;
                }
                Some(c) if c == b'(' || c.is_ascii_alphanumeric() => {
                    acc = &acc * &self.power()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> Result<Poly, ParseError> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let e = self.integer()?;
            let e: u32 = match u32::try_from(&e) {
                Ok(e) if e <= 1000 => e,
                _ => return self.err("exponent out of range"),
            };
            if e == 0 {
                return Ok(Poly::one(MAX_PROJECTIVE));
            }
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<BigInt, ParseError> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected an integer");
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(digits.parse().expect("digit string"))
    }

    fn atom(&mut self) -> Result<Poly, ParseError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return self.err("expected ')'");
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let v = self.integer()?;
                Ok(Poly::constant(v, MAX_PROJECTIVE))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_alphanumeric() {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii name");
                match var_index(name) {
                    Some(i) => Ok(Poly::var(i, MAX_PROJECTIVE)),
                    None => {
                        self.pos = start;
                        self.err(format!("unknown variable {name:?}"))
                    }
                }
            }
            Some(c) => self.err(format!("unexpected character {:?}", c as char)),
            None => self.err("unexpected end of input"),
        }
    }
}

/// Parses a polynomial over the integers.
///
/// With `arity = None` the projective arity is one more than the highest
/// `x` index that occurs (zero for parameter-only input).
pub fn parse_poly(src: &str, arity: Option<usize>) -> Result<MPoly<BigInt>, ParseError> {
    let mut p = Parser { src: src.as_bytes(), pos: 0 };
    let poly = p.expr()?;
    if p.peek().is_some() {
        return p.err("trailing input");
    }
    let used = (0..MAX_PROJECTIVE)
        .rev()
        .find(|&i| poly.degree_in_var(i) > 0)
        .map_or(0, |i| i + 1);
    let arity = arity.unwrap_or(used);
    poly.with_arity(arity).map_err(|_| ParseError {
        pos: 0,
        msg: format!("uses x{} but arity is {arity}", used - 1),
    })
}
