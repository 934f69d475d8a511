//! Reader for relation polynomials written in plain text, e.g.
//! `t_(2^2) + 4t_(3)/(N - 3) - N(N-1)t_(2)^2/((N-2)(N-3))`.
//!
//! Juxtaposition multiplies. Division is only allowed by expressions free of
//! class variables.

use alloc::format;
use alloc::string::String;

use num_bigint::BigInt;

use super::{RationalFunction, RelationPoly, UniPoly};
use crate::error::{Error, Result};
use crate::partition::Partition;

pub fn parse_relation(src: &str) -> Result<RelationPoly> {
    let mut p = Parser {
        src: src.as_bytes(),
        pos: 0,
    };
    let out = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.err("trailing input"));
    }
    Ok(out)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> Error {
        Error::Input(format!("{msg} at offset {}", self.pos))
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

    fn expr(&mut self) -> Result<RelationPoly> {
        let mut acc = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                -self.term()?
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

    fn term(&mut self) -> Result<RelationPoly> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = &acc * &self.power()?;
                }
                Some(b'/') => {
                    self.pos += 1;
                    let d = self.power()?;
                    acc = acc.scale(&as_scalar(&d).ok_or_else(|| self.err("bad divisor"))?.inv()?);
                }
                Some(c) if c == b'(' || c == b'N' || c == b't' || c.is_ascii_digit() => {
                    acc = &acc * &self.power()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> Result<RelationPoly> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let e = self.integer()?;
            let e = u32::try_from(e).map_err(|_| self.err("bad exponent"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected integer"));
        }
        let digits = core::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        digits.parse().map_err(|_| self.err("bad integer"))
    }

    fn atom(&mut self) -> Result<RelationPoly> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(b'N') => {
                self.pos += 1;
                Ok(RelationPoly::constant(UniPoly::x().into()))
            }
            Some(b't') => {
                self.pos += 1;
                if self.src.get(self.pos) != Some(&b'_') || self.src.get(self.pos + 1) != Some(&b'(') {
                    return Err(self.err("expected t_(...)"));
                }
                self.pos += 2;
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos] != b')' {
                    self.pos += 1;
                }
                if self.pos == self.src.len() {
                    return Err(self.err("unterminated class"));
                }
                let text = String::from_utf8_lossy(&self.src[start..self.pos]);
                self.pos += 1;
                let class: Partition = text.parse()?;
                if class.is_identity() {
                    Ok(RelationPoly::one())
                } else {
                    Ok(RelationPoly::var(class))
                }
            }
            Some(c) if c.is_ascii_digit() => {
                let v = self.integer()?;
                Ok(RelationPoly::constant(RationalFunction::from(v)))
            }
            _ => Err(self.err("unexpected token")),
        }
    }
}

fn as_scalar(p: &RelationPoly) -> Option<RationalFunction> {
    match p.len() {
        0 => Some(RationalFunction::zero()),
        1 => {
            let (m, c) = p.leading_term()?;
            m.is_one().then(|| c.clone())
        }
        _ => None,
    }
}
