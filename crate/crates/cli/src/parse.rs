//! Descendent expressions and rational literals.
//!
//! ```text
//! sum   := prod ("+" prod)*
//! prod  := unary ("*" unary)*
//! unary := "-" unary | atom
//! atom  := "1" | "p[" int "]" | "e[" int "]" | "s[" partition "]" | "(" sum ")"
//! ```

use kvertex_core::combinat::parse_partition_prefix;
use kvertex_core::{BigInt, BigRational};
use kvertex_locvertex::Descendent;

use crate::CliError;

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T, CliError> {
        Err(CliError::Syntax { pos: self.pos, msg: msg.into() })
    }

    fn skip_ws(&mut self) {
        while self.src[self.pos..].starts_with(|c: char| c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.as_bytes().get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<(), CliError> {
        if self.eat(c) {
            Ok(())
        } else {
            self.err(format!("expected '{}'", c as char))
        }
    }

    fn sum(&mut self) -> Result<Descendent, CliError> {
        let mut t = self.prod()?;
        while self.eat(b'+') {
            t = Descendent::sum(t, self.prod()?);
        }
        Ok(t)
    }

    fn prod(&mut self) -> Result<Descendent, CliError> {
        let mut t = self.unary()?;
        while self.eat(b'*') {
            t = Descendent::product(t, self.unary()?);
        }
        Ok(t)
    }

    fn unary(&mut self) -> Result<Descendent, CliError> {
        if self.eat(b'-') {
            return Ok(Descendent::negate(self.unary()?));
        }
        self.atom()
    }

    fn int(&mut self) -> Result<i32, CliError> {
        self.skip_ws();
        let start = self.pos;
        let rest = &self.src[start..];
        let sign = usize::from(rest.starts_with('-'));
        let digits = rest[sign..].bytes().take_while(u8::is_ascii_digit).count();
        if digits == 0 {
            return self.err("expected an integer");
        }
        let text = &rest[..sign + digits];
        match text.parse() {
            Ok(k) => {
                self.pos += text.len();
                Ok(k)
            }
            Err(_) => self.err("integer out of range"),
        }
    }

    fn atom(&mut self) -> Result<Descendent, CliError> {
        match self.peek() {
            Some(b'1') => {
                self.pos += 1;
                Ok(Descendent::One)
            }
            Some(b'(') => {
                self.pos += 1;
                let t = self.sum()?;
                self.expect(b')')?;
                Ok(t)
            }
            Some(c @ (b'p' | b'e' | b's')) => {
                self.pos += 1;
                self.expect(b'[')?;
                let t = match c {
                    b'p' => Descendent::Power(self.int()?),
                    b'e' => Descendent::Elementary(self.int()?),
                    _ => {
                        self.skip_ws();
                        match parse_partition_prefix(&self.src[self.pos..]) {
                            Ok((p, used)) => {
                                self.pos += used;
                                Descendent::Schur(p)
                            }
                            Err(e) => return self.err(format!("bad partition: {e}")),
                        }
                    }
                };
                self.expect(b']')?;
                Ok(t)
            }
            Some(_) => self.err("expected 1, p[..], e[..], s[..], '-' or '('"),
            None => self.err("unexpected end of input"),
        }
    }
}

/// Parse a descendent expression; `Display` on the result parses back to the same tree.
pub fn parse_descendent(text: &str) -> Result<Descendent, CliError> {
    let mut p = Parser { src: text, pos: 0 };
    let t = p.sum()?;
    if p.peek().is_some() {
        return p.err("trailing input");
    }
    Ok(t)
}

/// An exact rational written `p`, `-p` or `p/q`.
pub fn parse_rational(text: &str) -> Result<BigRational, CliError> {
    let bad = || CliError::Config(format!("not a rational literal: {text:?}"));
    let int = |s: &str| -> Result<BigInt, CliError> {
        let digits = s.strip_prefix('-').unwrap_or(s);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        s.parse().map_err(|_| bad())
    };
    let t = text.trim();
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (int(n)?, int(d)?),
        None => (int(t)?, BigInt::from(1)),
    };
    if den == BigInt::from(0) {
        return Err(bad());
    }
    Ok(BigRational::new(num, den))
}

/// `p/q` in lowest terms, with `q` always written.
pub fn rational_text(x: &BigRational) -> String {
    format!("{}/{}", x.numer(), x.denom())
}
