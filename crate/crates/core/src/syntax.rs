//! Text syntax for terms and symbolic polynomials.
//!
//! ```text
//! expr     := term ('+' term)*
//! term     := rational '*' '[' rational (',' rational)* ']'
//! rational := integer | integer '/' positive-integer
//! ```
//!
//! Whitespace is allowed between tokens. `2*[1] + 3*[1,1]` is the symbolic
//! preimage of `2x + 3x^2`.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::sympoly::SymPoly;
use crate::term::Term;

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Parser { src, pos: 0 }
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Syntax {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn peek(&self) -> Option<u8> {
        self.src.as_bytes().get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|b| b.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn eat(&mut self, b: u8) -> bool {
        self.skip_ws();
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, b: u8) -> Result<()> {
        if self.eat(b) {
            Ok(())
        } else {
            self.err(format!("expected '{}'", b as char))
        }
    }

    fn digits(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected digits");
        }
        Ok(self.src[start..self.pos].parse().expect("ascii digits"))
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let neg = if self.peek() == Some(b'-') {
            self.pos += 1;
            true
        } else {
            false
        };
        let n = self.digits()?;
        Ok(if neg { -n } else { n })
    }

    fn rational(&mut self) -> Result<Rational> {
        let n = self.integer()?;
        if self.eat(b'/') {
            self.skip_ws();
            let at = self.pos;
            let d = self.digits()?;
            if d.is_zero() {
                self.pos = at;
                return self.err("denominator must be positive");
            }
            Ok(Rational::new(n, d))
        } else {
            Ok(Rational::from_integer(n))
        }
    }

    fn term(&mut self, k: usize) -> Result<Term> {
        let head = self.rational()?;
        self.expect(b'*')?;
        self.expect(b'[')?;
        let mut tail = vec![self.rational()?];
        while self.eat(b',') {
            tail.push(self.rational()?);
        }
        self.expect(b']')?;
        if tail.len() > k {
            return Err(Error::DegreeExceedsK { len: tail.len(), k });
        }
        Term::new(head, tail)
    }

    fn finish(&mut self) -> Result<()> {
        self.skip_ws();
        if self.pos < self.src.len() {
            return self.err("unexpected trailing input");
        }
        Ok(())
    }
}

/// Parses `expr` and normalizes it. Terms longer than `k` are rejected.
pub fn parse_sympoly(text: &str, k: usize) -> Result<SymPoly> {
    let mut p = Parser::new(text);
    let mut terms = vec![p.term(k)?];
    while p.eat(b'+') {
        terms.push(p.term(k)?);
    }
    p.finish()?;
    SymPoly::normalize(terms)
}

pub fn parse_term(text: &str, k: usize) -> Result<Term> {
    let mut p = Parser::new(text);
    let t = p.term(k)?;
    p.finish()?;
    Ok(t)
}
