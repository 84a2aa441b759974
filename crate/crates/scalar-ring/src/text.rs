//! Text form of Laurent scalars: terms in ascending order, written in t with half powers.
//!
//! `-1 + t^(1/2) + 2*t^2` is the canonical rendering of −1 + s + 2s⁴. Cyclotomic
//! coefficients print as parenthesized polynomials in `q`, e.g. `(1 + 2*q)*t`.
//! The parser accepts any sum of products of rationals, `q`, `t`, `s` and
//! parenthesized subexpressions, so printed values parse back exactly.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use crate::{CyclotomicField, FieldElement, LaurentScalar, ScalarError};

fn fmt_t_power(k: i64, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    match (k, k % 2 == 0) {
        (2, _) => write!(f, "t"),
        (k, true) if k > 0 => write!(f, "t^{}", k / 2),
        (k, true) => write!(f, "t^({})", k / 2),
        (k, false) => write!(f, "t^({k}/2)"),
    }
}

impl fmt::Display for LaurentScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (k, c)) in self.terms().iter().enumerate() {
            let negative = c.to_rational().is_some() && c.sign_key() == Ordering::Less;
            let mag = if negative { -c } else { c.clone() };
            match (i, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if *k == 0 {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                fmt_t_power(*k, f)?;
            }
        }
        Ok(())
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    field: &'a Arc<CyclotomicField>,
}

impl<'a> Parser<'a> {
    fn err(&self, msg: impl Into<String>) -> ScalarError {
        ScalarError::Parse { pos: self.pos, msg: msg.into() }
    }

    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
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

    fn expect(&mut self, c: u8) -> Result<(), ScalarError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.err(format!("expected `{}`", c as char)))
        }
    }

    fn integer(&mut self) -> Result<i64, ScalarError> {
        self.skip_ws();
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        std::str::from_utf8(&self.src[start..self.pos]).unwrap().parse().map_err(|_| self.err("expected integer"))
    }

    fn expr(&mut self) -> Result<LaurentScalar, ScalarError> {
        let mut acc = if self.eat(b'-') { -self.term()? } else { self.term()? };
        loop {
            if self.eat(b'+') {
                acc = acc.try_add(&self.term()?)?;
            } else if self.eat(b'-') {
                acc = acc.try_add(&-self.term()?)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<LaurentScalar, ScalarError> {
        let mut acc = self.factor()?;
        while self.eat(b'*') {
            acc = acc.try_mul(&self.factor()?)?;
        }
        Ok(acc)
    }

    /// Exponent after `^`: an integer, or a parenthesized signed integer or half-integer.
    /// Returned in halves.
    fn exponent_halves(&mut self) -> Result<i64, ScalarError> {
        if self.eat(b'(') {
            let neg = self.eat(b'-');
            let n = self.integer()?;
            let halves = if self.eat(b'/') {
                if self.integer()? != 2 {
                    return Err(self.err("only half-integer exponents are allowed"));
                }
                n
            } else {
                2 * n
            };
            self.expect(b')')?;
            Ok(if neg { -halves } else { halves })
        } else {
            let neg = self.eat(b'-');
            let n = self.integer()?;
            Ok(if neg { -2 * n } else { 2 * n })
        }
    }

    fn factor(&mut self) -> Result<LaurentScalar, ScalarError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                self.expect(b')')?;
                Ok(v)
            }
            Some(c @ (b't' | b's')) => {
                self.pos += 1;
                let halves = if self.eat(b'^') { self.exponent_halves()? } else { 2 };
                match c {
                    b't' => Ok(LaurentScalar::s_pow(halves)),
                    _ if halves % 2 == 0 => Ok(LaurentScalar::s_pow(halves / 2)),
                    _ => Err(self.err("s takes integer exponents")),
                }
            }
            Some(b'q') => {
                self.pos += 1;
                let halves = if self.eat(b'^') { self.exponent_halves()? } else { 2 };
                if halves % 2 != 0 {
                    return Err(self.err("q takes integer exponents"));
                }
                Ok(LaurentScalar::constant(self.field.q().pow(halves / 2)?))
            }
            Some(c) if c.is_ascii_digit() => {
                let num = self.integer()?;
                let den = if self.eat(b'/') { self.integer()? } else { 1 };
                if den == 0 {
                    return Err(ScalarError::DivisionByZero);
                }
                Ok(LaurentScalar::constant(FieldElement::from_frac(num, den)))
            }
            _ => Err(self.err("unexpected character")),
        }
    }
}

impl LaurentScalar {
    /// Parses the text form, interpreting `q` in the given field.
    pub fn parse(text: &str, field: &Arc<CyclotomicField>) -> Result<Self, ScalarError> {
        let mut p = Parser { src: text.as_bytes(), pos: 0, field };
        let v = p.expr()?;
        if p.peek().is_some() {
            return Err(p.err("trailing input"));
        }
        Ok(v)
    }
}

impl std::str::FromStr for LaurentScalar {
    type Err = ScalarError;

    /// Parses over ℚ; `q` then denotes 1.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::parse(s, &CyclotomicField::rationals())
    }
}
