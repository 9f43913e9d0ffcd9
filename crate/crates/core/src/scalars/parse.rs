//! Recursive-descent parser for the canonical scalar syntax.
//!
//! ```text
//! expr  := term (("+" | "-") term)*
//! term  := unary (("*" | "/") unary)*
//! unary := "-" unary | "+" unary | power
//! power := atom ("^" exponent)?
//! exponent := "-"? integer | "(" "-"? integer ")"
//! atom  := integer | symbol | "(" expr ")"
//! ```

use num_bigint::BigInt;

use super::{Scalar, ScalarError, Symbol};

pub(super) fn parse(text: &str) -> Result<Scalar, ScalarError> {
    let mut p = Parser { src: text.as_bytes(), pos: 0 };
    let v = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(v)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> ScalarError {
        ScalarError::Parse { pos: self.pos, msg: msg.to_string() }
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

    fn expr(&mut self) -> Result<Scalar, ScalarError> {
        let mut acc = self.term()?;
        loop {
            if self.eat(b'+') {
                acc = acc.add(&self.term()?);
            } else if self.eat(b'-') {
                acc = acc.sub(&self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Scalar, ScalarError> {
        let mut acc = self.unary()?;
        loop {
            if self.eat(b'*') {
                acc = acc.mul(&self.unary()?);
            } else if self.peek() == Some(b'/') {
                let at = self.pos;
                self.pos += 1;
                let d = self.unary()?;
                acc = acc.checked_div(&d).map_err(|_| ScalarError::Parse {
                    pos: at,
                    msg: "division by zero".into(),
                })?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<Scalar, ScalarError> {
        if self.eat(b'-') {
            return Ok(self.unary()?.neg());
        }
        if self.eat(b'+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<Scalar, ScalarError> {
        let base = self.atom()?;
        if !self.eat(b'^') {
            return Ok(base);
        }
        let paren = self.eat(b'(');
        let neg = self.eat(b'-');
        let at = self.pos;
        let n = self.integer()?;
        if paren && !self.eat(b')') {
            return Err(self.error("expected ')' after exponent"));
        }
        let e: i32 = n
            .try_into()
            .map_err(|_| ScalarError::Parse { pos: at, msg: "exponent out of range".into() })?;
        let e = if neg { -e } else { e };
        base.checked_pow(e)
            .map_err(|_| ScalarError::Parse { pos: at, msg: "negative power of zero".into() })
    }

    fn integer(&mut self) -> Result<BigInt, ScalarError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected integer"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(digits.parse().expect("digits form an integer"))
    }

    fn atom(&mut self) -> Result<Scalar, ScalarError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.error("expected ')'"));
                }
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => Ok(Scalar::from_bigint(self.integer()?)),
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii identifier");
                let s = Symbol::new(name).map_err(|e| match e {
                    ScalarError::InvalidSymbol(n) => {
                        ScalarError::Parse { pos: start, msg: format!("invalid symbol {n:?}") }
                    }
                    other => other,
                })?;
                Ok(Scalar::sym(s))
            }
            Some(_) => Err(self.error("unexpected character")),
            None => Err(self.error("unexpected end of input")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn precedence_and_exponents() {
        let a = parse("-q^2 + 2*q^-1 - (z)^(-2)").unwrap();
        let q = Scalar::var("q");
        let z = Scalar::var("z");
        let expect = q.pow(2).neg().add(&Scalar::int(2).mul(&q.pow(-1))).sub(&z.pow(-2));
        assert_eq!(a, expect);
        assert_eq!(parse("1/2/3").unwrap(), Scalar::ratio(1, 6));
    }

    #[test]
    fn errors_carry_positions() {
        assert!(matches!(parse("q +"), Err(ScalarError::Parse { .. })));
        assert!(matches!(parse("(q"), Err(ScalarError::Parse { .. })));
        assert!(matches!(parse("1/0"), Err(ScalarError::Parse { pos: 1, .. })));
        assert!(matches!(parse("Q"), Err(ScalarError::Parse { .. })));
    }
}
