//! Recursive-descent parser for polynomial expressions.
//!
//! ```text
//! expr     := term (('+'|'-') term)*
//! term     := factor ('*' factor)*
//! factor   := base ('^' uint)?
//! base     := rational | variable | '(' expr ')'
//! rational := int ('/' uint)?
//! ```
//!
//! A sign in front of the first term of an expression is accepted and
//! negates that term, which is how printed polynomials such as `-1*d - 2*l`
//! read back.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::poly::{MultiPoly, Rational, Var};

/// Parses `text`, rejecting variables not in `allowed`.
pub fn parse_poly(text: &str, allowed: &[Var]) -> Result<MultiPoly> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        allowed,
    };
    let value = p.expr()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(value)
}

/// The variables users may write: `d`, `l`, `l1`..`l9`.
pub fn all_vars() -> Vec<Var> {
    let mut v = vec![Var::D, Var::L];
    v.extend((1..=crate::poly::MAX_LAMBDA).map(Var::lambda));
    v
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    allowed: &'a [Var],
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> Error {
        Error::Syntax {
            pos: self.pos,
            msg: msg.to_string(),
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

    fn expr(&mut self) -> Result<MultiPoly> {
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
            if self.eat(b'+') {
                acc += &self.term()?;
            } else if self.eat(b'-') {
                acc -= &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<MultiPoly> {
        let mut acc = self.factor()?;
        while self.eat(b'*') {
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<MultiPoly> {
        let base = self.base()?;
        if self.eat(b'^') {
            self.skip_ws();
            let start = self.pos;
            let digits = self.digits();
            if digits.is_empty() {
                return Err(self.error("expected exponent"));
            }
            let n: u32 = digits.parse().map_err(|_| Error::Syntax {
                pos: start,
                msg: "exponent too large".into(),
            })?;
            return Ok(base.pow(n));
        }
        Ok(base)
    }

    fn digits(&mut self) -> String {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.src[start..self.pos]).into_owned()
    }

    fn base(&mut self) -> Result<MultiPoly> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.error("expected `)`"));
                }
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let num: BigInt = self.digits().parse().expect("digit run");
                if self.eat(b'/') {
                    self.skip_ws();
                    let den_pos = self.pos;
                    let den = self.digits();
                    if den.is_empty() {
                        return Err(self.error("expected denominator"));
                    }
                    let den: BigInt = den.parse().expect("digit run");
                    if den.is_zero() {
                        return Err(Error::Syntax {
                            pos: den_pos,
                            msg: "zero denominator".into(),
                        });
                    }
                    Ok(MultiPoly::constant(Rational::new(num, den)))
                } else {
                    Ok(MultiPoly::constant(Rational::from_integer(num)))
                }
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_alphanumeric() {
                    self.pos += 1;
                }
                let name = String::from_utf8_lossy(&self.src[start..self.pos]).into_owned();
                match Var::from_name(&name) {
                    Some(v) if self.allowed.contains(&v) => Ok(MultiPoly::var(v)),
                    _ => Err(Error::UnknownVariable(name)),
                }
            }
            Some(_) => Err(self.error("expected number, variable or `(`")),
            None => Err(self.error("unexpected end of input")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> MultiPoly {
        parse_poly(s, &all_vars()).unwrap()
    }

    #[test]
    fn literal_terms() {
        let v = p("d + 2*l");
        assert_eq!(v, &MultiPoly::d() + &(&MultiPoly::int(2) * &MultiPoly::l()));
        assert_eq!(v.len(), 2);
    }

    #[test]
    fn power_expands() {
        assert_eq!(p("(d + 2*l)^2").to_string(), "d^2 + 4*d*l + 4*l^2");
    }

    #[test]
    fn cancellation_gives_empty_map() {
        assert!(p("1/2*d - 1/2*d").is_empty());
    }

    #[test]
    fn printed_forms_reparse() {
        for s in ["-1*d - 2*l", "1/2*d", "-3/4", "l1^2*l2 - l3 + 7", "0"] {
            let once = p(s);
            assert_eq!(p(&once.to_string()), once, "{s}");
        }
    }

    #[test]
    fn whitespace_is_insignificant() {
        assert_eq!(p(" d+  2 * l "), p("d+2*l"));
        assert_eq!(p("( d )^ 2"), p("d^2"));
    }

    #[test]
    fn errors() {
        assert!(matches!(
            parse_poly("d + x", &all_vars()),
            Err(Error::UnknownVariable(ref v)) if v == "x"
        ));
        assert!(matches!(
            parse_poly("l", &[Var::D]),
            Err(Error::UnknownVariable(_))
        ));
        assert!(matches!(
            parse_poly("d +", &all_vars()),
            Err(Error::Syntax { pos: 3, .. })
        ));
        assert!(matches!(
            parse_poly("2 d", &all_vars()),
            Err(Error::Syntax { .. })
        ));
        assert!(parse_poly("1/0", &all_vars()).is_err());
        assert!(parse_poly("(d", &all_vars()).is_err());
    }
}
