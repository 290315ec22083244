//! Text grammar for polynomials.
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor (('*'|'/') factor | factor)*     juxtaposition multiplies
//! factor := '-' factor | atom ['^' integer]
//! atom   := integer | 'x' | 'y' | 'z' | '(' expr ')'
//! ```
//!
//! Expressions are evaluated as formal fractions `num / den`, so `3/2*x`,
//! `x^3/3` and `1/x^2` all parse. [`parse_poly`] insists the denominator is
//! a constant; [`parse_fraction`] hands back both parts.

use alloc::borrow::ToOwned;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;

use super::{Poly, Rat, Var};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Var(Var),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn err(position: usize, message: &str) -> Error {
    Error::Parse {
        position,
        message: message.to_owned(),
    }
}

fn tokenize(s: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = s.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let b = bytes[i];
        let tok = match b {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'0'..=b'9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                if i < bytes.len() && bytes[i] == b'.' {
                    return Err(err(i, "floating-point literals are not supported"));
                }
                let n = BigInt::parse_bytes(&bytes[start..i], 10)
                    .ok_or_else(|| err(start, "bad integer"))?;
                out.push((start, Tok::Int(n)));
                continue;
            }
            b'x' => Tok::Var(Var::X),
            b'y' => Tok::Var(Var::Y),
            b'z' => Tok::Var(Var::Z),
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'/' => Tok::Slash,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            _ => {
                let ch = s[i..].chars().next().unwrap_or('?');
                let mut msg = String::from("unexpected character '");
                msg.push(ch);
                msg.push('\'');
                return Err(Error::Parse {
                    position: i,
                    message: msg,
                });
            }
        };
        out.push((i, tok));
        i += 1;
    }
    Ok(out)
}

/// A formal quotient of polynomials, used only while parsing.
#[derive(Debug, Clone)]
struct Frac {
    num: Poly,
    den: Poly,
}

impl Frac {
    fn poly(p: Poly) -> Self {
        Frac {
            num: p,
            den: Poly::one(),
        }
    }

    fn add(self, other: Frac, negate: bool) -> Frac {
        let rhs = &other.num * &self.den;
        let lhs = &self.num * &other.den;
        let num = if negate { lhs - rhs } else { lhs + rhs };
        Frac {
            num,
            den: self.den * other.den,
        }
        .tidy()
    }

    fn mul(self, other: Frac) -> Frac {
        Frac {
            num: self.num * other.num,
            den: self.den * other.den,
        }
        .tidy()
    }

    fn div(self, other: Frac, at: usize) -> Result<Frac> {
        if other.num.is_zero() {
            return Err(err(at, "division by zero"));
        }
        Ok(Frac {
            num: self.num * other.den,
            den: self.den * other.num,
        }
        .tidy())
    }

    /// Folds constant denominators into the numerator.
    fn tidy(self) -> Frac {
        if self.den.is_constant() {
            let c = self.den.constant_term();
            Frac {
                num: self.num.scale(&c.recip()),
                den: Poly::one(),
            }
        } else {
            self
        }
    }
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn at(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(p, _)| *p)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        t
    }

    fn expr(&mut self) -> Result<Frac> {
        let mut acc = match self.peek() {
            Some(Tok::Plus) => {
                self.bump();
                self.term()?
            }
            Some(Tok::Minus) => {
                self.bump();
                let t = self.term()?;
                Frac {
                    num: -t.num,
                    den: t.den,
                }
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    acc = acc.add(self.term()?, false);
                }
                Some(Tok::Minus) => {
                    self.bump();
                    acc = acc.add(self.term()?, true);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Frac> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.bump();
                    acc = acc.mul(self.factor()?);
                }
                Some(Tok::Slash) => {
                    self.bump();
                    let at = self.at();
                    acc = acc.div(self.factor()?, at)?;
                }
                Some(Tok::Int(_)) | Some(Tok::Var(_)) | Some(Tok::LParen) => {
                    acc = acc.mul(self.factor()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Frac> {
        if let Some(Tok::Minus) = self.peek() {
            self.bump();
            let f = self.factor()?;
            return Ok(Frac {
                num: -f.num,
                den: f.den,
            });
        }
        let base = self.atom()?;
        if let Some(Tok::Caret) = self.peek() {
            self.bump();
            let at = self.at();
            let e = match self.bump() {
                Some(Tok::Int(n)) => u32::try_from(n).map_err(|_| err(at, "exponent too large"))?,
                _ => return Err(err(at, "expected a non-negative integer exponent")),
            };
            return Ok(Frac {
                num: base.num.pow(e),
                den: base.den.pow(e),
            }
            .tidy());
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Frac> {
        let at = self.at();
        match self.bump() {
            Some(Tok::Int(n)) => Ok(Frac::poly(Poly::constant(Rat::from_integer(n)))),
            Some(Tok::Var(v)) => Ok(Frac::poly(Poly::var(v))),
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                let close = self.at();
                match self.bump() {
                    Some(Tok::RParen) => Ok(inner),
                    _ => Err(err(close, "expected ')'")),
                }
            }
            Some(_) => Err(err(at, "expected a number, variable or '('")),
            None => Err(err(at, "unexpected end of input")),
        }
    }
}

/// Parses `s` as a formal quotient `(numerator, denominator)`. A constant
/// denominator is folded into the numerator and reported as `1`.
pub fn parse_fraction(s: &str) -> Result<(Poly, Poly)> {
    let toks = tokenize(s)?;
    if toks.is_empty() {
        return Err(err(0, "empty expression"));
    }
    let mut parser = Parser {
        toks,
        pos: 0,
        end: s.len(),
    };
    let f = parser.expr()?;
    if parser.pos < parser.toks.len() {
        return Err(err(parser.at(), "unexpected token"));
    }
    debug_assert!(!f.den.is_zero());
    Ok((f.num, f.den))
}

/// Parses a polynomial such as `y^2 - x^3 - x` or `3/2*x^2 + 1`.
pub fn parse_poly(s: &str) -> Result<Poly> {
    let (num, den) = parse_fraction(s)?;
    if !den.is_one() {
        return Err(Error::NotPolynomial);
    }
    Ok(num)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{ratio, Mono};

    #[test]
    fn juxtaposition_and_rationals() {
        let p = parse_poly("3/2*x^2 + 1").unwrap();
        assert_eq!(p.coeff(&Mono::new(2, 0, 0)), ratio(3, 2));
        assert_eq!(parse_poly("2xy").unwrap(), parse_poly("2*x*y").unwrap());
        assert_eq!(
            parse_poly("x(x-1)").unwrap(),
            parse_poly("x^2 - x").unwrap()
        );
        assert_eq!(parse_poly("-x^2").unwrap(), -parse_poly("x^2").unwrap());
        assert_eq!(
            parse_poly("x^3/3").unwrap().coeff(&Mono::new(3, 0, 0)),
            ratio(1, 3)
        );
    }

    #[test]
    fn fractions() {
        let (n, d) = parse_fraction("1 / x^2").unwrap();
        assert!(n.is_one());
        assert_eq!(d, parse_poly("x^2").unwrap());
        assert_eq!(parse_poly("1/x"), Err(Error::NotPolynomial));
    }

    #[test]
    fn errors() {
        assert!(matches!(parse_poly(""), Err(Error::Parse { .. })));
        assert!(matches!(parse_poly("x + "), Err(Error::Parse { .. })));
        assert!(matches!(
            parse_poly("1.5*x"),
            Err(Error::Parse { position: 1, .. })
        ));
        assert!(matches!(
            parse_poly("w"),
            Err(Error::Parse { position: 0, .. })
        ));
        assert!(matches!(parse_poly("(x + 1"), Err(Error::Parse { .. })));
        assert!(matches!(parse_poly("x^-1"), Err(Error::Parse { .. })));
        assert!(matches!(parse_poly("x/0"), Err(Error::Parse { .. })));
        assert!(matches!(parse_poly("x)"), Err(Error::Parse { .. })));
    }
}
