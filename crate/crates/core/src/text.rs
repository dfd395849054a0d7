//! Text form of field elements and polynomials.
//!
//! Grammar: sums and differences of products, `^` with a non-negative integer
//! exponent, parentheses, unsigned decimal integers, the constants `i` and `r2`,
//! and the variable names of [`Var`]. Division is allowed by constants only.

use std::fmt::Write;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::field::FieldElem;
use crate::poly::{Poly, Var, NVARS};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn lex(s: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let chars: Vec<char> = s.chars().collect();
    let mut k = 0;
    while k < chars.len() {
        let c = chars[k];
        match c {
            _ if c.is_whitespace() => k += 1,
            '+' | '-' | '*' | '/' | '^' | '(' | ')' => {
                out.push(match c {
                    '+' => Tok::Plus,
                    '-' => Tok::Minus,
                    '*' => Tok::Star,
                    '/' => Tok::Slash,
                    '^' => Tok::Caret,
                    '(' => Tok::LParen,
                    _ => Tok::RParen,
                });
                k += 1;
            }
            _ if c.is_ascii_digit() => {
                let start = k;
                while k < chars.len() && chars[k].is_ascii_digit() {
                    k += 1;
                }
                let digits: String = chars[start..k].iter().collect();
                out.push(Tok::Num(digits.parse().expect("digits")));
            }
            _ if c.is_alphabetic() => {
                let start = k;
                while k < chars.len() && (chars[k].is_alphanumeric() || chars[k] == '_') {
                    k += 1;
                }
                out.push(Tok::Ident(chars[start..k].iter().collect()));
            }
            _ => return Err(Error::Parse(format!("unexpected character `{c}`"))),
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expr(&mut self) -> Result<Poly> {
        let mut acc = match self.peek() {
            Some(Tok::Minus) => {
                self.pos += 1;
                -self.term()?
            }
            Some(Tok::Plus) => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Poly> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    acc = &acc * &self.power()?;
                }
                Some(Tok::Slash) => {
                    self.pos += 1;
                    let d = self.power()?.to_constant().ok_or(Error::NotConstant)?;
                    acc = acc.scale(&d.inv()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> Result<Poly> {
        let base = self.atom()?;
        if self.peek() == Some(&Tok::Caret) {
            self.pos += 1;
            match self.next() {
                Some(Tok::Num(n)) => {
                    let e: u32 = n
                        .try_into()
                        .map_err(|_| Error::Parse("exponent too large".into()))?;
                    return Ok(base.pow(e));
                }
                t => return Err(Error::Parse(format!("expected exponent, found {t:?}"))),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Poly> {
        match self.next() {
            Some(Tok::Num(n)) => Ok(Poly::constant(FieldElem::from(n))),
            Some(Tok::Ident(name)) => match name.as_str() {
                "i" => Ok(Poly::constant(FieldElem::i())),
                "r2" | "sqrt2" => Ok(Poly::constant(FieldElem::sqrt2())),
                _ => Var::from_name(&name)
                    .map(Poly::var)
                    .ok_or_else(|| Error::Parse(format!("unknown symbol `{name}`"))),
            },
            Some(Tok::LParen) => {
                let e = self.expr()?;
                match self.next() {
                    Some(Tok::RParen) => Ok(e),
                    t => Err(Error::Parse(format!("expected `)`, found {t:?}"))),
                }
            }
            Some(Tok::Minus) => Ok(-self.power()?),
            t => Err(Error::Parse(format!("unexpected token {t:?}"))),
        }
    }
}

pub fn parse_poly(s: &str) -> Result<Poly> {
    let toks = lex(s)?;
    if toks.is_empty() {
        return Err(Error::Parse("empty expression".into()));
    }
    let mut p = Parser { toks, pos: 0 };
    let out = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(Error::Parse(format!(
            "trailing input at token {}",
            p.pos + 1
        )));
    }
    Ok(out)
}

fn fmt_monomial(m: &[u16; NVARS]) -> String {
    let mut parts = Vec::new();
    for (k, &e) in m.iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(Var::ALL[k].name().to_string()),
            _ => parts.push(format!("{}^{}", Var::ALL[k].name(), e)),
        }
    }
    parts.join("*")
}

/// Terms in descending monomial order; multi-term coefficients are parenthesized.
pub fn format_poly(p: &Poly) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (idx, (m, c)) in p.terms().collect::<Vec<_>>().into_iter().rev().enumerate() {
        let mono = fmt_monomial(m);
        let single = c.term_count() == 1;
        let (neg, coef) = if single {
            let s = c.to_string();
            match s.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, s),
            }
        } else {
            (false, format!("({c})"))
        };
        let body = match (mono.is_empty(), coef.as_str()) {
            (true, _) => coef,
            (false, "1") => mono,
            (false, _) => format!("{coef}*{mono}"),
        };
        match (idx == 0, neg) {
            (true, false) => out.push_str(&body),
            (true, true) => {
                let _ = write!(out, "-{body}");
            }
            (false, false) => {
                let _ = write!(out, " + {body}");
            }
            (false, true) => {
                let _ = write!(out, " - {body}");
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_field_constants() {
        let x: FieldElem = "1/2 - 3*i + 2/3*r2 + i*r2".parse().unwrap();
        assert_eq!(x.to_string(), "1/2 - 3*i + 2/3*r2 + i*r2");
        let y: FieldElem = "(1 + i)^2".parse().unwrap();
        assert_eq!(y, FieldElem::from_ints(0, 2, 0, 0));
    }

    #[test]
    fn parses_polynomials() {
        let p = parse_poly("4*alpha*beta*(alpha^4 - β^4)").unwrap();
        assert_eq!(p.to_string(), "4*alpha^5*beta - 4*alpha*beta^5");
        assert_eq!(parse_poly(&p.to_string()).unwrap(), p);
        let q = parse_poly("(1+i)*X^2*Z - r2").unwrap();
        assert_eq!(parse_poly(&q.to_string()).unwrap(), q);
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_poly("").is_err());
        assert!(parse_poly("X +").is_err());
        assert!(parse_poly("foo").is_err());
        assert!(parse_poly("1/X").is_err());
        assert!(parse_poly("1/0").is_err());
        assert!("X".parse::<FieldElem>().is_err());
    }
}
