//! Canonical text form.
//!
//! Terms are written in descending graded-lex order, e.g.
//! `1/2*t1^2*t3 + 1/2*t1*t2^2 - 1/4*t2*t3*t4^2`. Real coefficients are plain
//! fractions, purely imaginary ones carry a trailing `*I`, and mixed ones are
//! parenthesised as `(a+b*I)`.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::gaussian::GaussianRational;
use super::mpoly::{Monomial, MPoly};
use super::vars::VarTable;
use crate::error::{Error, Result};

fn fmt_rat(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn fmt_monomial(vars: &VarTable, m: &Monomial) -> String {
    let mut parts = Vec::new();
    for (i, &e) in m.exps().iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(vars.name(i).to_string()),
            _ => parts.push(format!("{}^{}", vars.name(i), e)),
        }
    }
    parts.join("*")
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms().rev().enumerate() {
            let mono = fmt_monomial(self.vars(), m);
            let (negative, body) = if c.is_real() {
                let a = c.re().abs();
                let body = if mono.is_empty() {
                    fmt_rat(&a)
                } else if a.is_one() {
                    mono
                } else {
                    format!("{}*{}", fmt_rat(&a), mono)
                };
                (c.re().is_negative(), body)
            } else if c.re().is_zero() {
                let b = c.im().abs();
                let coef = if b.is_one() { "I".to_string() } else { format!("{}*I", fmt_rat(&b)) };
                let body = if mono.is_empty() { coef } else { format!("{coef}*{mono}") };
                (c.im().is_negative(), body)
            } else {
                let coef = c.to_string();
                let body = if mono.is_empty() { coef } else { format!("{coef}*{mono}") };
                (false, body)
            };
            match (k, negative) {
                (0, true) => write!(f, "-{body}")?,
                (0, false) => f.write_str(&body)?,
                (_, true) => write!(f, " - {body}")?,
                (_, false) => write!(f, " + {body}")?,
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Op(char),
}

fn lex(src: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_ascii_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < bytes.len() && (bytes[i] as char).is_ascii_digit() {
                i += 1;
            }
            let n: BigInt = src[start..i].parse().expect("digits");
            out.push((start, Tok::Int(n)));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < bytes.len() && ((bytes[i] as char).is_ascii_alphanumeric() || bytes[i] == b'_')
            {
                i += 1;
            }
            out.push((start, Tok::Ident(src[start..i].to_string())));
        } else if "+-*/^()".contains(c) {
            out.push((i, Tok::Op(c)));
            i += 1;
        } else {
            return Err(Error::Parse {
                pos: i,
                msg: format!("unexpected character `{c}`"),
            });
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
    vars: &'a Arc<VarTable>,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map(|(p, _)| *p).unwrap_or(self.end)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            pos: self.here(),
            msg: msg.into(),
        })
    }

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Tok::Op(op)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<MPoly> {
        let mut acc = MPoly::zero(self.vars);
        let mut first = true;
        loop {
            let sign = if self.eat('-') {
                -1
            } else if self.eat('+') || first {
                1
            } else {
                break;
            };
            first = false;
            let t = self.term()?;
            acc = if sign < 0 { &acc - &t } else { &acc + &t };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<MPoly> {
        let mut acc = self.power()?;
        loop {
            if self.eat('*') {
                let rhs = self.power()?;
                acc = &acc * &rhs;
            } else if self.eat('/') {
                let rhs = self.power()?;
                acc = &acc * &self.invert(&rhs)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn invert(&self, p: &MPoly) -> Result<MPoly> {
        if p.len() != 1 {
            return self.err("can only divide by a single term");
        }
        let (m, c) = p.terms().next().unwrap();
        let cinv = match c.inv() {
            Some(ci) => ci,
            None => return self.err("division by zero"),
        };
        let minv = Monomial::from_exps(m.exps().iter().map(|e| -e).collect());
        let out = MPoly::monomial(self.vars, minv, cinv);
        for (i, &e) in out.terms().next().unwrap().0.exps().iter().enumerate() {
            if e < 0 && !self.vars.is_laurent(i) {
                return self.err(format!("negative power of non-Laurent `{}`", self.vars.name(i)));
            }
        }
        Ok(out)
    }

    fn power(&mut self) -> Result<MPoly> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let neg = self.eat('-');
        let e = match self.peek() {
            Some(Tok::Int(n)) => {
                let n: u32 = match n.try_into() {
                    Ok(n) => n,
                    Err(_) => return self.err("exponent too large"),
                };
                self.pos += 1;
                n
            }
            _ => return self.err("expected an integer exponent"),
        };
        if neg {
            Ok(self.invert(&base)?.pow(e))
        } else {
            Ok(base.pow(e))
        }
    }

    fn atom(&mut self) -> Result<MPoly> {
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                Ok(MPoly::constant(
                    self.vars,
                    GaussianRational::real(BigRational::from_integer(n)),
                ))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                if let Some(i) = self.vars.index_of(&name) {
                    Ok(MPoly::var(self.vars, i))
                } else if name == "I" {
                    Ok(MPoly::constant(self.vars, GaussianRational::i()))
                } else {
                    self.pos -= 1;
                    Err(Error::UnknownVariable(name))
                }
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return self.err("expected `)`");
                }
                Ok(e)
            }
            _ => self.err("expected a number, variable or `(`"),
        }
    }
}

impl MPoly {
    /// Parses the text form (and the looser hand-written variants of it:
    /// arbitrary nesting, `a/b` anywhere, division by single terms).
    pub fn parse(src: &str, vars: &Arc<VarTable>) -> Result<MPoly> {
        let mut p = Parser {
            toks: lex(src)?,
            pos: 0,
            end: src.len(),
            vars,
        };
        if p.toks.is_empty() {
            return p.err("empty input");
        }
        let out = p.expr()?;
        if p.pos != p.toks.len() {
            return p.err("trailing input");
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_text() {
        let v = VarTable::plain(&["t1", "t2", "t3"]);
        let p = MPoly::parse("t3^7/3360 - t2^3*t3/12 + 1/2*t1^2*t3", &v).unwrap();
        assert_eq!(p.to_string(), "1/3360*t3^7 - 1/12*t2^3*t3 + 1/2*t1^2*t3");
    }

    #[test]
    fn zero_and_constants() {
        let v = VarTable::plain(&["x"]);
        assert_eq!(MPoly::zero(&v).to_string(), "0");
        assert_eq!(MPoly::parse("-3/6", &v).unwrap().to_string(), "-1/2");
        assert_eq!(MPoly::parse("x - x", &v).unwrap().to_string(), "0");
    }

    #[test]
    fn gaussian_coefficients() {
        let v = VarTable::plain(&["t2"]);
        let p = MPoly::parse("I*t2 + (1/2 - 3*I)", &v).unwrap();
        assert_eq!(p.to_string(), "I*t2 + (1/2-3*I)");
        assert_eq!(MPoly::parse(&p.to_string(), &v).unwrap(), p);
        let q = MPoly::parse("-2*I*t2", &v).unwrap();
        assert_eq!(q.to_string(), "-2*I*t2");
    }

    #[test]
    fn laurent_division() {
        let v = VarTable::builder()
            .var("t4", BigRational::zero())
            .laurent_var("s", BigRational::zero())
            .build()
            .unwrap();
        let p = MPoly::parse("t4^2/(2*s)", &v).unwrap();
        assert_eq!(p.to_string(), "1/2*t4^2*s^-1");
        assert_eq!(MPoly::parse("1/2*t4^2*s^-1", &v).unwrap(), p);
        assert!(MPoly::parse("1/t4", &v).is_err());
    }

    #[test]
    fn errors_are_located() {
        let v = VarTable::plain(&["x"]);
        assert!(matches!(MPoly::parse("x + y", &v), Err(Error::UnknownVariable(n)) if n == "y"));
        assert!(matches!(MPoly::parse("x +", &v), Err(Error::Parse { .. })));
        assert!(matches!(MPoly::parse("x $", &v), Err(Error::Parse { pos: 2, .. })));
    }
}
