//! Text form of polynomials.
//!
//! Grammar (whitespace is insignificant):
//!
//! ```text
//! poly   := sign? term (sign term)*
//! term   := factor ('*' factor)*
//! factor := integer | ident ('^' integer)?
//! sign   := '+' | '-'
//! ```
//!
//! Output uses descending deglex order, e.g. `3*t^2 + 9*t + 27`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{Monomial, MonomialOrder, Polynomial, VariableSet};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
}

fn tokenize(text: &str) -> Result<Vec<(usize, Token)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        match c {
            b' ' | b'\t' | b'\n' | b'\r' => i += 1,
            b'+' => {
                out.push((i, Token::Plus));
                i += 1;
            }
            b'-' => {
                out.push((i, Token::Minus));
                i += 1;
            }
            b'*' => {
                out.push((i, Token::Star));
                i += 1;
            }
            b'^' => {
                out.push((i, Token::Caret));
                i += 1;
            }
            b'0'..=b'9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n: BigInt = text[start..i].parse().expect("ascii digits");
                out.push((start, Token::Int(n)));
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                let start = i;
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((start, Token::Ident(text[start..i].to_string())));
            }
            _ => {
                return Err(Error::Parse {
                    position: i,
                    message: format!("unexpected character `{}`", text[i..].chars().next().unwrap()),
                })
            }
        }
    }
    Ok(out)
}

struct Parser<'a> {
    tokens: Vec<(usize, Token)>,
    pos: usize,
    end: usize,
    vars: &'a VariableSet,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.end, |(o, _)| *o)
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            position: self.offset(),
            message: message.into(),
        })
    }

    fn exponent(&mut self) -> Result<u32> {
        match self.tokens.get(self.pos) {
            Some((_, Token::Int(n))) => {
                let e = u32::try_from(n).or_else(|_| self.error("exponent too large"))?;
                self.pos += 1;
                Ok(e)
            }
            _ => self.error("expected a non-negative integer exponent after `^`"),
        }
    }

    fn factor(&mut self, coeff: &mut BigInt, mono: &mut [u32]) -> Result<()> {
        match self.tokens.get(self.pos).cloned() {
            Some((_, Token::Int(n))) => {
                self.pos += 1;
                *coeff *= n;
                Ok(())
            }
            Some((at, Token::Ident(name))) => {
                let idx = self.vars.index_of(&name).ok_or(Error::UnknownVariable(name.clone()));
                let idx = match idx {
                    Ok(i) => i,
                    Err(_) => {
                        return Err(Error::Parse {
                            position: at,
                            message: format!("unknown variable `{name}` (declared: {})", self.vars),
                        })
                    }
                };
                self.pos += 1;
                let e = if self.peek() == Some(&Token::Caret) {
                    self.pos += 1;
                    self.exponent()?
                } else {
                    1
                };
                mono[idx] += e;
                Ok(())
            }
            Some(_) => self.error("expected a coefficient or a variable"),
            None => self.error("unexpected end of input"),
        }
    }

    fn term(&mut self) -> Result<(Monomial, BigInt)> {
        let mut coeff = BigInt::one();
        let mut mono = vec![0; self.vars.len()];
        self.factor(&mut coeff, &mut mono)?;
        while self.peek() == Some(&Token::Star) {
            self.pos += 1;
            self.factor(&mut coeff, &mut mono)?;
        }
        Ok((Monomial::new(mono), coeff))
    }

    fn polynomial(&mut self) -> Result<Polynomial> {
        let mut out = Polynomial::zero(self.vars);
        let mut first = true;
        loop {
            let negative = match self.peek() {
                Some(Token::Plus) => {
                    self.pos += 1;
                    false
                }
                Some(Token::Minus) => {
                    self.pos += 1;
                    true
                }
                None if first => return self.error("empty polynomial"),
                None => break,
                Some(_) if first => false,
                Some(_) => return self.error("expected `+` or `-` between terms"),
            };
            first = false;
            let (m, c) = self.term()?;
            out.add_term(m, if negative { -c } else { c });
        }
        Ok(out)
    }
}

/// Parses `text` over `vars`.
pub fn parse(text: &str, vars: &VariableSet) -> Result<Polynomial> {
    let tokens = tokenize(text)?;
    let mut p = Parser {
        tokens,
        pos: 0,
        end: text.len(),
        vars,
    };
    p.polynomial()
}

fn write_monomial(f: &mut fmt::Formatter<'_>, vars: &VariableSet, m: &Monomial) -> fmt::Result {
    let mut first = true;
    for (name, &e) in vars.names().iter().zip(m.exponents()) {
        if e == 0 {
            continue;
        }
        if !first {
            f.write_str("*")?;
        }
        first = false;
        if e == 1 {
            f.write_str(name)?;
        } else {
            write!(f, "{name}^{e}")?;
        }
    }
    Ok(())
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms_desc(MonomialOrder::DegLex).into_iter().enumerate() {
            let mag = c.abs();
            match (i, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m.is_one() {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                write_monomial(f, &self.vars, m)?;
            }
        }
        debug_assert!(!self.terms.values().any(Zero::is_zero));
        Ok(())
    }
}
