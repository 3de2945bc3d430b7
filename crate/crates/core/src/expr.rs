//! A small expression language shared by polynomial strings, scalars and algebra words.
//!
//! Two lexical modes:
//! - symbol mode: multi-character identifiers (`alpha`, `zeta4`), explicit `*`;
//! - word mode: single-letter identifiers, juxtaposition multiplies (`g^2x`, `gh - 1`).

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use crate::exactfield::Rational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExprError {
    #[error("parse error in `{input}`: {msg}")]
    Parse { input: String, msg: String },
    #[error("unknown symbol `{0}`")]
    Unknown(String),
    #[error("cannot evaluate: {0}")]
    Eval(String),
}

#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Num(Rational),
    Ident(String),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Neg(Box<Expr>),
    Pow(Box<Expr>, u32),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Symbol,
    Word,
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Op(char),
}

fn tokenize(s: &str, mode: Mode) -> Result<Vec<Tok>, String> {
    let chars: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let st = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let t: String = chars[st..i].iter().collect();
            out.push(Tok::Num(t.parse().map_err(|_| format!("bad number {t}"))?));
        } else if c.is_alphabetic() || c == '_' {
            match mode {
                Mode::Word => {
                    out.push(Tok::Ident(c.to_string()));
                    i += 1;
                }
                Mode::Symbol => {
                    let st = i;
                    while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_' || chars[i] == '\'') {
                        i += 1;
                    }
                    out.push(Tok::Ident(chars[st..i].iter().collect()));
                }
            }
        } else if "+-*/^()".contains(c) {
            out.push(Tok::Op(c));
            i += 1;
        } else if c == '·' {
            out.push(Tok::Op('*'));
            i += 1;
        } else {
            return Err(format!("unexpected character `{c}`"));
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
    mode: Mode,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }
    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Op(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }
    fn expr(&mut self) -> Result<Expr, String> {
        let mut lhs = self.term()?;
        loop {
            if self.eat('+') {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat('-') {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }
    fn starts_factor(&self) -> bool {
        matches!(self.peek(), Some(Tok::Ident(_)) | Some(Tok::Num(_)) | Some(Tok::Op('(')))
    }
    fn term(&mut self) -> Result<Expr, String> {
        let mut lhs = self.unary()?;
        loop {
            if self.eat('*') {
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
            } else if self.eat('/') {
                lhs = Expr::Div(Box::new(lhs), Box::new(self.unary()?));
            } else if self.mode == Mode::Word && self.starts_factor() {
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.power()?));
            } else {
                return Ok(lhs);
            }
        }
    }
    fn unary(&mut self) -> Result<Expr, String> {
        if self.eat('-') {
            Ok(Expr::Neg(Box::new(self.unary()?)))
        } else if self.eat('+') {
            self.unary()
        } else {
            self.power()
        }
    }
    fn power(&mut self) -> Result<Expr, String> {
        let base = self.atom()?;
        if self.eat('^') {
            match self.toks.get(self.pos).cloned() {
                Some(Tok::Num(n)) => {
                    self.pos += 1;
                    let e: u32 = n.try_into().map_err(|_| "exponent too large".to_string())?;
                    Ok(Expr::Pow(Box::new(base), e))
                }
                _ => Err("expected a non-negative integer exponent".into()),
            }
        } else {
            Ok(base)
        }
    }
    fn atom(&mut self) -> Result<Expr, String> {
        match self.toks.get(self.pos).cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(Expr::Num(Rational::from_integer(n)))
            }
            Some(Tok::Ident(s)) => {
                self.pos += 1;
                Ok(Expr::Ident(s))
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return Err("missing `)`".into());
                }
                Ok(e)
            }
            Some(t) => Err(format!("unexpected token {t:?}")),
            None => Err("unexpected end of input".into()),
        }
    }
}

pub fn parse(input: &str, mode: Mode) -> Result<Expr, ExprError> {
    let perr = |msg: String| ExprError::Parse { input: input.to_string(), msg };
    let toks = tokenize(input, mode).map_err(perr)?;
    if toks.is_empty() {
        return Err(perr("empty expression".into()));
    }
    let mut p = Parser { toks, pos: 0, mode };
    let e = p.expr().map_err(perr)?;
    if p.pos != p.toks.len() {
        return Err(perr(format!("trailing input at token {}", p.pos)));
    }
    Ok(e)
}

/// Interprets an [`Expr`] in some ring-like structure.
pub trait Evaluator {
    type Value: Clone;
    fn number(&self, r: &Rational) -> Result<Self::Value, ExprError>;
    fn ident(&self, name: &str) -> Result<Self::Value, ExprError>;
    fn add(&self, a: &Self::Value, b: &Self::Value) -> Result<Self::Value, ExprError>;
    fn neg(&self, a: &Self::Value) -> Result<Self::Value, ExprError>;
    fn mul(&self, a: &Self::Value, b: &Self::Value) -> Result<Self::Value, ExprError>;
    /// Division is only by scalars; implementors reject anything else.
    fn div(&self, a: &Self::Value, b: &Self::Value) -> Result<Self::Value, ExprError>;

    fn eval(&self, e: &Expr) -> Result<Self::Value, ExprError> {
        match e {
            Expr::Num(r) => self.number(r),
            Expr::Ident(s) => self.ident(s),
            Expr::Add(a, b) => self.add(&self.eval(a)?, &self.eval(b)?),
            Expr::Sub(a, b) => {
                let nb = self.neg(&self.eval(b)?)?;
                self.add(&self.eval(a)?, &nb)
            }
            Expr::Mul(a, b) => self.mul(&self.eval(a)?, &self.eval(b)?),
            Expr::Div(a, b) => self.div(&self.eval(a)?, &self.eval(b)?),
            Expr::Neg(a) => self.neg(&self.eval(a)?),
            Expr::Pow(a, n) => {
                let base = self.eval(a)?;
                let mut acc = self.number(&Rational::from_integer(1.into()))?;
                for _ in 0..*n {
                    acc = self.mul(&acc, &base)?;
                }
                Ok(acc)
            }
        }
    }
}

/// True if the expression is a plain rational literal (used to validate divisors).
pub fn literal_value(e: &Expr) -> Option<Rational> {
    match e {
        Expr::Num(r) => Some(r.clone()),
        Expr::Neg(a) => literal_value(a).map(|r| -r),
        Expr::Div(a, b) => {
            let (a, b) = (literal_value(a)?, literal_value(b)?);
            if b.is_zero() {
                None
            } else {
                Some(a / b)
            }
        }
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn word_mode_juxtaposition() {
        let e = parse("g^2x", Mode::Word).unwrap();
        assert_eq!(
            e,
            Expr::Mul(Box::new(Expr::Pow(Box::new(Expr::Ident("g".into())), 2)), Box::new(Expr::Ident("x".into())))
        );
        assert!(parse("gh - 1", Mode::Word).is_ok());
    }

    #[test]
    fn symbol_mode_identifiers() {
        let e = parse("-1/2*alpha^2 + zeta4", Mode::Symbol).unwrap();
        match e {
            Expr::Add(_, b) => assert_eq!(*b, Expr::Ident("zeta4".into())),
            _ => panic!("shape"),
        }
        assert!(parse("alpha beta", Mode::Symbol).is_err());
        assert!(parse("(a", Mode::Symbol).is_err());
    }
}
