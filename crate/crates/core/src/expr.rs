//! Parser for the textual expression grammars.
//!
//! One grammar covers coefficients (`q^-3`, `3/2`), algebra words
//! (`K[1]*E[1,2]`), coordinates (`t[1,2]*tb[2,1]`), superspace letters
//! (`z[1]*zb[2]`) and printed normal forms (`Z[1;0] Zb[1;0]`). Juxtaposition
//! is multiplication. Parsing yields an [`Expr`] tree which is then evaluated
//! into a concrete algebra through [`ExprAlgebra`].

use num_bigint::BigInt;
use thiserror::Error;

use crate::coeff::{RatFunc, Rational};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("parse error at position {pos}: {msg}")]
pub struct ParseError {
    pub pos: usize,
    pub msg: String,
}

impl ParseError {
    pub fn new(pos: usize, msg: impl Into<String>) -> Self {
        ParseError {
            pos,
            msg: msg.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Int(BigInt),
    /// Identifier with optional bracketed index groups, e.g. `Z[1,0;2]` has
    /// groups `[[1, 0], [2]]`.
    Symbol {
        name: String,
        groups: Vec<Vec<i64>>,
        pos: usize,
    },
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>, usize),
    Neg(Box<Expr>),
    Pow(Box<Expr>, i64, usize),
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    LBracket,
    RBracket,
    Comma,
    Semi,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn tokenize(src: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        if c.is_ascii_digit() {
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let v: BigInt = src[start..i].parse().expect("digits");
            out.push((start, Tok::Int(v)));
            continue;
        }
        if c.is_ascii_alphabetic() || c == '_' {
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            out.push((start, Tok::Ident(src[start..i].to_string())));
            continue;
        }
        let tok = match c {
            '[' => Tok::LBracket,
            ']' => Tok::RBracket,
            ',' => Tok::Comma,
            ';' => Tok::Semi,
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            _ => return Err(ParseError::new(start, format!("unexpected character '{c}'"))),
        };
        out.push((start, tok));
        i += 1;
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    idx: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.idx).map(|t| &t.1)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.idx).map_or(self.end, |t| t.0)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.idx).map(|t| t.1.clone());
        self.idx += 1;
        t
    }

    fn expect(&mut self, want: Tok, what: &str) -> Result<(), ParseError> {
        let pos = self.pos();
        match self.bump() {
            Some(t) if t == want => Ok(()),
            _ => Err(ParseError::new(pos, format!("expected {what}"))),
        }
    }

    fn sum(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.product()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    let rhs = self.product()?;
                    lhs = Expr::Add(Box::new(lhs), Box::new(rhs));
                }
                Some(Tok::Minus) => {
                    self.bump();
                    let rhs = self.product()?;
                    lhs = Expr::Sub(Box::new(lhs), Box::new(rhs));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn starts_factor(&self) -> bool {
        matches!(
            self.peek(),
            Some(Tok::Int(_)) | Some(Tok::Ident(_)) | Some(Tok::LParen)
        )
    }

    fn product(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.unary()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.bump();
                    let rhs = self.unary()?;
                    lhs = Expr::Mul(Box::new(lhs), Box::new(rhs));
                }
                Some(Tok::Slash) => {
                    let pos = self.pos();
                    self.bump();
                    let rhs = self.unary()?;
                    lhs = Expr::Div(Box::new(lhs), Box::new(rhs), pos);
                }
                _ if self.starts_factor() => {
                    let rhs = self.power()?;
                    lhs = Expr::Mul(Box::new(lhs), Box::new(rhs));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        match self.peek() {
            Some(Tok::Minus) => {
                self.bump();
                Ok(Expr::Neg(Box::new(self.unary()?)))
            }
            Some(Tok::Plus) => {
                self.bump();
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Expr, ParseError> {
        let base = self.atom()?;
        if self.peek() == Some(&Tok::Caret) {
            let pos = self.pos();
            self.bump();
            let e = self.signed_int()?;
            return Ok(Expr::Pow(Box::new(base), e, pos));
        }
        Ok(base)
    }

    fn signed_int(&mut self) -> Result<i64, ParseError> {
        let pos = self.pos();
        let neg = match self.peek() {
            Some(Tok::Minus) => {
                self.bump();
                true
            }
            Some(Tok::Plus) => {
                self.bump();
                false
            }
            _ => false,
        };
        match self.bump() {
            Some(Tok::Int(v)) => {
                let v: i64 = i64::try_from(v)
                    .map_err(|_| ParseError::new(pos, "integer out of range"))?;
                Ok(if neg { -v } else { v })
            }
            _ => Err(ParseError::new(pos, "expected integer")),
        }
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        let pos = self.pos();
        match self.bump() {
            Some(Tok::Int(v)) => Ok(Expr::Int(v)),
            Some(Tok::LParen) => {
                let e = self.sum()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(e)
            }
            Some(Tok::Ident(name)) => {
                let mut groups = Vec::new();
                if self.peek() == Some(&Tok::LBracket) {
                    self.bump();
                    let mut cur = Vec::new();
                    loop {
                        if self.peek() == Some(&Tok::RBracket) && cur.is_empty() && groups.is_empty() {
                            self.bump();
                            break;
                        }
                        cur.push(self.signed_int()?);
                        let p = self.pos();
                        match self.bump() {
                            Some(Tok::Comma) => {}
                            Some(Tok::Semi) => groups.push(std::mem::take(&mut cur)),
                            Some(Tok::RBracket) => {
                                groups.push(std::mem::take(&mut cur));
                                break;
                            }
                            _ => return Err(ParseError::new(p, "expected ',', ';' or ']'")),
                        }
                    }
                }
                Ok(Expr::Symbol { name, groups, pos })
            }
            Some(_) => Err(ParseError::new(pos, "unexpected token")),
            None => Err(ParseError::new(pos, "unexpected end of input")),
        }
    }
}

/// Parses a full expression.
pub fn parse(src: &str) -> Result<Expr, ParseError> {
    let toks = tokenize(src)?;
    let mut p = Parser {
        toks,
        idx: 0,
        end: src.len(),
    };
    if p.toks.is_empty() {
        return Err(ParseError::new(0, "empty expression"));
    }
    let e = p.sum()?;
    if p.idx < p.toks.len() {
        return Err(ParseError::new(p.pos(), "unexpected trailing input"));
    }
    Ok(e)
}

/// Target algebra for expression evaluation.
pub trait ExprAlgebra {
    type Elem: Clone;
    fn scalar(&self, c: RatFunc) -> Self::Elem;
    /// Interprets a non-`q` identifier.
    fn symbol(&self, name: &str, groups: &[Vec<i64>], pos: usize) -> Result<Self::Elem, ParseError>;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// The element as a scalar, if it is one.
    fn as_scalar(&self, a: &Self::Elem) -> Option<RatFunc>;
}

pub fn evaluate<A: ExprAlgebra>(e: &Expr, alg: &A) -> Result<A::Elem, ParseError> {
    Ok(match e {
        Expr::Int(v) => alg.scalar(RatFunc::from_rational(Rational::from_integer(v.clone()))),
        Expr::Symbol { name, groups, pos } => {
            if name == "q" {
                if !groups.is_empty() {
                    return Err(ParseError::new(*pos, "'q' takes no indices"));
                }
                alg.scalar(RatFunc::q())
            } else {
                alg.symbol(name, groups, *pos)?
            }
        }
        Expr::Add(a, b) => alg.add(&evaluate(a, alg)?, &evaluate(b, alg)?),
        Expr::Sub(a, b) => alg.add(&evaluate(a, alg)?, &alg.neg(&evaluate(b, alg)?)),
        Expr::Mul(a, b) => alg.mul(&evaluate(a, alg)?, &evaluate(b, alg)?),
        Expr::Neg(a) => alg.neg(&evaluate(a, alg)?),
        Expr::Div(a, b, pos) => {
            let den = evaluate(b, alg)?;
            let den = alg
                .as_scalar(&den)
                .ok_or_else(|| ParseError::new(*pos, "division by a non-scalar"))?;
            let inv = den
                .inv()
                .map_err(|_| ParseError::new(*pos, "division by zero"))?;
            alg.mul(&evaluate(a, alg)?, &alg.scalar(inv))
        }
        Expr::Pow(a, k, pos) => {
            let base = evaluate(a, alg)?;
            if *k < 0 {
                let s = alg
                    .as_scalar(&base)
                    .ok_or_else(|| ParseError::new(*pos, "negative power of a non-scalar"))?;
                let v = s
                    .pow(*k as i32)
                    .map_err(|_| ParseError::new(*pos, "division by zero"))?;
                alg.scalar(v)
            } else {
                let mut acc = alg.scalar(RatFunc::one());
                for _ in 0..*k {
                    acc = alg.mul(&acc, &base);
                }
                acc
            }
        }
    })
}

/// Scalars only.
pub struct CoefficientAlgebra;

impl ExprAlgebra for CoefficientAlgebra {
    type Elem = RatFunc;
    fn scalar(&self, c: RatFunc) -> RatFunc {
        c
    }
    fn symbol(&self, name: &str, _: &[Vec<i64>], pos: usize) -> Result<RatFunc, ParseError> {
        Err(ParseError::new(pos, format!("unknown symbol '{name}'")))
    }
    fn add(&self, a: &RatFunc, b: &RatFunc) -> RatFunc {
        a + b
    }
    fn neg(&self, a: &RatFunc) -> RatFunc {
        -a
    }
    fn mul(&self, a: &RatFunc, b: &RatFunc) -> RatFunc {
        a * b
    }
    fn as_scalar(&self, a: &RatFunc) -> Option<RatFunc> {
        Some(a.clone())
    }
}

pub fn parse_coefficient(src: &str) -> Result<RatFunc, ParseError> {
    evaluate(&parse(src)?, &CoefficientAlgebra)
}

/// Reads an index group as a list of positive indices.
pub fn indices(groups: &[Vec<i64>], pos: usize, expect: usize) -> Result<Vec<usize>, ParseError> {
    if groups.len() != 1 || groups[0].len() != expect {
        return Err(ParseError::new(pos, format!("expected {expect} indices")));
    }
    groups[0]
        .iter()
        .map(|&v| {
            usize::try_from(v)
                .ok()
                .filter(|&u| u >= 1)
                .ok_or_else(|| ParseError::new(pos, "indices must be positive"))
        })
        .collect()
}
