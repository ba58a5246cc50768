//! A small expression grammar shared by every textual input surface:
//! integers, symbols, `+ - * / ^`, parentheses, with `^` taking nonnegative
//! integer exponents. Whitespace-insensitive; errors carry byte positions.
//!
//! The same parser serves several value domains (cycle classes, rational
//! functions, field scalars) through the [`ExprAlgebra`] trait; domains
//! without division simply reject `/`.

use crate::arith::{FqElement, FqField};
use crate::chow::{CycleClass, RingSpec};
use crate::classes::{whitney_sum, BundleClass};
use crate::error::{Error, Result};
use crate::milnor::RationalFunction;
use std::sync::Arc;

pub trait ExprAlgebra {
    type Value: Clone;

    fn integer(&self, n: i64) -> Result<Self::Value>;
    fn symbol(&self, name: &str, pos: usize) -> Result<Self::Value>;
    fn add(&self, a: Self::Value, b: Self::Value) -> Result<Self::Value>;
    fn sub(&self, a: Self::Value, b: Self::Value) -> Result<Self::Value>;
    fn mul(&self, a: Self::Value, b: Self::Value) -> Result<Self::Value>;
    fn pow(&self, a: Self::Value, exp: u32) -> Result<Self::Value>;

    fn div(&self, _a: Self::Value, _b: Self::Value, pos: usize) -> Result<Self::Value> {
        Err(Error::Parse { pos, msg: "division is not defined in this context".into() })
    }

    fn negate(&self, a: Self::Value) -> Result<Self::Value> {
        self.sub(self.integer(0)?, a)
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Int(i64),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn tokenize(text: &str) -> Result<Vec<(usize, Token)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0usize;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '+' => {
                out.push((i, Token::Plus));
                i += 1;
            }
            '-' => {
                out.push((i, Token::Minus));
                i += 1;
            }
            '*' => {
                out.push((i, Token::Star));
                i += 1;
            }
            '/' => {
                out.push((i, Token::Slash));
                i += 1;
            }
            '^' => {
                out.push((i, Token::Caret));
                i += 1;
            }
            '(' => {
                out.push((i, Token::LParen));
                i += 1;
            }
            ')' => {
                out.push((i, Token::RParen));
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n: i64 = text[start..i].parse().map_err(|_| Error::Parse {
                    pos: start,
                    msg: "integer literal too large".into(),
                })?;
                out.push((start, Token::Int(n)));
            }
            _ if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < bytes.len()
                    && ((bytes[i] as char).is_ascii_alphanumeric() || bytes[i] == b'_')
                {
                    i += 1;
                }
                out.push((start, Token::Ident(text[start..i].to_string())));
            }
            _ => {
                return Err(Error::Parse { pos: i, msg: format!("unexpected character `{c}`") });
            }
        }
    }
    Ok(out)
}

struct Parser<'a, A: ExprAlgebra> {
    algebra: &'a A,
    tokens: Vec<(usize, Token)>,
    pos: usize,
    end: usize,
}

impl<'a, A: ExprAlgebra> Parser<'a, A> {
    fn peek(&self) -> Option<&(usize, Token)> {
        self.tokens.get(self.pos)
    }

    fn bump(&mut self) -> Option<(usize, Token)> {
        let t = self.tokens.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expr(&mut self) -> Result<A::Value> {
        let mut acc = self.term()?;
        while let Some((_, tok)) = self.peek() {
            match tok {
                Token::Plus => {
                    self.bump();
                    let rhs = self.term()?;
                    acc = self.algebra.add(acc, rhs)?;
                }
                Token::Minus => {
                    self.bump();
                    let rhs = self.term()?;
                    acc = self.algebra.sub(acc, rhs)?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<A::Value> {
        let mut acc = self.unary()?;
        while let Some((pos, tok)) = self.peek().cloned() {
            match tok {
                Token::Star => {
                    self.bump();
                    let rhs = self.unary()?;
                    acc = self.algebra.mul(acc, rhs)?;
                }
                Token::Slash => {
                    self.bump();
                    let rhs = self.unary()?;
                    acc = self.algebra.div(acc, rhs, pos)?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<A::Value> {
        if let Some((_, Token::Minus)) = self.peek() {
            self.bump();
            let v = self.unary()?;
            return self.algebra.negate(v);
        }
        self.power()
    }

    fn power(&mut self) -> Result<A::Value> {
        let mut acc = self.atom()?;
        while let Some((_, Token::Caret)) = self.peek() {
            self.bump();
            match self.bump() {
                Some((_, Token::Int(n))) if n >= 0 => {
                    let exp = u32::try_from(n).map_err(|_| Error::Parse {
                        pos: self.end,
                        msg: "exponent too large".into(),
                    })?;
                    acc = self.algebra.pow(acc, exp)?;
                }
                Some((pos, _)) => {
                    return Err(Error::Parse {
                        pos,
                        msg: "`^` takes a nonnegative integer exponent".into(),
                    })
                }
                None => {
                    return Err(Error::Parse {
                        pos: self.end,
                        msg: "`^` takes a nonnegative integer exponent".into(),
                    })
                }
            }
        }
        Ok(acc)
    }

    fn atom(&mut self) -> Result<A::Value> {
        match self.bump() {
            Some((_, Token::Int(n))) => self.algebra.integer(n),
            Some((pos, Token::Ident(name))) => self.algebra.symbol(&name, pos),
            Some((_, Token::LParen)) => {
                let inner = self.expr()?;
                match self.bump() {
                    Some((_, Token::RParen)) => Ok(inner),
                    Some((pos, _)) => {
                        Err(Error::Parse { pos, msg: "expected closing parenthesis".into() })
                    }
                    None => Err(Error::Parse {
                        pos: self.end,
                        msg: "expected closing parenthesis".into(),
                    }),
                }
            }
            Some((pos, tok)) => {
                Err(Error::Parse { pos, msg: format!("unexpected token {tok:?}") })
            }
            None => Err(Error::Parse { pos: self.end, msg: "unexpected end of input".into() }),
        }
    }
}

/// Parse a full expression; trailing input is an error.
pub fn parse_with<A: ExprAlgebra>(algebra: &A, text: &str) -> Result<A::Value> {
    let tokens = tokenize(text)?;
    let mut parser = Parser { algebra, tokens, pos: 0, end: text.len() };
    let value = parser.expr()?;
    if let Some((pos, tok)) = parser.peek() {
        return Err(Error::Parse { pos: *pos, msg: format!("trailing input {tok:?}") });
    }
    Ok(value)
}

// ---- cycle classes ----

pub struct CycleAlgebra {
    ring: Arc<RingSpec>,
}

impl CycleAlgebra {
    pub fn new(ring: &Arc<RingSpec>) -> Self {
        CycleAlgebra { ring: ring.clone() }
    }
}

impl ExprAlgebra for CycleAlgebra {
    type Value = CycleClass;

    fn integer(&self, n: i64) -> Result<CycleClass> {
        Ok(CycleClass::constant(&self.ring, n))
    }

    fn symbol(&self, name: &str, pos: usize) -> Result<CycleClass> {
        CycleClass::generator(&self.ring, name).map_err(|_| Error::Parse {
            pos,
            msg: format!("unknown generator `{name}`"),
        })
    }

    fn add(&self, a: CycleClass, b: CycleClass) -> Result<CycleClass> {
        a.add(&b)
    }

    fn sub(&self, a: CycleClass, b: CycleClass) -> Result<CycleClass> {
        a.sub(&b)
    }

    fn mul(&self, a: CycleClass, b: CycleClass) -> Result<CycleClass> {
        a.mul(&b)
    }

    fn pow(&self, a: CycleClass, exp: u32) -> Result<CycleClass> {
        a.pow(exp)
    }
}

/// Parse an expression into a normalized cycle class.
pub fn parse_cycle(ring: &Arc<RingSpec>, text: &str) -> Result<CycleClass> {
    parse_with(&CycleAlgebra::new(ring), text)
}

// ---- rational functions over F_q(t) ----

pub struct RatFuncAlgebra {
    field: FqField,
}

impl RatFuncAlgebra {
    pub fn new(field: &FqField) -> Self {
        RatFuncAlgebra { field: field.clone() }
    }
}

impl ExprAlgebra for RatFuncAlgebra {
    type Value = RationalFunction;

    fn integer(&self, n: i64) -> Result<RationalFunction> {
        Ok(RationalFunction::constant(&self.field, self.field.from_int(n)))
    }

    fn symbol(&self, name: &str, pos: usize) -> Result<RationalFunction> {
        if name == "t" {
            Ok(RationalFunction::from_poly(
                &self.field,
                crate::arith::poly::Poly::x(&self.field),
            ))
        } else {
            Err(Error::Parse { pos, msg: format!("unknown symbol `{name}`; the variable is `t`") })
        }
    }

    fn add(&self, a: RationalFunction, b: RationalFunction) -> Result<RationalFunction> {
        a.add(&b, &self.field)
    }

    fn sub(&self, a: RationalFunction, b: RationalFunction) -> Result<RationalFunction> {
        a.sub(&b, &self.field)
    }

    fn mul(&self, a: RationalFunction, b: RationalFunction) -> Result<RationalFunction> {
        a.mul(&b, &self.field)
    }

    fn pow(&self, a: RationalFunction, exp: u32) -> Result<RationalFunction> {
        a.pow(exp, &self.field)
    }

    fn div(&self, a: RationalFunction, b: RationalFunction, pos: usize) -> Result<RationalFunction> {
        if b.is_zero() {
            return Err(Error::Parse { pos, msg: "division by zero".into() });
        }
        a.mul(&b.inv(&self.field)?, &self.field)
    }
}

pub fn parse_rational(field: &FqField, text: &str) -> Result<RationalFunction> {
    parse_with(&RatFuncAlgebra::new(field), text)
}

// ---- scalars in F_q ----

pub struct ScalarAlgebra {
    field: FqField,
}

impl ScalarAlgebra {
    pub fn new(field: &FqField) -> Self {
        ScalarAlgebra { field: field.clone() }
    }
}

impl ExprAlgebra for ScalarAlgebra {
    type Value = FqElement;

    fn integer(&self, n: i64) -> Result<FqElement> {
        Ok(self.field.from_int(n))
    }

    fn symbol(&self, name: &str, pos: usize) -> Result<FqElement> {
        if name == "x" && self.field.degree() > 1 {
            Ok(self.field.generator())
        } else {
            Err(Error::Parse {
                pos,
                msg: format!("unknown symbol `{name}` in F_{}", self.field.order()),
            })
        }
    }

    fn add(&self, a: FqElement, b: FqElement) -> Result<FqElement> {
        Ok(self.field.add(&a, &b))
    }

    fn sub(&self, a: FqElement, b: FqElement) -> Result<FqElement> {
        Ok(self.field.sub(&a, &b))
    }

    fn mul(&self, a: FqElement, b: FqElement) -> Result<FqElement> {
        Ok(self.field.mul(&a, &b))
    }

    fn pow(&self, a: FqElement, exp: u32) -> Result<FqElement> {
        Ok(self.field.pow(&a, exp as u64))
    }

    fn div(&self, a: FqElement, b: FqElement, pos: usize) -> Result<FqElement> {
        if self.field.is_zero(&b) {
            return Err(Error::Parse { pos, msg: "division by zero".into() });
        }
        Ok(self.field.mul(&a, &self.field.inv(&b)?))
    }
}

pub fn parse_scalar(field: &FqField, text: &str) -> Result<FqElement> {
    parse_with(&ScalarAlgebra::new(field), text)
}

// ---- bundle expressions ----

/// Parses a split-bundle expression: a sum of `O(<codim-1 class>)` line
/// terms and nonnegative integers (trivial summands), e.g. `O(h)+O(2*h)+1`.
pub fn parse_bundle(ring: &Arc<RingSpec>, text: &str) -> Result<BundleClass> {
    let mut acc = BundleClass::trivial(ring, 0);
    let mut depth = 0usize;
    let mut start = 0usize;
    let mut summands: Vec<(usize, &str)> = Vec::new();
    for (i, c) in text.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => {
                depth = depth.checked_sub(1).ok_or(Error::Parse {
                    pos: i,
                    msg: "unbalanced parenthesis".into(),
                })?;
            }
            '+' if depth == 0 => {
                summands.push((start, &text[start..i]));
                start = i + 1;
            }
            _ => {}
        }
    }
    summands.push((start, &text[start..]));
    for (offset, raw) in summands {
        let piece = raw.trim();
        if piece.is_empty() {
            return Err(Error::Parse { pos: offset, msg: "empty bundle summand".into() });
        }
        if let Some(rest) = piece.strip_prefix('O') {
            let rest = rest.trim();
            if !rest.starts_with('(') || !rest.ends_with(')') {
                return Err(Error::Parse {
                    pos: offset,
                    msg: "line terms have the form O(<class>)".into(),
                });
            }
            let inner = &rest[1..rest.len() - 1];
            let c1 = parse_cycle(ring, inner)?;
            acc = whitney_sum(&acc, &BundleClass::line(&c1)?)?;
        } else {
            let n: u32 = piece.parse().map_err(|_| Error::Parse {
                pos: offset,
                msg: "bundle summands are O(<class>) or a trivial rank".into(),
            })?;
            acc = whitney_sum(&acc, &BundleClass::trivial(ring, n))?;
        }
    }
    Ok(acc)
}
