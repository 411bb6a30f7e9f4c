//! Expression grammar shared by polynomials, operators and abstract words.
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor ('*' factor)*
//! factor := atom ('^' ['-'] nat)?
//! atom   := ident | nat ('/' nat)? | '(' expr ')'
//! ```
//!
//! Products are kept in source order, so the same tree evaluates correctly
//! in noncommutative targets. Negative exponents are only accepted by
//! targets that can invert the base (the Laurent model).

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::numfield::Scalar;

#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Num(Scalar),
    Ident { name: String, offset: usize },
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow { base: Box<Expr>, exp: i64, offset: usize },
}

/// Which generator names a word expression may use.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Alphabet {
    /// `X`, `Y`, `E`: the concrete operators of a space.
    Operators,
    /// `x`, `y`, `e`, and `x^-1` where the target allows it.
    Abstract,
}

impl Alphabet {
    pub fn generators(self) -> [&'static str; 3] {
        match self {
            Alphabet::Operators => ["X", "Y", "E"],
            Alphabet::Abstract => ["x", "y", "e"],
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Ident(String),
    Nat(BigInt),
    Sym(char),
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_ascii_whitespace() {
            i += 1;
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            out.push((start, Tok::Ident(text[start..i].to_string())));
        } else if c.is_ascii_digit() {
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let n = text[start..i].parse().expect("digits");
            out.push((start, Tok::Nat(n)));
        } else if "+-*^/()".contains(c) {
            out.push((i, Tok::Sym(c)));
            i += 1;
        } else {
            return Err(Error::Syntax { offset: i, message: format!("unexpected character `{c}`") });
        }
    }
    Ok(out)
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

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(o, _)| *o)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Syntax { offset: self.offset(), message: message.into() })
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = if self.eat('-') {
            Expr::Neg(Box::new(self.term()?))
        } else {
            self.eat('+');
            self.term()?
        };
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

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.factor()?;
        while self.eat('*') {
            lhs = Expr::Mul(Box::new(lhs), Box::new(self.factor()?));
        }
        Ok(lhs)
    }

    fn factor(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let offset = self.offset();
        let negative = self.eat('-');
        let Some(Tok::Nat(n)) = self.peek().cloned() else {
            return self.err("expected integer exponent");
        };
        self.pos += 1;
        let Ok(n) = i64::try_from(n) else {
            return Err(Error::Syntax { offset, message: "exponent too large".into() });
        };
        let exp = if negative { -n } else { n };
        Ok(Expr::Pow { base: Box::new(base), exp, offset })
    }

    fn atom(&mut self) -> Result<Expr> {
        let offset = self.offset();
        match self.peek().cloned() {
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                Ok(Expr::Ident { name, offset })
            }
            Some(Tok::Nat(n)) => {
                self.pos += 1;
                let mut den = BigInt::one();
                if self.eat('/') {
                    let Some(Tok::Nat(d)) = self.peek().cloned() else {
                        return self.err("expected denominator");
                    };
                    if d.is_zero() {
                        return self.err("zero denominator");
                    }
                    self.pos += 1;
                    den = d;
                }
                Ok(Expr::Num(Scalar::new(n, den)))
            }
            Some(Tok::Sym('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return self.err("expected `)`");
                }
                Ok(e)
            }
            Some(_) => self.err("expected operand"),
            None => self.err("unexpected end of input"),
        }
    }
}

/// Parses an expression; generator names are resolved at evaluation time.
pub fn parse_expr(text: &str) -> Result<Expr> {
    let toks = tokenize(text)?;
    let mut p = Parser { toks, pos: 0, end: text.len() };
    let e = p.expr()?;
    if p.pos < p.toks.len() {
        return p.err("unexpected trailing input");
    }
    Ok(e)
}

/// A target algebra for evaluating [`Expr`] trees.
pub trait ExprAlgebra {
    type Value: Clone;

    fn constant(&self, q: &Scalar) -> Self::Value;
    fn generator(&self, name: &str) -> Option<Self::Value>;
    fn add(&self, a: &Self::Value, b: &Self::Value) -> Self::Value;
    fn neg(&self, a: &Self::Value) -> Self::Value;
    fn mul(&self, a: &Self::Value, b: &Self::Value) -> Self::Value;

    /// Two-sided inverse, where the target has one.
    fn inverse(&self, _a: &Self::Value) -> Option<Self::Value> {
        None
    }
}

impl Expr {
    pub fn eval<A: ExprAlgebra>(&self, alg: &A) -> Result<A::Value> {
        Ok(match self {
            Expr::Num(q) => alg.constant(q),
            Expr::Ident { name, offset } => alg
                .generator(name)
                .ok_or_else(|| Error::UnknownGenerator { name: name.clone(), offset: *offset })?,
            Expr::Neg(a) => alg.neg(&a.eval(alg)?),
            Expr::Add(a, b) => alg.add(&a.eval(alg)?, &b.eval(alg)?),
            Expr::Sub(a, b) => alg.add(&a.eval(alg)?, &alg.neg(&b.eval(alg)?)),
            Expr::Mul(a, b) => alg.mul(&a.eval(alg)?, &b.eval(alg)?),
            Expr::Pow { base, exp, offset } => {
                let mut b = base.eval(alg)?;
                if *exp < 0 {
                    b = alg.inverse(&b).ok_or_else(|| Error::Syntax {
                        offset: *offset,
                        message: "negative exponent on a non-invertible factor".into(),
                    })?;
                }
                let mut acc = alg.constant(&Scalar::one());
                for _ in 0..exp.unsigned_abs() {
                    acc = alg.mul(&acc, &b);
                }
                acc
            }
        })
    }
}


/// Evaluates into [`SparsePoly`] over a fixed list of variable names.
pub struct PolyAlgebra<'a> {
    pub names: &'a [String],
}

impl ExprAlgebra for PolyAlgebra<'_> {
    type Value = crate::numfield::SparsePoly;

    fn constant(&self, q: &Scalar) -> Self::Value {
        crate::numfield::SparsePoly::constant(self.names.len(), q.clone())
    }
    fn generator(&self, name: &str) -> Option<Self::Value> {
        let i = self.names.iter().position(|n| n == name)?;
        Some(crate::numfield::SparsePoly::var(self.names.len(), i))
    }
    fn add(&self, a: &Self::Value, b: &Self::Value) -> Self::Value {
        a + b
    }
    fn neg(&self, a: &Self::Value) -> Self::Value {
        -a
    }
    fn mul(&self, a: &Self::Value, b: &Self::Value) -> Self::Value {
        a * b
    }
}

/// Parses a polynomial in the named variables.
pub fn parse_poly(text: &str, names: &[String]) -> Result<crate::numfield::SparsePoly> {
    parse_expr(text)?.eval(&PolyAlgebra { names })
}

/// Parses a univariate rational polynomial in `var`.
pub fn parse_unipoly(text: &str, var: &str) -> Result<crate::numfield::QPoly> {
    let names = [var.to_string()];
    let p = parse_poly(text, &names)?;
    let deg = p.total_degree().unwrap_or(0) as usize;
    let mut coeffs = vec![Scalar::zero(); deg + 1];
    for (e, c) in p.terms() {
        coeffs[e.get(0) as usize] = c.clone();
    }
    Ok(crate::numfield::QPoly::from_scalars(coeffs))
}
