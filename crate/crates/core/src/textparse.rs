//! Strict recursive-descent parser for the polynomial text formats.
//!
//! One grammar serves field elements (`z^2+2*z+1`), polynomials in `t`,
//! and bivariate polynomials (`x^2 + (t)*x + (t+1)`): an expression is
//! sums/differences of products of powers of atoms, where an atom is an
//! unsigned integer, a known variable, or a parenthesized expression.
//! Unknown identifiers and leftover input are rejected, never guessed.

use alloc::boxed::Box;
use alloc::string::String;
use alloc::vec::Vec;

use crate::bivar::BivarPoly;
use crate::gf::{Field, FieldElement, FieldExt};
use crate::poly::Poly;
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Int(u64),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

fn tokenize(input: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let mut chars = input.chars().peekable();
    while let Some(&c) = chars.peek() {
        match c {
            ' ' | '\t' => {
                chars.next();
            }
            '0'..='9' => {
                let mut n: u64 = 0;
                while let Some(&d) = chars.peek() {
                    if let Some(v) = d.to_digit(10) {
                        n = n
                            .checked_mul(10)
                            .and_then(|n| n.checked_add(v as u64))
                            .ok_or_else(|| Error::Parse("integer literal too large".into()))?;
                        chars.next();
                    } else {
                        break;
                    }
                }
                out.push(Token::Int(n));
            }
            'a'..='z' | 'A'..='Z' => {
                let mut s = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_alphabetic() {
                        s.push(d);
                        chars.next();
                    } else {
                        break;
                    }
                }
                out.push(Token::Ident(s));
            }
            '+' => {
                chars.next();
                out.push(Token::Plus);
            }
            '-' => {
                chars.next();
                out.push(Token::Minus);
            }
            '*' => {
                chars.next();
                out.push(Token::Star);
            }
            '^' => {
                chars.next();
                out.push(Token::Caret);
            }
            '(' => {
                chars.next();
                out.push(Token::LParen);
            }
            ')' => {
                chars.next();
                out.push(Token::RParen);
            }
            other => {
                return Err(Error::Parse(alloc::format!("unexpected character '{other}'")));
            }
        }
    }
    Ok(out)
}

#[derive(Clone, Debug)]
enum Ast {
    Int(u64),
    Var(String),
    Add(Box<Ast>, Box<Ast>),
    Sub(Box<Ast>, Box<Ast>),
    Neg(Box<Ast>),
    Mul(Box<Ast>, Box<Ast>),
    Pow(Box<Ast>, u32),
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expr(&mut self) -> Result<Ast> {
        let mut lhs = if matches!(self.peek(), Some(Token::Minus)) {
            self.bump();
            Ast::Neg(Box::new(self.term()?))
        } else {
            self.term()?
        };
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.bump();
                    lhs = Ast::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Some(Token::Minus) => {
                    self.bump();
                    lhs = Ast::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Ast> {
        let mut lhs = self.power()?;
        while matches!(self.peek(), Some(Token::Star)) {
            self.bump();
            lhs = Ast::Mul(Box::new(lhs), Box::new(self.power()?));
        }
        Ok(lhs)
    }

    fn power(&mut self) -> Result<Ast> {
        let base = self.atom()?;
        if matches!(self.peek(), Some(Token::Caret)) {
            self.bump();
            match self.bump() {
                Some(Token::Int(n)) if n <= 1_000_000 => {
                    return Ok(Ast::Pow(Box::new(base), n as u32))
                }
                Some(Token::Int(_)) => return Err(Error::Parse("exponent too large".into())),
                _ => return Err(Error::Parse("expected integer exponent after '^'".into())),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Ast> {
        match self.bump() {
            Some(Token::Int(n)) => Ok(Ast::Int(n)),
            Some(Token::Ident(s)) => Ok(Ast::Var(s)),
            Some(Token::LParen) => {
                let inner = self.expr()?;
                match self.bump() {
                    Some(Token::RParen) => Ok(inner),
                    _ => Err(Error::Parse("missing closing parenthesis".into())),
                }
            }
            other => Err(Error::Parse(alloc::format!("unexpected token {other:?}"))),
        }
    }
}

fn parse_ast(input: &str) -> Result<Ast> {
    let tokens = tokenize(input)?;
    if tokens.is_empty() {
        return Err(Error::Parse("empty input".into()));
    }
    let mut parser = Parser { tokens, pos: 0 };
    let ast = parser.expr()?;
    if parser.pos != parser.tokens.len() {
        return Err(Error::Parse("trailing input after expression".into()));
    }
    Ok(ast)
}

trait Ring {
    type Value: Clone;
    fn from_uint(&self, n: u64) -> Self::Value;
    fn var(&self, name: &str) -> Result<Self::Value>;
    fn add(&self, a: &Self::Value, b: &Self::Value) -> Result<Self::Value>;
    fn sub(&self, a: &Self::Value, b: &Self::Value) -> Result<Self::Value>;
    fn neg(&self, a: &Self::Value) -> Self::Value;
    fn mul(&self, a: &Self::Value, b: &Self::Value) -> Result<Self::Value>;
}

fn eval<R: Ring>(ast: &Ast, ring: &R) -> Result<R::Value> {
    match ast {
        Ast::Int(n) => Ok(ring.from_uint(*n)),
        Ast::Var(name) => ring.var(name),
        Ast::Add(a, b) => ring.add(&eval(a, ring)?, &eval(b, ring)?),
        Ast::Sub(a, b) => ring.sub(&eval(a, ring)?, &eval(b, ring)?),
        Ast::Neg(a) => Ok(ring.neg(&eval(a, ring)?)),
        Ast::Mul(a, b) => ring.mul(&eval(a, ring)?, &eval(b, ring)?),
        Ast::Pow(a, e) => {
            let base = eval(a, ring)?;
            let mut acc = ring.from_uint(1);
            for _ in 0..*e {
                acc = ring.mul(&acc, &base)?;
            }
            Ok(acc)
        }
    }
}

struct PolyRing<'a> {
    field: &'a Field,
    var: &'a str,
}

impl Ring for PolyRing<'_> {
    type Value = Poly;

    fn from_uint(&self, n: u64) -> Poly {
        Poly::from_values(self.field, &[n])
    }

    fn var(&self, name: &str) -> Result<Poly> {
        if name == self.var {
            Ok(Poly::var(self.field))
        } else if name == "z" && self.field.degree() > 1 {
            Ok(Poly::constant(&self.field.gen()))
        } else {
            Err(Error::Parse(alloc::format!("unknown variable '{name}'")))
        }
    }

    fn add(&self, a: &Poly, b: &Poly) -> Result<Poly> {
        a.add(b)
    }

    fn sub(&self, a: &Poly, b: &Poly) -> Result<Poly> {
        a.sub(b)
    }

    fn neg(&self, a: &Poly) -> Poly {
        a.neg()
    }

    fn mul(&self, a: &Poly, b: &Poly) -> Result<Poly> {
        a.mul(b)
    }
}

struct BivarRing<'a> {
    field: &'a Field,
}

impl Ring for BivarRing<'_> {
    type Value = BivarPoly;

    fn from_uint(&self, n: u64) -> BivarPoly {
        BivarPoly::constant(&Poly::from_values(self.field, &[n]))
    }

    fn var(&self, name: &str) -> Result<BivarPoly> {
        match name {
            "x" => Ok(BivarPoly::var_x(self.field)),
            "t" => Ok(BivarPoly::constant(&Poly::var(self.field))),
            "z" if self.field.degree() > 1 => {
                Ok(BivarPoly::constant(&Poly::constant(&self.field.gen())))
            }
            _ => Err(Error::Parse(alloc::format!("unknown variable '{name}'"))),
        }
    }

    fn add(&self, a: &BivarPoly, b: &BivarPoly) -> Result<BivarPoly> {
        a.add(b)
    }

    fn sub(&self, a: &BivarPoly, b: &BivarPoly) -> Result<BivarPoly> {
        a.sub(b)
    }

    fn neg(&self, a: &BivarPoly) -> BivarPoly {
        a.neg()
    }

    fn mul(&self, a: &BivarPoly, b: &BivarPoly) -> Result<BivarPoly> {
        a.mul(b)
    }
}

struct ElemRing<'a> {
    field: &'a Field,
}

impl Ring for ElemRing<'_> {
    type Value = FieldElement;

    fn from_uint(&self, n: u64) -> FieldElement {
        self.field.elt_from_u64(n)
    }

    fn var(&self, name: &str) -> Result<FieldElement> {
        if name == "z" && self.field.degree() > 1 {
            Ok(self.field.gen())
        } else {
            Err(Error::Parse(alloc::format!("unknown variable '{name}'")))
        }
    }

    fn add(&self, a: &FieldElement, b: &FieldElement) -> Result<FieldElement> {
        a.add(b)
    }

    fn sub(&self, a: &FieldElement, b: &FieldElement) -> Result<FieldElement> {
        a.sub(b)
    }

    fn neg(&self, a: &FieldElement) -> FieldElement {
        a.neg()
    }

    fn mul(&self, a: &FieldElement, b: &FieldElement) -> Result<FieldElement> {
        a.mul(b)
    }
}

struct IntPolyRing;

fn int_trim(v: &mut Vec<i64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

impl Ring for IntPolyRing {
    type Value = Vec<i64>;

    fn from_uint(&self, n: u64) -> Vec<i64> {
        if n == 0 {
            Vec::new()
        } else {
            alloc::vec![n as i64]
        }
    }

    fn var(&self, name: &str) -> Result<Vec<i64>> {
        if name == "t" {
            Ok(alloc::vec![0, 1])
        } else {
            Err(Error::Parse(alloc::format!("unknown variable '{name}'")))
        }
    }

    fn add(&self, a: &Vec<i64>, b: &Vec<i64>) -> Result<Vec<i64>> {
        let n = a.len().max(b.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            out.push(x.checked_add(y).ok_or_else(|| Error::Parse("overflow".into()))?);
        }
        int_trim(&mut out);
        Ok(out)
    }

    fn sub(&self, a: &Vec<i64>, b: &Vec<i64>) -> Result<Vec<i64>> {
        self.add(a, &self.neg(b))
    }

    fn neg(&self, a: &Vec<i64>) -> Vec<i64> {
        a.iter().map(|&c| -c).collect()
    }

    fn mul(&self, a: &Vec<i64>, b: &Vec<i64>) -> Result<Vec<i64>> {
        if a.is_empty() || b.is_empty() {
            return Ok(Vec::new());
        }
        let mut out = alloc::vec![0i64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                let prod = x.checked_mul(y).ok_or_else(|| Error::Parse("overflow".into()))?;
                out[i + j] = out[i + j]
                    .checked_add(prod)
                    .ok_or_else(|| Error::Parse("overflow".into()))?;
            }
        }
        int_trim(&mut out);
        Ok(out)
    }
}

struct IntBivarRing;

type IntBivar = Vec<Vec<i64>>;

fn int_bivar_trim(v: &mut IntBivar) {
    while v.last().map_or(false, |c| c.is_empty()) {
        v.pop();
    }
}

impl Ring for IntBivarRing {
    type Value = IntBivar;

    fn from_uint(&self, n: u64) -> IntBivar {
        if n == 0 {
            Vec::new()
        } else {
            alloc::vec![alloc::vec![n as i64]]
        }
    }

    fn var(&self, name: &str) -> Result<IntBivar> {
        match name {
            "x" => Ok(alloc::vec![Vec::new(), alloc::vec![1]]),
            "t" => Ok(alloc::vec![alloc::vec![0, 1]]),
            _ => Err(Error::Parse(alloc::format!("unknown variable '{name}'"))),
        }
    }

    fn add(&self, a: &IntBivar, b: &IntBivar) -> Result<IntBivar> {
        let n = a.len().max(b.len());
        let empty = Vec::new();
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let x = a.get(i).unwrap_or(&empty);
            let y = b.get(i).unwrap_or(&empty);
            out.push(IntPolyRing.add(x, y)?);
        }
        int_bivar_trim(&mut out);
        Ok(out)
    }

    fn sub(&self, a: &IntBivar, b: &IntBivar) -> Result<IntBivar> {
        self.add(a, &self.neg(b))
    }

    fn neg(&self, a: &IntBivar) -> IntBivar {
        a.iter().map(|c| IntPolyRing.neg(c)).collect()
    }

    fn mul(&self, a: &IntBivar, b: &IntBivar) -> Result<IntBivar> {
        if a.is_empty() || b.is_empty() {
            return Ok(Vec::new());
        }
        let mut out = alloc::vec![Vec::new(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                let prod = IntPolyRing.mul(x, y)?;
                out[i + j] = IntPolyRing.add(&out[i + j], &prod)?;
            }
        }
        int_bivar_trim(&mut out);
        Ok(out)
    }
}

/// Parse a polynomial in `t` with integer coefficients (`t^2-1`),
/// returning the signed coefficient list, constant term first.
pub fn parse_int_poly(input: &str) -> Result<Vec<i64>> {
    let ast = parse_ast(input)?;
    eval(&ast, &IntPolyRing)
}

/// Parse a polynomial in `A[x]` with integer coefficients
/// (`x^2 - t`), returning the coefficient matrix: `out[i]` is the
/// integer t-polynomial at `x^i`.
pub fn parse_int_bivar(input: &str) -> Result<Vec<Vec<i64>>> {
    let ast = parse_ast(input)?;
    eval(&ast, &IntBivarRing)
}

pub(crate) fn parse_poly(field: &Field, input: &str, var: &str) -> Result<Poly> {
    let ast = parse_ast(input)?;
    eval(&ast, &PolyRing { field, var })
}

pub(crate) fn parse_bivar(field: &Field, input: &str) -> Result<BivarPoly> {
    let ast = parse_ast(input)?;
    eval(&ast, &BivarRing { field })
}

pub(crate) fn parse_elem(field: &Field, input: &str) -> Result<FieldElement> {
    let ast = parse_ast(input)?;
    eval(&ast, &ElemRing { field })
}
