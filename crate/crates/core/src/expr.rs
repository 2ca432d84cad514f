//! Parser for the textual form of elements and polynomials.
//!
//! Grammar: integers, `+ - * / ^`, parentheses, identifiers, implicit
//! multiplication by juxtaposition, and two sugars that name quadratic
//! generators: `I` (a root of `t^2 + 1`) and `sqrt(q)` for a rational `q`.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::rings::{Elem, Ring};
use crate::unipoly::UniPoly;

#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Num(BigInt),
    /// Identifier and its byte offset.
    Name(String, usize),
    /// `sqrt(q)`, stored with its canonical generator name.
    Sqrt(BigRational, String),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i64),
}

/// Canonical generator name for the square root of `q`.
pub fn sqrt_name(q: &BigRational) -> String {
    format!("sqrt({q})")
}

fn perr(offset: usize, message: impl Into<String>) -> Error {
    Error::Parse { offset, message: message.into() }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += self.peek().unwrap().len_utf8();
        }
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn peek_tok(&mut self) -> Option<char> {
        self.skip_ws();
        self.peek()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek_tok() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Expr> {
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

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        loop {
            if self.eat('*') {
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
            } else if self.eat('/') {
                lhs = Expr::Div(Box::new(lhs), Box::new(self.unary()?));
            } else if self.peek_tok().is_some_and(|c| c == '(' || is_ident_start(c) || c.is_ascii_digit()) {
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.power()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.eat('-') {
            Ok(Expr::Neg(Box::new(self.unary()?)))
        } else if self.eat('+') {
            self.unary()
        } else {
            self.power()
        }
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if self.eat('^') {
            let neg = self.eat('-');
            self.skip_ws();
            let start = self.pos;
            while self.peek().is_some_and(|c| c.is_ascii_digit()) {
                self.pos += 1;
            }
            if start == self.pos {
                return Err(perr(self.pos, "expected an integer exponent"));
            }
            let e: i64 = self.src[start..self.pos].parse().map_err(|_| perr(start, "exponent too large"))?;
            return Ok(Expr::Pow(Box::new(base), if neg { -e } else { e }));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr> {
        self.skip_ws();
        let start = self.pos;
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return Err(perr(self.pos, "expected ')'"));
                }
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                while self.peek().is_some_and(|c| c.is_ascii_digit()) {
                    self.pos += 1;
                }
                Ok(Expr::Num(self.src[start..self.pos].parse().unwrap()))
            }
            Some(c) if is_ident_start(c) => {
                while self.peek().is_some_and(|c| c.is_alphanumeric() || c == '_') {
                    self.pos += self.peek().unwrap().len_utf8();
                }
                let name = &self.src[start..self.pos];
                if name == "sqrt" && self.peek_tok() == Some('(') {
                    self.pos += 1;
                    let inner = self.expr()?;
                    if !self.eat(')') {
                        return Err(perr(self.pos, "expected ')'"));
                    }
                    let q = rational_value(&inner)
                        .ok_or_else(|| perr(start, "sqrt takes a rational constant"))?;
                    let name = sqrt_name(&q);
                    return Ok(Expr::Sqrt(q, name));
                }
                Ok(Expr::Name(name.to_string(), start))
            }
            Some(c) => Err(perr(start, format!("unexpected '{c}'"))),
            None => Err(perr(start, "unexpected end of input")),
        }
    }
}

fn is_ident_start(c: char) -> bool {
    c.is_alphabetic() || c == '_'
}

/// Value of a name-free expression.
fn rational_value(e: &Expr) -> Option<BigRational> {
    Some(match e {
        Expr::Num(n) => BigRational::from_integer(n.clone()),
        Expr::Name(..) | Expr::Sqrt(..) => return None,
        Expr::Neg(a) => -rational_value(a)?,
        Expr::Add(a, b) => rational_value(a)? + rational_value(b)?,
        Expr::Sub(a, b) => rational_value(a)? - rational_value(b)?,
        Expr::Mul(a, b) => rational_value(a)? * rational_value(b)?,
        Expr::Div(a, b) => {
            let d = rational_value(b)?;
            if d.is_zero() {
                return None;
            }
            rational_value(a)? / d
        }
        Expr::Pow(a, k) => {
            let v = rational_value(a)?;
            if *k < 0 && v.is_zero() {
                return None;
            }
            num_traits::pow::Pow::pow(v, *k as i32)
        }
    })
}

pub fn parse(src: &str) -> Result<Expr> {
    let mut p = Parser { src, pos: 0 };
    let e = p.expr()?;
    if let Some(c) = p.peek_tok() {
        return Err(perr(p.pos, format!("unexpected '{c}'")));
    }
    Ok(e)
}

impl Expr {
    /// Identifiers used, with `sqrt` sugar under its canonical name.
    pub fn names(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect(&mut out);
        out
    }

    fn collect(&self, out: &mut BTreeSet<String>) {
        match self {
            Expr::Num(_) => {}
            Expr::Name(n, _) => {
                out.insert(n.clone());
            }
            Expr::Sqrt(_, n) => {
                out.insert(n.clone());
            }
            Expr::Neg(a) | Expr::Pow(a, _) => a.collect(out),
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Div(a, b) => {
                a.collect(out);
                b.collect(out);
            }
        }
    }

    pub fn eval_elem(&self, ring: &Ring) -> Result<Elem> {
        Ok(match self {
            Expr::Num(n) => ring.from_bigint(n),
            Expr::Name(n, off) => ring.param(n).map_err(|_| perr(*off, format!("unknown name {n}")))?,
            Expr::Sqrt(_, n) => ring.param(n).map_err(|_| perr(0, format!("{n} is not in the domain")))?,
            Expr::Neg(a) => ring.neg(&a.eval_elem(ring)?),
            Expr::Add(a, b) => ring.add(&a.eval_elem(ring)?, &b.eval_elem(ring)?),
            Expr::Sub(a, b) => ring.sub(&a.eval_elem(ring)?, &b.eval_elem(ring)?),
            Expr::Mul(a, b) => ring.mul(&a.eval_elem(ring)?, &b.eval_elem(ring)?),
            Expr::Div(a, b) => ring.div(&a.eval_elem(ring)?, &b.eval_elem(ring)?)?,
            Expr::Pow(a, k) => {
                let v = a.eval_elem(ring)?;
                if *k >= 0 {
                    ring.pow(&v, *k as u64)
                } else {
                    ring.pow(&ring.inv(&v)?, k.unsigned_abs())
                }
            }
        })
    }

    /// Evaluate as a polynomial in `var`; other names are constants of `ring`.
    pub fn eval_poly(&self, ring: &Ring, var: &str) -> Result<UniPoly> {
        let c = |e: Elem| UniPoly::constant(ring, e);
        Ok(match self {
            Expr::Name(n, _) if n == var => UniPoly::x(ring),
            Expr::Num(_) | Expr::Name(..) | Expr::Sqrt(..) => c(self.eval_elem(ring)?),
            Expr::Neg(a) => a.eval_poly(ring, var)?.neg(),
            Expr::Add(a, b) => a.eval_poly(ring, var)?.add(&b.eval_poly(ring, var)?)?,
            Expr::Sub(a, b) => a.eval_poly(ring, var)?.sub(&b.eval_poly(ring, var)?)?,
            Expr::Mul(a, b) => a.eval_poly(ring, var)?.mul(&b.eval_poly(ring, var)?)?,
            Expr::Div(a, b) => {
                let d = b.eval_poly(ring, var)?;
                if !d.is_constant() {
                    return Err(Error::Invalid(format!("division by a polynomial in {var}")));
                }
                if d.is_zero() {
                    return Err(Error::DivisionByZero);
                }
                a.eval_poly(ring, var)?.scale(&ring.inv(&d.coeff(0))?)
            }
            Expr::Pow(a, k) => {
                if *k < 0 {
                    let v = a.eval_poly(ring, var)?;
                    if !v.is_constant() {
                        return Err(Error::Invalid(format!("negative power of a polynomial in {var}")));
                    }
                    c(ring.pow(&ring.inv(&v.coeff(0))?, k.unsigned_abs()))
                } else {
                    let k = u32::try_from(*k).map_err(|_| Error::Invalid("exponent too large".into()))?;
                    a.eval_poly(ring, var)?.pow(k)?
                }
            }
        })
    }
}

pub fn parse_elem(src: &str, ring: &Ring) -> Result<Elem> {
    parse(src)?.eval_elem(ring)
}

pub fn parse_poly(src: &str, ring: &Ring, var: &str) -> Result<UniPoly> {
    parse(src)?.eval_poly(ring, var)
}

/// Declared coefficient domain: characteristic, explicit extensions, parameters.
#[derive(Clone, Debug, Default)]
pub struct DomainSpec {
    /// 0 for the rationals, else a prime.
    pub characteristic: u64,
    /// `(generator, monic minimal polynomial in t)`, adjoined in order.
    pub extensions: Vec<(String, String)>,
    /// Parameter names; `None` infers them from the inputs.
    pub params: Option<Vec<String>>,
}

impl DomainSpec {
    /// Build the smallest tower in which every text (polynomials in `x`) can be read.
    ///
    /// Order: prime field, sugar generators (sorted), declared extensions,
    /// then rational functions in the parameters.
    pub fn build(&self, texts: &[&str]) -> Result<Ring> {
        let mut ring = if self.characteristic == 0 {
            Ring::rationals()
        } else {
            Ring::prime_field(self.characteristic)?
        };
        let exprs: Vec<Expr> = texts.iter().map(|s| parse(s)).collect::<Result<_>>()?;
        let ext_exprs: Vec<Expr> = self.extensions.iter().map(|(_, m)| parse(m)).collect::<Result<_>>()?;
        let mut names = BTreeSet::new();
        let mut sugar = BTreeSet::new();
        for e in exprs.iter().chain(&ext_exprs) {
            names.extend(e.names());
            collect_sugar(e, &mut sugar);
        }
        let declared: BTreeSet<&str> = self.extensions.iter().map(|(n, _)| n.as_str()).collect();
        if names.contains("I") && !declared.contains("I") {
            let t = UniPoly::from_ints(&ring, &[1, 0, 1]);
            ring = Ring::adjoin(&ring, "I", t.coeffs().to_vec())?;
        }
        for (q, name) in &sugar {
            if declared.contains(name.as_str()) {
                continue;
            }
            let c = ring.neg(&ring.from_rational(q)?);
            ring = Ring::adjoin(&ring, name, vec![c, ring.zero(), ring.one()])?;
        }
        for ((name, _), m) in self.extensions.iter().zip(&ext_exprs) {
            let p = m.eval_poly(&ring, "t")?;
            ring = Ring::adjoin(&ring, name, p.coeffs().to_vec())?;
        }
        let tower: BTreeSet<String> = ring.names().into_iter().collect();
        let params: Vec<String> = match &self.params {
            Some(p) => p.clone(),
            None => names
                .iter()
                .filter(|n| *n != "x" && *n != "t" && !tower.contains(*n) && !n.starts_with("sqrt("))
                .cloned()
                .collect(),
        };
        if !params.is_empty() {
            let refs: Vec<&str> = params.iter().map(String::as_str).collect();
            ring = Ring::rational_functions(&ring, &refs)?;
        }
        Ok(ring)
    }
}

fn collect_sugar(e: &Expr, out: &mut BTreeSet<(BigRational, String)>) {
    match e {
        Expr::Sqrt(q, n) => {
            out.insert((q.clone(), n.clone()));
        }
        Expr::Num(_) | Expr::Name(..) => {}
        Expr::Neg(a) | Expr::Pow(a, _) => collect_sugar(a, out),
        Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Div(a, b) => {
            collect_sugar(a, out);
            collect_sugar(b, out);
        }
    }
}

/// True if the rational is a nonnegative perfect square (so `sqrt` would be reducible).
pub fn is_rational_square(q: &BigRational) -> bool {
    !q.is_negative() && crate::rings::rational_root(q, 2).is_some()
}
