//! Text grammar for polynomials, series and rational functions in `q`.
//!
//! ```text
//! expr  := term (("+" | "-") term)*
//! term  := unary (("*" | "/") unary)*
//! unary := "-" unary | power
//! power := atom ("^" "-"? integer)?
//! atom  := integer | identifier | "(" expr ")"
//! ```
//!
//! Rationals are written as quotients (`2/4`). Errors carry byte offsets.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::algebra::poly::{Polynomial, Vars};
use crate::algebra::ratfun::RationalFunction;
use crate::algebra::rational::Rational;
use crate::algebra::ring::{Additive, Ring};
use crate::algebra::series::Series;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
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
            let s = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            out.push((s, Tok::Num(src[s..i].parse().expect("digits"))));
        } else if c.is_ascii_alphabetic() {
            let s = i;
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            out.push((s, Tok::Ident(src[s..i].to_string())));
        } else if "+-*/^()".contains(c) {
            out.push((i, Tok::Op(c)));
            i += 1;
        } else {
            return Err(Error::Syntax { offset: i, message: format!("unexpected character `{c}`") });
        }
    }
    Ok(out)
}

#[derive(Debug)]
enum Expr {
    Num(Rational),
    Ident(String, usize),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>, usize),
    Neg(Box<Expr>),
    Pow(Box<Expr>, i64, usize),
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

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Tok::Op(op)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn err<T>(&self, message: &str) -> Result<T> {
        Err(Error::Syntax { offset: self.offset(), message: message.to_string() })
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
            } else if self.peek() == Some(&Tok::Op('/')) {
                let at = self.offset();
                self.pos += 1;
                lhs = Expr::Div(Box::new(lhs), Box::new(self.unary()?), at);
            } else {
                return Ok(lhs);
            }
        }
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.eat('-') {
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let neg = self.eat('-');
        let at = self.offset();
        match self.peek() {
            Some(Tok::Num(n)) => {
                let Ok(k) = i64::try_from(n.clone()) else {
                    return self.err("exponent too large");
                };
                self.pos += 1;
                Ok(Expr::Pow(Box::new(base), if neg { -k } else { k }, at))
            }
            _ => self.err("expected integer exponent"),
        }
    }

    fn atom(&mut self) -> Result<Expr> {
        let at = self.offset();
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(Expr::Num(Rational::from_integer(n)))
            }
            Some(Tok::Ident(s)) => {
                self.pos += 1;
                Ok(Expr::Ident(s, at))
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return self.err("expected `)`");
                }
                Ok(e)
            }
            Some(_) => self.err("expected number, identifier or `(`"),
            None => self.err("unexpected end of input"),
        }
    }
}

fn parse_expr(src: &str) -> Result<Expr> {
    let mut p = Parser { toks: lex(src)?, pos: 0, end: src.len() };
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return p.err("unexpected token");
    }
    Ok(e)
}

/// Semantic target of the grammar.
trait Target {
    type V: Ring;
    fn num(&self, c: Rational) -> Self::V;
    fn ident(&self, name: &str, offset: usize) -> Result<Self::V>;
    fn div(&self, a: Self::V, b: Self::V, offset: usize) -> Result<Self::V>;
    fn pow(&self, a: Self::V, k: i64, offset: usize) -> Result<Self::V>;
}

fn eval<T: Target>(t: &T, e: &Expr) -> Result<T::V> {
    Ok(match e {
        Expr::Num(c) => t.num(c.clone()),
        Expr::Ident(s, o) => t.ident(s, *o)?,
        Expr::Add(a, b) => eval(t, a)?.add_ref(&eval(t, b)?),
        Expr::Sub(a, b) => eval(t, a)?.sub_ref(&eval(t, b)?),
        Expr::Mul(a, b) => eval(t, a)?.mul_ref(&eval(t, b)?),
        Expr::Div(a, b, o) => t.div(eval(t, a)?, eval(t, b)?, *o)?,
        Expr::Neg(a) => eval(t, a)?.neg_ref(),
        Expr::Pow(a, k, o) => t.pow(eval(t, a)?, *k, *o)?,
    })
}

fn repeat<V: Ring>(one: V, base: &V, k: u64) -> V {
    let mut acc = one;
    for _ in 0..k {
        acc = acc.mul_ref(base);
    }
    acc
}

struct PolyTarget<'a> {
    vars: &'a Vars,
    param: &'a str,
    order: usize,
}

impl PolyTarget<'_> {
    fn constant_of(&self, v: &Series<Polynomial>) -> Option<Rational> {
        let c0 = v.coeff(0);
        let rest_zero = v.coeffs()[1..].iter().all(Additive::vanishes);
        (rest_zero && c0.is_constant()).then(|| c0.constant_term())
    }
}

impl Target for PolyTarget<'_> {
    type V = Series<Polynomial>;

    fn num(&self, c: Rational) -> Self::V {
        Series::constant(self.param, self.order, Polynomial::constant(self.vars, c))
    }

    fn ident(&self, name: &str, _offset: usize) -> Result<Self::V> {
        if name == self.param {
            return Ok(Series::monomial(self.param, self.order, Polynomial::one(self.vars), 1));
        }
        let p = Polynomial::var_named(self.vars, name)?;
        Ok(Series::constant(self.param, self.order, p))
    }

    fn div(&self, a: Self::V, b: Self::V, offset: usize) -> Result<Self::V> {
        match self.constant_of(&b) {
            Some(c) if !c.is_zero() => Ok(a.scale(&c.recip())),
            _ => Err(Error::Division { offset }),
        }
    }

    fn pow(&self, a: Self::V, k: i64, offset: usize) -> Result<Self::V> {
        let one = self.num(Rational::one());
        if k >= 0 {
            return Ok(repeat(one, &a, k as u64));
        }
        match self.constant_of(&a) {
            Some(c) if !c.is_zero() => {
                let inv = self.num(c.recip());
                Ok(repeat(one, &inv, k.unsigned_abs()))
            }
            _ => Err(Error::Division { offset }),
        }
    }
}

/// Result of parsing polynomial text: a plain polynomial unless the
/// deformation parameter occurs.
#[derive(Clone, Debug, PartialEq)]
pub enum Parsed {
    Poly(Polynomial),
    Series(Series<Polynomial>),
}

impl Parsed {
    /// Promotes to a series of the given order.
    pub fn into_series(self, param: &str, order: usize) -> Series<Polynomial> {
        match self {
            Parsed::Poly(p) => Series::constant(param, order, p),
            Parsed::Series(s) => s.truncate(order),
        }
    }

    pub fn into_poly(self) -> Result<Polynomial> {
        match self {
            Parsed::Poly(p) => Ok(p),
            Parsed::Series(s) => {
                Err(Error::Invalid(format!("expected a polynomial, found a series in `{}`", s.param())))
            }
        }
    }
}

/// Parses polynomial text over `vars`; the reserved name `param` promotes
/// the result to a series truncated at `order`.
pub fn parse_poly(src: &str, vars: &Vars, param: &str, order: usize) -> Result<Parsed> {
    if vars.names().iter().any(|v| v == param) {
        return Err(Error::Invalid(format!("`{param}` is reserved for the deformation parameter")));
    }
    let e = parse_expr(src)?;
    let s = eval(&PolyTarget { vars, param, order }, &e)?;
    if s.coeffs()[1..].iter().all(Additive::vanishes) && !mentions(&e, param) {
        Ok(Parsed::Poly(s.coeff(0).clone()))
    } else {
        Ok(Parsed::Series(s))
    }
}

/// Parses a polynomial that must not involve any deformation parameter.
pub fn parse_polynomial(src: &str, vars: &Vars) -> Result<Polynomial> {
    parse_poly(src, vars, "nu", 0)?.into_poly()
}

fn mentions(e: &Expr, name: &str) -> bool {
    match e {
        Expr::Num(_) => false,
        Expr::Ident(s, _) => s == name,
        Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Div(a, b, _) => {
            mentions(a, name) || mentions(b, name)
        }
        Expr::Neg(a) | Expr::Pow(a, _, _) => mentions(a, name),
    }
}

struct QTarget;

impl Target for QTarget {
    type V = RationalFunction;

    fn num(&self, c: Rational) -> Self::V {
        RationalFunction::from_rational(c)
    }

    fn ident(&self, name: &str, _offset: usize) -> Result<Self::V> {
        if name == "q" {
            Ok(RationalFunction::q())
        } else {
            Err(Error::UnknownVariable(name.to_string()))
        }
    }

    fn div(&self, a: Self::V, b: Self::V, offset: usize) -> Result<Self::V> {
        a.div(&b).ok_or(Error::Division { offset })
    }

    fn pow(&self, a: Self::V, k: i64, offset: usize) -> Result<Self::V> {
        let k = i32::try_from(k).map_err(|_| Error::Syntax { offset, message: "exponent too large".into() })?;
        a.pow(k).ok_or(Error::Division { offset })
    }
}

/// Parses an element of ℚ(q), e.g. `q - 1/q`.
pub fn parse_ratfun(src: &str) -> Result<RationalFunction> {
    eval(&QTarget, &parse_expr(src)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::{int, rat};

    fn vars() -> Vars {
        Vars::new(["x1", "x2"])
    }

    #[test]
    fn canonical_forms() {
        let v = vars();
        let p = parse_polynomial("x2*x1 + 0*x1", &v).unwrap();
        assert_eq!(p.to_string(), "x1*x2");
        assert!(parse_polynomial("x1 - x1", &v).unwrap().is_zero());
        assert_eq!(parse_polynomial("2/4*x1^2", &v).unwrap().to_string(), "1/2*x1^2");
        let p = parse_polynomial("x1^2*x2 - 1/2", &v).unwrap();
        assert_eq!(p.len(), 2);
        assert_eq!(p.to_string(), "x1^2*x2 - 1/2");
    }

    #[test]
    fn parameter_promotes_to_series() {
        let v = vars();
        let Parsed::Series(s) = parse_poly("nu*(x1+x2)", &v, "nu", 4).unwrap() else {
            panic!("expected series");
        };
        assert!(s.coeff(0).is_zero());
        assert_eq!(s.to_string(), "x1*nu + x2*nu");
    }

    #[test]
    fn errors_carry_offsets() {
        let v = vars();
        match parse_polynomial("x1 +* x2", &v) {
            Err(Error::Syntax { offset, .. }) => assert_eq!(offset, 4),
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_polynomial("y + 1", &v), Err(Error::UnknownVariable(_))));
        assert!(matches!(parse_polynomial("x1/x2", &v), Err(Error::Division { offset: 2 })));
        assert!(matches!(parse_polynomial("(x1", &v), Err(Error::Syntax { offset: 3, .. })));
    }

    #[test]
    fn rational_functions() {
        let f = parse_ratfun("q - 1/q").unwrap();
        assert_eq!(f.eval(&int(2)), Some(rat(3, 2)));
        assert_eq!(parse_ratfun("q^-2*q^2").unwrap(), RationalFunction::one());
        assert!(parse_ratfun("1/(q-q)").is_err());
    }
}
