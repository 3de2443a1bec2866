//! Multivariate polynomials with exact rational coefficients.
//!
//! Terms are kept in a `BTreeMap` keyed by [`Monomial`], whose ordering is
//! graded lexicographic with respect to the declared variable order. The map
//! never stores a zero coefficient, so structural equality is equality of
//! polynomials.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Zero};

use super::rational::{int, Rational};
use super::ring::{join_terms, Additive, RenderTerms, Ring};
use crate::error::{Error, Result};

/// An ordered list of variable names shared between polynomials.
#[derive(Clone, Debug, Eq)]
pub struct Vars(Arc<Vec<String>>);

impl PartialEq for Vars {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl Vars {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Self {
        Vars(Arc::new(names.into_iter().map(Into::into).collect()))
    }

    /// `prefix1 .. prefixN`
    pub fn indexed(prefix: &str, n: usize) -> Self {
        Vars::new((1..=n).map(|i| format!("{prefix}{i}")))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.0
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }

    pub fn name(&self, i: usize) -> &str {
        &self.0[i]
    }
}

/// Exponent vector. Ordered by total degree, then lexicographically with the
/// first variable most significant.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn render(&self, vars: &Vars) -> String {
        let mut parts = Vec::new();
        for (i, &e) in self.0.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(vars.name(i).to_string()),
                _ => parts.push(format!("{}^{}", vars.name(i), e)),
            }
        }
        parts.join("*")
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// All exponent vectors in `nvars` variables of total degree exactly `d`.
pub fn monomials_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
    fn rec(nvars: usize, d: u32, prefix: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if prefix.len() + 1 == nvars {
            prefix.push(d);
            out.push(Monomial(prefix.clone()));
            prefix.pop();
            return;
        }
        for e in (0..=d).rev() {
            prefix.push(e);
            rec(nvars, d - e, prefix, out);
            prefix.pop();
        }
    }
    if nvars == 0 {
        return if d == 0 { vec![Monomial(vec![])] } else { vec![] };
    }
    let mut out = Vec::new();
    rec(nvars, d, &mut Vec::with_capacity(nvars), &mut out);
    out
}

/// All exponent vectors of total degree `<= d`, ascending graded-lex.
pub fn monomials_up_to(nvars: usize, d: u32) -> Vec<Monomial> {
    let mut out: Vec<Monomial> = (0..=d).flat_map(|k| monomials_of_degree(nvars, k)).collect();
    out.sort();
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    vars: Vars,
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero(vars: &Vars) -> Self {
        Polynomial { vars: vars.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(vars: &Vars, c: Rational) -> Self {
        let mut p = Polynomial::zero(vars);
        p.add_term(Monomial::one(vars.len()), c);
        p
    }

    pub fn one(vars: &Vars) -> Self {
        Polynomial::constant(vars, Rational::one())
    }

    pub fn var(vars: &Vars, i: usize) -> Self {
        Polynomial::monomial(vars, Monomial::var(vars.len(), i), Rational::one())
    }

    pub fn var_named(vars: &Vars, name: &str) -> Result<Self> {
        Ok(Polynomial::var(vars, vars.index_of(name)?))
    }

    pub fn monomial(vars: &Vars, m: Monomial, c: Rational) -> Self {
        assert_eq!(m.0.len(), vars.len(), "monomial arity");
        let mut p = Polynomial::zero(vars);
        p.add_term(m, c);
        p
    }

    /// Canonical form of a raw list of `(exponents, coefficient)` terms.
    pub fn from_terms(vars: &Vars, terms: impl IntoIterator<Item = (Vec<u32>, Rational)>) -> Self {
        let mut p = Polynomial::zero(vars);
        for (e, c) in terms {
            assert_eq!(e.len(), vars.len(), "monomial arity");
            p.add_term(Monomial(e), c);
        }
        p
    }

    /// Canonical form of terms written as `(coefficient, [(variable, power)])`.
    /// Repeated variables inside one term multiply.
    pub fn from_named_terms(vars: &Vars, terms: &[(Rational, Vec<(&str, u32)>)]) -> Result<Self> {
        let mut p = Polynomial::zero(vars);
        for (c, factors) in terms {
            let mut e = vec![0u32; vars.len()];
            for (name, pow) in factors {
                e[vars.index_of(name)?] += pow;
            }
            p.add_term(Monomial(e), c.clone());
        }
        Ok(p)
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(&Monomial::one(self.nvars()))
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(Monomial::degree)
    }

    pub fn is_constant(&self) -> bool {
        self.degree().map_or(true, |d| d == 0)
    }

    pub fn leading(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    fn check_vars(&self, other: &Polynomial) {
        assert!(
            self.vars == other.vars,
            "polynomial variable sets differ: {:?} vs {:?}",
            self.vars.names(),
            other.vars.names()
        );
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial> {
        if self.vars != other.vars {
            return Err(mismatch(&self.vars, &other.vars));
        }
        Ok(self.add_ref(other))
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        if self.vars != other.vars {
            return Err(mismatch(&self.vars, &other.vars));
        }
        Ok(self.mul_ref(other))
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut acc = Polynomial::one(&self.vars);
        for _ in 0..k {
            acc = acc.mul_ref(self);
        }
        acc
    }

    /// Formal partial derivative in the `i`-th variable.
    pub fn derive(&self, i: usize) -> Polynomial {
        let mut out = Polynomial::zero(&self.vars);
        for (m, c) in &self.terms {
            let e = m.0[i];
            if e == 0 {
                continue;
            }
            let mut m2 = m.clone();
            m2.0[i] -= 1;
            out.add_term(m2, c * int(e as i64));
        }
        out
    }

    pub fn derive_named(&self, name: &str) -> Result<Polynomial> {
        Ok(self.derive(self.vars.index_of(name)?))
    }

    /// Iterated partial derivative `∂^{k_1}_1 ... ∂^{k_n}_n`.
    pub fn derive_multi(&self, orders: &[u32]) -> Polynomial {
        let mut out = Polynomial::zero(&self.vars);
        'terms: for (m, c) in &self.terms {
            let mut m2 = m.clone();
            let mut coeff = c.clone();
            for (i, &k) in orders.iter().enumerate() {
                let e = m.0[i];
                if k > e {
                    continue 'terms;
                }
                for j in 0..k {
                    coeff *= int((e - j) as i64);
                }
                m2.0[i] = e - k;
            }
            out.add_term(m2, coeff);
        }
        out
    }

    /// Same exponent data re-labelled with another variable list of equal
    /// length.
    pub fn relabel(&self, vars: &Vars) -> Polynomial {
        assert_eq!(vars.len(), self.vars.len(), "relabel arity");
        Polynomial { vars: vars.clone(), terms: self.terms.clone() }
    }

    /// Embeds into a larger variable list; `map[i]` is the target index of
    /// variable `i`.
    pub fn embed(&self, vars: &Vars, map: &[usize]) -> Polynomial {
        let mut out = Polynomial::zero(vars);
        for (m, c) in &self.terms {
            let mut e = vec![0u32; vars.len()];
            for (i, &x) in m.0.iter().enumerate() {
                e[map[i]] += x;
            }
            out.add_term(Monomial(e), c.clone());
        }
        out
    }

    /// Substitutes polynomials (all over the same target variables) for each
    /// variable.
    pub fn substitute(&self, images: &[Polynomial]) -> Polynomial {
        assert_eq!(images.len(), self.nvars());
        let target = images
            .first()
            .map(|p| p.vars.clone())
            .unwrap_or_else(|| self.vars.clone());
        let mut out = Polynomial::zero(&target);
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(&target, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    t = t.mul_ref(&images[i].pow(e));
                }
            }
            out = out.add_ref(&t);
        }
        out
    }

    pub fn map_coeffs(&self, f: impl Fn(&Rational) -> Rational) -> Polynomial {
        let mut out = Polynomial::zero(&self.vars);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), f(c));
        }
        out
    }
}

fn mismatch(a: &Vars, b: &Vars) -> Error {
    Error::VariableMismatch { left: a.names().join(","), right: b.names().join(",") }
}

impl Additive for Polynomial {
    fn zero_like(&self) -> Self {
        Polynomial::zero(&self.vars)
    }
    fn vanishes(&self) -> bool {
        self.terms.is_empty()
    }
    fn add_ref(&self, other: &Self) -> Self {
        self.check_vars(other);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
    fn neg_ref(&self) -> Self {
        self.map_coeffs(|c| -c)
    }
    fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return self.zero_like();
        }
        self.map_coeffs(|x| x * c)
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self.check_vars(other);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Ring for Polynomial {
    fn mul_ref(&self, other: &Self) -> Self {
        self.check_vars(other);
        let mut out = Polynomial::zero(&self.vars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

impl RenderTerms for Polynomial {
    fn render_terms(&self) -> Vec<(Rational, String)> {
        self.terms
            .iter()
            .rev()
            .map(|(m, c)| (c.clone(), m.render(&self.vars)))
            .collect()
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&join_terms(&self.render_terms()))
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $impl_fn:ident) => {
        impl $tr<&Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                self.$impl_fn(rhs)
            }
        }
        impl $tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$impl_fn(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, add_ref);
forward_binop!(Sub, sub, sub_ref);
forward_binop!(Mul, mul, mul_ref);

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.neg_ref()
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.neg_ref()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::rat;

    fn xy() -> Vars {
        Vars::new(["x1", "x2"])
    }

    #[test]
    fn normal_form_examples() {
        let v = xy();
        // x2*x1 + 0*x1
        let p = Polynomial::from_named_terms(
            &v,
            &[(int(1), vec![("x2", 1), ("x1", 1)]), (int(0), vec![("x1", 1)])],
        )
        .unwrap();
        assert_eq!(p.len(), 1);
        assert_eq!(p.to_string(), "x1*x2");

        let p = Polynomial::from_named_terms(&v, &[(int(1), vec![("x1", 1)]), (int(-1), vec![("x1", 1)])])
            .unwrap();
        assert!(p.is_zero());
        assert_eq!(p.to_string(), "0");

        let p = Polynomial::from_named_terms(&v, &[(rat(2, 4), vec![("x1", 2)])]).unwrap();
        assert_eq!(p.to_string(), "1/2*x1^2");
    }

    #[test]
    fn unknown_variable() {
        let err = Polynomial::from_named_terms(&xy(), &[(int(1), vec![("y", 1)])]).unwrap_err();
        assert_eq!(err, Error::UnknownVariable("y".into()));
        assert!(Polynomial::one(&xy()).derive_named("z").is_err());
    }

    #[test]
    fn graded_lex_rendering() {
        let v = xy();
        let x1 = Polynomial::var(&v, 0);
        let x2 = Polynomial::var(&v, 1);
        let p = &(&x2 * &x2) + &(&(&x1 * &x2) + &x1) - Polynomial::constant(&v, rat(1, 2));
        assert_eq!(p.to_string(), "x1*x2 + x2^2 + x1 - 1/2");
        let q = &(&x1 * &x1) * &x2;
        assert_eq!(q.to_string(), "x1^2*x2");
    }

    #[test]
    fn derivative_examples() {
        let v = xy();
        let x1 = Polynomial::var(&v, 0);
        let x2 = Polynomial::var(&v, 1);
        let p = &(&x1 * &x1) * &x2;
        assert_eq!(p.derive(0), (&x1 * &x2).scale(&int(2)));
        assert!(Polynomial::constant(&v, int(5)).derive(0).is_zero());
        let c = x1.pow(3);
        assert_eq!(c.derive(0).derive(0), x1.scale(&int(6)));
        assert_eq!(c.derive_multi(&[2, 0]), x1.scale(&int(6)));
    }

    #[test]
    fn monomial_enumeration() {
        assert_eq!(monomials_of_degree(2, 3).len(), 4);
        assert_eq!(monomials_up_to(4, 4).len(), 70);
        let ms = monomials_up_to(2, 2);
        assert!(ms.windows(2).all(|w| w[0] < w[1]));
    }
}
