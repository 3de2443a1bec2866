//! Normal-ordered Weyl algebra over `ℚ[ν]` and the symmetric and standard
//! ordering maps from polynomial symbols.
//!
//! Words are `Q1^a1..Qℓ^aℓ P1^b1..Pℓ^bℓ`, stored as exponent vectors in the
//! same layout as the symbol variables `x1..x(2ℓ)`. The commutation rule is
//! `P_α Q_β = Q_β P_α + 2ν δ_αβ`.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use super::moyal::NU;
use crate::algebra::rational::{binomial, factorial, int};
use crate::algebra::ring::join_terms;
use crate::algebra::{Monomial, Polynomial, Rational, Series, Vars};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Scheme {
    Symmetric,
    Standard,
}

impl std::str::FromStr for Scheme {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "symmetric" | "sym" | "weyl" => Ok(Scheme::Symmetric),
            "standard" | "std" => Ok(Scheme::Standard),
            _ => Err(Error::Invalid(format!("unknown ordering scheme `{s}`"))),
        }
    }
}

/// Element of the Weyl algebra in normal order, exact in `ν`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderedOperator {
    ell: usize,
    /// `(power of ν, word) -> coefficient`
    terms: BTreeMap<(u32, Monomial), Rational>,
}

impl OrderedOperator {
    pub fn zero(ell: usize) -> Self {
        OrderedOperator { ell, terms: BTreeMap::new() }
    }

    pub fn identity(ell: usize) -> Self {
        Self::word(ell, Monomial::one(2 * ell), 0, Rational::one())
    }

    /// `c ν^k` times the normal word with exponents `w`.
    pub fn word(ell: usize, w: Monomial, k: u32, c: Rational) -> Self {
        assert_eq!(w.0.len(), 2 * ell, "word length");
        let mut out = Self::zero(ell);
        out.add_term(k, w, c);
        out
    }

    /// The generator `Q_α` (0-based `α`).
    pub fn q(ell: usize, alpha: usize) -> Self {
        Self::word(ell, Monomial::var(2 * ell, alpha), 0, Rational::one())
    }

    /// The generator `P_α` (0-based `α`).
    pub fn p(ell: usize, alpha: usize) -> Self {
        Self::word(ell, Monomial::var(2 * ell, ell + alpha), 0, Rational::one())
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, Monomial), &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, k: u32, w: &Monomial) -> Rational {
        self.terms.get(&(k, w.clone())).cloned().unwrap_or_else(Rational::zero)
    }

    fn add_term(&mut self, k: u32, w: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry((k, w)) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!(self.ell, o.ell, "operator dimension");
        let mut out = self.clone();
        for ((k, w), c) in &o.terms {
            out.add_term(*k, w.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero(self.ell);
        for ((k, w), x) in &self.terms {
            out.add_term(*k, w.clone(), x * c);
        }
        out
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(&-Rational::one()))
    }

    /// Multiplies by `ν^k`.
    pub fn shift_nu(&self, k: u32) -> Self {
        let mut out = Self::zero(self.ell);
        for ((j, w), c) in &self.terms {
            out.add_term(j + k, w.clone(), c.clone());
        }
        out
    }

    /// Operator composition `self ∘ o`, normal-ordered.
    pub fn compose(&self, o: &Self) -> Self {
        assert_eq!(self.ell, o.ell, "operator dimension");
        let mut out = Self::zero(self.ell);
        for ((k1, w1), c1) in &self.terms {
            for ((k2, w2), c2) in &o.terms {
                for (k, w, c) in compose_words(self.ell, w1, w2) {
                    out.add_term(k1 + k2 + k, w, c * c1 * c2);
                }
            }
        }
        out
    }

    /// Highest word in graded-lex order together with its `ν` power.
    fn leading(&self) -> Option<(&(u32, Monomial), &Rational)> {
        self.terms.iter().max_by(|a, b| a.0 .1.cmp(&b.0 .1).then(a.0 .0.cmp(&b.0 .0)))
    }
}

/// `(Q^a P^b)(Q^c P^d)` as `(ν power, word, coefficient)` triples, using
/// `P^b Q^c = Σ_k C(b,k) c!/(c-k)! (2ν)^k Q^{c-k} P^{b-k}` per index.
fn compose_words(ell: usize, w1: &Monomial, w2: &Monomial) -> Vec<(u32, Monomial, Rational)> {
    let mut acc = vec![(0u32, w1.mul(w2), Rational::one())];
    for alpha in 0..ell {
        let b = w1.0[ell + alpha];
        let c = w2.0[alpha];
        let mut next = Vec::new();
        for (k0, w, x) in &acc {
            for k in 0..=b.min(c) {
                let coef = binomial(b, k) * factorial(c) / factorial(c - k) * int(2).pow(k as i32);
                let mut w2 = w.clone();
                w2.0[alpha] -= k;
                w2.0[ell + alpha] -= k;
                next.push((k0 + k, w2, x * coef));
            }
        }
        acc = next;
    }
    acc
}

/// Sum over all arrangements of `a` letters `Q` and `b` letters `P` in one
/// index, normal-ordered, via the first-letter recursion.
fn arrangement_sum(a: u32, b: u32, memo: &mut BTreeMap<(u32, u32), OrderedOperator>) -> OrderedOperator {
    if let Some(x) = memo.get(&(a, b)) {
        return x.clone();
    }
    let out = if a == 0 && b == 0 {
        OrderedOperator::identity(1)
    } else {
        let mut s = OrderedOperator::zero(1);
        if a > 0 {
            s = s.add(&OrderedOperator::q(1, 0).compose(&arrangement_sum(a - 1, b, memo)));
        }
        if b > 0 {
            s = s.add(&OrderedOperator::p(1, 0).compose(&arrangement_sum(a, b - 1, memo)));
        }
        s
    };
    memo.insert((a, b), out.clone());
    out
}

/// Places a one-index operator at index `alpha` of an `ell`-index algebra.
fn lift(op: &OrderedOperator, ell: usize, alpha: usize) -> OrderedOperator {
    let mut out = OrderedOperator::zero(ell);
    for ((k, w), c) in &op.terms {
        let mut e = vec![0; 2 * ell];
        e[alpha] = w.0[0];
        e[ell + alpha] = w.0[1];
        out.add_term(*k, Monomial(e), c.clone());
    }
    out
}

fn quantize_monomial(ell: usize, m: &Monomial, scheme: Scheme) -> OrderedOperator {
    match scheme {
        Scheme::Standard => OrderedOperator::word(ell, m.clone(), 0, Rational::one()),
        Scheme::Symmetric => {
            let mut memo = BTreeMap::new();
            let mut out = OrderedOperator::identity(ell);
            for alpha in 0..ell {
                let (a, b) = (m.0[alpha], m.0[ell + alpha]);
                let s = arrangement_sum(a, b, &mut memo).scale(&binomial(a + b, a).recip());
                out = out.compose(&lift(&s, ell, alpha));
            }
            out
        }
    }
}

fn ell_of(vars: &Vars) -> Result<usize> {
    if vars.len() % 2 != 0 || vars.is_empty() {
        return Err(Error::Dimension(format!("need an even number of variables, got {}", vars.len())));
    }
    Ok(vars.len() / 2)
}

/// `Ω(u)`: symmetrization of each monomial's word, or the direct Q-left
/// normal order.
pub fn order_quantize(u: &Polynomial, scheme: Scheme) -> Result<OrderedOperator> {
    let ell = ell_of(u.vars())?;
    let mut out = OrderedOperator::zero(ell);
    for (m, c) in u.terms() {
        out = out.add(&quantize_monomial(ell, m, scheme).scale(c));
    }
    Ok(out)
}

/// `Ω` extended `ν`-linearly to a series of symbols.
pub fn order_quantize_series(s: &Series<Polynomial>, scheme: Scheme) -> Result<OrderedOperator> {
    let ell = ell_of(s.coeff(0).vars())?;
    let mut out = OrderedOperator::zero(ell);
    for (k, c) in s.coeffs().iter().enumerate() {
        out = out.add(&order_quantize(c, scheme)?.shift_nu(k as u32));
    }
    Ok(out)
}

/// Inverse of [`order_quantize`], as a series in `ν` truncated at `order`.
pub fn operator_symbol(a: &OrderedOperator, scheme: Scheme, order: usize) -> Series<Polynomial> {
    let vars = Vars::indexed("x", 2 * a.ell);
    let zero = Polynomial::zero(&vars);
    let mut coeffs = vec![zero.clone(); order + 1];
    let mut rest = a.clone();
    while let Some(((k, w), c)) = rest.leading().map(|(kw, c)| (kw.clone(), c.clone())) {
        if (k as usize) <= order {
            coeffs[k as usize].add_term(w.clone(), c.clone());
        }
        let image = quantize_monomial(a.ell, &w, scheme).shift_nu(k).scale(&c);
        rest = rest.sub(&image);
    }
    Series::new(NU, order, &zero, coeffs)
}

impl fmt::Display for OrderedOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut names: Vec<String> = (1..=self.ell).map(|i| format!("Q{i}")).collect();
        names.extend((1..=self.ell).map(|i| format!("P{i}")));
        let vars = Vars::new(names);
        let mut by_power: BTreeMap<u32, Vec<(&Monomial, &Rational)>> = BTreeMap::new();
        for ((k, w), c) in &self.terms {
            by_power.entry(*k).or_default().push((w, c));
        }
        let mut terms = Vec::new();
        for (k, ws) in by_power {
            let nu = match k {
                0 => String::new(),
                1 => NU.to_string(),
                _ => format!("{NU}^{k}"),
            };
            for (w, c) in ws.into_iter().rev() {
                let word = w.render(&vars);
                let text = match (word.is_empty(), nu.is_empty()) {
                    (true, _) => nu.clone(),
                    (false, true) => word,
                    (false, false) => format!("{word}*{nu}"),
                };
                terms.push((c.clone(), text));
            }
        }
        f.write_str(&join_terms(&terms))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polynomial;

    fn p1(src: &str) -> Polynomial {
        parse_polynomial(src, &Vars::indexed("x", 2)).unwrap()
    }

    #[test]
    fn commutation_rule() {
        let pq = OrderedOperator::p(1, 0).compose(&OrderedOperator::q(1, 0));
        assert_eq!(pq.to_string(), "Q1*P1 + 2*nu");
        let qp = OrderedOperator::q(1, 0).compose(&OrderedOperator::p(1, 0));
        assert_eq!(qp.to_string(), "Q1*P1");
    }

    #[test]
    fn quantize_examples() {
        let qp = p1("x1*x2");
        assert_eq!(order_quantize(&qp, Scheme::Symmetric).unwrap().to_string(), "Q1*P1 + nu");
        assert_eq!(order_quantize(&qp, Scheme::Standard).unwrap().to_string(), "Q1*P1");
        assert_eq!(order_quantize(&p1("1"), Scheme::Symmetric).unwrap(), OrderedOperator::identity(1));
    }

    #[test]
    fn symbol_examples() {
        let qp = OrderedOperator::q(1, 0).compose(&OrderedOperator::p(1, 0));
        assert_eq!(operator_symbol(&qp, Scheme::Standard, 4).to_string(), "x1*x2");
        assert_eq!(operator_symbol(&qp, Scheme::Symmetric, 4).to_string(), "x1*x2 - nu");
        let u = p1("x1^2*x2^2 - 3*x1*x2^3 + 1/2*x2");
        for s in [Scheme::Symmetric, Scheme::Standard] {
            let back = operator_symbol(&order_quantize(&u, s).unwrap(), s, 4);
            assert_eq!(back, Series::constant(NU, 4, u.clone()));
        }
    }
}
