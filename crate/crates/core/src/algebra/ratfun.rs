//! Univariate polynomials over ℚ and the field ℚ(q) of rational functions.

use std::fmt;

use num_traits::{One, Zero};

use super::rational::Rational;
use super::ring::{join_terms, Additive, Ring};

/// Dense univariate polynomial, lowest coefficient first, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UniPoly(Vec<Rational>);

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly(coeffs)
    }

    pub fn zero() -> Self {
        UniPoly(Vec::new())
    }

    pub fn constant(c: Rational) -> Self {
        UniPoly::new(vec![c])
    }

    /// `c * q^k`
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut v = vec![Rational::zero(); k];
        v.push(c);
        UniPoly::new(v)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.0
    }

    pub fn lead(&self) -> Rational {
        self.0.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.0.len().max(o.0.len());
        let z = Rational::zero();
        UniPoly::new(
            (0..n)
                .map(|i| self.0.get(i).unwrap_or(&z) + o.0.get(i).unwrap_or(&z))
                .collect(),
        )
    }

    pub fn neg(&self) -> Self {
        UniPoly(self.0.iter().map(|c| -c).collect())
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(out)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        UniPoly::new(self.0.iter().map(|x| x * c).collect())
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let dd = d.0.len() - 1;
        let lead = d.lead();
        let mut rem = self.0.clone();
        if rem.len() <= dd {
            return (UniPoly::zero(), self.clone());
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] / &lead;
            if c.is_zero() {
                continue;
            }
            for (j, dj) in d.0.iter().enumerate() {
                rem[k + j] -= &c * dj;
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (UniPoly::new(quot), UniPoly::new(rem))
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&self.lead().recip())
    }

    /// Monic greatest common divisor (zero only when both inputs are zero).
    pub fn gcd(&self, o: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.0.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    fn render_terms(&self, var: &str) -> Vec<(Rational, String)> {
        self.0
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| {
                let m = match k {
                    0 => String::new(),
                    1 => var.to_string(),
                    _ => format!("{var}^{k}"),
                };
                (c.clone(), m)
            })
            .collect()
    }

    pub fn render(&self, var: &str) -> String {
        join_terms(&self.render_terms(var))
    }
}

/// Element of ℚ(q): reduced fraction with monic denominator.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: UniPoly,
    den: UniPoly,
}

impl RationalFunction {
    pub fn new(num: UniPoly, den: UniPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return RationalFunction::zero();
        }
        let g = num.gcd(&den);
        let num = num.div_rem(&g).0;
        let den = den.div_rem(&g).0;
        let lead = den.lead().recip();
        RationalFunction { num: num.scale(&lead), den: den.scale(&lead) }
    }

    pub fn zero() -> Self {
        RationalFunction { num: UniPoly::zero(), den: UniPoly::constant(Rational::one()) }
    }

    pub fn one() -> Self {
        RationalFunction::from_rational(Rational::one())
    }

    pub fn from_rational(c: Rational) -> Self {
        RationalFunction { num: UniPoly::constant(c), den: UniPoly::constant(Rational::one()) }
    }

    /// The indeterminate `q`.
    pub fn q() -> Self {
        RationalFunction::from_poly(UniPoly::monomial(Rational::one(), 1))
    }

    pub fn from_poly(p: UniPoly) -> Self {
        RationalFunction { num: p, den: UniPoly::constant(Rational::one()) }
    }

    /// `q^k` for any integer `k`.
    pub fn q_pow(k: i32) -> Self {
        let m = UniPoly::monomial(Rational::one(), k.unsigned_abs() as usize);
        if k >= 0 {
            RationalFunction::from_poly(m)
        } else {
            RationalFunction::new(UniPoly::constant(Rational::one()), m)
        }
    }

    pub fn numer(&self) -> &UniPoly {
        &self.num
    }

    pub fn denom(&self) -> &UniPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num == self.den
    }

    pub fn as_rational(&self) -> Option<Rational> {
        match (self.num.degree(), self.den.degree()) {
            (None, _) => Some(Rational::zero()),
            (Some(0), Some(0)) => Some(self.num.lead() / self.den.lead()),
            _ => None,
        }
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(RationalFunction::new(self.den.clone(), self.num.clone()))
        }
    }

    pub fn div(&self, o: &Self) -> Option<Self> {
        o.inv().map(|i| self.mul_ref(&i))
    }

    pub fn pow(&self, k: i32) -> Option<Self> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let mut acc = RationalFunction::one();
        for _ in 0..k.unsigned_abs() {
            acc = acc.mul_ref(&base);
        }
        Some(acc)
    }

    /// Value at a rational point, if the denominator does not vanish there.
    pub fn eval(&self, x: &Rational) -> Option<Rational> {
        let d = self.den.eval(x);
        if d.is_zero() {
            None
        } else {
            Some(self.num.eval(x) / d)
        }
    }
}

impl Additive for RationalFunction {
    fn zero_like(&self) -> Self {
        RationalFunction::zero()
    }
    fn vanishes(&self) -> bool {
        self.num.is_zero()
    }
    fn add_ref(&self, o: &Self) -> Self {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den == o.den {
            return RationalFunction::new(self.num.add(&o.num), self.den.clone());
        }
        RationalFunction::new(
            self.num.mul(&o.den).add(&o.num.mul(&self.den)),
            self.den.mul(&o.den),
        )
    }
    fn neg_ref(&self) -> Self {
        RationalFunction { num: self.num.neg(), den: self.den.clone() }
    }
    fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return RationalFunction::zero();
        }
        RationalFunction { num: self.num.scale(c), den: self.den.clone() }
    }
}

impl Ring for RationalFunction {
    fn mul_ref(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return RationalFunction::zero();
        }
        RationalFunction::new(self.num.mul(&o.num), self.den.mul(&o.den))
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.degree() == Some(0) {
            return f.write_str(&self.num.render("q"));
        }
        let n = self.num.render("q");
        let d = self.den.render("q");
        let n = if self.num.render_terms("q").len() > 1 { format!("({n})") } else { n };
        write!(f, "{n}/({d})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::{int, rat};

    fn p(cs: &[i64]) -> UniPoly {
        UniPoly::new(cs.iter().map(|&c| int(c)).collect())
    }

    #[test]
    fn gcd_and_division() {
        // (q-1)(q+2) and (q-1)(q-3)
        let a = p(&[-1, 1]).mul(&p(&[2, 1]));
        let b = p(&[-1, 1]).mul(&p(&[-3, 1]));
        assert_eq!(a.gcd(&b), p(&[-1, 1]));
        let (qt, r) = a.div_rem(&p(&[-1, 1]));
        assert_eq!(qt, p(&[2, 1]));
        assert!(r.is_zero());
    }

    #[test]
    fn reduced_form() {
        let f = RationalFunction::new(p(&[-1, 0, 1]), p(&[-2, 2]));
        // (q^2-1)/(2q-2) = (q+1)/2
        assert_eq!(f, RationalFunction::from_poly(p(&[1, 1]).scale(&rat(1, 2))));
        let q = RationalFunction::q();
        let qi = RationalFunction::q_pow(-1);
        assert!(q.mul_ref(&qi).is_one());
        let diff = q.sub_ref(&qi);
        assert_eq!(diff.to_string(), "(q^2 - 1)/(q)");
        assert_eq!(diff.eval(&int(2)), Some(rat(3, 2)));
    }

    #[test]
    fn field_inverse() {
        let f = RationalFunction::new(p(&[1, 1]), p(&[0, 0, 3]));
        let g = f.inv().unwrap();
        assert!(f.mul_ref(&g).is_one());
        assert!(RationalFunction::zero().inv().is_none());
    }
}
