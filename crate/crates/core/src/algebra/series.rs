//! Formal power series in one deformation parameter, truncated at a fixed
//! order `N`: coefficients of `param^0 ..= param^N` are stored, every product
//! discards higher powers.

use std::fmt;
use std::sync::Arc;

use super::rational::Rational;
use super::ring::{join_terms, Additive, RenderTerms, Ring};
use crate::error::{Error, Result};

/// Default truncation order for deformed products.
pub const DEFAULT_ORDER: usize = 8;

#[derive(Clone, Debug, PartialEq)]
pub struct Series<C> {
    param: Arc<str>,
    coeffs: Vec<C>,
}

impl<C: Additive> Series<C> {
    /// Series with given coefficients; missing ones are zero, extra ones
    /// beyond `order` are discarded. `zero` fixes the coefficient context.
    pub fn new(param: &str, order: usize, zero: &C, mut coeffs: Vec<C>) -> Self {
        coeffs.truncate(order + 1);
        while coeffs.len() < order + 1 {
            coeffs.push(zero.zero_like());
        }
        Series { param: Arc::from(param), coeffs }
    }

    pub fn zero(param: &str, order: usize, zero: &C) -> Self {
        Series::new(param, order, zero, Vec::new())
    }

    /// The constant series `c`.
    pub fn constant(param: &str, order: usize, c: C) -> Self {
        let z = c.zero_like();
        Series::new(param, order, &z, vec![c])
    }

    /// `c * param^k`.
    pub fn monomial(param: &str, order: usize, c: C, k: usize) -> Self {
        let z = c.zero_like();
        let mut coeffs = vec![z.clone(); k];
        coeffs.push(c);
        Series::new(param, order, &z, coeffs)
    }

    pub fn param(&self) -> &str {
        &self.param
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &C {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<C> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Additive::vanishes)
    }

    /// Lowest power with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.vanishes())
    }

    pub fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.param != other.param {
            return Err(Error::SeriesMismatch(format!(
                "parameter `{}` vs `{}`",
                self.param, other.param
            )));
        }
        if self.order() != other.order() {
            return Err(Error::SeriesMismatch(format!(
                "truncation order {} vs {}",
                self.order(),
                other.order()
            )));
        }
        Ok(())
    }

    /// Discards powers above `order` (or pads with zeros when raising it).
    pub fn truncate(&self, order: usize) -> Self {
        let z = self.coeffs[0].zero_like();
        Series::new(&self.param, order, &z, self.coeffs.clone())
    }

    pub fn with_param(&self, param: &str) -> Self {
        Series { param: Arc::from(param), coeffs: self.coeffs.clone() }
    }

    pub fn map<D: Additive>(&self, f: impl Fn(&C) -> D) -> Series<D> {
        Series { param: self.param.clone(), coeffs: self.coeffs.iter().map(f).collect() }
    }

    /// Multiplies the coefficient of `param^k` by `c^k`, i.e. substitutes
    /// `param -> c * param`.
    pub fn rescale_param(&self, c: &Rational) -> Self {
        let mut f = super::rational::one();
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for x in &self.coeffs {
            coeffs.push(x.scale(&f));
            f *= c;
        }
        Series { param: self.param.clone(), coeffs }
    }

    /// Multiplies by `param^k`, dropping overflow.
    pub fn shift(&self, k: usize) -> Self {
        let z = self.coeffs[0].zero_like();
        let mut coeffs = vec![z.clone(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Series::new(&self.param, self.order(), &z, coeffs)
    }

    /// Divides by `param^k`; fails unless the low coefficients vanish.
    /// The result keeps the same order with zero top coefficients.
    pub fn unshift(&self, k: usize) -> Result<Self> {
        if self.coeffs.iter().take(k).any(|c| !c.vanishes()) {
            return Err(Error::Invalid(format!("series not divisible by {}^{k}", self.param)));
        }
        let z = self.coeffs[0].zero_like();
        Ok(Series::new(&self.param, self.order(), &z, self.coeffs[k.min(self.coeffs.len())..].to_vec()))
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        Ok(self.add_ref(other))
    }
}

impl<C: Ring> Series<C> {
    /// Truncated Cauchy product.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        Ok(self.mul_ref(other))
    }
}

impl<C: Additive> Series<C> {

    /// Applies a bilinear map coefficientwise and collects the Cauchy
    /// product, truncated at this series' order. `f` receives the order
    /// still available for its own output.
    pub fn bilinear<D: Additive>(
        &self,
        other: &Self,
        zero: &D,
        f: impl Fn(&C, &C, usize) -> Series<D>,
    ) -> Series<D> {
        self.try_bilinear(other, zero, |a, b, r| Ok(f(a, b, r))).expect("infallible")
    }

    pub fn try_bilinear<D: Additive>(
        &self,
        other: &Self,
        zero: &D,
        f: impl Fn(&C, &C, usize) -> Result<Series<D>>,
    ) -> Result<Series<D>> {
        let n = self.order();
        let mut acc = Series::zero(&self.param, n, zero);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.vanishes() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(n + 1 - i) {
                if b.vanishes() {
                    continue;
                }
                let part = f(a, b, n - i - j)?.truncate(n).shift(i + j);
                acc = acc.add_ref(&part);
            }
        }
        Ok(acc)
    }
}

impl<C: Additive> Additive for Series<C> {
    fn zero_like(&self) -> Self {
        Series::zero(&self.param, self.order(), &self.coeffs[0])
    }
    fn vanishes(&self) -> bool {
        Series::is_zero(self)
    }
    fn add_ref(&self, other: &Self) -> Self {
        assert!(self.check_compatible(other).is_ok(), "series mismatch in add");
        Series {
            param: self.param.clone(),
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.add_ref(b)).collect(),
        }
    }
    fn neg_ref(&self) -> Self {
        self.map(Additive::neg_ref)
    }
    fn scale(&self, c: &Rational) -> Self {
        self.map(|x| x.scale(c))
    }
    fn sub_ref(&self, other: &Self) -> Self {
        assert!(self.check_compatible(other).is_ok(), "series mismatch in sub");
        Series {
            param: self.param.clone(),
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.sub_ref(b)).collect(),
        }
    }
}

impl<C: Ring> Ring for Series<C> {
    fn mul_ref(&self, other: &Self) -> Self {
        assert!(self.check_compatible(other).is_ok(), "series mismatch in mul");
        let n = self.order();
        let z = self.coeffs[0].zero_like();
        let mut coeffs = vec![z; n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.vanishes() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(n + 1 - i) {
                if b.vanishes() {
                    continue;
                }
                coeffs[i + j] = coeffs[i + j].add_ref(&a.mul_ref(b));
            }
        }
        Series { param: self.param.clone(), coeffs }
    }
}

impl<C: Additive + RenderTerms> RenderTerms for Series<C> {
    fn render_terms(&self) -> Vec<(Rational, String)> {
        let mut out = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            let p = match k {
                0 => String::new(),
                1 => self.param.to_string(),
                _ => format!("{}^{}", self.param, k),
            };
            for (coef, m) in c.render_terms() {
                let mono = match (m.is_empty(), p.is_empty()) {
                    (true, _) => p.clone(),
                    (false, true) => m,
                    (false, false) => format!("{m}*{p}"),
                };
                out.push((coef, mono));
            }
        }
        out
    }
}

impl<C: Additive + RenderTerms> fmt::Display for Series<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&join_terms(&self.render_terms()))
    }
}

/// Truncated Cauchy product of two series.
pub fn series_mul<C: Ring>(a: &Series<C>, b: &Series<C>) -> Result<Series<C>> {
    a.try_mul(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::poly::{Polynomial, Vars};
    use crate::algebra::rational::int;

    fn s(order: usize, cs: &[i64]) -> Series<Rational> {
        Series::new("nu", order, &int(0), cs.iter().map(|&c| int(c)).collect())
    }

    #[test]
    fn product_examples() {
        assert_eq!(series_mul(&s(2, &[1, 1]), &s(2, &[1, -1])).unwrap(), s(2, &[1, 0, -1]));
        // nu^N * nu vanishes at order N
        let n = 3;
        assert!(series_mul(&s(n, &[0, 0, 0, 1]), &s(n, &[0, 1])).unwrap().is_zero());
        assert_eq!(s(2, &[1, 0, -1]).to_string(), "1 - nu^2");
    }

    #[test]
    fn polynomial_coefficients() {
        let v = Vars::new(["x1", "x2"]);
        let x1 = Polynomial::var(&v, 0);
        let x2 = Polynomial::var(&v, 1);
        let one = Polynomial::one(&v);
        let a = Series::new("nu", 2, &one, vec![one.clone(), x1.clone()]);
        let b = Series::new("nu", 2, &one, vec![one.clone(), x2.clone()]);
        let ab = series_mul(&a, &b).unwrap();
        let expect = Series::new("nu", 2, &one, vec![one.clone(), &x1 + &x2, &x1 * &x2]);
        assert_eq!(ab, expect);
        assert_eq!(ab.to_string(), "1 + x1*nu + x2*nu + x1*x2*nu^2");
    }

    #[test]
    fn mismatches_are_errors() {
        let a = s(2, &[1]);
        let b = Series::new("t", 2, &int(0), vec![int(1)]);
        assert!(series_mul(&a, &b).is_err());
        assert!(series_mul(&a, &s(3, &[1])).is_err());
    }

    #[test]
    fn shifting() {
        let a = s(3, &[1, 2]);
        assert_eq!(a.shift(2), s(3, &[0, 0, 1, 2]));
        assert_eq!(a.shift(2).unshift(2).unwrap(), s(3, &[1, 2]));
        assert!(a.unshift(1).is_err());
        assert_eq!(a.rescale_param(&int(-2)), s(3, &[1, -4]));
    }
}
