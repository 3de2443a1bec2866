use std::fmt::Debug;

use num_traits::Zero;

use super::rational::Rational;

/// A module over the rationals whose zero may depend on context (variable
/// set, tensor arity), so zeros are produced from an existing value.
pub trait Additive: Clone + PartialEq + Debug {
    fn zero_like(&self) -> Self;
    fn vanishes(&self) -> bool;
    fn add_ref(&self, other: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    fn scale(&self, c: &Rational) -> Self;

    fn sub_ref(&self, other: &Self) -> Self {
        self.add_ref(&other.neg_ref())
    }
}

/// An associative algebra over the rationals.
pub trait Ring: Additive {
    fn mul_ref(&self, other: &Self) -> Self;
}

/// Flattens an element into signed terms `(coefficient, monomial text)`
/// where an empty monomial text means the constant term.
pub trait RenderTerms {
    fn render_terms(&self) -> Vec<(Rational, String)>;
}

impl Additive for Rational {
    fn zero_like(&self) -> Self {
        Rational::zero()
    }
    fn vanishes(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn scale(&self, c: &Rational) -> Self {
        self * c
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
}

impl Ring for Rational {
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
}

impl RenderTerms for Rational {
    fn render_terms(&self) -> Vec<(Rational, String)> {
        if Zero::is_zero(self) {
            Vec::new()
        } else {
            vec![(self.clone(), String::new())]
        }
    }
}

/// Joins signed terms into `a - b + 1/2*c` form; empty input renders `0`.
pub fn join_terms(terms: &[(Rational, String)]) -> String {
    use num_traits::{One, Signed};
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (c, m)) in terms.iter().enumerate() {
        let neg = c.is_negative();
        let mag = c.abs();
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if m.is_empty() {
            out.push_str(&mag.to_string());
        } else if mag.is_one() {
            out.push_str(m);
        } else {
            out.push_str(&mag.to_string());
            out.push('*');
            out.push_str(m);
        }
    }
    out
}
