//! Elements of a tensor power `A^{⊗k}` written in a product basis.
//!
//! A basis word of `A` is any ordered type `W`; a term is a `k`-tuple of
//! words with a nonzero rational coefficient. Terms are merged and sorted
//! component-wise, so equality is structural.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use num_traits::Zero;

use super::rational::Rational;
use super::ring::Additive;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorElement<W: Ord> {
    arity: usize,
    terms: BTreeMap<Vec<W>, Rational>,
}

impl<W: Ord + Clone + std::fmt::Debug> TensorElement<W> {
    pub fn zero(arity: usize) -> Self {
        assert!(arity >= 1, "tensor arity must be positive");
        TensorElement { arity, terms: BTreeMap::new() }
    }

    pub fn basis(parts: Vec<W>) -> Self {
        let mut t = TensorElement::zero(parts.len());
        t.add_term(parts, Rational::from_integer(1.into()));
        t
    }

    pub fn from_terms(arity: usize, terms: impl IntoIterator<Item = (Vec<W>, Rational)>) -> Self {
        let mut t = TensorElement::zero(arity);
        for (w, c) in terms {
            t.add_term(w, c);
        }
        t
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn add_term(&mut self, parts: Vec<W>, c: Rational) {
        assert_eq!(parts.len(), self.arity, "tensor arity");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(parts) {
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

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<W>, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, parts: &[W]) -> Rational {
        self.terms.get(parts).cloned().unwrap_or_else(Rational::zero)
    }

    /// `self ⊗ other` (concatenation of tuples).
    pub fn tensor(&self, other: &Self) -> Self {
        let mut out = TensorElement::zero(self.arity + other.arity);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let mut parts = a.clone();
                parts.extend(b.iter().cloned());
                out.add_term(parts, ca * cb);
            }
        }
        out
    }

    /// Reorders tensor factors: factor `i` of the result is factor `perm[i]`
    /// of `self`.
    pub fn permute(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.arity);
        let mut out = TensorElement::zero(self.arity);
        for (w, c) in &self.terms {
            out.add_term(perm.iter().map(|&p| w[p].clone()).collect(), c.clone());
        }
        out
    }

    /// The flip `σ` on a 2-tensor.
    pub fn flip(&self) -> Self {
        assert_eq!(self.arity, 2, "flip needs arity 2");
        self.permute(&[1, 0])
    }

    /// Applies a linear map to factor `pos`; the map sends a word to a tensor
    /// of arity `m`, so the arity grows by `m - 1`.
    pub fn map_factor(&self, pos: usize, f: impl Fn(&W) -> TensorElement<W>) -> TensorElement<W> {
        let mut out: Option<TensorElement<W>> = None;
        for (w, c) in &self.terms {
            let img = f(&w[pos]);
            let acc = out.get_or_insert_with(|| TensorElement::zero(self.arity - 1 + img.arity));
            for (v, cv) in &img.terms {
                let mut parts: Vec<W> = w[..pos].to_vec();
                parts.extend(v.iter().cloned());
                parts.extend(w[pos + 1..].iter().cloned());
                acc.add_term(parts, c * cv);
            }
        }
        out.unwrap_or_else(|| TensorElement::zero(self.arity))
    }

    pub fn map_coeffs(&self, f: impl Fn(&Rational) -> Rational) -> Self {
        let mut out = TensorElement::zero(self.arity);
        for (w, c) in &self.terms {
            out.add_term(w.clone(), f(c));
        }
        out
    }
}

impl<W: Ord + Clone + std::fmt::Debug> Additive for TensorElement<W> {
    fn zero_like(&self) -> Self {
        TensorElement::zero(self.arity)
    }
    fn vanishes(&self) -> bool {
        self.terms.is_empty()
    }
    fn add_ref(&self, other: &Self) -> Self {
        assert_eq!(self.arity, other.arity, "tensor arity mismatch");
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
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
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::int;
    use proptest::prelude::*;

    fn elem(terms: &[(u8, u8, i64)]) -> TensorElement<u8> {
        TensorElement::from_terms(2, terms.iter().map(|&(a, b, c)| (vec![a, b], int(c))))
    }

    #[test]
    fn merge_and_drop_zero() {
        let t = elem(&[(1, 0, 2), (0, 1, 3), (1, 0, -2)]);
        assert_eq!(t.len(), 1);
        assert_eq!(t.coeff(&[0, 1]), int(3));
        assert_eq!(t.flip().coeff(&[1, 0]), int(3));
    }

    #[test]
    fn tensor_product_concatenates() {
        let a = TensorElement::basis(vec![1u8]);
        let b = elem(&[(2, 3, 5)]);
        let ab = a.tensor(&b);
        assert_eq!(ab.arity(), 3);
        assert_eq!(ab.coeff(&[1, 2, 3]), int(5));
    }

    proptest! {
        #[test]
        fn canonicalization_is_linear(
            xs in proptest::collection::vec((0u8..3, 0u8..3, -3i64..4), 0..8),
            ys in proptest::collection::vec((0u8..3, 0u8..3, -3i64..4), 0..8),
            k in -3i64..4,
        ) {
            let x = elem(&xs);
            let y = elem(&ys);
            let mut all = xs.clone();
            all.extend(ys.iter().copied());
            prop_assert_eq!(x.add_ref(&y), elem(&all));
            // re-canonicalizing a canonical element changes nothing
            let again = TensorElement::from_terms(2, x.terms().map(|(w, c)| (w.clone(), c.clone())));
            prop_assert_eq!(&again, &x);
            let scaled: Vec<_> = xs.iter().map(|&(a, b, c)| (a, b, c * k)).collect();
            prop_assert_eq!(x.scale(&int(k)), elem(&scaled));
        }
    }
}
