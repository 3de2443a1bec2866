//! Enveloping algebras in PBW normal form, truncated in the parameter `t`.
//!
//! In [`Mode::Deformed`] the algebra is `U_t g = Tg/<xy - yx - t[x,y]>`; in
//! [`Mode::Classical`] it is `U g [[t]]` with `xy - yx = [x,y]`, where `t`
//! only enters through the coefficients (as for twists).

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex};

use num_traits::{One, Zero};
use rand::Rng;

use super::lie::LieAlgebra;
use crate::algebra::rational::binomial;
use crate::algebra::ring::join_terms;
use crate::algebra::{Additive, Monomial, Rational, Series, TensorElement};
use crate::error::{Error, Result};

/// Name of the deformation parameter of enveloping algebras.
pub const T: &str = "t";

/// A PBW monomial `X_1^{e_1} .. X_n^{e_n}`.
pub type Pbw = Monomial;

/// Element of `U^{⊗k}` as a series in `t`; arity 1 is a plain element.
pub type UElement = Series<TensorElement<Pbw>>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Deformed,
    Classical,
}

pub(crate) type Terms = Arc<Vec<(u32, Monomial, Rational)>>;

/// Chooses which out-of-order adjacent pair to rewrite next.
pub enum Chooser<'a> {
    Leftmost,
    Random(&'a mut dyn rand::RngCore),
}

/// Multiplication context for `U_t g` or `U g[[t]]` at a fixed order.
pub struct UEnv {
    lie: Arc<LieAlgebra>,
    mode: Mode,
    order: usize,
    left: Mutex<HashMap<(usize, Monomial), Terms>>,
    prod: Mutex<HashMap<(Monomial, Monomial), Terms>>,
}

impl UEnv {
    pub fn new(lie: LieAlgebra, mode: Mode, order: usize) -> Self {
        UEnv {
            lie: Arc::new(lie),
            mode,
            order,
            left: Mutex::new(HashMap::new()),
            prod: Mutex::new(HashMap::new()),
        }
    }

    pub fn lie(&self) -> &LieAlgebra {
        &self.lie
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn order(&self) -> usize {
        self.order
    }

    fn n(&self) -> usize {
        self.lie.dim()
    }

    /// `t`-power carried by one commutator step.
    fn step(&self) -> u32 {
        match self.mode {
            Mode::Deformed => 1,
            Mode::Classical => 0,
        }
    }

    pub fn zero(&self, arity: usize) -> UElement {
        Series::zero(T, self.order, &TensorElement::zero(arity))
    }

    /// `1⊗..⊗1`.
    pub fn one(&self, arity: usize) -> UElement {
        let w = vec![Monomial::one(self.n()); arity];
        Series::constant(T, self.order, TensorElement::basis(w))
    }

    /// `c t^k` times the tensor of the given PBW monomials.
    pub fn term(&self, words: Vec<Pbw>, c: Rational, k: usize) -> UElement {
        let arity = words.len();
        let mut te = TensorElement::zero(arity);
        te.add_term(words, c);
        Series::monomial(T, self.order, te, k)
    }

    pub fn pbw(&self, m: Pbw) -> UElement {
        self.term(vec![m], Rational::one(), 0)
    }

    /// The generator `X_i`.
    pub fn generator(&self, i: usize) -> UElement {
        self.pbw(Monomial::var(self.n(), i))
    }

    pub fn generator_named(&self, name: &str) -> Result<UElement> {
        Ok(self.generator(self.lie.index_of(name)?))
    }

    fn element_of(&self, terms: &[(u32, Monomial, Rational)]) -> UElement {
        let mut coeffs = vec![TensorElement::zero(1); self.order + 1];
        for (k, m, c) in terms {
            if (*k as usize) <= self.order {
                coeffs[*k as usize].add_term(vec![m.clone()], c.clone());
            }
        }
        Series::new(T, self.order, &TensorElement::zero(1), coeffs)
    }

    /// `X_i · m` in normal form.
    fn left_gen(&self, i: usize, m: &Monomial) -> Terms {
        let key = (i, m.clone());
        if let Some(t) = self.left.lock().expect("cache").get(&key) {
            return t.clone();
        }
        let first = m.0.iter().position(|&e| e > 0);
        let out = match first {
            Some(j) if j < i => {
                let mut rest = m.clone();
                rest.0[j] -= 1;
                let mut acc: BTreeMap<(u32, Monomial), Rational> = BTreeMap::new();
                // X_j (X_i m')
                for (k, w, c) in self.left_gen(i, &rest).iter() {
                    for (k2, w2, c2) in self.left_gen(j, w).iter() {
                        push(&mut acc, k + k2, w2.clone(), c * c2, self.order);
                    }
                }
                // + s [X_i, X_j] m'
                let s = self.step();
                for (l, cl) in self.lie.bracket(i, j) {
                    for (k, w, c) in self.left_gen(l, &rest).iter() {
                        push(&mut acc, k + s, w.clone(), &cl * c, self.order);
                    }
                }
                acc.into_iter().map(|((k, w), c)| (k, w, c)).collect()
            }
            _ => {
                let mut w = m.clone();
                w.0[i] += 1;
                vec![(0, w, Rational::one())]
            }
        };
        let out = Arc::new(out);
        self.left.lock().expect("cache").insert(key, out.clone());
        out
    }

    /// Product of two PBW monomials.
    pub(crate) fn mono_mul(&self, a: &Monomial, b: &Monomial) -> Terms {
        if a.is_one() {
            return Arc::new(vec![(0, b.clone(), Rational::one())]);
        }
        let key = (a.clone(), b.clone());
        if let Some(t) = self.prod.lock().expect("cache").get(&key) {
            return t.clone();
        }
        let mut cur: Vec<(u32, Monomial, Rational)> = vec![(0, b.clone(), Rational::one())];
        for (i, &e) in a.0.iter().enumerate().rev() {
            for _ in 0..e {
                let mut acc = BTreeMap::new();
                for (k, w, c) in &cur {
                    for (k2, w2, c2) in self.left_gen(i, w).iter() {
                        push(&mut acc, k + k2, w2.clone(), c * c2, self.order);
                    }
                }
                cur = acc.into_iter().map(|((k, w), c)| (k, w, c)).collect();
            }
        }
        let out = Arc::new(cur);
        self.prod.lock().expect("cache").insert(key, out.clone());
        out
    }

    /// Product in `U^{⊗k}` (componentwise), truncated at the order.
    pub fn mul(&self, x: &UElement, y: &UElement) -> UElement {
        let arity = x.coeff(0).arity();
        assert_eq!(arity, y.coeff(0).arity(), "tensor arity mismatch in product");
        let n = self.order;
        let mut coeffs = vec![TensorElement::zero(arity); n + 1];
        for (i, xi) in x.coeffs().iter().enumerate() {
            if xi.is_empty() {
                continue;
            }
            for (j, yj) in y.coeffs().iter().enumerate().take(n + 1 - i) {
                for (u, cu) in xi.terms() {
                    for (v, cv) in yj.terms() {
                        let budget = (n - i - j) as u32;
                        let mut partial: Vec<(u32, Vec<Monomial>, Rational)> = vec![(0, Vec::new(), cu * cv)];
                        for c in 0..arity {
                            let prod = self.mono_mul(&u[c], &v[c]);
                            let mut next = Vec::new();
                            for (k, ws, x) in &partial {
                                for (k2, w, c2) in prod.iter() {
                                    if k + k2 > budget {
                                        continue;
                                    }
                                    let mut ws2 = ws.clone();
                                    ws2.push(w.clone());
                                    next.push((k + k2, ws2, x * c2));
                                }
                            }
                            partial = next;
                        }
                        for (k, ws, c) in partial {
                            coeffs[i + j + k as usize].add_term(ws, c);
                        }
                    }
                }
            }
        }
        Series::new(T, n, &TensorElement::zero(arity), coeffs)
    }

    /// `x ⊗ y`, arities add.
    pub fn tensor(&self, x: &UElement, y: &UElement) -> UElement {
        let z = TensorElement::zero(x.coeff(0).arity() + y.coeff(0).arity());
        x.bilinear(y, &z, |a, b, r| Series::constant(T, r, a.tensor(b)))
    }

    /// Reorders tensor legs (see [`TensorElement::permute`]).
    pub fn permute(&self, x: &UElement, perm: &[usize]) -> UElement {
        x.map(|c| c.permute(perm))
    }

    /// Places a 2-tensor on legs `(a, b)` of a `k`-fold tensor, with `1`
    /// on the other legs.
    pub fn place(&self, x: &UElement, a: usize, b: usize, k: usize) -> UElement {
        let one = Monomial::one(self.n());
        x.map(|c| {
            let mut out = TensorElement::zero(k);
            for (w, coef) in c.terms() {
                let mut parts = vec![one.clone(); k];
                parts[a] = w[0].clone();
                parts[b] = w[1].clone();
                out.add_term(parts, coef.clone());
            }
            out
        })
    }

    /// `Δ` applied to leg `pos`; arity grows by one.
    pub fn coproduct_at(&self, x: &UElement, pos: usize) -> UElement {
        let arity = x.coeff(0).arity();
        x.map(|c| if c.is_empty() { TensorElement::zero(arity + 1) } else { c.map_factor(pos, delta_monomial) })
    }

    /// `Δ(x)` for a plain element.
    pub fn coproduct(&self, x: &UElement) -> UElement {
        self.coproduct_at(x, 0)
    }

    /// `ε` applied to leg `pos` of a tensor of arity at least 2.
    pub fn counit_at(&self, x: &UElement, pos: usize) -> UElement {
        let arity = x.coeff(0).arity();
        assert!(arity >= 2, "counit_at needs arity >= 2");
        x.map(|c| {
            let mut out = TensorElement::zero(arity - 1);
            for (w, coef) in c.terms() {
                if w[pos].is_one() {
                    let mut parts = w.clone();
                    parts.remove(pos);
                    out.add_term(parts, coef.clone());
                }
            }
            out
        })
    }

    /// `ε(x)` for a plain element.
    pub fn counit(&self, x: &UElement) -> Series<Rational> {
        let one = Monomial::one(self.n());
        x.map(|c| c.coeff(std::slice::from_ref(&one)))
    }

    /// `S` on a PBW monomial: `(-1)^d X_n^{e_n} .. X_1^{e_1}`.
    pub fn antipode_monomial(&self, m: &Monomial) -> UElement {
        let mut cur: Vec<(u32, Monomial, Rational)> = vec![(0, Monomial::one(self.n()), Rational::one())];
        // build the reversed word from its right end, which is X_1^{e_1}
        for (i, &e) in m.0.iter().enumerate() {
            for _ in 0..e {
                let mut acc = BTreeMap::new();
                for (k, w, c) in &cur {
                    for (k2, w2, c2) in self.left_gen(i, w).iter() {
                        push(&mut acc, k + k2, w2.clone(), c * c2, self.order);
                    }
                }
                cur = acc.into_iter().map(|((k, w), c)| (k, w, c)).collect();
            }
        }
        let sign = if m.degree() % 2 == 0 { Rational::one() } else { -Rational::one() };
        self.element_of(&cur).scale(&sign)
    }

    /// `S(x)` for a plain element.
    pub fn antipode(&self, x: &UElement) -> UElement {
        self.apply_linear(x, |m| self.antipode_monomial(m))
    }

    /// Extends a map on PBW monomials (of arity-1 series) linearly and
    /// `t`-linearly to a plain element.
    pub fn apply_linear(&self, x: &UElement, f: impl Fn(&Monomial) -> UElement) -> UElement {
        let mut acc = self.zero(1);
        for (k, c) in x.coeffs().iter().enumerate() {
            for (w, coef) in c.terms() {
                acc = acc.add_ref(&f(&w[0]).scale(coef).shift(k));
            }
        }
        acc
    }

    /// Multiplication map `μ: U⊗U -> U`.
    pub fn multiply_legs(&self, x: &UElement) -> UElement {
        assert_eq!(x.coeff(0).arity(), 2, "multiplication needs a 2-tensor");
        let mut acc = self.zero(1);
        for (k, c) in x.coeffs().iter().enumerate() {
            for (w, coef) in c.terms() {
                let p = self.element_of(&self.mono_mul(&w[0], &w[1]));
                acc = acc.add_ref(&p.scale(coef).shift(k));
            }
        }
        acc
    }

    /// Inverse of an element with constant term `1⊗..⊗1`, by the
    /// geometric series.
    pub fn inverse(&self, x: &UElement) -> Result<UElement> {
        let arity = x.coeff(0).arity();
        let one = self.one(arity);
        if x.coeff(0) != one.coeff(0) {
            return Err(Error::NotInvertible("constant term is not 1".into()));
        }
        let g = x.sub_ref(&one).neg_ref();
        let mut acc = one.clone();
        let mut pw = one;
        for _ in 0..self.order {
            pw = self.mul(&pw, &g);
            acc = acc.add_ref(&pw);
        }
        Ok(acc)
    }

    /// `exp(x)` for `x` without constant term.
    pub fn exp(&self, x: &UElement) -> Result<UElement> {
        if !x.coeff(0).is_empty() {
            return Err(Error::Invalid("exp needs an argument without constant term".into()));
        }
        let arity = x.coeff(0).arity();
        let mut acc = self.one(arity);
        let mut pw = self.one(arity);
        for k in 1..=self.order {
            pw = self.mul(&pw, x).scale(&Rational::from_integer(k.into()).recip());
            acc = acc.add_ref(&pw);
        }
        Ok(acc)
    }

    /// `log(1 + x)` for `x` without constant term.
    pub fn log1p(&self, x: &UElement) -> Result<UElement> {
        if !x.coeff(0).is_empty() {
            return Err(Error::Invalid("log needs an argument without constant term".into()));
        }
        let arity = x.coeff(0).arity();
        let mut acc = self.zero(arity);
        let mut pw = self.one(arity);
        for k in 1..=self.order {
            pw = self.mul(&pw, x);
            let c = Rational::from_integer(if k % 2 == 1 { 1 } else { -1 }.into()) / Rational::from_integer(k.into());
            acc = acc.add_ref(&pw.scale(&c));
        }
        Ok(acc)
    }

    /// Text rendering, legs joined by `⊗`.
    pub fn render(&self, x: &UElement) -> String {
        let arity = x.coeff(0).arity();
        let mut terms = Vec::new();
        for (k, c) in x.coeffs().iter().enumerate() {
            let tp = match k {
                0 => String::new(),
                1 => T.to_string(),
                _ => format!("{T}^{k}"),
            };
            for (w, coef) in c.terms().collect::<Vec<_>>().into_iter().rev() {
                let legs: Vec<String> = w
                    .iter()
                    .map(|m| if m.is_one() { "1".to_string() } else { m.render(self.lie.basis()) })
                    .collect();
                let body = if arity == 1 && w[0].is_one() { String::new() } else { legs.join("⊗") };
                let text = match (body.is_empty(), tp.is_empty()) {
                    (true, _) => tp.clone(),
                    (false, true) => body,
                    (false, false) => format!("{body}*{tp}"),
                };
                terms.push((coef.clone(), text));
            }
        }
        join_terms(&terms)
    }
}

fn push(acc: &mut BTreeMap<(u32, Monomial), Rational>, k: u32, w: Monomial, c: Rational, order: usize) {
    if k as usize > order || c.is_zero() {
        return;
    }
    let e = acc.entry((k, w)).or_insert_with(Rational::zero);
    *e += c;
}

/// `Δ(X^e) = Σ_{k ≤ e} Π C(e_i, k_i) X^k ⊗ X^{e-k}` (primitive generators).
pub fn delta_monomial(m: &Monomial) -> TensorElement<Monomial> {
    let mut out = TensorElement::zero(2);
    let mut ks: Vec<Vec<u32>> = vec![Vec::new()];
    for &e in &m.0 {
        ks = ks.into_iter().flat_map(|k| (0..=e).map(move |x| [k.clone(), vec![x]].concat())).collect();
    }
    for k in ks {
        let mut c = Rational::one();
        let rest: Vec<u32> = m.0.iter().zip(&k).map(|(e, x)| e - x).collect();
        for (e, x) in m.0.iter().zip(&k) {
            c *= binomial(*e, *x);
        }
        out.add_term(vec![Monomial(k), Monomial(rest)], c);
    }
    out
}

/// Normal form of a generator word by repeated rewriting
/// `X_j X_i -> X_i X_j + s[X_j, X_i]` for `j > i`.
pub fn pbw_normal_form(env: &UEnv, word: &[usize], chooser: Chooser<'_>) -> UElement {
    let mut rng = chooser;
    let n = env.n();
    let s = env.step();
    let mut pending: BTreeMap<(u32, Vec<usize>), Rational> = BTreeMap::new();
    pending.insert((0, word.to_vec()), Rational::one());
    let mut done: Vec<(u32, Monomial, Rational)> = Vec::new();
    while let Some(((k, w), c)) = pending.pop_first() {
        if c.is_zero() {
            continue;
        }
        let descents: Vec<usize> = (0..w.len().saturating_sub(1)).filter(|&p| w[p] > w[p + 1]).collect();
        if descents.is_empty() {
            let mut e = vec![0u32; n];
            for &g in &w {
                e[g] += 1;
            }
            done.push((k, Monomial(e), c));
            continue;
        }
        let p = match &mut rng {
            Chooser::Leftmost => descents[0],
            Chooser::Random(r) => descents[r.gen_range(0..descents.len())],
        };
        let mut swapped = w.clone();
        swapped.swap(p, p + 1);
        *pending.entry((k, swapped)).or_insert_with(Rational::zero) += &c;
        if (k + s) as usize <= env.order() {
            for (l, cl) in env.lie().bracket(w[p], w[p + 1]) {
                let mut nw = w[..p].to_vec();
                nw.push(l);
                nw.extend_from_slice(&w[p + 2..]);
                *pending.entry((k + s, nw)).or_insert_with(Rational::zero) += &c * cl;
            }
        }
    }
    env.element_of(&done)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::int;

    fn sl2() -> LieAlgebra {
        LieAlgebra::new(
            "sl2",
            &["H", "E", "F"],
            &[("H", "E", &[("E", int(2))]), ("H", "F", &[("F", int(-2))]), ("E", "F", &[("H", int(1))])],
        )
        .unwrap()
    }

    #[test]
    fn pbw_examples() {
        let u = UEnv::new(sl2(), Mode::Deformed, 4);
        let (h, e, f) = (u.generator(0), u.generator(1), u.generator(2));
        assert_eq!(u.render(&u.mul(&f, &e)), "E*F - H*t");
        assert_eq!(u.render(&u.mul(&e, &h)), "H*E - 2*E*t");
        assert_eq!(u.mul(&h, &u.one(1)), h);
        assert_eq!(u.render(&pbw_normal_form(&u, &[2, 1], Chooser::Leftmost)), "E*F - H*t");
    }

    #[test]
    fn coproduct_examples() {
        let u = UEnv::new(sl2(), Mode::Deformed, 4);
        let e = u.generator(1);
        assert_eq!(u.render(&u.coproduct(&u.one(1))), "1⊗1");
        assert_eq!(u.render(&u.coproduct(&e)), "E⊗1 + 1⊗E");
        let e2 = u.mul(&e, &e);
        assert_eq!(u.render(&u.coproduct(&e2)), "E^2⊗1 + 2*E⊗E + 1⊗E^2");
    }

    #[test]
    fn antipode_examples() {
        let u = UEnv::new(sl2(), Mode::Deformed, 4);
        assert_eq!(u.antipode(&u.one(1)), u.one(1));
        let e = u.generator(1);
        assert_eq!(u.antipode(&e), e.neg_ref());
        let ef = u.mul(&e, &u.generator(2));
        assert_eq!(u.render(&u.antipode(&ef)), "E*F - H*t");
    }

    #[test]
    fn inverse_exp_log() {
        let u = UEnv::new(sl2(), Mode::Classical, 3);
        let x = u.tensor(&u.generator(0), &u.generator(1)).shift(1);
        let f = u.exp(&x).unwrap();
        let fi = u.inverse(&f).unwrap();
        assert_eq!(u.mul(&f, &fi), u.one(2));
        let y = u.generator(1).shift(1);
        assert_eq!(u.exp(&u.log1p(&y).unwrap()).unwrap(), u.one(1).add_ref(&y));
    }
}
