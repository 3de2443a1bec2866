use std::collections::HashMap;
use std::sync::Mutex;

use num_traits::{One, Signed};

use super::group::{apply_field, GroupModel};
use crate::algebra::ring::join_terms;
use crate::algebra::{Additive, Monomial, Polynomial, Rational, Ring, Series, TensorElement};
use crate::error::{Error, Result};
use crate::hopf::{delta_monomial, Mode, UElement, UEnv, T};

/// `Σ f ⊗ a` as a series in `t`: leg 0 is a coordinate monomial, leg 1 a
/// PBW monomial.
pub type SmashElement = Series<TensorElement<Monomial>>;

/// Actions `X ⇀ f = t(λ-1) X^→ f` and `f ↼ X = tλ X^← f` of `U_t g` on
/// polynomial functions on `G`.
pub struct Bimodule {
    group: GroupModel,
    lambda: Rational,
    env: UEnv,
    left_cache: Mutex<HashMap<(Monomial, Monomial), Polynomial>>,
    right_cache: Mutex<HashMap<(Monomial, Monomial), Polynomial>>,
}

impl Bimodule {
    pub fn new(group: GroupModel, lambda: Rational, order: usize) -> Result<Self> {
        if lambda.is_negative() || lambda > Rational::one() {
            return Err(Error::Invalid(format!("lambda = {lambda} is outside [0, 1]")));
        }
        let env = UEnv::new(group.lie().clone(), Mode::Deformed, order);
        Ok(Bimodule {
            group,
            lambda,
            env,
            left_cache: Mutex::new(HashMap::new()),
            right_cache: Mutex::new(HashMap::new()),
        })
    }

    pub fn group(&self) -> &GroupModel {
        &self.group
    }

    pub fn lambda(&self) -> &Rational {
        &self.lambda
    }

    pub fn order(&self) -> usize {
        self.env.order()
    }

    pub fn env(&self) -> &UEnv {
        &self.env
    }

    fn coord_poly(&self, m: &Monomial) -> Polynomial {
        Polynomial::monomial(self.group.coords(), m.clone(), Rational::one())
    }

    /// `a ⇀ x^m` divided by `t^{|a|}`; the fields of the last generator act
    /// first.
    fn left_mono(&self, a: &Monomial, m: &Monomial) -> Polynomial {
        let key = (a.clone(), m.clone());
        if let Some(p) = self.left_cache.lock().expect("cache").get(&key) {
            return p.clone();
        }
        let mut f = self.coord_poly(m);
        let w = &self.lambda - Rational::one();
        for (i, &e) in a.0.iter().enumerate().rev() {
            for _ in 0..e {
                f = apply_field(self.group.left_field(i), &f).scale(&w);
            }
        }
        self.left_cache.lock().expect("cache").insert(key, f.clone());
        f
    }

    /// `x^m ↼ a` divided by `t^{|a|}`; the fields of the first generator act
    /// first.
    fn right_mono(&self, m: &Monomial, a: &Monomial) -> Polynomial {
        let key = (m.clone(), a.clone());
        if let Some(p) = self.right_cache.lock().expect("cache").get(&key) {
            return p.clone();
        }
        let mut f = self.coord_poly(m);
        for (i, &e) in a.0.iter().enumerate() {
            for _ in 0..e {
                f = apply_field(self.group.right_field(i), &f).scale(&self.lambda);
            }
        }
        self.right_cache.lock().expect("cache").insert(key, f.clone());
        f
    }

    fn check_coords(&self, f: &Polynomial) -> Result<()> {
        if f.vars() != self.group.coords() {
            return Err(Error::VariableMismatch {
                left: f.vars().names().join(","),
                right: self.group.coords().names().join(","),
            });
        }
        Ok(())
    }

    fn act(&self, a: &UElement, f: &Polynomial, mono: impl Fn(&Monomial, &Monomial) -> Polynomial) -> Result<Series<Polynomial>> {
        self.check_coords(f)?;
        let zero = Polynomial::zero(self.group.coords());
        let n = self.order();
        let mut coeffs = vec![zero.clone(); n + 1];
        for (k, c) in a.coeffs().iter().enumerate() {
            for (w, ca) in c.terms() {
                let k2 = k + w[0].degree() as usize;
                if k2 > n {
                    continue;
                }
                for (m, cf) in f.terms() {
                    coeffs[k2] = coeffs[k2].add_ref(&mono(&w[0], m).scale(&(ca * cf)));
                }
            }
        }
        Ok(Series::new(T, n, &zero, coeffs))
    }

    /// `a ⇀ f`.
    pub fn act_left(&self, a: &UElement, f: &Polynomial) -> Result<Series<Polynomial>> {
        self.act(a, f, |w, m| self.left_mono(w, m))
    }

    /// `f ↼ a`.
    pub fn act_right(&self, f: &Polynomial, a: &UElement) -> Result<Series<Polynomial>> {
        self.act(a, f, |w, m| self.right_mono(m, w))
    }

    /// `f ⊗ a`.
    pub fn element(&self, f: &Polynomial, a: &UElement) -> Result<SmashElement> {
        self.check_coords(f)?;
        let n = self.order();
        let mut coeffs = vec![TensorElement::zero(2); n + 1];
        for (k, c) in a.coeffs().iter().enumerate() {
            for (w, ca) in c.terms() {
                for (m, cf) in f.terms() {
                    coeffs[k].add_term(vec![m.clone(), w[0].clone()], ca * cf);
                }
            }
        }
        Ok(Series::new(T, n, &TensorElement::zero(2), coeffs))
    }

    fn product(&self, u: &SmashElement, v: &SmashElement, two_sided: bool) -> SmashElement {
        let n = self.order();
        let mut coeffs = vec![TensorElement::zero(2); n + 1];
        let unit = Monomial::one(self.group.lie().dim());
        for (i, x) in u.coeffs().iter().enumerate() {
            for (j, y) in v.coeffs().iter().enumerate().take(n + 1 - i) {
                for (fa, cu) in x.terms() {
                    let da = delta_monomial(&fa[1]);
                    for (gb, cv) in y.terms() {
                        let db = if two_sided {
                            delta_monomial(&gb[1])
                        } else {
                            TensorElement::from_terms(2, [(vec![unit.clone(), gb[1].clone()], Rational::one())])
                        };
                        for (a12, ca) in da.terms() {
                            let ka = i + j + a12[0].degree() as usize;
                            if ka > n {
                                continue;
                            }
                            let left = self.left_mono(&a12[0], &gb[0]);
                            for (b12, cb) in db.terms() {
                                let kb = ka + b12[0].degree() as usize;
                                if kb > n || left.is_zero() {
                                    continue;
                                }
                                let right = self.right_mono(&fa[0], &b12[0]);
                                if right.is_zero() {
                                    continue;
                                }
                                let coef = cu * cv * ca * cb;
                                let fg = right.mul_ref(&left);
                                for (k, w, cw) in self.env.mono_mul(&a12[1], &b12[1]).iter() {
                                    let kk = kb + *k as usize;
                                    if kk > n {
                                        continue;
                                    }
                                    for (m, cm) in fg.terms() {
                                        coeffs[kk].add_term(vec![m.clone(), w.clone()], &coef * cw * cm);
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        Series::new(T, n, &TensorElement::zero(2), coeffs)
    }

    /// `(f⊗a)⋆(g⊗b) = Σ (f↼b₍₁₎)(a₍₁₎⇀g) ⊗ a₍₂₎b₍₂₎`.
    pub fn lr_smash_mul(&self, u: &SmashElement, v: &SmashElement) -> SmashElement {
        self.product(u, v, true)
    }

    /// `(f⊗a)·(g⊗b) = Σ f(a₍₁₎⇀g) ⊗ a₍₂₎b`.
    pub fn smash_mul(&self, u: &SmashElement, v: &SmashElement) -> SmashElement {
        self.product(u, v, false)
    }

    /// Splits a phase-space polynomial into `Σ f ⊗ p^e` with momenta in
    /// PBW order.
    pub fn from_phase_space(&self, u: &Polynomial) -> Result<SmashElement> {
        let phase = self.group.phase_space();
        if u.vars() != &phase {
            return Err(Error::VariableMismatch { left: u.vars().names().join(","), right: phase.names().join(",") });
        }
        let nc = self.group.coords().len();
        let mut te = TensorElement::zero(2);
        for (m, c) in u.terms() {
            te.add_term(vec![Monomial(m.0[..nc].to_vec()), Monomial(m.0[nc..].to_vec())], c.clone());
        }
        Ok(Series::constant(T, self.order(), te))
    }

    pub fn to_phase_space(&self, x: &SmashElement) -> Series<Polynomial> {
        let phase = self.group.phase_space();
        x.map(|c| {
            let mut p = Polynomial::zero(&phase);
            for (w, coef) in c.terms() {
                p.add_term(Monomial([w[0].0.clone(), w[1].0.clone()].concat()), coef.clone());
            }
            p
        })
    }

    /// `u ⋆_λ v` on `T*G`, as a series in `t`.
    pub fn lambda_star(&self, u: &Polynomial, v: &Polynomial) -> Result<Series<Polynomial>> {
        let (a, b) = (self.from_phase_space(u)?, self.from_phase_space(v)?);
        Ok(self.to_phase_space(&self.lr_smash_mul(&a, &b)))
    }

    pub fn render(&self, x: &SmashElement) -> String {
        let mut terms = Vec::new();
        for (k, c) in x.coeffs().iter().enumerate() {
            for (w, coef) in c.terms().collect::<Vec<_>>().into_iter().rev() {
                let f = if w[0].is_one() { "1".to_string() } else { w[0].render(self.group.coords()) };
                let a = if w[1].is_one() { "1".to_string() } else { w[1].render(self.group.lie().basis()) };
                let tp = match k {
                    0 => String::new(),
                    1 => "*t".to_string(),
                    _ => format!("*t^{k}"),
                };
                terms.push((coef.clone(), format!("{f}⊗{a}{tp}")));
            }
        }
        join_terms(&terms)
    }
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::rat;
    use crate::parse::parse_polynomial;

    fn r1(lambda: Rational) -> Bimodule {
        Bimodule::new(GroupModel::rn(1), lambda, 3).unwrap()
    }

    #[test]
    fn flat_examples() {
        let b = r1(rat(1, 3));
        let env = b.env();
        let x = env.generator(0);
        let g = parse_polynomial("x1^3", b.group().coords()).unwrap();
        // X ⇀ g = t(λ-1) g'
        assert_eq!(b.act_left(&x, &g).unwrap().to_string(), "-2*x1^2*t");
        assert_eq!(b.act_right(&g, &x).unwrap().to_string(), "x1^2*t");
        let one = env.one(1);
        let lhs = b.lr_smash_mul(&b.element(&Polynomial::one(b.group().coords()), &x).unwrap(), &b.element(&g, &one).unwrap());
        assert_eq!(b.render(&lhs), "x1^3⊗X1 - 2*x1^2⊗1*t");
        let lhs = b.lr_smash_mul(&b.element(&g, &x).unwrap(), &b.element(&Polynomial::one(b.group().coords()), &x).unwrap());
        assert_eq!(b.render(&lhs), "x1^3⊗X1^2 + x1^2⊗X1*t");
    }

    #[test]
    fn heisenberg_actions() {
        let b = Bimodule::new(GroupModel::heis3(), rat(1, 2), 3).unwrap();
        let z = parse_polynomial("z", b.group().coords()).unwrap();
        let y = b.env().generator(1);
        assert_eq!(b.act_left(&y, &z).unwrap().to_string(), "-1/2*x*t");
        let x = b.env().generator(0);
        assert_eq!(b.act_right(&z, &x).unwrap().to_string(), "1/2*y*t");
    }

    #[test]
    fn lambda_outside_unit_interval() {
        assert!(Bimodule::new(GroupModel::rn(1), rat(3, 2), 2).is_err());
    }
}
