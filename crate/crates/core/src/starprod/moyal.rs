use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};

use num_traits::Zero;

use super::symplectic::SymplecticStructure;
use crate::algebra::rational::factorial;
use crate::algebra::{Additive, Monomial, Polynomial, Rational, Series, Vars};
use crate::error::{Error, Result};

/// Name of the deformation parameter of star products.
pub const NU: &str = "nu";

/// A `ℚ[[ν]]`-bilinear product on polynomials in a fixed variable set.
pub trait StarProduct {
    fn vars(&self) -> &Vars;

    fn star(&self, u: &Polynomial, v: &Polynomial, order: usize) -> Result<Series<Polynomial>>;

    /// Bilinear extension to series in `ν`.
    fn star_series(&self, a: &Series<Polynomial>, b: &Series<Polynomial>) -> Result<Series<Polynomial>> {
        a.check_compatible(b)?;
        let zero = Polynomial::zero(self.vars());
        a.try_bilinear(b, &zero, |x, y, r| self.star(x, y, r))
    }
}

/// Sum of products `f(x) g(y)` kept apart, keyed by the two monomials.
#[derive(Clone, Debug, Default)]
struct BiPoly(BTreeMap<(Monomial, Monomial), Rational>);

impl BiPoly {
    fn new(u: &Polynomial, v: &Polynomial) -> Self {
        let mut out = BTreeMap::new();
        for (a, ca) in u.terms() {
            for (b, cb) in v.terms() {
                out.insert((a.clone(), b.clone()), ca * cb);
            }
        }
        BiPoly(out)
    }

    /// One application of `Σ w ∂_i ⊗ ∂_j` over the `(i, j, w)` entries.
    fn apply(&self, support: &[(usize, usize, Rational)]) -> Self {
        let mut out: BTreeMap<(Monomial, Monomial), Rational> = BTreeMap::new();
        for ((a, b), c) in &self.0 {
            for (i, j, w) in support {
                let (ei, ej) = (a.0[*i], b.0[*j]);
                if ei == 0 || ej == 0 {
                    continue;
                }
                let mut a2 = a.clone();
                let mut b2 = b.clone();
                a2.0[*i] -= 1;
                b2.0[*j] -= 1;
                let k = c * w * Rational::from_integer((ei as i64 * ej as i64).into());
                let e = out.entry((a2, b2)).or_insert_with(Rational::zero);
                *e += k;
            }
        }
        out.retain(|_, c| !c.is_zero());
        BiPoly(out)
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Multiplies the two slots together.
    fn collapse(&self, vars: &Vars) -> Polynomial {
        let mut p = Polynomial::zero(vars);
        for ((a, b), c) in &self.0 {
            p.add_term(a.mul(b), c.clone());
        }
        p
    }
}

/// `Σ_r param^r/r! D^r(u, v)` for the bidifferential operator `D` with the
/// given support. Returns the series and whether a nonzero term beyond
/// `order` was discarded.
fn exp_bidifferential(
    u: &Polynomial,
    v: &Polynomial,
    support: &[(usize, usize, Rational)],
    order: usize,
    odd_only: bool,
) -> (Series<Polynomial>, bool) {
    let vars = u.vars();
    let zero = Polynomial::zero(vars);
    let mut coeffs = vec![zero.clone(); order + 1];
    let mut b = BiPoly::new(u, v);
    let mut r = 0usize;
    loop {
        if b.is_zero() {
            return (Series::new(NU, order, &zero, coeffs), false);
        }
        // the bracket keeps P^{2k+1} at ν^{2k}
        let (keep, power) = if odd_only { (r % 2 == 1, r.saturating_sub(1)) } else { (true, r) };
        if keep {
            if power > order {
                return (Series::new(NU, order, &zero, coeffs), true);
            }
            coeffs[power] = b.collapse(vars).scale(&factorial(r as u32).recip());
        }
        b = b.apply(support);
        r += 1;
    }
}

/// `P^r(u, v) = Λ^{i1 j1}...Λ^{ir jr} (∂_{i1..ir} u)(∂_{j1..jr} v)`.
pub fn poisson_power(u: &Polynomial, v: &Polynomial, r: u32, s: &SymplecticStructure) -> Result<Polynomial> {
    check_vars(u, v, s)?;
    let mut b = BiPoly::new(u, v);
    for _ in 0..r {
        if b.is_zero() {
            break;
        }
        b = b.apply(s.support());
    }
    Ok(b.collapse(s.vars()))
}

fn check_vars(u: &Polynomial, v: &Polynomial, s: &SymplecticStructure) -> Result<()> {
    for p in [u, v] {
        if p.vars() != s.vars() {
            return Err(Error::VariableMismatch {
                left: p.vars().names().join(","),
                right: s.vars().names().join(","),
            });
        }
    }
    Ok(())
}

/// Outcome of a star product with the truncation flag.
#[derive(Clone, Debug, PartialEq)]
pub struct StarReport {
    pub value: Series<Polynomial>,
    /// a nonzero term beyond the truncation order was dropped
    pub lossy: bool,
}

pub fn moyal_star_report(u: &Polynomial, v: &Polynomial, s: &SymplecticStructure, order: usize) -> Result<StarReport> {
    check_vars(u, v, s)?;
    let (value, lossy) = exp_bidifferential(u, v, s.support(), order, false);
    Ok(StarReport { value, lossy })
}

/// `u ⋆ v = exp(νP)(u, v)` truncated at `order`.
pub fn moyal_star(u: &Polynomial, v: &Polynomial, s: &SymplecticStructure, order: usize) -> Result<Series<Polynomial>> {
    Ok(moyal_star_report(u, v, s, order)?.value)
}

/// `M(u, v) = ν^{-1} sinh(νP)(u, v)` truncated at `order`.
pub fn moyal_bracket(u: &Polynomial, v: &Polynomial, s: &SymplecticStructure, order: usize) -> Result<Series<Polynomial>> {
    check_vars(u, v, s)?;
    Ok(exp_bidifferential(u, v, s.support(), order, true).0)
}

/// The Moyal product as a [`StarProduct`].
#[derive(Clone, Debug)]
pub struct Moyal(pub SymplecticStructure);

impl StarProduct for Moyal {
    fn vars(&self) -> &Vars {
        self.0.vars()
    }

    fn star(&self, u: &Polynomial, v: &Polynomial, order: usize) -> Result<Series<Polynomial>> {
        moyal_star(u, v, &self.0, order)
    }
}

/// Standard-ordered product `Σ_k (2ν)^k/k! ∂_p^k u ∂_q^k v`, all positions
/// to the left of all momenta.
#[derive(Clone, Debug)]
pub struct StandardStar {
    vars: Vars,
    support: Vec<(usize, usize, Rational)>,
}

impl StandardStar {
    pub fn new(ell: usize) -> Self {
        let two = Rational::from_integer(2.into());
        StandardStar {
            vars: Vars::indexed("x", 2 * ell),
            support: (0..ell).map(|a| (ell + a, a, two.clone())).collect(),
        }
    }
}

impl StarProduct for StandardStar {
    fn vars(&self) -> &Vars {
        &self.vars
    }

    fn star(&self, u: &Polynomial, v: &Polynomial, order: usize) -> Result<Series<Polynomial>> {
        if u.vars() != &self.vars || v.vars() != &self.vars {
            return Err(Error::VariableMismatch {
                left: u.vars().names().join(","),
                right: self.vars.names().join(","),
            });
        }
        Ok(exp_bidifferential(u, v, &self.support, order, false).0)
    }
}

/// Memoizes a star product on pairs of monomials at one fixed order and
/// extends it bilinearly.
pub struct MonomialStarCache<'a, S: StarProduct> {
    inner: &'a S,
    order: usize,
    table: RefCell<HashMap<(Monomial, Monomial), Series<Polynomial>>>,
}

impl<'a, S: StarProduct> MonomialStarCache<'a, S> {
    pub fn new(inner: &'a S, order: usize) -> Self {
        MonomialStarCache { inner, order, table: RefCell::new(HashMap::new()) }
    }

    fn pair(&self, a: &Monomial, b: &Monomial) -> Result<Series<Polynomial>> {
        let key = (a.clone(), b.clone());
        if let Some(s) = self.table.borrow().get(&key) {
            return Ok(s.clone());
        }
        let vars = self.inner.vars();
        let one = Rational::from_integer(1.into());
        let s = self.inner.star(
            &Polynomial::monomial(vars, a.clone(), one.clone()),
            &Polynomial::monomial(vars, b.clone(), one),
            self.order,
        )?;
        self.table.borrow_mut().insert(key, s.clone());
        Ok(s)
    }
}

impl<S: StarProduct> StarProduct for MonomialStarCache<'_, S> {
    fn vars(&self) -> &Vars {
        self.inner.vars()
    }

    fn star(&self, u: &Polynomial, v: &Polynomial, order: usize) -> Result<Series<Polynomial>> {
        if order > self.order {
            return Err(Error::Invalid(format!("cache built for order {}, asked for {order}", self.order)));
        }
        let zero = Polynomial::zero(self.vars());
        let mut acc = Series::zero(NU, order, &zero);
        for (a, ca) in u.terms() {
            for (b, cb) in v.terms() {
                let s = self.pair(a, b)?.truncate(order);
                acc = acc.add_ref(&s.scale(&(ca * cb)));
            }
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polynomial;

    fn p(s: &SymplecticStructure, src: &str) -> Polynomial {
        parse_polynomial(src, s.vars()).unwrap()
    }

    #[test]
    fn poisson_power_examples() {
        let s = SymplecticStructure::standard(1);
        let (x1, x2) = (p(&s, "x1"), p(&s, "x2"));
        assert_eq!(poisson_power(&x1, &x2, 1, &s).unwrap(), p(&s, "-1"));
        assert_eq!(poisson_power(&x1, &x2, 0, &s).unwrap(), p(&s, "x1*x2"));
        let a = p(&s, "x1^2");
        let b = p(&s, "x2^2");
        assert_eq!(poisson_power(&a, &b, 2, &s).unwrap(), p(&s, "4"));
    }

    #[test]
    fn moyal_examples() {
        let s = SymplecticStructure::standard(1);
        let (x1, x2) = (p(&s, "x1"), p(&s, "x2"));
        assert_eq!(moyal_star(&x1, &x2, &s, 8).unwrap().to_string(), "x1*x2 - nu");
        assert_eq!(moyal_star(&x2, &x1, &s, 8).unwrap().to_string(), "x1*x2 + nu");
        let r = moyal_star_report(&p(&s, "x1^2"), &p(&s, "x2^2"), &s, 8).unwrap();
        assert_eq!(r.value.to_string(), "x1^2*x2^2 - 4*x1*x2*nu + 2*nu^2");
        assert!(!r.lossy);
        assert!(moyal_star_report(&p(&s, "x1^2"), &p(&s, "x2^2"), &s, 1).unwrap().lossy);
        let u = p(&s, "x1^3 + x2");
        assert_eq!(moyal_star(&u, &p(&s, "1"), &s, 8).unwrap(), Series::constant(NU, 8, u));
    }

    #[test]
    fn bracket_examples() {
        let s = SymplecticStructure::standard(1);
        let u = p(&s, "x1^2*x2 + x2");
        assert!(moyal_bracket(&u, &u, &s, 8).unwrap().is_zero());
        let b = moyal_bracket(&p(&s, "x1"), &p(&s, "x2"), &s, 8).unwrap();
        assert_eq!(b, Series::constant(NU, 8, p(&s, "-1")));
        let b = moyal_bracket(&p(&s, "x1^2"), &p(&s, "x2^2"), &s, 8).unwrap();
        assert_eq!(b, Series::constant(NU, 8, p(&s, "-4*x1*x2")));
    }

    #[test]
    fn standard_ordered_examples() {
        let st = StandardStar::new(1);
        let v = st.vars().clone();
        let q = parse_polynomial("x1", &v).unwrap();
        let pp = parse_polynomial("x2", &v).unwrap();
        assert_eq!(st.star(&q, &pp, 4).unwrap().to_string(), "x1*x2");
        assert_eq!(st.star(&pp, &q, 4).unwrap().to_string(), "x1*x2 + 2*nu");
    }

    #[test]
    fn cache_matches_direct() {
        let s = SymplecticStructure::standard(1);
        let m = Moyal(s.clone());
        let c = MonomialStarCache::new(&m, 6);
        let u = p(&s, "x1^2 - 3*x2 + x1*x2");
        let v = p(&s, "x2^3 + 1/2*x1");
        assert_eq!(c.star(&u, &v, 6).unwrap(), m.star(&u, &v, 6).unwrap());
        assert_eq!(c.star(&u, &v, 2).unwrap(), m.star(&u, &v, 2).unwrap());
    }
}
