use std::collections::BTreeMap;

use super::moyal::{StarProduct, NU};
use crate::algebra::poly::monomials_up_to;
use crate::algebra::{Additive, Matrix, Monomial, Polynomial, Rational, Series, Vars};
use crate::error::{Error, Result};

type Table = BTreeMap<Monomial, Polynomial>;

/// `T = T_0 + Σ_{r≥1} ν^r T_r`, each `T_r` tabulated on the monomials of
/// degree at most `degree_bound`.
#[derive(Clone, Debug)]
pub struct OperatorSeries {
    vars: Vars,
    order: usize,
    degree_bound: u32,
    tables: Vec<Table>,
    /// `T_0^{-1}`, absent when `T_0` is the identity
    t0_inverse: Option<Table>,
}

impl OperatorSeries {
    pub fn identity(vars: &Vars, order: usize, degree_bound: u32) -> Self {
        Self::from_fn(vars, order, degree_bound, |r, m| {
            if r == 0 {
                Polynomial::monomial(vars, m.clone(), Rational::from_integer(1.into()))
            } else {
                Polynomial::zero(vars)
            }
        })
        .expect("identity is invertible")
    }

    /// Tabulates `f(r, m) = T_r(m)` for `r ≤ order` and monomials `m` of
    /// degree at most `degree_bound`.
    pub fn from_fn(
        vars: &Vars,
        order: usize,
        degree_bound: u32,
        f: impl Fn(usize, &Monomial) -> Polynomial,
    ) -> Result<Self> {
        let basis = monomials_up_to(vars.len(), degree_bound);
        let mut tables = Vec::with_capacity(order + 1);
        for r in 0..=order {
            let mut t = Table::new();
            for m in &basis {
                let img = f(r, m);
                if img.vars() != vars {
                    return Err(Error::VariableMismatch {
                        left: img.vars().names().join(","),
                        right: vars.names().join(","),
                    });
                }
                if !img.is_zero() {
                    t.insert(m.clone(), img);
                }
            }
            tables.push(t);
        }
        let is_identity = basis.iter().all(|m| {
            tables[0].get(m).is_some_and(|p| p.len() == 1 && p.coeff(m) == Rational::from_integer(1.into()))
        });
        let t0_inverse = if is_identity { None } else { Some(invert_table(vars, &basis, &tables[0])?) };
        Ok(OperatorSeries { vars: vars.clone(), order, degree_bound, tables, t0_inverse })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn degree_bound(&self) -> u32 {
        self.degree_bound
    }

    fn lookup(&self, table: &Table, p: &Polynomial) -> Result<Polynomial> {
        let mut out = Polynomial::zero(&self.vars);
        for (m, c) in p.terms() {
            if m.degree() > self.degree_bound {
                return Err(Error::DegreeBound { needed: m.degree(), available: self.degree_bound });
            }
            if let Some(img) = table.get(m) {
                out = out.add_ref(&img.scale(c));
            }
        }
        Ok(out)
    }

    /// `T(y)` for a series `y` of order at most `self.order`.
    pub fn apply(&self, y: &Series<Polynomial>) -> Result<Series<Polynomial>> {
        let n = self.check_order(y)?;
        let zero = Polynomial::zero(&self.vars);
        let mut coeffs = vec![zero.clone(); n + 1];
        for (k, c) in y.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for r in 0..=(n - k) {
                coeffs[k + r] = coeffs[k + r].add_ref(&self.lookup(&self.tables[r], c)?);
            }
        }
        Ok(Series::new(NU, n, &zero, coeffs))
    }

    /// Solves `T(x) = y` order by order.
    pub fn apply_inverse(&self, y: &Series<Polynomial>) -> Result<Series<Polynomial>> {
        let n = self.check_order(y)?;
        let zero = Polynomial::zero(&self.vars);
        let mut xs: Vec<Polynomial> = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let mut rhs = y.coeff(k).clone();
            for r in 1..=k {
                rhs = rhs.sub_ref(&self.lookup(&self.tables[r], &xs[k - r])?);
            }
            let x = match &self.t0_inverse {
                None => rhs,
                Some(inv) => self.lookup(inv, &rhs)?,
            };
            xs.push(x);
        }
        Ok(Series::new(NU, n, &zero, xs))
    }

    fn check_order(&self, y: &Series<Polynomial>) -> Result<usize> {
        if y.order() > self.order {
            return Err(Error::SeriesMismatch(format!(
                "operator known through order {}, series has order {}",
                self.order,
                y.order()
            )));
        }
        Ok(y.order())
    }
}

fn invert_table(vars: &Vars, basis: &[Monomial], t0: &Table) -> Result<Table> {
    let index: BTreeMap<&Monomial, usize> = basis.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let n = basis.len();
    let mut m = Matrix::<Rational>::zeros(n, n);
    for (j, b) in basis.iter().enumerate() {
        if let Some(img) = t0.get(b) {
            for (w, c) in img.terms() {
                let Some(&i) = index.get(w) else {
                    return Err(Error::NotInvertible("T_0 leaves the degree-bounded space".into()));
                };
                m.set(i, j, c.clone());
            }
        }
    }
    let inv = m.inverse().ok_or_else(|| Error::NotInvertible("T_0".into()))?;
    let mut out = Table::new();
    for (j, b) in basis.iter().enumerate() {
        let mut p = Polynomial::zero(vars);
        for (i, w) in basis.iter().enumerate() {
            p.add_term(w.clone(), inv.get(i, j).clone());
        }
        if !p.is_zero() {
            out.insert(b.clone(), p);
        }
    }
    Ok(out)
}

/// `u ⋆' v = T^{-1}(Tu ⋆ Tv)`.
pub struct Transported<'a, S: StarProduct> {
    inner: &'a S,
    t: OperatorSeries,
}

pub fn transport_product<S: StarProduct>(t: OperatorSeries, star: &S) -> Result<Transported<'_, S>> {
    if &t.vars != star.vars() {
        return Err(Error::VariableMismatch {
            left: t.vars.names().join(","),
            right: star.vars().names().join(","),
        });
    }
    Ok(Transported { inner: star, t })
}

impl<S: StarProduct> StarProduct for Transported<'_, S> {
    fn vars(&self) -> &Vars {
        &self.t.vars
    }

    fn star(&self, u: &Polynomial, v: &Polynomial, order: usize) -> Result<Series<Polynomial>> {
        let needed = 2 * u.degree().unwrap_or(0).max(v.degree().unwrap_or(0));
        if needed > self.t.degree_bound {
            return Err(Error::DegreeBound { needed, available: self.t.degree_bound });
        }
        let tu = self.t.apply(&Series::constant(NU, order, u.clone()))?;
        let tv = self.t.apply(&Series::constant(NU, order, v.clone()))?;
        self.t.apply_inverse(&self.inner.star_series(&tu, &tv)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polynomial;
    use crate::starprod::{Moyal, SymplecticStructure};

    #[test]
    fn identity_transport_is_the_same_product() {
        let s = SymplecticStructure::standard(1);
        let m = Moyal(s.clone());
        let t = transport_product(OperatorSeries::identity(s.vars(), 4, 6), &m).unwrap();
        let u = parse_polynomial("x1^2 + x2", s.vars()).unwrap();
        let v = parse_polynomial("x1*x2^2", s.vars()).unwrap();
        assert_eq!(t.star(&u, &v, 4).unwrap(), m.star(&u, &v, 4).unwrap());
    }

    #[test]
    fn inverse_roundtrip_and_bounds() {
        let s = SymplecticStructure::standard(1);
        let vars = s.vars().clone();
        let t = OperatorSeries::from_fn(&vars, 3, 4, |r, m| {
            let p = Polynomial::monomial(&vars, m.clone(), Rational::from_integer(1.into()));
            match r {
                0 => p,
                1 => p.derive(0),
                _ => Polynomial::zero(&vars),
            }
        })
        .unwrap();
        let y = Series::constant(NU, 3, parse_polynomial("x1^3*x2 - x2^2", &vars).unwrap());
        assert_eq!(t.apply_inverse(&t.apply(&y).unwrap()).unwrap(), y);
        let big = Series::constant(NU, 3, parse_polynomial("x1^5", &vars).unwrap());
        assert!(matches!(t.apply(&big), Err(Error::DegreeBound { needed: 5, available: 4 })));
        let m = Moyal(s);
        let tr = transport_product(t, &m).unwrap();
        let u = parse_polynomial("x1^3", &vars).unwrap();
        assert!(matches!(tr.star(&u, &u, 3), Err(Error::DegreeBound { needed: 6, .. })));
    }

    #[test]
    fn singular_t0_rejected() {
        let vars = Vars::indexed("x", 2);
        let r = OperatorSeries::from_fn(&vars, 1, 2, |_, _| Polynomial::zero(&vars));
        assert!(matches!(r, Err(Error::NotInvertible(_))));
    }
}
