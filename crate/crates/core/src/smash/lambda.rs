use std::sync::OnceLock;

use super::group::GroupModel;
use super::product::Bimodule;
use crate::algebra::rational::rat;
use crate::algebra::{Polynomial, Rational, Series, Vars};
use crate::error::{Error, Result};
use crate::starprod::{moyal_star, StarProduct, SymplecticStructure, NU};

/// `t = c ν`, fixed by matching `q ⋆_{1/2} p` on `ℝ` against the Moyal
/// product.
#[derive(Clone, Debug, PartialEq)]
pub struct Calibration {
    pub t_per_nu: Rational,
}

impl Calibration {
    pub fn derive() -> Result<Self> {
        let b = Bimodule::new(GroupModel::rn(1), rat(1, 2), 1)?;
        let vars = b.group().phase_space();
        let q = Polynomial::var(&vars, 0);
        let p = Polynomial::var(&vars, 1);
        let ours = b.lambda_star(&q, &p)?;
        let theirs = moyal_star(&q, &p, &SymplecticStructure::standard(1), 1)?;
        let (ct, cn) = (ours.coeff(1), theirs.coeff(1));
        if ours.coeff(0) != theirs.coeff(0) || !ct.is_constant() || !cn.is_constant() || ct.is_zero() {
            return Err(Error::Invalid(format!("cannot calibrate: {ours} against {theirs}")));
        }
        Ok(Calibration { t_per_nu: cn.constant_term() / ct.constant_term() })
    }

    /// The calibration, computed on first use.
    pub fn get() -> &'static Calibration {
        static CAL: OnceLock<Calibration> = OnceLock::new();
        CAL.get_or_init(|| Calibration::derive().expect("calibration from degree-one monomials"))
    }

    /// Rewrites a series in `t` as a series in `ν`.
    pub fn to_nu(&self, s: &Series<Polynomial>) -> Series<Polynomial> {
        s.rescale_param(&self.t_per_nu).with_param(NU)
    }
}

/// `⋆_λ` expressed in `ν` through the frozen calibration.
pub struct LambdaStar {
    bimodule: Bimodule,
    vars: Vars,
}

impl LambdaStar {
    pub fn new(group: GroupModel, lambda: Rational, order: usize) -> Result<Self> {
        let vars = group.phase_space();
        Ok(LambdaStar { bimodule: Bimodule::new(group, lambda, order)?, vars })
    }

    pub fn bimodule(&self) -> &Bimodule {
        &self.bimodule
    }
}

impl StarProduct for LambdaStar {
    fn vars(&self) -> &Vars {
        &self.vars
    }

    fn star(&self, u: &Polynomial, v: &Polynomial, order: usize) -> Result<Series<Polynomial>> {
        if order > self.bimodule.order() {
            return Err(Error::SeriesMismatch(format!(
                "product built for order {}, asked for {order}",
                self.bimodule.order()
            )));
        }
        let s = self.bimodule.lambda_star(u, v)?;
        Ok(Calibration::get().to_nu(&s).truncate(order))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::int;
    use crate::parse::parse_polynomial;

    #[test]
    fn calibration_value() {
        assert_eq!(Calibration::get().t_per_nu, int(-2));
    }

    #[test]
    fn half_matches_moyal_on_a_pair() {
        let s = LambdaStar::new(GroupModel::rn(1), rat(1, 2), 4).unwrap();
        let u = parse_polynomial("x1^2*x2", s.vars()).unwrap();
        let v = parse_polynomial("x1*x2^2", s.vars()).unwrap();
        let m = moyal_star(&u, &v, &SymplecticStructure::standard(1), 4).unwrap();
        assert_eq!(s.star(&u, &v, 4).unwrap(), m);
    }
}
