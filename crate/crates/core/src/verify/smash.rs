use super::moyal::{monomials, unit_check};
use super::random::{random_polynomial, rng};
use super::Options;
use crate::algebra::rational::rat;
use crate::algebra::{Additive, Monomial, Polynomial, Rational, Series, TensorElement};
use crate::error::Result;
use crate::hopf::T;
use crate::report::{Report, Status};
use crate::smash::{bimodule_check, Bimodule, GroupModel, LambdaStar, SmashElement};
use crate::starprod::{moyal_star, StandardStar, StarProduct, SymplecticStructure};

fn lambdas() -> [Rational; 4] {
    [rat(0, 1), rat(1, 3), rat(1, 2), rat(1, 1)]
}

fn tag(l: &Rational) -> String {
    l.to_string().replace('/', "_")
}

/// Monomial pairs of total degree at most `degree`.
fn pairs(polys: &[Polynomial], degree: u32) -> Vec<(&Polynomial, &Polynomial)> {
    let deg = |p: &Polynomial| p.degree().unwrap_or(0);
    polys.iter().flat_map(|u| polys.iter().filter(move |v| deg(u) + deg(v) <= degree).map(move |v| (u, v))).collect()
}

/// `⋆_{1/2}` against Moyal and `⋆_0` against the standard-ordered product
/// on `ℝⁿ`, `n = 1, 2`.
pub fn lambda_reduction() -> Result<Report> {
    let mut report = Report::new();
    for n in 1..=2 {
        let s = SymplecticStructure::standard(n);
        let polys = monomials(s.vars(), 4);
        let ps = pairs(&polys, 4);
        let half = LambdaStar::new(GroupModel::rn(n), rat(1, 2), 4)?;
        let zero = LambdaStar::new(GroupModel::rn(n), rat(0, 1), 4)?;
        let standard = StandardStar::new(n);
        let mut w_half = None;
        let mut w_zero = None;
        for (u, v) in &ps {
            if w_half.is_none() {
                let (a, b) = (half.star(u, v, 4)?, moyal_star(u, v, &s, 4)?);
                if a != b {
                    w_half = Some(format!("({u}, {v}): ⋆_1/2 = {a}, Moyal = {b}"));
                }
            }
            if w_zero.is_none() {
                let (a, b) = (zero.star(u, v, 4)?, standard.star(u, v, 4)?);
                if a != b {
                    w_zero = Some(format!("({u}, {v}): ⋆_0 = {a}, standard = {b}"));
                }
            }
        }
        let ok = format!("{} pairs", ps.len());
        report.record(format!("smash.lambda_half_is_moyal.r{n}"), w_half.map_or(Ok(ok.clone()), Err));
        report.record(format!("smash.lambda_zero_is_standard.r{n}"), w_zero.map_or(Ok(ok), Err));
    }
    Ok(report)
}

fn smash_assoc(b: &Bimodule, opts: &Options, count: usize) -> Result<std::result::Result<String, String>> {
    let phase = b.group().phase_space();
    let mut r = rng(opts.seed);
    for _ in 0..count {
        let [u, v, w]: [SmashElement; 3] = {
            let mut out = Vec::new();
            for _ in 0..3 {
                out.push(b.from_phase_space(&random_polynomial(&mut r, &phase, 2, 3))?);
            }
            out.try_into().expect("three elements")
        };
        let l = b.lr_smash_mul(&b.lr_smash_mul(&u, &v), &w);
        let rr = b.lr_smash_mul(&u, &b.lr_smash_mul(&v, &w));
        if l != rr {
            return Ok(Err(format!(
                "({}, {}, {}): (u⋆v)⋆w - u⋆(v⋆w) = {}",
                b.render(&u),
                b.render(&v),
                b.render(&w),
                b.render(&l.sub_ref(&rr))
            )));
        }
    }
    Ok(Ok(format!("{count} triples")))
}

fn pick(r: &Report, id: &str) -> std::result::Result<String, String> {
    let c = r.checks.iter().find(|c| c.id == id).expect("check present");
    if c.status == Status::Fail {
        Err(c.detail.clone())
    } else {
        Ok(c.detail.clone())
    }
}

/// L-R smash associativity on the Heisenberg model and bimodule
/// compatibility for each `λ`.
pub fn heisenberg_smash(opts: &Options) -> Result<Report> {
    let mut report = Report::with_seed(opts.seed);
    for l in lambdas() {
        let b = Bimodule::new(GroupModel::heis3(), l.clone(), 6)?;
        report.record(format!("smash.associativity.heis3_lambda_{}", tag(&l)), smash_assoc(&b, opts, 100)?);
        let laws = bimodule_check(&b, 3)?;
        report.record(format!("smash.compatibility.heis3_lambda_{}", tag(&l)), pick(&laws, "compatibility"));
    }
    Ok(report)
}

/// Module and module-algebra laws of each action; these explain an
/// associativity failure.
pub fn diagnostics() -> Result<Report> {
    let mut report = Report::new();
    for l in lambdas() {
        let b = Bimodule::new(GroupModel::heis3(), l.clone(), 4)?;
        let mut laws = bimodule_check(&b, 3)?;
        laws.checks.retain(|c| c.id != "compatibility");
        report.extend(&format!("smash.actions.heis3_lambda_{}", tag(&l)), laws);
    }
    Ok(report)
}

fn smash_unit(b: &Bimodule, degree: u32) -> std::result::Result<String, String> {
    let nc = b.group().coords().len();
    let n = b.group().lie().dim();
    let one = Series::constant(T, b.order(), TensorElement::basis(vec![Monomial::one(nc), Monomial::one(n)]));
    let mut count = 0;
    for f in crate::algebra::poly::monomials_up_to(nc, degree) {
        for a in crate::algebra::poly::monomials_up_to(n, degree) {
            let x = Series::constant(T, b.order(), TensorElement::basis(vec![f.clone(), a]));
            for (l, r) in [(&one, &x), (&x, &one)] {
                let got = b.lr_smash_mul(l, r);
                if got != x {
                    return Err(format!("{} ⋆ {} = {}", b.render(l), b.render(r), b.render(&got)));
                }
            }
            count += 1;
        }
    }
    Ok(format!("{count} basis elements"))
}

pub fn units() -> Result<Report> {
    let mut report = Report::new();
    for l in lambdas() {
        for g in [GroupModel::rn(2), GroupModel::heis3()] {
            let name = g.name().to_string();
            let star = LambdaStar::new(g.clone(), l.clone(), 3)?;
            report.record(format!("units.lambda_star.{name}_lambda_{}", tag(&l)), unit_check(&star, 3, 3)?);
            report.record(format!("units.lr_smash.{name}_lambda_{}", tag(&l)), smash_unit(star.bimodule(), 2));
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reductions_hold() {
        assert!(lambda_reduction().unwrap().passed());
    }

    #[test]
    fn unit_is_preserved() {
        let r = units().unwrap();
        assert!(r.passed(), "{r}");
    }
}
