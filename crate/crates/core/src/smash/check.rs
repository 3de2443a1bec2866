use super::product::Bimodule;
use crate::algebra::poly::monomials_up_to;
use crate::algebra::{Additive, Polynomial, Rational, Ring, Series};
use crate::error::Result;
use crate::hopf::UElement;
use crate::report::Report;

fn series_act<F>(s: &Series<Polynomial>, act: F) -> Result<Series<Polynomial>>
where
    F: Fn(&Polynomial) -> Result<Series<Polynomial>>,
{
    let mut acc = s.zero_like();
    for (k, c) in s.coeffs().iter().enumerate() {
        if !c.is_zero() {
            acc = acc.add_ref(&act(c)?.shift(k));
        }
    }
    Ok(acc)
}

fn series_mul_poly(a: &Series<Polynomial>, b: &Series<Polynomial>) -> Series<Polynomial> {
    a.mul_ref(b)
}

/// Bimodule and module-algebra laws of the actions on generators and
/// coordinate monomials of degree at most `degree`.
pub fn bimodule_check(b: &Bimodule, degree: u32) -> Result<Report> {
    let env = b.env();
    let g = b.group();
    let n = g.lie().dim();
    let names = g.lie().basis();
    let coords = g.coords();
    let fs: Vec<Polynomial> = monomials_up_to(coords.len(), degree)
        .into_iter()
        .map(|m| Polynomial::monomial(coords, m, Rational::from_integer(1.into())))
        .collect();
    let gens: Vec<UElement> = (0..n).map(|i| env.generator(i)).collect();
    let mut report = Report::new();

    let mut compat = None;
    let mut left_mod = None;
    let mut right_mod = None;
    'outer: for i in 0..n {
        for j in 0..n {
            let prod = env.mul(&gens[i], &gens[j]);
            for f in &fs {
                let l = series_act(&b.act_left(&gens[i], f)?, |h| b.act_right(h, &gens[j]))?;
                let r = series_act(&b.act_right(f, &gens[j])?, |h| b.act_left(&gens[i], h))?;
                if compat.is_none() && l != r {
                    compat = Some(format!("(X⇀f)↼Y with X={}, Y={}, f={f}: {l} != {r}", names.name(i), names.name(j)));
                }
                let l = series_act(&b.act_left(&gens[j], f)?, |h| b.act_left(&gens[i], h))?;
                let r = b.act_left(&prod, f)?;
                if left_mod.is_none() && l != r {
                    left_mod = Some(format!(
                        "{a}⇀({c}⇀f) != ({a}{c})⇀f at f={f}: {l} != {r}",
                        a = names.name(i),
                        c = names.name(j)
                    ));
                }
                let l = series_act(&b.act_right(f, &gens[i])?, |h| b.act_right(h, &gens[j]))?;
                let r = b.act_right(f, &prod)?;
                if right_mod.is_none() && l != r {
                    right_mod = Some(format!(
                        "(f↼{a})↼{c} != f↼({a}{c}) at f={f}: {l} != {r}",
                        a = names.name(i),
                        c = names.name(j)
                    ));
                }
                if compat.is_some() && left_mod.is_some() && right_mod.is_some() {
                    break 'outer;
                }
            }
        }
    }
    let count = n * n * fs.len();
    report.record("compatibility", compat.map_or(Ok(format!("{count} cases")), Err));
    report.record("left_module", left_mod.map_or(Ok(format!("{count} cases")), Err));
    report.record("right_module", right_mod.map_or(Ok(format!("{count} cases")), Err));

    let small: Vec<&Polynomial> = fs.iter().filter(|f| f.degree().unwrap_or(0) <= 2).collect();
    let mut left_alg = None;
    let mut right_alg = None;
    for (i, x) in gens.iter().enumerate() {
        for f in &small {
            for h in &small {
                let fh = f.mul_ref(h);
                let cf = Series::constant(crate::hopf::T, b.order(), (*f).clone());
                let ch = Series::constant(crate::hopf::T, b.order(), (*h).clone());
                let l = b.act_left(x, &fh)?;
                let r = series_mul_poly(&b.act_left(x, f)?, &ch).add_ref(&series_mul_poly(&cf, &b.act_left(x, h)?));
                if left_alg.is_none() && l != r {
                    left_alg = Some(format!("{}⇀({f}*{h}): {l} != {r}", names.name(i)));
                }
                let l = b.act_right(&fh, x)?;
                let r = series_mul_poly(&b.act_right(f, x)?, &ch).add_ref(&series_mul_poly(&cf, &b.act_right(h, x)?));
                if right_alg.is_none() && l != r {
                    right_alg = Some(format!("({f}*{h})↼{}: {l} != {r}", names.name(i)));
                }
            }
        }
    }
    let count = n * small.len() * small.len();
    report.record("left_module_algebra", left_alg.map_or(Ok(format!("{count} cases")), Err));
    report.record("right_module_algebra", right_alg.map_or(Ok(format!("{count} cases")), Err));
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::rat;
    use crate::smash::GroupModel;

    #[test]
    fn flat_bimodule_passes_for_any_lambda() {
        let b = Bimodule::new(GroupModel::rn(2), rat(1, 3), 3).unwrap();
        let r = bimodule_check(&b, 3).unwrap();
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn heisenberg_left_module_needs_lambda_one() {
        let b = Bimodule::new(GroupModel::heis3(), rat(1, 1), 3).unwrap();
        assert!(bimodule_check(&b, 3).unwrap().passed());
        let b = Bimodule::new(GroupModel::heis3(), rat(1, 2), 3).unwrap();
        let r = bimodule_check(&b, 3).unwrap();
        assert_eq!(r.first_failure().unwrap().id, "left_module", "{r}");
    }
}
