use super::random::{random_word, rng};
use super::Options;
use crate::error::Result;
use crate::hopf::{hopf_axiom_check, pbw_normal_form, twist_checks, Chooser, Mode, Twist, UEnv};
use crate::report::{Report, Status};
use crate::shipped;

const ALGEBRAS: [&str; 3] = ["abelian_3", "sl2", "heis3"];

/// Random rewriting orders agree on seeded words, and the Hopf axioms hold
/// at degree 3 and order 4.
pub fn enveloping(opts: &Options) -> Result<Report> {
    let mut report = Report::with_seed(opts.seed);
    let mut r = rng(opts.seed);
    for name in ALGEBRAS {
        let lie = shipped::lie_algebra(name)?;
        let env = UEnv::new(lie.clone(), Mode::Deformed, 6);
        let mut witness = None;
        for _ in 0..500 {
            let w = random_word(&mut r, lie.dim(), 6);
            let a = pbw_normal_form(&env, &w, Chooser::Random(&mut r));
            let b = pbw_normal_form(&env, &w, Chooser::Random(&mut r));
            let c = pbw_normal_form(&env, &w, Chooser::Leftmost);
            if witness.is_none() && (a != b || a != c) {
                let names: Vec<&str> = w.iter().map(|&g| lie.basis().name(g)).collect();
                witness = Some(format!(
                    "word {}: {} vs {} vs {}",
                    names.join("*"),
                    env.render(&a),
                    env.render(&b),
                    env.render(&c)
                ));
            }
        }
        report.record(format!("hopf.pbw_confluence.{name}"), witness.map_or(Ok("500 words".into()), Err));
        let env = UEnv::new(lie, Mode::Deformed, 4);
        report.extend(&format!("hopf.axioms.{name}"), hopf_axiom_check(&env, 3));
    }
    Ok(report)
}

/// Abelian and Jordanian twists pass; the `E⊗E` twist fails the cocycle
/// condition at order `t²`.
pub fn twists() -> Result<Report> {
    let mut report = Report::new();
    for (alg, twist) in [("abelian_3", "abelian"), ("borel_sl2", "jordanian"), ("sl2", "jordanian")] {
        let env = UEnv::new(shipped::lie_algebra(alg)?, Mode::Classical, 3);
        let f = Twist::builtin(&env, twist)?;
        report.extend(&format!("twist.{twist}.{alg}"), twist_checks(&env, &f));
    }
    let env = UEnv::new(shipped::lie_algebra("sl2")?, Mode::Classical, 3);
    let f = Twist::e_square(&env)?;
    let checks = twist_checks(&env, &f);
    let cocycle = checks.checks.iter().find(|c| c.id == "cocycle").expect("cocycle check");
    let outcome = if cocycle.status == Status::Fail && cocycle.detail.starts_with("order t^2:") {
        Ok(format!("rejected with {}", cocycle.detail))
    } else {
        Err(format!("expected an order t^2 cocycle witness, got {}: {}", cocycle.status, cocycle.detail))
    };
    report.record("twist.e_square.sl2.rejected", outcome);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twist_suite_passes() {
        let r = twists().unwrap();
        assert!(r.passed(), "{r}");
    }
}
