use super::uenv::{UElement, UEnv};
use crate::algebra::poly::monomials_up_to;
use crate::algebra::{Additive, Monomial};
use crate::report::Report;

/// Antipode on PBW monomials, overridable for negative controls.
pub type AntipodeFn<'a> = dyn Fn(&UEnv, &Monomial) -> UElement + 'a;

/// Hopf axioms on all PBW monomials of degree at most `degree`.
pub fn hopf_axiom_check(env: &UEnv, degree: u32) -> Report {
    hopf_axiom_check_with(env, degree, &|e, m| e.antipode_monomial(m))
}

/// The standard antipode with the sign of `S(X_target)` flipped.
pub fn corrupted_antipode(target: usize) -> impl Fn(&UEnv, &Monomial) -> UElement {
    move |env, m| {
        let s = env.antipode_monomial(m);
        if m.degree() == 1 && m.0[target] == 1 {
            s.neg_ref()
        } else {
            s
        }
    }
}

fn witness(env: &UEnv, what: &str, lhs: &UElement, rhs: &UElement) -> String {
    format!("{what}: {} != {}", env.render(lhs), env.render(rhs))
}

fn scan(
    report: &mut Report,
    id: &str,
    basis: &[Monomial],
    mut f: impl FnMut(&Monomial) -> Option<String>,
) {
    for m in basis {
        if let Some(w) = f(m) {
            report.push(id, false, w);
            return;
        }
    }
    report.push(id, true, format!("{} monomials", basis.len()));
}

pub fn hopf_axiom_check_with(env: &UEnv, degree: u32, antipode: &AntipodeFn<'_>) -> Report {
    let mut report = Report::new();
    let basis = monomials_up_to(env.lie().dim(), degree);
    let name = |m: &Monomial| {
        if m.is_one() {
            "1".to_string()
        } else {
            m.render(env.lie().basis())
        }
    };

    scan(&mut report, "coassociativity", &basis, |m| {
        let d = env.coproduct(&env.pbw(m.clone()));
        let l = env.coproduct_at(&d, 0);
        let r = env.coproduct_at(&d, 1);
        (l != r).then(|| witness(env, &format!("at {}", name(m)), &l, &r))
    });

    scan(&mut report, "counit", &basis, |m| {
        let x = env.pbw(m.clone());
        let d = env.coproduct(&x);
        let l = env.counit_at(&d, 0);
        let r = env.counit_at(&d, 1);
        if l != x {
            Some(witness(env, &format!("(ε⊗id)Δ at {}", name(m)), &l, &x))
        } else if r != x {
            Some(witness(env, &format!("(id⊗ε)Δ at {}", name(m)), &r, &x))
        } else {
            None
        }
    });

    scan(&mut report, "cocommutativity", &basis, |m| {
        let d = env.coproduct(&env.pbw(m.clone()));
        let f = env.permute(&d, &[1, 0]);
        (f != d).then(|| witness(env, &format!("at {}", name(m)), &f, &d))
    });

    let mut mult_fail = None;
    'outer: for a in &basis {
        let da = env.coproduct(&env.pbw(a.clone()));
        for b in &basis {
            let ab = env.mul(&env.pbw(a.clone()), &env.pbw(b.clone()));
            let l = env.coproduct(&ab);
            let r = env.mul(&da, &env.coproduct(&env.pbw(b.clone())));
            if l != r {
                mult_fail = Some(witness(env, &format!("Δ({}·{})", name(a), name(b)), &l, &r));
                break 'outer;
            }
        }
    }
    match mult_fail {
        Some(w) => report.push("multiplicativity", false, w),
        None => report.push("multiplicativity", true, format!("{} pairs", basis.len() * basis.len())),
    }

    let apply_s_leg = |x: &UElement, leg: usize| -> UElement {
        // S on one leg of a 2-tensor, then multiply
        let mut acc = env.zero(1);
        for (k, c) in x.coeffs().iter().enumerate() {
            for (w, coef) in c.terms() {
                let (a, b) = if leg == 0 {
                    (antipode(env, &w[0]), env.pbw(w[1].clone()))
                } else {
                    (env.pbw(w[0].clone()), antipode(env, &w[1]))
                };
                acc = acc.add_ref(&env.mul(&a, &b).scale(coef).shift(k));
            }
        }
        acc
    };
    scan(&mut report, "antipode", &basis, |m| {
        let x = env.pbw(m.clone());
        let d = env.coproduct(&x);
        let eps = env.counit(&x);
        let unit = env.one(1);
        let target = eps.coeffs().iter().enumerate().fold(env.zero(1), |acc, (k, c)| {
            acc.add_ref(&unit.scale(c).shift(k))
        });
        let l = apply_s_leg(&d, 0);
        if l != target {
            return Some(witness(env, &format!("μ(S⊗id)Δ at {}", name(m)), &l, &target));
        }
        let r = apply_s_leg(&d, 1);
        (r != target).then(|| witness(env, &format!("μ(id⊗S)Δ at {}", name(m)), &r, &target))
    });
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::int;
    use crate::hopf::lie::LieAlgebra;
    use crate::hopf::uenv::Mode;

    fn heis3() -> LieAlgebra {
        LieAlgebra::new("heis3", &["X", "Y", "Z"], &[("X", "Y", &[("Z", int(1))])]).unwrap()
    }

    #[test]
    fn heisenberg_passes() {
        let env = UEnv::new(heis3(), Mode::Deformed, 4);
        let r = hopf_axiom_check(&env, 3);
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn corrupted_antipode_is_caught() {
        let env = UEnv::new(heis3(), Mode::Deformed, 4);
        let r = hopf_axiom_check_with(&env, 2, &corrupted_antipode(0));
        let f = r.first_failure().expect("must fail");
        assert_eq!(f.id, "antipode");
        assert!(f.detail.contains("at X"), "{}", f.detail);
    }
}
