use proptest::prelude::*;

use starforge::algebra::{Additive, Monomial, RationalFunction, Ring, Series, TensorElement, Vars};
use starforge::double::{Elem, FdHopf, FiniteGroup, PairedHopf};
use starforge::frt::frt_relations;
use starforge::hopf::{pbw_normal_form, Chooser, Mode, UEnv};
use starforge::parse::{parse_polynomial, parse_ratfun};
use starforge::shipped;
use starforge::starprod::{moyal_star, SymplecticStructure, NU};
use starforge::verify::random::{random_polynomial, rng};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn polynomial_render_parses_back(seed in any::<u64>(), nvars in 1usize..4, degree in 0u32..5) {
        let vars = Vars::indexed("x", nvars);
        let p = random_polynomial(&mut rng(seed), &vars, degree, 6);
        prop_assert_eq!(parse_polynomial(&p.to_string(), &vars).unwrap(), p);
    }

    #[test]
    fn ratfun_render_parses_back(a in -5i64..6, b in -5i64..6, k in -3i32..4) {
        let f = RationalFunction::q_pow(k)
            .scale(&starforge::algebra::rational::int(a))
            .add_ref(&RationalFunction::from_rational(starforge::algebra::rational::int(b)));
        prop_assert_eq!(parse_ratfun(&f.to_string()).unwrap(), f);
    }

    #[test]
    fn moyal_is_associative_and_unital(seed in any::<u64>()) {
        let s = SymplecticStructure::standard(2);
        let mut r = rng(seed);
        let [u, v, w] = std::array::from_fn(|_| random_polynomial(&mut r, s.vars(), 3, 3));
        let c = |p: &starforge::algebra::Polynomial| Series::constant(NU, 5, p.clone());
        let star = |a: &Series<_>, b: &Series<_>| a.try_bilinear(b, &u.zero_like(), |x, y, k| moyal_star(x, y, &s, k)).unwrap();
        prop_assert_eq!(star(&star(&c(&u), &c(&v)), &c(&w)), star(&c(&u), &star(&c(&v), &c(&w))));
        let one = starforge::algebra::Polynomial::one(s.vars());
        prop_assert_eq!(moyal_star(&u, &one, &s, 5).unwrap(), c(&u));
    }

    #[test]
    fn series_ring_laws(seed in any::<u64>()) {
        let vars = Vars::indexed("x", 2);
        let mut r = rng(seed);
        let mk = |r: &mut _| Series::new(NU, 3, &starforge::algebra::Polynomial::zero(&vars),
            (0..4).map(|_| random_polynomial(r, &vars, 2, 3)).collect());
        let (a, b, c) = (mk(&mut r), mk(&mut r), mk(&mut r));
        prop_assert_eq!(a.add_ref(&b).sub_ref(&b), a.clone());
        prop_assert_eq!(a.mul_ref(&b.add_ref(&c)), a.mul_ref(&b).add_ref(&a.mul_ref(&c)));
        prop_assert_eq!(a.mul_ref(&b).mul_ref(&c), a.mul_ref(&b.mul_ref(&c)));
    }

    #[test]
    fn pbw_leading_part_is_the_sorted_word(seed in any::<u64>(), alg in prop::sample::select(vec!["sl2", "heis3", "borel_sl2"])) {
        let lie = shipped::lie_algebra(alg).unwrap();
        let env = UEnv::new(lie.clone(), Mode::Deformed, 6);
        let mut r = rng(seed);
        let word = starforge::verify::random::random_word(&mut r, lie.dim(), 6);
        let nf = pbw_normal_form(&env, &word, Chooser::Random(&mut r));
        let mut e = vec![0u32; lie.dim()];
        for &g in &word {
            e[g] += 1;
        }
        prop_assert_eq!(nf.coeff(0), &TensorElement::basis(vec![Monomial(e)]));
        prop_assert_eq!(nf, pbw_normal_form(&env, &word, Chooser::Leftmost));
    }

    #[test]
    fn double_product_is_associative(x in 0usize..36, y in 0usize..36, z in 0usize..36) {
        let p = PairedHopf::canonical(FdHopf::group_algebra(&FiniteGroup::s3())).unwrap();
        let b = |k: usize| { let (s, i) = p.split(k); Elem::basis(vec![s, i]) };
        let (u, v, w) = (b(x), b(y), b(z));
        prop_assert_eq!(p.double_mul(&p.double_mul(&u, &v), &w), p.double_mul(&u, &p.double_mul(&v, &w)));
    }

    #[test]
    fn frt_is_equivariant_under_relabeling(
        perm in Just(vec![0usize, 1]).prop_shuffle(),
        which in prop::sample::select(vec!["sl2q", "nonflat", "identity"]),
    ) {
        let r = shipped::r_matrix(which).unwrap();
        let qa = frt_relations(&r);
        prop_assert!(frt_relations(&r.relabel(&perm)).same_relations(&qa.relabel(&perm)));
        prop_assert_eq!(frt_relations(&r.relabel(&perm)).relation_count(), qa.relation_count());
    }
}
