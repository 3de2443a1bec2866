//! Library results against independent test-side computations.

use starforge::algebra::rational::{binomial, factorial, int, rat};
use starforge::algebra::{Additive, Matrix, Polynomial, Rational, RationalFunction, Ring, Series};
use starforge::double::{Elem, FdHopf, FiniteGroup, PairedHopf};
use starforge::frt::{frt_relations, RMatrix};
use starforge::hopf::{Mode, UEnv};
use starforge::parse::parse_polynomial;
use starforge::shipped;
use starforge::smash::{GroupModel, LambdaStar};
use starforge::starprod::{moyal_star, StarProduct, SymplecticStructure, NU};

/// `Σ_k ν^k/k! P^k(u, v)` with `P = ∂₂⊗∂₁ - ∂₁⊗∂₂`, binomially expanded.
fn moyal_oracle(u: &Polynomial, v: &Polynomial, order: usize) -> Series<Polynomial> {
    let zero = Polynomial::zero(u.vars());
    let mut coeffs = Vec::new();
    for k in 0..=order as u32 {
        let mut pk = zero.clone();
        for j in 0..=k {
            let sign = if (k - j) % 2 == 0 { int(1) } else { int(-1) };
            let du = u.derive_multi(&[k - j, j]);
            let dv = v.derive_multi(&[j, k - j]);
            pk = pk.add_ref(&du.mul_ref(&dv).scale(&(binomial(k, j) * sign)));
        }
        coeffs.push(pk.scale(&(int(1) / factorial(k))));
    }
    Series::new(NU, order, &zero, coeffs)
}

#[test]
fn moyal_matches_binomial_expansion() {
    let s = SymplecticStructure::standard(1);
    let samples = ["x1^3*x2 - 2*x2^2", "x1^2*x2^2 + x1", "1/2*x2^3", "x1*x2 + 3"];
    for a in samples {
        for b in samples {
            let (u, v) = (parse_polynomial(a, s.vars()).unwrap(), parse_polynomial(b, s.vars()).unwrap());
            assert_eq!(moyal_star(&u, &v, &s, 5).unwrap(), moyal_oracle(&u, &v, 5), "{a} ⋆ {b}");
        }
    }
}

#[test]
fn lambda_star_on_the_line() {
    let l = rat(1, 3);
    let star = LambdaStar::new(GroupModel::rn(1), l.clone(), 2).unwrap();
    let q = parse_polynomial("x1", star.vars()).unwrap();
    let p = parse_polynomial("x2", star.vars()).unwrap();
    let qp = q.mul_ref(&p);
    let expect = |shift: Rational| Series::new(NU, 2, &qp.zero_like(), vec![qp.clone(), Polynomial::constant(star.vars(), shift)]);
    // t = -2ν, q⋆p = qp + tλ and p⋆q = qp + t(λ - 1)
    assert_eq!(star.star(&q, &p, 2).unwrap(), expect(int(-2) * &l));
    assert_eq!(star.star(&p, &q, 2).unwrap(), expect(int(-2) * (&l - int(1))));
}

#[test]
fn casimir_is_central() {
    let env = UEnv::new(shipped::lie_algebra("sl2").unwrap(), Mode::Deformed, 4);
    let g = |n: &str| env.generator_named(n).unwrap();
    let (h, e, f) = (g("H"), g("E"), g("F"));
    let c = env.mul(&e, &f).add_ref(&env.mul(&f, &e)).add_ref(&env.mul(&h, &h).scale(&rat(1, 2)));
    for x in [&h, &e, &f] {
        assert!(env.mul(&c, x).sub_ref(&env.mul(x, &c)).is_zero());
    }
}

#[test]
fn double_product_is_the_conjugation_rule() {
    let g = FiniteGroup::s3();
    let p = PairedHopf::canonical(FdHopf::group_algebra(&g)).unwrap();
    let n = g.order();
    for x in 0..n {
        for h in 0..n {
            for y in 0..n {
                for h2 in 0..n {
                    let got = p.double_mul(&Elem::basis(vec![x, h]), &Elem::basis(vec![y, h2]));
                    let conj = g.mul(g.mul(h, y), g.inverse(h));
                    let expect = if x == conj { Elem::basis(vec![x, g.mul(h, h2)]) } else { Elem::zero(2) };
                    assert_eq!(got, expect, "x={x} h={h} y={y} h'={h2}");
                }
            }
        }
    }
}

#[test]
fn standard_frt_relations_are_the_quantum_matrix_relations() {
    type Q = RationalFunction;
    let qa = frt_relations(&RMatrix::standard_sl2());
    let q = Q::q();
    let one = Q::one();
    let (a, b, c, d) = (0, 1, 2, 3);
    let m = |x: usize, y: usize, k: &Q| qa.quadratic(&[(one.clone(), x, y), (k.neg_ref(), y, x)]);
    let rows = vec![
        m(a, b, &q),
        m(a, c, &q),
        m(b, d, &q),
        m(c, d, &q),
        m(b, c, &one),
        qa.quadratic(&[(one.clone(), a, d), (one.neg_ref(), d, a), (q.sub_ref(&Q::q_pow(-1)).neg_ref(), b, c)]),
    ];
    assert_eq!(qa.relations(), &Matrix::from_rows(rows).row_basis());
}

#[test]
fn identity_flatness_is_the_multiset_count() {
    // multisets of size d from g letters, counted by brute force
    fn count(g: usize, d: usize, min: usize) -> usize {
        if d == 0 {
            return 1;
        }
        (min..g).map(|x| count(g, d - 1, x)).sum()
    }
    for n in 1..=2 {
        let qa = frt_relations(&RMatrix::identity(n));
        for d in 2..=3u32 {
            assert_eq!(qa.flatness_dim(d).unwrap().dim, count(n * n, d as usize, 0));
        }
    }
}
