use super::random::{random_polynomial, rng};
use super::Options;
use crate::algebra::poly::monomials_up_to;
use crate::algebra::{Additive, Polynomial, Rational, Series, Vars};
use crate::error::Result;
use crate::report::Report;
use crate::starprod::{
    moyal_bracket, moyal_star_report, order_quantize, order_quantize_series, transport_product, MonomialStarCache,
    Moyal, OperatorSeries, Scheme, StandardStar, StarProduct, SymplecticStructure, NU,
};

/// Exact for products of three polynomials of degree at most 4.
const ORDER: usize = 6;

/// The Moyal bracket as a bilinear operation, so it can share the
/// monomial cache.
struct Bracket(SymplecticStructure);

impl StarProduct for Bracket {
    fn vars(&self) -> &Vars {
        self.0.vars()
    }

    fn star(&self, u: &Polynomial, v: &Polynomial, order: usize) -> Result<Series<Polynomial>> {
        moyal_bracket(u, v, &self.0, order)
    }
}

pub(super) fn monomials(vars: &Vars, degree: u32) -> Vec<Polynomial> {
    monomials_up_to(vars.len(), degree).into_iter().map(|m| Polynomial::monomial(vars, m, Rational::from_integer(1.into()))).collect()
}

fn constant(p: &Polynomial) -> Series<Polynomial> {
    Series::constant(NU, ORDER, p.clone())
}

fn structure(ell: usize, opts: &Options) -> SymplecticStructure {
    if opts.inject {
        SymplecticStructure::with_flipped_entry(ell, 0, ell)
    } else {
        SymplecticStructure::standard(ell)
    }
}

fn random_triples(opts: &Options, vars: &Vars, count: usize) -> Vec<[Polynomial; 3]> {
    let mut r = rng(opts.seed);
    (0..count)
        .map(|_| std::array::from_fn(|_| random_polynomial(&mut r, vars, 3, 4)))
        .collect()
}

/// `(u⋆v)⋆w = u⋆(v⋆w)` on every triple drawn from `polys`.
fn associative_exhaustive<S: StarProduct>(star: &S, polys: &[Polynomial]) -> Result<std::result::Result<String, String>> {
    let cache = MonomialStarCache::new(star, ORDER);
    let ser: Vec<_> = polys.iter().map(constant).collect();
    let mut prods = Vec::with_capacity(ser.len());
    for a in &ser {
        prods.push(ser.iter().map(|b| cache.star_series(a, b)).collect::<Result<Vec<_>>>()?);
    }
    for i in 0..ser.len() {
        for j in 0..ser.len() {
            for k in 0..ser.len() {
                let l = cache.star_series(&prods[i][j], &ser[k])?;
                let r = cache.star_series(&ser[i], &prods[j][k])?;
                if l != r {
                    return Ok(Err(format!(
                        "({}, {}, {}): (u⋆v)⋆w - u⋆(v⋆w) = {}",
                        polys[i],
                        polys[j],
                        polys[k],
                        l.sub_ref(&r)
                    )));
                }
            }
        }
    }
    let n = ser.len();
    Ok(Ok(format!("{} triples", n * n * n)))
}

fn associative_on<S: StarProduct>(star: &S, triples: &[[Polynomial; 3]]) -> Result<std::result::Result<String, String>> {
    let cache = MonomialStarCache::new(star, ORDER);
    for [u, v, w] in triples {
        let (su, sv, sw) = (constant(u), constant(v), constant(w));
        let l = cache.star_series(&cache.star_series(&su, &sv)?, &sw)?;
        let r = cache.star_series(&su, &cache.star_series(&sv, &sw)?)?;
        if l != r {
            return Ok(Err(format!("({u}, {v}, {w}): (u⋆v)⋆w - u⋆(v⋆w) = {}", l.sub_ref(&r))));
        }
    }
    Ok(Ok(format!("{} triples", triples.len())))
}

/// Moyal associativity on all monomial triples of degree at most 4 for
/// `ℓ = 1, 2`, and on seeded random triples of degree at most 3.
pub fn associativity(opts: &Options) -> Result<Report> {
    let mut report = Report::with_seed(opts.seed);
    for ell in 1..=2 {
        let s = structure(ell, opts);
        let polys = monomials(s.vars(), 4);
        report.record(format!("moyal.associativity.monomials_l{ell}"), associative_exhaustive(&Moyal(s), &polys)?);
    }
    let s = structure(2, opts);
    let triples = random_triples(opts, s.vars(), 200);
    report.record("moyal.associativity.random_l2", associative_on(&Moyal(s), &triples)?);
    Ok(report)
}

/// `2ν M(u, v) = u⋆v - v⋆u` coefficient-wise.
fn bracket_identity(s: &SymplecticStructure, u: &Polynomial, v: &Polynomial) -> Result<std::result::Result<(), String>> {
    let m = moyal_bracket(u, v, s, ORDER)?;
    let uv = moyal_star_report(u, v, s, ORDER + 1)?.value;
    let vu = moyal_star_report(v, u, s, ORDER + 1)?.value;
    let lhs = m.truncate(ORDER + 1).shift(1).scale(&Rational::from_integer(2.into()));
    let rhs = uv.sub_ref(&vu);
    if lhs == rhs {
        Ok(Ok(()))
    } else {
        Ok(Err(format!("({u}, {v}): 2ν·M - (u⋆v - v⋆u) = {}", lhs.sub_ref(&rhs))))
    }
}

fn jacobi_exhaustive(s: &SymplecticStructure, polys: &[Polynomial]) -> Result<std::result::Result<String, String>> {
    let br = Bracket(s.clone());
    let cache = MonomialStarCache::new(&br, ORDER);
    let ser: Vec<_> = polys.iter().map(constant).collect();
    let mut b = Vec::with_capacity(ser.len());
    for a in &ser {
        b.push(ser.iter().map(|c| cache.star_series(a, c)).collect::<Result<Vec<_>>>()?);
    }
    let n = ser.len();
    for i in 0..n {
        for j in 0..n {
            if b[i][j] != b[j][i].neg_ref() {
                return Ok(Err(format!("M({}, {}) + M({}, {}) != 0", polys[i], polys[j], polys[j], polys[i])));
            }
        }
    }
    // the cyclic sum is alternating once M is, so sorted triples suffice
    let mut count = 0;
    for i in 0..n {
        for j in i..n {
            for k in j..n {
                let sum = cache
                    .star_series(&b[i][j], &ser[k])?
                    .add_ref(&cache.star_series(&b[j][k], &ser[i])?)
                    .add_ref(&cache.star_series(&b[k][i], &ser[j])?);
                if !sum.is_zero() {
                    return Ok(Err(format!(
                        "({}, {}, {}): cyclic sum M(M(u,v),w) = {sum}",
                        polys[i], polys[j], polys[k]
                    )));
                }
                count += 1;
            }
        }
    }
    Ok(Ok(format!("{} pairs antisymmetric, {count} sorted triples", n * n)))
}

fn jacobi_on(s: &SymplecticStructure, triples: &[[Polynomial; 3]]) -> Result<std::result::Result<String, String>> {
    let br = Bracket(s.clone());
    let cache = MonomialStarCache::new(&br, ORDER);
    for [u, v, w] in triples {
        let (su, sv, sw) = (constant(u), constant(v), constant(w));
        let sum = cache
            .star_series(&cache.star_series(&su, &sv)?, &sw)?
            .add_ref(&cache.star_series(&cache.star_series(&sv, &sw)?, &su)?)
            .add_ref(&cache.star_series(&cache.star_series(&sw, &su)?, &sv)?);
        if !sum.is_zero() {
            return Ok(Err(format!("({u}, {v}, {w}): cyclic sum M(M(u,v),w) = {sum}")));
        }
    }
    Ok(Ok(format!("{} triples", triples.len())))
}

/// Bracket against the `⋆`-commutator and the Jacobi identity on the same
/// monomial and random sets as associativity.
pub fn bracket(opts: &Options) -> Result<Report> {
    let mut report = Report::with_seed(opts.seed);
    for ell in 1..=2 {
        let s = structure(ell, opts);
        let polys = monomials(s.vars(), 4);
        let mut witness = None;
        'pairs: for u in &polys {
            for v in &polys {
                if let Err(w) = bracket_identity(&s, u, v)? {
                    witness = Some(w);
                    break 'pairs;
                }
            }
        }
        let n = polys.len();
        report.record(format!("moyal.bracket_commutator.monomials_l{ell}"), witness.map_or(Ok(format!("{} pairs", n * n)), Err));
        report.record(format!("moyal.jacobi.monomials_l{ell}"), jacobi_exhaustive(&s, &polys)?);
    }
    let s = structure(2, opts);
    let triples = random_triples(opts, s.vars(), 200);
    let mut witness = None;
    'random: for [u, v, w] in &triples {
        for (a, b) in [(u, v), (v, w), (u, w)] {
            if let Err(e) = bracket_identity(&s, a, b)? {
                witness = Some(e);
                break 'random;
            }
        }
    }
    report.record("moyal.bracket_commutator.random_l2", witness.map_or(Ok(format!("{} pairs", 3 * triples.len())), Err));
    report.record("moyal.jacobi.random_l2", jacobi_on(&s, &triples)?);
    Ok(report)
}

/// `Ω(u ⋆ v) = Ω(u) ∘ Ω(v)` for symmetric ordering with Moyal and standard
/// ordering with the standard-ordered product, `ℓ = 1`.
pub fn ordering(opts: &Options) -> Result<Report> {
    let mut report = Report::with_seed(opts.seed);
    let s = structure(1, opts);
    let polys = monomials(s.vars(), 4);
    let standard = StandardStar::new(1);
    for scheme in [Scheme::Symmetric, Scheme::Standard] {
        let mut witness = None;
        'pairs: for u in &polys {
            for v in &polys {
                let prod = match scheme {
                    Scheme::Symmetric => {
                        let r = moyal_star_report(u, v, &s, 4)?;
                        if r.lossy {
                            witness = Some(format!("({u}, {v}): product truncated"));
                            break 'pairs;
                        }
                        r.value
                    }
                    Scheme::Standard => standard.star(u, v, 4)?,
                };
                let l = order_quantize_series(&prod, scheme)?;
                let r = order_quantize(u, scheme)?.compose(&order_quantize(v, scheme)?);
                if l != r {
                    witness = Some(format!("({u}, {v}): Ω(u⋆v) = {l} but Ω(u)Ω(v) = {r}"));
                    break 'pairs;
                }
            }
        }
        let id = match scheme {
            Scheme::Symmetric => "moyal.ordering.symmetric",
            Scheme::Standard => "moyal.ordering.standard",
        };
        let n = polys.len();
        report.record(id, witness.map_or(Ok(format!("{} pairs", n * n)), Err));
    }
    Ok(report)
}

/// `u ⋆ 1 = 1 ⋆ u = u` on monomials of degree at most `degree`.
pub(super) fn unit_check<S: StarProduct>(star: &S, degree: u32, order: usize) -> Result<std::result::Result<String, String>> {
    let one = Polynomial::one(star.vars());
    let polys = monomials(star.vars(), degree);
    for u in &polys {
        let expect = Series::constant(NU, order, u.clone());
        for (l, r) in [(u, &one), (&one, u)] {
            let got = star.star(l, r, order)?;
            if got != expect {
                return Ok(Err(format!("{l} ⋆ {r} = {got}")));
            }
        }
    }
    Ok(Ok(format!("{} basis elements", polys.len())))
}

/// `T = id + ν ∂₁∂_{ℓ+1}`, which fixes constants.
fn sample_transport(s: &SymplecticStructure, degree_bound: u32) -> Result<OperatorSeries> {
    let vars = s.vars().clone();
    let ell = s.ell();
    OperatorSeries::from_fn(&vars, 2, degree_bound, |r, m| {
        let p = Polynomial::monomial(&vars, m.clone(), Rational::from_integer(1.into()));
        match r {
            0 => p,
            1 => p.derive(0).derive(ell),
            _ => Polynomial::zero(&vars),
        }
    })
}

pub fn units(opts: &Options) -> Result<Report> {
    let mut report = Report::new();
    for ell in 1..=2 {
        let s = structure(ell, opts);
        report.record(format!("units.moyal_l{ell}"), unit_check(&Moyal(s.clone()), 4, 4)?);
        let m = Moyal(s.clone());
        let t = transport_product(sample_transport(&s, 8)?, &m)?;
        report.record(format!("units.transported_l{ell}"), unit_check(&t, 4, 2)?);
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ordering_and_units_pass() {
        let opts = Options::default();
        assert!(ordering(&opts).unwrap().passed());
        assert!(units(&opts).unwrap().passed());
    }

    #[test]
    fn injected_sign_error_breaks_the_bracket() {
        let s = SymplecticStructure::with_flipped_entry(1, 0, 1);
        let x = monomials(s.vars(), 1);
        let pair = x.iter().find(|p| p.to_string() == "x1").zip(x.iter().find(|p| p.to_string() == "x2")).unwrap();
        let w = bracket_identity(&s, pair.0, pair.1).unwrap().unwrap_err();
        assert!(w.starts_with("(x1, x2): 2ν·M"), "{w}");
    }
}
