use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::poly::monomials_up_to;
use crate::algebra::{Polynomial, Rational, Vars};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Up to `max_terms` monomials of degree at most `degree` with small
/// nonzero coefficients, some of them halves.
pub fn random_polynomial(rng: &mut impl Rng, vars: &Vars, degree: u32, max_terms: usize) -> Polynomial {
    let basis = monomials_up_to(vars.len(), degree);
    let mut p = Polynomial::zero(vars);
    for _ in 0..rng.gen_range(1..=max_terms) {
        let m = basis[rng.gen_range(0..basis.len())].clone();
        let mut num = rng.gen_range(1..=4i64);
        if rng.gen_bool(0.5) {
            num = -num;
        }
        let den = if rng.gen_bool(0.25) { 2 } else { 1 };
        p.add_term(m, Rational::new(num.into(), den.into()));
    }
    p
}

/// Word over `0..n` of length `1..=max_len`.
pub fn random_word(rng: &mut impl Rng, n: usize, max_len: usize) -> Vec<usize> {
    let len = rng.gen_range(1..=max_len);
    (0..len).map(|_| rng.gen_range(0..n)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seeded_streams_repeat() {
        let vars = Vars::indexed("x", 3);
        let a = random_polynomial(&mut rng(9), &vars, 3, 4);
        let b = random_polynomial(&mut rng(9), &vars, 3, 4);
        assert_eq!(a, b);
        assert!(a.degree().map_or(true, |d| d <= 3));
        let w = random_word(&mut rng(1), 3, 6);
        assert!(!w.is_empty() && w.len() <= 6 && w.iter().all(|&g| g < 3));
    }
}
