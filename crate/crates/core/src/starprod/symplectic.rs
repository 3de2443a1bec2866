use num_traits::{One, Zero};

use crate::algebra::{Matrix, Rational, Vars};
use crate::error::{Error, Result};

/// Constant Poisson tensor `Λ` on `ℝ^{2ℓ}` with coordinates
/// `x1..xℓ` (positions) and `x(ℓ+1)..x(2ℓ)` (momenta).
#[derive(Clone, Debug, PartialEq)]
pub struct SymplecticStructure {
    ell: usize,
    lambda: Vec<Vec<Rational>>,
    vars: Vars,
    /// nonzero entries `(i, j, Λ^{ij})`
    support: Vec<(usize, usize, Rational)>,
}

impl SymplecticStructure {
    /// The block form `[[0, -I], [I, 0]]`.
    pub fn standard(ell: usize) -> Self {
        assert!(ell >= 1, "ell must be positive");
        let n = 2 * ell;
        let mut m = vec![vec![Rational::zero(); n]; n];
        for k in 0..ell {
            m[k][ell + k] = -Rational::one();
            m[ell + k][k] = Rational::one();
        }
        Self::from_matrix_unchecked(ell, m)
    }

    /// Validates antisymmetry and invertibility.
    pub fn from_matrix(ell: usize, lambda: Vec<Vec<Rational>>) -> Result<Self> {
        let n = 2 * ell;
        if ell == 0 || lambda.len() != n || lambda.iter().any(|r| r.len() != n) {
            return Err(Error::Dimension(format!("Λ must be {n}x{n}")));
        }
        for (i, row) in lambda.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                if *x != -&lambda[j][i] {
                    return Err(Error::Validation(format!("Λ not antisymmetric at ({}, {})", i + 1, j + 1)));
                }
            }
        }
        if Matrix::from_rows(lambda.clone()).rank() != n {
            return Err(Error::NotInvertible("Λ".into()));
        }
        Ok(Self::from_matrix_unchecked(ell, lambda))
    }

    /// No validation; used to build deliberately broken structures.
    pub fn from_matrix_unchecked(ell: usize, lambda: Vec<Vec<Rational>>) -> Self {
        let mut support = Vec::new();
        for (i, row) in lambda.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                if !x.is_zero() {
                    support.push((i, j, x.clone()));
                }
            }
        }
        SymplecticStructure { ell, lambda, vars: Vars::indexed("x", 2 * ell), support }
    }

    /// Standard structure with the sign of one entry `Λ^{ij}` flipped.
    pub fn with_flipped_entry(ell: usize, i: usize, j: usize) -> Self {
        let mut m = Self::standard(ell).lambda;
        m[i][j] = -m[i][j].clone();
        if m[i][j].is_zero() {
            m[i][j] = Rational::one();
        }
        Self::from_matrix_unchecked(ell, m)
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    pub fn dim(&self) -> usize {
        2 * self.ell
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn entry(&self, i: usize, j: usize) -> &Rational {
        &self.lambda[i][j]
    }

    pub fn matrix(&self) -> &[Vec<Rational>] {
        &self.lambda
    }

    pub(crate) fn support(&self) -> &[(usize, usize, Rational)] {
        &self.support
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::int;

    #[test]
    fn standard_block() {
        let s = SymplecticStructure::standard(2);
        assert_eq!(s.entry(0, 2), &int(-1));
        assert_eq!(s.entry(2, 0), &int(1));
        assert_eq!(s.entry(0, 1), &int(0));
        assert!(SymplecticStructure::from_matrix(2, s.matrix().to_vec()).is_ok());
        assert_eq!(s.vars().names(), ["x1", "x2", "x3", "x4"]);
    }

    #[test]
    fn rejects_bad_matrices() {
        let bad = SymplecticStructure::with_flipped_entry(1, 0, 1);
        assert!(SymplecticStructure::from_matrix(1, bad.matrix().to_vec()).is_err());
        let zero = vec![vec![int(0); 2]; 2];
        assert!(matches!(SymplecticStructure::from_matrix(1, zero), Err(Error::NotInvertible(_))));
    }
}
