//! Dense matrices over an exact field with deterministic row reduction.

use std::fmt;

use num_traits::{One, Zero};

use super::ratfun::RationalFunction;
use super::rational::Rational;
use super::ring::{Additive, Ring};

/// A commutative field with exact equality.
pub trait Field: Ring {
    fn zero() -> Self;
    fn one() -> Self;
    fn inv(&self) -> Option<Self>;
}

impl Field for Rational {
    fn zero() -> Self {
        <Rational as Zero>::zero()
    }
    fn one() -> Self {
        <Rational as One>::one()
    }
    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
}

impl Field for RationalFunction {
    fn zero() -> Self {
        RationalFunction::zero()
    }
    fn one() -> Self {
        RationalFunction::one()
    }
    fn inv(&self) -> Option<Self> {
        RationalFunction::inv(self)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F: Field> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![F::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, F::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<F>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix");
        Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &F {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: F) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[F] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Additive::vanishes)
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.cols, o.rows, "matrix product shape");
        let mut out: Matrix<F> = Matrix::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.vanishes() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = o.get(k, j);
                    if b.vanishes() {
                        continue;
                    }
                    let v = out.get(i, j).add_ref(&a.mul_ref(b));
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn sub(&self, o: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a.sub_ref(b)).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        let mut out = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    /// Kronecker product `self ⊗ o`.
    pub fn kron(&self, o: &Self) -> Self {
        let mut out: Matrix<F> = Matrix::zeros(self.rows * o.rows, self.cols * o.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.vanishes() {
                    continue;
                }
                for k in 0..o.rows {
                    for l in 0..o.cols {
                        out.set(i * o.rows + k, j * o.cols + l, a.mul_ref(o.get(k, l)));
                    }
                }
            }
        }
        out
    }

    /// Reduced row echelon form. Pivot search scans columns left to right and
    /// takes the first row with a nonzero entry. Returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self.get(i, c).vanishes()) else {
                continue;
            };
            if p != r {
                for j in 0..self.cols {
                    self.data.swap(p * self.cols + j, r * self.cols + j);
                }
            }
            let inv = self.get(r, c).inv().expect("nonzero pivot");
            for j in c..self.cols {
                let v = self.get(r, j).mul_ref(&inv);
                self.set(r, j, v);
            }
            for i in 0..self.rows {
                if i == r {
                    continue;
                }
                let f = self.get(i, c).clone();
                if f.vanishes() {
                    continue;
                }
                for j in c..self.cols {
                    let rj = self.get(r, j);
                    if rj.vanishes() {
                        continue;
                    }
                    let v = self.get(i, j).sub_ref(&f.mul_ref(rj));
                    self.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    /// Rank over `F` by exact row reduction.
    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    /// Nonzero rows of the reduced row echelon form.
    pub fn row_basis(&self) -> Matrix<F> {
        let mut m = self.clone();
        let k = m.rref().len();
        m.data.truncate(k * m.cols);
        m.rows = k;
        m
    }

    pub fn inverse(&self) -> Option<Self> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut aug = Matrix::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, F::one());
        }
        let piv = aug.rref();
        if piv.len() < n || piv[n - 1] >= n {
            return None;
        }
        let mut out = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                out.set(i, j, aug.get(i, n + j).clone());
            }
        }
        Some(out)
    }

    /// First `(row, col)` where the two matrices differ.
    pub fn first_difference(&self, o: &Self) -> Option<(usize, usize)> {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        (0..self.rows * self.cols)
            .find(|&k| self.data[k] != o.data[k])
            .map(|k| (k / self.cols, k % self.cols))
    }
}

/// Rank of a matrix over its entry field.
pub fn rank<F: Field>(m: &Matrix<F>) -> usize {
    m.rank()
}

impl<F: Field + fmt::Display> fmt::Display for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::int;

    fn m(rows: &[&[i64]]) -> Matrix<Rational> {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect())
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&Matrix::<Rational>::identity(3)), 3);
        assert_eq!(rank(&Matrix::<Rational>::zeros(2, 5)), 0);
        assert_eq!(rank(&m(&[&[1, 2], &[2, 4]])), 1);
    }

    #[test]
    fn inverse_roundtrip() {
        let a = m(&[&[2, 1], &[1, 1]]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv), Matrix::identity(2));
        assert!(m(&[&[1, 2], &[2, 4]]).inverse().is_none());
    }

    #[test]
    fn rank_over_rational_functions() {
        let q = RationalFunction::q();
        let one = RationalFunction::one();
        // [[q, 1], [q^2, q]] has rank 1 over Q(q)
        let a = Matrix::from_rows(vec![vec![q.clone(), one.clone()], vec![q.mul_ref(&q), q.clone()]]);
        assert_eq!(a.rank(), 1);
        let b = Matrix::from_rows(vec![vec![q.clone(), one.clone()], vec![one, q]]);
        assert_eq!(b.rank(), 2);
    }
}
