use serde_json::Value;

use crate::algebra::{Additive, Matrix, RationalFunction};
use crate::error::{Error, Result};
use crate::parse::parse_ratfun;

type Q = RationalFunction;

/// `R ∈ End(V⊗V)` over `ℚ(q)`, rows and columns indexed by `i*n + j`.
#[derive(Clone, Debug, PartialEq)]
pub struct RMatrix {
    n: usize,
    m: Matrix<Q>,
}

impl RMatrix {
    /// Checks the shape and invertibility.
    pub fn new(n: usize, m: Matrix<Q>) -> Result<Self> {
        if n == 0 || m.rows() != n * n || m.cols() != n * n {
            return Err(Error::Dimension(format!("R must be {0}×{0} for n = {n}", n * n)));
        }
        if m.inverse().is_none() {
            return Err(Error::NotInvertible("R-matrix".into()));
        }
        Ok(RMatrix { n, m })
    }

    pub fn identity(n: usize) -> Self {
        RMatrix { n, m: Matrix::identity(n * n) }
    }

    /// `q` on `e_i⊗e_i`, `1` off the diagonal and `q - q^{-1}` at
    /// `(21, 12)`; gives `t11 t12 = q t12 t11`.
    pub fn standard_sl2() -> Self {
        let q = Q::q();
        let mut m = Matrix::identity(4);
        m.set(0, 0, q.clone());
        m.set(3, 3, q.clone());
        m.set(2, 1, Q::q().sub_ref(&Q::q_pow(-1)));
        RMatrix { n: 2, m }
    }

    /// `diag(1, q, 1, 1)`: a diagonal Yang-Baxter solution whose FRT
    /// algebra is too small in degree 2.
    pub fn diagonal_counterexample() -> Self {
        let mut m = Matrix::identity(4);
        m.set(1, 1, Q::q());
        RMatrix { n: 2, m }
    }

    /// `{"n": 2, "entries": [["q", "0", ..], ..]}` with entries over `q`.
    pub fn from_json(text: &str, origin: &str) -> Result<Self> {
        let schema = |m: &str| Error::Schema { path: origin.to_string(), message: m.to_string() };
        let v: Value = serde_json::from_str(text).map_err(|e| schema(&e.to_string()))?;
        let n = v["n"].as_u64().ok_or_else(|| schema("`n` must be a positive integer"))? as usize;
        let rows = v["entries"].as_array().ok_or_else(|| schema("`entries` must be an array of rows"))?;
        let mut out = Vec::new();
        for r in rows {
            let r = r.as_array().ok_or_else(|| schema("rows must be arrays"))?;
            let mut row = Vec::new();
            for e in r {
                let parsed = match e {
                    Value::String(s) => parse_ratfun(s)?,
                    Value::Number(x) => {
                        let i = x.as_i64().ok_or_else(|| schema("numeric entries must be integers"))?;
                        Q::from_rational(crate::algebra::rational::int(i))
                    }
                    _ => return Err(schema("entries are strings over q or integers")),
                };
                row.push(parsed);
            }
            out.push(row);
        }
        if out.len() != n * n || out.iter().any(|r| r.len() != n * n) {
            return Err(schema(&format!("entries must be {0}×{0}", n * n)));
        }
        RMatrix::new(n, Matrix::from_rows(out))
    }

    /// `identity`, `sl2q` or `diagonal`.
    pub fn builtin(name: &str) -> Result<Self> {
        match name {
            "identity" => Ok(Self::identity(2)),
            "sl2q" | "standard" => Ok(Self::standard_sl2()),
            "diagonal" | "nonflat" => Ok(Self::diagonal_counterexample()),
            other => Err(Error::Invalid(format!("unknown R-matrix `{other}`"))),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn matrix(&self) -> &Matrix<Q> {
        &self.m
    }

    pub fn entry(&self, i: usize, j: usize, k: usize, l: usize) -> &Q {
        self.m.get(i * self.n + j, k * self.n + l)
    }

    /// `(P⊗P) R (P⊗P)^{-1}` for the permutation matrix of `perm`
    /// (`e_i ↦ e_{perm[i]}`).
    pub fn relabel(&self, perm: &[usize]) -> Self {
        let n = self.n;
        let mut m = Matrix::zeros(n * n, n * n);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    for l in 0..n {
                        m.set(perm[i] * n + perm[j], perm[k] * n + perm[l], self.entry(i, j, k, l).clone());
                    }
                }
            }
        }
        RMatrix { n, m }
    }
}

/// Witness of a Yang-Baxter failure: first differing entry of the two sides
/// on `V^{⊗3}` and their difference.
#[derive(Clone, Debug, PartialEq)]
pub struct YbeWitness {
    pub row: usize,
    pub col: usize,
    pub difference: Q,
}

fn swap23(n: usize) -> Matrix<Q> {
    let d = n * n * n;
    let mut p = Matrix::zeros(d, d);
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                p.set(a * n * n + c * n + b, a * n * n + b * n + c, Q::one());
            }
        }
    }
    p
}

/// `R12 R13 R23 = R23 R13 R12` on `V^{⊗3}`.
pub fn ybe_check(r: &RMatrix) -> std::result::Result<(), YbeWitness> {
    let n = r.n;
    let id = Matrix::<Q>::identity(n);
    let r12 = r.m.kron(&id);
    let r23 = id.kron(&r.m);
    let p = swap23(n);
    let r13 = p.mul(&r12).mul(&p);
    let lhs = r12.mul(&r13).mul(&r23);
    let rhs = r23.mul(&r13).mul(&r12);
    match lhs.first_difference(&rhs) {
        None => Ok(()),
        Some((row, col)) => {
            Err(YbeWitness { row, col, difference: lhs.get(row, col).sub_ref(rhs.get(row, col)) })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ybe_examples() {
        for n in 1..=3 {
            assert!(ybe_check(&RMatrix::identity(n)).is_ok());
        }
        assert!(ybe_check(&RMatrix::standard_sl2()).is_ok());
        assert!(ybe_check(&RMatrix::diagonal_counterexample()).is_ok());
        let mut m = Matrix::identity(4);
        m.set(1, 2, Q::one());
        let w = ybe_check(&RMatrix::new(2, m).unwrap()).unwrap_err();
        assert!(!w.difference.is_zero());
    }

    #[test]
    fn json_fixture() {
        let text = r#"{"n": 2, "entries": [["q",0,0,0],[0,1,0,0],[0,"q - 1/q",1,0],[0,0,0,"q"]]}"#;
        assert_eq!(RMatrix::from_json(text, "sl2q").unwrap(), RMatrix::standard_sl2());
        let singular = r#"{"n": 1, "entries": [[0]]}"#;
        assert!(matches!(RMatrix::from_json(singular, "x"), Err(Error::NotInvertible(_))));
        assert!(matches!(RMatrix::from_json(r#"{"n": 2}"#, "x"), Err(Error::Schema { .. })));
    }
}
