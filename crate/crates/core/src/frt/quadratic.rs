use super::rmatrix::RMatrix;
use crate::algebra::{Additive, Matrix, RationalFunction};
use crate::error::{Error, Result};

type Q = RationalFunction;

/// Free algebra on `t_ij` modulo quadratic relations, stored as the reduced
/// row space inside the degree-2 words.
#[derive(Clone, Debug)]
pub struct QuadraticAlgebra {
    n: usize,
    names: Vec<String>,
    relations: Matrix<Q>,
}

/// Degree-`d` dimension against the commutative benchmark.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Flatness {
    pub degree: u32,
    pub dim: usize,
    pub benchmark: usize,
}

impl Flatness {
    pub fn is_flat(&self) -> bool {
        self.dim == self.benchmark
    }
}

fn binom(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// `R T₁T₂ - T₂T₁ R = 0` expanded entrywise and row-reduced.
pub fn frt_relations(r: &RMatrix) -> QuadraticAlgebra {
    let n = r.n();
    let g = n * n;
    let gen = |i: usize, j: usize| i * n + j;
    let word = |a: usize, b: usize| a * g + b;
    let mut rows = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for l in 0..n {
                    let mut row = vec![Q::zero(); g * g];
                    for a in 0..n {
                        for b in 0..n {
                            // R_{ij,ab} t_ak t_bl
                            let c = r.entry(i, j, a, b);
                            if !c.is_zero() {
                                let w = word(gen(a, k), gen(b, l));
                                row[w] = row[w].add_ref(c);
                            }
                            // t_jb t_ia R_{ab,kl}
                            let c = r.entry(a, b, k, l);
                            if !c.is_zero() {
                                let w = word(gen(j, b), gen(i, a));
                                row[w] = row[w].sub_ref(c);
                            }
                        }
                    }
                    rows.push(row);
                }
            }
        }
    }
    let names = (0..n).flat_map(|i| (0..n).map(move |j| format!("t{}{}", i + 1, j + 1))).collect();
    QuadraticAlgebra { n, names, relations: Matrix::from_rows(rows).row_basis() }
}

impl QuadraticAlgebra {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[String] {
        &self.names
    }

    fn g(&self) -> usize {
        self.names.len()
    }

    pub fn relation_count(&self) -> usize {
        self.relations.rows()
    }

    pub fn relations(&self) -> &Matrix<Q> {
        &self.relations
    }

    /// Degree-2 vector from `(coefficient, left generator, right generator)`.
    pub fn quadratic(&self, terms: &[(Q, usize, usize)]) -> Vec<Q> {
        let g = self.g();
        let mut v = vec![Q::zero(); g * g];
        for (c, a, b) in terms {
            v[a * g + b] = v[a * g + b].add_ref(c);
        }
        v
    }

    /// Whether a degree-2 element lies in the span of the relations.
    pub fn in_relations(&self, v: &[Q]) -> bool {
        in_span(&self.relations, v)
    }

    /// Rows `x·r` and `r·x` spanning the degree-3 part of the ideal.
    fn ideal3(&self) -> Matrix<Q> {
        let g = self.g();
        let mut rows = Vec::new();
        for r in 0..self.relations.rows() {
            let rel = self.relations.row(r);
            for x in 0..g {
                let mut left = vec![Q::zero(); g * g * g];
                let mut right = vec![Q::zero(); g * g * g];
                for (w, c) in rel.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    left[x * g * g + w] = c.clone();
                    right[w * g + x] = c.clone();
                }
                rows.push(left);
                rows.push(right);
            }
        }
        if rows.is_empty() {
            return Matrix::zeros(0, g * g * g);
        }
        Matrix::from_rows(rows).row_basis()
    }

    /// Dimension of the degree-`d` component, `d ∈ {2, 3}`.
    pub fn flatness_dim(&self, d: u32) -> Result<Flatness> {
        let g = self.g();
        let dim = match d {
            2 => g * g - self.relations.rows(),
            3 => g * g * g - self.ideal3().rows(),
            _ => return Err(Error::Invalid(format!("flatness degree must be 2 or 3, got {d}"))),
        };
        Ok(Flatness { degree: d, dim, benchmark: binom(g + d as usize - 1, d as usize) })
    }

    /// Generators `x` for which `e·x - x·e` is not in the degree-3 ideal.
    pub fn non_commuting_generators(&self, e: &[Q]) -> Vec<usize> {
        let g = self.g();
        let ideal = self.ideal3();
        (0..g)
            .filter(|&x| {
                let mut v = vec![Q::zero(); g * g * g];
                for (w, c) in e.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    v[w * g + x] = v[w * g + x].add_ref(c);
                    v[x * g * g + w] = v[x * g * g + w].sub_ref(c);
                }
                !in_span(&ideal, &v)
            })
            .collect()
    }

    /// Relabels generators `t_ij -> t_{perm[i] perm[j]}`.
    pub fn relabel(&self, perm: &[usize]) -> Self {
        let (n, g) = (self.n, self.g());
        let map = |x: usize| perm[x / n] * n + perm[x % n];
        let rows: Vec<Vec<Q>> = (0..self.relations.rows())
            .map(|r| {
                let mut v = vec![Q::zero(); g * g];
                for (w, c) in self.relations.row(r).iter().enumerate() {
                    v[map(w / g) * g + map(w % g)] = c.clone();
                }
                v
            })
            .collect();
        let relations = if rows.is_empty() { Matrix::zeros(0, g * g) } else { Matrix::from_rows(rows).row_basis() };
        QuadraticAlgebra { n, names: self.names.clone(), relations }
    }

    pub fn same_relations(&self, other: &Self) -> bool {
        self.relations == other.relations
    }

    pub fn render_vector(&self, v: &[Q]) -> String {
        let g = self.g();
        let mut parts = Vec::new();
        for (w, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let word = format!("{}*{}", self.names[w / g], self.names[w % g]);
            let (text, neg) = (c.to_string(), c.neg_ref().to_string());
            let (sign, body) = if text.starts_with('-') && !neg.starts_with('-') { ("-", neg) } else { ("", text) };
            let term = if body == "1" {
                word
            } else if body.contains([' ', '/']) {
                format!("({body})*{word}")
            } else {
                format!("{body}*{word}")
            };
            let text = format!("{sign}{term}");
            parts.push(text);
        }
        if parts.is_empty() {
            return "0".into();
        }
        parts.join(" + ").replace("+ -", "- ")
    }

    /// One relation per line, `… = 0`.
    pub fn render(&self) -> String {
        (0..self.relations.rows()).map(|r| format!("{} = 0", self.render_vector(self.relations.row(r)))).collect::<Vec<_>>().join("\n")
    }
}

fn in_span(basis: &Matrix<Q>, v: &[Q]) -> bool {
    if v.iter().all(Q::is_zero) {
        return true;
    }
    let mut rows: Vec<Vec<Q>> = (0..basis.rows()).map(|r| basis.row(r).to_vec()).collect();
    rows.push(v.to_vec());
    Matrix::from_rows(rows).rank() == basis.rows()
}

/// `ad - c·bc` for `a = t11, b = t12, c = t21, d = t22`.
pub fn quantum_determinant(q: &QuadraticAlgebra, c: &Q) -> Vec<Q> {
    q.quadratic(&[(Q::one(), 0, 3), (c.neg_ref(), 1, 2)])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_gives_commutators() {
        let qa = frt_relations(&RMatrix::identity(2));
        assert_eq!(qa.relation_count(), 6);
        for a in 0..4 {
            for b in 0..4 {
                let v = qa.quadratic(&[(Q::one(), a, b), (Q::one().neg_ref(), b, a)]);
                assert!(qa.in_relations(&v));
            }
        }
        assert_eq!(qa.flatness_dim(2).unwrap(), Flatness { degree: 2, dim: 10, benchmark: 10 });
        assert!(frt_relations(&RMatrix::identity(1)).relation_count() == 0);
    }

    #[test]
    fn standard_r_pattern() {
        let qa = frt_relations(&RMatrix::standard_sl2());
        let ab = qa.quadratic(&[(Q::one(), 0, 1), (Q::q().neg_ref(), 1, 0)]);
        assert!(qa.in_relations(&ab), "{}", qa.render());
        assert!(qa.flatness_dim(4).is_err());
    }

    #[test]
    fn standard_r_flat_to_3() {
        let qa = frt_relations(&RMatrix::standard_sl2());
        assert_eq!(qa.flatness_dim(2).unwrap().dim, 10);
        assert_eq!(qa.flatness_dim(3).unwrap(), Flatness { degree: 3, dim: 20, benchmark: 20 });
    }

    #[test]
    fn diagonal_counterexample_deficit() {
        let f = frt_relations(&RMatrix::diagonal_counterexample()).flatness_dim(2).unwrap();
        assert!(f.dim < 10, "{f:?}");
    }

    #[test]
    fn determinant_centrality() {
        let qa = frt_relations(&RMatrix::standard_sl2());
        let ad_qbc = quantum_determinant(&qa, &Q::q());
        assert!(qa.non_commuting_generators(&ad_qbc).is_empty());
        let ad_qinv_bc = quantum_determinant(&qa, &Q::q_pow(-1));
        assert_eq!(qa.non_commuting_generators(&ad_qinv_bc), vec![0, 3]);
        // da - q^{-1} bc agrees with ad - q bc modulo the relations
        let da = qa.quadratic(&[(Q::one(), 3, 0), (Q::q_pow(-1).neg_ref(), 1, 2)]);
        let diff: Vec<Q> = da.iter().zip(&ad_qbc).map(|(x, y)| x.sub_ref(y)).collect();
        assert!(qa.in_relations(&diff));
    }

    #[test]
    fn relabel_equivariance() {
        let r = RMatrix::standard_sl2();
        let swap = [1, 0];
        let direct = frt_relations(&r.relabel(&swap));
        assert!(direct.same_relations(&frt_relations(&r).relabel(&swap)));
        assert!(!direct.same_relations(&frt_relations(&r)));
    }
}
