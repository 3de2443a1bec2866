use num_traits::{One, Zero};

use super::group::FiniteGroup;
use crate::algebra::{Matrix, Rational, TensorElement};
use crate::error::{Error, Result};
use crate::report::Report;

/// Sparse coordinate vector, indices increasing.
pub type Vector = Vec<(usize, Rational)>;

/// Element of `A^{⊗k}` over basis indices.
pub type Elem = TensorElement<usize>;

/// Finite-dimensional Hopf algebra by structure tensors in a fixed basis.
#[derive(Clone, Debug, PartialEq)]
pub struct FdHopf {
    name: String,
    names: Vec<String>,
    /// `e_i e_j`
    mu: Vec<Vec<Vector>>,
    unit: Vector,
    /// `Δ(e_k)`
    delta: Vec<Vec<(usize, usize, Rational)>>,
    counit: Vec<Rational>,
    /// `S(e_j)`
    antipode: Vec<Vector>,
}

fn one() -> Rational {
    Rational::one()
}

fn vec_elem(v: &Vector) -> Elem {
    TensorElement::from_terms(1, v.iter().map(|(i, c)| (vec![*i], c.clone())))
}

impl FdHopf {
    /// Shapes are checked, axioms are not (see [`FdHopf::new`]).
    pub fn new_unchecked(
        name: &str,
        names: Vec<String>,
        mu: Vec<Vec<Vector>>,
        unit: Vector,
        delta: Vec<Vec<(usize, usize, Rational)>>,
        counit: Vec<Rational>,
        antipode: Vec<Vector>,
    ) -> Result<Self> {
        let n = names.len();
        let ok_vec = |v: &Vector| v.iter().all(|(i, _)| *i < n);
        let shapes = mu.len() == n
            && mu.iter().all(|r| r.len() == n && r.iter().all(ok_vec))
            && ok_vec(&unit)
            && delta.len() == n
            && delta.iter().all(|d| d.iter().all(|(i, j, _)| *i < n && *j < n))
            && counit.len() == n
            && antipode.len() == n
            && antipode.iter().all(ok_vec);
        if !shapes {
            return Err(Error::Dimension(format!("{name}: structure tensors do not match dimension {n}")));
        }
        let clean = |v: Vector| -> Vector {
            let e = vec_elem(&v);
            e.terms().map(|(w, c)| (w[0], c.clone())).collect()
        };
        Ok(FdHopf {
            name: name.to_string(),
            names,
            mu: mu.into_iter().map(|r| r.into_iter().map(clean).collect()).collect(),
            unit: clean(unit),
            delta,
            counit,
            antipode: antipode.into_iter().map(clean).collect(),
        })
    }

    /// Builds and runs [`fd_axiom_check`].
    pub fn new(
        name: &str,
        names: Vec<String>,
        mu: Vec<Vec<Vector>>,
        unit: Vector,
        delta: Vec<Vec<(usize, usize, Rational)>>,
        counit: Vec<Rational>,
        antipode: Vec<Vector>,
    ) -> Result<Self> {
        let h = Self::new_unchecked(name, names, mu, unit, delta, counit, antipode)?;
        h.validated()
    }

    pub fn validated(self) -> Result<Self> {
        let r = fd_axiom_check(&self);
        match r.first_failure() {
            None => Ok(self),
            Some(c) => Err(Error::Validation(format!("{}: {} fails: {}", self.name, c.id, c.detail))),
        }
    }

    /// The group algebra `kΓ`: grouplike basis.
    pub fn group_algebra(g: &FiniteGroup) -> Self {
        let n = g.order();
        let mu = (0..n).map(|a| (0..n).map(|b| vec![(g.mul(a, b), one())]).collect()).collect();
        let delta = (0..n).map(|a| vec![(a, a, one())]).collect();
        let antipode = (0..n).map(|a| vec![(g.inverse(a), one())]).collect();
        FdHopf::new_unchecked(
            &format!("k{}", g.name()),
            g.elements().to_vec(),
            mu,
            vec![(g.identity(), one())],
            delta,
            vec![one(); n],
            antipode,
        )
        .expect("shapes")
    }

    /// Functions on `Γ` in the basis of point masses `δ_g`.
    pub fn functions(g: &FiniteGroup) -> Self {
        let n = g.order();
        let mu = (0..n).map(|a| (0..n).map(|b| if a == b { vec![(a, one())] } else { vec![] }).collect()).collect();
        let delta = (0..n)
            .map(|c| {
                let mut d = Vec::new();
                for a in 0..n {
                    for b in 0..n {
                        if g.mul(a, b) == c {
                            d.push((a, b, one()));
                        }
                    }
                }
                d
            })
            .collect();
        let counit = (0..n).map(|a| if a == g.identity() { one() } else { Rational::zero() }).collect();
        let antipode = (0..n).map(|a| vec![(g.inverse(a), one())]).collect();
        FdHopf::new_unchecked(
            &format!("Fun({})", g.name()),
            g.elements().iter().map(|e| format!("δ{e}")).collect(),
            mu,
            (0..n).map(|a| (a, one())).collect(),
            delta,
            counit,
            antipode,
        )
        .expect("shapes")
    }

    /// The one-dimensional Hopf algebra `k`.
    pub fn trivial() -> Self {
        FdHopf::new_unchecked(
            "k",
            vec!["1".into()],
            vec![vec![vec![(0, one())]]],
            vec![(0, one())],
            vec![vec![(0, 0, one())]],
            vec![one()],
            vec![vec![(0, one())]],
        )
        .expect("shapes")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn basis(&self, i: usize) -> Elem {
        Elem::basis(vec![i])
    }

    pub fn unit(&self) -> Elem {
        vec_elem(&self.unit)
    }

    /// `1⊗..⊗1`.
    pub fn unit_k(&self, k: usize) -> Elem {
        let mut acc = self.unit();
        for _ in 1..k {
            acc = acc.tensor(&self.unit());
        }
        acc
    }

    pub fn product_vector(&self, i: usize, j: usize) -> &Vector {
        &self.mu[i][j]
    }

    pub fn coproduct_terms(&self, k: usize) -> &[(usize, usize, Rational)] {
        &self.delta[k]
    }

    pub fn counit_value(&self, i: usize) -> &Rational {
        &self.counit[i]
    }

    pub fn antipode_vector(&self, j: usize) -> &Vector {
        &self.antipode[j]
    }

    /// Componentwise product in `A^{⊗k}`.
    pub fn mul(&self, x: &Elem, y: &Elem) -> Elem {
        let k = x.arity();
        assert_eq!(k, y.arity(), "tensor arity mismatch");
        let mut out = Elem::zero(k);
        for (u, cu) in x.terms() {
            for (v, cv) in y.terms() {
                let mut partial: Vec<(Vec<usize>, Rational)> = vec![(Vec::with_capacity(k), cu * cv)];
                for leg in 0..k {
                    let prod = &self.mu[u[leg]][v[leg]];
                    if prod.is_empty() {
                        partial.clear();
                        break;
                    }
                    let mut next = Vec::with_capacity(partial.len() * prod.len());
                    for (w, c) in &partial {
                        for (i, ci) in prod {
                            let mut w2 = w.clone();
                            w2.push(*i);
                            next.push((w2, c * ci));
                        }
                    }
                    partial = next;
                }
                for (w, c) in partial {
                    out.add_term(w, c);
                }
            }
        }
        out
    }

    /// Applies a linear map on leg `pos` given on basis vectors.
    pub fn apply_at(&self, x: &Elem, pos: usize, f: impl Fn(usize) -> Elem) -> Elem {
        let img_arity = f(0).arity();
        let mut out = Elem::zero(x.arity() - 1 + img_arity);
        for (w, c) in x.terms() {
            for (v, cv) in f(w[pos]).terms() {
                let mut parts = w[..pos].to_vec();
                parts.extend(v.iter().copied());
                parts.extend(w[pos + 1..].iter().copied());
                out.add_term(parts, c * cv);
            }
        }
        out
    }

    pub fn coproduct_basis(&self, k: usize) -> Elem {
        TensorElement::from_terms(2, self.delta[k].iter().map(|(i, j, c)| (vec![*i, *j], c.clone())))
    }

    pub fn coproduct_at(&self, x: &Elem, pos: usize) -> Elem {
        self.apply_at(x, pos, |k| self.coproduct_basis(k))
    }

    pub fn antipode_at(&self, x: &Elem, pos: usize) -> Elem {
        self.apply_at(x, pos, |j| vec_elem(&self.antipode[j]))
    }

    /// `ε` on leg `pos` of a tensor of arity at least 2.
    pub fn counit_at(&self, x: &Elem, pos: usize) -> Elem {
        let mut out = Elem::zero(x.arity() - 1);
        for (w, c) in x.terms() {
            let e = &self.counit[w[pos]];
            if !e.is_zero() {
                let mut parts = w.clone();
                parts.remove(pos);
                out.add_term(parts, c * e);
            }
        }
        out
    }

    pub fn counit(&self, x: &Elem) -> Rational {
        x.terms().fold(Rational::zero(), |acc, (w, c)| acc + c * &self.counit[w[0]])
    }

    /// Multiplication `A⊗A -> A`.
    pub fn multiply_legs(&self, x: &Elem) -> Elem {
        let mut out = Elem::zero(1);
        for (w, c) in x.terms() {
            for (i, ci) in &self.mu[w[0]][w[1]] {
                out.add_term(vec![*i], c * ci);
            }
        }
        out
    }

    pub fn antipode_matrix(&self) -> Matrix<Rational> {
        let n = self.dim();
        let mut m = Matrix::zeros(n, n);
        for (j, v) in self.antipode.iter().enumerate() {
            for (i, c) in v {
                m.set(*i, j, c.clone());
            }
        }
        m
    }

    fn matrix_columns(m: &Matrix<Rational>) -> Vec<Vector> {
        (0..m.cols())
            .map(|j| (0..m.rows()).filter(|&i| !m.get(i, j).is_zero()).map(|i| (i, m.get(i, j).clone())).collect())
            .collect()
    }

    pub fn antipode_inverse(&self) -> Result<Vec<Vector>> {
        let inv = self
            .antipode_matrix()
            .inverse()
            .ok_or_else(|| Error::NotInvertible(format!("{}: antipode", self.name)))?;
        Ok(Self::matrix_columns(&inv))
    }

    /// The dual Hopf algebra on the dual basis: transposed tensors.
    pub fn dual(&self) -> Self {
        let n = self.dim();
        let mut mu = vec![vec![Vec::new(); n]; n];
        for (k, d) in self.delta.iter().enumerate() {
            for (i, j, c) in d {
                mu[*i][*j].push((k, c.clone()));
            }
        }
        let mut delta = vec![Vec::new(); n];
        for i in 0..n {
            for j in 0..n {
                for (k, c) in &self.mu[i][j] {
                    delta[*k].push((i, j, c.clone()));
                }
            }
        }
        let unit = self.counit.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (i, c.clone())).collect();
        let mut counit = vec![Rational::zero(); n];
        for (i, c) in &self.unit {
            counit[*i] = c.clone();
        }
        let antipode = Self::matrix_columns(&self.antipode_matrix().transpose());
        let names = self.names.iter().map(|s| format!("{s}*")).collect();
        FdHopf::new_unchecked(&format!("{}*", self.name), names, mu, unit, delta, counit, antipode).expect("shapes")
    }

    /// Opposite multiplication with antipode `S^{-1}`.
    pub fn op(&self) -> Result<Self> {
        let n = self.dim();
        let mu = (0..n).map(|i| (0..n).map(|j| self.mu[j][i].clone()).collect()).collect();
        let mut h = self.clone();
        h.name = format!("{}^op", self.name);
        h.mu = mu;
        h.antipode = self.antipode_inverse()?;
        Ok(h)
    }

    /// Opposite comultiplication with antipode `S^{-1}`.
    pub fn cop(&self) -> Result<Self> {
        let mut h = self.clone();
        h.name = format!("{}^cop", self.name);
        h.delta = self.delta.iter().map(|d| d.iter().map(|(i, j, c)| (*j, *i, c.clone())).collect()).collect();
        h.antipode = self.antipode_inverse()?;
        Ok(h)
    }

    /// Same structure tensors, names ignored.
    pub fn same_structure(&self, other: &Self) -> bool {
        let norm = |h: &FdHopf| {
            let d: Vec<Elem> = (0..h.dim()).map(|k| h.coproduct_basis(k)).collect();
            (h.mu.clone(), h.unit.clone(), d, h.counit.clone(), h.antipode.clone())
        };
        self.dim() == other.dim() && norm(self) == norm(other)
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.dim()).all(|i| (0..self.dim()).all(|j| self.mu[i][j] == self.mu[j][i]))
    }

    pub fn is_cocommutative(&self) -> bool {
        (0..self.dim()).all(|k| {
            let d = self.coproduct_basis(k);
            d.flip() == d
        })
    }

    /// Replaces `Δ(e_k)`; for negative controls.
    pub fn with_coproduct(&self, k: usize, d: Vec<(usize, usize, Rational)>) -> Self {
        let mut h = self.clone();
        h.delta[k] = d;
        h
    }

    pub fn render(&self, x: &Elem) -> String {
        let terms: Vec<(Rational, String)> = x
            .terms()
            .map(|(w, c)| (c.clone(), w.iter().map(|&i| self.names[i].as_str()).collect::<Vec<_>>().join("⊗")))
            .collect();
        crate::algebra::ring::join_terms(&terms)
    }
}

/// Exhaustive check of the Hopf axioms on basis tuples.
pub fn fd_axiom_check(h: &FdHopf) -> Report {
    let n = h.dim();
    let mut report = Report::new();
    let e = |i: usize| h.basis(i);
    let nm = |i: usize| h.names[i].as_str();

    let mut fail = None;
    'a: for i in 0..n {
        for j in 0..n {
            let ij = h.mul(&e(i), &e(j));
            for k in 0..n {
                if h.mul(&ij, &e(k)) != h.mul(&e(i), &h.mul(&e(j), &e(k))) {
                    fail = Some(format!("({}, {}, {})", nm(i), nm(j), nm(k)));
                    break 'a;
                }
            }
        }
    }
    report.record("associativity", fail.map_or(Ok(format!("{} triples", n * n * n)), Err));

    let u = h.unit();
    let fail = (0..n).find(|&i| h.mul(&u, &e(i)) != e(i) || h.mul(&e(i), &u) != e(i));
    report.record("unit", fail.map_or(Ok(format!("{n} elements")), |i| Err(format!("at {}", nm(i)))));

    let fail = (0..n).find(|&i| {
        let d = h.coproduct_basis(i);
        h.coproduct_at(&d, 0) != h.coproduct_at(&d, 1)
    });
    report.record("coassociativity", fail.map_or(Ok(format!("{n} elements")), |i| Err(format!("at {}", nm(i)))));

    let fail = (0..n).find(|&i| {
        let d = h.coproduct_basis(i);
        h.counit_at(&d, 0) != e(i) || h.counit_at(&d, 1) != e(i)
    });
    report.record("counit", fail.map_or(Ok(format!("{n} elements")), |i| Err(format!("at {}", nm(i)))));

    let mut fail = None;
    if h.coproduct_at(&u, 0) != h.unit_k(2) {
        fail = Some("Δ(1) != 1⊗1".to_string());
    } else if h.counit(&u) != Rational::one() {
        fail = Some("ε(1) != 1".to_string());
    }
    'b: for i in 0..n {
        for j in 0..n {
            if fail.is_some() {
                break 'b;
            }
            let ij = h.mul(&e(i), &e(j));
            if h.coproduct_at(&ij, 0) != h.mul(&h.coproduct_basis(i), &h.coproduct_basis(j)) {
                fail = Some(format!("Δ({}·{})", nm(i), nm(j)));
            } else if h.counit(&ij) != &h.counit[i] * &h.counit[j] {
                fail = Some(format!("ε({}·{})", nm(i), nm(j)));
            }
        }
    }
    report.record("bialgebra", fail.map_or(Ok(format!("{} pairs", n * n)), Err));

    let fail = (0..n).find_map(|i| {
        let d = h.coproduct_basis(i);
        let target = u.map_coeffs(|x| x * &h.counit[i]);
        if h.multiply_legs(&h.antipode_at(&d, 0)) != target {
            Some(format!("μ(S⊗id)Δ at {}", nm(i)))
        } else if h.multiply_legs(&h.antipode_at(&d, 1)) != target {
            Some(format!("μ(id⊗S)Δ at {}", nm(i)))
        } else {
            None
        }
    });
    report.record("antipode", fail.map_or(Ok(format!("{n} elements")), Err));
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_and_function_algebras_pass() {
        for g in [FiniteGroup::cyclic(2), FiniteGroup::s3()] {
            let r = fd_axiom_check(&FdHopf::group_algebra(&g));
            assert!(r.passed(), "{r}");
            let r = fd_axiom_check(&FdHopf::functions(&g));
            assert!(r.passed(), "{r}");
        }
    }

    #[test]
    fn dual_swaps_the_two_and_is_involutive() {
        let g = FiniteGroup::cyclic(2);
        let fun = FdHopf::functions(&g);
        assert!(fun.dual().same_structure(&FdHopf::group_algebra(&g)));
        let s3 = FdHopf::group_algebra(&FiniteGroup::s3());
        assert!(s3.dual().dual().same_structure(&s3));
        assert!(FdHopf::trivial().dual().same_structure(&FdHopf::trivial()));
    }

    #[test]
    fn op_examples() {
        let z3 = FdHopf::group_algebra(&FiniteGroup::cyclic(3));
        assert_eq!(z3.op().unwrap().mu, z3.mu);
        let s3 = FdHopf::group_algebra(&FiniteGroup::s3());
        let op = s3.op().unwrap();
        // (12)(13) = (132) while (13)(12) = (123)
        assert_ne!(op.product_vector(1, 2), s3.product_vector(1, 2));
        assert!(op.op().unwrap().same_structure(&s3));
        assert!(fd_axiom_check(&op).passed());
    }

    #[test]
    fn corrupted_coproduct_fails() {
        let z2 = FdHopf::group_algebra(&FiniteGroup::cyclic(2));
        let bad = z2.with_coproduct(1, vec![(1, 0, one())]);
        let r = fd_axiom_check(&bad);
        assert!(!r.passed());
        assert!(matches!(bad.validated(), Err(Error::Validation(_))));
    }
}
