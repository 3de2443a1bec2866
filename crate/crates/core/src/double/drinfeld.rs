use num_traits::Zero;

use super::fd::{fd_axiom_check, Elem, FdHopf};
use crate::algebra::{Additive, Matrix, Rational};
use crate::error::{Error, Result};
use crate::report::Report;

/// `A` and `A*` with a perfect Hopf pairing `⟨f_s, e_i⟩ = pairing[s][i]`.
#[derive(Clone, Debug)]
pub struct PairedHopf {
    a: FdHopf,
    astar: FdHopf,
    /// `A*` with opposite coproduct and inverse antipode
    a0: FdHopf,
    pairing: Matrix<Rational>,
    /// rows are the dual basis `e^s` in terms of the `f_t`
    dual_basis: Matrix<Rational>,
    /// `μ_D` on `(f⊗a)·(g⊗b)` factored through `M(g, a)`
    middle: Vec<Vec<Elem>>,
}

fn pair_vec(p: &Matrix<Rational>, f: &Elem, x: &Elem) -> Rational {
    let mut acc = Rational::zero();
    for (u, cu) in f.terms() {
        for (v, cv) in x.terms() {
            let mut c = cu * cv;
            for (s, i) in u.iter().zip(v) {
                c *= p.get(*s, *i);
                if c.is_zero() {
                    break;
                }
            }
            acc += c;
        }
    }
    acc
}

impl PairedHopf {
    /// Validates that the pairing is perfect and Hopf-dualizing.
    pub fn new(a: FdHopf, astar: FdHopf, pairing: Matrix<Rational>) -> Result<Self> {
        let n = a.dim();
        if astar.dim() != n || pairing.rows() != n || pairing.cols() != n {
            return Err(Error::Dimension("pairing must be square of the common dimension".into()));
        }
        let inv = pairing.inverse().ok_or_else(|| Error::NotInvertible("pairing is degenerate".into()))?;
        let a0 = astar.cop()?;
        let mut p = PairedHopf { a, astar, a0, pairing, dual_basis: inv.transpose(), middle: Vec::new() };
        p.check_dualizing()?;
        p.middle = (0..n).map(|g| (0..n).map(|x| p.middle_expanded(g, x)).collect()).collect();
        Ok(p)
    }

    /// `A` with `A*` the dual Hopf algebra and the evaluation pairing.
    pub fn canonical(a: FdHopf) -> Result<Self> {
        let astar = a.dual();
        let n = a.dim();
        Self::new(a, astar, Matrix::identity(n))
    }

    pub fn a(&self) -> &FdHopf {
        &self.a
    }

    pub fn astar(&self) -> &FdHopf {
        &self.astar
    }

    pub fn dim(&self) -> usize {
        self.a.dim()
    }

    /// `⟨f, x⟩` extended legwise to tensors of equal arity.
    pub fn pair(&self, f: &Elem, x: &Elem) -> Rational {
        pair_vec(&self.pairing, f, x)
    }

    fn check_dualizing(&self) -> Result<()> {
        let n = self.dim();
        let (a, s) = (&self.a, &self.astar);
        let bad = |m: String| Err(Error::Validation(format!("pairing is not Hopf-dualizing: {m}")));
        for i in 0..n {
            if self.pair(&s.unit(), &a.basis(i)) != *a.counit_value(i) {
                return bad(format!("⟨1, {}⟩ != ε", a.names()[i]));
            }
            if self.pair(&s.basis(i), &a.unit()) != *s.counit_value(i) {
                return bad(format!("⟨{}, 1⟩ != ε", s.names()[i]));
            }
        }
        for x in 0..n {
            for y in 0..n {
                let fg = s.mul(&s.basis(x), &s.basis(y));
                let fxg = s.basis(x).tensor(&s.basis(y));
                for i in 0..n {
                    if self.pair(&fg, &a.basis(i)) != self.pair(&fxg, &a.coproduct_basis(i)) {
                        return bad(format!("⟨{}{}, {}⟩", s.names()[x], s.names()[y], a.names()[i]));
                    }
                }
                let ab = a.mul(&a.basis(x), &a.basis(y));
                let axb = a.basis(x).tensor(&a.basis(y));
                for t in 0..n {
                    if self.pair(&s.basis(t), &ab) != self.pair(&s.coproduct_basis(t), &axb) {
                        return bad(format!("⟨{}, {}{}⟩", s.names()[t], a.names()[x], a.names()[y]));
                    }
                }
            }
        }
        Ok(())
    }

    /// `Δ²` as `(Δ⊗id)Δ`.
    fn delta2(h: &FdHopf, i: usize) -> Elem {
        h.coproduct_at(&h.coproduct_basis(i), 0)
    }

    /// `Σ ⟨g₁, a₁⟩⟨S'(g₃), a₃⟩ g₂ ⊗ a₂`, Sweedler of `g` in `A⁰`.
    fn middle_expanded(&self, g: usize, x: usize) -> Elem {
        let mut out = Elem::zero(2);
        let dg = Self::delta2(&self.a0, g);
        let da = Self::delta2(&self.a, x);
        for (gw, cg) in dg.terms() {
            let sg3 = self.a0.antipode_at(&self.a0.basis(gw[2]), 0);
            for (aw, ca) in da.terms() {
                let c1 = self.pairing.get(gw[0], aw[0]);
                if c1.is_zero() {
                    continue;
                }
                let c3 = self.pair(&sg3, &self.a.basis(aw[2]));
                if c3.is_zero() {
                    continue;
                }
                out.add_term(vec![gw[1], aw[1]], cg * ca * c1 * c3);
            }
        }
        out
    }

    /// Functional `x ↦ φ(e_x)` written in the `A*` basis.
    fn functional(&self, values: &[Rational]) -> Elem {
        let n = self.dim();
        let mut out = Elem::zero(1);
        for (r, v) in values.iter().enumerate() {
            if v.is_zero() {
                continue;
            }
            for t in 0..n {
                let c = self.dual_basis.get(r, t);
                if !c.is_zero() {
                    out.add_term(vec![t], v * c);
                }
            }
        }
        out
    }

    /// `Σ_{(a)} ⟨g, S^{-1}(a₃) · ? · a₁⟩ ⊗ a₂`.
    fn middle_compact(&self, g: usize, x: usize) -> Result<Elem> {
        let n = self.dim();
        let sinv = self.a.antipode_inverse()?;
        let da = Self::delta2(&self.a, x);
        let gi = self.astar.basis(g);
        let mut out = Elem::zero(2);
        for (aw, ca) in da.terms() {
            let s3 = Elem::from_terms(1, sinv[aw[2]].iter().map(|(i, c)| (vec![*i], c.clone())));
            let vals: Vec<Rational> = (0..n)
                .map(|r| {
                    let w = self.a.mul(&self.a.mul(&s3, &self.a.basis(r)), &self.a.basis(aw[0]));
                    self.pair(&gi, &w)
                })
                .collect();
            let phi = self.functional(&vals);
            out = out.add_ref(&phi.tensor(&self.a.basis(aw[1])).map_coeffs(|c| c * ca));
        }
        Ok(out)
    }

    /// `μ_D((f⊗a)⊗(g⊗b)) = Σ ⟨g₁,a₁⟩⟨S'(g₃),a₃⟩ f g₂ ⊗ a₂ b`.
    pub fn double_mul(&self, x: &Elem, y: &Elem) -> Elem {
        let mut out = Elem::zero(2);
        for (fa, cx) in x.terms() {
            for (gb, cy) in y.terms() {
                let m = &self.middle[gb[0]][fa[1]];
                if m.is_empty() {
                    continue;
                }
                for (w, cm) in m.terms() {
                    let fg = self.astar.mul(&self.astar.basis(fa[0]), &self.astar.basis(w[0]));
                    let ab = self.a.mul(&self.a.basis(w[1]), &self.a.basis(gb[1]));
                    let c = cx * cy * cm;
                    for (u, cu) in fg.terms() {
                        for (v, cv) in ab.terms() {
                            out.add_term(vec![u[0], v[0]], &c * cu * cv);
                        }
                    }
                }
            }
        }
        out
    }

    /// Smash product `Σ f (a₁⇀g) ⊗ a₂ b` under the coadjoint action
    /// `⟨a⇀g, x⟩ = Σ ⟨g, S(a₁) x a₂⟩`.
    pub fn coadjoint_smash_mul(&self, x: &Elem, y: &Elem) -> Elem {
        let n = self.dim();
        let mut out = Elem::zero(2);
        for (fa, cx) in x.terms() {
            // a₍₁₎ is split again by the action itself
            let da = Self::delta2(&self.a, fa[1]);
            for (gb, cy) in y.terms() {
                let g = self.astar.basis(gb[0]);
                for (aw, ca) in da.terms() {
                    let s1 = self.a.antipode_at(&self.a.basis(aw[0]), 0);
                    let vals: Vec<Rational> = (0..n)
                        .map(|r| self.pair(&g, &self.a.mul(&self.a.mul(&s1, &self.a.basis(r)), &self.a.basis(aw[1]))))
                        .collect();
                    let acted = self.functional(&vals);
                    let fg = self.astar.mul(&self.astar.basis(fa[0]), &acted);
                    let ab = self.a.mul(&self.a.basis(aw[2]), &self.a.basis(gb[1]));
                    let c = cx * cy * ca;
                    for (u, cu) in fg.terms() {
                        for (v, cv) in ab.terms() {
                            out.add_term(vec![u[0], v[0]], &c * cu * cv);
                        }
                    }
                }
            }
        }
        out
    }

    /// Index of `f_s ⊗ e_i` in the double.
    pub fn index(&self, s: usize, i: usize) -> usize {
        s * self.dim() + i
    }

    /// Inverse of [`PairedHopf::index`].
    pub fn split(&self, k: usize) -> (usize, usize) {
        (k / self.dim(), k % self.dim())
    }

    /// Double element (arity 2 over `A*`, `A`) to a vector of `D(A)`.
    pub fn flatten(&self, x: &Elem) -> Elem {
        Elem::from_terms(1, x.terms().map(|(w, c)| (vec![self.index(w[0], w[1])], c.clone())))
    }

    pub fn unflatten(&self, x: &Elem) -> Elem {
        Elem::from_terms(2, x.terms().map(|(w, c)| {
            let (s, i) = self.split(w[0]);
            (vec![s, i], c.clone())
        }))
    }

    /// `D(A)` on `A*⊗A` with `μ_D`, coproduct `ᵗμ^op ⊗ Δ`, counit `ε⊗ε`
    /// and antipode `S_D(f⊗a) = (1⊗S a)(S'(f)⊗1)`; axioms are checked.
    pub fn double_hopf(&self) -> Result<FdHopf> {
        let h = self.double_hopf_unchecked();
        let r = fd_axiom_check(&h);
        match r.first_failure() {
            None => Ok(h),
            Some(c) => Err(Error::Validation(format!("double: {} fails: {}", c.id, c.detail))),
        }
    }

    pub fn double_hopf_unchecked(&self) -> FdHopf {
        let n = self.dim();
        let nn = n * n;
        let to_vec = |e: Elem| -> Vec<(usize, Rational)> { self.flatten(&e).terms().map(|(w, c)| (w[0], c.clone())).collect() };
        let mut mu = vec![vec![Vec::new(); nn]; nn];
        for (k, row) in mu.iter_mut().enumerate() {
            let (s, i) = self.split(k);
            for (l, cell) in row.iter_mut().enumerate() {
                let (t, j) = self.split(l);
                *cell = to_vec(self.double_mul(&Elem::basis(vec![s, i]), &Elem::basis(vec![t, j])));
            }
        }
        let unit = to_vec(self.astar.unit().tensor(&self.a.unit()));
        let mut delta = Vec::with_capacity(nn);
        let mut counit = Vec::with_capacity(nn);
        let mut antipode = Vec::with_capacity(nn);
        for k in 0..nn {
            let (s, i) = self.split(k);
            let mut d = Vec::new();
            for (fw, cf) in self.a0.coproduct_basis(s).terms() {
                for (aw, ca) in self.a.coproduct_basis(i).terms() {
                    d.push((self.index(fw[0], aw[0]), self.index(fw[1], aw[1]), cf * ca));
                }
            }
            delta.push(d);
            counit.push(self.astar.counit_value(s) * self.a.counit_value(i));
            let sa = self.a.antipode_at(&self.a.basis(i), 0);
            let sf = self.a0.antipode_at(&self.astar.basis(s), 0);
            let left = self.astar.unit().tensor(&sa);
            let right = sf.tensor(&self.a.unit());
            antipode.push(to_vec(self.double_mul(&left, &right)));
        }
        let names = (0..nn)
            .map(|k| {
                let (s, i) = self.split(k);
                format!("{}⊗{}", self.astar.names()[s], self.a.names()[i])
            })
            .collect();
        FdHopf::new_unchecked(&format!("D({})", self.a.name()), names, mu, unit, delta, counit, antipode).expect("shapes")
    }

    /// `Σ_s (e^s⊗1)⊗(1⊗e_s)` in `D⊗D`, over dual bases.
    pub fn r_candidate(&self) -> Elem {
        let n = self.dim();
        let mut r = Elem::zero(2);
        for s in 0..n {
            let mut es = Elem::zero(1);
            for t in 0..n {
                let c = self.dual_basis.get(s, t);
                if !c.is_zero() {
                    es.add_term(vec![t], c.clone());
                }
            }
            let left = self.flatten(&es.tensor(&self.a.unit()));
            let right = self.flatten(&self.astar.unit().tensor(&self.a.basis(s)));
            r = r.add_ref(&left.tensor(&right));
        }
        r
    }

    /// The universal R-matrix `Σ_s (1⊗e_s)⊗(e^s⊗1)` of this double; the
    /// flip of [`PairedHopf::r_candidate`], which is the orientation
    /// compatible with the coproduct `ᵗμ^op ⊗ Δ`.
    pub fn r_matrix(&self) -> Elem {
        self.r_candidate().flip()
    }
}

/// Structural checks of the double: factor embeddings, the two routes to
/// `μ_D`, and (for cocommutative `A`) agreement with the coadjoint smash
/// product.
pub fn double_structure_check(p: &PairedHopf) -> Result<Report> {
    let n = p.dim();
    let (a, s) = (p.a(), p.astar());
    let mut report = Report::new();
    let one_a = a.unit();
    let one_s = s.unit();
    let mut fail = None;
    'e: for x in 0..n {
        for y in 0..n {
            let l = p.double_mul(&s.basis(x).tensor(&one_a), &s.basis(y).tensor(&one_a));
            if l != s.mul(&s.basis(x), &s.basis(y)).tensor(&one_a) {
                fail = Some(format!("({}⊗1)({}⊗1)", s.names()[x], s.names()[y]));
                break 'e;
            }
            let l = p.double_mul(&one_s.tensor(&a.basis(x)), &one_s.tensor(&a.basis(y)));
            if l != one_s.tensor(&a.mul(&a.basis(x), &a.basis(y))) {
                fail = Some(format!("(1⊗{})(1⊗{})", a.names()[x], a.names()[y]));
                break 'e;
            }
            let l = p.double_mul(&s.basis(x).tensor(&one_a), &one_s.tensor(&a.basis(y)));
            if l != s.basis(x).tensor(&a.basis(y)) {
                fail = Some(format!("({}⊗1)(1⊗{}) != {}⊗{}", s.names()[x], a.names()[y], s.names()[x], a.names()[y]));
                break 'e;
            }
        }
    }
    report.record("embeddings", fail.map_or(Ok(format!("{} pairs", n * n)), Err));

    let mut fail = None;
    'c: for g in 0..n {
        for x in 0..n {
            if p.middle[g][x] != p.middle_compact(g, x)? {
                fail = Some(format!("at ({}, {})", s.names()[g], a.names()[x]));
                break 'c;
            }
        }
    }
    report.record("compact_route", fail.map_or(Ok(format!("{} pairs", n * n)), Err));

    if a.is_cocommutative() {
        let mut fail = None;
        'm: for k in 0..n * n {
            let (f, x) = p.split(k);
            for l in 0..n * n {
                let (g, y) = p.split(l);
                let (u, v) = (Elem::basis(vec![f, x]), Elem::basis(vec![g, y]));
                if p.double_mul(&u, &v) != p.coadjoint_smash_mul(&u, &v) {
                    fail = Some(format!("({}⊗{})·({}⊗{})", s.names()[f], a.names()[x], s.names()[g], a.names()[y]));
                    break 'm;
                }
            }
        }
        report.record("coadjoint_smash", fail.map_or(Ok(format!("{} pairs", n.pow(4))), Err));
    } else {
        report.skip("coadjoint_smash", "A is not cocommutative");
    }
    Ok(report)
}

/// Quasi-triangularity of the canonical `R` in `d = D(A)`: invertibility,
/// `R Δ(x) R^{-1} = σΔ(x)` on basis elements, and QYBE.
pub fn r_matrix_check(p: &PairedHopf, d: &FdHopf) -> Report {
    r_matrix_check_for(d, &p.r_matrix())
}

/// As [`r_matrix_check`] for an arbitrary element `r` of `d⊗d`.
pub fn r_matrix_check_for(d: &FdHopf, r: &Elem) -> Report {
    let mut report = Report::new();
    let r = r.clone();
    let rinv = d.antipode_at(&r, 0);
    let one2 = d.unit_k(2);
    let inverse_ok = d.mul(&r, &rinv) == one2 && d.mul(&rinv, &r) == one2;
    report.push(
        "invertible",
        inverse_ok,
        if inverse_ok { "(S⊗id)R is a two-sided inverse".to_string() } else { "R·(S⊗id)R != 1⊗1".to_string() },
    );
    if inverse_ok {
        let fail = (0..d.dim()).find(|&k| {
            let dx = d.coproduct_basis(k);
            d.mul(&d.mul(&r, &dx), &rinv) != dx.flip()
        });
        report.record(
            "quasi_cocommutativity",
            fail.map_or(Ok(format!("{} basis elements", d.dim())), |k| Err(format!("at {}", d.names()[k]))),
        );
    } else {
        report.skip("quasi_cocommutativity", "R not invertible");
    }
    let u = d.unit();
    let r12 = r.tensor(&u);
    let r23 = u.tensor(&r);
    let r13 = r12.permute(&[0, 2, 1]);
    let l = d.mul(&d.mul(&r12, &r13), &r23);
    let rr = d.mul(&d.mul(&r23, &r13), &r12);
    report.push("qybe", l == rr, if l == rr { format!("{} terms", l.len()) } else { "R12 R13 R23 != R23 R13 R12".into() });
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::double::FiniteGroup;

    #[test]
    fn z2_double_product_table() {
        let p = PairedHopf::canonical(FdHopf::group_algebra(&FiniteGroup::cyclic(2))).unwrap();
        for g in 0..2 {
            for h in 0..2 {
                for g2 in 0..2 {
                    for h2 in 0..2 {
                        let got = p.double_mul(&Elem::basis(vec![g, h]), &Elem::basis(vec![g2, h2]));
                        let want = if g == g2 { Elem::basis(vec![g, (h + h2) % 2]) } else { Elem::zero(2) };
                        assert_eq!(got, want);
                    }
                }
            }
        }
    }

    #[test]
    fn s3_conjugation_side() {
        let g = FiniteGroup::s3();
        let p = PairedHopf::canonical(FdHopf::group_algebra(&g)).unwrap();
        for x in 0..6 {
            for h in 0..6 {
                for y in 0..6 {
                    let got = p.double_mul(&Elem::basis(vec![x, h]), &Elem::basis(vec![y, 0]));
                    let conj = g.mul(g.mul(h, y), g.inverse(h));
                    let want = if x == conj { Elem::basis(vec![x, h]) } else { Elem::zero(2) };
                    assert_eq!(got, want, "x={x} h={h} y={y}");
                }
            }
        }
    }

    #[test]
    fn trivial_double() {
        let p = PairedHopf::canonical(FdHopf::trivial()).unwrap();
        let d = p.double_hopf().unwrap();
        assert_eq!(d.dim(), 1);
        assert_eq!(p.r_matrix(), d.unit_k(2));
    }

    #[test]
    fn r_orientation() {
        let p = PairedHopf::canonical(FdHopf::group_algebra(&FiniteGroup::s3())).unwrap();
        let d = p.double_hopf().unwrap();
        assert!(r_matrix_check(&p, &d).passed());
        let cand = r_matrix_check_for(&d, &p.r_candidate());
        assert_eq!(cand.first_failure().unwrap().id, "quasi_cocommutativity");
    }

    #[test]
    fn degenerate_pairing_rejected() {
        let z2 = FdHopf::group_algebra(&FiniteGroup::cyclic(2));
        let r = PairedHopf::new(z2.clone(), z2.dual(), Matrix::zeros(2, 2));
        assert!(matches!(r, Err(Error::NotInvertible(_))));
    }
}
