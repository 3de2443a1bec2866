use crate::algebra::rational::int;
use crate::algebra::{Additive, Polynomial, Ring, Vars};
use crate::error::{Error, Result};
use crate::hopf::LieAlgebra;

/// A vector field `Σ_c a_c ∂_c` by its coefficient polynomials.
pub type Field = Vec<Polynomial>;

/// Lie group in global polynomial coordinates with its left and right
/// invariant vector fields.
#[derive(Clone, Debug)]
pub struct GroupModel {
    name: String,
    coords: Vars,
    momenta: Vars,
    lie: LieAlgebra,
    left: Vec<Field>,
    right: Vec<Field>,
}

/// `V(f)`.
pub fn apply_field(v: &Field, f: &Polynomial) -> Polynomial {
    v.iter().enumerate().fold(f.zero_like(), |acc, (c, a)| {
        if a.is_zero() {
            acc
        } else {
            acc.add_ref(&a.mul_ref(&f.derive(c)))
        }
    })
}

/// `[V, W]` as a field.
pub fn field_bracket(v: &Field, w: &Field) -> Field {
    (0..v.len()).map(|c| apply_field(v, &w[c]).sub_ref(&apply_field(w, &v[c]))).collect()
}

fn combine(fields: &[Field], vec: &[(usize, crate::algebra::Rational)], zero: &Polynomial) -> Field {
    let n = fields[0].len();
    let mut out = vec![zero.clone(); n];
    for (k, c) in vec {
        for (o, a) in out.iter_mut().zip(&fields[*k]) {
            *o = o.add_ref(&a.scale(c));
        }
    }
    out
}

impl GroupModel {
    /// Validates that left fields represent the bracket, right fields the
    /// opposite bracket, and that the two families commute.
    pub fn new(name: &str, coords: Vars, momenta: Vars, lie: LieAlgebra, left: Vec<Field>, right: Vec<Field>) -> Result<Self> {
        let n = lie.dim();
        if left.len() != n || right.len() != n || momenta.len() != n {
            return Err(Error::Dimension(format!("{name}: need one field and one momentum per generator")));
        }
        for v in left.iter().chain(&right) {
            if v.len() != coords.len() || v.iter().any(|a| a.vars() != &coords) {
                return Err(Error::Dimension(format!("{name}: field coefficients must be polynomials in the coordinates")));
            }
        }
        let zero = Polynomial::zero(&coords);
        let b = lie.basis();
        for i in 0..n {
            for j in 0..n {
                if field_bracket(&left[i], &right[j]).iter().any(|a| !a.is_zero()) {
                    return Err(Error::Validation(format!(
                        "{name}: left field of {} does not commute with right field of {}",
                        b.name(i),
                        b.name(j)
                    )));
                }
                if i < j {
                    let br = lie.bracket(i, j);
                    if field_bracket(&left[i], &left[j]) != combine(&left, &br, &zero) {
                        return Err(Error::Validation(format!(
                            "{name}: left fields of {}, {} do not represent the bracket",
                            b.name(i),
                            b.name(j)
                        )));
                    }
                    let neg: Vec<_> = br.iter().map(|(k, c)| (*k, -c)).collect();
                    if field_bracket(&right[i], &right[j]) != combine(&right, &neg, &zero) {
                        return Err(Error::Validation(format!(
                            "{name}: right fields of {}, {} do not represent the opposite bracket",
                            b.name(i),
                            b.name(j)
                        )));
                    }
                }
            }
        }
        Ok(GroupModel { name: name.to_string(), coords, momenta, lie, left, right })
    }

    /// `ℝ^n` with coordinates `x1..xn`, momenta `x(n+1)..x(2n)` and
    /// `X_i^→ = X_i^← = ∂_i`.
    pub fn rn(n: usize) -> Self {
        let all = Vars::indexed("x", 2 * n);
        let coords = Vars::new(all.names()[..n].iter().cloned());
        let momenta = Vars::new(all.names()[n..].iter().cloned());
        let fields: Vec<Field> = (0..n)
            .map(|i| (0..n).map(|c| if c == i { Polynomial::one(&coords) } else { Polynomial::zero(&coords) }).collect())
            .collect();
        GroupModel::new(&format!("r{n}"), coords, momenta, LieAlgebra::abelian(n), fields.clone(), fields).expect("flat model is valid")
    }

    /// Heisenberg group, `(x,y,z)(x',y',z') = (x+x', y+y', z+z'+xy')`,
    /// momenta `px, py, pz` dual to `X, Y, Z` with `[X, Y] = Z`.
    pub fn heis3() -> Self {
        let coords = Vars::new(["x", "y", "z"]);
        let lie = LieAlgebra::new("heis3", &["X", "Y", "Z"], &[("X", "Y", &[("Z", int(1))])]).expect("heis3");
        let p = |s: &str| Polynomial::var_named(&coords, s).expect("coordinate");
        let one = Polynomial::one(&coords);
        let zero = Polynomial::zero(&coords);
        let left = vec![
            vec![one.clone(), zero.clone(), zero.clone()],
            vec![zero.clone(), one.clone(), p("x")],
            vec![zero.clone(), zero.clone(), one.clone()],
        ];
        let right = vec![
            vec![one.clone(), zero.clone(), p("y")],
            vec![zero.clone(), one.clone(), zero.clone()],
            vec![zero.clone(), zero, one],
        ];
        GroupModel::new("heis3", coords, Vars::new(["px", "py", "pz"]), lie, left, right).expect("heis3 model is valid")
    }

    /// `rn` (with `n`), `r1`, `r2`, .., or `heis3`.
    pub fn by_name(name: &str, n: Option<usize>) -> Result<Self> {
        match name {
            "heis3" => Ok(Self::heis3()),
            "rn" => Ok(Self::rn(n.ok_or_else(|| Error::Invalid("group rn needs --n".into()))?)),
            s if s.starts_with('r') && s[1..].parse::<usize>().is_ok_and(|k| k > 0) => Ok(Self::rn(s[1..].parse().unwrap())),
            other => Err(Error::Invalid(format!("unknown group `{other}`"))),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn coords(&self) -> &Vars {
        &self.coords
    }

    pub fn momenta(&self) -> &Vars {
        &self.momenta
    }

    pub fn lie(&self) -> &LieAlgebra {
        &self.lie
    }

    pub fn left_field(&self, i: usize) -> &Field {
        &self.left[i]
    }

    pub fn right_field(&self, i: usize) -> &Field {
        &self.right[i]
    }

    /// Variables of `T*G`: coordinates then momenta.
    pub fn phase_space(&self) -> Vars {
        Vars::new(self.coords.names().iter().chain(self.momenta.names()).cloned())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn heisenberg_fields() {
        let g = GroupModel::heis3();
        let z = Polynomial::var_named(g.coords(), "z").unwrap();
        assert_eq!(apply_field(g.left_field(1), &z).to_string(), "x");
        assert_eq!(apply_field(g.right_field(0), &z).to_string(), "y");
    }

    #[test]
    fn swapped_fields_rejected() {
        let g = GroupModel::heis3();
        let r = GroupModel::new(
            "bad",
            g.coords().clone(),
            g.momenta().clone(),
            g.lie().clone(),
            g.right.clone(),
            g.left.clone(),
        );
        assert!(matches!(r, Err(Error::Validation(_))), "{r:?}");
    }

    #[test]
    fn flat_names() {
        let g = GroupModel::rn(2);
        assert_eq!(g.phase_space().names(), ["x1", "x2", "x3", "x4"]);
        assert!(GroupModel::by_name("r3", None).is_ok());
        assert!(GroupModel::by_name("rn", None).is_err());
    }
}
