use std::collections::BTreeMap;

use num_traits::Zero;
use serde_json::Value;

use crate::algebra::rational::parse_rational;
use crate::algebra::{Rational, Vars};
use crate::error::{Error, Result};

/// Finite-dimensional Lie algebra by structure constants
/// `[X_i, X_j] = Σ_k c_ij^k X_k`, stored for `i < j`.
#[derive(Clone, Debug, PartialEq)]
pub struct LieAlgebra {
    name: String,
    basis: Vars,
    brackets: BTreeMap<(usize, usize), Vec<(usize, Rational)>>,
}

/// Linear combination of basis vectors, sorted by index.
pub type LieVector = Vec<(usize, Rational)>;

/// `(a, b, [(c, coef), ..])` for `[a, b] = Σ coef c`.
pub type BracketSpec<'a> = (&'a str, &'a str, &'a [(&'a str, Rational)]);

type OwnedBracket = (String, String, Vec<(String, Rational)>);

fn add_into(acc: &mut BTreeMap<usize, Rational>, v: &[(usize, Rational)], c: &Rational) {
    for (k, x) in v {
        *acc.entry(*k).or_insert_with(Rational::zero) += x * c;
    }
}

fn collect(acc: BTreeMap<usize, Rational>) -> LieVector {
    acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
}

impl LieAlgebra {
    /// Builds and runs the Jacobi check.
    pub fn new(name: &str, basis: &[&str], brackets: &[BracketSpec]) -> Result<Self> {
        let g = Self::new_unchecked(name, basis, brackets)?;
        if let Err((i, j, k)) = jacobi_check(&g) {
            return Err(Error::Validation(format!(
                "Jacobi identity fails at ({}, {}, {})",
                g.basis.name(i),
                g.basis.name(j),
                g.basis.name(k)
            )));
        }
        Ok(g)
    }

    /// Builds without the Jacobi check (name and shape errors still apply).
    pub fn new_unchecked(name: &str, basis: &[&str], brackets: &[BracketSpec]) -> Result<Self> {
        let vars = Vars::new(basis.iter().copied());
        for (i, b) in basis.iter().enumerate() {
            if basis[..i].contains(b) {
                return Err(Error::Invalid(format!("duplicate basis element `{b}`")));
            }
        }
        let mut map = BTreeMap::new();
        for (a, b, terms) in brackets {
            let (i, j) = (vars.index_of(a)?, vars.index_of(b)?);
            if i == j {
                return Err(Error::Invalid(format!("bracket of `{a}` with itself must vanish")));
            }
            let sign = if i < j { Rational::from_integer(1.into()) } else { Rational::from_integer((-1).into()) };
            let key = (i.min(j), i.max(j));
            if map.contains_key(&key) {
                return Err(Error::Invalid(format!("bracket [{a}, {b}] given twice")));
            }
            let mut acc = BTreeMap::new();
            for (k, c) in terms.iter() {
                *acc.entry(vars.index_of(k)?).or_insert_with(Rational::zero) += c * &sign;
            }
            map.insert(key, collect(acc));
        }
        Ok(LieAlgebra { name: name.to_string(), basis: vars, brackets: map })
    }

    /// Abelian algebra `X1..Xn`.
    pub fn abelian(n: usize) -> Self {
        LieAlgebra { name: format!("abelian_{n}"), basis: Vars::indexed("X", n), brackets: BTreeMap::new() }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &Vars {
        &self.basis
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.basis.index_of(name)
    }

    /// `[X_i, X_j]`.
    pub fn bracket(&self, i: usize, j: usize) -> LieVector {
        if i == j {
            return Vec::new();
        }
        match self.brackets.get(&(i.min(j), i.max(j))) {
            None => Vec::new(),
            Some(v) if i < j => v.clone(),
            Some(v) => v.iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }

    /// Bracket of two linear combinations.
    pub fn bracket_vec(&self, a: &[(usize, Rational)], b: &[(usize, Rational)]) -> LieVector {
        let mut acc = BTreeMap::new();
        for (i, ca) in a {
            for (j, cb) in b {
                add_into(&mut acc, &self.bracket(*i, *j), &(ca * cb));
            }
        }
        collect(acc)
    }

    pub fn is_abelian(&self) -> bool {
        self.brackets.values().all(Vec::is_empty)
    }

    /// Parses `{"name": .., "basis": [..], "brackets": [[a, b, [[c, coef], ..]], ..]}`;
    /// coefficients are integers or rational strings.
    pub fn from_json(text: &str, origin: &str) -> Result<Self> {
        let schema = |m: &str| Error::Schema { path: origin.to_string(), message: m.to_string() };
        let v: Value = serde_json::from_str(text).map_err(|e| schema(&e.to_string()))?;
        let basis: Vec<&str> = v["basis"]
            .as_array()
            .ok_or_else(|| schema("`basis` must be an array of names"))?
            .iter()
            .map(|b| b.as_str().ok_or_else(|| schema("basis names must be strings")))
            .collect::<Result<_>>()?;
        let mut owned: Vec<OwnedBracket> = Vec::new();
        if let Some(list) = v.get("brackets") {
            for entry in list.as_array().ok_or_else(|| schema("`brackets` must be an array"))? {
                let e = entry.as_array().filter(|e| e.len() == 3).ok_or_else(|| schema("bracket entries are [a, b, terms]"))?;
                let a = e[0].as_str().ok_or_else(|| schema("bracket operands must be names"))?;
                let b = e[1].as_str().ok_or_else(|| schema("bracket operands must be names"))?;
                let mut terms = Vec::new();
                for t in e[2].as_array().ok_or_else(|| schema("bracket terms must be an array"))? {
                    let t = t.as_array().filter(|t| t.len() == 2).ok_or_else(|| schema("terms are [name, coefficient]"))?;
                    let k = t[0].as_str().ok_or_else(|| schema("term names must be strings"))?;
                    let c = json_rational(&t[1]).ok_or_else(|| schema("coefficient must be an integer or rational string"))?;
                    terms.push((k.to_string(), c));
                }
                owned.push((a.to_string(), b.to_string(), terms));
            }
        }
        let name = v.get("name").and_then(Value::as_str).unwrap_or(origin);
        let term_refs: Vec<Vec<(&str, Rational)>> =
            owned.iter().map(|(_, _, t)| t.iter().map(|(k, c)| (k.as_str(), c.clone())).collect()).collect();
        let br: Vec<BracketSpec> = owned
            .iter()
            .zip(&term_refs)
            .map(|((a, b, _), t)| (a.as_str(), b.as_str(), t.as_slice()))
            .collect();
        Self::new(name, &basis, &br)
    }
}

pub(crate) fn json_rational(v: &Value) -> Option<Rational> {
    match v {
        Value::Number(n) => n.as_i64().map(|i| Rational::from_integer(i.into())),
        Value::String(s) => parse_rational(s.trim()),
        _ => None,
    }
}

/// Checks the Jacobi identity on all basis triples `i < j < k`; returns the
/// first failing triple.
pub fn jacobi_check(g: &LieAlgebra) -> std::result::Result<(), (usize, usize, usize)> {
    let n = g.dim();
    let one = Rational::from_integer(1.into());
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let mut acc = BTreeMap::new();
                for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
                    let inner = g.bracket(a, b);
                    add_into(&mut acc, &g.bracket_vec(&inner, &[(c, one.clone())]), &one);
                }
                if !collect(acc).is_empty() {
                    return Err((i, j, k));
                }
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::int;

    fn sl2() -> LieAlgebra {
        LieAlgebra::new(
            "sl2",
            &["H", "E", "F"],
            &[("H", "E", &[("E", int(2))]), ("H", "F", &[("F", int(-2))]), ("E", "F", &[("H", int(1))])],
        )
        .unwrap()
    }

    #[test]
    fn jacobi_examples() {
        assert!(jacobi_check(&LieAlgebra::abelian(2)).is_ok());
        assert!(jacobi_check(&sl2()).is_ok());
        let broken = LieAlgebra::new_unchecked(
            "broken",
            &["H", "E", "F"],
            &[("H", "E", &[("E", int(2))]), ("H", "F", &[("F", int(-2))]), ("E", "F", &[("E", int(1))])],
        )
        .unwrap();
        assert_eq!(jacobi_check(&broken), Err((0, 1, 2)));
    }

    #[test]
    fn antisymmetric_lookup() {
        let g = sl2();
        assert_eq!(g.bracket(2, 1), vec![(0, int(-1))]);
        assert_eq!(g.bracket(1, 1), vec![]);
    }

    #[test]
    fn json_roundtrip_and_errors() {
        let text = r#"{"basis": ["X", "Y", "Z"], "brackets": [["Y", "X", [["Z", "-1"]]]]}"#;
        let g = LieAlgebra::from_json(text, "heis").unwrap();
        assert_eq!(g.bracket(0, 1), vec![(2, int(1))]);
        let bad = r#"{"basis": ["H", "E", "F"], "brackets": [["H","E",[["E",2]]],["H","F",[["F",-2]]],["E","F",[["E",1]]]]}"#;
        let e = LieAlgebra::from_json(bad, "bad").unwrap_err();
        assert!(e.to_string().contains("(H, E, F)"), "{e}");
        assert!(matches!(LieAlgebra::from_json("{}", "x"), Err(Error::Schema { .. })));
    }
}
