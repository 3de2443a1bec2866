use serde_json::Value;

use crate::error::{Error, Result};

/// Finite group by Cayley table over named elements.
#[derive(Clone, Debug, PartialEq)]
pub struct FiniteGroup {
    name: String,
    elements: Vec<String>,
    table: Vec<Vec<usize>>,
    identity: usize,
    inverse: Vec<usize>,
}

impl FiniteGroup {
    /// Checks closure, associativity, identity and inverses.
    pub fn new(name: &str, elements: Vec<String>, table: Vec<Vec<usize>>) -> Result<Self> {
        let n = elements.len();
        let bad = |m: String| Error::Validation(format!("{name}: {m}"));
        if n == 0 {
            return Err(bad("empty group".into()));
        }
        if table.len() != n || table.iter().any(|r| r.len() != n || r.iter().any(|&x| x >= n)) {
            return Err(bad("Cayley table must be n×n over the elements".into()));
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(bad(format!("not associative at ({}, {}, {})", elements[a], elements[b], elements[c])));
                    }
                }
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|a| table[e][a] == a && table[a][e] == a))
            .ok_or_else(|| bad("no identity element".into()))?;
        let mut inverse = Vec::with_capacity(n);
        for a in 0..n {
            let inv = (0..n)
                .find(|&b| table[a][b] == identity && table[b][a] == identity)
                .ok_or_else(|| bad(format!("{} has no inverse", elements[a])))?;
            inverse.push(inv);
        }
        Ok(FiniteGroup { name: name.to_string(), elements, table, identity, inverse })
    }

    /// `Z/n` with elements `0..n-1`.
    pub fn cyclic(n: usize) -> Self {
        let elements = (0..n).map(|i| i.to_string()).collect();
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        FiniteGroup::new(&format!("Z{n}"), elements, table).expect("cyclic group")
    }

    /// `S_3` as permutations of `{1,2,3}`, composed right to left.
    pub fn s3() -> Self {
        let perms: [[usize; 3]; 6] = [[0, 1, 2], [1, 0, 2], [2, 1, 0], [0, 2, 1], [1, 2, 0], [2, 0, 1]];
        let names = ["e", "(12)", "(13)", "(23)", "(123)", "(132)"];
        let index = |p: [usize; 3]| perms.iter().position(|q| *q == p).expect("closed");
        let table = perms
            .iter()
            .map(|s| perms.iter().map(|t| index([s[t[0]], s[t[1]], s[t[2]]])).collect())
            .collect();
        FiniteGroup::new("S3", names.iter().map(|s| s.to_string()).collect(), table).expect("S3")
    }

    /// `Z2`, `Z3`, `Z4`, .., or `S3`.
    pub fn by_name(name: &str) -> Result<Self> {
        match name {
            "S3" | "s3" => Ok(Self::s3()),
            s if (s.starts_with('Z') || s.starts_with('z')) && s[1..].parse::<usize>().is_ok_and(|n| n > 0) => {
                Ok(Self::cyclic(s[1..].parse().unwrap()))
            }
            other => Err(Error::Invalid(format!("unknown group `{other}`"))),
        }
    }

    /// `{"name": .., "elements": [..], "table": [[..], ..]}` with table
    /// entries given as element names.
    pub fn from_json(text: &str, origin: &str) -> Result<Self> {
        let schema = |m: &str| Error::Schema { path: origin.to_string(), message: m.to_string() };
        let v: Value = serde_json::from_str(text).map_err(|e| schema(&e.to_string()))?;
        let elements: Vec<String> = v["elements"]
            .as_array()
            .ok_or_else(|| schema("`elements` must be an array of names"))?
            .iter()
            .map(|e| e.as_str().map(str::to_string).ok_or_else(|| schema("element names must be strings")))
            .collect::<Result<_>>()?;
        let rows = v["table"].as_array().ok_or_else(|| schema("`table` must be an array of rows"))?;
        let mut table = Vec::new();
        for r in rows {
            let r = r.as_array().ok_or_else(|| schema("table rows must be arrays"))?;
            let mut row = Vec::new();
            for x in r {
                let s = x.as_str().ok_or_else(|| schema("table entries must be element names"))?;
                row.push(elements.iter().position(|e| e == s).ok_or_else(|| schema(&format!("unknown element `{s}`")))?);
            }
            table.push(row);
        }
        let name = v.get("name").and_then(Value::as_str).unwrap_or(origin);
        FiniteGroup::new(name, elements, table)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[String] {
        &self.elements
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order()).all(|a| (0..self.order()).all(|b| self.table[a][b] == self.table[b][a]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtins() {
        let s3 = FiniteGroup::s3();
        assert!(!s3.is_abelian());
        assert_eq!(s3.mul(1, 1), 0);
        assert_eq!(s3.inverse(4), 5);
        assert!(FiniteGroup::cyclic(4).is_abelian());
    }

    #[test]
    fn json_table() {
        let ok = r#"{"name": "Z2", "elements": ["e", "a"], "table": [["e", "a"], ["a", "e"]]}"#;
        assert_eq!(FiniteGroup::from_json(ok, "z2").unwrap().order(), 2);
        let bad = r#"{"elements": ["e", "a"], "table": [["e", "a"], ["a", "a"]]}"#;
        assert!(matches!(FiniteGroup::from_json(bad, "x"), Err(Error::Validation(_))));
    }
}
