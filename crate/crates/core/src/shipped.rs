//! Fixture files bundled with the crate, resolved by file name or path.

use std::path::Path;

use crate::double::FiniteGroup;
use crate::error::{Error, Result};
use crate::frt::RMatrix;
use crate::hopf::LieAlgebra;

const LIE: &[(&str, &str)] = &[
    ("abelian_3", include_str!("../data/abelian_3.json")),
    ("sl2", include_str!("../data/sl2.json")),
    ("heis3", include_str!("../data/heis3.json")),
    ("borel_sl2", include_str!("../data/borel_sl2.json")),
];

const GROUPS: &[(&str, &str)] = &[
    ("Z2", include_str!("../data/Z2.json")),
    ("Z3", include_str!("../data/Z3.json")),
    ("Z4", include_str!("../data/Z4.json")),
    ("S3", include_str!("../data/S3.json")),
];

const RMATRICES: &[(&str, &str)] =
    &[("sl2q", include_str!("../data/sl2q.json")), ("nonflat", include_str!("../data/nonflat.json"))];

/// File contents if `spec` names an existing file, otherwise the stem used
/// for the shipped lookup.
fn resolve(spec: &str) -> Result<std::result::Result<(String, String), String>> {
    let path = Path::new(spec);
    if path.is_file() {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Io { path: spec.into(), message: e.to_string() })?;
        return Ok(Ok((spec.to_string(), text)));
    }
    let stem = spec.strip_suffix(".json").unwrap_or(spec);
    if stem.contains('/') || stem.contains('\\') {
        return Err(Error::Io { path: spec.into(), message: "no such file".into() });
    }
    Ok(Err(stem.to_string()))
}

fn lookup<'a>(table: &'a [(&str, &'a str)], stem: &str) -> Option<&'a str> {
    table.iter().find(|(n, _)| n.eq_ignore_ascii_case(stem)).map(|(_, t)| *t)
}

/// `sl2`, `sl2.json`, `abelian_n` for any `n`, or a path.
pub fn lie_algebra(spec: &str) -> Result<LieAlgebra> {
    match resolve(spec)? {
        Ok((origin, text)) => LieAlgebra::from_json(&text, &origin),
        Err(stem) => {
            if let Some(text) = lookup(LIE, &stem) {
                return LieAlgebra::from_json(text, &format!("{stem}.json"));
            }
            if let Some(n) = stem.strip_prefix("abelian_").and_then(|n| n.parse::<usize>().ok()) {
                return Ok(LieAlgebra::abelian(n));
            }
            Err(Error::Invalid(format!("unknown Lie algebra `{spec}`")))
        }
    }
}

/// `Z2`..`Z4`, `S3` (also `Zn` for any `n`), or a path.
pub fn finite_group(spec: &str) -> Result<FiniteGroup> {
    match resolve(spec)? {
        Ok((origin, text)) => FiniteGroup::from_json(&text, &origin),
        Err(stem) => match lookup(GROUPS, &stem) {
            Some(text) => FiniteGroup::from_json(text, &format!("{stem}.json")),
            None => FiniteGroup::by_name(&stem),
        },
    }
}

/// `sl2q`, `nonflat`, the built-in names, or a path.
pub fn r_matrix(spec: &str) -> Result<RMatrix> {
    match resolve(spec)? {
        Ok((origin, text)) => RMatrix::from_json(&text, &origin),
        Err(stem) => match lookup(RMATRICES, &stem) {
            Some(text) => RMatrix::from_json(text, &format!("{stem}.json")),
            None => RMatrix::builtin(&stem),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::jacobi_check;

    #[test]
    fn lie_fixtures_load() {
        for n in ["sl2.json", "heis3", "borel_sl2", "abelian_3", "abelian_5"] {
            let g = lie_algebra(n).unwrap();
            assert!(jacobi_check(&g).is_ok(), "{n}");
        }
        assert_eq!(lie_algebra("abelian_5").unwrap().dim(), 5);
        assert!(matches!(lie_algebra("nope"), Err(Error::Invalid(_))));
        assert!(matches!(lie_algebra("missing/sl2.json"), Err(Error::Io { .. })));
    }

    #[test]
    fn group_fixtures_match_constructors() {
        assert_eq!(finite_group("S3.json").unwrap(), FiniteGroup::s3());
        for n in 2..=4 {
            assert_eq!(finite_group(&format!("Z{n}")).unwrap(), FiniteGroup::cyclic(n));
        }
        assert_eq!(finite_group("Z5").unwrap().order(), 5);
    }

    #[test]
    fn rmatrix_fixtures_match_constructors() {
        assert_eq!(r_matrix("sl2q.json").unwrap(), RMatrix::standard_sl2());
        assert_eq!(r_matrix("nonflat").unwrap(), RMatrix::diagonal_counterexample());
    }
}
