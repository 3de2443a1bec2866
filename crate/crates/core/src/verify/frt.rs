use crate::algebra::{Additive, Matrix, RationalFunction};
use crate::error::Result;
use crate::frt::{frt_relations, quantum_determinant, ybe_check, QuadraticAlgebra, RMatrix};
use crate::report::Report;
use crate::shipped;

type Q = RationalFunction;

fn ybe(r: &RMatrix) -> std::result::Result<String, String> {
    ybe_check(r).map(|_| "R12 R13 R23 = R23 R13 R12".to_string()).map_err(|w| {
        format!("entry ({}, {}): difference {}", w.row, w.col, w.difference)
    })
}

/// Span of all commutators `t_a t_b - t_b t_a`.
fn commutator_span(qa: &QuadraticAlgebra) -> Matrix<Q> {
    let g = qa.generators().len();
    let mut rows = Vec::new();
    for a in 0..g {
        for b in a + 1..g {
            rows.push(qa.quadratic(&[(Q::one(), a, b), (Q::one().neg_ref(), b, a)]));
        }
    }
    Matrix::from_rows(rows).row_basis()
}

fn flatness(qa: &QuadraticAlgebra, expect_flat: bool) -> Result<std::result::Result<String, String>> {
    let mut parts = Vec::new();
    let mut ok = true;
    for d in 2..=3 {
        let f = qa.flatness_dim(d)?;
        parts.push(format!("degree {}: {} vs {}", d, f.dim, f.benchmark));
        ok &= f.is_flat();
    }
    let text = parts.join(", ");
    Ok(if ok == expect_flat { Ok(text) } else { Err(text) })
}

pub fn frt() -> Result<Report> {
    let mut report = Report::new();
    let standard = shipped::r_matrix("sl2q.json")?;
    report.record("frt.ybe.sl2q", ybe(&standard));
    for n in 1..=3 {
        report.record(format!("frt.ybe.identity_n{n}"), ybe(&RMatrix::identity(n)));
    }

    for n in 1..=2 {
        let qa = frt_relations(&RMatrix::identity(n));
        let outcome = if n == 1 {
            if qa.relation_count() == 0 { Ok("no relations".into()) } else { Err(qa.render()) }
        } else if qa.relations() == &commutator_span(&qa) {
            Ok(format!("{} relations, all commutators", qa.relation_count()))
        } else {
            Err(qa.render())
        };
        report.record(format!("frt.identity_commutators.n{n}"), outcome);
        report.record(format!("frt.flat.identity_n{n}"), flatness(&qa, true)?);
    }

    let qa = frt_relations(&standard);
    let ab = qa.quadratic(&[(Q::one(), 0, 1), (Q::q().neg_ref(), 1, 0)]);
    report.record(
        "frt.relations.sl2q_ab_q_ba",
        if qa.in_relations(&ab) { Ok("t11*t12 = q*t12*t11 holds".into()) } else { Err(qa.render()) },
    );
    report.record("frt.flat.sl2q", flatness(&qa, true)?);
    let det = quantum_determinant(&qa, &Q::q());
    let bad = qa.non_commuting_generators(&det);
    report.record(
        "frt.qdet_central.sl2q",
        if bad.is_empty() {
            Ok("t11*t22 - q*t12*t21 commutes with every generator through degree 3".into())
        } else {
            Err(format!("fails to commute with {}", bad.iter().map(|&g| qa.generators()[g].as_str()).collect::<Vec<_>>().join(", ")))
        },
    );
    let swap = standard.relabel(&[1, 0]);
    report.record(
        "frt.relabel_equivariance.sl2q",
        if frt_relations(&swap).same_relations(&qa.relabel(&[1, 0])) {
            Ok("basis swap".into())
        } else {
            Err("relations of the relabeled R differ from the relabeled relations".into())
        },
    );

    let nonflat = shipped::r_matrix("nonflat.json")?;
    report.record("frt.ybe.nonflat", ybe(&nonflat));
    let f2 = frt_relations(&nonflat).flatness_dim(2)?;
    report.record(
        "frt.deficit.nonflat",
        if f2.dim < f2.benchmark {
            Ok(format!("degree 2: {} < {}", f2.dim, f2.benchmark))
        } else {
            Err(format!("degree 2: {} not below {}", f2.dim, f2.benchmark))
        },
    );
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_passes() {
        let r = frt().unwrap();
        assert!(r.passed(), "{r}");
    }
}
