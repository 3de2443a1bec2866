use crate::double::{double_structure_check, fd_axiom_check, FdHopf, PairedHopf};
use crate::error::Result;
use crate::report::Report;
use crate::shipped;

const GROUPS: [&str; 4] = ["Z2", "Z3", "Z4", "S3"];

fn doubles() -> Result<Vec<(&'static str, PairedHopf, FdHopf)>> {
    GROUPS
        .iter()
        .map(|g| {
            let p = PairedHopf::canonical(FdHopf::group_algebra(&shipped::finite_group(g)?))?;
            let d = p.double_hopf_unchecked();
            Ok((*g, p, d))
        })
        .collect()
}

/// Hopf axioms of `D(kΓ)`, the factor embeddings, the canonical `R` and
/// agreement with the smash product.
pub fn drinfeld() -> Result<Report> {
    let mut report = Report::new();
    for (g, p, d) in doubles()? {
        report.extend(&format!("double.axioms.{g}"), fd_axiom_check(&d));
        report.extend(&format!("double.structure.{g}"), double_structure_check(&p)?);
        report.extend(&format!("double.r_matrix.{g}"), crate::double::r_matrix_check(&p, &d));
    }
    Ok(report)
}

pub fn units() -> Result<Report> {
    let mut report = Report::new();
    for (g, _, d) in doubles()? {
        let one = d.unit();
        let mut witness = None;
        for i in 0..d.dim() {
            let x = d.basis(i);
            for (l, r) in [(&one, &x), (&x, &one)] {
                let got = d.mul(l, r);
                if witness.is_none() && got != x {
                    witness = Some(format!("{} · {} = {}", d.render(l), d.render(r), d.render(&got)));
                }
            }
        }
        report.record(format!("units.double.{g}"), witness.map_or(Ok(format!("{} basis elements", d.dim())), Err));
    }
    Ok(report)
}
