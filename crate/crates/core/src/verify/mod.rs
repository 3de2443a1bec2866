//! Invariant suites. Each numbered criterion is one function returning a
//! report; suites are unions of criteria plus diagnostics.

mod double;
mod frt;
mod hopf;
mod moyal;
pub mod random;
mod smash;

use std::str::FromStr;

use crate::error::{Error, Result};
use crate::report::Report;

#[derive(Clone, Debug, Default)]
pub struct Options {
    pub seed: u64,
    /// flip one entry of `Λ` in the Moyal checks
    pub inject: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Moyal,
    Hopf,
    Smash,
    Double,
    Frt,
    All,
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "moyal" => Suite::Moyal,
            "hopf" => Suite::Hopf,
            "smash" => Suite::Smash,
            "double" => Suite::Double,
            "frt" => Suite::Frt,
            "all" => Suite::All,
            other => return Err(Error::Invalid(format!("unknown suite `{other}` (moyal, hopf, smash, double, frt, all)"))),
        })
    }
}

pub const CRITERIA: u8 = 10;

/// Short title of criterion `k`.
pub fn criterion_title(k: u8) -> &'static str {
    match k {
        1 => "Moyal associativity",
        2 => "bracket identity and Jacobi",
        3 => "ordering homomorphisms",
        4 => "lambda-ordered reduction",
        5 => "L-R smash associativity on H3",
        6 => "enveloping algebra Hopf suite",
        7 => "twist suite",
        8 => "Drinfeld double suite",
        9 => "FRT suite",
        10 => "unit preservation",
        _ => "unknown",
    }
}

pub fn criterion(k: u8, opts: &Options) -> Result<Report> {
    let mut r = match k {
        1 => moyal::associativity(opts)?,
        2 => moyal::bracket(opts)?,
        3 => moyal::ordering(opts)?,
        4 => smash::lambda_reduction()?,
        5 => smash::heisenberg_smash(opts)?,
        6 => hopf::enveloping(opts)?,
        7 => hopf::twists()?,
        8 => double::drinfeld()?,
        9 => frt::frt()?,
        10 => {
            let mut r = moyal::units(opts)?;
            r.checks.extend(smash::units()?.checks);
            r.checks.extend(double::units()?.checks);
            r
        }
        _ => return Err(Error::Invalid(format!("no criterion {k}"))),
    };
    r.seed = Some(opts.seed);
    r.sort();
    Ok(r)
}

fn merge(into: &mut Report, r: Report) {
    into.checks.extend(r.checks);
}

pub fn run(suite: Suite, opts: &Options) -> Result<Report> {
    let mut report = Report::with_seed(opts.seed);
    match suite {
        Suite::Moyal => {
            for k in 1..=3 {
                merge(&mut report, criterion(k, opts)?);
            }
            merge(&mut report, moyal::units(opts)?);
        }
        Suite::Hopf => {
            merge(&mut report, criterion(6, opts)?);
            merge(&mut report, criterion(7, opts)?);
        }
        Suite::Smash => {
            merge(&mut report, criterion(4, opts)?);
            merge(&mut report, criterion(5, opts)?);
            merge(&mut report, smash::units()?);
            merge(&mut report, smash::diagnostics()?);
        }
        Suite::Double => {
            merge(&mut report, criterion(8, opts)?);
            merge(&mut report, double::units()?);
        }
        Suite::Frt => merge(&mut report, criterion(9, opts)?),
        Suite::All => {
            for k in 1..=CRITERIA {
                merge(&mut report, criterion(k, opts)?);
            }
            merge(&mut report, smash::diagnostics()?);
        }
    }
    report.sort();
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names() {
        assert_eq!("frt".parse::<Suite>().unwrap(), Suite::Frt);
        assert!(matches!("nope".parse::<Suite>(), Err(Error::Invalid(_))));
        assert!(criterion(11, &Options::default()).is_err());
    }
}
