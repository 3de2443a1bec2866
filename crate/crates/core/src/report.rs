//! Verification reports with text and JSON renderings.

use std::fmt;

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub id: String,
    pub status: Status,
    /// summary on success, witness on failure
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct Report {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new() -> Self {
        Report::default()
    }

    pub fn with_seed(seed: u64) -> Self {
        Report { seed: Some(seed), checks: Vec::new() }
    }

    pub fn push(&mut self, id: impl Into<String>, ok: bool, detail: impl Into<String>) {
        let status = if ok { Status::Pass } else { Status::Fail };
        self.checks.push(Check { id: id.into(), status, detail: detail.into(), elapsed_ms: None });
    }

    /// Records the outcome of a check returning `Err(witness)` on failure.
    pub fn record(&mut self, id: impl Into<String>, outcome: Result<String, String>) {
        match outcome {
            Ok(d) => self.push(id, true, d),
            Err(w) => self.push(id, false, w),
        }
    }

    pub fn skip(&mut self, id: impl Into<String>, why: impl Into<String>) {
        self.checks.push(Check { id: id.into(), status: Status::Skipped, detail: why.into(), elapsed_ms: None });
    }

    pub fn extend(&mut self, prefix: &str, other: Report) {
        for mut c in other.checks {
            c.id = format!("{prefix}.{}", c.id);
            self.checks.push(c);
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| c.status == Status::Fail)
    }

    /// Stable order for rendering.
    pub fn sort(&mut self) {
        self.checks.sort_by(|a, b| a.id.cmp(&b.id));
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(s) = self.seed {
            writeln!(f, "seed {s}")?;
        }
        for c in &self.checks {
            write!(f, "{:<7} {}", c.status, c.id)?;
            if !c.detail.is_empty() {
                write!(f, ": {}", c.detail)?;
            }
            if let Some(ms) = c.elapsed_ms {
                write!(f, " ({ms} ms)")?;
            }
            writeln!(f)?;
        }
        let fails = self.checks.iter().filter(|c| c.status == Status::Fail).count();
        write!(f, "{} checks, {} failed", self.checks.len(), fails)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verdicts_agree_between_renderings() {
        let mut r = Report::with_seed(7);
        r.push("b", true, "ok");
        r.record("a", Err("x != y".into()));
        r.sort();
        assert!(!r.passed());
        assert_eq!(r.first_failure().unwrap().id, "a");
        let json: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(json["checks"][0]["status"], "fail");
        assert!(r.to_string().starts_with("seed 7\nfail    a: x != y\npass    b"));
    }
}
