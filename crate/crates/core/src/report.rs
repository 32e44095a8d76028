//! Verification reports shared by the CLI and the acceptance suite.

use std::fmt;

use serde::Serialize;
use serde_json::Value;

/// One named check.
#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct Check {
    pub id: String,
    /// The identity being checked, in TeX-like notation.
    pub identity: String,
    pub pass: bool,
    /// The exact offending element, present on failure.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
}

#[derive(Debug, Clone, Copy, Serialize, PartialEq, Eq)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// Every check that ran passed, but the time budget cut the run short.
    Incomplete,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Incomplete => "incomplete",
        })
    }
}

#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct VerificationReport {
    pub suite: String,
    pub m_min: usize,
    pub m_max: usize,
    pub k_max: i64,
    pub checks: Vec<Check>,
    /// Ranks not examined because the time budget ran out.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub skipped_m: Vec<usize>,
    pub status: Status,
}

impl VerificationReport {
    pub fn new(suite: impl Into<String>, m_max: usize, k_max: i64) -> Self {
        VerificationReport {
            suite: suite.into(),
            m_min: 1,
            m_max,
            k_max,
            checks: Vec::new(),
            skipped_m: Vec::new(),
            status: Status::Pass,
        }
    }

    pub fn push(
        &mut self,
        id: impl Into<String>,
        identity: &str,
        pass: bool,
        witness: Option<Value>,
    ) {
        self.checks.push(Check {
            id: id.into(),
            identity: identity.to_string(),
            pass,
            witness: if pass { None } else { witness },
        });
        self.refresh();
    }

    pub fn skip(&mut self, m: usize) {
        self.skipped_m.push(m);
        self.refresh();
    }

    fn refresh(&mut self) {
        self.status = if self.checks.iter().any(|c| !c.pass) {
            Status::Fail
        } else if !self.skipped_m.is_empty() {
            Status::Incomplete
        } else {
            Status::Pass
        };
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "suite {} m={}..{} k<={}",
            self.suite, self.m_min, self.m_max, self.k_max
        )?;
        for c in &self.checks {
            writeln!(
                f,
                "{} {}  {}",
                if c.pass { "PASS" } else { "FAIL" },
                c.id,
                c.identity
            )?;
            if let Some(w) = &c.witness {
                writeln!(f, "    witness: {w}")?;
            }
        }
        for m in &self.skipped_m {
            writeln!(f, "SKIP m={m} (time budget)")?;
        }
        let passed = self.checks.iter().filter(|c| c.pass).count();
        write!(
            f,
            "{}: {passed}/{} checks passed",
            self.status,
            self.checks.len()
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn status_follows_checks() {
        let mut r = VerificationReport::new("t", 1, 2);
        r.push("a", "x = x", true, None);
        assert!(r.passed());
        r.skip(2);
        assert_eq!(r.status, Status::Incomplete);
        r.push("b", "x = y", false, Some(Value::String("x - y".into())));
        assert_eq!(r.status, Status::Fail);
        assert_eq!(r.failures().count(), 1);
        assert!(r.to_json().contains("\"witness\": \"x - y\""));
    }

    #[test]
    fn witness_dropped_on_pass() {
        let mut r = VerificationReport::new("t", 1, 2);
        r.push("a", "x = x", true, Some(Value::Null));
        assert!(r.checks[0].witness.is_none());
    }
}
