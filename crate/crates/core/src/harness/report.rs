use std::fmt::Write as _;

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    /// Not run at the requested limits.
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub expected: String,
    pub actual: String,
    /// The limits the check ran at, plus a note when they are below the defaults.
    pub scope: String,
}

impl Check {
    pub fn new(name: &str, passed: bool, expected: impl Into<String>, actual: impl Into<String>, scope: impl Into<String>) -> Self {
        Check {
            name: name.to_string(),
            status: if passed { Status::Pass } else { Status::Fail },
            expected: expected.into(),
            actual: actual.into(),
            scope: scope.into(),
        }
    }

    pub fn skipped(name: &str, scope: impl Into<String>) -> Self {
        Check {
            name: name.to_string(),
            status: Status::Skipped,
            expected: String::new(),
            actual: String::new(),
            scope: scope.into(),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let tag = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Skipped => "SKIP",
            };
            writeln!(out, "{tag}  {:<28} {}", c.name, c.scope).expect("string write");
            if c.status == Status::Fail {
                writeln!(out, "      expected: {}", c.expected).expect("string write");
                writeln!(out, "      actual:   {}", c.actual).expect("string write");
            }
        }
        let failed = self.failures().count();
        writeln!(out, "{} checks, {} failed", self.checks.len(), failed).expect("string write");
        out
    }
}
