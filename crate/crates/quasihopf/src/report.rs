//! Structured verification reports.
//!
//! Verifiers never fail silently and never return a bare boolean: every
//! law that is checked contributes a [`Check`] with the witnessing basis
//! indices and both sides of the first few failing equations, so that a
//! failing presentation can be debugged from the report alone.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

/// Cap on recorded witnesses per law; failures beyond it are counted.
const WITNESS_CAP: usize = 16;

#[derive(Debug, Clone, PartialEq)]
pub struct Witness {
    pub indices: Vec<usize>,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub law: String,
    pub passed: bool,
    pub failures: Vec<Witness>,
    pub suppressed: usize,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct Report {
    pub title: String,
    pub checks: Vec<Check>,
}

/// Accumulates failures for a single law while scanning basis indices.
pub struct LawScan {
    law: String,
    failures: Vec<Witness>,
    suppressed: usize,
}

impl LawScan {
    pub fn new(law: impl Into<String>) -> Self {
        LawScan {
            law: law.into(),
            failures: Vec::new(),
            suppressed: 0,
        }
    }

    /// Records an equality check; `lhs`/`rhs` are only rendered on failure.
    pub fn expect<L: fmt::Display, R: fmt::Display>(
        &mut self,
        equal: bool,
        indices: &[usize],
        lhs: impl FnOnce() -> L,
        rhs: impl FnOnce() -> R,
    ) {
        if equal {
            return;
        }
        if self.failures.len() < WITNESS_CAP {
            self.failures.push(Witness {
                indices: indices.to_vec(),
                lhs: alloc::format!("{}", lhs()),
                rhs: alloc::format!("{}", rhs()),
            });
        } else {
            self.suppressed += 1;
        }
    }

    pub fn finish(self, report: &mut Report) {
        report.checks.push(Check {
            law: self.law,
            passed: self.failures.is_empty() && self.suppressed == 0,
            failures: self.failures,
            suppressed: self.suppressed,
        });
    }
}

impl Report {
    pub fn new(title: impl Into<String>) -> Self {
        Report {
            title: title.into(),
            checks: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failed_laws(&self) -> Vec<&str> {
        self.checks
            .iter()
            .filter(|c| !c.passed)
            .map(|c| c.law.as_str())
            .collect()
    }

    pub fn check(&self, law: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.law == law)
    }

    /// Appends all checks of another report.
    pub fn merge(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    /// Convenience for single-equation laws.
    pub fn push_eq<L: fmt::Display, R: fmt::Display>(
        &mut self,
        law: impl Into<String>,
        equal: bool,
        lhs: impl FnOnce() -> L,
        rhs: impl FnOnce() -> R,
    ) {
        let mut scan = LawScan::new(law);
        scan.expect(equal, &[], lhs, rhs);
        scan.finish(self);
    }

    /// Convenience for laws that are plain conditions without two sides.
    pub fn push_flag(&mut self, law: impl Into<String>, ok: bool) {
        self.push_eq(law, ok, || "condition", || "violated");
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}: {}", self.title, if self.passed() { "PASS" } else { "FAIL" })?;
        for c in &self.checks {
            writeln!(f, "  [{}] {}", if c.passed { "ok" } else { "FAIL" }, c.law)?;
            for w in &c.failures {
                writeln!(f, "    at {:?}: lhs = {}, rhs = {}", w.indices, w.lhs, w.rhs)?;
            }
            if c.suppressed > 0 {
                writeln!(f, "    ... and {} more failures", c.suppressed)?;
            }
        }
        Ok(())
    }
}
