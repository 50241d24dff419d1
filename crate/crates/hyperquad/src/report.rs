//! Structured results for identity-verification suites.
//!
//! A suite runs a list of named checks, each of which either proves a
//! polynomial identity (structural equality of canonical forms) or records
//! a boolean fact. Failures carry the difference polynomial so the report
//! shows *what* the discrepancy is, not just that one exists. Suites also
//! collect findings: named observations that are not pass/fail checks, such
//! as a widely printed variant of a formula that provably differs from the
//! form the library uses.

use crate::poly::Poly;
use num_traits::Zero;
use serde_json::{json, Value};

/// Number of leading terms of a difference polynomial kept in failure
/// details; enough to characterize the discrepancy without megabyte dumps.
const DIFF_TERM_CAP: usize = 24;

/// One named check inside a suite.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityEntry {
    pub name: String,
    pub pass: bool,
    /// Failure evidence, typically a truncated difference polynomial.
    pub detail: Option<String>,
}

/// A named observation attached to a suite, independent of pass/fail.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Finding {
    pub name: String,
    pub detail: String,
}

/// Outcome of one verification suite.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct IdentityReport {
    pub suite: String,
    pub entries: Vec<IdentityEntry>,
    pub findings: Vec<Finding>,
}

impl IdentityReport {
    pub fn new(suite: impl Into<String>) -> IdentityReport {
        IdentityReport {
            suite: suite.into(),
            entries: Vec::new(),
            findings: Vec::new(),
        }
    }

    pub fn all_pass(&self) -> bool {
        self.entries.iter().all(|e| e.pass)
    }

    pub fn entry(&mut self, name: impl Into<String>, pass: bool, detail: Option<String>) {
        self.entries.push(IdentityEntry {
            name: name.into(),
            pass,
            detail,
        });
    }

    /// Records whether `lhs == rhs` as polynomials; on failure the detail is
    /// the truncated difference `lhs - rhs`.
    pub fn poly_identity(&mut self, name: impl Into<String>, lhs: &Poly, rhs: &Poly) {
        let diff = lhs - rhs;
        if diff.is_zero() {
            self.entry(name, true, None);
        } else {
            let detail = format!("difference {}", diff.display_truncated(DIFF_TERM_CAP));
            self.entry(name, false, Some(detail));
        }
    }

    /// Records whether `p` is the zero polynomial.
    pub fn poly_zero(&mut self, name: impl Into<String>, p: &Poly) {
        self.poly_identity(name, p, &Poly::default());
    }

    /// One entry aggregating several labeled component identities; fails if
    /// any component differs, and the detail names each failing component.
    pub fn poly_identity_components<'a>(
        &mut self,
        name: impl Into<String>,
        components: impl IntoIterator<Item = (String, &'a Poly, &'a Poly)>,
    ) {
        let mut failures = Vec::new();
        let mut total = 0usize;
        for (label, lhs, rhs) in components {
            total += 1;
            let diff = lhs - rhs;
            if !diff.is_zero() {
                failures.push(format!(
                    "{label}: difference {}",
                    diff.display_truncated(DIFF_TERM_CAP)
                ));
            }
        }
        if failures.is_empty() {
            self.entry(name, true, None);
        } else {
            let detail = format!(
                "{} of {} components differ; {}",
                failures.len(),
                total,
                failures.join("; ")
            );
            self.entry(name, false, Some(detail));
        }
    }

    pub fn finding(&mut self, name: impl Into<String>, detail: impl Into<String>) {
        self.findings.push(Finding {
            name: name.into(),
            detail: detail.into(),
        });
    }

    pub fn merge(&mut self, other: IdentityReport) {
        self.entries.extend(other.entries);
        self.findings.extend(other.findings);
    }

    /// Plain-text rendering: one `IDENTITY` line per check, then one
    /// `FINDING` line per observation.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for e in &self.entries {
            out.push_str("IDENTITY ");
            out.push_str(&e.name);
            out.push_str(": ");
            out.push_str(if e.pass { "PASS" } else { "FAIL" });
            if let Some(detail) = &e.detail {
                out.push(' ');
                out.push_str(detail);
            }
            out.push('\n');
        }
        for f in &self.findings {
            out.push_str("FINDING ");
            out.push_str(&f.name);
            out.push_str(": ");
            out.push_str(&f.detail);
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> Value {
        json!({
            "suite": self.suite,
            "all_pass": self.all_pass(),
            "identities": self.entries.iter().map(|e| {
                let mut obj = json!({ "name": e.name, "pass": e.pass });
                if let Some(d) = &e.detail {
                    obj["detail"] = json!(d);
                }
                obj
            }).collect::<Vec<_>>(),
            "findings": self.findings.iter().map(|f| {
                json!({ "name": f.name, "detail": f.detail })
            }).collect::<Vec<_>>(),
        })
    }
}
