use std::fmt::Write as _;

use serde::Serialize;
use serde_json::Value;

/// How much a passing check actually establishes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Scope {
    /// A fixed computational witness of a statement about all rings.
    WitnessLevel,
    /// Every member of a finite family.
    Exhaustive,
    /// Seeded random cases.
    Sampled,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: String,
    /// The property under test.
    pub claim: String,
    pub scope: Scope,
    pub cases: usize,
    pub failures: usize,
    /// The property is known to fail here; passing means a witness was found.
    pub expected_failure: bool,
    pub passed: bool,
    /// First violation (or, for expected failures, the witness), in the
    /// command-line grammar.
    pub counterexample: Option<String>,
    pub notes: Vec<String>,
    pub elapsed_ms: u64,
}

impl CheckResult {
    pub(crate) fn new(name: impl Into<String>, claim: impl Into<String>, scope: Scope) -> Self {
        CheckResult {
            name: name.into(),
            claim: claim.into(),
            scope,
            cases: 0,
            failures: 0,
            expected_failure: false,
            passed: false,
            counterexample: None,
            notes: Vec::new(),
            elapsed_ms: 0,
        }
    }

    pub(crate) fn expect_failure(mut self, expected: bool) -> Self {
        self.expected_failure = expected;
        self
    }

    /// Counts one case, recording `violation` when present.
    pub(crate) fn case(&mut self, violation: Option<String>) {
        self.cases += 1;
        if let Some(v) = violation {
            self.failures += 1;
            if self.counterexample.is_none() {
                self.counterexample = Some(v);
            }
        }
    }

    pub(crate) fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    /// Settles `passed` once all cases are in. `extra_ok` carries any
    /// additional requirement, e.g. a certification rate.
    pub(crate) fn finish(&mut self, extra_ok: bool) {
        self.passed = extra_ok
            && if self.expected_failure {
                self.failures > 0
            } else {
                self.failures == 0
            };
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub seed: u64,
    pub cases: usize,
    /// Sorted by name.
    pub checks: Vec<CheckResult>,
    pub pass: bool,
}

impl SuiteReport {
    pub fn failed_checks(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "suite seed={} cases={}", self.seed, self.cases);
        for c in &self.checks {
            let status = match (c.passed, c.expected_failure) {
                (true, false) => "PASS",
                (true, true) => "XFAIL",
                (false, false) => "FAIL",
                (false, true) => "MISSING-WITNESS",
            };
            let _ = writeln!(
                out,
                "{status:<15} {:<48} cases={:<6} failures={:<5} {}ms",
                c.name, c.cases, c.failures, c.elapsed_ms
            );
            if let Some(ce) = &c.counterexample {
                let label = if c.expected_failure { "witness" } else { "counterexample" };
                let _ = writeln!(out, "    {label}: {ce}");
            }
            for n in &c.notes {
                let _ = writeln!(out, "    note: {n}");
            }
        }
        let _ = writeln!(out, "overall: {}", if self.pass { "PASS" } else { "FAIL" });
        out
    }
}

/// The document shape shared by every structured output.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Envelope {
    pub universe: String,
    pub op: String,
    pub inputs: Value,
    pub result: Value,
    pub certified: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub chain: Option<Value>,
    pub warnings: Vec<String>,
}

impl Envelope {
    pub fn for_suite(report: &SuiteReport) -> Self {
        Envelope {
            universe: "suite".into(),
            op: "verify".into(),
            inputs: serde_json::json!({ "seed": report.seed, "cases": report.cases }),
            result: serde_json::to_value(report).expect("serializable"),
            certified: None,
            chain: None,
            warnings: report
                .failed_checks()
                .map(|c| format!("check {} failed", c.name))
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }
}
