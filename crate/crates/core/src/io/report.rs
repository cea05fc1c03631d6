use std::fmt::Write as _;
use std::time::Instant;

use serde::Serialize;

use crate::combination::Vector;
use crate::space::GradedSpace;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

/// A nonzero term that proves a check failed: the value on `inputs` has
/// `coefficient` on the basis element `output`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReportWitness {
    pub inputs: Vec<String>,
    pub output: String,
    pub coefficient: String,
}

impl ReportWitness {
    pub fn new(space: &GradedSpace, inputs: &[usize], output: usize, coefficient: &crate::scalar::Scalar) -> Self {
        ReportWitness {
            inputs: inputs.iter().map(|&x| space.label(x).to_string()).collect(),
            output: space.label(output).to_string(),
            coefficient: coefficient.to_string(),
        }
    }

    /// The first term of a nonzero value.
    pub fn from_value(space: &GradedSpace, inputs: &[usize], value: &Vector) -> Option<Self> {
        let (&z, c) = value.iter().next()?;
        Some(ReportWitness::new(space, inputs, z, c))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckOutcome {
    pub name: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub arity: Option<usize>,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<ReportWitness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    pub elapsed_ms: f64,
}

impl CheckOutcome {
    pub fn pass(name: impl Into<String>, arity: Option<usize>) -> Self {
        CheckOutcome { name: name.into(), arity, verdict: Verdict::Pass, witness: None, detail: None, elapsed_ms: 0.0 }
    }

    pub fn fail(name: impl Into<String>, arity: Option<usize>, witness: Option<ReportWitness>, detail: Option<String>) -> Self {
        CheckOutcome { name: name.into(), arity, verdict: Verdict::Fail, witness, detail, elapsed_ms: 0.0 }
    }

    pub fn from_bool(name: impl Into<String>, ok: bool, detail: Option<String>) -> Self {
        if ok {
            CheckOutcome::pass(name, None)
        } else {
            CheckOutcome::fail(name, None, None, detail)
        }
    }

    pub fn timed(mut self, start: Instant) -> Self {
        self.elapsed_ms = start.elapsed().as_secs_f64() * 1e3;
        self
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub command: String,
    pub subject: String,
    pub checks: Vec<CheckOutcome>,
    pub elapsed_ms: f64,
}

impl Report {
    pub fn new(command: impl Into<String>, subject: impl Into<String>) -> Self {
        Report { command: command.into(), subject: subject.into(), checks: Vec::new(), elapsed_ms: 0.0 }
    }

    pub fn push(&mut self, outcome: CheckOutcome) {
        self.checks.push(outcome);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckOutcome::passed)
    }

    pub fn first_failure(&self) -> Option<&CheckOutcome> {
        self.checks.iter().find(|c| !c.passed())
    }

    /// 0 when every check passed, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.passed() {
            0
        } else {
            1
        }
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "{} {}", self.command, self.subject).unwrap();
        for c in &self.checks {
            let verdict = if c.passed() { "PASS" } else { "FAIL" };
            write!(out, "{verdict} {}", c.name).unwrap();
            if let Some(n) = c.arity {
                write!(out, " n={n}").unwrap();
            }
            if let Some(w) = &c.witness {
                write!(out, " witness ({}) -> {} coeff {}", w.inputs.join(", "), w.output, w.coefficient).unwrap();
            }
            if let Some(d) = &c.detail {
                write!(out, " [{d}]").unwrap();
            }
            writeln!(out, " ({:.1} ms)", c.elapsed_ms).unwrap();
        }
        let failed = self.checks.iter().filter(|c| !c.passed()).count();
        writeln!(
            out,
            "{}: {} checks, {failed} failed ({:.1} ms)",
            if failed == 0 { "ok" } else { "FAILED" },
            self.checks.len(),
            self.elapsed_ms
        )
        .unwrap();
        out
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}
