use std::fmt::Write as _;
use std::time::Instant;

use clap::ValueEnum;
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Backend {
    Exact,
    Float,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Recorded,
}

impl Status {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub paper_anchor: String,
    pub status: Status,
    pub detail: String,
    /// Outcome of a documentation-only check, which never affects the exit code.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub result: Option<Status>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seconds: Option<f64>,
}

impl Check {
    pub fn new(name: &str, anchor: &str, status: Status, detail: impl Into<String>) -> Self {
        Check {
            name: name.to_string(),
            paper_anchor: anchor.to_string(),
            status,
            detail: detail.into(),
            result: None,
            seconds: None,
        }
    }

    pub fn verdict(name: &str, anchor: &str, ok: bool, detail: impl Into<String>) -> Self {
        Self::new(name, anchor, Status::from_bool(ok), detail)
    }

    /// A check whose outcome is reported but not asserted.
    pub fn recorded(name: &str, anchor: &str, outcome: Option<bool>, detail: impl Into<String>) -> Self {
        let mut c = Self::new(name, anchor, Status::Recorded, detail);
        c.result = outcome.map(Status::from_bool);
        c
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub command: String,
    pub backend: Backend,
    pub checks: Vec<Check>,
    pub artifacts: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub table: Vec<Vec<String>>,
    #[serde(skip)]
    timings: bool,
}

impl RunReport {
    pub fn new(command: impl Into<String>, backend: Backend, timings: bool) -> Self {
        RunReport {
            command: command.into(),
            backend,
            checks: Vec::new(),
            artifacts: Vec::new(),
            table: Vec::new(),
            timings,
        }
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    /// Runs `f` and pushes its check, attaching wall time when timings are on.
    pub fn run<E>(&mut self, f: impl FnOnce() -> Result<Check, E>) -> Result<(), E> {
        let start = Instant::now();
        let mut check = f()?;
        if self.timings {
            check.seconds = Some(start.elapsed().as_secs_f64());
        }
        self.checks.push(check);
        Ok(())
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    /// 0 when no asserted check failed, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.all_passed() {
            0
        } else {
            1
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "command: {}", self.command).unwrap();
        writeln!(out, "backend: {}", match self.backend {
            Backend::Exact => "exact",
            Backend::Float => "float",
        })
        .unwrap();
        for c in &self.checks {
            let status = match (c.status, c.result) {
                (Status::Pass, _) => "PASS".to_string(),
                (Status::Fail, _) => "FAIL".to_string(),
                (Status::Recorded, Some(Status::Pass)) => "RECORDED (holds)".to_string(),
                (Status::Recorded, Some(_)) => "RECORDED (fails)".to_string(),
                (Status::Recorded, None) => "RECORDED".to_string(),
            };
            write!(out, "{status:<17} {} [{}]", c.name, c.paper_anchor).unwrap();
            if let Some(s) = c.seconds {
                write!(out, " ({s:.3} s)").unwrap();
            }
            writeln!(out).unwrap();
            for line in c.detail.lines() {
                writeln!(out, "    {line}").unwrap();
            }
        }
        if !self.table.is_empty() {
            writeln!(out).unwrap();
            let ncols = self.table.iter().map(Vec::len).max().unwrap_or(0);
            let widths: Vec<usize> = (0..ncols)
                .map(|j| {
                    self.table
                        .iter()
                        .filter_map(|r| r.get(j))
                        .map(|s| s.chars().count())
                        .max()
                        .unwrap_or(0)
                })
                .collect();
            for row in &self.table {
                let cells: Vec<String> = row
                    .iter()
                    .zip(&widths)
                    .map(|(s, &w)| format!("{s:<w$}"))
                    .collect();
                writeln!(out, "{}", cells.join("  ").trim_end()).unwrap();
            }
        }
        for a in &self.artifacts {
            writeln!(out, "wrote {a}").unwrap();
        }
        out
    }
}
