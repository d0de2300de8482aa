use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use super::config::SuiteConfig;

/// Where an expected value comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Provenance {
    /// A value quoted from the mathematical statement being checked.
    Statement,
    /// A value produced by an independent brute-force oracle.
    Derived,
    /// A value that holds for elementary reasons.
    Trivial,
    /// Internal consistency of the implementation itself.
    Plumbing,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Skipped { reason: String },
}

impl Verdict {
    pub fn is_pass(&self) -> bool {
        matches!(self, Verdict::Pass)
    }

    pub fn is_fail(&self) -> bool {
        matches!(self, Verdict::Fail)
    }

    pub fn label(&self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Skipped { .. } => "skipped",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub id: String,
    pub anchor: String,
    pub inputs: Value,
    pub got: Value,
    pub want: Value,
    pub provenance: Provenance,
    pub verdict: Verdict,
    /// Wall time in milliseconds.
    pub ms: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub version: String,
    pub config: SuiteConfig,
    /// Seconds since the Unix epoch at which the run finished.
    pub timestamp: u64,
    pub checks: Vec<CheckRecord>,
    /// `true` only when every check passed; a skipped check makes it `false`.
    pub verdict: bool,
}

impl SuiteReport {
    pub fn passed(&self) -> usize {
        self.checks.iter().filter(|c| c.verdict.is_pass()).count()
    }

    pub fn failed(&self) -> usize {
        self.checks.iter().filter(|c| c.verdict.is_fail()).count()
    }

    pub fn skipped(&self) -> usize {
        self.checks.len() - self.passed() - self.failed()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// JSON with wall times and the timestamp zeroed, for comparing runs.
    pub fn canonical_json(&self) -> String {
        let mut r = self.clone();
        r.timestamp = 0;
        for c in &mut r.checks {
            c.ms = 0;
        }
        r.to_json()
    }

    pub fn to_markdown(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "# theta-trace verification report\n");
        let _ = writeln!(s, "version {}, groups: {}\n", self.version, self.config.group_names().join(", "));
        let _ = writeln!(s, "| id | anchor | provenance | verdict | got | want | ms |");
        let _ = writeln!(s, "|---|---|---|---|---|---|---|");
        for c in &self.checks {
            let verdict = match &c.verdict {
                Verdict::Skipped { reason } => format!("skipped ({reason})"),
                v => v.label().to_string(),
            };
            let _ = writeln!(
                s,
                "| {} | {} | {:?} | {} | `{}` | `{}` | {} |",
                c.id,
                c.anchor,
                c.provenance,
                verdict,
                compact(&c.got),
                compact(&c.want),
                c.ms
            );
        }
        let _ = writeln!(
            s,
            "\n**{}**: {} passed, {} failed, {} skipped",
            if self.verdict { "PASS" } else { "FAIL" },
            self.passed(),
            self.failed(),
            self.skipped()
        );
        s
    }
}

fn compact(v: &Value) -> String {
    let s = v.to_string().replace('|', "\\|");
    if s.chars().count() > 120 {
        format!("{}…", s.chars().take(117).collect::<String>())
    } else {
        s
    }
}
