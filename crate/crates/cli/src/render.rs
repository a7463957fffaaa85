//! Report assembly and rendering. JSON output is fully deterministic — no
//! timestamps, no wall times, stable ordering — so byte-wise comparison
//! across runs and thread counts is meaningful. The text renderer adds the
//! elapsed wall time for interactive use.

use std::collections::BTreeMap;
use std::time::Duration;

use leibniz3::scalar::format_scalar;
use leibniz3::{CheckReport, Violation};
use serde::Serialize;

use crate::format::FileDoc;

#[derive(Clone, Debug, Serialize)]
pub struct RenderedViolation {
    pub identity: String,
    pub tuple: Vec<usize>,
    pub defect: Vec<String>,
}

impl RenderedViolation {
    fn from(v: &Violation) -> Self {
        RenderedViolation {
            identity: v.identity.clone(),
            tuple: v.tuple.clone(),
            defect: v.defect.iter().map(format_scalar).collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RenderedCheck {
    pub name: String,
    pub checked: usize,
    pub violations: usize,
    pub passed: bool,
    /// First violations up to the configured cap.
    pub listed: Vec<RenderedViolation>,
}

#[derive(Clone, Debug, Serialize)]
pub struct TheoremLine {
    pub name: String,
    pub holds: bool,
    pub detail: String,
}

/// One report per invocation; optional sections stay out of the JSON
/// entirely when unused.
#[derive(Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub status: String,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub checks: Vec<RenderedCheck>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dimensions: Option<BTreeMap<String, usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub passing_pairs: Option<Vec<[usize; 2]>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub theorems: Option<Vec<TheoremLine>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub constructed: Option<FileDoc>,
    /// Where `--out` wrote the document; text-only, never serialized.
    #[serde(skip)]
    pub saved: Option<String>,
}

impl Report {
    pub fn new(command: String) -> Self {
        Report {
            command,
            status: "pass".into(),
            checks: Vec::new(),
            dimensions: None,
            passing_pairs: None,
            theorems: None,
            constructed: None,
            saved: None,
        }
    }

    /// Appends a named check, truncating the listed violations to `cap`.
    pub fn push_check(&mut self, name: &str, report: &CheckReport, cap: usize) {
        let capped = report.clone().truncated(cap);
        self.checks.push(RenderedCheck {
            name: name.to_string(),
            checked: report.checked,
            violations: report.total_violations,
            passed: report.passed(),
            listed: capped.violations.iter().map(RenderedViolation::from).collect(),
        });
        if !report.passed() {
            self.status = "fail".into();
        }
    }

    pub fn push_theorem(&mut self, name: &str, holds: bool, detail: String) {
        self.theorems.get_or_insert_with(Vec::new).push(TheoremLine {
            name: name.to_string(),
            holds,
            detail,
        });
        if !holds {
            self.status = "fail".into();
        }
    }

    pub fn passed(&self) -> bool {
        self.status == "pass"
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports always serialize");
        s.push('\n');
        s
    }

    pub fn to_text(&self, elapsed: Duration) -> String {
        let mut out = String::new();
        out.push_str(&format!("command: {}\n", self.command));
        for c in &self.checks {
            out.push_str(&format!(
                "{}: {} tuples checked, {} violation{} — {}\n",
                c.name,
                c.checked,
                c.violations,
                if c.violations == 1 { "" } else { "s" },
                if c.passed { "pass" } else { "FAIL" }
            ));
            for v in &c.listed {
                out.push_str(&format!(
                    "  {} at {:?}: defect [{}]\n",
                    v.identity,
                    v.tuple,
                    v.defect.join(", ")
                ));
            }
            if c.listed.len() < c.violations {
                out.push_str(&format!(
                    "  … {} further violation(s) not listed\n",
                    c.violations - c.listed.len()
                ));
            }
        }
        if let Some(dims) = &self.dimensions {
            for (k, v) in dims {
                out.push_str(&format!("{k} = {v}\n"));
            }
        }
        if let Some(pairs) = &self.passing_pairs {
            let rendered: Vec<String> =
                pairs.iter().map(|[i, j]| format!("(e{i}, e{j})")).collect();
            out.push_str(&format!(
                "passing pairs ({}): {}\n",
                pairs.len(),
                if rendered.is_empty() { "none".to_string() } else { rendered.join(" ") }
            ));
        }
        if let Some(theorems) = &self.theorems {
            for t in theorems {
                out.push_str(&format!(
                    "{}: {} ({})\n",
                    t.name,
                    if t.holds { "holds" } else { "VIOLATED" },
                    t.detail
                ));
            }
        }
        if let Some(doc) = &self.constructed {
            match &self.saved {
                Some(path) => {
                    out.push_str(&format!("constructed: {} document, saved to {path}\n", doc.kind()));
                }
                None => out.push_str(&format!(
                    "constructed: {} document, use --out to save\n",
                    doc.kind()
                )),
            }
        }
        out.push_str(&format!("status: {} ({:.3}s)\n", self.status, elapsed.as_secs_f64()));
        out
    }
}
