//! Report documents and their text and JSON renderings.

use std::fmt::Write as _;

use homlie::{Report, Witness};
use serde::Serialize;

pub const TOOL: &str = "homlie";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct WitnessEntry {
    pub tuple: Vec<String>,
    /// Nonzero components as `[basis name, polynomial]`.
    pub components: Vec<(String, String)>,
}

impl From<&Witness> for WitnessEntry {
    fn from(w: &Witness) -> Self {
        WitnessEntry {
            tuple: w.tuple.clone(),
            components: w.components(),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct CheckEntry {
    pub id: String,
    pub status: &'static str,
    pub required: bool,
    pub witness: Option<WitnessEntry>,
    /// Failing tuples beyond the first.
    pub more: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witnesses: Option<Vec<WitnessEntry>>,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct ReportDocument {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: String,
    pub checks: Vec<CheckEntry>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub result: Vec<String>,
    pub overall: &'static str,
}

fn witness_entry(w: &Witness) -> Option<WitnessEntry> {
    if w.tuple.is_empty() && w.value.is_empty() {
        None
    } else {
        Some(w.into())
    }
}

impl ReportDocument {
    pub fn new(command: String, report: &Report, result: Vec<String>, all_witnesses: bool) -> Self {
        let checks = report
            .checks
            .iter()
            .map(|c| CheckEntry {
                id: c.id.clone(),
                status: c.status.as_str(),
                required: c.required,
                witness: c.first_witness().and_then(witness_entry),
                more: c.witnesses.len().saturating_sub(1),
                witnesses: all_witnesses.then(|| c.witnesses.iter().filter_map(witness_entry).collect()),
            })
            .collect();
        ReportDocument {
            tool: TOOL,
            version: VERSION,
            command,
            checks,
            result,
            overall: if report.passed() { "pass" } else { "fail" },
        }
    }

    pub fn passed(&self) -> bool {
        self.overall == "pass"
    }

    /// 0 on pass, 1 on a failed required check.
    pub fn exit_code(&self) -> i32 {
        if self.passed() {
            0
        } else {
            1
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.to_text(),
            Format::Json => {
                let mut s = serde_json::to_string_pretty(self).expect("report serializes");
                s.push('\n');
                s
            }
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{} {}", self.tool, self.version);
        let _ = writeln!(out, "command: {}", self.command);
        for c in &self.checks {
            let _ = write!(out, "{} {}", c.status, c.id);
            if let Some(w) = &c.witness {
                let _ = write!(out, " {}", text_witness(w));
            }
            if c.more > 0 && c.witnesses.is_none() {
                let _ = write!(out, " (+{} more)", c.more);
            }
            out.push('\n');
            if let Some(all) = &c.witnesses {
                for w in all.iter().skip(1) {
                    let _ = writeln!(out, "  {}", text_witness(w));
                }
            }
        }
        if !self.result.is_empty() {
            out.push_str("result:\n");
            for line in &self.result {
                let _ = writeln!(out, "  {line}");
            }
        }
        let _ = writeln!(out, "overall {}", self.overall);
        out
    }
}

fn text_witness(w: &WitnessEntry) -> String {
    let comps: Vec<String> = w.components.iter().map(|(b, p)| format!("{b}: {p}")).collect();
    format!("at ({}): {}", w.tuple.join(", "), comps.join(", "))
}
