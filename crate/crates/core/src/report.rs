//! Serializable report types shared by the verification entry points and
//! the command-line interface.
//!
//! Reports are deterministic: wall-clock timings are omitted unless
//! explicitly requested, so that serialized output is byte-identical across
//! runs and thread counts for a fixed configuration.

use serde::Serialize;

use crate::presentations::{CheckOutcome, Status};
use crate::schubert::SchubertExpansion;

/// One verification item in serializable form.
#[derive(Debug, Clone, Serialize)]
pub struct CheckRow {
    pub name: String,
    pub degree: u32,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    /// Wall-clock seconds, present only when timings were requested.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seconds: Option<f64>,
}

impl CheckRow {
    /// Converts an outcome, keeping its timing only when `timings` is set.
    pub fn from_outcome(outcome: &CheckOutcome, timings: bool) -> Self {
        CheckRow {
            name: outcome.name.clone(),
            degree: outcome.degree,
            status: outcome.status,
            detail: outcome.detail.clone(),
            seconds: timings.then_some(outcome.seconds),
        }
    }
}

/// Aggregate counts over the items of a report.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
}

impl Summary {
    pub fn of(items: &[CheckRow]) -> Self {
        let passed = items.iter().filter(|r| r.status.is_pass()).count();
        let failed = items
            .iter()
            .filter(|r| r.status == Status::Fail)
            .count();
        let skipped = items
            .iter()
            .filter(|r| r.status == Status::Skipped)
            .count();
        Summary {
            total: items.len(),
            passed,
            failed,
            skipped,
        }
    }
}

/// A full report for one verification command.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub group: Option<String>,
    pub items: Vec<CheckRow>,
    pub summary: Summary,
}

impl Report {
    pub fn new(
        command: impl Into<String>,
        group: Option<String>,
        outcomes: &[CheckOutcome],
        timings: bool,
    ) -> Self {
        let items: Vec<CheckRow> = outcomes
            .iter()
            .map(|o| CheckRow::from_outcome(o, timings))
            .collect();
        let summary = Summary::of(&items);
        Report {
            command: command.into(),
            group,
            items,
            summary,
        }
    }

    /// True when no item failed.
    pub fn all_pass(&self) -> bool {
        self.summary.failed == 0
    }

    /// Human-readable rendering, one line per item plus a summary line.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let header = match &self.group {
            Some(g) => format!("{} ({g})", self.command),
            None => self.command.clone(),
        };
        out.push_str(&header);
        out.push('\n');
        for row in &self.items {
            out.push_str(&format!(
                "  {:<20} {} (degree {})",
                status_label(row.status),
                row.name,
                row.degree
            ));
            if let Some(detail) = &row.detail {
                out.push_str(&format!(" -- {detail}"));
            }
            if let Some(seconds) = row.seconds {
                out.push_str(&format!(" [{seconds:.2}s]"));
            }
            out.push('\n');
        }
        out.push_str(&format!(
            "  {} checks: {} passed, {} failed, {} skipped\n",
            self.summary.total, self.summary.passed, self.summary.failed, self.summary.skipped
        ));
        out
    }
}

/// Label used in human summaries for each outcome status.
pub fn status_label(status: Status) -> &'static str {
    match status {
        Status::Pass => "PASS",
        Status::PassTrivial => "PASS (trivial)",
        Status::PassSignFlipped => "PASS (sign flipped)",
        Status::Fail => "FAIL",
        Status::Skipped => "SKIP",
    }
}

/// One term of a serialized Schubert expansion.
#[derive(Debug, Clone, Serialize)]
pub struct ExpansionTerm {
    pub word: String,
    pub coeff: String,
}

/// Serialized form of a Schubert expansion: terms in canonical word order,
/// coefficients as exact decimal strings.
#[derive(Debug, Clone, Serialize)]
pub struct ExpansionReport {
    pub input: String,
    pub degree: u32,
    pub terms: Vec<ExpansionTerm>,
}

impl ExpansionReport {
    pub fn new(input: impl Into<String>, expansion: &SchubertExpansion) -> Self {
        let terms = expansion
            .terms
            .iter()
            .map(|(word, coeff)| ExpansionTerm {
                word: word.clone(),
                coeff: coeff.to_string(),
            })
            .collect();
        ExpansionReport {
            input: input.into(),
            degree: expansion.degree,
            terms,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn outcomes() -> Vec<CheckOutcome> {
        vec![
            CheckOutcome {
                name: "a".to_string(),
                degree: 3,
                status: Status::Pass,
                detail: None,
                seconds: 0.25,
            },
            CheckOutcome {
                name: "b".to_string(),
                degree: 4,
                status: Status::Fail,
                detail: Some("off by one".to_string()),
                seconds: 1.5,
            },
            CheckOutcome {
                name: "c".to_string(),
                degree: 18,
                status: Status::Skipped,
                detail: None,
                seconds: 0.0,
            },
        ]
    }

    #[test]
    fn summary_counts() {
        let report = Report::new("verify", Some("e6".to_string()), &outcomes(), false);
        assert_eq!(report.summary.total, 3);
        assert_eq!(report.summary.passed, 1);
        assert_eq!(report.summary.failed, 1);
        assert_eq!(report.summary.skipped, 1);
        assert!(!report.all_pass());
    }

    #[test]
    fn seconds_omitted_without_timings() {
        let report = Report::new("verify", None, &outcomes(), false);
        let json = serde_json::to_string(&report).unwrap();
        assert!(!json.contains("seconds"));
        let timed = Report::new("verify", None, &outcomes(), true);
        let json = serde_json::to_string(&timed).unwrap();
        assert!(json.contains("\"seconds\":0.25"));
    }

    #[test]
    fn serialization_is_reproducible() {
        let a = serde_json::to_string(&Report::new("x", None, &outcomes(), false)).unwrap();
        let b = serde_json::to_string(&Report::new("x", None, &outcomes(), false)).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn expansion_schema() {
        use crate::Rat;
        use std::collections::BTreeMap;
        let mut terms = BTreeMap::new();
        terms.insert("342".to_string(), Rat::from_integer(1.into()));
        terms.insert("542".to_string(), Rat::from_integer(2.into()));
        let exp = SchubertExpansion { degree: 3, terms };
        let report = ExpansionReport::new("g3", &exp);
        let value = serde_json::to_value(&report).unwrap();
        assert_eq!(value["input"], "g3");
        assert_eq!(value["degree"], 3);
        assert_eq!(value["terms"][0]["word"], "342");
        assert_eq!(value["terms"][0]["coeff"], "1");
        assert_eq!(value["terms"][1]["coeff"], "2");
    }

    #[test]
    fn text_rendering_mentions_every_item() {
        let report = Report::new("verify", Some("e7".to_string()), &outcomes(), false);
        let text = report.render_text();
        assert!(text.contains("PASS"));
        assert!(text.contains("FAIL"));
        assert!(text.contains("SKIP"));
        assert!(text.contains("off by one"));
        assert!(text.contains("3 checks: 1 passed, 1 failed, 1 skipped"));
    }
}
