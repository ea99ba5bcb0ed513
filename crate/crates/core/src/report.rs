//! Severity assignment, deterministic ordering, and report rendering.
//!
//! Reports are byte-identical across runs on identical input: no
//! timestamps, no absolute-path leakage beyond the paths the caller
//! supplied, stable sort order everywhere.

use crate::config::{AnalysisConfig, FailOn, Severity};
use crate::frontend::Span;
use crate::rules::{RawFinding, RuleCode};
use serde::{Deserialize, Serialize};
use std::fmt::Write as _;

/// A finding with its configured severity attached. Ignored rules never
/// materialize findings.
#[derive(Debug, Clone, PartialEq)]
pub struct Finding {
    pub rule: RuleCode,
    pub severity: Severity,
    pub file: String,
    pub span: Span,
    pub message: String,
    pub snippet: String,
}

/// A file that could not be parsed; analysis of other files continues.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParseFailureEntry {
    pub file: String,
    pub message: String,
}

/// Everything one analysis run produced, in render-ready order.
#[derive(Debug, Clone, Default)]
pub struct RunReport {
    /// Sorted by (file, start line, start column, rule code).
    pub findings: Vec<Finding>,
    pub parse_failures: Vec<ParseFailureEntry>,
    /// Files that were parsed and had rules run. Skipped files and
    /// parse failures are counted separately.
    pub files_analyzed: usize,
    pub files_skipped: usize,
}

impl RunReport {
    pub fn error_count(&self) -> usize {
        self.findings
            .iter()
            .filter(|f| f.severity == Severity::Error)
            .count()
    }

    pub fn warning_count(&self) -> usize {
        self.findings
            .iter()
            .filter(|f| f.severity == Severity::Warning)
            .count()
    }
}

/// Raw per-file results waiting for severity assignment.
#[derive(Debug, Clone, Default)]
pub struct AnalysisResults {
    pub raw: Vec<RawFinding>,
    pub parse_failures: Vec<ParseFailureEntry>,
    pub files_analyzed: usize,
    pub files_skipped: usize,
}

/// Attaches severities from config and sorts findings globally.
pub fn assemble(results: AnalysisResults, config: &AnalysisConfig) -> RunReport {
    let mut findings: Vec<Finding> = results
        .raw
        .into_iter()
        .filter_map(|raw| {
            let severity = config.severity(raw.rule);
            if severity == Severity::Ignore {
                return None;
            }
            Some(Finding {
                rule: raw.rule,
                severity,
                file: raw.file,
                span: raw.span,
                message: raw.message.to_string(),
                snippet: raw.snippet,
            })
        })
        .collect();
    findings.sort_by(|a, b| {
        (&a.file, a.span.start_line, a.span.start_col, a.rule.code()).cmp(&(
            &b.file,
            b.span.start_line,
            b.span.start_col,
            b.rule.code(),
        ))
    });
    RunReport {
        findings,
        parse_failures: results.parse_failures,
        files_analyzed: results.files_analyzed,
        files_skipped: results.files_skipped,
    }
}

/// Text report: errors first, then warnings, each block a header line
/// plus the snippet indented four spaces, then one summary line.
pub fn render_text(report: &RunReport) -> String {
    let mut out = String::new();
    for severity in [Severity::Error, Severity::Warning] {
        for f in report.findings.iter().filter(|f| f.severity == severity) {
            let _ = writeln!(
                out,
                "{}:{}:{} [{}][{}] {}",
                f.file,
                f.span.start_line,
                f.span.start_col,
                f.rule.code(),
                f.severity.label(),
                f.message
            );
            for line in f.snippet.lines() {
                let _ = writeln!(out, "    {line}");
            }
        }
    }
    let _ = writeln!(
        out,
        "{} errors, {} warnings, {} files analyzed, {} parse failures",
        report.error_count(),
        report.warning_count(),
        report.files_analyzed,
        report.parse_failures.len()
    );
    out
}

/// JSON shape of one finding (span flattened to line/column fields).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonFinding {
    pub rule: RuleCode,
    pub severity: Severity,
    pub file: String,
    pub start_line: u32,
    pub start_col: u32,
    pub end_line: u32,
    pub end_col: u32,
    pub message: String,
    pub snippet: String,
}

impl From<&Finding> for JsonFinding {
    fn from(f: &Finding) -> Self {
        JsonFinding {
            rule: f.rule,
            severity: f.severity,
            file: f.file.clone(),
            start_line: f.span.start_line,
            start_col: f.span.start_col,
            end_line: f.span.end_line,
            end_col: f.span.end_col,
            message: f.message.clone(),
            snippet: f.snippet.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonSummary {
    pub errors: usize,
    pub warnings: usize,
    pub files_analyzed: usize,
    pub files_skipped: usize,
}

/// Whole-report JSON document; also the parse target for consumers.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonReport {
    pub findings: Vec<JsonFinding>,
    pub parse_failures: Vec<ParseFailureEntry>,
    pub summary: JsonSummary,
}

impl From<&RunReport> for JsonReport {
    fn from(report: &RunReport) -> Self {
        JsonReport {
            findings: report.findings.iter().map(JsonFinding::from).collect(),
            parse_failures: report.parse_failures.clone(),
            summary: JsonSummary {
                errors: report.error_count(),
                warnings: report.warning_count(),
                files_analyzed: report.files_analyzed,
                files_skipped: report.files_skipped,
            },
        }
    }
}

/// Single-document JSON report, one trailing newline, deterministic key
/// and array order.
pub fn render_json(report: &RunReport) -> String {
    let doc = JsonReport::from(report);
    let mut out = serde_json::to_string(&doc).expect("report serialization is infallible");
    out.push('\n');
    out
}

/// Exit code policy: parse failures alone never flip success to failure,
/// and code 2 is reserved for usage/config errors raised elsewhere.
pub fn exit_code(report: &RunReport, fail_on: FailOn) -> i32 {
    let fail = match fail_on {
        FailOn::Error => report.error_count() > 0,
        FailOn::Warning => !report.findings.is_empty(),
        FailOn::Never => false,
    };
    i32::from(fail)
}
