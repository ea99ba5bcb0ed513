//! Core library for `exnlint`, a static analyzer that detects
//! exception-handling anti-patterns in Java source code.
//!
//! The crate is organized around a small pipeline:
//!
//! * [`frontend`] parses `.java` files into a simplified AST with source
//!   spans and extracts the constructs the detectors consume (catch
//!   clauses, method declarations, throw sites).
//! * [`rules`] implements the fourteen anti-pattern detectors as pure
//!   predicates over those constructs.
//! * [`config`] loads per-rule severities and regex include/exclude
//!   scoping from a JSON file plus command-line overrides.
//! * [`report`] attaches severities, orders findings deterministically,
//!   and renders text or JSON reports with exit-code semantics.

pub mod config;
pub mod frontend;
pub mod report;
pub mod rules;

pub use config::{AnalysisConfig, ConfigError, FailOn, ReportFormat, Severity};
pub use frontend::{AstNode, NodeKind, ParseOutcome, SourceFile, Span};
pub use report::{assemble, AnalysisResults, Finding, ParseFailureEntry, RunReport};
pub use rules::{run_all_rules, CatchContext, RawFinding, RuleCode};
