//! Per-file analysis pipeline and result merging.
//!
//! Files are processed in parallel; workers share only the immutable
//! config. Results are merged back in discovery order, so the emitted
//! report is identical to sequential processing regardless of the
//! thread count.

use exnlint_core::config::AnalysisConfig;
use exnlint_core::frontend::{self, prescan};
use exnlint_core::report::{AnalysisResults, ParseFailureEntry};
use exnlint_core::rules::{run_all_rules, RawFinding, RuleCode};
use rayon::prelude::*;
use std::collections::BTreeSet;
use std::path::{Path, PathBuf};

enum FileOutcome {
    Skipped,
    Analyzed(Vec<RawFinding>),
    Failed(ParseFailureEntry),
}

pub fn analyze(files: &[PathBuf], config: &AnalysisConfig) -> AnalysisResults {
    let enabled = config.enabled_rules();
    let outcomes: Vec<FileOutcome> = files
        .par_iter()
        .map(|path| analyze_file(path, config, &enabled))
        .collect();

    let mut results = AnalysisResults::default();
    for outcome in outcomes {
        match outcome {
            FileOutcome::Skipped => results.files_skipped += 1,
            FileOutcome::Analyzed(raw) => {
                results.files_analyzed += 1;
                results.raw.extend(raw);
            }
            FileOutcome::Failed(entry) => results.parse_failures.push(entry),
        }
    }
    results
}

fn analyze_file(path: &Path, config: &AnalysisConfig, enabled: &BTreeSet<RuleCode>) -> FileOutcome {
    let path_str = frontend::normalize_path(path);

    // Prescan only the package/type declaration before deciding whether
    // to parse at all; excluded files are never fully parsed.
    let text = match std::fs::read(path) {
        Ok(bytes) => match String::from_utf8(bytes) {
            Ok(t) => t,
            Err(e) => {
                return FileOutcome::Failed(ParseFailureEntry {
                    file: path_str,
                    message: format!(
                        "file is not valid UTF-8 (error at byte {})",
                        e.utf8_error().valid_up_to()
                    ),
                })
            }
        },
        Err(e) => {
            return FileOutcome::Failed(ParseFailureEntry {
                file: path_str,
                message: format!("cannot read file: {e}"),
            })
        }
    };
    let (package, type_name) = prescan(&text);
    if !config.scope_allows(package.as_deref(), type_name.as_deref()) {
        return FileOutcome::Skipped;
    }

    let outcome = frontend::parse_source(path_str.clone(), text);
    match &outcome.result {
        Err(failure) => FileOutcome::Failed(ParseFailureEntry {
            file: path_str,
            message: failure.to_string(),
        }),
        Ok(_) => FileOutcome::Analyzed(run_all_rules(&outcome, enabled)),
    }
}
