//! Analysis configuration: per-rule severity, regex include/exclude
//! scoping, and report options.
//!
//! Configuration comes from an optional JSON file (default name
//! `exnlint.json`) merged with command-line `CODE=LEVEL` overrides,
//! applied left to right. Every rule defaults to `warning`.

use crate::frontend::SourceFile;
use crate::rules::RuleCode;
use regex::Regex;
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::fmt;
use std::path::Path;

/// Default config file name, looked up in the analysis root.
pub const DEFAULT_CONFIG_NAME: &str = "exnlint.json";

/// Reporting level assigned to a rule.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Severity {
    Error,
    Warning,
    Ignore,
}

impl Severity {
    pub fn parse(s: &str) -> Option<Severity> {
        match s.to_ascii_lowercase().as_str() {
            "error" => Some(Severity::Error),
            "warning" => Some(Severity::Warning),
            "ignore" => Some(Severity::Ignore),
            _ => None,
        }
    }

    /// Lowercase form used in JSON and config files.
    pub fn as_str(self) -> &'static str {
        match self {
            Severity::Error => "error",
            Severity::Warning => "warning",
            Severity::Ignore => "ignore",
        }
    }

    /// Uppercase label used in text reports.
    pub fn label(self) -> &'static str {
        match self {
            Severity::Error => "ERROR",
            Severity::Warning => "WARNING",
            Severity::Ignore => "IGNORE",
        }
    }
}

impl fmt::Display for Severity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// When the process exit code should report failure.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FailOn {
    Error,
    Warning,
    Never,
}

impl FailOn {
    pub fn parse(s: &str) -> Option<FailOn> {
        match s.to_ascii_lowercase().as_str() {
            "error" => Some(FailOn::Error),
            "warning" => Some(FailOn::Warning),
            "never" => Some(FailOn::Never),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Text,
    Json,
}

impl ReportFormat {
    pub fn parse(s: &str) -> Option<ReportFormat> {
        match s.to_ascii_lowercase().as_str() {
            "text" => Some(ReportFormat::Text),
            "json" => Some(ReportFormat::Json),
            _ => None,
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum ConfigError {
    #[error("cannot read config file {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("malformed JSON in {path}: {source}")]
    Json {
        path: String,
        source: serde_json::Error,
    },
    #[error("unknown rule code `{0}`")]
    UnknownRule(String),
    #[error("invalid severity `{value}` for rule {code} (expected error, warning or ignore)")]
    BadSeverity { code: String, value: String },
    #[error("invalid regex `{pattern}`: {source}")]
    BadRegex {
        pattern: String,
        source: regex::Error,
    },
    #[error("invalid fail_on value `{0}` (expected error, warning or never)")]
    BadFailOn(String),
    #[error("invalid format value `{0}` (expected text or json)")]
    BadFormat(String),
    #[error("invalid severity override `{0}` (expected CODE=LEVEL)")]
    BadOverride(String),
}

/// On-disk JSON schema. All keys optional; unknown keys are errors.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct ConfigFile {
    severities: Option<std::collections::BTreeMap<String, String>>,
    include: Option<Vec<String>>,
    exclude: Option<Vec<String>>,
    fail_on: Option<String>,
    format: Option<String>,
}

/// Immutable analysis configuration, shared across worker threads.
#[derive(Debug, Clone)]
pub struct AnalysisConfig {
    severities: [Severity; 14],
    include: Vec<Regex>,
    exclude: Vec<Regex>,
    pub fail_on: FailOn,
    pub format: ReportFormat,
}

impl Default for AnalysisConfig {
    fn default() -> Self {
        AnalysisConfig {
            severities: [Severity::Warning; 14],
            include: Vec::new(),
            exclude: Vec::new(),
            fail_on: FailOn::Error,
            format: ReportFormat::Text,
        }
    }
}

impl AnalysisConfig {
    /// Loads configuration: file (when given) first, then `CODE=LEVEL`
    /// overrides left to right.
    pub fn load(path: Option<&Path>, overrides: &[String]) -> Result<AnalysisConfig, ConfigError> {
        let mut config = AnalysisConfig::default();
        if let Some(path) = path {
            config.apply_file(path)?;
        }
        for item in overrides {
            config.apply_override(item)?;
        }
        Ok(config)
    }

    fn apply_file(&mut self, path: &Path) -> Result<(), ConfigError> {
        let display = path.display().to_string();
        let text = std::fs::read_to_string(path).map_err(|source| ConfigError::Io {
            path: display.clone(),
            source,
        })?;
        let file: ConfigFile = serde_json::from_str(&text).map_err(|source| ConfigError::Json {
            path: display,
            source,
        })?;
        if let Some(severities) = file.severities {
            for (code, value) in severities {
                let rule = RuleCode::from_code(&code)
                    .ok_or_else(|| ConfigError::UnknownRule(code.clone()))?;
                let severity = Severity::parse(&value).ok_or(ConfigError::BadSeverity {
                    code: rule.code().to_string(),
                    value,
                })?;
                self.set_severity(rule, severity);
            }
        }
        for pattern in file.include.unwrap_or_default() {
            self.add_include(&pattern)?;
        }
        for pattern in file.exclude.unwrap_or_default() {
            self.add_exclude(&pattern)?;
        }
        if let Some(value) = file.fail_on {
            self.fail_on = FailOn::parse(&value).ok_or(ConfigError::BadFailOn(value))?;
        }
        if let Some(value) = file.format {
            self.format = ReportFormat::parse(&value).ok_or(ConfigError::BadFormat(value))?;
        }
        Ok(())
    }

    /// Applies one `CODE=LEVEL` override.
    pub fn apply_override(&mut self, item: &str) -> Result<(), ConfigError> {
        let (code, level) = item
            .split_once('=')
            .ok_or_else(|| ConfigError::BadOverride(item.to_string()))?;
        let rule = RuleCode::from_code(code.trim())
            .ok_or_else(|| ConfigError::UnknownRule(code.trim().to_string()))?;
        let severity = Severity::parse(level.trim()).ok_or(ConfigError::BadSeverity {
            code: rule.code().to_string(),
            value: level.trim().to_string(),
        })?;
        self.set_severity(rule, severity);
        Ok(())
    }

    pub fn add_include(&mut self, pattern: &str) -> Result<(), ConfigError> {
        self.include.push(compile(pattern)?);
        Ok(())
    }

    pub fn add_exclude(&mut self, pattern: &str) -> Result<(), ConfigError> {
        self.exclude.push(compile(pattern)?);
        Ok(())
    }

    pub fn set_severity(&mut self, rule: RuleCode, severity: Severity) {
        self.severities[rule as usize] = severity;
    }

    pub fn severity(&self, rule: RuleCode) -> Severity {
        self.severities[rule as usize]
    }

    /// Every rule whose severity is not `ignore`.
    pub fn enabled_rules(&self) -> BTreeSet<RuleCode> {
        RuleCode::ALL
            .iter()
            .copied()
            .filter(|r| self.severity(*r) != Severity::Ignore)
            .collect()
    }

    /// Scope decision for a file, from its package and primary type
    /// name. The subject is `package.TypeName` (type name alone without
    /// a package, package alone without a type). Exclusions win;
    /// non-empty include lists require a match; matching is unanchored
    /// search, so `^` and `$` anchor within the pattern itself.
    pub fn scope_allows(&self, package: Option<&str>, type_name: Option<&str>) -> bool {
        let subject = subject_for(package, type_name);
        if self.exclude.iter().any(|re| re.is_match(&subject)) {
            return false;
        }
        if !self.include.is_empty() {
            return self.include.iter().any(|re| re.is_match(&subject));
        }
        true
    }

    pub fn scope_filter(&self, file: &SourceFile) -> bool {
        self.scope_allows(file.package_name.as_deref(), file.primary_type_name.as_deref())
    }
}

fn compile(pattern: &str) -> Result<Regex, ConfigError> {
    Regex::new(pattern).map_err(|source| ConfigError::BadRegex {
        pattern: pattern.to_string(),
        source,
    })
}

/// Fully qualified subject string matched by scope regexes.
pub fn subject_for(package: Option<&str>, type_name: Option<&str>) -> String {
    match (package, type_name) {
        (Some(p), Some(t)) => format!("{p}.{t}"),
        (None, Some(t)) => t.to_string(),
        (Some(p), None) => p.to_string(),
        (None, None) => String::new(),
    }
}
