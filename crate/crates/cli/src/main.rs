//! `exnlint`: command-line analyzer for exception-handling anti-patterns
//! in Java source code.
//!
//! Exit codes: 0 clean, 1 policy failure per `--fail-on`, 2 usage or
//! configuration error.

mod discover;
mod runner;

use clap::Parser;
use exnlint_core::config::{AnalysisConfig, FailOn, ReportFormat, Severity, DEFAULT_CONFIG_NAME};
use exnlint_core::report::{exit_code, render_json, render_text};
use exnlint_core::rules::RuleCode;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Debug, Parser)]
#[command(
    name = "exnlint",
    version,
    about = "Detects exception-handling anti-patterns in Java source code",
    after_help = "Exit codes: 0 clean, 1 findings per --fail-on policy, 2 usage/config error."
)]
struct Cli {
    /// Files or directories to analyze (directories are walked for .java files)
    #[arg(value_name = "PATH")]
    paths: Vec<PathBuf>,

    /// Configuration file (default: exnlint.json in an analyzed directory,
    /// or $EXNLINT_CONFIG)
    #[arg(long, value_name = "FILE")]
    config: Option<PathBuf>,

    /// Per-rule severity override, e.g. --severity CTGE=error (repeatable)
    #[arg(long = "severity", value_name = "CODE=LEVEL")]
    severity: Vec<String>,

    /// Only analyze files whose qualified type name matches (repeatable)
    #[arg(long = "include", value_name = "REGEX")]
    include: Vec<String>,

    /// Skip files whose qualified type name matches (repeatable)
    #[arg(long = "exclude", value_name = "REGEX")]
    exclude: Vec<String>,

    /// Report format
    #[arg(long, value_name = "text|json", value_parser = parse_format)]
    format: Option<ReportFormat>,

    /// Write the report to a file instead of stdout
    #[arg(long, value_name = "FILE")]
    output: Option<PathBuf>,

    /// When to exit nonzero
    #[arg(long = "fail-on", value_name = "error|warning|never", value_parser = parse_fail_on)]
    fail_on: Option<FailOn>,

    /// Worker threads: a positive integer, or "auto"
    #[arg(long, value_name = "N", default_value = "auto", value_parser = parse_jobs)]
    jobs: Jobs,

    /// List the rule catalog with current severities and exit
    #[arg(long = "list-rules")]
    list_rules: bool,
}

#[derive(Debug, Clone, Copy)]
enum Jobs {
    Auto,
    Count(usize),
}

fn parse_jobs(s: &str) -> Result<Jobs, String> {
    if s.eq_ignore_ascii_case("auto") {
        return Ok(Jobs::Auto);
    }
    match s.parse::<usize>() {
        Ok(n) if n >= 1 => Ok(Jobs::Count(n)),
        _ => Err(format!("expected a positive integer or \"auto\", got `{s}`")),
    }
}

fn parse_format(s: &str) -> Result<ReportFormat, String> {
    ReportFormat::parse(s).ok_or_else(|| format!("expected text or json, got `{s}`"))
}

fn parse_fail_on(s: &str) -> Result<FailOn, String> {
    FailOn::parse(s).ok_or_else(|| format!("expected error, warning or never, got `{s}`"))
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Config(#[from] exnlint_core::config::ConfigError),
    #[error("cannot write output file {path}: {source}")]
    Output {
        path: String,
        source: std::io::Error,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(err) => {
            eprintln!("exnlint: {err}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<i32, CliError> {
    let config = build_config(&cli)?;

    if cli.list_rules {
        print!("{}", rule_listing(&config));
        return Ok(0);
    }

    if cli.paths.is_empty() {
        return Err(CliError::Usage(
            "no input paths given (try `exnlint <dir>` or `--list-rules`)".into(),
        ));
    }

    let files = discover::discover(&cli.paths).map_err(CliError::Usage)?;
    let results = match cli.jobs {
        Jobs::Auto => runner::analyze(&files, &config),
        Jobs::Count(n) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build()
                .map_err(|e| CliError::Usage(format!("cannot build thread pool: {e}")))?;
            pool.install(|| runner::analyze(&files, &config))
        }
    };

    let report = exnlint_core::report::assemble(results, &config);
    let rendered = match config.format {
        ReportFormat::Text => render_text(&report),
        ReportFormat::Json => render_json(&report),
    };
    match &cli.output {
        Some(path) => std::fs::write(path, rendered).map_err(|source| CliError::Output {
            path: path.display().to_string(),
            source,
        })?,
        None => print!("{rendered}"),
    }
    Ok(exit_code(&report, config.fail_on))
}

/// Config precedence: `--config`, then `$EXNLINT_CONFIG`, then an
/// `exnlint.json` in one of the analyzed directories (in argument
/// order), then the current directory, then built-in defaults. CLI
/// flags override whatever the file set.
fn build_config(cli: &Cli) -> Result<AnalysisConfig, CliError> {
    let path = resolve_config_path(cli);
    let mut config = AnalysisConfig::load(path.as_deref(), &cli.severity)?;
    for pattern in &cli.include {
        config.add_include(pattern)?;
    }
    for pattern in &cli.exclude {
        config.add_exclude(pattern)?;
    }
    if let Some(format) = cli.format {
        config.format = format;
    }
    if let Some(fail_on) = cli.fail_on {
        config.fail_on = fail_on;
    }
    Ok(config)
}

fn resolve_config_path(cli: &Cli) -> Option<PathBuf> {
    if let Some(path) = &cli.config {
        return Some(path.clone());
    }
    if let Ok(env_path) = std::env::var("EXNLINT_CONFIG") {
        if !env_path.is_empty() {
            return Some(PathBuf::from(env_path));
        }
    }
    for root in cli.paths.iter().filter(|p| p.is_dir()) {
        let candidate = root.join(DEFAULT_CONFIG_NAME);
        if candidate.is_file() {
            return Some(candidate);
        }
    }
    let local = PathBuf::from(DEFAULT_CONFIG_NAME);
    local.is_file().then_some(local)
}

/// The catalog, one line per rule in table order.
fn rule_listing(config: &AnalysisConfig) -> String {
    let mut out = String::new();
    for rule in RuleCode::ALL {
        let severity = config.severity(rule);
        let marker = match severity {
            Severity::Ignore => "ignore ",
            Severity::Error => "error  ",
            Severity::Warning => "warning",
        };
        out.push_str(&format!("{}  {}  {}\n", rule.code(), marker, rule.description()));
    }
    out
}
