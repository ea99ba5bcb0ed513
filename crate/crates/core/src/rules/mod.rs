//! The fourteen exception-handling anti-pattern detectors.
//!
//! Each detector is an independent, side-effect-free predicate over a
//! [`CatchContext`], a method declaration, or a throw site. Detectors
//! may co-fire on one catch clause; disabling a rule removes exactly
//! that rule's findings and nothing else.

mod detectors;
mod predicates;

pub use crate::frontend::CatchContext;
pub use detectors::*;
pub use predicates::{
    calls_on_param, contains_return_null, contains_throw, is_logging_invocation,
    is_print_stack_trace, logging_invocation, LogLevel, LogMethod,
};

use crate::frontend::{
    extract_catch_contexts, extract_method_decls, extract_throw_sites, line_slice, AstNode,
    NodeKind, ParseOutcome, Span,
};
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};
use std::collections::BTreeSet;
use std::fmt;

/// Identifier of one of the fourteen detection rules.
///
/// Variants are ordered by catalog row number; `code()` yields the
/// stable four-letter code used in configuration and reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RuleCode {
    /// PSTE
    PrintStackTraceAndThrow,
    /// LGTE
    LogAndThrow,
    /// WEPG
    WrapWithGetMessage,
    /// RRGC
    RelyOnGetCause,
    /// RNHR
    ReturnNullWithoutHandling,
    /// MLLM
    MultiLineLogMessages,
    /// CTGE
    CatchGenericException,
    /// LGRN
    LogAndReturnNull,
    /// PSRN
    PrintStackTraceAndReturnNull,
    /// THGE
    ThrowsGenericException,
    /// INEE
    IgnoredInterruptedException,
    /// LGFT
    LogFatalOnly,
    /// CNPE
    CatchNullPointerException,
    /// TNPE
    ThrowNullPointerException,
}

impl RuleCode {
    /// All rules, in catalog row order.
    pub const ALL: [RuleCode; 14] = [
        RuleCode::PrintStackTraceAndThrow,
        RuleCode::LogAndThrow,
        RuleCode::WrapWithGetMessage,
        RuleCode::RelyOnGetCause,
        RuleCode::ReturnNullWithoutHandling,
        RuleCode::MultiLineLogMessages,
        RuleCode::CatchGenericException,
        RuleCode::LogAndReturnNull,
        RuleCode::PrintStackTraceAndReturnNull,
        RuleCode::ThrowsGenericException,
        RuleCode::IgnoredInterruptedException,
        RuleCode::LogFatalOnly,
        RuleCode::CatchNullPointerException,
        RuleCode::ThrowNullPointerException,
    ];

    pub fn code(self) -> &'static str {
        match self {
            RuleCode::PrintStackTraceAndThrow => "PSTE",
            RuleCode::LogAndThrow => "LGTE",
            RuleCode::WrapWithGetMessage => "WEPG",
            RuleCode::RelyOnGetCause => "RRGC",
            RuleCode::ReturnNullWithoutHandling => "RNHR",
            RuleCode::MultiLineLogMessages => "MLLM",
            RuleCode::CatchGenericException => "CTGE",
            RuleCode::LogAndReturnNull => "LGRN",
            RuleCode::PrintStackTraceAndReturnNull => "PSRN",
            RuleCode::ThrowsGenericException => "THGE",
            RuleCode::IgnoredInterruptedException => "INEE",
            RuleCode::LogFatalOnly => "LGFT",
            RuleCode::CatchNullPointerException => "CNPE",
            RuleCode::ThrowNullPointerException => "TNPE",
        }
    }

    /// Catalog description, emitted verbatim in every report.
    pub fn description(self) -> &'static str {
        match self {
            RuleCode::PrintStackTraceAndThrow => {
                "Printing stack-trace and throwing Exception, choose one otherwise it results in \
                 multiple log messages (multiple-entries, duplication)"
            }
            RuleCode::LogAndThrow => {
                "Logging and throwing Exception, choose one otherwise it results in multiple log \
                 messages (multiple-entries, duplication)"
            }
            RuleCode::WrapWithGetMessage => {
                "Wrapping the exception and passing getMessage() destroys the stack trace of \
                 original exception"
            }
            RuleCode::RelyOnGetCause => {
                "Relying on the result of getCause makes the code fragile, use \
                 org.apache.commons.lang.exception.ExceptionUtils.getRootCause(Throwable throwable)"
            }
            RuleCode::ReturnNullWithoutHandling => {
                "Just returns null instead of handling or re-throwing the exception, swallows the \
                 exception, losing the information forever"
            }
            RuleCode::MultiLineLogMessages => {
                "Using multi-line log messages causes problems when multiple threads are running \
                 in parallel, two log messages may end up spaced-out multiple lines apart in the \
                 log file, group together all log messages, regardless of the level"
            }
            RuleCode::CatchGenericException => {
                "Catching generic Exception, catch the specific exception that can be thrown. If \
                 swallowing it then a problem but if re-throw then it is OK"
            }
            RuleCode::LogAndReturnNull => {
                "Log and return null is wrong, instead of returning null, throw the exception, \
                 and let the caller deal with it"
            }
            RuleCode::PrintStackTraceAndReturnNull => {
                "Print stack-trace and return null is wrong, instead of returning null, throw the \
                 exception, and let the caller deal with it"
            }
            RuleCode::ThrowsGenericException => {
                "Throws generic Exception, defeats the purpose of using a checked exception, \
                 declare the specific checked exceptions that your method can throw"
            }
            RuleCode::IgnoredInterruptedException => {
                "Ignoring or suppressing InterruptedException with an empty catch-clause is an \
                 anti-pattern, empty catch block prevents in determining that an interrupted \
                 exception occurred or knowing that the thread was interrupted"
            }
            RuleCode::LogFatalOnly => {
                "If this is really a fatal condition then the method should abort and notify the \
                 caller of the fatal condition with an appropriate exception rather than only \
                 using log.fatal in the catch block"
            }
            RuleCode::CatchNullPointerException => {
                "NullPointerException is a logical or programming error in the code (result of a \
                 bug) and should be eliminated rather than catching. If you anticipate that a \
                 null will be returned then explicitly test for it"
            }
            RuleCode::ThrowNullPointerException => {
                "NullPointerException should not be thrown by the program as it is expected that \
                 it is thrown by the virtual machine"
            }
        }
    }

    /// Case-insensitive lookup by four-letter code.
    pub fn from_code(code: &str) -> Option<RuleCode> {
        RuleCode::ALL
            .iter()
            .copied()
            .find(|r| r.code().eq_ignore_ascii_case(code))
    }
}

impl fmt::Display for RuleCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

impl Serialize for RuleCode {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.code())
    }
}

impl<'de> Deserialize<'de> for RuleCode {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        RuleCode::from_code(&s)
            .ok_or_else(|| de::Error::custom(format!("unknown rule code `{s}`")))
    }
}

/// One detected anti-pattern occurrence, before severity assignment.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawFinding {
    pub rule: RuleCode,
    pub span: Span,
    pub file: String,
    /// Always the catalog description for `rule`.
    pub message: &'static str,
    /// Source lines covered by `span`, verbatim.
    pub snippet: String,
}

impl RawFinding {
    fn new(rule: RuleCode, span: Span, file: &crate::frontend::SourceFile) -> Self {
        RawFinding {
            rule,
            span,
            file: file.path.clone(),
            message: rule.description(),
            snippet: line_slice(&file.text, &span).to_string(),
        }
    }
}

/// Applies every enabled detector to every applicable construct in the
/// parsed file. Findings are ordered by (span start, rule code).
///
/// Returns an empty list when the outcome is a parse failure.
pub fn run_all_rules(outcome: &ParseOutcome, enabled: &BTreeSet<RuleCode>) -> Vec<RawFinding> {
    let root = match &outcome.result {
        Ok(root) => root,
        Err(_) => return Vec::new(),
    };
    let file = &outcome.file;
    let mut findings = Vec::new();

    for ctx in extract_catch_contexts(root, file) {
        for detector in detectors::CATCH_DETECTORS {
            if enabled.contains(&detector.rule) {
                findings.extend((detector.run)(&ctx));
            }
        }
    }

    if enabled.contains(&RuleCode::ThrowsGenericException) {
        for decl in extract_method_decls(root) {
            findings.extend(detect_thge(decl, file));
        }
    }

    if enabled.contains(&RuleCode::ThrowNullPointerException) {
        for site in extract_throw_sites(root) {
            findings.extend(detect_tnpe(site, file));
        }
    }

    findings.sort_by(|a, b| {
        (a.span.byte_start, a.rule.code(), a.span.byte_end)
            .cmp(&(b.span.byte_start, b.rule.code(), b.span.byte_end))
    });
    findings
}

/// Convenience used by tests and simple callers: run every rule.
pub fn all_rules_enabled() -> BTreeSet<RuleCode> {
    RuleCode::ALL.iter().copied().collect()
}

pub(crate) fn type_list_matches(types: &[String], simple_name: &str) -> bool {
    types.iter().any(|t| {
        t == simple_name
            || t.strip_prefix("java.lang.")
                .is_some_and(|rest| rest == simple_name)
    })
}

pub(crate) fn node_is_creation_of(node: &AstNode, simple_name: &str) -> bool {
    match &node.kind {
        NodeKind::ClassInstanceCreation { type_name } => {
            type_name == simple_name
                || type_name
                    .strip_prefix("java.lang.")
                    .is_some_and(|rest| rest == simple_name)
        }
        _ => false,
    }
}
