//! One detection function per catalog rule.
//!
//! Span conventions: catch-level rules span the catch body; WEPG and
//! TNPE span the offending throw statement; RRGC spans the first
//! `getCause` invocation; THGE spans the declaration header.

use super::predicates::{
    calls_on_param, contains_logging, contains_logging_at, contains_print_stack_trace,
    contains_return_null, contains_throw, count_logging_statements, for_each_in_scope, LogLevel,
};
use super::{node_is_creation_of, type_list_matches, RawFinding, RuleCode};
use crate::frontend::{AstNode, CatchContext, NodeKind, SourceFile};

pub(crate) struct CatchDetector {
    pub rule: RuleCode,
    pub run: fn(&CatchContext) -> Vec<RawFinding>,
}

pub(crate) const CATCH_DETECTORS: &[CatchDetector] = &[
    CatchDetector { rule: RuleCode::PrintStackTraceAndThrow, run: detect_pste },
    CatchDetector { rule: RuleCode::LogAndThrow, run: detect_lgte },
    CatchDetector { rule: RuleCode::WrapWithGetMessage, run: detect_wepg },
    CatchDetector { rule: RuleCode::RelyOnGetCause, run: detect_rrgc },
    CatchDetector { rule: RuleCode::ReturnNullWithoutHandling, run: detect_rnhr },
    CatchDetector { rule: RuleCode::MultiLineLogMessages, run: detect_mllm },
    CatchDetector { rule: RuleCode::CatchGenericException, run: detect_ctge },
    CatchDetector { rule: RuleCode::LogAndReturnNull, run: detect_lgrn },
    CatchDetector { rule: RuleCode::PrintStackTraceAndReturnNull, run: detect_psrn },
    CatchDetector { rule: RuleCode::IgnoredInterruptedException, run: detect_inee },
    CatchDetector { rule: RuleCode::LogFatalOnly, run: detect_lgft },
    CatchDetector { rule: RuleCode::CatchNullPointerException, run: detect_cnpe },
];

fn one(rule: RuleCode, ctx: &CatchContext) -> Vec<RawFinding> {
    vec![RawFinding::new(rule, ctx.body_span, ctx.file)]
}

/// Printing the stack trace and also throwing: pick one.
pub fn detect_pste(ctx: &CatchContext) -> Vec<RawFinding> {
    if contains_print_stack_trace(ctx.body, ctx.param_name) && contains_throw(ctx.body) {
        one(RuleCode::PrintStackTraceAndThrow, ctx)
    } else {
        Vec::new()
    }
}

/// Logging and also throwing: pick one.
pub fn detect_lgte(ctx: &CatchContext) -> Vec<RawFinding> {
    if contains_logging(ctx.body) && contains_throw(ctx.body) {
        one(RuleCode::LogAndThrow, ctx)
    } else {
        Vec::new()
    }
}

/// Wrapping the exception while passing only `getMessage()`, which
/// drops the original stack trace. A throw that also passes the caught
/// variable itself preserves the cause and is exempt.
pub fn detect_wepg(ctx: &CatchContext) -> Vec<RawFinding> {
    let mut findings = Vec::new();
    for_each_in_scope(ctx.body, &mut |n| {
        if n.kind != NodeKind::ThrowStmt {
            return;
        }
        let Some(thrown) = n.children.first() else { return };
        if !matches!(thrown.kind, NodeKind::ClassInstanceCreation { .. }) {
            return;
        }
        let args: Vec<&AstNode> = thrown
            .children
            .iter()
            .filter(|c| c.kind != NodeKind::AnonymousClassBody)
            .collect();
        let passes_param_directly = args.iter().any(|a| {
            matches!(&a.kind, NodeKind::NameRef { name } if name == ctx.param_name)
        });
        let uses_get_message = args
            .iter()
            .any(|a| subtree_calls_on_param(a, ctx.param_name, "getMessage"));
        if uses_get_message && !passes_param_directly {
            findings.push(RawFinding::new(RuleCode::WrapWithGetMessage, n.span, ctx.file));
        }
    });
    findings
}

fn subtree_calls_on_param(node: &AstNode, param: &str, method: &str) -> bool {
    !calls_on_param(std::slice::from_ref(node), param, method).is_empty()
}

/// Relying on `getCause()` of the caught exception.
pub fn detect_rrgc(ctx: &CatchContext) -> Vec<RawFinding> {
    match calls_on_param(ctx.body, ctx.param_name, "getCause").first() {
        Some(first) => vec![RawFinding::new(RuleCode::RelyOnGetCause, first.span, ctx.file)],
        None => Vec::new(),
    }
}

/// Returns null with no logging, no stack trace, no rethrow: the
/// exception is swallowed outright.
pub fn detect_rnhr(ctx: &CatchContext) -> Vec<RawFinding> {
    if contains_return_null(ctx.body)
        && !contains_logging(ctx.body)
        && !contains_print_stack_trace(ctx.body, ctx.param_name)
        && !contains_throw(ctx.body)
    {
        one(RuleCode::ReturnNullWithoutHandling, ctx)
    } else {
        Vec::new()
    }
}

/// Two or more logging statements in one handler, any level mixture.
pub fn detect_mllm(ctx: &CatchContext) -> Vec<RawFinding> {
    if count_logging_statements(ctx.body) >= 2 {
        one(RuleCode::MultiLineLogMessages, ctx)
    } else {
        Vec::new()
    }
}

/// Catching generic `Exception` without rethrowing.
pub fn detect_ctge(ctx: &CatchContext) -> Vec<RawFinding> {
    if type_list_matches(ctx.caught_types, "Exception") && !contains_throw(ctx.body) {
        one(RuleCode::CatchGenericException, ctx)
    } else {
        Vec::new()
    }
}

/// Log and return null, with no rethrow anywhere in the body.
pub fn detect_lgrn(ctx: &CatchContext) -> Vec<RawFinding> {
    if contains_logging(ctx.body)
        && contains_return_null(ctx.body)
        && !contains_throw(ctx.body)
    {
        one(RuleCode::LogAndReturnNull, ctx)
    } else {
        Vec::new()
    }
}

/// Print stack trace and return null, with no rethrow.
pub fn detect_psrn(ctx: &CatchContext) -> Vec<RawFinding> {
    if contains_print_stack_trace(ctx.body, ctx.param_name)
        && contains_return_null(ctx.body)
        && !contains_throw(ctx.body)
    {
        one(RuleCode::PrintStackTraceAndReturnNull, ctx)
    } else {
        Vec::new()
    }
}

/// InterruptedException swallowed by an empty catch body.
pub fn detect_inee(ctx: &CatchContext) -> Vec<RawFinding> {
    if type_list_matches(ctx.caught_types, "InterruptedException") && ctx.body.is_empty() {
        one(RuleCode::IgnoredInterruptedException, ctx)
    } else {
        Vec::new()
    }
}

/// `log.fatal` without aborting: the caller is never notified.
pub fn detect_lgft(ctx: &CatchContext) -> Vec<RawFinding> {
    if contains_logging_at(ctx.body, LogLevel::Fatal) && !contains_throw(ctx.body) {
        one(RuleCode::LogFatalOnly, ctx)
    } else {
        Vec::new()
    }
}

/// Catching NullPointerException at all; fires regardless of the body.
pub fn detect_cnpe(ctx: &CatchContext) -> Vec<RawFinding> {
    if type_list_matches(ctx.caught_types, "NullPointerException") {
        one(RuleCode::CatchNullPointerException, ctx)
    } else {
        Vec::new()
    }
}

/// Method or constructor declared `throws Exception`.
pub fn detect_thge(decl: &AstNode, file: &SourceFile) -> Vec<RawFinding> {
    let (throws, header_span) = match &decl.kind {
        NodeKind::MethodDecl { throws, header_span, .. }
        | NodeKind::ConstructorDecl { throws, header_span, .. } => (throws, *header_span),
        _ => return Vec::new(),
    };
    if type_list_matches(throws, "Exception") {
        vec![RawFinding::new(RuleCode::ThrowsGenericException, header_span, file)]
    } else {
        Vec::new()
    }
}

/// `throw new NullPointerException(...)` anywhere in the program. Only
/// creation sites are flagged; rethrowing a variable is not.
pub fn detect_tnpe(site: &AstNode, file: &SourceFile) -> Vec<RawFinding> {
    if site.kind != NodeKind::ThrowStmt {
        return Vec::new();
    }
    match site.children.first() {
        Some(thrown) if node_is_creation_of(thrown, "NullPointerException") => {
            vec![RawFinding::new(RuleCode::ThrowNullPointerException, site.span, file)]
        }
        _ => Vec::new(),
    }
}
