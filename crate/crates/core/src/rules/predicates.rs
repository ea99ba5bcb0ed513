//! Shared semantic predicates the detectors compose.
//!
//! All body searches are lexical: they descend into nested blocks, try
//! statements, and if/else arms, but never into lambda bodies, anonymous
//! class bodies, or local type declarations — code deferred to another
//! execution context does not handle the caught exception.

use crate::frontend::{AstNode, NodeKind};
use regex::Regex;
use std::sync::LazyLock;

/// Severity level of a recognized logging call.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LogLevel {
    Trace,
    Debug,
    Info,
    Warn,
    Error,
    Fatal,
}

/// How a logging method maps to a level. `Generic` covers `log(...)`,
/// which carries its level as an argument we do not resolve.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LogMethod {
    Leveled(LogLevel),
    Generic,
}

static UPPER_LOGGER: LazyLock<Regex> =
    LazyLock::new(|| Regex::new(r"^(LOG|LOGGER)[0-9_]*$").unwrap());

/// Recognizes `node` as a logging invocation: a method invocation whose
/// receiver's terminal name looks like a logger (`log`, `logger`,
/// `logging`, case-insensitive, or an upper-case `LOG`/`LOGGER` constant
/// with digit/underscore suffix) and whose method is a known logging
/// method. Name-based only; no type resolution.
pub fn logging_invocation(node: &AstNode) -> Option<LogMethod> {
    let NodeKind::MethodInvocation { name, receiver } = &node.kind else {
        return None;
    };
    let terminal = receiver.as_ref()?.name.as_deref()?;
    let looks_like_logger = ["log", "logger", "logging"]
        .iter()
        .any(|s| terminal.eq_ignore_ascii_case(s))
        || UPPER_LOGGER.is_match(terminal);
    if !looks_like_logger {
        return None;
    }
    match name.as_str() {
        "trace" => Some(LogMethod::Leveled(LogLevel::Trace)),
        "debug" => Some(LogMethod::Leveled(LogLevel::Debug)),
        "info" => Some(LogMethod::Leveled(LogLevel::Info)),
        "warn" | "warning" => Some(LogMethod::Leveled(LogLevel::Warn)),
        "error" | "severe" => Some(LogMethod::Leveled(LogLevel::Error)),
        "fatal" => Some(LogMethod::Leveled(LogLevel::Fatal)),
        "log" => Some(LogMethod::Generic),
        _ => None,
    }
}

pub fn is_logging_invocation(node: &AstNode) -> bool {
    logging_invocation(node).is_some()
}

/// True iff `node` is a `printStackTrace` invocation whose receiver is
/// exactly the caught parameter (any overload).
pub fn is_print_stack_trace(node: &AstNode, param_name: &str) -> bool {
    match &node.kind {
        NodeKind::MethodInvocation { name, receiver } => {
            name == "printStackTrace"
                && receiver.as_ref().is_some_and(|r| {
                    r.is_simple_name && r.name.as_deref() == Some(param_name)
                })
        }
        _ => false,
    }
}

/// Visits every node lexically inside `body`, skipping subtrees that
/// execute in another context.
pub(crate) fn for_each_in_scope<'a>(body: &'a [AstNode], f: &mut impl FnMut(&'a AstNode)) {
    for stmt in body {
        visit_in_scope(stmt, f);
    }
}

fn visit_in_scope<'a>(node: &'a AstNode, f: &mut impl FnMut(&'a AstNode)) {
    f(node);
    if matches!(
        node.kind,
        NodeKind::Lambda | NodeKind::AnonymousClassBody | NodeKind::TypeDecl { .. }
    ) {
        return;
    }
    for child in &node.children {
        visit_in_scope(child, f);
    }
}

fn any_in_scope(body: &[AstNode], mut pred: impl FnMut(&AstNode) -> bool) -> bool {
    let mut found = false;
    for_each_in_scope(body, &mut |n| {
        if !found && pred(n) {
            found = true;
        }
    });
    found
}

/// True iff a throw statement occurs lexically within `body`.
pub fn contains_throw(body: &[AstNode]) -> bool {
    any_in_scope(body, |n| n.kind == NodeKind::ThrowStmt)
}

/// True iff a `return null;` occurs lexically within `body`. Only a
/// literal null return counts; `return maybeNull()` does not.
pub fn contains_return_null(body: &[AstNode]) -> bool {
    any_in_scope(body, |n| {
        n.kind == NodeKind::ReturnStmt
            && matches!(
                n.children.first().map(|c| &c.kind),
                Some(NodeKind::Literal { is_null: true })
            )
    })
}

/// Every invocation of `method` on the caught parameter within `body`,
/// in source order.
pub fn calls_on_param<'a>(
    body: &'a [AstNode],
    param_name: &str,
    method: &str,
) -> Vec<&'a AstNode> {
    let mut out = Vec::new();
    for_each_in_scope(body, &mut |n| {
        if let NodeKind::MethodInvocation { name, receiver } = &n.kind {
            if name == method
                && receiver.as_ref().is_some_and(|r| {
                    r.is_simple_name && r.name.as_deref() == Some(param_name)
                })
            {
                out.push(n);
            }
        }
    });
    out
}

pub(crate) fn contains_logging(body: &[AstNode]) -> bool {
    any_in_scope(body, is_logging_invocation)
}

pub(crate) fn contains_print_stack_trace(body: &[AstNode], param_name: &str) -> bool {
    any_in_scope(body, |n| is_print_stack_trace(n, param_name))
}

/// True iff `body` contains a logging call at the given level.
pub(crate) fn contains_logging_at(body: &[AstNode], level: LogLevel) -> bool {
    any_in_scope(body, |n| {
        logging_invocation(n) == Some(LogMethod::Leveled(level))
    })
}

/// Number of statements in `body` (or nested blocks) that are logging
/// invocations, any level.
pub(crate) fn count_logging_statements(body: &[AstNode]) -> usize {
    let mut count = 0;
    for_each_in_scope(body, &mut |n| {
        if n.kind == NodeKind::ExprStmt
            && n.children.first().is_some_and(is_logging_invocation)
        {
            count += 1;
        }
    });
    count
}
