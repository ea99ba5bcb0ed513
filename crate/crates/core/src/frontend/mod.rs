//! Java source frontend: parsing into a simplified AST and extraction of
//! the constructs the rule engine consumes.
//!
//! The parser is backed by the tree-sitter Java grammar. The concrete
//! syntax tree is converted into [`AstNode`], which keeps only the node
//! kinds the detectors inspect; everything else degrades to
//! [`NodeKind::Other`] while preserving spans and children, so rule
//! evaluation survives arbitrary Java input.

mod convert;
mod prescan;

pub use prescan::prescan;

use std::fmt;
use std::path::Path;

/// A source region, with both 1-based line/column coordinates and byte
/// offsets into the file text. Columns count bytes within the line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Span {
    pub start_line: u32,
    pub start_col: u32,
    pub end_line: u32,
    pub end_col: u32,
    pub byte_start: usize,
    pub byte_end: usize,
}

impl Span {
    fn from_ts(node: &tree_sitter::Node) -> Self {
        let s = node.start_position();
        let e = node.end_position();
        Span {
            start_line: s.row as u32 + 1,
            start_col: s.column as u32 + 1,
            end_line: e.row as u32 + 1,
            end_col: e.column as u32 + 1,
            byte_start: node.start_byte(),
            byte_end: node.end_byte(),
        }
    }
}

impl fmt::Display for Span {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.start_line, self.start_col)
    }
}

/// One Java source file plus the lightweight facts needed for scoping.
#[derive(Debug, Clone)]
pub struct SourceFile {
    /// Path as given by the caller, normalized to forward slashes.
    pub path: String,
    pub text: String,
    /// Dotted package name from the `package` declaration, if any.
    pub package_name: Option<String>,
    /// Name of the first top-level type declared in the file, if any.
    pub primary_type_name: Option<String>,
}

/// Receiver of a method invocation, to the extent the rules need it.
///
/// `name` is the terminal identifier of the receiver expression
/// (`a.b.log` has terminal `log`); it is `None` when the receiver does
/// not end in an identifier (e.g. `foo().bar()`). `is_simple_name` marks
/// receivers that are exactly a bare identifier.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Receiver {
    pub name: Option<String>,
    pub is_simple_name: bool,
}

/// Node kinds of the simplified AST. Kind-specific attributes live on
/// the variant; anything the detectors do not model is `Other`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NodeKind {
    CompilationUnit,
    TypeDecl {
        name: Option<String>,
    },
    MethodDecl {
        name: String,
        throws: Vec<String>,
        /// Span of the declaration header, up to but excluding the body.
        header_span: Span,
    },
    ConstructorDecl {
        name: String,
        throws: Vec<String>,
        header_span: Span,
    },
    Block,
    TryStmt,
    CatchClause {
        /// Caught type names; multi-catch unions preserved in order.
        caught_types: Vec<String>,
        param_name: String,
    },
    ThrowStmt,
    ReturnStmt,
    ExprStmt,
    MethodInvocation {
        name: String,
        receiver: Option<Receiver>,
    },
    ClassInstanceCreation {
        type_name: String,
    },
    NameRef {
        name: String,
    },
    Literal {
        is_null: bool,
    },
    Lambda,
    AnonymousClassBody,
    Other,
}

/// A node of the simplified AST.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AstNode {
    pub kind: NodeKind,
    pub span: Span,
    pub children: Vec<AstNode>,
}

impl AstNode {
    /// Depth-first pre-order walk over this node and all descendants.
    pub fn walk<'a>(&'a self, f: &mut impl FnMut(&'a AstNode)) {
        f(self);
        for child in &self.children {
            child.walk(f);
        }
    }
}

/// Why a file could not be analyzed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseFailure {
    pub message: String,
    /// Best-effort location of the first syntax error, when known.
    pub span: Option<Span>,
}

impl fmt::Display for ParseFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.span {
            Some(s) => write!(f, "{} at {}", self.message, s),
            None => write!(f, "{}", self.message),
        }
    }
}

/// Result of parsing one file. A failure for one file never prevents
/// analysis of other files; callers record the failure and move on.
#[derive(Debug, Clone)]
pub struct ParseOutcome {
    pub file: SourceFile,
    pub result: Result<AstNode, ParseFailure>,
}

/// Parses one `.java` file from disk.
///
/// IO errors and non-UTF-8 content are reported as `ParseFailure`, never
/// as a process abort. A file whose syntax tree contains errors is a
/// `ParseFailure` with the first error's span. An empty file parses to a
/// compilation unit with zero type declarations (not a failure).
pub fn parse_file(path: &Path) -> ParseOutcome {
    let path_str = normalize_path(path);
    let bytes = match std::fs::read(path) {
        Ok(b) => b,
        Err(e) => return failure_outcome(path_str, format!("cannot read file: {e}")),
    };
    let text = match String::from_utf8(bytes) {
        Ok(t) => t,
        Err(e) => {
            return failure_outcome(
                path_str,
                format!("file is not valid UTF-8 (error at byte {})", e.utf8_error().valid_up_to()),
            )
        }
    };
    parse_source(path_str, text)
}

/// Parses in-memory source text under the given (display) path.
pub fn parse_source(path: impl Into<String>, text: String) -> ParseOutcome {
    let path = path.into();
    let (package_name, primary_type_name) = prescan(&text);
    let file = SourceFile {
        path,
        text,
        package_name,
        primary_type_name,
    };

    let mut parser = tree_sitter::Parser::new();
    parser
        .set_language(&tree_sitter_java::LANGUAGE.into())
        .expect("Java grammar is ABI-compatible with the linked tree-sitter");
    let tree = match parser.parse(&file.text, None) {
        Some(t) => t,
        None => {
            return ParseOutcome {
                file,
                result: Err(ParseFailure {
                    message: "parser returned no tree".into(),
                    span: None,
                }),
            }
        }
    };

    let root = tree.root_node();
    if root.has_error() {
        let span = first_error_span(root);
        return ParseOutcome {
            file,
            result: Err(ParseFailure {
                message: "syntax error".into(),
                span,
            }),
        };
    }

    let ast = convert::convert_tree(root, &file.text);
    ParseOutcome {
        file,
        result: Ok(ast),
    }
}

fn failure_outcome(path: String, message: String) -> ParseOutcome {
    ParseOutcome {
        file: SourceFile {
            path,
            text: String::new(),
            package_name: None,
            primary_type_name: None,
        },
        result: Err(ParseFailure {
            message,
            span: None,
        }),
    }
}

/// Normalizes a path for reporting: forward slashes, no other rewriting.
pub fn normalize_path(path: &Path) -> String {
    path.to_string_lossy().replace('\\', "/")
}

fn first_error_span(node: tree_sitter::Node) -> Option<Span> {
    if node.is_error() || node.is_missing() {
        return Some(Span::from_ts(&node));
    }
    let mut cursor = node.walk();
    for child in node.children(&mut cursor) {
        if child.has_error() || child.is_missing() {
            if let Some(s) = first_error_span(child) {
                return Some(s);
            }
        }
    }
    None
}

/// One catch clause in analysis-ready form: the unit most detectors
/// consume. Borrowed views into the parsed AST and its source file.
#[derive(Debug, Clone, Copy)]
pub struct CatchContext<'a> {
    pub caught_types: &'a [String],
    pub param_name: &'a str,
    /// Statements of the catch body, in source order. Comments are not
    /// statements; a body holding only comments is empty.
    pub body: &'a [AstNode],
    /// Span of the catch body block, braces included.
    pub body_span: Span,
    /// Name of the nearest enclosing method or constructor; `None` for
    /// catches in initializers or field-level lambdas.
    pub enclosing_method: Option<&'a str>,
    pub file: &'a SourceFile,
}

/// Returns one context per catch clause, in source order, including
/// catches nested inside other catch bodies, lambdas, and anonymous
/// classes.
pub fn extract_catch_contexts<'a>(root: &'a AstNode, file: &'a SourceFile) -> Vec<CatchContext<'a>> {
    let mut out = Vec::new();
    collect_catches(root, file, None, &mut out);
    out
}

fn collect_catches<'a>(
    node: &'a AstNode,
    file: &'a SourceFile,
    enclosing: Option<&'a str>,
    out: &mut Vec<CatchContext<'a>>,
) {
    let enclosing = match &node.kind {
        NodeKind::MethodDecl { name, .. } | NodeKind::ConstructorDecl { name, .. } => {
            Some(name.as_str())
        }
        _ => enclosing,
    };
    if let NodeKind::CatchClause {
        caught_types,
        param_name,
    } = &node.kind
    {
        // The body block is the last Block child; the formal parameter
        // subtree precedes it.
        if let Some(block) = node
            .children
            .iter()
            .rev()
            .find(|c| c.kind == NodeKind::Block)
        {
            out.push(CatchContext {
                caught_types,
                param_name,
                body: &block.children,
                body_span: block.span,
                enclosing_method: enclosing,
                file,
            });
        }
    }
    for child in &node.children {
        collect_catches(child, file, enclosing, out);
    }
}

/// Returns every method and constructor declaration, including those in
/// nested and anonymous types.
pub fn extract_method_decls(root: &AstNode) -> Vec<&AstNode> {
    let mut out = Vec::new();
    root.walk(&mut |n| {
        if matches!(
            n.kind,
            NodeKind::MethodDecl { .. } | NodeKind::ConstructorDecl { .. }
        ) {
            out.push(n);
        }
    });
    // Walk order is pre-order, which already matches source order.
    out
}

/// Returns every throw statement in the file, inside or outside catches.
pub fn extract_throw_sites(root: &AstNode) -> Vec<&AstNode> {
    let mut out = Vec::new();
    root.walk(&mut |n| {
        if n.kind == NodeKind::ThrowStmt {
            out.push(n);
        }
    });
    out
}

/// Slice of the file text covering the full lines `span.start_line` to
/// `span.end_line`, verbatim (no trailing newline).
pub fn line_slice<'a>(text: &'a str, span: &Span) -> &'a str {
    let mut line_starts = vec![0usize];
    for (i, b) in text.bytes().enumerate() {
        if b == b'\n' {
            line_starts.push(i + 1);
        }
    }
    let start_idx = (span.start_line as usize).saturating_sub(1).min(line_starts.len() - 1);
    let end_idx = (span.end_line as usize).saturating_sub(1).min(line_starts.len() - 1);
    let start = line_starts[start_idx];
    let end = match line_starts.get(end_idx + 1) {
        Some(&next) => {
            // Exclude the newline (and a preceding carriage return).
            let mut e = next - 1;
            if e > start && text.as_bytes().get(e.wrapping_sub(1)) == Some(&b'\r') {
                e -= 1;
            }
            e
        }
        None => text.len(),
    };
    &text[start..end.max(start)]
}
