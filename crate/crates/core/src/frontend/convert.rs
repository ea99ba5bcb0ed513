//! Conversion from the tree-sitter concrete syntax tree to the
//! simplified [`AstNode`] representation.

use super::{AstNode, NodeKind, Receiver, Span};
use tree_sitter::Node;

pub(super) fn convert_tree(root: Node, src: &str) -> AstNode {
    convert(root, src).unwrap_or(AstNode {
        kind: NodeKind::CompilationUnit,
        span: Span::from_ts(&root),
        children: Vec::new(),
    })
}

fn text<'a>(node: &Node, src: &'a str) -> &'a str {
    &src[node.byte_range()]
}

fn convert(node: Node, src: &str) -> Option<AstNode> {
    let kind = match node.kind() {
        // Comments are not AST statements: a catch body containing only
        // comments has zero statements.
        "line_comment" | "block_comment" => return None,
        "program" => NodeKind::CompilationUnit,
        "class_declaration"
        | "interface_declaration"
        | "enum_declaration"
        | "record_declaration"
        | "annotation_type_declaration" => NodeKind::TypeDecl {
            name: node
                .child_by_field_name("name")
                .map(|n| text(&n, src).to_string()),
        },
        "method_declaration" => {
            let (name, throws) = decl_signature(&node, src);
            NodeKind::MethodDecl {
                name,
                throws,
                header_span: header_span(&node),
            }
        }
        "constructor_declaration" => {
            let (name, throws) = decl_signature(&node, src);
            NodeKind::ConstructorDecl {
                name,
                throws,
                header_span: header_span(&node),
            }
        }
        "block" | "constructor_body" => NodeKind::Block,
        "try_statement" | "try_with_resources_statement" => NodeKind::TryStmt,
        "catch_clause" => {
            let (caught_types, param_name) = catch_signature(&node, src);
            NodeKind::CatchClause {
                caught_types,
                param_name,
            }
        }
        "throw_statement" => NodeKind::ThrowStmt,
        "return_statement" => NodeKind::ReturnStmt,
        "expression_statement" => NodeKind::ExprStmt,
        "method_invocation" => return Some(convert_invocation(node, src)),
        "object_creation_expression" => return Some(convert_creation(node, src)),
        "identifier" => NodeKind::NameRef {
            name: text(&node, src).to_string(),
        },
        "null_literal" => NodeKind::Literal { is_null: true },
        "true" | "false" | "character_literal" | "string_literal"
        | "decimal_integer_literal" | "hex_integer_literal" | "octal_integer_literal"
        | "binary_integer_literal" | "decimal_floating_point_literal"
        | "hex_floating_point_literal" => NodeKind::Literal { is_null: false },
        "lambda_expression" => NodeKind::Lambda,
        _ => NodeKind::Other,
    };
    Some(AstNode {
        kind,
        span: Span::from_ts(&node),
        children: convert_children(node, src),
    })
}

fn convert_children(node: Node, src: &str) -> Vec<AstNode> {
    let mut cursor = node.walk();
    node.named_children(&mut cursor)
        .filter_map(|c| convert(c, src))
        .collect()
}

fn decl_signature(node: &Node, src: &str) -> (String, Vec<String>) {
    let name = node
        .child_by_field_name("name")
        .map(|n| text(&n, src).to_string())
        .unwrap_or_default();
    let mut throws = Vec::new();
    let mut cursor = node.walk();
    for child in node.named_children(&mut cursor) {
        if child.kind() == "throws" {
            let mut tc = child.walk();
            for t in child.named_children(&mut tc) {
                throws.push(text(&t, src).to_string());
            }
        }
    }
    (name, throws)
}

/// Span of a declaration up to, but excluding, its body block.
fn header_span(node: &Node) -> Span {
    let full = Span::from_ts(node);
    match node.child_by_field_name("body") {
        Some(body) => {
            let body_span = Span::from_ts(&body);
            Span {
                start_line: full.start_line,
                start_col: full.start_col,
                end_line: body_span.start_line,
                end_col: body_span.start_col,
                byte_start: full.byte_start,
                byte_end: body_span.byte_start,
            }
        }
        None => full,
    }
}

fn catch_signature(node: &Node, src: &str) -> (Vec<String>, String) {
    let mut caught_types = Vec::new();
    let mut param_name = String::new();
    let mut cursor = node.walk();
    for child in node.named_children(&mut cursor) {
        if child.kind() == "catch_formal_parameter" {
            let mut pc = child.walk();
            for part in child.named_children(&mut pc) {
                match part.kind() {
                    "catch_type" => {
                        let mut tc = part.walk();
                        for t in part.named_children(&mut tc) {
                            caught_types.push(text(&t, src).to_string());
                        }
                    }
                    "identifier" => param_name = text(&part, src).to_string(),
                    _ => {}
                }
            }
        }
    }
    (caught_types, param_name)
}

fn convert_invocation(node: Node, src: &str) -> AstNode {
    let name = node
        .child_by_field_name("name")
        .map(|n| text(&n, src).to_string())
        .unwrap_or_default();
    let object = node.child_by_field_name("object");
    let receiver = object.as_ref().map(|o| receiver_of(o, src));

    let mut children = Vec::new();
    if let Some(o) = object {
        children.extend(convert(o, src));
    }
    if let Some(args) = node.child_by_field_name("arguments") {
        children.extend(convert_children(args, src));
    }
    AstNode {
        kind: NodeKind::MethodInvocation { name, receiver },
        span: Span::from_ts(&node),
        children,
    }
}

fn receiver_of(object: &Node, src: &str) -> Receiver {
    match object.kind() {
        "identifier" => Receiver {
            name: Some(text(object, src).to_string()),
            is_simple_name: true,
        },
        "field_access" => Receiver {
            name: object
                .child_by_field_name("field")
                .filter(|f| f.kind() == "identifier")
                .map(|f| text(&f, src).to_string()),
            is_simple_name: false,
        },
        _ => Receiver {
            name: None,
            is_simple_name: false,
        },
    }
}

fn convert_creation(node: Node, src: &str) -> AstNode {
    let type_name = node
        .child_by_field_name("type")
        .map(|t| base_type_name(&t, src))
        .unwrap_or_default();

    // Children: constructor arguments first, then the anonymous class
    // body when present. Qualifying expressions (`outer.new Inner()`)
    // are kept ahead of the arguments so no subtree is lost.
    let type_child_id = node.child_by_field_name("type").map(|t| t.id());
    let mut children = Vec::new();
    let mut cursor = node.walk();
    for child in node.named_children(&mut cursor) {
        if Some(child.id()) == type_child_id || child.kind() == "type_arguments" {
            continue;
        }
        match child.kind() {
            "argument_list" => children.extend(convert_children(child, src)),
            "class_body" => children.push(AstNode {
                kind: NodeKind::AnonymousClassBody,
                span: Span::from_ts(&child),
                children: convert_children(child, src),
            }),
            _ => children.extend(convert(child, src)),
        }
    }
    AstNode {
        kind: NodeKind::ClassInstanceCreation { type_name },
        span: Span::from_ts(&node),
        children,
    }
}

/// Type name with any generic arguments stripped: `ArrayList<String>`
/// yields `ArrayList`, `java.lang.NullPointerException` is kept whole.
fn base_type_name(ty: &Node, src: &str) -> String {
    match ty.kind() {
        "generic_type" => {
            let mut cursor = ty.walk();
            let mut name = String::new();
            for c in ty.named_children(&mut cursor) {
                if c.kind() != "type_arguments" {
                    name = base_type_name(&c, src);
                    break;
                }
            }
            name
        }
        _ => text(ty, src).to_string(),
    }
}
