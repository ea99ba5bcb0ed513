//! Naive, independent checker for the rules that mainstream Java
//! linters also cover (WEPG, CTGE, THGE, CNPE, TNPE).
//!
//! This is a deliberately different implementation route — flat regex
//! and brace matching over raw source, the way classic style checkers
//! operate — used only as a recall oracle on small fixtures: anything
//! this checker flags, the analyzer must flag too.

use regex::Regex;
use std::sync::LazyLock;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SharedRule {
    Wepg,
    Ctge,
    Thge,
    Cnpe,
    Tnpe,
}

impl SharedRule {
    pub fn code(self) -> &'static str {
        match self {
            SharedRule::Wepg => "WEPG",
            SharedRule::Ctge => "CTGE",
            SharedRule::Thge => "THGE",
            SharedRule::Cnpe => "CNPE",
            SharedRule::Tnpe => "TNPE",
        }
    }
}

static CATCH_HEADER: LazyLock<Regex> =
    LazyLock::new(|| Regex::new(r"catch\s*\(\s*([^)]*?)\s+(\w+)\s*\)\s*\{").unwrap());
static THROWS_CLAUSE: LazyLock<Regex> =
    LazyLock::new(|| Regex::new(r"throws\s+([\w.,\s]+?)\s*\{").unwrap());
static TNPE_THROW: LazyLock<Regex> = LazyLock::new(|| {
    Regex::new(r"throw\s+new\s+(java\.lang\.)?NullPointerException\s*[(]").unwrap()
});

/// Runs the naive checks over one source snippet.
pub fn check(src: &str) -> Vec<SharedRule> {
    let mut hits = std::collections::BTreeSet::new();

    for cap in CATCH_HEADER.captures_iter(src) {
        let types = cap.get(1).unwrap().as_str();
        let param = cap.get(2).unwrap().as_str();
        let body_open = cap.get(0).unwrap().end() - 1;
        let body = brace_block(src, body_open);

        let catches_generic = types
            .split('|')
            .any(|t| matches!(t.trim(), "Exception" | "java.lang.Exception"));
        if catches_generic && !body.contains("throw") {
            hits.insert(SharedRule::Ctge);
        }
        if types.contains("NullPointerException") {
            hits.insert(SharedRule::Cnpe);
        }
        let wrap = Regex::new(&format!(
            r"throw\s+new\s+[\w.]+\s*\(([^;]*\b{p}\s*\.\s*getMessage\s*\(\s*\)[^;]*)\)\s*;",
            p = regex::escape(param)
        ))
        .unwrap();
        for wcap in wrap.captures_iter(body) {
            let args = wcap.get(1).unwrap().as_str();
            let bare_param =
                Regex::new(&format!(r"[,(]\s*{p}\s*[,)]|^\s*{p}\s*[,)]|[,(]\s*{p}\s*$", p = regex::escape(param)))
                    .unwrap();
            if !bare_param.is_match(args) {
                hits.insert(SharedRule::Wepg);
            }
        }
    }

    for cap in THROWS_CLAUSE.captures_iter(src) {
        let declared = cap.get(1).unwrap().as_str();
        if declared
            .split(',')
            .any(|t| matches!(t.trim(), "Exception" | "java.lang.Exception"))
        {
            hits.insert(SharedRule::Thge);
        }
    }

    if TNPE_THROW.is_match(src) {
        hits.insert(SharedRule::Tnpe);
    }

    hits.into_iter().collect()
}

/// The `{...}` block starting at `open` (byte offset of the brace),
/// string- and comment-blind, which is fine for the small fixtures this
/// oracle runs on.
fn brace_block(src: &str, open: usize) -> &str {
    let bytes = src.as_bytes();
    debug_assert_eq!(bytes[open], b'{');
    let mut depth = 0usize;
    for i in open..bytes.len() {
        match bytes[i] {
            b'{' => depth += 1,
            b'}' => {
                depth -= 1;
                if depth == 0 {
                    return &src[open..=i];
                }
            }
            _ => {}
        }
    }
    &src[open..]
}

#[test]
fn flags_canonical_shared_patterns() {
    let hits = check(
        r#"class C {
            void a() throws Exception {}
            void b() {
                try { f(); } catch (Exception e) { log.error(e); }
                try { g(); } catch (NullPointerException n) { return; }
                throw new NullPointerException("no");
            }
        }"#,
    );
    assert_eq!(
        hits,
        [SharedRule::Ctge, SharedRule::Thge, SharedRule::Cnpe, SharedRule::Tnpe]
    );
}
