//! Deterministic Java project generator.
//!
//! Produces a multi-package project of realistic-looking classes with a
//! mix of clean code and seeded exception-handling anti-patterns. The
//! same seed always yields byte-identical files, which the determinism
//! and robustness criteria rely on.

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use std::fmt::Write as _;
use std::fs;
use std::path::Path;

const PACKAGES: &[&str] = &[
    "com.acme.app",
    "com.acme.app.internal",
    "com.acme.net",
    "com.acme.net.http",
    "com.acme.db",
    "com.acme.db.migration",
    "com.acme.service",
    "com.acme.util",
];

const NOUNS: &[&str] = &[
    "Account", "Batch", "Cache", "Channel", "Config", "Cursor", "Dispatch", "Engine", "Feed",
    "Gateway", "Handler", "Index", "Job", "Ledger", "Mapper", "Node", "Order", "Parser", "Queue",
    "Registry", "Router", "Schema", "Session", "Stream", "Task", "Token", "Worker",
];

const SUFFIXES: &[&str] = &["Manager", "Service", "Loader", "Factory", "Client", "Store", "Util"];

pub struct Corpus {
    pub files: usize,
    pub lines: usize,
}

/// Writes `file_count` generated classes under `root`, returning corpus
/// statistics.
pub fn generate_project(root: &Path, seed: u64, file_count: usize) -> Corpus {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut lines = 0;
    for index in 0..file_count {
        let package = PACKAGES[index % PACKAGES.len()];
        let class_name = format!(
            "{}{}{}",
            NOUNS[rng.gen_range(0..NOUNS.len())],
            SUFFIXES[rng.gen_range(0..SUFFIXES.len())],
            index
        );
        let source = generate_class(&mut rng, package, &class_name);
        lines += source.lines().count();
        let dir = root.join(package.replace('.', "/"));
        fs::create_dir_all(&dir).unwrap();
        fs::write(dir.join(format!("{class_name}.java")), source).unwrap();
    }
    Corpus { files: file_count, lines }
}

fn generate_class(rng: &mut ChaCha8Rng, package: &str, class_name: &str) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "package {package};");
    let _ = writeln!(out);
    let _ = writeln!(out, "import java.io.IOException;");
    let _ = writeln!(out, "import java.util.List;");
    if rng.gen_bool(0.4) {
        let _ = writeln!(out, "import java.util.Map;");
    }
    let _ = writeln!(out);
    if rng.gen_bool(0.3) {
        let _ = writeln!(out, "/**");
        let _ = writeln!(out, " * Generated support class for {class_name}.");
        let _ = writeln!(out, " */");
    }
    let _ = writeln!(out, "public class {class_name} {{");
    let _ = writeln!(out);
    let _ = writeln!(
        out,
        "    private static final Logger log = Logger.getLogger({class_name}.class);"
    );
    let _ = writeln!(out, "    private int counter;");
    let _ = writeln!(out);

    let methods = rng.gen_range(3..7);
    for m in 0..methods {
        write_method(rng, &mut out, m);
    }

    let _ = writeln!(out, "    private Object fetch(int key) {{");
    let _ = writeln!(out, "        return Integer.valueOf(key * 31);");
    let _ = writeln!(out, "    }}");
    let _ = writeln!(out, "}}");
    out
}

fn write_method(rng: &mut ChaCha8Rng, out: &mut String, index: usize) {
    match rng.gen_range(0..10) {
        // Plain computation, no exception handling.
        0 | 1 => {
            let _ = writeln!(out, "    int compute{index}(int n) {{");
            let _ = writeln!(out, "        int total = 0;");
            let _ = writeln!(out, "        for (int i = 0; i < n; i++) {{");
            let _ = writeln!(out, "            total += i * {};", rng.gen_range(2..9));
            let _ = writeln!(out, "        }}");
            let _ = writeln!(out, "        return total;");
            let _ = writeln!(out, "    }}");
        }
        // Well-behaved handler: log only, specific type.
        2 | 3 => {
            let _ = writeln!(out, "    void poll{index}() {{");
            let _ = writeln!(out, "        try {{");
            let _ = writeln!(out, "            counter += refresh(); // may catch fire");
            let _ = writeln!(out, "        }} catch (IOException e) {{");
            let _ = writeln!(out, "            log.warn(\"poll failed: \" + e.getMessage());");
            let _ = writeln!(out, "        }}");
            let _ = writeln!(out, "    }}");
        }
        // Rethrow wrapper (clean: cause preserved).
        4 => {
            let _ = writeln!(out, "    Object load{index}(String key) {{");
            let _ = writeln!(out, "        try {{");
            let _ = writeln!(out, "            return fetch(key.length());");
            let _ = writeln!(out, "        }} catch (RuntimeException e) {{");
            let _ = writeln!(out, "            throw new IllegalStateException(\"load \" + key, e);");
            let _ = writeln!(out, "        }}");
            let _ = writeln!(out, "    }}");
        }
        // Seeded anti-pattern: catch generic Exception and swallow.
        5 => {
            let _ = writeln!(out, "    Object tryLoad{index}(String key) {{");
            let _ = writeln!(out, "        try {{");
            let _ = writeln!(out, "            return fetch(key.length());");
            let _ = writeln!(out, "        }} catch (Exception e) {{");
            let _ = writeln!(out, "            log.error(\"lookup failed for \" + key);");
            let _ = writeln!(out, "            return null;");
            let _ = writeln!(out, "        }}");
            let _ = writeln!(out, "    }}");
        }
        // Seeded anti-pattern: print stack trace and return null.
        6 => {
            let _ = writeln!(out, "    List<String> scan{index}() {{");
            let _ = writeln!(out, "        try {{");
            let _ = writeln!(out, "            return walk(\"segment-{index}\");");
            let _ = writeln!(out, "        }} catch (IOException e) {{");
            let _ = writeln!(out, "            e.printStackTrace();");
            let _ = writeln!(out, "            return null;");
            let _ = writeln!(out, "        }}");
            let _ = writeln!(out, "    }}");
        }
        // Seeded anti-pattern: empty InterruptedException handler.
        7 => {
            let _ = writeln!(out, "    void pause{index}(long millis) {{");
            let _ = writeln!(out, "        try {{");
            let _ = writeln!(out, "            Thread.sleep(millis);");
            let _ = writeln!(out, "        }} catch (InterruptedException ie) {{");
            let _ = writeln!(out, "        }}");
            let _ = writeln!(out, "    }}");
        }
        // Seeded anti-pattern: throws generic Exception.
        8 => {
            let _ = writeln!(out, "    void reload{index}() throws Exception {{");
            let _ = writeln!(out, "        if (counter > {}) {{", rng.gen_range(10..99));
            let _ = writeln!(out, "            counter = 0;");
            let _ = writeln!(out, "        }}");
            let _ = writeln!(out, "    }}");
        }
        // Nested handler with a lambda, plus a string mentioning catch.
        _ => {
            let _ = writeln!(out, "    Runnable defer{index}() {{");
            let _ = writeln!(out, "        String tag = \"defer catch {index}\";");
            let _ = writeln!(out, "        try {{");
            let _ = writeln!(out, "            return () -> log.debug(tag);");
            let _ = writeln!(out, "        }} catch (IllegalArgumentException e) {{");
            let _ = writeln!(out, "            try {{");
            let _ = writeln!(out, "                return () -> log.debug(\"retry\");");
            let _ = writeln!(out, "            }} catch (IllegalStateException inner) {{");
            let _ = writeln!(out, "                log.warn(\"giving up: \" + inner.getMessage());");
            let _ = writeln!(out, "                return null;");
            let _ = writeln!(out, "            }}");
            let _ = writeln!(out, "        }}");
            let _ = writeln!(out, "    }}");
        }
    }
    let _ = writeln!(out);
}
