//! Input discovery: expand the given paths into the sorted, deduplicated
//! list of `.java` files to analyze.

use std::collections::BTreeSet;
use std::path::{Path, PathBuf};

/// Collects analysis inputs. Directories are walked recursively for
/// regular files with a `.java` extension; explicitly named files are
/// taken as given. Results are deduplicated and sorted by their
/// normalized path string, so report order is stable.
///
/// Returns an error message for paths that do not exist (a usage error
/// for the caller). Unreadable directory entries and symlink cycles are
/// skipped, not fatal.
pub fn discover(paths: &[PathBuf]) -> Result<Vec<PathBuf>, String> {
    let mut found: BTreeSet<String> = BTreeSet::new();
    for path in paths {
        if !path.exists() {
            return Err(format!("path does not exist: {}", path.display()));
        }
        if path.is_dir() {
            for entry in walkdir::WalkDir::new(path)
                .follow_links(true)
                .into_iter()
                .filter_map(|e| e.ok())
            {
                if entry.file_type().is_file() && has_java_ext(entry.path()) {
                    found.insert(normalize(entry.path()));
                }
            }
        } else {
            found.insert(normalize(path));
        }
    }
    Ok(found.into_iter().map(PathBuf::from).collect())
}

fn has_java_ext(path: &Path) -> bool {
    path.extension().is_some_and(|e| e == "java")
}

fn normalize(path: &Path) -> String {
    exnlint_core::frontend::normalize_path(path)
}
