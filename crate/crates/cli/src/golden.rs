//! Golden fixtures on disk: `golden/<problem>/<input>.jsonl`, one case per
//! line in compact JSON.

use std::collections::BTreeMap;
use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use sublists_core::instances::GoldenCase;

/// Directory holding the committed golden files of this crate.
pub fn default_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("golden")
}

pub fn encode_line(case: &GoldenCase) -> String {
    serde_json::to_string(case).expect("golden cases serialize")
}

/// File contents keyed by path relative to the golden root, cases kept in
/// suite order within each file.
pub fn render(cases: &[GoldenCase]) -> BTreeMap<PathBuf, String> {
    let mut files: BTreeMap<PathBuf, String> = BTreeMap::new();
    for case in cases {
        let body = files.entry(PathBuf::from(case.relative_path())).or_default();
        body.push_str(&encode_line(case));
        body.push('\n');
    }
    files
}

pub fn write_all(root: &Path, cases: &[GoldenCase]) -> io::Result<()> {
    for (rel, body) in render(cases) {
        let path = root.join(rel);
        if let Some(parent) = path.parent() {
            fs::create_dir_all(parent)?;
        }
        fs::write(path, body)?;
    }
    Ok(())
}

#[derive(Debug, thiserror::Error)]
pub enum LoadError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: io::Error },
    #[error("{path}:{line}: {source}")]
    Parse {
        path: PathBuf,
        line: usize,
        source: serde_json::Error,
    },
}

/// Reads every `.jsonl` file under `root`, sorted by path.
pub fn load_dir(root: &Path) -> Result<Vec<(PathBuf, GoldenCase)>, LoadError> {
    let mut paths = Vec::new();
    collect(root, &mut paths).map_err(|source| LoadError::Io {
        path: root.to_path_buf(),
        source,
    })?;
    paths.sort();

    let mut out = Vec::new();
    for path in paths {
        let text = fs::read_to_string(&path).map_err(|source| LoadError::Io {
            path: path.clone(),
            source,
        })?;
        for (i, line) in text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty()) {
            let case = serde_json::from_str(line).map_err(|source| LoadError::Parse {
                path: path.clone(),
                line: i + 1,
                source,
            })?;
            let rel = path.strip_prefix(root).unwrap_or(&path).to_path_buf();
            out.push((rel, case));
        }
    }
    Ok(out)
}

fn collect(dir: &Path, out: &mut Vec<PathBuf>) -> io::Result<()> {
    for entry in fs::read_dir(dir)? {
        let path = entry?.path();
        if path.is_dir() {
            collect(&path, out)?;
        } else if path.extension().is_some_and(|e| e == "jsonl") {
            out.push(path);
        }
    }
    Ok(())
}
