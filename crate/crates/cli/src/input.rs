use std::io::Read;
use std::path::{Path, PathBuf};

use kmc_core::{parse_gauss, parse_pd, Diagram, KhTable};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum Failure {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{path}: {source}")]
    Core { path: PathBuf, source: kmc_core::Error },
    #[error("{0}")]
    Compute(#[from] kmc_core::Error),
}

impl Failure {
    pub fn at(path: &Path) -> impl FnOnce(kmc_core::Error) -> Failure + '_ {
        move |source| Failure::Core { path: path.to_owned(), source }
    }
}

pub fn read_text(path: &Path) -> Result<String, Failure> {
    let io = |source| Failure::Io { path: path.to_owned(), source };
    if path.as_os_str() == "-" {
        let mut text = String::new();
        std::io::stdin().read_to_string(&mut text).map_err(io)?;
        Ok(text)
    } else {
        std::fs::read_to_string(path).map_err(io)
    }
}

/// Gauss codes are recognized by extension, or by their first token
/// starting with `O` or `U`; everything else is read as PD.
fn looks_like_gauss(path: &Path, text: &str) -> bool {
    match path.extension().and_then(|e| e.to_str()) {
        Some("gauss" | "gc") => true,
        Some("pd") => false,
        _ => text
            .lines()
            .map(|l| l.split('#').next().unwrap_or("").trim())
            .find(|l| !l.is_empty())
            .is_some_and(|l| l.starts_with(['O', 'U', 'o', 'u'])),
    }
}

pub fn is_diagram_file(path: &Path) -> bool {
    matches!(path.extension().and_then(|e| e.to_str()), Some("pd" | "gauss" | "gc"))
}

pub fn load_diagram(path: &Path) -> Result<Diagram, Failure> {
    let text = read_text(path)?;
    let parsed = if looks_like_gauss(path, &text) { parse_gauss(&text) } else { parse_pd(&text) };
    parsed.map_err(Failure::at(path))
}

pub fn load_table(path: &Path) -> Result<KhTable, Failure> {
    KhTable::from_json(&read_text(path)?).map_err(Failure::at(path))
}
