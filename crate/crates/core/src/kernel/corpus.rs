//! Verifying a directory of proof scripts, one claim per `.prf` file.

use super::{check_reduction, parse_claim, ClaimReport, ReductionClaim, ScriptError};
use std::collections::BTreeSet;
use std::path::{Path, PathBuf};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CorpusError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Script {
        path: PathBuf,
        #[source]
        source: ScriptError,
    },
    #[error("duplicate claim id '{0}'")]
    DuplicateId(String),
}

/// Verification results for a whole corpus, in file order.
#[derive(Debug)]
pub struct CorpusReport {
    pub entries: Vec<ClaimReport>,
}

impl CorpusReport {
    pub fn passed(&self) -> usize {
        self.entries.iter().filter(|e| e.pass).count()
    }

    pub fn all_pass(&self) -> bool {
        self.entries.iter().all(|e| e.pass)
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for e in &self.entries {
            if e.pass {
                out.push_str(&format!("PASS {}  ({})\n", e.id, e.headline()));
            } else {
                out.push_str(&format!("FAIL {}  ({})\n", e.id, e.headline()));
                for p in &e.problems {
                    out.push_str(&format!("     {p}\n"));
                }
            }
        }
        out.push_str(&format!("{}/{} claims pass\n", self.passed(), self.entries.len()));
        out
    }
}

/// Load every claim from the `.prf` files of a directory (sorted by file
/// name) or from a single file.
pub fn load_claims(path: &Path) -> Result<Vec<ReductionClaim>, CorpusError> {
    let mut files = Vec::new();
    if path.is_dir() {
        let rd = std::fs::read_dir(path)
            .map_err(|source| CorpusError::Io { path: path.to_path_buf(), source })?;
        for entry in rd {
            let entry =
                entry.map_err(|source| CorpusError::Io { path: path.to_path_buf(), source })?;
            let p = entry.path();
            if p.extension().is_some_and(|e| e == "prf") {
                files.push(p);
            }
        }
        files.sort();
    } else {
        files.push(path.to_path_buf());
    }

    let mut claims = Vec::new();
    let mut seen = BTreeSet::new();
    for file in files {
        let text = std::fs::read_to_string(&file)
            .map_err(|source| CorpusError::Io { path: file.clone(), source })?;
        let stem = file.file_stem().and_then(|s| s.to_str()).unwrap_or("claim");
        let claim = parse_claim(&text, stem)
            .map_err(|source| CorpusError::Script { path: file.clone(), source })?;
        if !seen.insert(claim.id.clone()) {
            return Err(CorpusError::DuplicateId(claim.id));
        }
        claims.push(claim);
    }
    Ok(claims)
}

/// Check every claim in a directory and report per-claim verdicts.
pub fn verify_dir(path: &Path) -> Result<CorpusReport, CorpusError> {
    let claims = load_claims(path)?;
    let entries = claims.iter().map(check_reduction).collect();
    Ok(CorpusReport { entries })
}
