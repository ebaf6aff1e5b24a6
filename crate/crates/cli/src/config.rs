//! `srg-chroma.toml` settings. Every key is optional:
//!
//! ```toml
//! max_q = 5                  # largest field order for quadrangle constructions
//! spread_budget = 20000000   # exact-cover search nodes
//! chroma_budget = 50000000   # branch-and-bound nodes for exact coloring
//! exact_max_vertices = 64    # largest graph given to the exact solver (at most 64)
//! data_dir = "data"          # overrides for table1.txt / table1_expected.txt, .g6 inputs
//! ```
//!
//! Command-line flags override the file; `SRG_CHROMA_DATA` is consulted only
//! when neither names a data directory.

use std::path::{Path, PathBuf};

use serde::Deserialize;
use srg_chroma::chroma::MAX_EXACT_VERTICES;
use thiserror::Error;

pub const DATA_ENV: &str = "SRG_CHROMA_DATA";

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("cannot read config {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("invalid config {path}: {message}")]
    Invalid { path: PathBuf, message: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Config {
    pub max_q: u64,
    pub spread_budget: u64,
    pub chroma_budget: u64,
    pub exact_max_vertices: usize,
    pub data_dir: Option<PathBuf>,
}

impl Default for Config {
    fn default() -> Self {
        Self {
            max_q: srg_chroma::quadrangle::DEFAULT_MAX_Q,
            spread_budget: 20_000_000,
            chroma_budget: 50_000_000,
            exact_max_vertices: MAX_EXACT_VERTICES,
            data_dir: None,
        }
    }
}

impl Config {
    pub fn parse(text: &str, path: &Path) -> Result<Self, ConfigError> {
        let invalid = |message: String| ConfigError::Invalid {
            path: path.to_path_buf(),
            message,
        };
        let config: Config = toml::from_str(text).map_err(|e| invalid(e.to_string()))?;
        if config.exact_max_vertices > MAX_EXACT_VERTICES {
            return Err(invalid(format!("exact_max_vertices must be at most {MAX_EXACT_VERTICES}")));
        }
        if config.spread_budget == 0 || config.chroma_budget == 0 {
            return Err(invalid("budgets must be positive".into()));
        }
        Ok(config)
    }

    pub fn load(path: &Path) -> Result<Self, ConfigError> {
        let text = std::fs::read_to_string(path).map_err(|source| ConfigError::Io {
            path: path.to_path_buf(),
            source,
        })?;
        Self::parse(&text, path)
    }

    /// Flag, then config file, then environment.
    pub fn resolve_data_dir(&self, flag: Option<&Path>) -> Option<PathBuf> {
        flag.map(Path::to_path_buf)
            .or_else(|| self.data_dir.clone())
            .or_else(|| std::env::var_os(DATA_ENV).map(PathBuf::from))
    }
}
