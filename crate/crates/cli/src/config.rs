//! Settings shared by every subcommand. Each value resolves as
//! flag > environment > config file > built-in default; clap handles the
//! first two, this module the last two.

use std::fs;
use std::path::{Path, PathBuf};

use serde::Deserialize;

/// Contents of the TOML config file. Every key is optional.
#[derive(Debug, Default, Clone, Deserialize)]
#[serde(deny_unknown_fields, rename_all = "kebab-case")]
pub struct FileConfig {
    pub cache_dir: Option<PathBuf>,
    pub mode: Option<String>,
    pub threads: Option<usize>,
    pub seed: Option<u64>,
    pub points: Option<usize>,
    pub qt_cap: Option<u32>,
    pub p_cap: Option<u32>,
    pub pochhammer: Option<String>,
}

impl FileConfig {
    pub fn load(path: &Path) -> Result<Self, String> {
        let text = fs::read_to_string(path).map_err(|e| format!("cannot read config {}: {}", path.display(), e))?;
        toml::from_str(&text).map_err(|e| format!("bad config {}: {}", path.display(), e))
    }
}

/// Values that are not given on the command line or in the environment.
#[derive(Debug, Clone)]
pub struct CliConfig {
    pub cache_dir: Option<PathBuf>,
    pub mode: String,
    pub threads: Option<usize>,
    pub seed: u64,
    pub points: usize,
    pub qt_cap: u32,
    pub p_cap: u32,
    pub pochhammer: String,
}

/// What the command line (and environment, through clap) supplied.
#[derive(Debug, Default, Clone)]
pub struct Overrides {
    pub cache_dir: Option<PathBuf>,
    pub mode: Option<String>,
    pub threads: Option<usize>,
    pub seed: Option<u64>,
    pub points: Option<usize>,
    pub qt_cap: Option<u32>,
    pub p_cap: Option<u32>,
    pub pochhammer: Option<String>,
}

impl CliConfig {
    pub fn resolve(over: Overrides, file: FileConfig) -> Self {
        Self {
            cache_dir: over.cache_dir.or(file.cache_dir),
            mode: over.mode.or(file.mode).unwrap_or_else(|| "auto".into()),
            threads: over.threads.or(file.threads),
            seed: over.seed.or(file.seed).unwrap_or(1),
            points: over.points.or(file.points).unwrap_or(3),
            qt_cap: over.qt_cap.or(file.qt_cap).unwrap_or(10),
            p_cap: over.p_cap.or(file.p_cap).unwrap_or(4),
            pochhammer: over
                .pochhammer
                .or(file.pochhammer)
                .unwrap_or_else(|| "multi-index".into()),
        }
    }
}
