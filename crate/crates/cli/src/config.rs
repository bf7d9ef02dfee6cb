//! Optional TOML configuration supplying defaults for unset flags.
//!
//! Precedence is flag, then configuration file, then built-in default. Keys
//! use the flag names, e.g.
//!
//! ```toml
//! mu = "1"
//! N = 3
//! g = 1
//! tol = 1e-8
//! prec-bits = 256
//! seed = 7
//! ```

use serde::Deserialize;
use std::path::Path;

/// Defaults read from a configuration file.
#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields, rename_all = "kebab-case")]
pub struct FileConfig {
    /// Coupling constant as a rational string.
    pub mu: Option<String>,
    /// Truncation weight.
    #[serde(rename = "N")]
    pub truncation: Option<u32>,
    /// Genus.
    pub g: Option<usize>,
    /// Number of strands.
    pub n: Option<usize>,
    /// Largest weight for dimension tables and centrality checks.
    pub max_weight: Option<u32>,
    /// Numeric tolerance.
    pub tol: Option<f64>,
    /// Working precision of the numeric transport.
    pub prec_bits: Option<u32>,
    /// Seed for randomized property checks.
    pub seed: Option<u64>,
}

impl FileConfig {
    /// Read and parse a configuration file.
    pub fn load(path: &Path) -> Result<Self, String> {
        let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
        toml::from_str(&text).map_err(|e| format!("{}: {e}", path.display()))
    }
}

/// First of `flag`, `file`, `default`.
pub fn pick<T>(flag: Option<T>, file: Option<T>, default: T) -> T {
    flag.or(file).unwrap_or(default)
}
