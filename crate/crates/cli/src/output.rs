//! Report emission.

use serde_json::Value;
use std::io::Write;
use std::path::Path;
use std::process::ExitCode;

/// Result of one subcommand: text and JSON renderings plus pass status.
pub struct Outcome {
    /// Text report.
    pub text: String,
    /// Structured report for `--json`.
    pub json: Value,
    /// True when every check passed or the solve succeeded.
    pub ok: bool,
}

impl Outcome {
    /// Write the chosen rendering to `out` (or standard output) and map the
    /// status to an exit code.
    pub fn emit(&self, json: bool, out: Option<&Path>) -> Result<ExitCode, String> {
        let body = if json {
            let mut s = serde_json::to_string_pretty(&self.json).map_err(|e| e.to_string())?;
            s.push('\n');
            s
        } else {
            self.text.clone()
        };
        match out {
            Some(path) => std::fs::write(path, body).map_err(|e| format!("{}: {e}", path.display()))?,
            None => {
                let mut stdout = std::io::stdout().lock();
                stdout.write_all(body.as_bytes()).map_err(|e| e.to_string())?;
            }
        }
        Ok(if self.ok { ExitCode::SUCCESS } else { ExitCode::from(1) })
    }
}
