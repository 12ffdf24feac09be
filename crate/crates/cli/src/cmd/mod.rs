pub mod chains;
pub mod density;
pub mod diagonal;
pub mod subsets;

use serde::Serialize;

use crate::{CliError, Format};

pub struct Context {
    pub format: Option<Format>,
    pub seed: u64,
}

impl Context {
    /// The requested format if it is one of `allowed`, else `default`.
    pub fn format(&self, default: Format, allowed: &[Format]) -> Result<Format, CliError> {
        match self.format {
            None => Ok(default),
            Some(f) if allowed.contains(&f) => Ok(f),
            Some(f) => Err(CliError::Usage(format!(
                "format {f:?} is not available here (choose from {allowed:?})"
            ))),
        }
    }
}

/// Pretty JSON with a trailing newline.
pub fn json<T: Serialize>(value: &T) -> Result<String, CliError> {
    serde_json::to_string_pretty(value)
        .map(|s| s + "\n")
        .map_err(|e| CliError::Internal(e.to_string()))
}

/// Parses `1,2,3`; an empty string is the empty list.
pub fn parse_list(text: &str) -> Result<Vec<u64>, CliError> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse::<u64>()
                .map_err(|e| CliError::Usage(format!("bad number {s:?}: {e}")))
        })
        .collect()
}
