//! Flat `key = value` configuration files mirroring the command-line flags.
//!
//! Keys use the long flag names (`family`, `omega`, `g`, `f1`, `m`, `p`,
//! `nmax`, `lmax`, `grid-points`, `format`, `out`, `seed`, and the
//! command-specific extras).  Values are kept as strings and parsed at
//! resolution time with the same parsers as the flags; explicit flags always
//! override file entries.

use std::collections::HashMap;
use std::path::Path;
use std::str::FromStr;

use eop_core::{EopError, Result};

/// Every key a configuration file may set.
const KNOWN_KEYS: &[&str] = &[
    "family",
    "omega",
    "g",
    "f1",
    "m",
    "p",
    "nmax",
    "lmax",
    "grid-points",
    "format",
    "out",
    "seed",
    "samples",
    "xi-samples",
    "mode",
    "target",
    "channel",
    "n",
    "ell",
    "mmax",
    "pmax",
    "levels",
];

/// Parsed configuration file: a flat string map.
#[derive(Debug, Clone, Default)]
pub struct FileConfig {
    entries: HashMap<String, String>,
}

impl FileConfig {
    /// Parse `key = value` lines; `#` starts a comment, blank lines are
    /// ignored, unknown keys are usage errors.
    pub fn parse(text: &str) -> Result<Self> {
        let mut entries = HashMap::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let Some((key, value)) = line.split_once('=') else {
                return Err(EopError::UsageError(format!(
                    "config line {}: expected `key = value`, got `{raw}`",
                    lineno + 1
                )));
            };
            let key = key.trim().to_string();
            let value = value.trim().to_string();
            if !KNOWN_KEYS.contains(&key.as_str()) {
                return Err(EopError::UsageError(format!(
                    "config line {}: unknown key `{key}`",
                    lineno + 1
                )));
            }
            if entries.insert(key.clone(), value).is_some() {
                return Err(EopError::UsageError(format!(
                    "config line {}: duplicate key `{key}`",
                    lineno + 1
                )));
            }
        }
        Ok(FileConfig { entries })
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| EopError::Io(format!("config file {}: {e}", path.display())))?;
        Self::parse(&text)
    }

    /// Resolve one setting: explicit flag, then file entry, then default.
    pub fn resolve<T: FromStr + Clone>(
        &self,
        flag: Option<T>,
        key: &str,
        default: T,
    ) -> Result<T> {
        self.resolve_opt(flag, key)?
            .map_or(Ok(default), Ok)
    }

    /// Like [`resolve`](Self::resolve) but without a default.
    pub fn resolve_opt<T: FromStr + Clone>(
        &self,
        flag: Option<T>,
        key: &str,
    ) -> Result<Option<T>> {
        if let Some(v) = flag {
            return Ok(Some(v));
        }
        match self.entries.get(key) {
            Some(raw) => raw
                .parse::<T>()
                .map(Some)
                .map_err(|_| EopError::UsageError(format!("config key `{key}`: cannot parse `{raw}`"))),
            None => Ok(None),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_keys_comments_and_blanks() {
        let cfg = FileConfig::parse(
            "# a comment\n\nfamily = scarf\ng= 4.0\nseed =11  # trailing comment\n",
        )
        .unwrap();
        assert_eq!(
            cfg.resolve_opt(None::<String>, "family").unwrap().as_deref(),
            Some("scarf")
        );
        assert_eq!(cfg.resolve(None::<f64>, "g", 1.0).unwrap(), 4.0);
        assert_eq!(cfg.resolve(None::<u64>, "seed", 7).unwrap(), 11);
        assert_eq!(cfg.resolve(None::<f64>, "omega", 1.0).unwrap(), 1.0);
    }

    #[test]
    fn flags_override_file_entries() {
        let cfg = FileConfig::parse("g = 4.0\n").unwrap();
        assert_eq!(cfg.resolve(Some(2.5), "g", 1.0).unwrap(), 2.5);
    }

    #[test]
    fn rejects_unknown_keys_duplicates_and_junk() {
        assert!(FileConfig::parse("gee = 4.0\n").is_err());
        assert!(FileConfig::parse("g = 1\ng = 2\n").is_err());
        assert!(FileConfig::parse("just some words\n").is_err());
        let cfg = FileConfig::parse("g = what\n").unwrap();
        assert!(cfg.resolve(None::<f64>, "g", 1.0).is_err());
    }
}
