//! Key=value config files and the resolved run configuration.

use std::collections::BTreeMap;
use std::fmt::Display;
use std::path::Path;
use std::str::FromStr;

use clap::ValueEnum;
use serde::Serialize;

use crate::error::CliError;

/// Keys a config file may set; each mirrors the flag of the same name.
pub const KNOWN_KEYS: &[&str] = &[
    "c", "m", "tol", "out", "format", "grid", "xi", "k", "sigma", "w", "input", "kernel", "kmax", "seed",
];

pub const TOL_MIN: f64 = 1e-12;
pub const TOL_MAX: f64 = 1e-2;

#[derive(Debug, Default, Clone)]
pub struct FileConfig {
    entries: BTreeMap<String, String>,
}

impl FileConfig {
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::config(format!("cannot read config file {}: {e}", path.display())))?;
        Self::parse(&text)
    }

    /// Lines of `key = value`; blank lines and `#` comments are skipped.
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let mut entries = BTreeMap::new();
        for (n, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| CliError::config(format!("config line {}: expected key=value", n + 1)))?;
            let key = key.trim();
            if !KNOWN_KEYS.contains(&key) {
                return Err(CliError::config(format!("config line {}: unknown key '{key}'", n + 1)));
            }
            entries.insert(key.to_string(), value.trim().to_string());
        }
        Ok(FileConfig { entries })
    }

    fn raw(&self, key: &str) -> Option<&str> {
        self.entries.get(key).map(String::as_str)
    }
}

/// The flag value if given, else the config file's, parsed as `T`.
pub fn pick<T>(flag: Option<T>, file: &FileConfig, key: &str) -> Result<Option<T>, CliError>
where
    T: FromStr,
    T::Err: Display,
{
    if flag.is_some() {
        return Ok(flag);
    }
    match file.raw(key) {
        None => Ok(None),
        Some(s) => s
            .parse()
            .map(Some)
            .map_err(|e| CliError::config(format!("config key '{key}' = '{s}': {e}"))),
    }
}

/// Real-valued settings must be finite.
pub fn finite(value: Option<f64>, key: &str) -> Result<Option<f64>, CliError> {
    match value {
        Some(v) if !v.is_finite() => Err(CliError::config(format!("{key} must be finite (got {v})"))),
        v => Ok(v),
    }
}

pub fn check_tol(tol: Option<f64>) -> Result<Option<f64>, CliError> {
    match finite(tol, "tol")? {
        Some(t) if !(TOL_MIN..=TOL_MAX).contains(&t) => Err(CliError::config(format!(
            "tol must lie in [{TOL_MIN:e}, {TOL_MAX:e}] (got {t:e})"
        ))),
        t => Ok(t),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Json,
}

impl FromStr for Format {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        <Format as ValueEnum>::from_str(s, false)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Kernel {
    /// Closed-form coherent-state kernel, any m.
    General,
    /// Reduced kernel, m = 0 only.
    M0,
}

impl FromStr for Kernel {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        <Kernel as ValueEnum>::from_str(s, false)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
pub enum EvalFunction {
    #[value(name = "basis_phi")]
    #[serde(rename = "basis_phi")]
    BasisPhi,
    #[value(name = "eigenfunction")]
    #[serde(rename = "eigenfunction")]
    Eigenfunction,
    #[value(name = "cs_wavefunction")]
    #[serde(rename = "cs_wavefunction")]
    CsWavefunction,
    #[value(name = "overlap")]
    #[serde(rename = "overlap")]
    Overlap,
    #[value(name = "kernel")]
    #[serde(rename = "kernel")]
    Kernel,
}

/// Everything a run used, echoed into JSON outputs.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunConfig {
    pub command: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub function: Option<EvalFunction>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub suite: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub c: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sigma: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub kmax: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tol: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub grid: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub xi: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub w: Option<[f64; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub input: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub kernel: Option<Kernel>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub format: Format,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub out: Option<String>,
}

impl RunConfig {
    pub fn new(command: &'static str, format: Format) -> Self {
        RunConfig {
            command,
            function: None,
            suite: None,
            c: None,
            m: None,
            sigma: None,
            k: None,
            kmax: None,
            tol: None,
            grid: None,
            xi: None,
            w: None,
            input: None,
            kernel: None,
            seed: None,
            format,
            out: None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn file_parsing() {
        let f = FileConfig::parse("# defaults\nc = 1.5\n\nm=2 # level\n").unwrap();
        assert_eq!(pick::<f64>(None, &f, "c").unwrap(), Some(1.5));
        assert_eq!(pick::<usize>(None, &f, "m").unwrap(), Some(2));
        assert_eq!(pick(Some(0.5), &f, "c").unwrap(), Some(0.5));
        assert_eq!(pick::<f64>(None, &f, "tol").unwrap(), None);
        assert!(FileConfig::parse("colour = red").is_err());
        assert!(FileConfig::parse("c 1").is_err());
        let bad = FileConfig::parse("m = -1").unwrap();
        assert!(pick::<usize>(None, &bad, "m").is_err());
    }

    #[test]
    fn tolerance_window() {
        assert!(check_tol(Some(1e-12)).is_ok());
        assert!(check_tol(Some(1e-2)).is_ok());
        assert!(check_tol(Some(1e-13)).is_err());
        assert!(check_tol(Some(0.1)).is_err());
        assert!(check_tol(Some(f64::NAN)).is_err());
        assert_eq!(check_tol(None).unwrap(), None);
    }
}
