//! Run descriptions and the serialized report envelope shared by the CLI.

use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: &str = "veelocus-report/1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    CheckLocus,
    CheckVee,
    CheckWdvv,
    Scan,
    CatalogList,
    Reproduce,
}

impl Command {
    pub fn as_str(self) -> &'static str {
        match self {
            Command::CheckLocus => "check-locus",
            Command::CheckVee => "check-vee",
            Command::CheckWdvv => "check-wdvv",
            Command::Scan => "scan",
            Command::CatalogList => "catalog-list",
            Command::Reproduce => "reproduce",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunSpec {
    pub command: Command,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub target: Option<String>,
    #[serde(default)]
    pub seed: u64,
    pub samples: usize,
    /// Relative tolerance actually used (after CLI and environment overrides).
    pub tol: f64,
    pub output: OutputFormat,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SerializedReport {
    pub schema_version: String,
    pub input: RunSpec,
    pub verdict: bool,
    pub details: serde_json::Value,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u64>,
}

impl SerializedReport {
    pub fn new(input: RunSpec, verdict: bool, details: serde_json::Value) -> Self {
        SerializedReport {
            schema_version: SCHEMA_VERSION.to_string(),
            input,
            verdict,
            details,
            timing_ms: None,
        }
    }
}
