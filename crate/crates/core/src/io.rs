//! JSON input schema for configurations.
//!
//! ```json
//! {
//!   "dim": 3,
//!   "kind": "locus",
//!   "label": "optional",
//!   "entries": [
//!     { "vector": [{"re": 1, "im": 0}, 0, -1], "multiplicity": 2 },
//!     { "vector": [0, 1, 0], "weight": {"re": 0.5, "im": 0} }
//!   ]
//! }
//! ```
//!
//! A component may be a bare number (real) or `{"re", "im"}`. Locus entries
//! carry `multiplicity`; vee entries carry an optional `weight` (default 1).

use std::io::Read;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::config::{Configuration, Entry, Kind, Tag};
use crate::error::{Error, Result};
use crate::numeric::{Scalar, Tolerance};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ComplexJson {
    pub re: f64,
    #[serde(default)]
    pub im: f64,
}

impl From<Scalar> for ComplexJson {
    fn from(z: Scalar) -> Self {
        ComplexJson { re: z.re, im: z.im }
    }
}

impl From<ComplexJson> for Scalar {
    fn from(z: ComplexJson) -> Self {
        Scalar::new(z.re, z.im)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Component {
    Real(f64),
    Complex(ComplexJson),
}

impl From<Component> for Scalar {
    fn from(c: Component) -> Self {
        match c {
            Component::Real(x) => Scalar::new(x, 0.0),
            Component::Complex(z) => z.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EntryFile {
    pub vector: Vec<Component>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub multiplicity: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weight: Option<Component>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigFile {
    #[serde(alias = "dimension")]
    pub dim: usize,
    pub kind: Kind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    pub entries: Vec<EntryFile>,
}

impl ConfigFile {
    pub fn into_configuration(self, tol: &Tolerance) -> Result<Configuration> {
        let mut entries = Vec::with_capacity(self.entries.len());
        for (i, e) in self.entries.into_iter().enumerate() {
            let tag = match (self.kind, e.multiplicity, e.weight) {
                (Kind::Locus, Some(m), None) => {
                    let m = u32::try_from(m)
                        .ok()
                        .filter(|&m| m > 0)
                        .ok_or_else(|| Error::Parse(format!("entries[{i}].multiplicity: expected a positive integer, got {m}")))?;
                    Tag::Multiplicity(m)
                }
                (Kind::Locus, None, _) => {
                    return Err(Error::Parse(format!("entries[{i}].multiplicity: required for locus entries")))
                }
                (Kind::Vee, None, w) => Tag::Weight(w.map_or(Scalar::new(1.0, 0.0), Scalar::from)),
                (Kind::Vee, Some(_), _) => {
                    return Err(Error::Parse(format!("entries[{i}].multiplicity: not allowed for vee entries")))
                }
                (Kind::Locus, Some(_), Some(_)) => {
                    return Err(Error::Parse(format!("entries[{i}].weight: not allowed for locus entries")))
                }
            };
            entries.push(Entry {
                vector: e.vector.into_iter().map(Scalar::from).collect(),
                tag,
            });
        }
        let label = self.label.unwrap_or_else(|| "input".to_string());
        Configuration::new(self.dim, self.kind, entries, label, tol)
    }

    pub fn from_configuration(config: &Configuration) -> Self {
        let entries = config
            .entries()
            .iter()
            .map(|e| {
                let (multiplicity, weight) = match e.tag {
                    Tag::Multiplicity(m) => (Some(i64::from(m)), None),
                    Tag::Weight(w) => (None, Some(Component::Complex(w.into()))),
                };
                EntryFile {
                    vector: e.vector.iter().map(|&z| Component::Complex(z.into())).collect(),
                    multiplicity,
                    weight,
                }
            })
            .collect();
        ConfigFile {
            dim: config.dim(),
            kind: config.kind(),
            label: Some(config.label().to_string()),
            entries,
        }
    }
}

/// Parses a configuration from JSON text. Syntax and schema errors become
/// [`Error::Parse`] with the line and column reported by the JSON reader;
/// geometric problems surface as [`Error::InvariantViolation`].
pub fn parse_config_str(text: &str, tol: &Tolerance) -> Result<Configuration> {
    let file: ConfigFile = serde_json::from_str(text).map_err(|e| {
        Error::Parse(format!("line {} column {}: {e}", e.line(), e.column()))
    })?;
    file.into_configuration(tol)
}

pub fn parse_config_reader<R: Read>(mut reader: R, tol: &Tolerance) -> Result<Configuration> {
    let mut text = String::new();
    reader
        .read_to_string(&mut text)
        .map_err(|e| Error::Parse(format!("read failed: {e}")))?;
    parse_config_str(&text, tol)
}

pub fn parse_config_file(path: &Path, tol: &Tolerance) -> Result<Configuration> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    parse_config_str(&text, tol)
}

pub fn config_to_json(config: &Configuration) -> String {
    serde_json::to_string_pretty(&ConfigFile::from_configuration(config)).expect("config serializes")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{examples, vee_an_c};

    #[test]
    fn round_trip_catalog() {
        let tol = Tolerance::default();
        for cfg in examples().into_iter().chain([vee_an_c(&[0.3, 2.0]).unwrap()]) {
            let back = parse_config_str(&config_to_json(&cfg), &tol).unwrap();
            assert_eq!(back, cfg);
        }
    }

    #[test]
    fn bare_numbers_and_default_weight() {
        let text = r#"{"dim": 2, "kind": "vee", "entries": [
            {"vector": [1, 0]}, {"vector": [0, {"re": 2, "im": 0}], "weight": 3}]}"#;
        let cfg = parse_config_str(text, &Tolerance::default()).unwrap();
        assert_eq!(cfg.len(), 2);
        assert_eq!(cfg.entries()[1].tag, Tag::Weight(Scalar::new(3.0, 0.0)));
    }

    #[test]
    fn syntax_errors_report_position() {
        let err = parse_config_str("{\n  \"dim\": 2,\n  oops }", &Tolerance::default()).unwrap_err();
        match err {
            Error::Parse(msg) => assert!(msg.starts_with("line 3"), "{msg}"),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn schema_errors_name_the_field() {
        let text = r#"{"dim": 1, "kind": "locus", "entries": [{"vector": [1], "multiplicity": -2}]}"#;
        let err = parse_config_str(text, &Tolerance::default()).unwrap_err();
        assert!(matches!(err, Error::Parse(ref m) if m.contains("entries[0].multiplicity")));
    }

    #[test]
    fn geometric_errors_are_invariant_violations() {
        let text = r#"{"dim": 2, "kind": "locus", "entries": [
            {"vector": [1, 1], "multiplicity": 1}, {"vector": [2, 2], "multiplicity": 1}]}"#;
        assert!(matches!(
            parse_config_str(text, &Tolerance::default()),
            Err(Error::InvariantViolation(_))
        ));
    }
}
