//! JSON document schemas for monoids, acts, and symbolic acts.
//!
//! Field names and shapes are normative; outputs round-trip through these
//! structs so that identical inputs always serialize byte-identically
//! (`serde_json` keeps struct field order, and maps are `BTreeMap`s).

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::ActError;

/// Monoid document: `table[i][j]` is the label of `elements[i]·elements[j]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonoidDoc {
    pub elements: Vec<String>,
    pub identity: String,
    pub table: Vec<Vec<String>>,
}

/// The `monoid` field of an act document: either an inline monoid document,
/// or a reference string (a file path, or `builtin:<name>`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum MonoidRef {
    Inline(MonoidDoc),
    Reference(String),
}

/// Act document: `action[i][j]` is the label of `elements[i]·monoid.elements[j]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ActDoc {
    pub monoid: MonoidRef,
    pub elements: Vec<String>,
    pub action: Vec<Vec<String>>,
}

/// Symbolic act document. Multiplicities are positive integers or `"omega"`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymbolicDoc {
    #[serde(default)]
    pub entries: BTreeMap<String, CardinalDoc>,
    #[serde(default)]
    pub families: BTreeMap<String, CardinalDoc>,
}

/// Wire form of a cardinal: a JSON integer or the string `"omega"`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CardinalDoc {
    Finite(u64),
    Named(OmegaTag),
}

/// The only named cardinal on the wire.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum OmegaTag {
    #[serde(rename = "omega")]
    Omega,
}

pub(crate) fn parse_json<T: serde::de::DeserializeOwned>(text: &str) -> Result<T, ActError> {
    serde_json::from_str(text).map_err(|e| ActError::MalformedDocument(e.to_string()))
}

pub(crate) fn read_file(path: &Path) -> Result<String, ActError> {
    fs::read_to_string(path).map_err(|e| ActError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cardinal_doc_parses_int_and_omega() {
        let d: CardinalDoc = serde_json::from_str("3").unwrap();
        assert_eq!(d, CardinalDoc::Finite(3));
        let d: CardinalDoc = serde_json::from_str("\"omega\"").unwrap();
        assert_eq!(d, CardinalDoc::Named(OmegaTag::Omega));
        assert!(serde_json::from_str::<CardinalDoc>("\"aleph\"").is_err());
    }

    #[test]
    fn monoid_ref_is_untagged() {
        let r: MonoidRef = serde_json::from_str("\"builtin:trivial\"").unwrap();
        assert_eq!(r, MonoidRef::Reference("builtin:trivial".into()));
        let r: MonoidRef = serde_json::from_str(
            r#"{"elements":["1"],"identity":"1","table":[["1"]]}"#,
        )
        .unwrap();
        assert!(matches!(r, MonoidRef::Inline(_)));
    }
}
