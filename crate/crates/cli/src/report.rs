//! The single report record printed by every command.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use mtv_core::Error;
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::formats::FORMAT_VERSION;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Outcome {
    Verified,
    WitnessFound,
    /// A checked property failed on inputs where no statement predicts it.
    PropertyViolated,
    FalsificationCandidate,
    HypothesisViolated,
    ResourceLimit,
    InputError,
}

impl Outcome {
    pub fn exit_code(self) -> u8 {
        match self {
            Outcome::Verified | Outcome::WitnessFound => 0,
            Outcome::PropertyViolated | Outcome::FalsificationCandidate | Outcome::HypothesisViolated => 1,
            Outcome::InputError => 2,
            Outcome::ResourceLimit => 3,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct RunReport {
    #[serde(rename = "format-version")]
    pub format_version: u32,
    pub command: String,
    #[serde(rename = "inputs-digest")]
    pub inputs_digest: String,
    pub parameters: BTreeMap<String, Value>,
    pub outcome: Outcome,
    pub payload: Value,
    #[serde(rename = "wall-time-ms", skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<u64>,
}

/// SHA-256 over the input texts, each prefixed by its byte length.
#[derive(Default)]
pub struct InputDigest(Sha256);

impl InputDigest {
    pub fn add(&mut self, text: &str) {
        self.0.update((text.len() as u64).to_le_bytes());
        self.0.update(text.as_bytes());
    }

    pub fn finish(self) -> String {
        self.0
            .finalize()
            .iter()
            .fold(String::with_capacity(64), |mut s, b| {
                let _ = write!(s, "{b:02x}");
                s
            })
    }
}

/// Outcome and payload for a library error.
pub fn error_payload(e: &Error) -> (Outcome, Value) {
    match e {
        Error::Input(msg) | Error::Precondition(msg) => (Outcome::InputError, json!({ "error": msg })),
        Error::ResourceLimit { what, progress } => (
            Outcome::ResourceLimit,
            json!({ "error": e.to_string(), "limit": what, "progress": progress }),
        ),
        Error::HypothesisViolated { index, certificate } => (
            Outcome::HypothesisViolated,
            json!({ "error": e.to_string(), "set-index": index, "certificate": certificate }),
        ),
    }
}

impl RunReport {
    pub fn new(command: &str, digest: String, parameters: BTreeMap<String, Value>, outcome: Outcome, payload: Value) -> Self {
        RunReport {
            format_version: FORMAT_VERSION,
            command: command.to_string(),
            inputs_digest: digest,
            parameters,
            outcome,
            payload,
            wall_time_ms: None,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    /// One `key  value` line per scalar leaf, keys dotted, values aligned.
    pub fn to_text(&self) -> String {
        let value = serde_json::to_value(self).expect("reports serialize");
        let mut rows = Vec::new();
        flatten("", &value, &mut rows);
        let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
        let mut out = String::new();
        for (k, v) in rows {
            let _ = writeln!(out, "{k:<width$}  {v}");
        }
        out
    }
}

fn flatten(prefix: &str, v: &Value, rows: &mut Vec<(String, String)>) {
    let key = |k: &str| if prefix.is_empty() { k.to_string() } else { format!("{prefix}.{k}") };
    match v {
        Value::Object(map) => {
            if map.is_empty() {
                rows.push((prefix.to_string(), "{}".into()));
            }
            for (k, child) in map {
                flatten(&key(k), child, rows);
            }
        }
        Value::Array(items) if items.iter().any(|i| i.is_object() || i.is_array() && has_nested(i)) => {
            if items.is_empty() {
                rows.push((prefix.to_string(), "[]".into()));
            }
            for (i, child) in items.iter().enumerate() {
                flatten(&key(&i.to_string()), child, rows);
            }
        }
        Value::String(s) => rows.push((prefix.to_string(), s.clone())),
        other => rows.push((prefix.to_string(), other.to_string())),
    }
}

fn has_nested(v: &Value) -> bool {
    v.as_array()
        .is_some_and(|a| a.iter().any(|i| i.is_object() || i.is_array()))
}
