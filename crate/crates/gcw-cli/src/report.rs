//! The versioned JSON report and its plain-text rendering.

use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

use gcw::codecore::Code;

pub const SCHEMA: &str = "gcw-report/1";

#[derive(Debug, Clone, Serialize)]
pub struct Tool {
    pub name: &'static str,
    pub version: &'static str,
}

/// What the job was run on. Absent fields are omitted.
#[derive(Debug, Clone, Default, Serialize)]
pub struct Input {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub graph: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub code: Option<String>,
    /// SHA-256 of the sorted codeword labels, one per line.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub code_sha256: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub group: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub group_order: Option<u128>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub s: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub filter: Option<String>,
}

impl Input {
    pub fn for_code(source: String, code: &Code) -> Self {
        Input { graph: Some(code.graph().spec()), code: Some(source), code_sha256: Some(digest(code)), ..Input::default() }
    }
}

pub fn digest(code: &Code) -> String {
    let mut hasher = Sha256::new();
    for label in code.labels() {
        hasher.update(label.as_bytes());
        hasher.update(b"\n");
    }
    format!("{:x}", hasher.finalize())
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub schema: &'static str,
    pub tool: Tool,
    pub command: &'static str,
    pub input: Input,
    pub result: Value,
    /// Wall-clock time; the only field that varies between identical runs.
    pub timing_ms: u128,
}

impl Report {
    pub fn new(command: &'static str, input: Input, result: Value, timing_ms: u128) -> Self {
        Report { schema: SCHEMA, tool: Tool { name: "gcw", version: env!("CARGO_PKG_VERSION") }, command, input, result, timing_ms }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    /// `key: value` lines for the input echo and the top-level result fields.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let input = serde_json::to_value(&self.input).expect("input serializes");
        for section in [&input, &self.result] {
            if let Value::Object(map) = section {
                for (k, v) in map {
                    let echoed = std::ptr::eq(section, &self.result) && input.get(k) == Some(v);
                    if !v.is_null() && !echoed {
                        out.push_str(&format!("{k}: {}\n", render(v)));
                    }
                }
            }
        }
        out
    }
}

fn render(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}
