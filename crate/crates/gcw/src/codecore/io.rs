use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::Code;
use crate::algebra::FiniteField;
use crate::graphs::Graph;
use crate::{Error, Result};

/// Parses one codeword per line in the graph's label syntax. Blank lines
/// and `#` comments are skipped. A JSON array of ids is also accepted.
pub fn parse_code_text(graph: Arc<Graph>, text: &str) -> Result<Code> {
    let trimmed = text.trim();
    if trimmed.starts_with('[') {
        let ids: Vec<usize> = serde_json::from_str(trimmed)?;
        return Code::new(graph, ids);
    }
    let mut words = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        words.push(graph.parse_label(line).map_err(|e| Error::Parse(format!("line {}: {e}", lineno + 1)))?);
    }
    Code::new(graph, words)
}

/// `{"q": 3, "generator": [[1,0,2], ...]}` or with `"field": {"p":2,"d":2}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LinearDescriptorJson {
    #[serde(default)]
    pub q: Option<u32>,
    #[serde(default)]
    pub field: Option<FieldJson>,
    pub generator: Vec<Vec<u32>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FieldJson {
    pub p: u32,
    pub d: u32,
}

pub fn parse_linear_descriptor(text: &str) -> Result<Code> {
    let d: LinearDescriptorJson = serde_json::from_str(text)?;
    let field = match (d.q, d.field) {
        (_, Some(f)) => FiniteField::new(f.p, f.d)?,
        (Some(q), None) => FiniteField::of_order(q)?,
        (None, None) => return Err(Error::Parse("linear descriptor needs q or field".into())),
    };
    Code::linear(Arc::new(field), d.generator)
}
