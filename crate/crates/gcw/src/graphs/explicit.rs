use std::collections::HashMap;

use crate::{Error, Result};

/// A graph stored as adjacency lists, with optional vertex labels.
#[derive(Debug, Clone)]
pub struct ExplicitGraph {
    name: String,
    adj: Vec<Vec<u32>>,
    labels: Vec<String>,
    label_index: HashMap<String, usize>,
    /// For incidence graphs: vertices `0..points` are points.
    pub points: Option<usize>,
}

impl ExplicitGraph {
    /// Builds from an edge list; duplicate edges and loops are dropped.
    pub fn from_edges(name: &str, n: usize, edges: impl IntoIterator<Item = (usize, usize)>, labels: Option<Vec<String>>) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for (a, b) in edges {
            if a >= n || b >= n {
                return Err(Error::InvalidParameter(format!("edge ({a},{b}) out of range")));
            }
            if a != b {
                adj[a].push(b as u32);
                adj[b].push(a as u32);
            }
        }
        for l in adj.iter_mut() {
            l.sort_unstable();
            l.dedup();
        }
        let labels = labels.unwrap_or_else(|| (0..n).map(|i| i.to_string()).collect());
        if labels.len() != n {
            return Err(Error::InvalidParameter("label count differs from vertex count".into()));
        }
        let label_index = labels.iter().enumerate().map(|(i, l)| (l.clone(), i)).collect();
        Ok(ExplicitGraph { name: name.to_string(), adj, labels, label_index, points: None })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn neighbors(&self, v: usize) -> &[u32] {
        &self.adj[v]
    }

    pub fn label(&self, v: usize) -> String {
        self.labels[v].clone()
    }

    pub fn parse_label(&self, text: &str) -> Result<usize> {
        if let Some(&v) = self.label_index.get(text) {
            return Ok(v);
        }
        text.strip_prefix('#')
            .and_then(|s| s.parse::<usize>().ok())
            .filter(|&v| v < self.adj.len())
            .ok_or_else(|| Error::Parse(format!("unknown vertex label {text:?}")))
    }
}
