//! Codes as vertex subsets: minimum distance, distance partitions,
//! regularity and perfection.

mod io;
mod params;
mod partition;
mod regularity;

use std::collections::HashSet;
use std::sync::Arc;

pub use io::{parse_code_text, parse_linear_descriptor, LinearDescriptorJson};
pub use params::{error_capacity, is_perfect, min_distance, verify_sphere_packing, CodeReport};
pub use partition::{distance_partition, DistancePartition, PartitionMode};
pub use regularity::{is_completely_regular, s_regularity, LevelCounts, RegularityProfile, Violation};

use crate::algebra::{linalg, FiniteField};
use crate::graphs::Graph;
use crate::{Error, Result};

/// Generator matrix over GF(q) for a linear code in H(n, q); symbol `a` of
/// the Hamming alphabet is field element index `a`.
#[derive(Debug, Clone)]
pub struct LinearDescriptor {
    pub field: Arc<FiniteField>,
    pub generator: Vec<Vec<u32>>,
}

/// A code: a graph handle plus a sorted, duplicate-free set of vertex ids.
#[derive(Debug, Clone)]
pub struct Code {
    graph: Arc<Graph>,
    words: Vec<usize>,
    linear: Option<LinearDescriptor>,
    name: String,
}

impl Code {
    pub fn new(graph: Arc<Graph>, words: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut words: Vec<usize> = words.into_iter().collect();
        words.sort_unstable();
        words.dedup();
        let n = graph.vertex_count();
        if let Some(&w) = words.iter().find(|&&w| w >= n) {
            return Err(Error::InvalidParameter(format!("vertex id {w} out of range")));
        }
        Ok(Code { graph, words, linear: None, name: String::new() })
    }

    /// The row space of `generator` in H(n, q).
    pub fn linear(field: Arc<FiniteField>, generator: Vec<Vec<u32>>) -> Result<Self> {
        let n = generator.first().map(|r| r.len()).ok_or_else(|| Error::InvalidParameter("empty generator".into()))?;
        if generator.iter().any(|r| r.len() != n || r.iter().any(|&x| x >= field.order())) {
            return Err(Error::InvalidParameter("ragged generator or entry outside the field".into()));
        }
        let mut gen = generator;
        linalg::rref(&field, &mut gen);
        let graph = Arc::new(Graph::hamming(n, field.order() as usize)?);
        let h = graph.as_hamming().expect("hamming");
        if (field.order() as u64).checked_pow(gen.len() as u32).map_or(true, |s| s > 1 << 26) {
            return Err(Error::budget("linear code enumeration", 1 << 26));
        }
        let words: Vec<usize> = linalg::span(&field, &gen).iter().map(|w| h.from_digits(w)).collect();
        let mut c = Code::new(graph, words)?;
        c.linear = Some(LinearDescriptor { field, generator: gen });
        Ok(c)
    }

    pub fn with_name(mut self, name: &str) -> Self {
        self.name = name.to_string();
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn graph(&self) -> &Arc<Graph> {
        &self.graph
    }

    pub fn words(&self) -> &[usize] {
        &self.words
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn linear_descriptor(&self) -> Option<&LinearDescriptor> {
        self.linear.as_ref()
    }

    /// Entry count for Hamming hosts.
    pub fn length(&self) -> Option<usize> {
        self.graph.as_hamming().map(|h| h.n)
    }

    pub fn contains(&self, v: usize) -> bool {
        self.words.binary_search(&v).is_ok()
    }

    pub fn first(&self) -> Option<usize> {
        self.words.first().copied()
    }

    pub fn membership(&self) -> VertexSet {
        VertexSet::from_iter(self.graph.vertex_count(), self.words.iter().copied())
    }

    pub fn labels(&self) -> Vec<String> {
        self.words.iter().map(|&w| self.graph.label(w)).collect()
    }

    /// Same vertex set on the same graph handle.
    pub fn same_set(&self, other: &Code) -> bool {
        self.words == other.words
    }
}

/// Vertex membership: a bitset for moderate graphs, a hash set otherwise.
#[derive(Debug, Clone)]
pub enum VertexSet {
    Bits(Vec<u64>),
    Hash(HashSet<usize>),
}

impl VertexSet {
    pub fn new(n: usize) -> Self {
        if n <= 1 << 30 {
            VertexSet::Bits(vec![0; n.div_ceil(64)])
        } else {
            VertexSet::Hash(HashSet::new())
        }
    }

    pub fn from_iter(n: usize, it: impl IntoIterator<Item = usize>) -> Self {
        let mut s = VertexSet::new(n);
        for v in it {
            s.insert(v);
        }
        s
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        match self {
            VertexSet::Bits(b) => b[v >> 6] >> (v & 63) & 1 == 1,
            VertexSet::Hash(h) => h.contains(&v),
        }
    }

    /// Returns true when newly inserted.
    #[inline]
    pub fn insert(&mut self, v: usize) -> bool {
        match self {
            VertexSet::Bits(b) => {
                let was = b[v >> 6] >> (v & 63) & 1 == 1;
                b[v >> 6] |= 1 << (v & 63);
                !was
            }
            VertexSet::Hash(h) => h.insert(v),
        }
    }
}
