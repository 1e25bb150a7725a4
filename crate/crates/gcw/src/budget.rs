use serde::{Deserialize, Serialize};

/// Resource caps shared by the expensive operations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Budget {
    /// Largest vertex set swept by the dense distance partition.
    pub dense_vertices: u64,
    /// Largest number of group elements any enumeration may touch.
    pub group_elements: u64,
    /// Largest degree for the exhaustive normalizer scan.
    pub normalizer_degree: usize,
    /// Largest vertex count for exhaustive graph checks.
    pub exhaustive_vertices: u64,
    /// Largest orbit materialized by orbit closures.
    pub orbit_points: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            dense_vertices: 1 << 24,
            group_elements: 10_000_000,
            normalizer_degree: 8,
            exhaustive_vertices: 100_000,
            orbit_points: 1 << 26,
        }
    }
}
