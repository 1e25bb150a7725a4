use rayon::prelude::*;
use serde::Serialize;

use super::{is_completely_regular, Code, DistancePartition, VertexSet};
use crate::algebra::binomial;
use crate::graphs::{bfs_distances, Graph, UNREACHED};
use crate::{Budget, Error, Result};

/// Minimum distance between distinct codewords.
pub fn min_distance(c: &Code, budget: &Budget) -> Result<usize> {
    if c.len() < 2 {
        return Err(Error::TrivialCode(format!("|C| = {}, minimum distance undefined", c.len())));
    }
    let g = c.graph();
    if let (Some(_), Some(h)) = (c.linear_descriptor(), g.as_hamming()) {
        if c.len() as u64 > budget.group_elements {
            return Err(Error::budget("codeword weight sweep", budget.group_elements));
        }
        return Ok(c.words().par_iter().filter(|&&w| w != 0).map(|&w| h.weight(w)).min().unwrap());
    }
    let words = c.words();
    let analytic = matches!(&**g, Graph::Hamming(_) | Graph::Johnson(_) | Graph::Forms(_) | Graph::Cycle(_));
    if analytic {
        let pairs = (words.len() as u64).saturating_mul(words.len() as u64) / 2;
        if pairs > budget.group_elements.saturating_mul(100) {
            return Err(Error::budget("pairwise distance evaluations", budget.group_elements * 100));
        }
        let best = (0..words.len())
            .into_par_iter()
            .map(|i| {
                words[i + 1..]
                    .iter()
                    .map(|&w| g.distance(words[i], w).unwrap_or(usize::MAX))
                    .min()
                    .unwrap_or(usize::MAX)
            })
            .min()
            .unwrap();
        return Ok(best);
    }
    let n = g.vertex_count() as u64;
    if n.saturating_mul(words.len() as u64) > budget.group_elements.saturating_mul(100) {
        return Err(Error::budget("per-codeword BFS", budget.group_elements * 100));
    }
    let best = words
        .par_iter()
        .map(|&a| {
            let d = bfs_distances(g, &[a]);
            words.iter().filter(|&&b| b != a && d[b] != UNREACHED).map(|&b| d[b] as usize).min().unwrap_or(usize::MAX)
        })
        .min()
        .unwrap();
    if best == usize::MAX {
        return Err(Error::Precondition("codewords lie in different components".into()));
    }
    Ok(best)
}

/// `e = ⌊(δ−1)/2⌋`.
pub fn error_capacity(delta: usize) -> usize {
    delta.saturating_sub(1) / 2
}

fn ball_size(g: &Graph, v: usize, r: usize) -> u64 {
    match g {
        Graph::Hamming(h) => (0..=r.min(h.n)).map(|i| binomial(h.n as u64, i as u64) * (h.q as u64 - 1).pow(i as u32)).sum(),
        _ => g.ball(v, r).len() as u64,
    }
}

/// Whether the radius-`e` balls around codewords cover every vertex. They
/// are disjoint by definition of `e`, so a cardinality count decides it.
pub fn is_perfect(c: &Code, budget: &Budget) -> Result<bool> {
    let e = error_capacity(min_distance(c, budget)?);
    let g = c.graph();
    let total: u64 = if g.is_vertex_transitive_family() {
        ball_size(g, c.words()[0], e) * c.len() as u64
    } else {
        c.words().iter().map(|&a| ball_size(g, a, e)).sum()
    };
    Ok(total == g.vertex_count() as u64)
}

/// For `i ≤ e`: each vertex of `⋃_{α∈C} Γ_i(α)` has exactly one codeword at
/// distance `i` and none closer, and that union equals `C_i` whenever a dense
/// partition fits the budget.
pub fn verify_sphere_packing(c: &Code, i: usize, budget: &Budget) -> Result<bool> {
    let e = error_capacity(min_distance(c, budget)?);
    if i > e {
        return Err(Error::InvalidParameter(format!("i = {i} exceeds e = {e}")));
    }
    let g = c.graph();
    let mut seen = VertexSet::new(g.vertex_count());
    let mut level_i = Vec::new();
    for &a in c.words() {
        for j in 0..=i {
            for v in g.sphere(a, j) {
                if !seen.insert(v) {
                    return Ok(false);
                }
                if j == i {
                    level_i.push(v);
                }
            }
        }
    }
    if g.vertex_count() as u64 <= budget.dense_vertices {
        let p = DistancePartition::best(c, budget).or_else(|_| super::distance_partition(c, super::PartitionMode::Dense, budget))?;
        level_i.sort_unstable();
        return Ok(p.level_set(i, budget)? == level_i);
    }
    Ok(true)
}

/// Summary of computable parameters; budget-excluded quantities are listed
/// in `unavailable`.
#[derive(Debug, Clone, Serialize)]
pub struct CodeReport {
    pub graph: String,
    pub size: usize,
    pub min_distance: Option<usize>,
    pub error_capacity: Option<usize>,
    pub covering_radius: Option<usize>,
    pub level_sizes: Option<Vec<u64>>,
    pub completely_regular: Option<bool>,
    pub perfect: Option<bool>,
    pub unavailable: Vec<String>,
}

impl CodeReport {
    pub fn compute(c: &Code, budget: &Budget) -> Self {
        let mut unavailable = Vec::new();
        let mut note = |what: &str, e: &Error| unavailable.push(format!("{what}: {e}"));
        let delta = min_distance(c, budget).map_err(|e| note("min_distance", &e)).ok();
        let partition = DistancePartition::best(c, budget).map_err(|e| note("distance_partition", &e)).ok();
        let completely_regular = partition
            .as_ref()
            .and_then(|_| is_completely_regular(c, budget).map_err(|e| note("completely_regular", &e)).ok());
        let perfect = delta.and_then(|_| is_perfect(c, budget).map_err(|e| note("perfect", &e)).ok());
        CodeReport {
            graph: c.graph().spec(),
            size: c.len(),
            min_distance: delta,
            error_capacity: delta.map(error_capacity),
            covering_radius: partition.as_ref().and_then(|p| p.rho()),
            level_sizes: partition.map(|p| p.level_sizes().to_vec()),
            completely_regular,
            perfect,
            unavailable,
        }
    }
}
