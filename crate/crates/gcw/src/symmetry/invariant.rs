//! Vertex type maps and the constraints neighbour-transitivity places on
//! them.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::{check_preserves, is_s_nt, partition_for, AutRepresentation};
use crate::codecore::{min_distance, Code};
use crate::graphs::Graph;
use crate::{Budget, Error, Result};

/// A named map from vertices to types.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind", content = "sets")]
pub enum InvariantMap {
    /// `ι(α) = |α ∩ U|` on Johnson or Kneser vertices.
    SubsetIntersection(Vec<usize>),
    /// `(|α ∩ A_1|, .., |α ∩ A_m|)` for fixed subsets `A_j`.
    IntersectionProfile(Vec<Vec<usize>>),
    /// The sorted multiset of `|α ∩ B_j|` over the blocks of a partition.
    PartitionMultiset(Vec<Vec<usize>>),
    /// The number of entries of `M` where a Hamming vertex is nonzero.
    EntryWeight(Vec<usize>),
}

impl InvariantMap {
    /// The type of vertex `v` of `graph`.
    pub fn type_of(&self, graph: &Graph, v: usize) -> Result<Vec<usize>> {
        let subset = || match graph {
            Graph::Johnson(s) | Graph::Kneser(s) => Ok(s.unrank(v)),
            _ => Err(Error::Precondition("subset types need a Johnson or Kneser host".into())),
        };
        let meet = |alpha: &[usize], u: &[usize]| alpha.iter().filter(|x| u.contains(x)).count();
        Ok(match self {
            InvariantMap::SubsetIntersection(u) => vec![meet(&subset()?, u)],
            InvariantMap::IntersectionProfile(parts) => {
                let alpha = subset()?;
                parts.iter().map(|u| meet(&alpha, u)).collect()
            }
            InvariantMap::PartitionMultiset(blocks) => {
                let alpha = subset()?;
                let mut sizes: Vec<usize> = blocks.iter().map(|u| meet(&alpha, u)).collect();
                sizes.sort_unstable();
                sizes
            }
            InvariantMap::EntryWeight(m) => {
                let h = graph.as_hamming().ok_or_else(|| Error::Precondition("entry types need a Hamming host".into()))?;
                vec![m.iter().filter(|&&j| h.digit(v, j) != 0).count()]
            }
        })
    }
}

/// The three conclusions about types on the levels `0..=s`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantReport {
    pub s_nt: bool,
    /// Distinct types on each level `C_i`.
    pub level_types: Vec<Vec<Vec<usize>>>,
    /// Number of distinct types on `B_i(α)` for the least codeword `α`.
    pub ball_type_counts: Vec<usize>,
    /// Whether `Γ_i(α)` has one type, for the `i` with `δ ≥ 2i`.
    pub sphere_constant: Vec<Option<bool>>,
    pub level_constancy: bool,
    pub ball_bound: bool,
    pub sphere_constancy: bool,
}

/// Verifies `ι(v^g) = ι(v)` for every generator on all vertices of small
/// graphs, otherwise on 10^3 seeded samples.
fn check_g_invariance(c: &Code, rep: &AutRepresentation, iota: &InvariantMap) -> Result<()> {
    let graph = c.graph();
    let action = rep.vertex_action(graph)?;
    let n = graph.vertex_count();
    let sample: Vec<usize> = if n <= 10_000 {
        (0..n).collect()
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        (0..1000).map(|_| rng.gen_range(0..n)).collect()
    };
    for (k, g) in rep.group().gens().iter().enumerate() {
        for &v in &sample {
            if iota.type_of(graph, v)? != iota.type_of(graph, action.apply(v, g))? {
                return Err(Error::Precondition(format!("type map is not invariant: generator {k} moves the type of {}", graph.label(v))));
            }
        }
    }
    Ok(())
}

/// Checks type constancy on levels, the bound of at most `i+1` types on
/// `B_i(α)` and type constancy on `Γ_i(α)` when `δ ≥ 2i`. When the code is
/// `(G, s)`-neighbour-transitive a failed conclusion is a contradiction.
pub fn check_invariant(c: &Code, rep: &AutRepresentation, s: usize, iota: &InvariantMap, budget: &Budget) -> Result<InvariantReport> {
    check_preserves(c, rep)?;
    check_g_invariance(c, rep, iota)?;
    let graph = c.graph();
    let s_nt = is_s_nt(c, rep, s, budget)?.s_nt;
    let partition = partition_for(c, s, budget)?;
    let top = partition.rho().map_or(s, |rho| s.min(rho));
    let delta = if c.len() < 2 { usize::MAX } else { min_distance(c, budget)? };
    let alpha = c.words()[0];
    let types_of = |vs: &[usize]| -> Result<BTreeSet<Vec<usize>>> { vs.iter().map(|&v| iota.type_of(graph, v)).collect() };

    let mut report = InvariantReport {
        s_nt,
        level_types: Vec::new(),
        ball_type_counts: Vec::new(),
        sphere_constant: Vec::new(),
        level_constancy: true,
        ball_bound: true,
        sphere_constancy: true,
    };
    for i in 0..=top {
        let level_types = types_of(&partition.level_set(i, budget)?)?;
        report.level_constancy &= level_types.len() == 1;
        report.level_types.push(level_types.into_iter().collect());
        let ball = types_of(&graph.ball(alpha, i))?.len();
        report.ball_bound &= ball <= i + 1;
        report.ball_type_counts.push(ball);
        let sphere = (delta >= 2 * i).then(|| types_of(&graph.sphere(alpha, i))).transpose()?.map(|t| t.len() <= 1);
        report.sphere_constancy &= sphere != Some(false);
        report.sphere_constant.push(sphere);
    }
    if s_nt && !(report.level_constancy && report.ball_bound && report.sphere_constancy) {
        return Err(Error::Contradiction(format!("neighbour-transitive code violates a type conclusion: {report:?}")));
    }
    Ok(report)
}
