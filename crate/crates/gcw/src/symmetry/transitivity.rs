//! Transitivity on the levels of the distance partition and the equivalent
//! local conditions for `s ≤ e`.

use serde::Serialize;

use super::{check_preserves, closure, marks, vertex_orbit, AutRepresentation, ClassificationTag, VertexAction};
use crate::algebra::{stabilizer_under, Perm};
use crate::codecore::{distance_partition, error_capacity, min_distance, Code, DistancePartition, PartitionMode};
use crate::{Budget, Error, Result};

/// Two vertices of one level that the group does not connect.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TransitivityWitness {
    pub level: usize,
    pub representative: String,
    pub unreached: String,
    pub orbit_size: usize,
    pub level_size: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SymmetryReport {
    pub s: usize,
    pub partition_mode: PartitionMode,
    pub covering_radius: Option<usize>,
    /// `|C_i|` for the examined levels.
    pub level_sizes: Vec<u64>,
    /// Number of group orbits on each examined level `C_0..C_min(s, ρ)`.
    pub orbit_counts: Vec<usize>,
    pub s_nt: bool,
    /// Known when a level fails or when `s ≥ ρ`.
    pub completely_transitive: Option<bool>,
    pub classification: Option<ClassificationTag>,
    pub witness: Option<TransitivityWitness>,
}

/// The cheapest exact partition, falling back to sphere mode for `s ≤ e`
/// when the graph is too large.
pub(crate) fn partition_for(c: &Code, s: usize, budget: &Budget) -> Result<DistancePartition> {
    match DistancePartition::best(c, budget) {
        Err(Error::BudgetExceeded { .. }) => distance_partition(c, PartitionMode::Spheres(s), budget),
        other => other,
    }
}

/// Number of group orbits on a sorted level; fails when an orbit leaves
/// the level.
fn level_orbit_count(action: &VertexAction, gens: &[Perm], level: &[usize], vertices: usize, budget: &Budget) -> Result<usize> {
    let mut seen = marks(vertices, level.len());
    let mut count = 0;
    for &v in level {
        if seen.contains(v) {
            continue;
        }
        let orbit = vertex_orbit(action, gens, v, &mut seen, budget.orbit_points)?;
        if let Some(&w) = orbit.iter().find(|w| level.binary_search(w).is_err()) {
            return Err(Error::Precondition(format!("the group maps vertex {v} to {w} on another level")));
        }
        count += 1;
    }
    Ok(count)
}

/// Decides `(G, s)`-neighbour-transitivity by one orbit computation per
/// level, counting all orbits for the report.
pub fn is_s_nt(c: &Code, rep: &AutRepresentation, s: usize, budget: &Budget) -> Result<SymmetryReport> {
    let action = check_preserves(c, rep)?;
    let partition = partition_for(c, s, budget)?;
    let top = partition.rho().map_or(s, |rho| s.min(rho));
    let graph = c.graph();
    let gens = rep.group().gens();
    let mut report = SymmetryReport {
        s,
        partition_mode: partition.mode(),
        covering_radius: partition.rho(),
        level_sizes: Vec::new(),
        orbit_counts: Vec::new(),
        s_nt: true,
        completely_transitive: None,
        classification: None,
        witness: None,
    };
    for i in 0..=top {
        let level = partition.level_set(i, budget)?;
        let count = level_orbit_count(&action, gens, &level, graph.vertex_count(), budget)?;
        report.level_sizes.push(level.len() as u64);
        report.orbit_counts.push(count);
        if count != 1 && report.witness.is_none() {
            let mut seen = marks(graph.vertex_count(), level.len());
            let orbit = vertex_orbit(&action, gens, level[0], &mut seen, budget.orbit_points)?;
            let unreached = *level.iter().find(|&&v| !seen.contains(v)).expect("level has several orbits");
            report.witness = Some(TransitivityWitness {
                level: i,
                representative: graph.label(level[0]),
                unreached: graph.label(unreached),
                orbit_size: orbit.len(),
                level_size: level.len(),
            });
        }
    }
    report.s_nt = report.orbit_counts.iter().all(|&k| k == 1);
    report.completely_transitive = match (report.s_nt, partition.rho()) {
        (false, _) => Some(false),
        (true, Some(rho)) if s >= rho => Some(true),
        _ => None,
    };
    Ok(report)
}

/// `(G, ρ)`-neighbour-transitivity; needs an exact partition.
pub fn is_completely_transitive(c: &Code, rep: &AutRepresentation, budget: &Budget) -> Result<bool> {
    let rho = DistancePartition::best(c, budget)?.rho().expect("exact partitions know ρ");
    Ok(is_s_nt(c, rep, rho, budget)?.completely_transitive == Some(true))
}

/// The three equivalent conditions for `1 ≤ s ≤ e`, each computed on its
/// own.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LocalEquivalence {
    pub s: usize,
    pub error_capacity: usize,
    /// `G` is transitive on `C, C_1, .., C_s`.
    pub level_transitive: bool,
    /// `G` is transitive on `C` and `G_α` on each `Γ_i(α)`.
    pub stabilizer_transitive: bool,
    /// `G` is transitive on each `{(β, γ) : β ∈ C, γ ∈ Γ_i(β)}`.
    pub pair_transitive: bool,
}

impl LocalEquivalence {
    pub fn agree(&self) -> bool {
        self.level_transitive == self.stabilizer_transitive && self.stabilizer_transitive == self.pair_transitive
    }
}

/// Computes the three conditions with `α` the least codeword; disagreement
/// is an implementation contradiction.
pub fn check_local_equivalence(c: &Code, rep: &AutRepresentation, s: usize, budget: &Budget) -> Result<LocalEquivalence> {
    if c.len() < 2 {
        return Err(Error::TrivialCode("local equivalence needs at least two codewords".into()));
    }
    let e = error_capacity(min_distance(c, budget)?);
    if s == 0 || s > e {
        return Err(Error::Precondition(format!("need 1 ≤ s ≤ e, got s={s}, e={e}")));
    }
    let action = check_preserves(c, rep)?;
    let level_transitive = is_s_nt(c, rep, s, budget)?.s_nt;
    let graph = c.graph();
    let group = rep.group();
    let alpha = c.words()[0];

    let mut seen = marks(graph.vertex_count(), c.len());
    let code_orbit = vertex_orbit(&action, group.gens(), alpha, &mut seen, budget.orbit_points)?;
    let mut stabilizer_transitive = code_orbit.len() == c.len();
    if stabilizer_transitive {
        let (stab, _) = stabilizer_under(group, &alpha, &action, budget)?;
        for i in 1..=s {
            let sphere = graph.sphere(alpha, i);
            let mut seen = marks(graph.vertex_count(), sphere.len());
            let orbit = vertex_orbit(&action, stab.gens(), sphere[0], &mut seen, budget.orbit_points)?;
            if orbit.len() != sphere.len() {
                stabilizer_transitive = false;
                break;
            }
        }
    }

    let mut pair_transitive = true;
    for i in 1..=s {
        let total: u64 = c.words().iter().map(|&b| graph.sphere(b, i).len() as u64).sum();
        if total > budget.orbit_points {
            return Err(Error::budget("codeword-sphere pairs", budget.orbit_points));
        }
        let seed = (alpha, graph.sphere(alpha, i)[0]);
        let orbit = closure(seed, group.gens(), |&(b, g), p| (action.apply(b, p), action.apply(g, p)), budget.orbit_points)?;
        if orbit.len() as u64 != total {
            pair_transitive = false;
            break;
        }
    }

    let out = LocalEquivalence { s, error_capacity: e, level_transitive, stabilizer_transitive, pair_transitive };
    if !out.agree() {
        return Err(Error::Contradiction(format!("local-action conditions disagree: {out:?}")));
    }
    Ok(out)
}
