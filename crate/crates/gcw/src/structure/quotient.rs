//! Normal quotients of vertex-transitive graphs and distance-transitivity.

use std::collections::HashSet;
use std::sync::Arc;

use serde::Serialize;

use crate::algebra::{stabilizer_under, Action, Perm, PermGroup};
use crate::codecore::{min_distance, Code};
use crate::graphs::{bfs_distances, girth, ExplicitGraph, Graph, UNREACHED};
use crate::symmetry::{closure, is_s_nt, marks, vertex_orbit, AutRepresentation, VertexAction};
use crate::{Budget, Error, Result};

/// The graph on the orbits of `N`: blocks `U ≠ U'` are adjacent when some
/// edge joins them.
#[derive(Debug, Clone)]
pub struct QuotientGraph {
    /// Block index of every vertex.
    pub block_of: Vec<u32>,
    /// Blocks, sorted by least vertex; each block sorted.
    pub blocks: Vec<Vec<usize>>,
    pub graph: Arc<Graph>,
}

impl QuotientGraph {
    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    /// The permutation `g` induces on blocks; fails when `g` does not map
    /// blocks to blocks.
    pub fn induced(&self, action: &VertexAction, g: &Perm) -> Result<Perm> {
        let images: Vec<u32> = self.blocks.iter().map(|b| self.block_of[action.apply(b[0], g)]).collect();
        for (k, b) in self.blocks.iter().enumerate() {
            if let Some(&v) = b.iter().find(|&&v| self.block_of[action.apply(v, g)] != images[k]) {
                return Err(Error::Precondition(format!("the group does not permute the blocks: vertex {v} leaves the image of its block")));
            }
        }
        Perm::from_images(images)
    }
}

fn checked_vertex_count(graph: &Graph, budget: &Budget) -> Result<usize> {
    let n = graph.vertex_count();
    if n as u64 > budget.dense_vertices {
        return Err(Error::budget("quotient vertices", budget.dense_vertices));
    }
    Ok(n)
}

/// The quotient by the orbits of `normal`. Fails when it is transitive.
pub fn quotient(graph: &Arc<Graph>, normal: &AutRepresentation, budget: &Budget) -> Result<QuotientGraph> {
    let n = checked_vertex_count(graph, budget)?;
    let action = normal.vertex_action(graph)?;
    let mut seen = marks(n, n);
    let mut block_of = vec![u32::MAX; n];
    let mut blocks = Vec::new();
    for v in 0..n {
        if block_of[v] != u32::MAX {
            continue;
        }
        let mut block = vertex_orbit(&action, normal.group().gens(), v, &mut seen, budget.orbit_points)?;
        block.sort_unstable();
        for &x in &block {
            block_of[x] = blocks.len() as u32;
        }
        blocks.push(block);
    }
    if blocks.len() == 1 {
        return Err(Error::Precondition("N is transitive on the vertices".into()));
    }
    let mut edges = HashSet::new();
    for v in 0..n {
        let a = block_of[v];
        graph.for_each_neighbor(v, |w| {
            let b = block_of[w];
            if a < b {
                edges.insert((a as usize, b as usize));
            }
        });
    }
    let mut edges: Vec<_> = edges.into_iter().collect();
    edges.sort_unstable();
    let name = format!("quotient of {} by {} orbits", graph.spec(), blocks.len());
    let labels = blocks.iter().map(|b| graph.label(b[0])).collect();
    let quotient = ExplicitGraph::from_edges(&name, blocks.len(), edges, Some(labels))?;
    Ok(QuotientGraph { block_of, blocks, graph: Arc::new(Graph::Explicit(quotient)) })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DistanceTransitivity {
    pub s: usize,
    pub vertex_transitive: bool,
    /// For each `1 ≤ i ≤ s` up to the diameter: one orbit on ordered pairs at
    /// distance `i`.
    pub pair_transitive: Vec<bool>,
    pub holds: bool,
}

/// Transitivity of a vertex group on the ordered pairs at each distance
/// `0..=s`, by pair-orbit enumeration against the BFS pair count.
pub fn is_s_distance_transitive(graph: &Graph, group: &PermGroup, s: usize, budget: &Budget) -> Result<DistanceTransitivity> {
    let n = graph.vertex_count();
    if n as u64 > budget.exhaustive_vertices {
        return Err(Error::budget("distance-transitivity vertices", budget.exhaustive_vertices));
    }
    if group.degree() != n {
        return Err(Error::DegreeMismatch(group.degree(), n));
    }
    let vertex_transitive = group.orbit(0).len() == n;
    let mut pair_counts = vec![0u64; s + 1];
    let mut first_pair = vec![None; s + 1];
    for v in 0..n {
        for (w, &d) in bfs_distances(graph, &[v]).iter().enumerate() {
            if d == UNREACHED {
                return Err(Error::Precondition("graph is disconnected".into()));
            }
            let d = d as usize;
            if (1..=s).contains(&d) {
                pair_counts[d] += 1;
                first_pair[d].get_or_insert((v, w));
            }
        }
    }
    let mut pair_transitive = Vec::new();
    for i in 1..=s {
        let Some(pair) = first_pair[i] else { break };
        let orbit = closure(pair, group.gens(), |&(a, b), g| (g.apply(a), g.apply(b)), pair_counts[i])?;
        pair_transitive.push(orbit.len() as u64 == pair_counts[i]);
    }
    let holds = vertex_transitive && pair_transitive.iter().all(|&t| t);
    Ok(DistanceTransitivity { s, vertex_transitive, pair_transitive, holds })
}

/// `g ↦` the block containing the image of block `b`'s least vertex.
struct OnBlocks<'a> {
    quotient: &'a QuotientGraph,
    action: &'a VertexAction,
}

impl Action for OnBlocks<'_> {
    type Point = usize;
    fn act(&self, b: &usize, g: &Perm) -> usize {
        self.quotient.block_of[self.action.apply(self.quotient.blocks[*b][0], g)] as usize
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QuotientReport {
    pub s: usize,
    pub blocks: usize,
    pub code_size: usize,
    pub vertex_transitive: bool,
    pub normal: bool,
    /// `C = α^N` is `(G_C, s)`-neighbour-transitive.
    pub code_s_nt: bool,
    pub quotient: DistanceTransitivity,
    /// Reported alongside, not asserted: `δ(α^N)` and the girth of `Γ_N`.
    pub code_min_distance: Option<usize>,
    pub quotient_girth: Option<usize>,
}

impl QuotientReport {
    pub fn hypotheses(&self) -> bool {
        self.vertex_transitive && self.normal && self.code_s_nt
    }
}

/// Verifies the hypotheses (`G` vertex-transitive, `N ⊴ G` intransitive,
/// `C = α^N` is `(G_C, s)`-neighbour-transitive) and then that `Γ_N` is
/// `(G/N, s)`-distance-transitive. A failure of the conclusion under
/// verified hypotheses is a contradiction.
pub fn verify_quotient_prop(
    graph: &Arc<Graph>,
    group: &AutRepresentation,
    n_gens: &[Perm],
    alpha: usize,
    s: usize,
    budget: &Budget,
) -> Result<QuotientReport> {
    let n = checked_vertex_count(graph, budget)?;
    let g = group.group();
    let normal_group = if n_gens.is_empty() { PermGroup::trivial(g.degree()) } else { PermGroup::new(g.degree(), n_gens.to_vec())? };
    if !normal_group.is_subgroup_of(g) {
        return Err(Error::Precondition("N is not a subgroup of G".into()));
    }
    let normal = g.gens().iter().all(|x| n_gens.iter().all(|y| normal_group.contains(&y.conjugate_by(x))));
    if !normal {
        return Err(Error::Precondition("N is not normal in G: a conjugate of a generator leaves N".into()));
    }
    let action = group.vertex_action(graph)?;
    let mut seen = marks(n, n);
    let vertex_transitive = vertex_orbit(&action, g.gens(), 0, &mut seen, budget.orbit_points)?.len() == n;
    let q = quotient(graph, &group.with_group(normal_group), budget)?;

    let block = q.block_of[alpha] as usize;
    let (stab, _) = stabilizer_under(g, &block, &OnBlocks { quotient: &q, action: &action }, budget)?;
    let code = Code::new(graph.clone(), q.blocks[block].iter().copied())?;
    let code_s_nt = is_s_nt(&code, &group.with_group(stab), s, budget)?.s_nt;

    let induced = g.gens().iter().map(|x| q.induced(&action, x)).collect::<Result<Vec<_>>>()?;
    if let Some(x) = n_gens.iter().find(|x| q.induced(&action, x).map_or(true, |p| !p.is_identity())) {
        return Err(Error::Contradiction(format!("N acts nontrivially on its own orbits: {x}")));
    }
    let induced = PermGroup::new(q.block_count(), induced)?;
    let dt = is_s_distance_transitive(&q.graph, &induced, s, budget)?;
    let report = QuotientReport {
        s,
        blocks: q.block_count(),
        code_size: code.len(),
        vertex_transitive,
        normal,
        code_s_nt,
        code_min_distance: if code.len() >= 2 { Some(min_distance(&code, budget)?) } else { None },
        quotient_girth: girth(&q.graph),
        quotient: dt,
    };
    if report.hypotheses() && !report.quotient.holds {
        return Err(Error::Contradiction(format!("hypotheses hold but the quotient is not distance-transitive: {report:?}")));
    }
    Ok(report)
}
