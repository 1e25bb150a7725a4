//! The covering-radius trichotomy for codes with locally 2-transitive
//! groups, and the transfer of neighbour-transitivity from incidence graphs
//! to collinearity graphs.

use std::sync::Arc;

use serde::Serialize;

use super::{check_preserves, is_s_nt, marks, vertex_orbit, AutRepresentation};
use crate::algebra::{stabilizer_under, Perm, PermGroup};
use crate::codecore::{is_perfect, min_distance, Code, DistancePartition};
use crate::graphs::IncidenceStructure;
use crate::{Budget, Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TrichotomyCase {
    /// `ρ ≥ 2`.
    Case1RhoGe2,
    /// `ρ = 1`, `δ = 3` and the code is perfect.
    Case2PerfectDelta3,
    /// `ρ = 1`, `δ = 2`, and `C`, `C_1` are the biparts.
    Case3aBipartitePart,
    /// `ρ = 1`, `δ = 2`, and adjacent `μ, ν ∈ C_1` see the same codewords.
    Case3bSharedNeighbourhoods,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Trichotomy {
    pub case: TrichotomyCase,
    pub covering_radius: usize,
    pub min_distance: usize,
}

/// Verifies the hypotheses (transitive on `C`, `G_α` transitive on
/// `Γ_1(α)` and `Γ_2(α)`), then places the code in one case and checks that
/// case's defining property directly.
pub fn covering_radius_trichotomy(c: &Code, rep: &AutRepresentation, budget: &Budget) -> Result<Trichotomy> {
    if c.len() < 2 {
        return Err(Error::TrivialCode("trichotomy needs at least two codewords".into()));
    }
    let action = check_preserves(c, rep)?;
    let graph = c.graph();
    let group = rep.group();
    let alpha = c.words()[0];
    let mut seen = marks(graph.vertex_count(), c.len());
    if vertex_orbit(&action, group.gens(), alpha, &mut seen, budget.orbit_points)?.len() != c.len() {
        return Err(Error::Precondition("G is not transitive on C".into()));
    }
    let (stab, _) = stabilizer_under(group, &alpha, &action, budget)?;
    for i in 1..=2 {
        let sphere = graph.sphere(alpha, i);
        if sphere.is_empty() {
            continue;
        }
        let mut seen = marks(graph.vertex_count(), sphere.len());
        if vertex_orbit(&action, stab.gens(), sphere[0], &mut seen, budget.orbit_points)?.len() != sphere.len() {
            return Err(Error::Precondition(format!("G_α is not transitive on Γ_{i}(α)")));
        }
    }

    let partition = DistancePartition::best(c, budget)?;
    let rho = partition.rho().expect("exact partition");
    let delta = min_distance(c, budget)?;
    let out = |case| Ok(Trichotomy { case, covering_radius: rho, min_distance: delta });
    if rho >= 2 {
        return out(TrichotomyCase::Case1RhoGe2);
    }
    if delta == 3 {
        if !is_perfect(c, budget)? {
            return Err(Error::Contradiction("ρ = 1 and δ = 3 but the code is not perfect".into()));
        }
        return out(TrichotomyCase::Case2PerfectDelta3);
    }
    if delta != 2 {
        return Err(Error::Contradiction(format!("ρ = 1 with δ = {delta}")));
    }
    let neighbours = partition.level_set(1, budget)?;
    let mut inner_edges = Vec::new();
    for &mu in &neighbours {
        graph.for_each_neighbor(mu, |nu| {
            if mu < nu && !c.contains(nu) {
                inner_edges.push((mu, nu));
            }
        });
    }
    if inner_edges.is_empty() {
        let code_independent = c.words().iter().all(|&a| graph.neighbors(a).iter().all(|&b| !c.contains(b)));
        if !code_independent {
            return Err(Error::Contradiction("no edges inside C_1 but C is not independent".into()));
        }
        return out(TrichotomyCase::Case3aBipartitePart);
    }
    let code_neighbours = |v: usize| {
        let mut out: Vec<usize> = graph.neighbors(v).into_iter().filter(|&w| c.contains(w)).collect();
        out.sort_unstable();
        out
    };
    if let Some(&(mu, nu)) = inner_edges.iter().find(|&&(mu, nu)| code_neighbours(mu) != code_neighbours(nu)) {
        return Err(Error::Contradiction(format!(
            "adjacent {} and {} in C_1 see different codewords",
            graph.label(mu),
            graph.label(nu)
        )));
    }
    out(TrichotomyCase::Case3bSharedNeighbourhoods)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CollinearityTransfer {
    pub s: usize,
    /// Whether the codewords are lines, so the dual structure is used.
    pub dual: bool,
    pub incidence_s_nt: bool,
    /// `(G, ⌊s/2⌋)`-neighbour-transitivity in the collinearity graph.
    pub collinearity_nt: bool,
}

/// Re-checks `⌊s/2⌋`-neighbour-transitivity of an incidence-graph code in
/// the collinearity graph of its points, or of the dual structure when the
/// codewords are lines. The group acts on incidence-graph vertices.
pub fn incidence_to_collinearity(
    c: &Code,
    rep: &AutRepresentation,
    structure: &IncidenceStructure,
    s: usize,
    budget: &Budget,
) -> Result<CollinearityTransfer> {
    let p = structure.points;
    let total = p + structure.num_lines();
    if c.graph().vertex_count() != total {
        return Err(Error::InvalidParameter("code is not in the incidence graph of this structure".into()));
    }
    let group = match rep {
        AutRepresentation::Vertex(g) if g.degree() == total => g,
        _ => return Err(Error::Precondition("a vertex representation on the incidence graph is required".into())),
    };
    let dual = if c.words().iter().all(|&w| w < p) {
        false
    } else if c.words().iter().all(|&w| w >= p) {
        true
    } else {
        return Err(Error::Precondition("codewords mix points and lines".into()));
    };
    let incidence_s_nt = is_s_nt(c, rep, s, budget)?.s_nt;

    let (side, offset, geometry) = if dual { (structure.num_lines(), p, structure.dualize()) } else { (p, 0, structure.clone()) };
    let restrict = |g: &Perm| Perm::from_fn(side, |x| g.apply(x + offset) - offset);
    if let Some(g) = group.gens().iter().find(|g| (0..side).any(|x| !(offset..offset + side).contains(&g.apply(x + offset)))) {
        return Err(Error::Precondition(format!("generator {g} does not preserve the {} side", if dual { "line" } else { "point" })));
    }
    let restricted = PermGroup::new(side, group.gens().iter().map(restrict).collect())?;
    let collinearity = Arc::new(geometry.collinearity_graph());
    let code = Code::new(collinearity, c.words().iter().map(|&w| w - offset))?;
    let collinearity_nt = is_s_nt(&code, &AutRepresentation::Vertex(restricted), s / 2, budget)?.s_nt;
    if incidence_s_nt && !collinearity_nt {
        return Err(Error::Contradiction(format!("{s}-neighbour-transitive in the incidence graph but not ⌊s/2⌋ in the collinearity graph")));
    }
    Ok(CollinearityTransfer { s, dual, incidence_s_nt, collinearity_nt })
}
