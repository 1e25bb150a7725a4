//! Neighbour-transitivity verification: group representations on graph
//! vertices, level transitivity, local-action equivalences, entry and
//! alphabet classification, invariant types and automorphism search.

mod aut;
mod hamming;
mod invariant;
mod io;
mod transitivity;
mod trichotomy;

use std::collections::HashSet;
use std::hash::Hash;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

pub use aut::{ambient_group, aut_bruteforce};
pub use hamming::{
    alphabet_action, check_entry_homogeneity, classify_pair, entry_action, subgroup_classes, verify_permcode_criterion, Classification,
    ClassificationTag, PermcodeCriterion,
};
pub use invariant::{check_invariant, InvariantMap, InvariantReport};
pub use io::{parse_group_json, Geometry, GroupJson, MatrixGeneratorJson, WreathGeneratorJson};
pub use transitivity::{check_local_equivalence, is_completely_transitive, is_s_nt, LocalEquivalence, SymmetryReport, TransitivityWitness};
pub use trichotomy::{covering_radius_trichotomy, incidence_to_collinearity, CollinearityTransfer, Trichotomy, TrichotomyCase};
pub(crate) use transitivity::partition_for;

use crate::algebra::{Action, Perm, PermGroup};
use crate::codecore::{Code, VertexSet};
use crate::constructions::wreath::OnHamming;
use crate::graphs::{Graph, Subsets};
use crate::{Error, Result};

/// How the elements of a permutation group act on graph vertices.
#[derive(Debug, Clone)]
pub enum AutRepresentation {
    /// Wreath permutations on the `n·q` points `(j, a) ↦ j·q + a` of a
    /// Hamming graph.
    Wreath { group: PermGroup, q: usize },
    /// Permutations of the underlying set of a Johnson or Kneser graph.
    UnderlyingSet(PermGroup),
    /// Permutations of the vertex ids.
    Vertex(PermGroup),
}

impl AutRepresentation {
    pub fn wreath(group: PermGroup, q: usize) -> Self {
        AutRepresentation::Wreath { group, q }
    }

    pub fn group(&self) -> &PermGroup {
        match self {
            AutRepresentation::Wreath { group, .. } | AutRepresentation::UnderlyingSet(group) | AutRepresentation::Vertex(group) => group,
        }
    }

    pub fn tag(&self) -> &'static str {
        match self {
            AutRepresentation::Wreath { .. } => "wreath",
            AutRepresentation::UnderlyingSet(_) => "set",
            AutRepresentation::Vertex(_) => "vertex",
        }
    }

    /// The same representation with a different group.
    pub fn with_group(&self, group: PermGroup) -> Self {
        match self {
            AutRepresentation::Wreath { q, .. } => AutRepresentation::Wreath { group, q: *q },
            AutRepresentation::UnderlyingSet(_) => AutRepresentation::UnderlyingSet(group),
            AutRepresentation::Vertex(_) => AutRepresentation::Vertex(group),
        }
    }

    /// The vertex action on `graph`, after checking that the representation
    /// fits the graph family.
    pub fn vertex_action(&self, graph: &Graph) -> Result<VertexAction> {
        let degree = self.group().degree();
        match (self, graph) {
            (AutRepresentation::Wreath { q, .. }, Graph::Hamming(h)) if h.q == *q && h.n * h.q == degree => {
                Ok(VertexAction::Hamming(OnHamming::new(h)))
            }
            (AutRepresentation::UnderlyingSet(_), Graph::Johnson(s) | Graph::Kneser(s)) if s.v == degree => {
                Ok(VertexAction::Subsets(s.clone()))
            }
            (AutRepresentation::Vertex(_), g) if g.vertex_count() == degree => Ok(VertexAction::Points),
            _ => Err(Error::InvalidParameter(format!(
                "{} representation of degree {degree} does not act on {}",
                self.tag(),
                graph.spec()
            ))),
        }
    }
}

/// A compiled action of permutations on vertex ids.
#[derive(Debug, Clone)]
pub enum VertexAction {
    Hamming(OnHamming),
    Subsets(Subsets),
    Points,
}

impl VertexAction {
    #[inline]
    pub fn apply(&self, v: usize, g: &Perm) -> usize {
        match self {
            VertexAction::Hamming(h) => h.apply(v, g),
            VertexAction::Subsets(s) => {
                let mut set: Vec<usize> = s.unrank(v).into_iter().map(|x| g.apply(x)).collect();
                set.sort_unstable();
                s.rank(&set)
            }
            VertexAction::Points => g.apply(v),
        }
    }
}

impl Action for VertexAction {
    type Point = usize;
    fn act(&self, x: &usize, g: &Perm) -> usize {
        self.apply(*x, g)
    }
}

const CHUNK: usize = 1 << 15;

/// Vertex membership sized for about `expected` insertions among `n`
/// vertices.
pub(crate) fn marks(n: usize, expected: usize) -> VertexSet {
    if n <= 1 << 26 || n / 64 <= expected {
        VertexSet::new(n)
    } else {
        VertexSet::Hash(HashSet::with_capacity(expected))
    }
}

/// Orbit of `seed` on vertex ids in BFS order, marking visited vertices in
/// `seen`. Frontier chunks are expanded in parallel and merged in order.
pub fn vertex_orbit(action: &VertexAction, gens: &[Perm], seed: usize, seen: &mut VertexSet, limit: u64) -> Result<Vec<usize>> {
    seen.insert(seed);
    let mut orbit = vec![seed];
    let mut head = 0;
    while head < orbit.len() {
        let end = orbit.len().min(head + CHUNK);
        let images: Vec<usize> = orbit[head..end]
            .par_iter()
            .with_min_len(256)
            .flat_map_iter(|&v| gens.iter().map(move |g| action.apply(v, g)))
            .collect();
        head = end;
        for w in images {
            if seen.insert(w) {
                orbit.push(w);
            }
        }
        if orbit.len() as u64 > limit {
            return Err(Error::budget("vertex orbit", limit));
        }
    }
    Ok(orbit)
}

/// Closure of `seed` under `f(·, g)` for every generator, for points that
/// are not plain vertex ids; discovery order.
pub fn closure<T, F>(seed: T, gens: &[Perm], f: F, limit: u64) -> Result<Vec<T>>
where
    T: Clone + Eq + Hash + Send + Sync,
    F: Fn(&T, &Perm) -> T + Sync,
{
    let mut seen = HashSet::from([seed.clone()]);
    let mut out = vec![seed];
    let mut head = 0;
    while head < out.len() {
        let end = out.len().min(head + CHUNK);
        let images: Vec<T> =
            out[head..end].par_iter().with_min_len(256).flat_map_iter(|x| gens.iter().map(|g| f(x, g))).collect();
        head = end;
        for y in images {
            if seen.insert(y.clone()) {
                out.push(y);
            }
        }
        if out.len() as u64 > limit {
            return Err(Error::budget("orbit closure", limit));
        }
    }
    Ok(out)
}

/// Checks that every generator maps the code into itself; the witness names
/// the first generator and codeword that fail.
/// Vertex representations are also checked to preserve edges.
pub fn check_preserves(c: &Code, rep: &AutRepresentation) -> Result<VertexAction> {
    let action = rep.vertex_action(c.graph())?;
    if let AutRepresentation::Vertex(_) = rep {
        check_edge_preservation(c.graph(), rep, 0)?;
    }
    for (k, g) in rep.group().gens().iter().enumerate() {
        if let Some(&w) = c.words().iter().find(|&&w| !c.contains(action.apply(w, g))) {
            return Err(Error::Precondition(format!(
                "generator {k} maps codeword {} outside the code",
                c.graph().label(w)
            )));
        }
    }
    Ok(action)
}

/// Checks that every generator maps edges to edges: exhaustively when the
/// graph has at most 10^4 vertices, otherwise on 10^3 seeded random edges.
pub fn check_edge_preservation(graph: &Graph, rep: &AutRepresentation, seed: u64) -> Result<()> {
    let action = rep.vertex_action(graph)?;
    let n = graph.vertex_count();
    let check = |u: usize, w: usize, g: &Perm, k: usize| -> Result<()> {
        let (gu, gw) = (action.apply(u, g), action.apply(w, g));
        let mut adjacent = false;
        graph.for_each_neighbor(gu, |x| adjacent |= x == gw);
        if adjacent {
            Ok(())
        } else {
            Err(Error::Precondition(format!(
                "generator {k} maps edge {{{}, {}}} to a non-edge",
                graph.label(u),
                graph.label(w)
            )))
        }
    };
    for (k, g) in rep.group().gens().iter().enumerate() {
        if n <= 10_000 {
            for u in 0..n {
                for w in graph.neighbors(u) {
                    check(u, w, g, k)?;
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for _ in 0..1000 {
                let u = rng.gen_range(0..n);
                let nb = graph.neighbors(u);
                if nb.is_empty() {
                    continue;
                }
                check(u, nb[rng.gen_range(0..nb.len())], g, k)?;
            }
        }
    }
    Ok(())
}
