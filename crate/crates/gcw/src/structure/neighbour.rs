//! Code neighbours, reconstruction of a code from them, elusive codes and
//! spherical bitrades.

use std::collections::HashMap;
use std::sync::Arc;

use serde::Serialize;

use crate::algebra::Perm;
use crate::codecore::{min_distance, Code, VertexSet};
use crate::graphs::Graph;
use crate::symmetry::{ambient_group, partition_for, AutRepresentation, VertexAction};
use crate::{Budget, Error, Result};

/// `C_1`: the non-codewords adjacent to some codeword, sorted.
#[derive(Debug, Clone)]
pub struct NeighbourSet {
    code: Code,
    members: Vec<usize>,
}

impl NeighbourSet {
    pub fn code(&self) -> &Code {
        &self.code
    }

    pub fn graph(&self) -> &Arc<Graph> {
        self.code.graph()
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members.binary_search(&v).is_ok()
    }
}

pub fn neighbour_set(c: &Code) -> NeighbourSet {
    let graph = c.graph();
    let mut members = Vec::with_capacity(c.len() * graph.degree(c.first().unwrap_or(0)).min(64));
    for &w in c.words() {
        graph.for_each_neighbor(w, |v| {
            if !c.contains(v) {
                members.push(v);
            }
        });
    }
    members.sort_unstable();
    members.dedup();
    NeighbourSet { code: c.clone(), members }
}

/// `{α : Γ_1(α) ⊆ C_1}`. Only neighbours of `C_1` can qualify, so each is
/// counted by how many of its neighbours lie in `C_1`.
pub fn reconstruct(ns: &NeighbourSet, budget: &Budget) -> Result<Code> {
    let graph = ns.graph();
    if !graph.is_reduced(budget)? {
        return Err(Error::Precondition(format!("{} is not reduced: distinct vertices share a neighbourhood", graph.spec())));
    }
    let mut hits: HashMap<usize, usize> = HashMap::new();
    for &v in ns.members() {
        graph.for_each_neighbor(v, |a| *hits.entry(a).or_default() += 1);
    }
    let words = hits.into_iter().filter(|&(a, k)| k == graph.degree(a)).map(|(a, _)| a);
    Code::new(graph.clone(), words)
}

/// Lemma-backed round trip: when `δ ≥ 5` on a reduced host, reconstruction
/// must return `C`. Returns whether it did; a failure under the hypotheses
/// is a contradiction.
pub fn check_round_trip(c: &Code, budget: &Budget) -> Result<bool> {
    let back = reconstruct(&neighbour_set(c), budget)?;
    let same = back.same_set(c);
    if !same && c.len() >= 2 && min_distance(c, budget)? >= 5 {
        return Err(Error::Contradiction(format!("δ ≥ 5 but reconstruction returned {} vertices, not {}", back.len(), c.len())));
    }
    Ok(same)
}

/// Where [`is_elusive`] looks for `g` with `C_1^g = C_1` and `C^g ≠ C`.
#[derive(Debug, Clone, Copy)]
pub enum ElusiveSearch<'a> {
    /// Generators of a group that must stabilize `C_1`; some element moves
    /// `C` exactly when some generator does.
    Generators(&'a AutRepresentation),
    /// Every element of an ambient group (default: the known full
    /// automorphism group of the host).
    Ambient(Option<&'a AutRepresentation>),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ElusiveWitness {
    pub representation: &'static str,
    /// The element as an image list in its representation.
    pub element: Vec<u32>,
    pub image: Vec<String>,
    /// Whether `(C, C^g)` is a spherical bitrade; checked when `δ ≥ 3`.
    pub spherical_bitrade: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum ElusiveVerdict {
    Elusive(ElusiveWitness),
    /// No witness among `searched` elements. `determined` records that
    /// `C_1` determines `C` (`δ ≥ 5`, reduced host), so none exists at all.
    NotFound { searched: u128, determined: bool },
    Inconclusive { reason: String },
}

fn image_code(c: &Code, action: &VertexAction, g: &Perm) -> Result<Code> {
    Code::new(c.graph().clone(), c.words().iter().map(|&w| action.apply(w, g)))
}

fn preserves_set(action: &VertexAction, set: &VertexSet, members: &[usize], g: &Perm) -> bool {
    members.iter().all(|&v| set.contains(action.apply(v, g)))
}

/// Searches for an automorphism fixing `C_1` and moving `C`. A witness is
/// re-verified from scratch before it is returned.
pub fn is_elusive(c: &Code, search: ElusiveSearch<'_>, budget: &Budget) -> Result<ElusiveVerdict> {
    let graph = c.graph();
    let ns = neighbour_set(c);
    let n = graph.vertex_count();
    let c1 = VertexSet::from_iter(n, ns.members().iter().copied());
    let determined = c.len() >= 2 && graph.is_reduced(budget).unwrap_or(false) && min_distance(c, budget)? >= 5;

    let (rep, found, searched) = match search {
        ElusiveSearch::Generators(rep) => {
            let action = rep.vertex_action(graph)?;
            if let Some((k, _)) = rep.group().gens().iter().enumerate().find(|(_, g)| !preserves_set(&action, &c1, ns.members(), g)) {
                return Err(Error::Precondition(format!("generator {k} does not stabilize C_1")));
            }
            let members = c.membership();
            let found = rep.group().gens().iter().find(|g| !preserves_set(&action, &members, c.words(), g)).cloned();
            (rep.clone(), found, rep.group().gens().len() as u128)
        }
        ElusiveSearch::Ambient(ambient) => {
            let rep = match ambient {
                Some(a) => a.clone(),
                None => match ambient_group(graph) {
                    Ok(a) => a,
                    Err(e) => return Ok(ElusiveVerdict::Inconclusive { reason: e.to_string() }),
                },
            };
            let order = rep.group().order();
            if n > 10_000 || order > budget.group_elements as u128 {
                let reason = format!("ambient search over {order} elements on {n} vertices exceeds the budget");
                return Ok(ElusiveVerdict::Inconclusive { reason });
            }
            let action = rep.vertex_action(graph)?;
            let members = c.membership();
            let mut found = None;
            let mut searched = 0u128;
            rep.group().chain().for_each_element(|g| {
                searched += 1;
                if preserves_set(&action, &c1, ns.members(), g) && !preserves_set(&action, &members, c.words(), g) {
                    found = Some(g.clone());
                    return false;
                }
                true
            });
            (rep, found, searched)
        }
    };
    let Some(g) = found else {
        return Ok(ElusiveVerdict::NotFound { searched, determined });
    };
    let action = rep.vertex_action(graph)?;
    let image = image_code(c, &action, &g)?;
    if image.same_set(c) || neighbour_set(&image).members() != ns.members() {
        return Err(Error::Contradiction("elusive witness failed re-verification".into()));
    }
    if determined {
        return Err(Error::Contradiction("C_1 determines C, yet an automorphism fixes C_1 and moves C".into()));
    }
    let spherical_bitrade = if c.len() < 2 || min_distance(c, budget)? >= 3 {
        let holds = is_spherical_bitrade(c, &image)?.holds;
        if !holds {
            return Err(Error::Contradiction("elusive image with δ ≥ 3 is not a spherical bitrade".into()));
        }
        Some(holds)
    } else {
        None
    };
    Ok(ElusiveVerdict::Elusive(ElusiveWitness {
        representation: rep.tag(),
        element: g.images().to_vec(),
        image: image.labels(),
        spherical_bitrade,
    }))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BitradeCounterexample {
    pub vertex: String,
    pub first: usize,
    pub second: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BitradeReport {
    pub holds: bool,
    /// The least vertex whose neighbourhood meets the two sides unequally or
    /// more than once.
    pub counterexample: Option<BitradeCounterexample>,
}

fn same_host(a: &Code, b: &Code) -> Result<()> {
    if Arc::ptr_eq(a.graph(), b.graph()) || (a.graph().spec() == b.graph().spec() && a.graph().vertex_count() == b.graph().vertex_count()) {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!("codes live in different graphs: {} and {}", a.graph().spec(), b.graph().spec())))
    }
}

/// `|Γ_1(α) ∩ C| = |Γ_1(α) ∩ C'| ∈ {0, 1}` for every vertex `α`; only
/// neighbours of the two codes can have nonzero counts.
pub fn is_spherical_bitrade(c: &Code, other: &Code) -> Result<BitradeReport> {
    same_host(c, other)?;
    let graph = c.graph();
    let mut counts: HashMap<usize, [usize; 2]> = HashMap::new();
    for (side, code) in [c, other].into_iter().enumerate() {
        for &w in code.words() {
            graph.for_each_neighbor(w, |a| counts.entry(a).or_default()[side] += 1);
        }
    }
    let bad = counts.into_iter().filter(|(_, [x, y])| x != y || *x > 1).min_by_key(|&(a, _)| a);
    Ok(BitradeReport {
        holds: bad.is_none(),
        counterexample: bad.map(|(a, [first, second])| BitradeCounterexample { vertex: graph.label(a), first, second }),
    })
}

/// Whether `C ≠ C'` and the two codes have the same `s`-th level `C_s`.
/// The caller supplies `C'` as an automorphic image of `C`; no search is
/// made.
pub fn is_s_elusive_pair(c: &Code, other: &Code, s: usize, budget: &Budget) -> Result<bool> {
    same_host(c, other)?;
    if c.same_set(other) {
        return Ok(false);
    }
    let level = |code: &Code| partition_for(code, s, budget)?.level_set(s, budget);
    Ok(level(c)? == level(other)?)
}
