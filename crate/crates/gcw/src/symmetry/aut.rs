//! Automorphism groups of small codes by exhaustive search of an ambient
//! automorphism group of the host graph.

use super::AutRepresentation;
use crate::algebra::{Perm, PermGroup, StabChain};
use crate::codecore::Code;
use crate::constructions::hamming_automorphisms;
use crate::graphs::Graph;
use crate::{Budget, Error, Result};

/// The full automorphism group of the families with a known one: `S_q ≀ S_n`
/// for Hamming graphs, the dihedral group for cycles and `S_v` for Johnson
/// and Kneser graphs.
pub fn ambient_group(graph: &Graph) -> Result<AutRepresentation> {
    match graph {
        Graph::Hamming(h) => Ok(AutRepresentation::wreath(hamming_automorphisms(h.n, h.q)?, h.q)),
        Graph::Cycle(m) => {
            let m = *m;
            let rotation = Perm::from_fn(m, |i| (i + 1) % m);
            let reflection = Perm::from_fn(m, |i| (m - i) % m);
            Ok(AutRepresentation::Vertex(PermGroup::new(m, vec![rotation, reflection])?))
        }
        Graph::Johnson(s) if s.v != 2 * s.k => Ok(AutRepresentation::UnderlyingSet(PermGroup::symmetric(s.v))),
        Graph::Kneser(s) => Ok(AutRepresentation::UnderlyingSet(PermGroup::symmetric(s.v))),
        _ => Err(Error::Precondition(format!("no known ambient group for {}; supply one", graph.spec()))),
    }
}

/// `Aut(C)` inside `ambient` (default: [`ambient_group`]), by scanning the
/// ambient elements and keeping those that fix `C` setwise. Elements already
/// in the group found so far are skipped.
pub fn aut_bruteforce(c: &Code, ambient: Option<&AutRepresentation>, budget: &Budget) -> Result<AutRepresentation> {
    let graph = c.graph();
    if graph.vertex_count() > 10_000 {
        return Err(Error::budget("brute-force automorphism search vertices", 10_000));
    }
    let owned;
    let ambient = match ambient {
        Some(a) => a,
        None => {
            owned = ambient_group(graph)?;
            &owned
        }
    };
    let action = ambient.vertex_action(graph)?;
    let group = ambient.group();
    if group.order() > budget.group_elements as u128 {
        return Err(Error::budget("brute-force automorphism search", budget.group_elements));
    }
    let mut found = StabChain::new(group.degree());
    let mut gens = Vec::new();
    group.chain().for_each_element(|g| {
        if !found.contains(g) && c.words().iter().all(|&w| c.contains(action.apply(w, g))) {
            found.insert(g);
            gens.push(g.clone());
        }
        true
    });
    let mut out = PermGroup::new(group.degree(), gens)?;
    if out.gens().is_empty() {
        out = PermGroup::trivial(group.degree());
    }
    Ok(ambient.with_group(out))
}
