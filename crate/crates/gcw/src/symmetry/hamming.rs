//! Entry and alphabet actions of wreath groups on Hamming codes, the
//! entry-faithful / alphabet-affine / alphabet-almost-simple split, entry
//! homogeneity and the diagonal criterion for permutation codes.

use std::collections::HashMap;

use itertools::Itertools;
use serde::Serialize;

use super::{is_s_nt, AutRepresentation};
use crate::algebra::{normalizer_in_sym, stabilizer_under, two_transitive_type, OnSets, Perm, PermGroup, TwoTransitiveType};
use crate::codecore::{error_capacity, min_distance, Code};
use crate::constructions::wreath::entry_image;
use crate::constructions::{holomorph_autos, permutation_code};
use crate::graphs::Hamming;
use crate::{Budget, Error, Result};

fn block_count(g: &PermGroup, q: usize) -> Result<usize> {
    if q == 0 || g.degree() % q != 0 {
        return Err(Error::InvalidParameter(format!("degree {} is not a multiple of q = {q}", g.degree())));
    }
    Ok(g.degree() / q)
}

/// `G^N`: the action of a wreath group on the entries.
pub fn entry_action(g: &PermGroup, q: usize) -> Result<PermGroup> {
    let n = block_count(g, q)?;
    PermGroup::new(n, g.gens().iter().map(|x| Perm::from_fn(n, |j| entry_image(q, x, j))).collect())
}

/// `G_i^{Q_i}`: the stabilizer of entry `i` acting on the alphabet of that
/// entry.
pub fn alphabet_action(g: &PermGroup, q: usize, i: usize, budget: &Budget) -> Result<PermGroup> {
    let n = block_count(g, q)?;
    if i >= n {
        return Err(Error::InvalidParameter(format!("entry {i} out of range 0..{n}")));
    }
    let block: Vec<usize> = (i * q..(i + 1) * q).collect();
    let (stab, _) = stabilizer_under(g, &block, &OnSets, budget)?;
    PermGroup::new(q, stab.gens().iter().map(|x| Perm::from_fn(q, |a| x.apply(i * q + a) - i * q)).collect())
}

fn wreath_parts<'a>(c: &'a Code, rep: &'a AutRepresentation) -> Result<(&'a Hamming, &'a PermGroup, usize)> {
    let h = c.graph().as_hamming().ok_or_else(|| Error::Precondition(format!("{} is not a Hamming graph", c.graph().spec())))?;
    match rep {
        AutRepresentation::Wreath { group, q } if *q == h.q && group.degree() == h.n * h.q => Ok((h, group, *q)),
        _ => Err(Error::Precondition("a wreath representation on the Hamming host is required".into())),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ClassificationTag {
    EntryFaithful,
    AlphabetAlmostSimple,
    AlphabetAffine,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub tag: ClassificationTag,
    pub kernel_order: u128,
    pub entry_transitive: bool,
    /// 2-transitivity of `G_0^{Q_0}`, computed when the kernel is nontrivial.
    pub alphabet_two_transitive: Option<bool>,
    /// `δ ≥ 3` and `G`-neighbour-transitivity, under which the alphabet
    /// action must be 2-transitive.
    pub two_transitivity_forced: bool,
}

/// Tags a code-group pair in a Hamming graph. The kernel of the entry
/// action is trivial exactly when `|G| = |G^N|`.
pub fn classify_pair(c: &Code, rep: &AutRepresentation, budget: &Budget) -> Result<Classification> {
    let (_, group, q) = wreath_parts(c, rep)?;
    let entries = entry_action(group, q)?;
    let kernel_order = group.order() / entries.order();
    let entry_transitive = entries.is_transitive();
    let forced = || -> Result<bool> {
        if c.len() < 2 || min_distance(c, budget)? < 3 {
            return Ok(false);
        }
        Ok(is_s_nt(c, rep, 1, budget)?.s_nt)
    };
    let mut out = Classification {
        tag: ClassificationTag::EntryFaithful,
        kernel_order,
        entry_transitive,
        alphabet_two_transitive: None,
        two_transitivity_forced: forced()?,
    };
    if kernel_order == 1 {
        return Ok(out);
    }
    let alphabet = alphabet_action(group, q, 0, budget)?;
    let two_transitive = alphabet.is_k_transitive(2)?;
    out.alphabet_two_transitive = Some(two_transitive);
    if out.two_transitivity_forced && !two_transitive {
        return Err(Error::Contradiction("G-neighbour-transitive with δ ≥ 3 but the alphabet action is not 2-transitive".into()));
    }
    if !entry_transitive || !two_transitive {
        return Err(Error::Precondition(format!(
            "nontrivial kernel (order {kernel_order}) but entry-transitive = {entry_transitive}, alphabet 2-transitive = {two_transitive}"
        )));
    }
    out.tag = match two_transitive_type(&alphabet, budget)? {
        TwoTransitiveType::Affine => ClassificationTag::AlphabetAffine,
        TwoTransitiveType::AlmostSimple => ClassificationTag::AlphabetAlmostSimple,
    };
    Ok(out)
}

/// Whether the stabilizer of the least codeword is `i`-homogeneous on the
/// entries for every `1 ≤ i ≤ min(e, s)`.
pub fn check_entry_homogeneity(c: &Code, rep: &AutRepresentation, s: usize, budget: &Budget) -> Result<bool> {
    let (_, group, q) = wreath_parts(c, rep)?;
    let action = rep.vertex_action(c.graph())?;
    let e = if c.len() < 2 { 0 } else { error_capacity(min_distance(c, budget)?) };
    if e < 1 {
        return Err(Error::Precondition(format!("entry homogeneity needs e ≥ 1, got e = {e}")));
    }
    let (stab, _) = stabilizer_under(group, &c.words()[0], &action, budget)?;
    let induced = entry_action(&stab, q)?;
    for i in 1..=e.min(s) {
        if !induced.is_k_homogeneous(i, budget)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Both sides of the diagonal criterion for `C(T)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PermcodeCriterion {
    /// `C(T)` is neighbour-transitive under `Diag_q(T) ⋊ A(T)`, the full
    /// stabilizer of `C(T)` in `Diag_q(Sym(q)) ⋊ L`.
    pub diagonal_nt: bool,
    pub normalizer_two_transitive: bool,
}

/// Computes diagonal neighbour-transitivity of `C(T)` and 2-transitivity of
/// `N_{Sym(q)}(T)` independently; unequal answers are a contradiction.
pub fn verify_permcode_criterion(t: &PermGroup, normalizer_gens: Option<&[Perm]>, budget: &Budget) -> Result<PermcodeCriterion> {
    let q = t.degree();
    let code = permutation_code(&t.elements(budget)?)?;
    let holomorph = holomorph_autos(t, normalizer_gens, budget)?;
    let diagonal_nt = is_s_nt(&code, &AutRepresentation::wreath(holomorph, q), 1, budget)?.s_nt;
    let normalizer = normalizer_in_sym(t, normalizer_gens, budget)?;
    let normalizer_two_transitive = q < 2 || normalizer.is_k_transitive(2)?;
    if diagonal_nt != normalizer_two_transitive {
        return Err(Error::Contradiction(format!(
            "diagonal NT = {diagonal_nt} but normalizer 2-transitive = {normalizer_two_transitive} for T of order {}",
            t.order()
        )));
    }
    Ok(PermcodeCriterion { diagonal_nt, normalizer_two_transitive })
}

/// One subgroup of `S_q` from each conjugacy class, for `q ≤ 5`, found as
/// closures of element pairs. Sorted by order, then by the canonical
/// element mask.
pub fn subgroup_classes(q: usize) -> Result<Vec<PermGroup>> {
    if !(1..=5).contains(&q) {
        return Err(Error::InvalidParameter(format!("subgroup classes are enumerated for 1 ≤ q ≤ 5, got {q}")));
    }
    let elements: Vec<Perm> = (0..q as u32).permutations(q).map(|p| Perm::from_images(p).expect("permutation")).collect();
    let index: HashMap<Perm, usize> = elements.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    let m = elements.len();
    let product: Vec<Vec<usize>> = elements.iter().map(|a| elements.iter().map(|b| index[&a.compose(b)]).collect()).collect();
    let conj: Vec<Vec<usize>> = elements.iter().map(|g| elements.iter().map(|x| index[&x.conjugate_by(g)]).collect()).collect();
    let close = |gens: &[usize]| -> u128 {
        let mut mask = 1u128;
        let mut members = vec![0usize];
        let mut head = 0;
        while head < members.len() {
            for &g in gens {
                let y = product[members[head]][g];
                if mask >> y & 1 == 0 {
                    mask |= 1 << y;
                    members.push(y);
                }
            }
            head += 1;
        }
        mask
    };
    let canonical = |mask: u128| -> u128 {
        (0..m)
            .map(|g| (0..m).filter(|&x| mask >> x & 1 == 1).fold(0u128, |acc, x| acc | 1 << conj[g][x]))
            .min()
            .expect("nonempty")
    };
    let mut seen_subgroups = std::collections::HashSet::new();
    let mut classes: HashMap<u128, (usize, usize)> = HashMap::new();
    for a in 0..m {
        for b in a..m {
            let mask = close(&[a, b]);
            if seen_subgroups.insert(mask) {
                classes.entry(canonical(mask)).or_insert((a, b));
            }
        }
    }
    let mut reps: Vec<(u32, u128, (usize, usize))> = classes.into_iter().map(|(k, v)| (k.count_ones(), k, v)).collect();
    reps.sort();
    reps.into_iter().map(|(_, _, (a, b))| PermGroup::new(q, vec![elements[a].clone(), elements[b].clone()])).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subgroup_class_counts() {
        let counts: Vec<usize> = (1..=5).map(|q| subgroup_classes(q).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 2, 4, 11, 19]);
    }
}
