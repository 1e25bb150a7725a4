//! Permutation codes, holomorph groups and twisted permutation codes.

use std::collections::HashMap;
use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};

use super::wreath::{wreath_group, WreathElement};
use crate::algebra::{normalizer_in_sym, orbit, Action, OnPoints, Perm, PermGroup};
use crate::codecore::Code;
use crate::graphs::Graph;
use crate::{Budget, Error, Result};

/// `C(T) = {α_t = (0^t, ..., (q-1)^t)}` in `H(q, q)`.
pub fn permutation_code(t: &[Perm]) -> Result<Code> {
    let q = t.first().map(|p| p.degree()).ok_or_else(|| Error::InvalidParameter("empty T".into()))?;
    if let Some(p) = t.iter().find(|p| p.degree() != q) {
        return Err(Error::DegreeMismatch(p.degree(), q));
    }
    let g = Graph::hamming(q, q)?;
    let h = g.as_hamming().unwrap().clone();
    Code::new(Arc::new(g), t.iter().map(|p| h.from_digits(p.images())))
}

/// Codeword `α_t`.
pub fn perm_word(t: &Perm) -> Vec<u32> {
    t.images().to_vec()
}

/// `σ_g`: the entry permutation `g` in the top group.
pub fn sigma(g: &Perm) -> WreathElement {
    WreathElement::from_top(g.degree(), g.clone())
}

/// `x_g = (g, ..., g)`.
pub fn x_diag(g: &Perm) -> WreathElement {
    WreathElement::diagonal(g.degree(), g)
}

/// `Diag_q(T) ⋊ A(T)` with `A(T) = {x_g σ_g : g ∈ N_{Sym(q)}(T)}`. The
/// normalizer is computed exhaustively or from verified `normalizer_gens`.
pub fn holomorph_autos(t: &PermGroup, normalizer_gens: Option<&[Perm]>, budget: &Budget) -> Result<PermGroup> {
    let q = t.degree();
    let n = normalizer_in_sym(t, normalizer_gens, budget)?;
    let mut gens: Vec<WreathElement> = t.gens().iter().map(x_diag).collect();
    gens.extend(n.gens().iter().map(|g| x_diag(g).compose(&sigma(g))));
    if gens.is_empty() {
        gens.push(WreathElement::identity(q, q));
    }
    wreath_group(q, q, &gens)
}

/// Checks the three action identities on `C(T)` for one `g`:
/// `σ_g: α_t ↦ α_{g⁻¹t}`, `x_g: α_t ↦ α_{tg}`, `x_gσ_g: α_t ↦ α_{g⁻¹tg}`.
pub fn check_permcode_identities(t: &[Perm], g: &Perm) -> Result<()> {
    let gi = g.inverse();
    let (s, x) = (sigma(g), x_diag(g));
    let xs = x.compose(&s);
    for tt in t {
        let a = perm_word(tt);
        let checks = [
            (s.apply_tuple(&a), perm_word(&gi.compose(tt)), "sigma_g"),
            (x.apply_tuple(&a), perm_word(&tt.compose(g)), "x_g"),
            (xs.apply_tuple(&a), perm_word(&tt.conjugate_by(g)), "x_g sigma_g"),
        ];
        for (got, want, what) in checks {
            if got != want {
                return Err(Error::Contradiction(format!("{what} identity fails for t = {tt}, g = {g}")));
            }
        }
    }
    Ok(())
}

/// A permutation representation given by images of a group's generators.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Representation {
    pub images: Vec<Perm>,
}

impl Representation {
    pub fn natural(t: &PermGroup) -> Self {
        Representation { images: t.gens().to_vec() }
    }

    pub fn degree(&self) -> usize {
        self.images.first().map_or(0, |p| p.degree())
    }

    /// Extends generator images to every element, checking well-definedness
    /// along every Cayley-graph edge; a consistent extension is a homomorphism.
    pub fn extend(&self, t: &PermGroup, budget: &Budget) -> Result<HashMap<Perm, Perm>> {
        if self.images.len() != t.gens().len() {
            return Err(Error::InvalidParameter("one image per generator required".into()));
        }
        if t.order() > budget.group_elements as u128 {
            return Err(Error::budget("homomorphism verification", budget.group_elements));
        }
        let q = self.degree();
        let mut map = HashMap::from([(Perm::identity(t.degree()), Perm::identity(q))]);
        let mut queue = vec![Perm::identity(t.degree())];
        while let Some(x) = queue.pop() {
            let rx = map[&x].clone();
            for (g, rg) in t.gens().iter().zip(&self.images) {
                let y = x.compose(g);
                let ry = rx.compose(rg);
                match map.get(&y) {
                    Some(prev) if *prev != ry => {
                        return Err(Error::Precondition(format!("generator images do not define a homomorphism (at {y})")));
                    }
                    Some(_) => {}
                    None => {
                        map.insert(y.clone(), ry);
                        queue.push(y);
                    }
                }
            }
        }
        Ok(map)
    }
}

/// `C(T; ρ_1, ..., ρ_k)` in `H(kq, q)`: codeword of `t` is
/// `(i, j) ↦ i^{ρ_j(t)}`.
pub fn twisted_permutation_code(t: &PermGroup, reps: &[Representation], budget: &Budget) -> Result<Code> {
    let q = reps.first().map(Representation::degree).ok_or_else(|| Error::InvalidParameter("no representations".into()))?;
    if let Some(r) = reps.iter().find(|r| r.degree() != q) {
        return Err(Error::DegreeMismatch(r.degree(), q));
    }
    let maps = reps.iter().map(|r| r.extend(t, budget)).collect::<Result<Vec<_>>>()?;
    let g = Graph::hamming(q * reps.len(), q)?;
    let h = g.as_hamming().unwrap().clone();
    let words = maps[0].keys().map(|x| {
        let digits: Vec<u32> = maps.iter().flat_map(|m| m[x].images().to_vec()).collect();
        h.from_digits(&digits)
    });
    Code::new(Arc::new(g), words)
}

/// Right cosets `Kx`, each identified by its least element.
struct OnCosets {
    k: Vec<Perm>,
}

impl Action for OnCosets {
    type Point = Perm;
    fn act(&self, x: &Perm, g: &Perm) -> Perm {
        let y = x.compose(g);
        self.k.iter().map(|k| k.compose(&y)).min().unwrap()
    }
}

/// The action of `T` on the right cosets of `K`.
pub fn coset_representation(t: &PermGroup, k: &PermGroup, budget: &Budget) -> Result<Representation> {
    let action = OnCosets { k: k.elements(budget)? };
    let seed = action.act(&Perm::identity(t.degree()), &Perm::identity(t.degree()));
    let cosets = orbit(t.gens(), &seed, &action);
    let index: HashMap<&Perm, usize> = cosets.iter().enumerate().map(|(i, c)| (c, i)).collect();
    let images = t
        .gens()
        .iter()
        .map(|g| Perm::from_fn(cosets.len(), |i| index[&action.act(&cosets[i], g)]))
        .collect();
    Ok(Representation { images })
}

/// Searches for a subgroup `K < T` of index `deg(T)` fixing no point, by
/// sampling pairs of elements, and returns the coset action on `T / K`. Such a
/// representation is faithful when `T` is simple or the search confirms it,
/// and it is not permutation-equivalent to the natural one.
pub fn find_inequivalent_action<R: Rng>(t: &PermGroup, rng: &mut R, tries: usize, budget: &Budget) -> Result<Representation> {
    let q = t.degree();
    let target = t.order() / q as u128;
    let elements = t.elements(budget)?;
    for _ in 0..tries {
        let a = elements.choose(rng).unwrap().clone();
        let b = elements.choose(rng).unwrap().clone();
        let k = PermGroup::new(q, vec![a, b])?;
        if k.order() != target || (0..q).any(|p| k.gens().iter().all(|g| g.apply(p) == p)) {
            continue;
        }
        let rep = coset_representation(t, &k, budget)?;
        let image = PermGroup::new(rep.degree(), rep.images.clone())?;
        if image.order() == t.order() {
            return Ok(rep);
        }
    }
    Err(Error::budget("inequivalent action search", tries as u64))
}

/// Whether `rep` is permutation-equivalent to the natural action: it is iff
/// the image of a natural point stabilizer fixes a point.
pub fn is_equivalent_to_natural(t: &PermGroup, rep: &Representation, budget: &Budget) -> Result<bool> {
    let map = rep.extend(t, budget)?;
    let stab = t.stabilizer(0);
    let imgs: Vec<Perm> = stab.gens().iter().map(|g| map[g].clone()).collect();
    let q = rep.degree();
    Ok((0..q).any(|p| orbit(&imgs, &p, &OnPoints).len() == 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identities_hold_on_s3() {
        let s3 = PermGroup::symmetric(3);
        let t = s3.elements(&Budget::default()).unwrap();
        for g in &t {
            check_permcode_identities(&t, g).unwrap();
        }
    }
}

const SHIPPED_TWISTED: &str = include_str!("../../data/twisted_representations.json");

/// Names of the groups with a shipped second representation.
pub const TWISTED_GROUPS: [&str; 3] = ["s6", "a6", "asl3_2"];

#[derive(Deserialize)]
struct TwistedEntry {
    order: u128,
    generators: Vec<Vec<u32>>,
    twisted: Vec<Vec<u32>>,
}

/// A group `T` with a faithful representation of degree `deg(T)`
/// inequivalent to the natural one, loaded from shipped data and verified.
pub fn shipped_twisted_pair(name: &str, budget: &Budget) -> Result<(PermGroup, Representation)> {
    let table: HashMap<String, TwistedEntry> = serde_json::from_str(SHIPPED_TWISTED).expect("shipped data parses");
    let e = table.get(name).ok_or_else(|| Error::InvalidParameter(format!("no shipped representation for {name:?}")))?;
    let perms = |rows: &[Vec<u32>]| rows.iter().map(|r| Perm::from_images(r.clone())).collect::<Result<Vec<_>>>();
    let gens = perms(&e.generators)?;
    let t = PermGroup::new(gens[0].degree(), gens)?;
    if t.order() != e.order {
        return Err(Error::Contradiction(format!("{name}: group order {} ≠ {}", t.order(), e.order)));
    }
    let rep = Representation { images: perms(&e.twisted)? };
    let image = PermGroup::new(rep.degree(), rep.images.clone())?;
    if image.order() != t.order() || is_equivalent_to_natural(&t, &rep, budget)? {
        return Err(Error::Contradiction(format!("{name}: representation is unfaithful or natural")));
    }
    Ok((t, rep))
}
