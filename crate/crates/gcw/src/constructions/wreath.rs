//! Elements of `Sym(Q) wr Sym(N)` and their action on Hamming vertices.
//!
//! An element `x = hσ` sends `α` to `α^x` with `α^x(j^σ) = α(j)^{h_j}`. It is
//! stored faithfully as a permutation of the `n·q` points `(j, a) ↦ j·q + a`,
//! mapping `(j, a)` to `(j^σ, a^{h_j})`; composition of these permutations is
//! composition in the wreath product.

use serde::{Deserialize, Serialize};

use crate::algebra::{Action, FiniteField, Perm, PermGroup};
use crate::graphs::Hamming;
use crate::{Error, Result};

/// `h = (h_0, ..., h_{n-1})` in the base group and `σ` in the top group.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WreathElement {
    pub base: Vec<Perm>,
    pub top: Perm,
}

impl WreathElement {
    pub fn new(base: Vec<Perm>, top: Perm) -> Result<Self> {
        let n = top.degree();
        if base.len() != n {
            return Err(Error::DegreeMismatch(base.len(), n));
        }
        if let Some(q) = base.first().map(|h| h.degree()) {
            if let Some(h) = base.iter().find(|h| h.degree() != q) {
                return Err(Error::DegreeMismatch(h.degree(), q));
            }
        }
        Ok(WreathElement { base, top })
    }

    pub fn identity(n: usize, q: usize) -> Self {
        WreathElement { base: vec![Perm::identity(q); n], top: Perm::identity(n) }
    }

    /// `σ` alone.
    pub fn from_top(q: usize, top: Perm) -> Self {
        WreathElement { base: vec![Perm::identity(q); top.degree()], top }
    }

    /// `x_g = (g, ..., g)`.
    pub fn diagonal(n: usize, g: &Perm) -> Self {
        WreathElement { base: vec![g.clone(); n], top: Perm::identity(n) }
    }

    /// Translation `β ↦ α + β` over the field.
    pub fn translation(field: &FiniteField, alpha: &[u32]) -> Self {
        let q = field.order() as usize;
        let base = alpha.iter().map(|&a| Perm::from_fn(q, |x| field.add(x as u32, a) as usize)).collect();
        WreathElement { base, top: Perm::identity(alpha.len()) }
    }

    pub fn n(&self) -> usize {
        self.top.degree()
    }

    pub fn q(&self) -> usize {
        self.base.first().map_or(0, |h| h.degree())
    }

    pub fn to_perm(&self) -> Perm {
        let q = self.q();
        Perm::from_fn(self.n() * q, |p| {
            let (j, a) = (p / q, p % q);
            self.top.apply(j) * q + self.base[j].apply(a)
        })
    }

    /// Inverse of `to_perm`; fails when `p` does not preserve the entry blocks.
    pub fn from_perm(n: usize, q: usize, p: &Perm) -> Result<Self> {
        if p.degree() != n * q {
            return Err(Error::DegreeMismatch(p.degree(), n * q));
        }
        let mut top = vec![0u32; n];
        let mut base = Vec::with_capacity(n);
        for j in 0..n {
            let dest = p.apply(j * q) / q;
            let mut h = vec![0u32; q];
            for (a, slot) in h.iter_mut().enumerate() {
                let img = p.apply(j * q + a);
                if img / q != dest {
                    return Err(Error::InvalidParameter("permutation does not preserve entry blocks".into()));
                }
                *slot = (img % q) as u32;
            }
            top[j] = dest as u32;
            base.push(Perm::from_images(h)?);
        }
        Ok(WreathElement { base, top: Perm::from_images(top)? })
    }

    /// `self` then `other`.
    pub fn compose(&self, other: &WreathElement) -> WreathElement {
        let base = (0..self.n()).map(|j| self.base[j].compose(&other.base[self.top.apply(j)])).collect();
        WreathElement { base, top: self.top.compose(&other.top) }
    }

    pub fn inverse(&self) -> WreathElement {
        let inv = self.top.inverse();
        let base = (0..self.n()).map(|i| self.base[inv.apply(i)].inverse()).collect();
        WreathElement { base, top: inv }
    }

    pub fn apply_tuple(&self, alpha: &[u32]) -> Vec<u32> {
        let mut out = vec![0u32; alpha.len()];
        for (j, &a) in alpha.iter().enumerate() {
            out[self.top.apply(j)] = self.base[j].apply(a as usize) as u32;
        }
        out
    }
}

/// Vertex action of a wreath permutation (degree `n·q`) on `H(n, q)`.
#[derive(Debug, Clone)]
pub struct OnHamming {
    pub hamming: Hamming,
}

impl OnHamming {
    pub fn new(hamming: &Hamming) -> Self {
        OnHamming { hamming: hamming.clone() }
    }

    #[inline]
    pub fn apply(&self, v: usize, g: &Perm) -> usize {
        let h = &self.hamming;
        let (n, q) = (h.n, h.q);
        let mut out = 0;
        if q == 2 {
            for j in 0..n {
                let img = g.apply(2 * j + (v >> (n - 1 - j) & 1));
                out |= (img & 1) << (n - 1 - img / 2);
            }
            return out;
        }
        for j in 0..n {
            let img = g.apply(j * q + h.digit(v, j));
            out += (img % q) * h.weight_of_entry(img / q);
        }
        out
    }
}

impl Action for OnHamming {
    type Point = usize;
    fn act(&self, x: &usize, g: &Perm) -> usize {
        self.apply(*x, g)
    }
}

/// Action of a wreath permutation on entries.
pub fn entry_image(q: usize, g: &Perm, j: usize) -> usize {
    g.apply(j * q) / q
}

/// Group of wreath permutations from elements.
pub fn wreath_group(n: usize, q: usize, elements: &[WreathElement]) -> Result<PermGroup> {
    for x in elements {
        if x.n() != n || x.q() != q {
            return Err(Error::DegreeMismatch(x.n() * x.q(), n * q));
        }
    }
    PermGroup::new(n * q, elements.iter().map(WreathElement::to_perm).collect())
}

/// `Diag_n(H)`.
pub fn diag_subgroup(h: &PermGroup, n: usize) -> Result<PermGroup> {
    let q = h.degree();
    wreath_group(n, q, &h.gens().iter().map(|g| WreathElement::diagonal(n, g)).collect::<Vec<_>>())
}

/// Top group `L` embedded from a group on entries.
pub fn top_subgroup(l: &PermGroup, q: usize) -> Result<PermGroup> {
    let n = l.degree();
    wreath_group(n, q, &l.gens().iter().map(|s| WreathElement::from_top(q, s.clone())).collect::<Vec<_>>())
}

/// Translations by the rows of a generator matrix.
pub fn translation_group(field: &FiniteField, rows: &[Vec<u32>]) -> Result<PermGroup> {
    let n = rows.first().map_or(0, |r| r.len());
    let q = field.order() as usize;
    let mut gens: Vec<WreathElement> = rows.iter().map(|r| WreathElement::translation(field, r)).collect();
    if gens.is_empty() {
        gens.push(WreathElement::identity(n, q));
    }
    wreath_group(n, q, &gens)
}

/// The full `Aut(H(n, q)) = Sym(q) wr Sym(n)`.
pub fn hamming_automorphisms(n: usize, q: usize) -> Result<PermGroup> {
    let mut gens = Vec::new();
    for g in PermGroup::symmetric(q).gens() {
        let mut base = vec![Perm::identity(q); n];
        base[0] = g.clone();
        gens.push(WreathElement::new(base, Perm::identity(n))?);
    }
    for s in PermGroup::symmetric(n).gens() {
        gens.push(WreathElement::from_top(q, s.clone()));
    }
    wreath_group(n, q, &gens)
}

/// Wreath permutation of a pure entry permutation.
pub fn entry_permutation(q: usize, sigma: &Perm) -> Perm {
    WreathElement::from_top(q, sigma.clone()).to_perm()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> (WreathElement, WreathElement) {
        let x = WreathElement::new(
            vec![Perm::from_cycles(3, "(0 1)").unwrap(), Perm::identity(3), Perm::from_cycles(3, "(0 1 2)").unwrap()],
            Perm::from_cycles(3, "(0 1 2)").unwrap(),
        )
        .unwrap();
        let y = WreathElement::new(
            vec![Perm::identity(3), Perm::from_cycles(3, "(1 2)").unwrap(), Perm::identity(3)],
            Perm::from_cycles(3, "(0 1)").unwrap(),
        )
        .unwrap();
        (x, y)
    }

    #[test]
    fn tuple_action_matches_definition() {
        // σ = (0 1 2): (a0, a1, a2) ↦ (a2, a0, a1)
        let s = WreathElement::from_top(4, Perm::from_cycles(3, "(0 1 2)").unwrap());
        assert_eq!(s.apply_tuple(&[1, 2, 3]), vec![3, 1, 2]);
    }

    #[test]
    fn composition_is_a_right_action() {
        let (x, y) = sample();
        let a = [2, 0, 1];
        assert_eq!(x.compose(&y).apply_tuple(&a), y.apply_tuple(&x.apply_tuple(&a)));
        assert_eq!(x.compose(&x.inverse()), WreathElement::identity(3, 3));
        assert_eq!(x.compose(&y).to_perm(), x.to_perm().compose(&y.to_perm()));
        assert_eq!(WreathElement::from_perm(3, 3, &x.to_perm()).unwrap(), x);
    }

    #[test]
    fn vertex_action_agrees_with_tuples() {
        let (x, _) = sample();
        let h = Hamming::new(3, 3).unwrap();
        let act = OnHamming::new(&h);
        for v in 0..27 {
            let img = x.apply_tuple(&h.digits(v));
            assert_eq!(act.apply(v, &x.to_perm()), h.from_digits(&img));
        }
    }

    #[test]
    fn hamming_group_order() {
        assert_eq!(hamming_automorphisms(3, 2).unwrap().order(), 48);
        assert_eq!(hamming_automorphisms(2, 3).unwrap().order(), 72);
    }
}
