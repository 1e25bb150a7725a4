//! Repetition and product constructions on `N × {0..k}`; entry `(i, j)` has
//! index `j·|N| + i`.

use std::sync::Arc;

use itertools::Itertools;

use crate::algebra::{Perm, PermGroup};
use crate::codecore::Code;
use crate::graphs::{Graph, Hamming};
use crate::{Budget, Error, Result};

fn host(c: &Code) -> Result<&Hamming> {
    c.graph().as_hamming().ok_or_else(|| Error::Precondition("construction needs a Hamming host".into()))
}

fn concat(h: &Hamming, blocks: &[usize]) -> Vec<u32> {
    blocks.iter().flat_map(|&b| h.digits(b)).collect()
}

fn from_tuples(n: usize, q: usize, tuples: impl IntoIterator<Item = Vec<u32>>) -> Result<Code> {
    let g = Graph::hamming(n, q)?;
    let h = g.as_hamming().unwrap().clone();
    Code::new(Arc::new(g), tuples.into_iter().map(|t| h.from_digits(&t)))
}

/// `Rep_k(C)`.
pub fn rep_code(c: &Code, k: usize) -> Result<Code> {
    let h = host(c)?;
    if k == 0 {
        return Err(Error::InvalidParameter("k must be positive".into()));
    }
    let out = from_tuples(h.n * k, h.q, c.words().iter().map(|&w| concat(h, &vec![w; k])))?;
    match c.linear_descriptor() {
        Some(lin) => {
            let rows = lin.generator.iter().map(|r| r.repeat(k)).collect();
            Code::linear(lin.field.clone(), rows)
        }
        None => Ok(out),
    }
}

/// `Prod_k(C)`.
pub fn prod_code(c: &Code, k: usize, budget: &Budget) -> Result<Code> {
    let h = host(c)?;
    if k == 0 {
        return Err(Error::InvalidParameter("k must be positive".into()));
    }
    let size = (c.len() as u64).checked_pow(k as u32).unwrap_or(u64::MAX);
    if size > budget.orbit_points {
        return Err(Error::budget("product code size", budget.orbit_points));
    }
    let tuples = (0..k).map(|_| c.words().iter().copied()).multi_cartesian_product().map(|ws| concat(h, &ws));
    from_tuples(h.n * k, h.q, tuples)
}

/// `Rep_n(q) = {(a, ..., a)}`.
pub fn rep_nq(n: usize, q: usize) -> Result<Code> {
    if n == 0 || q < 2 {
        return Err(Error::InvalidParameter("need n ≥ 1 and q ≥ 2".into()));
    }
    from_tuples(n, q, (0..q as u32).map(|a| vec![a; n]))
}

/// `Prod(T, k, H) = {β_{h_1 t, ..., h_k t}}` for `H ⊴ T`.
pub fn prod_tkh(t: &PermGroup, k: usize, h: &PermGroup, budget: &Budget) -> Result<Code> {
    let q = t.degree();
    if h.degree() != q {
        return Err(Error::DegreeMismatch(h.degree(), q));
    }
    if !h.is_subgroup_of(t) || !t.normalizes(h) {
        return Err(Error::Precondition("H is not normal in T".into()));
    }
    let size = (h.order()).checked_pow(k as u32).and_then(|x| x.checked_mul(t.order()));
    if size.map_or(true, |s| s > budget.group_elements as u128) {
        return Err(Error::budget("Prod(T,k,H) enumeration", budget.group_elements));
    }
    let ts = t.elements(budget)?;
    let hs = h.elements(budget)?;
    let mut tuples = Vec::new();
    for tt in &ts {
        for combo in (0..k).map(|_| hs.iter()).multi_cartesian_product() {
            tuples.push(combo.iter().flat_map(|hj: &&Perm| hj.compose(tt).images().to_vec()).collect());
        }
    }
    from_tuples(q * k, q, tuples)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_products() {
        let b = Budget::default();
        assert_eq!(rep_nq(4, 2).unwrap().words(), &[0, 15]);
        let full = Code::new(Arc::new(Graph::hamming(1, 2).unwrap()), [0, 1]).unwrap();
        assert_eq!(prod_code(&full, 3, &b).unwrap().len(), 8);
        assert_eq!(rep_code(&full, 3).unwrap().words(), &[0, 7]);
    }
}
