//! Restriction of Hamming codes and their groups to a subset of entries.

use std::sync::Arc;

use crate::algebra::{stabilizer_under, OnSets, Perm, PermGroup};
use crate::codecore::Code;
use crate::graphs::{Graph, Hamming};
use crate::{Budget, Error, Result};

fn check_entries(n: usize, m: &[usize]) -> Result<Vec<usize>> {
    let mut m = m.to_vec();
    m.sort_unstable();
    m.dedup();
    if m.is_empty() || m.iter().any(|&j| j >= n) {
        return Err(Error::InvalidParameter(format!("entry subset must be nonempty within 0..{n}")));
    }
    Ok(m)
}

/// `π_M(C)`: every codeword restricted to the entries of `M`, in
/// increasing entry order.
pub fn project_code(c: &Code, m: &[usize]) -> Result<Code> {
    let h = c.graph().as_hamming().ok_or_else(|| Error::Precondition("projection needs a Hamming host".into()))?;
    let m = check_entries(h.n, m)?;
    let target = Hamming::new(m.len(), h.q)?;
    let words: Vec<usize> = c
        .words()
        .iter()
        .map(|&w| {
            let d = h.digits(w);
            target.from_digits(&m.iter().map(|&j| d[j]).collect::<Vec<_>>())
        })
        .collect();
    Code::new(Arc::new(Graph::Hamming(target)), words)
}

/// `χ_M(G)`: the setwise stabilizer of `M` in a group acting on the `n·q`
/// points `(j, a) ↦ j·q + a`, restricted to the entries of `M`.
pub fn project_group(g: &PermGroup, q: usize, m: &[usize], budget: &Budget) -> Result<PermGroup> {
    if q == 0 || g.degree() % q != 0 {
        return Err(Error::InvalidParameter(format!("degree {} is not a multiple of q = {q}", g.degree())));
    }
    let n = g.degree() / q;
    let m = check_entries(n, m)?;
    let block: Vec<usize> = m.iter().flat_map(|&j| j * q..(j + 1) * q).collect();
    let (stab, _) = stabilizer_under(g, &block, &OnSets, budget)?;
    let position = |j: usize| m.binary_search(&j).expect("entry in M");
    let gens = stab
        .gens()
        .iter()
        .map(|p| {
            Perm::from_fn(m.len() * q, |x| {
                let image = p.apply(m[x / q] * q + x % q);
                position(image / q) * q + image % q
            })
        })
        .collect();
    PermGroup::new(m.len() * q, gens)
}
