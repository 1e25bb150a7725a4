//! Codes in cycles, Johnson graphs and Kneser graphs defined by how
//! codewords meet fixed subsets of the underlying set.

use std::sync::Arc;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use super::agl;
use crate::algebra::{Perm, PermGroup};
use crate::codecore::Code;
use crate::graphs::{Graph, Subsets};
use crate::{Error, Result};

/// `{0, n}` in the cycle `C_{2n}`.
pub fn cycle_code(n: usize) -> Result<Code> {
    if n < 2 {
        return Err(Error::InvalidParameter("cycle code needs n ≥ 2".into()));
    }
    Code::new(Arc::new(Graph::cycle(2 * n)?), [0, n])
}

/// The stabilizer of `{0, n}` in the dihedral group of `C_{2n}`: the half
/// turn and the reflection `i ↦ −i`.
pub fn cycle_code_group(n: usize) -> Result<PermGroup> {
    if n < 2 {
        return Err(Error::InvalidParameter("cycle code needs n ≥ 2".into()));
    }
    let m = 2 * n;
    PermGroup::new(m, vec![Perm::from_fn(m, |i| (i + n) % m), Perm::from_fn(m, |i| (m - i) % m)])
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SubsetMode {
    /// Codewords are the k-subsets of `U`.
    Within,
    /// Codewords are the k-subsets containing `U`.
    Containing,
}

fn subset_code(graph: Graph, sets: impl IntoIterator<Item = Vec<usize>>) -> Result<Code> {
    let s = match &graph {
        Graph::Johnson(s) | Graph::Kneser(s) => s.clone(),
        _ => unreachable!("subset host"),
    };
    let words: Vec<usize> = sets.into_iter().map(|mut a| {
        a.sort_unstable();
        s.rank(&a)
    }).collect();
    Code::new(Arc::new(graph), words)
}

/// `{α ⊆ U}` or `{α ⊇ U}` in J(v, k).
pub fn johnson_subset_code(v: usize, k: usize, u: &[usize], mode: SubsetMode) -> Result<Code> {
    let graph = Graph::johnson(v, k)?;
    let u: Vec<usize> = u.iter().copied().sorted().dedup().collect();
    if u.is_empty() || u.len() >= v || u.iter().any(|&x| x >= v) {
        return Err(Error::InvalidParameter(format!("U must be a nonempty proper subset of 0..{v}")));
    }
    match mode {
        SubsetMode::Within => {
            if u.len() <= k {
                return Err(Error::InvalidParameter(format!("|U| = {} must exceed k = {k}", u.len())));
            }
            subset_code(graph, u.iter().copied().combinations(k))
        }
        SubsetMode::Containing => {
            if u.len() >= k {
                return Err(Error::InvalidParameter(format!("|U| = {} must be below k = {k}", u.len())));
            }
            let rest: Vec<usize> = (0..v).filter(|x| u.binary_search(x).is_err()).collect();
            subset_code(graph, rest.into_iter().combinations(k - u.len()).map(|c| u.iter().copied().chain(c).collect()))
        }
    }
}

/// `C_int(a, b; c, d)` in K(a+b, c+d) with `A = {0..a}` and `B` the rest.
pub fn kneser_int(a: usize, b: usize, c: usize, d: usize) -> Result<Code> {
    if c > a || d > b {
        return Err(Error::InvalidParameter(format!("need c ≤ a and d ≤ b, got ({a},{b};{c},{d})")));
    }
    let graph = Graph::kneser(a + b, c + d)?;
    let sets = (0..a)
        .combinations(c)
        .cartesian_product((a..a + b).combinations(d).collect::<Vec<_>>())
        .map(|(x, y)| x.into_iter().chain(y).collect());
    subset_code(graph, sets)
}

/// `C_imp(a, b; M)` in the odd graph K(ab, (ab−1)/2): blocks
/// `B_i = {ib, .., ib+b−1}` and codewords meeting the blocks in the
/// multiset of sizes `M`.
pub fn odd_imp(a: usize, b: usize, m: &[usize]) -> Result<Code> {
    let v = a * b;
    if v % 2 == 0 {
        return Err(Error::InvalidParameter(format!("ab = {v} must be odd")));
    }
    let k = (v - 1) / 2;
    if m.len() != a || m.iter().any(|&x| x > b) || m.iter().sum::<usize>() != k {
        return Err(Error::InvalidParameter(format!("M must list {a} sizes ≤ {b} summing to {k}")));
    }
    let graph = Graph::kneser(v, k)?;
    let mut sets = Vec::new();
    for sizes in m.iter().copied().permutations(a).unique() {
        let per_block: Vec<Vec<Vec<usize>>> =
            sizes.iter().enumerate().map(|(i, &s)| (i * b..(i + 1) * b).combinations(s).collect()).collect();
        for pick in per_block.iter().map(|c| c.iter()).multi_cartesian_product() {
            sets.push(pick.into_iter().flatten().copied().collect());
        }
    }
    subset_code(graph, sets)
}

/// Four points of AG(3, 2), labelled by their coordinate bits, lying on no
/// affine plane.
pub fn is_tetrahedron(points: &[usize]) -> bool {
    points.len() == 4 && points.iter().fold(0, |acc, &p| acc ^ p) != 0
}

/// Codewords `α` of K(13, 6) with `α ∩ A` a tetrahedron of AG(3, 2) on
/// `A = {0..8}` and `|α ∩ B| = 2` for `B = {8..13}`.
pub fn tetrahedron_code() -> Result<Code> {
    let graph = Graph::kneser(13, 6)?;
    let sets = (0..8)
        .combinations(4)
        .filter(|t| is_tetrahedron(t))
        .cartesian_product((8..13).combinations(2).collect::<Vec<_>>())
        .map(|(x, y)| x.into_iter().chain(y).collect());
    subset_code(graph, sets)
}

/// Underlying subsets of the codewords of a Johnson or Kneser code.
pub fn codeword_sets(c: &Code) -> Result<Vec<Vec<usize>>> {
    let s: &Subsets = match c.graph().as_ref() {
        Graph::Johnson(s) | Graph::Kneser(s) => s,
        _ => return Err(Error::Precondition("code is not in a Johnson or Kneser graph".into())),
    };
    Ok(c.words().iter().map(|&w| s.unrank(w)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        assert_eq!(tetrahedron_code().unwrap().len(), 560);
        assert_eq!(kneser_int(2, 5, 2, 1).unwrap().len(), 5);
        assert_eq!(odd_imp(3, 3, &[1, 1, 2]).unwrap().len(), 3 * 3 * 3 * 3);
        let within = johnson_subset_code(5, 2, &[0, 1, 2, 3], SubsetMode::Within).unwrap();
        assert_eq!(within.len(), 6);
        let containing = johnson_subset_code(6, 3, &[0], SubsetMode::Containing).unwrap();
        assert_eq!(containing.len(), 10);
    }
}

/// `Sym(A) × Sym(B)` on `0..v` with `A = {0..a}` and `B` the rest: the
/// stabilizer of the split behind `C_int`.
pub fn split_symmetric(v: usize, a: usize) -> Result<PermGroup> {
    if a > v {
        return Err(Error::InvalidParameter(format!("part size {a} exceeds {v}")));
    }
    let mut gens = Vec::new();
    for (lo, hi) in [(0, a), (a, v)] {
        if hi - lo >= 2 {
            gens.push(Perm::from_fn(v, |x| if (lo..hi).contains(&x) { lo + (x - lo + 1) % (hi - lo) } else { x }));
            gens.push(Perm::from_fn(v, |x| if x == lo { lo + 1 } else if x == lo + 1 { lo } else { x }));
        }
    }
    if gens.is_empty() {
        return Ok(PermGroup::trivial(v));
    }
    PermGroup::new(v, gens)
}

/// `AGL_3(2) × S_5` on `0..13`, affine on `A = {0..8}` and symmetric on
/// `B = {8..13}`.
pub fn tetrahedron_group() -> Result<PermGroup> {
    let mut gens: Vec<Perm> = agl(2, 3)?.gens().iter().map(|g| g.extend(13)).collect();
    gens.extend(split_symmetric(13, 8)?.gens().iter().filter(|g| g.apply(8) != 8).cloned());
    PermGroup::new(13, gens)
}
