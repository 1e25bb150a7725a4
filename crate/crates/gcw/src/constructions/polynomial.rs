//! Generalised and projective Reed–Muller codes, Hamming codes, and the
//! affine and linear groups acting on their entries.

use std::sync::Arc;

use itertools::Itertools;

use super::wreath::{wreath_group, WreathElement};
use crate::algebra::{linalg, FiniteField, Perm, PermGroup};
use crate::codecore::Code;
use crate::{Budget, Error, Result};

/// Affine point `j` of `F_q^t`: base-q digits with `x_1` least significant.
pub fn affine_point(q: usize, t: usize, j: usize) -> Vec<u32> {
    (0..t).map(|i| (j / q.pow(i as u32) % q) as u32).collect()
}

pub fn affine_index(q: usize, x: &[u32]) -> usize {
    x.iter().rev().fold(0, |acc, &d| acc * q + d as usize)
}

/// Exponent vectors `(a_1..a_t)` with `0 ≤ a_i < q` and `Σa_i ≤ k`.
fn monomials(q: usize, t: usize, k: usize) -> Vec<Vec<u32>> {
    (0..t).map(|_| 0..q as u32).multi_cartesian_product().filter(|e| e.iter().sum::<u32>() as usize <= k).collect()
}

fn evaluate(f: &FiniteField, exps: &[u32], x: &[u32]) -> u32 {
    exps.iter().zip(x).fold(f.one(), |acc, (&e, &xi)| f.mul(acc, if e == 0 { f.one() } else { f.pow(xi, e as u64) }))
}

/// `RM_q(k, t)` in `H(F_q^t, F_q)`.
pub fn grm(q: u32, k: usize, t: usize) -> Result<Code> {
    let field = Arc::new(FiniteField::of_order(q)?);
    let q = q as usize;
    if k > t * (q - 1) || t == 0 {
        return Err(Error::InvalidParameter(format!("need 0 ≤ k ≤ t(q−1), got k={k}, t={t}")));
    }
    let points: Vec<Vec<u32>> = (0..q.pow(t as u32)).map(|j| affine_point(q, t, j)).collect();
    let rows = monomials(q, t, k).iter().map(|e| points.iter().map(|x| evaluate(&field, e, x)).collect()).collect();
    Code::linear(field, rows)
}

/// `PRM_q(k, t)` over the normalized projective points of `F_q^t` in
/// lexicographic order.
pub fn prm(q: u32, k: usize, t: usize) -> Result<Code> {
    let field = Arc::new(FiniteField::of_order(q)?);
    let qq = q as usize;
    if k == 0 || k > t * (qq - 1) || t < 2 {
        return Err(Error::InvalidParameter(format!("need 1 ≤ k ≤ t(q−1) and t ≥ 2, got k={k}, t={t}")));
    }
    let d = (k - 1) % (qq - 1) + 1;
    let points = linalg::projective_points(&field, t);
    let rows = monomials(qq, t, k)
        .into_iter()
        .filter(|e| {
            let deg = e.iter().sum::<u32>() as usize;
            deg > 0 && (deg - 1) % (qq - 1) + 1 == d
        })
        .map(|e| points.iter().map(|x| evaluate(&field, &e, x)).collect())
        .collect();
    Code::linear(field, rows)
}

/// The Hamming code of length `(q^t − 1)/(q − 1)`: the dual of `PRM_q(1, t)`.
pub fn hamming_code(q: u32, t: usize) -> Result<Code> {
    let simplex = prm(q, 1, t)?;
    let lin = simplex.linear_descriptor().unwrap();
    let n = simplex.length().unwrap();
    let dual = linalg::nullspace(&lin.field, &lin.generator, n);
    Code::linear(lin.field.clone(), dual)
}

/// Generators of `GL_t(q)`: a primitive scalar on `e_1`, the transvection
/// `e_1 ↦ e_1 + e_2`, a transposition and a `t`-cycle of basis vectors.
pub fn gl_generators(f: &FiniteField, t: usize) -> Vec<Vec<Vec<u32>>> {
    let mut out = Vec::new();
    let mut m = linalg::identity(t);
    if f.order() > 2 {
        m[0][0] = f.generator();
        out.push(m);
    }
    if t >= 2 {
        let mut m = linalg::identity(t);
        m[0][1] = 1;
        out.push(m);
        let swap = (0..t).map(|i| (0..t).map(|j| u32::from(j == [1, 0].get(i).copied().unwrap_or(i))).collect()).collect();
        out.push(swap);
        let cycle = (0..t).map(|i| (0..t).map(|j| u32::from(j == (i + 1) % t)).collect()).collect();
        out.push(cycle);
    }
    out
}

/// `AGL_t(q)` on the `q^t` affine points, as a permutation group.
pub fn agl(q: u32, t: usize) -> Result<PermGroup> {
    let f = FiniteField::of_order(q)?;
    let qq = q as usize;
    let n = qq.pow(t as u32);
    let mut gens: Vec<Perm> = gl_generators(&f, t)
        .iter()
        .map(|m| Perm::from_fn(n, |j| affine_index(qq, &linalg::vec_mat(&f, &affine_point(qq, t, j), m))))
        .collect();
    let mut e1 = vec![0; t];
    e1[0] = 1;
    gens.push(Perm::from_fn(n, |j| {
        let x: Vec<u32> = affine_point(qq, t, j).iter().zip(&e1).map(|(&a, &b)| f.add(a, b)).collect();
        affine_index(qq, &x)
    }));
    PermGroup::new(n, gens)
}

/// `T_C ⋊ AGL_t(q)` for a code on the affine points, as wreath permutations.
pub fn affine_code_group(c: &Code, q: u32, t: usize) -> Result<PermGroup> {
    let lin = c.linear_descriptor().ok_or_else(|| Error::Precondition("code is not linear".into()))?;
    let qq = q as usize;
    let mut gens: Vec<WreathElement> = lin.generator.iter().map(|r| WreathElement::translation(&lin.field, r)).collect();
    for g in agl(q, t)?.gens() {
        gens.push(WreathElement::from_top(qq, g.clone()));
    }
    wreath_group(qq.pow(t as u32), qq, &gens)
}

/// `T_C ⋊ GL_t(q)` for a code on normalized projective points whose
/// functions are homogeneous of class `d`: `A` sends the function `f` to
/// `f∘A⁻¹`, which permutes entries and rescales by `λ^{-d}`.
pub fn projective_code_group(c: &Code, t: usize, d: usize) -> Result<PermGroup> {
    let lin = c.linear_descriptor().ok_or_else(|| Error::Precondition("code is not linear".into()))?;
    let f = &lin.field;
    let q = f.order() as usize;
    let points = linalg::projective_points(f, t);
    let n = points.len();
    let mut gens: Vec<WreathElement> = lin.generator.iter().map(|r| WreathElement::translation(f, r)).collect();
    for m in gl_generators(f, t) {
        let mut top = vec![0u32; n];
        let mut base = Vec::with_capacity(n);
        for (j, p) in points.iter().enumerate() {
            let img = linalg::vec_mat(f, p, &m);
            let lead = *img.iter().find(|&&x| x != 0).unwrap();
            let norm = linalg::normalize(f, &img);
            top[j] = points.iter().position(|x| *x == norm).unwrap() as u32;
            let scale = f.inv(f.pow(lead, d as u64)).unwrap();
            base.push(Perm::from_fn(q, |a| f.mul(a as u32, scale) as usize));
        }
        gens.push(WreathElement::new(base, Perm::from_images(top)?)?);
    }
    wreath_group(n, q, &gens)
}

/// Linear with an `n`-cycle of entries preserving the code, by exhaustive
/// scan over all `(n−1)!` cycles.
pub fn is_cyclic(c: &Code, budget: &Budget) -> Result<bool> {
    let h = c.graph().as_hamming().ok_or_else(|| Error::Precondition("needs a Hamming host".into()))?;
    if c.linear_descriptor().is_none() {
        return Ok(false);
    }
    let n = h.n;
    let count: u64 = (1..n as u64).product();
    if count > budget.group_elements {
        return Err(Error::budget("n-cycle scan", budget.group_elements));
    }
    let tuples: Vec<Vec<u32>> = c.words().iter().map(|&w| h.digits(w)).collect();
    for rest in (1..n).permutations(n - 1) {
        let mut images = vec![0u32; n];
        let mut prev = 0;
        for &x in &rest {
            images[prev] = x as u32;
            prev = x;
        }
        images[prev] = 0;
        let s = WreathElement::from_top(h.q, Perm::from_images(images)?);
        if tuples.iter().all(|t| c.contains(h.from_digits(&s.apply_tuple(t)))) {
            return Ok(true);
        }
    }
    Ok(false)
}
