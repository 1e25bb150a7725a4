//! Codes in geometric graphs: regular spreads of PG(3, q), partial ovoids of
//! W(3, q) from sharply transitive subgroups of SL(2, q), and Gabidulin
//! codes in bilinear forms graphs.

use std::collections::{BTreeMap, HashSet, VecDeque};
use std::sync::Arc;

use itertools::Itertools;

use crate::algebra::{gcd, linalg, FieldReduction, FiniteField, Perm, PermGroup};
use crate::codecore::Code;
use crate::graphs::{build_pg3, build_w3, FormsGraph, Graph, IncidenceStructure};
use crate::{Error, Result};

/// A 2×2 matrix `[[a, b], [c, d]]` over GF(q), stored row-major.
pub type Mat2 = [u32; 4];

const SHIPPED_SL2: &str = include_str!("../../data/sl2_sharply_transitive.json");

/// Vertex permutation of the incidence graph of `s` induced by the linear
/// map `v ↦ vM` of GF(q)^4.
pub fn incidence_perm(s: &IncidenceStructure, m: &[Vec<u32>]) -> Result<Perm> {
    incidence_perm_semilinear(s, m, 0)
}

/// Vertex permutation induced by the semilinear map `v ↦ v^{φ^e} M`, where
/// `φ: x ↦ x^p` is the Frobenius automorphism.
pub fn incidence_perm_semilinear(s: &IncidenceStructure, m: &[Vec<u32>], frobenius_power: u32) -> Result<Perm> {
    let space = s.geometry.as_ref().ok_or_else(|| Error::Precondition("structure has no coordinates".into()))?;
    let f = &space.field;
    if m.len() != 4 || m.iter().any(|r| r.len() != 4 || r.iter().any(|&x| x >= f.order())) {
        return Err(Error::InvalidParameter("need a 4×4 matrix over the field".into()));
    }
    let exponent = (f.p() as u64).pow(frobenius_power % f.degree());
    let map = |v: &[u32]| {
        let twisted: Vec<u32> = v.iter().map(|&x| f.pow(x, exponent)).collect();
        linalg::vec_mat(f, &twisted, m)
    };
    let p = s.points;
    let mut images = Vec::with_capacity(p + s.num_lines());
    for x in &space.points {
        images.push(space.point_id(&map(x)).ok_or_else(|| Error::InvalidParameter("matrix is singular".into()))? as u32);
    }
    for &id in &s.line_ids {
        let rows: Vec<Vec<u32>> = space.lines[id].iter().map(|r| map(r)).collect();
        let image = space.line_id(&rows).ok_or_else(|| Error::InvalidParameter("matrix is singular".into()))?;
        let j = s
            .line_ids
            .binary_search(&image)
            .map_err(|_| Error::InvalidParameter("map does not preserve the line set".into()))?;
        images.push((p + j) as u32);
    }
    Perm::from_images(images)
}

fn line_vertex(s: &IncidenceStructure, rows: &[Vec<u32>]) -> Result<usize> {
    let space = s.geometry.as_ref().expect("coordinates");
    let id = space.line_id(rows).ok_or_else(|| Error::InvalidParameter("rows do not span a line".into()))?;
    let j = s.line_ids.binary_search(&id).map_err(|_| Error::InvalidParameter("line is not in the structure".into()))?;
    Ok(s.points + j)
}

fn spread_field(q: u32) -> Result<FieldReduction> {
    if !(2..=4).contains(&q) {
        return Err(Error::InvalidParameter(format!("regular spread is built for q ∈ {{2,3,4}}, got {q}")));
    }
    FieldReduction::new(q, 2)
}

fn reduce_vector(fr: &FieldReduction, y: &[u32]) -> Vec<u32> {
    y.iter().flat_map(|&x| fr.coords(x).to_vec()).collect()
}

/// The GF(q)-matrix of an additive map of GF(q²)^2 given on vectors.
fn reduce_map(fr: &FieldReduction, map: impl Fn(&[u32]) -> Vec<u32>) -> Vec<Vec<u32>> {
    let theta = fr.big.generator();
    (0..4)
        .map(|r| {
            let mut y = vec![0u32; 2];
            y[r / 2] = fr.big.pow(theta, (r % 2) as u64);
            reduce_vector(fr, &map(&y))
        })
        .collect()
}

/// The regular spread of PG(3, q): field reduction of the q²+1 points of
/// PG(1, q²), as line vertices of the PG(3, q) incidence graph.
pub fn regular_spread_code(q: u32) -> Result<Code> {
    let fr = spread_field(q)?;
    let s = build_pg3(q)?;
    let theta = fr.big.generator();
    let words = linalg::projective_points(&fr.big, 2)
        .iter()
        .map(|y| {
            let ty: Vec<u32> = y.iter().map(|&x| fr.big.mul(theta, x)).collect();
            line_vertex(&s, &[reduce_vector(&fr, y), reduce_vector(&fr, &ty)])
        })
        .collect::<Result<Vec<_>>>()?;
    Code::new(Arc::new(s.incidence_graph()), words).map(|c| c.with_name(&format!("regular_spread:q={q}")))
}

/// ΓL(2, q²) acting on the PG(3, q) incidence graph: field reductions of
/// `diag(ω, 1)`, the transvection, the swap and the Frobenius map.
pub fn spread_group(q: u32) -> Result<PermGroup> {
    let fr = spread_field(q)?;
    let s = build_pg3(q)?;
    let e = &fr.big;
    let omega = e.generator();
    let maps: Vec<Box<dyn Fn(&[u32]) -> Vec<u32>>> = vec![
        Box::new(|y| vec![e.mul(omega, y[0]), y[1]]),
        Box::new(|y| vec![y[0], e.add(y[0], y[1])]),
        Box::new(|y| vec![y[1], y[0]]),
        Box::new(|y| y.iter().map(|&x| e.pow(x, q as u64)).collect()),
    ];
    let gens = maps.iter().map(|m| incidence_perm(&s, &reduce_map(&fr, m))).collect::<Result<Vec<_>>>()?;
    PermGroup::new(s.points + s.num_lines(), gens)
}

fn mat2_mul(f: &FiniteField, x: &Mat2, y: &Mat2) -> Mat2 {
    let dot = |a: u32, b: u32, c: u32, d: u32| f.add(f.mul(a, b), f.mul(c, d));
    [dot(x[0], y[0], x[1], y[2]), dot(x[0], y[1], x[1], y[3]), dot(x[2], y[0], x[3], y[2]), dot(x[2], y[1], x[3], y[3])]
}

fn mat2_det(f: &FiniteField, x: &Mat2) -> u32 {
    f.sub(f.mul(x[0], x[3]), f.mul(x[1], x[2]))
}

/// Closure of the generators under multiplication, or `None` once it
/// exceeds `limit` elements.
pub fn mat2_closure(f: &FiniteField, gens: &[Mat2], limit: usize) -> Option<Vec<Mat2>> {
    let id: Mat2 = [1, 0, 0, 1];
    let mut seen = HashSet::from([id]);
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = mat2_mul(f, &x, g);
            if seen.insert(y) {
                if seen.len() > limit {
                    return None;
                }
                queue.push_back(y);
            }
        }
    }
    let mut out: Vec<Mat2> = seen.into_iter().collect();
    out.sort_unstable();
    Some(out)
}

/// Whether the group generated by `gens` lies in SL(2, q), has order q²−1 and
/// acts regularly on the nonzero vectors of GF(q)^2.
pub fn is_sharply_transitive_sl2(f: &FiniteField, gens: &[Mat2]) -> bool {
    let q = f.order() as usize;
    if gens.iter().any(|g| g.iter().any(|&x| x >= f.order()) || mat2_det(f, g) != 1) {
        return false;
    }
    let Some(elts) = mat2_closure(f, gens, q * q - 1) else { return false };
    let orbit: HashSet<(u32, u32)> = elts.iter().map(|m| (m[0], m[1])).collect();
    elts.len() == q * q - 1 && orbit.len() == q * q - 1
}

/// First pair `(x, y)`, `x ≤ y` in lexicographic order of SL(2, q), that
/// generates a sharply transitive subgroup.
pub fn find_sharply_transitive_sl2(q: u32) -> Result<Vec<Mat2>> {
    let f = FiniteField::of_order(q)?;
    let sl2: Vec<Mat2> = (0..4)
        .map(|_| f.elements())
        .multi_cartesian_product()
        .map(|v| [v[0], v[1], v[2], v[3]])
        .filter(|m| mat2_det(&f, m) == 1)
        .collect();
    for (i, x) in sl2.iter().enumerate() {
        for y in &sl2[i..] {
            let gens = if x == y { vec![*x] } else { vec![*x, *y] };
            if is_sharply_transitive_sl2(&f, &gens) {
                return Ok(gens);
            }
        }
    }
    Err(Error::Contradiction(format!("SL(2,{q}) has no 2-generated sharply transitive subgroup")))
}

/// Generators shipped for q ∈ {2, 3, 5}.
pub fn shipped_sl2_subgroup(q: u32) -> Option<Vec<Mat2>> {
    let table: BTreeMap<String, Vec<Mat2>> = serde_json::from_str(SHIPPED_SL2).expect("shipped data parses");
    table.get(&q.to_string()).cloned()
}

fn ovoid_setup(q: u32, gens: &[Mat2]) -> Result<(FiniteField, Vec<Mat2>, IncidenceStructure)> {
    let f = FiniteField::of_order(q)?;
    if !is_sharply_transitive_sl2(&f, gens) {
        return Err(Error::InvalidParameter(format!(
            "generators do not give a sharply transitive subgroup of SL(2,{q})"
        )));
    }
    let elts = mat2_closure(&f, gens, (q * q) as usize).expect("checked order");
    Ok((f, elts, build_w3(q)?))
}

/// `{[I A] : A ∈ G}` as line vertices of the W(3, q) incidence graph, for a
/// sharply transitive `G ≤ SL(2, q)` given by generators.
pub fn w3_partial_ovoid_with(q: u32, gens: &[Mat2]) -> Result<Code> {
    let (f, elts, s) = ovoid_setup(q, gens)?;
    let words = elts
        .iter()
        .map(|a| {
            let rows = vec![vec![1, 0, a[0], a[1]], vec![0, 1, a[2], a[3]]];
            let isotropic = crate::graphs::symplectic_form(&f, &rows[0], &rows[1]) == 0;
            if isotropic != (mat2_det(&f, a) == 1) {
                return Err(Error::Contradiction("isotropy disagrees with det A = 1".into()));
            }
            line_vertex(&s, &rows)
        })
        .collect::<Result<Vec<_>>>()?;
    Code::new(Arc::new(s.incidence_graph()), words).map(|c| c.with_name(&format!("w3_partial_ovoid:q={q}")))
}

/// The partial ovoid for a shipped subgroup.
pub fn w3_partial_ovoid(q: u32) -> Result<Code> {
    let gens = shipped_sl2_subgroup(q).ok_or_else(|| {
        Error::InvalidParameter(format!("no shipped sharply transitive subgroup for q = {q}; supply generators"))
    })?;
    w3_partial_ovoid_with(q, &gens)
}

/// `{diag(g, h) : g, h ∈ G}` acting on the W(3, q) incidence graph.
pub fn partial_ovoid_group(q: u32, gens: &[Mat2]) -> Result<PermGroup> {
    let (_, _, s) = ovoid_setup(q, gens)?;
    let block = |a: &Mat2, b: &Mat2| {
        vec![vec![a[0], a[1], 0, 0], vec![a[2], a[3], 0, 0], vec![0, 0, b[0], b[1]], vec![0, 0, b[2], b[3]]]
    };
    let id: Mat2 = [1, 0, 0, 1];
    let perms = gens
        .iter()
        .flat_map(|g| [block(g, &id), block(&id, g)])
        .map(|m| incidence_perm(&s, &m))
        .collect::<Result<Vec<_>>>()?;
    PermGroup::new(s.points + s.num_lines(), perms)
}

/// The Gabidulin code `⟨x, x^{q^s}, .., x^{q^{s(k−1)}}⟩` over GF(q^n) as
/// n×n matrices over GF(q) in the forms graph H_q(n, n).
pub fn gabidulin(q: u32, n: usize, k: usize, s: usize) -> Result<Code> {
    if gcd(n as u64, s as u64) != 1 || !(1..n).contains(&k) {
        return Err(Error::InvalidParameter(format!("need gcd(n,s) = 1 and 1 ≤ k ≤ n−1, got n={n}, k={k}, s={s}")));
    }
    let fr = FieldReduction::new(q, n as u32)?;
    let forms = FormsGraph::new(n, n, Arc::new(fr.small.clone()))?;
    let e = &fr.big;
    let basis: Vec<u32> = (0..n).map(|j| e.pow(e.generator(), j as u64)).collect();
    // powers[i][j] = (θ^j)^(q^(si))
    let powers: Vec<Vec<u32>> = (0..k)
        .map(|i| basis.iter().map(|&b| e.pow(b, (q as u64).pow((s * i) as u32))).collect())
        .collect();
    let words = (0..k)
        .map(|_| e.elements())
        .multi_cartesian_product()
        .map(|coeffs| {
            let rows: Vec<Vec<u32>> = (0..n)
                .map(|j| {
                    let value = (0..k).fold(0, |acc, i| e.add(acc, e.mul(coeffs[i], powers[i][j])));
                    fr.coords(value).to_vec()
                })
                .collect();
            forms.from_matrix(&rows)
        })
        .collect::<Vec<_>>();
    Code::new(Arc::new(Graph::Forms(forms)), words).map(|c| c.with_name(&format!("gabidulin:q={q},n={n},k={k},s={s}")))
}
