use std::collections::HashMap;
use std::sync::Arc;

use itertools::Itertools;

use super::{ExplicitGraph, Graph};
use crate::algebra::{linalg, FiniteField};
use crate::{Error, Result};

/// A point-line geometry. Points are `0..points`; each line is a sorted list
/// of its points.
#[derive(Debug, Clone)]
pub struct IncidenceStructure {
    pub name: String,
    pub points: usize,
    pub lines: Vec<Vec<u32>>,
    pub point_lines: Vec<Vec<u32>>,
    /// `(s, t)` when the structure is a generalised quadrangle.
    pub gq_order: Option<(usize, usize)>,
    /// Coordinates when the structure lives in PG(3, q): line `j` is
    /// `geometry.lines[line_ids[j]]`.
    pub geometry: Option<Arc<ProjectiveSpace3>>,
    pub line_ids: Vec<usize>,
}

impl IncidenceStructure {
    pub fn new(name: &str, points: usize, lines: Vec<Vec<u32>>) -> Result<Self> {
        let mut point_lines = vec![Vec::new(); points];
        let mut lines = lines;
        for (j, l) in lines.iter_mut().enumerate() {
            l.sort_unstable();
            l.dedup();
            for &p in l.iter() {
                if p as usize >= points {
                    return Err(Error::InvalidParameter(format!("line {j} has point {p} out of range")));
                }
                point_lines[p as usize].push(j as u32);
            }
        }
        let n = lines.len();
        Ok(IncidenceStructure {
            name: name.to_string(),
            points,
            lines,
            point_lines,
            gq_order: None,
            geometry: None,
            line_ids: (0..n).collect(),
        })
    }

    pub fn num_lines(&self) -> usize {
        self.lines.len()
    }

    /// Bipartite graph on points then lines.
    pub fn incidence_graph(&self) -> Graph {
        let p = self.points;
        let edges = self.lines.iter().enumerate().flat_map(|(j, l)| l.iter().map(move |&x| (x as usize, p + j)));
        let labels = (0..p).map(|i| format!("p{i}")).chain((0..self.lines.len()).map(|j| format!("l{j}"))).collect();
        let mut g = ExplicitGraph::from_edges(&format!("incidence({})", self.name), p + self.lines.len(), edges, Some(labels))
            .expect("edges in range");
        g.points = Some(p);
        Graph::Explicit(g)
    }

    /// Points, adjacent when distinct and collinear.
    pub fn collinearity_graph(&self) -> Graph {
        let edges = self.lines.iter().flat_map(|l| l.iter().tuple_combinations().map(|(&a, &b)| (a as usize, b as usize)));
        let labels = (0..self.points).map(|i| format!("p{i}")).collect();
        Graph::Explicit(
            ExplicitGraph::from_edges(&format!("collinearity({})", self.name), self.points, edges, Some(labels))
                .expect("edges in range"),
        )
    }

    /// Interchanges points and lines.
    pub fn dualize(&self) -> IncidenceStructure {
        let mut d = IncidenceStructure::new(&format!("dual({})", self.name), self.lines.len(), self.point_lines.clone())
            .expect("consistent structure");
        d.gq_order = self.gq_order.map(|(s, t)| (t, s));
        d
    }

    /// Checks the generalised quadrangle axioms for order `(s, t)`: line and
    /// point sizes, at most one line per point pair, and a unique collinear
    /// incident pair for every antiflag.
    pub fn check_gq_axioms(&self, s: usize, t: usize) -> std::result::Result<(), String> {
        if let Some(j) = self.lines.iter().position(|l| l.len() != s + 1) {
            return Err(format!("line {j} has {} points", self.lines[j].len()));
        }
        if let Some(p) = self.point_lines.iter().position(|l| l.len() != t + 1) {
            return Err(format!("point {p} is on {} lines", self.point_lines[p].len()));
        }
        let mut on_line = vec![vec![false; self.points]; self.lines.len()];
        for (j, l) in self.lines.iter().enumerate() {
            for &p in l {
                on_line[j][p as usize] = true;
            }
        }
        let mut pair_count: HashMap<(u32, u32), usize> = HashMap::new();
        for l in &self.lines {
            for (&a, &b) in l.iter().tuple_combinations() {
                *pair_count.entry((a, b)).or_default() += 1;
            }
        }
        if let Some((pair, _)) = pair_count.iter().find(|(_, &c)| c > 1) {
            return Err(format!("points {pair:?} share more than one line"));
        }
        for p in 0..self.points {
            for (j, line) in self.lines.iter().enumerate() {
                if on_line[j][p] {
                    continue;
                }
                let meets = self.point_lines[p]
                    .iter()
                    .filter(|&&m| line.iter().any(|&x| on_line[m as usize][x as usize]))
                    .count();
                if meets != 1 {
                    return Err(format!("antiflag (p{p}, l{j}) has {meets} collinear incident pairs"));
                }
            }
        }
        Ok(())
    }
}

/// PG(3, q): normalized point coordinates and lines as 2×4 reduced echelon
/// bases, both in sorted order.
#[derive(Debug, Clone)]
pub struct ProjectiveSpace3 {
    pub field: Arc<FiniteField>,
    pub points: Vec<Vec<u32>>,
    pub lines: Vec<Vec<Vec<u32>>>,
    pub line_points: Vec<Vec<u32>>,
    point_index: HashMap<Vec<u32>, usize>,
    line_index: HashMap<Vec<Vec<u32>>, usize>,
}

impl ProjectiveSpace3 {
    pub fn new(q: u32) -> Result<Self> {
        if q > 9 {
            return Err(Error::budget("PG(3,q) subspace enumeration", 9));
        }
        let field = Arc::new(FiniteField::of_order(q)?);
        let points = linalg::projective_points(&field, 4);
        let point_index: HashMap<Vec<u32>, usize> = points.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let mut lines = rref_subspaces(&field, 4, 2);
        lines.sort();
        let line_index = lines.iter().cloned().enumerate().map(|(i, l)| (l, i)).collect();
        let line_points = lines
            .iter()
            .map(|l| {
                let mut pts: Vec<u32> = linalg::span(&field, l)
                    .into_iter()
                    .filter(|v| v.iter().any(|&x| x != 0))
                    .map(|v| point_index[&linalg::normalize(&field, &v)] as u32)
                    .collect();
                pts.sort_unstable();
                pts.dedup();
                pts
            })
            .collect();
        Ok(ProjectiveSpace3 { field, points, lines, line_points, point_index, line_index })
    }

    pub fn point_id(&self, v: &[u32]) -> Option<usize> {
        if v.iter().all(|&x| x == 0) {
            return None;
        }
        self.point_index.get(&linalg::normalize(&self.field, v)).copied()
    }

    /// Line spanned by the given rows, if they span a 2-space.
    pub fn line_id(&self, rows: &[Vec<u32>]) -> Option<usize> {
        let mut m = rows.to_vec();
        linalg::rref(&self.field, &mut m);
        self.line_index.get(&m).copied()
    }
}

/// All k-subspaces of GF(q)^d as reduced echelon bases, ordered by pivot set
/// then free entries.
pub fn rref_subspaces(f: &FiniteField, d: usize, k: usize) -> Vec<Vec<Vec<u32>>> {
    let q = f.order() as usize;
    let mut out = Vec::new();
    for pivots in (0..d).combinations(k) {
        let free: Vec<(usize, usize)> = (0..k)
            .flat_map(|i| {
                let pv = pivots.clone();
                ((pivots[i] + 1)..d).filter(move |c| !pv.contains(c)).map(move |c| (i, c))
            })
            .collect();
        for code in 0..q.pow(free.len() as u32) {
            let mut m = vec![vec![0u32; d]; k];
            for (i, &p) in pivots.iter().enumerate() {
                m[i][p] = 1;
            }
            let mut c = code;
            for &(i, col) in free.iter().rev() {
                m[i][col] = (c % q) as u32;
                c /= q;
            }
            out.push(m);
        }
    }
    out
}

/// PG(3, q): all points and all lines.
pub fn build_pg3(q: u32) -> Result<IncidenceStructure> {
    let space = Arc::new(ProjectiveSpace3::new(q)?);
    let mut s = IncidenceStructure::new(&format!("pg3:q={q}"), space.points.len(), space.line_points.clone())?;
    s.geometry = Some(space);
    Ok(s)
}

/// The symplectic form `x1y2 − x2y1 − x3y4 + x4y3`.
pub fn symplectic_form(f: &FiniteField, x: &[u32], y: &[u32]) -> u32 {
    let t1 = f.sub(f.mul(x[0], y[1]), f.mul(x[1], y[0]));
    let t2 = f.sub(f.mul(x[3], y[2]), f.mul(x[2], y[3]));
    f.add(t1, t2)
}

/// W(3, q): all points of PG(3, q) and its totally isotropic lines.
pub fn build_w3(q: u32) -> Result<IncidenceStructure> {
    let space = Arc::new(ProjectiveSpace3::new(q)?);
    let ids: Vec<usize> = (0..space.lines.len())
        .filter(|&j| symplectic_form(&space.field, &space.lines[j][0], &space.lines[j][1]) == 0)
        .collect();
    let lines = ids.iter().map(|&j| space.line_points[j].clone()).collect();
    let mut s = IncidenceStructure::new(&format!("w3:q={q}"), space.points.len(), lines)?;
    s.gq_order = Some((q as usize, q as usize));
    s.geometry = Some(space);
    s.line_ids = ids;
    Ok(s)
}

/// Grassmann graph J_q(d, k): k-subspaces, adjacent when they meet in a
/// (k−1)-subspace.
pub fn grassmann(q: u32, d: usize, k: usize, vertex_limit: u64) -> Result<Graph> {
    if !(1 <= k && k < d) {
        return Err(Error::InvalidParameter(format!("J_q({d},{k}) needs 1 <= k < d")));
    }
    let f = FiniteField::of_order(q)?;
    if (q as u64).checked_pow(d as u32).map_or(true, |t| t > 1 << 24) {
        return Err(Error::InvalidParameter("Grassmann graph needs q^d <= 2^24".into()));
    }
    let mut subspaces = rref_subspaces(&f, d, k);
    if subspaces.len() as u64 > vertex_limit {
        return Err(Error::budget("Grassmann materialization", vertex_limit));
    }
    subspaces.sort();
    let index: HashMap<Vec<Vec<u32>>, usize> = subspaces.iter().cloned().enumerate().map(|(i, s)| (s, i)).collect();
    let hyper_coeffs = if k > 1 { rref_subspaces(&f, k, k - 1) } else { vec![vec![]] };
    let all_vectors = linalg::span(&f, &linalg::identity(d));
    let mut edges = Vec::new();
    for (i, u) in subspaces.iter().enumerate() {
        let in_u: std::collections::HashSet<Vec<u32>> = linalg::span(&f, u).into_iter().collect();
        for hc in &hyper_coeffs {
            let h = linalg::mat_mul(&f, hc, u);
            for w in &all_vectors {
                if in_u.contains(w) {
                    continue;
                }
                let mut rows = h.clone();
                rows.push(w.clone());
                linalg::rref(&f, &mut rows);
                let j = index[&rows];
                if i < j {
                    edges.push((i, j));
                }
            }
        }
    }
    let labels = subspaces
        .iter()
        .map(|m| m.iter().map(|r| r.iter().map(|x| x.to_string()).collect::<String>()).join("/"))
        .collect();
    Ok(Graph::Explicit(ExplicitGraph::from_edges(
        &format!("grassmann:d={d},k={k},q={q}"),
        subspaces.len(),
        edges,
        Some(labels),
    )?))
}
