use serde::Serialize;

use super::{min_distance, Code};
use crate::algebra::{linalg, FiniteField};
use crate::graphs::{bfs_distances, Hamming, UNREACHED};
use crate::{Budget, Error, Result};

/// How the levels `C_i` are materialized.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PartitionMode {
    /// Multi-source BFS over every vertex.
    Dense,
    /// `C_i` as the union of `Γ_i(α)` for `i ≤ s ≤ e`.
    Spheres(usize),
    /// Coset-leader weights of a linear code.
    Syndrome,
}

/// The distance partition `C_0, C_1, ...` of a code.
#[derive(Debug, Clone)]
pub struct DistancePartition {
    mode: PartitionMode,
    levels: Levels,
    rho: Option<usize>,
    sizes: Vec<u64>,
}

#[derive(Debug, Clone)]
enum Levels {
    Dense(Vec<u8>),
    Sets(Vec<Vec<usize>>),
    Syndrome(SyndromeTable),
}

/// Level table indexed by syndrome, plus what is needed to compute the
/// syndrome of a vertex and walk cosets.
#[derive(Debug, Clone)]
pub(crate) struct SyndromeTable {
    field: std::sync::Arc<FiniteField>,
    hamming: Hamming,
    redundancy: usize,
    /// `column[j][a]` = syndrome of `a·e_j`.
    column: Vec<Vec<usize>>,
    level: Vec<u8>,
    leader: Vec<usize>,
    words: Vec<usize>,
}

impl SyndromeTable {
    fn add(&self, s: usize, t: usize) -> usize {
        let q = self.field.order() as usize;
        if q == 2 {
            return s ^ t;
        }
        let (mut s, mut t, mut out, mut place) = (s, t, 0, 1);
        for _ in 0..self.redundancy {
            out += self.field.add((s % q) as u32, (t % q) as u32) as usize * place;
            s /= q;
            t /= q;
            place *= q;
        }
        out
    }

    fn syndrome(&self, v: usize) -> usize {
        let mut s = 0;
        for (j, d) in self.hamming.digits(v).into_iter().enumerate() {
            if d != 0 {
                s = self.add(s, self.column[j][d as usize]);
            }
        }
        s
    }

    fn add_vertices(&self, u: usize, v: usize) -> usize {
        let (du, dv) = (self.hamming.digits(u), self.hamming.digits(v));
        let sum: Vec<u32> = du.iter().zip(&dv).map(|(&a, &b)| self.field.add(a, b)).collect();
        self.hamming.from_digits(&sum)
    }

    pub(crate) fn count(&self) -> usize {
        self.level.len()
    }

    pub(crate) fn level_of_syndrome(&self, s: usize) -> usize {
        self.level[s] as usize
    }

    pub(crate) fn leader(&self, s: usize) -> usize {
        self.leader[s]
    }

    /// Syndromes of the neighbours of any vertex with syndrome `s`.
    pub(crate) fn for_each_neighbor(&self, s: usize, mut f: impl FnMut(usize)) {
        for col in &self.column {
            for &t in &col[1..] {
                f(self.add(s, t));
            }
        }
    }
}

impl DistancePartition {
    pub fn mode(&self) -> PartitionMode {
        self.mode
    }

    /// Covering radius; absent in sphere mode.
    pub fn rho(&self) -> Option<usize> {
        self.rho
    }

    /// `|C_0|, |C_1|, ...` over the levels this partition knows.
    pub fn level_sizes(&self) -> &[u64] {
        &self.sizes
    }

    /// Highest level index this partition describes.
    pub fn max_level(&self) -> usize {
        self.sizes.len() - 1
    }

    /// Level of `v`, or `None` beyond the materialized levels.
    pub fn level_of(&self, v: usize) -> Option<usize> {
        match &self.levels {
            Levels::Dense(d) => Some(d[v] as usize),
            Levels::Sets(sets) => sets.iter().position(|s| s.binary_search(&v).is_ok()),
            Levels::Syndrome(t) => Some(t.level[t.syndrome(v)] as usize),
        }
    }

    /// `C_i`, sorted.
    pub fn level_set(&self, i: usize, budget: &Budget) -> Result<Vec<usize>> {
        if i > self.max_level() {
            return Ok(Vec::new());
        }
        if self.sizes[i] > budget.orbit_points {
            return Err(Error::budget("level set materialization", budget.orbit_points));
        }
        Ok(match &self.levels {
            Levels::Dense(d) => (0..d.len()).filter(|&v| d[v] as usize == i).collect(),
            Levels::Sets(sets) => sets[i].clone(),
            Levels::Syndrome(t) => {
                let mut out = Vec::with_capacity(self.sizes[i] as usize);
                for s in 0..t.count() {
                    if t.level[s] as usize == i {
                        out.extend(t.words.iter().map(|&w| t.add_vertices(t.leader[s], w)));
                    }
                }
                out.sort_unstable();
                out
            }
        })
    }

    pub(crate) fn dense_levels(&self) -> Option<&[u8]> {
        match &self.levels {
            Levels::Dense(d) => Some(d),
            _ => None,
        }
    }

    pub(crate) fn syndrome_table(&self) -> Option<&SyndromeTable> {
        match &self.levels {
            Levels::Syndrome(t) => Some(t),
            _ => None,
        }
    }

    pub(crate) fn sets(&self) -> Option<&[Vec<usize>]> {
        match &self.levels {
            Levels::Sets(s) => Some(s),
            _ => None,
        }
    }

    /// The cheapest exact mode: syndrome for small-redundancy linear codes,
    /// then dense.
    pub fn best(c: &Code, budget: &Budget) -> Result<Self> {
        if let Some(lin) = c.linear_descriptor() {
            let n = c.length().unwrap_or(0);
            let r = n - lin.generator.len();
            if (lin.field.order() as u64).checked_pow(r as u32).is_some_and(|x| x <= 1 << 24) {
                return distance_partition(c, PartitionMode::Syndrome, budget);
            }
        }
        distance_partition(c, PartitionMode::Dense, budget)
    }
}

pub fn distance_partition(c: &Code, mode: PartitionMode, budget: &Budget) -> Result<DistancePartition> {
    if c.is_empty() {
        return Err(Error::TrivialCode("empty code".into()));
    }
    match mode {
        PartitionMode::Dense => dense(c, budget),
        PartitionMode::Spheres(s) => spheres(c, s, budget),
        PartitionMode::Syndrome => syndrome(c),
    }
}

fn dense(c: &Code, budget: &Budget) -> Result<DistancePartition> {
    let n = c.graph().vertex_count();
    if n as u64 > budget.dense_vertices {
        return Err(Error::budget("dense distance partition", budget.dense_vertices));
    }
    let d = bfs_distances(c.graph(), c.words());
    if d.contains(&UNREACHED) {
        return Err(Error::Precondition("graph is disconnected".into()));
    }
    let rho = *d.iter().max().unwrap() as usize;
    let mut sizes = vec![0u64; rho + 1];
    for &x in &d {
        sizes[x as usize] += 1;
    }
    Ok(DistancePartition { mode: PartitionMode::Dense, levels: Levels::Dense(d), rho: Some(rho), sizes })
}

fn spheres(c: &Code, s: usize, budget: &Budget) -> Result<DistancePartition> {
    if s > 0 {
        let e = if c.len() < 2 { usize::MAX } else { super::error_capacity(min_distance(c, budget)?) };
        if s > e {
            return Err(Error::Precondition(format!("sphere mode needs s ≤ e, got s={s}, e={e}")));
        }
    }
    let mut sets = vec![c.words().to_vec()];
    for i in 1..=s {
        let mut level: Vec<usize> = c.words().iter().flat_map(|&a| c.graph().sphere(a, i)).collect();
        if level.len() as u64 > budget.orbit_points {
            return Err(Error::budget("sphere-mode level", budget.orbit_points));
        }
        level.sort_unstable();
        level.dedup();
        sets.push(level);
    }
    let sizes = sets.iter().map(|l| l.len() as u64).collect();
    Ok(DistancePartition { mode: PartitionMode::Spheres(s), levels: Levels::Sets(sets), rho: None, sizes })
}

fn syndrome(c: &Code) -> Result<DistancePartition> {
    let lin = c
        .linear_descriptor()
        .ok_or_else(|| Error::Precondition("syndrome mode needs a linear code".into()))?;
    let field = lin.field.clone();
    let h = c.graph().as_hamming().expect("linear codes live in Hamming graphs").clone();
    let n = h.n;
    let q = field.order() as usize;
    let check = linalg::nullspace(&field, &lin.generator, n);
    let r = check.len();
    let count = q
        .checked_pow(r as u32)
        .filter(|&x| x <= 1 << 24)
        .ok_or_else(|| Error::budget("syndrome table", 1 << 24))?;
    let encode = |v: &[u32]| v.iter().rev().fold(0usize, |acc, &x| acc * q + x as usize);
    let column: Vec<Vec<usize>> = (0..n)
        .map(|j| {
            (0..q as u32)
                .map(|a| encode(&check.iter().map(|row| field.mul(a, row[j])).collect::<Vec<_>>()))
                .collect()
        })
        .collect();
    let mut table = SyndromeTable {
        field,
        hamming: h,
        redundancy: r,
        column,
        level: vec![UNREACHED; count],
        leader: vec![0; count],
        words: c.words().to_vec(),
    };
    table.level[0] = 0;
    let mut frontier = vec![0usize];
    let mut depth = 0u8;
    let mut sizes = vec![1u64];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        depth += 1;
        for &s in &frontier {
            for j in 0..n {
                for a in 1..q {
                    let t = table.add(s, table.column[j][a]);
                    if table.level[t] == UNREACHED {
                        table.level[t] = depth;
                        table.leader[t] = table.leader[s] + a * table.hamming.weight_of_entry(j);
                        next.push(t);
                    }
                }
            }
        }
        if !next.is_empty() {
            sizes.push(next.len() as u64);
        }
        frontier = next;
    }
    if table.level.contains(&UNREACHED) {
        return Err(Error::Contradiction("parity-check matrix does not have full rank".into()));
    }
    let rho = sizes.len() - 1;
    let sizes = sizes.into_iter().map(|s| s * c.len() as u64).collect();
    Ok(DistancePartition { mode: PartitionMode::Syndrome, levels: Levels::Syndrome(table), rho: Some(rho), sizes })
}
