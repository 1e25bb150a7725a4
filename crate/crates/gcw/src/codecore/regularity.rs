use serde::Serialize;

use super::{Code, DistancePartition};
use crate::{Budget, Error, Result};

/// Neighbour counts of a vertex in `C_i`: `c` into `C_{i-1}`, `a` into
/// `C_i`, `b` into `C_{i+1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LevelCounts {
    pub a: usize,
    pub b: usize,
    pub c: usize,
}

/// Two vertices on the same level with different counts.
#[derive(Debug, Clone, Serialize)]
pub struct Violation {
    pub level: usize,
    pub vertex: usize,
    pub counts: LevelCounts,
    pub reference_vertex: usize,
    pub reference_counts: LevelCounts,
}

#[derive(Debug, Clone, Serialize)]
pub struct RegularityProfile {
    pub s: usize,
    /// Counts per level `0..=s`; filled up to the violating level otherwise.
    pub levels: Vec<LevelCounts>,
    pub violation: Option<Violation>,
}

impl RegularityProfile {
    pub fn is_regular(&self) -> bool {
        self.violation.is_none()
    }
}

struct Accumulator {
    s: usize,
    seen: Vec<Option<(usize, LevelCounts)>>,
    violation: Option<Violation>,
}

impl Accumulator {
    fn new(s: usize) -> Self {
        Accumulator { s, seen: vec![None; s + 1], violation: None }
    }

    /// Returns false once a violation is recorded.
    fn record(&mut self, level: usize, vertex: usize, counts: LevelCounts) -> bool {
        match self.seen[level] {
            None => self.seen[level] = Some((vertex, counts)),
            Some((rv, rc)) if rc != counts => {
                self.violation = Some(Violation {
                    level,
                    vertex,
                    counts,
                    reference_vertex: rv,
                    reference_counts: rc,
                });
                return false;
            }
            _ => {}
        }
        true
    }

    fn finish(self) -> RegularityProfile {
        let levels = self.seen.iter().map_while(|x| x.map(|(_, c)| c)).collect();
        RegularityProfile { s: self.s, levels, violation: self.violation }
    }
}

fn classify(level: usize, other: Option<usize>, counts: &mut LevelCounts) {
    match other {
        Some(j) if j + 1 == level => counts.c += 1,
        Some(j) if j == level => counts.a += 1,
        // beyond materialized levels means distance level + 1
        _ => counts.b += 1,
    }
}

/// Checks that `(a_i, b_i, c_i)` is constant on each level `i ≤ s`.
pub fn s_regularity(c: &Code, partition: &DistancePartition, s: usize, budget: &Budget) -> Result<RegularityProfile> {
    if s > partition.max_level() {
        return Err(Error::Precondition(format!(
            "partition covers levels 0..={}, asked for s={s}",
            partition.max_level()
        )));
    }
    let mut acc = Accumulator::new(s);
    let graph = c.graph();
    if let Some(t) = partition.syndrome_table() {
        // every coset is a union of translates, so one leader per coset suffices
        for syn in 0..t.count() {
            let level = t.level_of_syndrome(syn);
            if level > s {
                continue;
            }
            let mut counts = LevelCounts { a: 0, b: 0, c: 0 };
            t.for_each_neighbor(syn, |nb| classify(level, Some(t.level_of_syndrome(nb)), &mut counts));
            if !acc.record(level, t.leader(syn), counts) {
                break;
            }
        }
    } else if let Some(d) = partition.dense_levels() {
        for v in 0..d.len() {
            let level = d[v] as usize;
            if level > s {
                continue;
            }
            let mut counts = LevelCounts { a: 0, b: 0, c: 0 };
            graph.for_each_neighbor(v, |w| classify(level, Some(d[w] as usize), &mut counts));
            if !acc.record(level, v, counts) {
                break;
            }
        }
    } else if let Some(sets) = partition.sets() {
        let total: u64 = partition.level_sizes()[..=s].iter().sum();
        if total > budget.orbit_points {
            return Err(Error::budget("sphere-mode regularity", budget.orbit_points));
        }
        'outer: for (level, set) in sets.iter().enumerate().take(s + 1) {
            for &v in set {
                let mut counts = LevelCounts { a: 0, b: 0, c: 0 };
                graph.for_each_neighbor(v, |w| classify(level, partition.level_of(w), &mut counts));
                if !acc.record(level, v, counts) {
                    break 'outer;
                }
            }
        }
    }
    Ok(acc.finish())
}

/// s-regularity at `s = ρ`, using the cheapest exact partition.
pub fn is_completely_regular(c: &Code, budget: &Budget) -> Result<bool> {
    let p = DistancePartition::best(c, budget)?;
    let rho = p.rho().expect("exact partitions carry ρ");
    Ok(s_regularity(c, &p, rho, budget)?.is_regular())
}
