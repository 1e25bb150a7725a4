use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use super::Graph;
use crate::{Budget, Error, Result};

pub const UNREACHED: u8 = u8::MAX;

/// Multi-source BFS; one byte per vertex, `UNREACHED` where no source reaches.
pub fn bfs_distances(g: &Graph, sources: &[usize]) -> Vec<u8> {
    let mut dist = vec![UNREACHED; g.vertex_count()];
    let mut frontier = Vec::with_capacity(sources.len());
    for &s in sources {
        if dist[s] != 0 {
            dist[s] = 0;
            frontier.push(s);
        }
    }
    let mut level = 0u8;
    let mut next = Vec::new();
    while !frontier.is_empty() {
        assert!(level < UNREACHED - 1, "distance exceeds one-byte levels");
        level += 1;
        for &v in &frontier {
            g.for_each_neighbor(v, |w| {
                if dist[w] == UNREACHED {
                    dist[w] = level;
                    next.push(w);
                }
            });
        }
        std::mem::swap(&mut frontier, &mut next);
        next.clear();
    }
    dist
}

/// Vertices within distance `radius` of `v`, by level. Uses a hash map so it
/// works on graphs too large for a dense array.
pub fn local_levels(g: &Graph, v: usize, radius: usize) -> Vec<Vec<usize>> {
    let mut seen = HashMap::from([(v, 0usize)]);
    let mut levels = vec![vec![v]];
    for i in 1..=radius {
        let mut next = Vec::new();
        for &x in &levels[i - 1] {
            g.for_each_neighbor(x, |w| {
                if let std::collections::hash_map::Entry::Vacant(e) = seen.entry(w) {
                    e.insert(i);
                    next.push(w);
                }
            });
        }
        if next.is_empty() {
            break;
        }
        levels.push(next);
    }
    levels
}

pub(super) fn sphere_by_bfs(g: &Graph, v: usize, i: usize) -> Vec<usize> {
    let mut levels = local_levels(g, v, i);
    let mut s = if levels.len() > i { std::mem::take(&mut levels[i]) } else { Vec::new() };
    s.sort_unstable();
    s
}

pub(super) fn bfs_distance(g: &Graph, u: usize, v: usize) -> Option<usize> {
    if u == v {
        return Some(0);
    }
    let mut seen = HashMap::from([(u, 0usize)]);
    let mut frontier = vec![u];
    let mut d = 0;
    while !frontier.is_empty() {
        d += 1;
        let mut next = Vec::new();
        for &x in &frontier {
            let mut hit = false;
            g.for_each_neighbor(x, |w| {
                if w == v {
                    hit = true;
                }
                if let std::collections::hash_map::Entry::Vacant(e) = seen.entry(w) {
                    e.insert(d);
                    next.push(w);
                }
            });
            if hit {
                return Some(d);
            }
        }
        frontier = next;
    }
    None
}

/// Intersection array `{b_0, .., b_{d-1}; c_1, .., c_d}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IntersectionArray {
    pub b: Vec<usize>,
    pub c: Vec<usize>,
}

impl fmt::Display for IntersectionArray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let j = |v: &[usize]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        write!(f, "{{{};{}}}", j(&self.b), j(&self.c))
    }
}

/// Level profile `(a_i, b_i, c_i)` of the singleton `{v}`, or `None` when it
/// is not constant on some level.
fn singleton_profile(g: &Graph, v: usize) -> Option<Vec<(usize, usize, usize)>> {
    let dist = bfs_distances(g, &[v]);
    if dist.iter().any(|&d| d == UNREACHED) {
        return None;
    }
    let diam = *dist.iter().max().unwrap() as usize;
    let mut profile: Vec<Option<(usize, usize, usize)>> = vec![None; diam + 1];
    for w in 0..g.vertex_count() {
        let i = dist[w];
        let (mut a, mut b, mut c) = (0, 0, 0);
        g.for_each_neighbor(w, |x| {
            let j = dist[x];
            if j == i {
                a += 1;
            } else if j > i {
                b += 1;
            } else {
                c += 1;
            }
        });
        match profile[i as usize] {
            None => profile[i as usize] = Some((a, b, c)),
            Some(t) if t != (a, b, c) => return None,
            _ => {}
        }
    }
    profile.into_iter().collect()
}

/// Intersection array when every singleton is completely regular with the
/// same profile. All base vertices are checked.
pub fn is_distance_regular(g: &Graph, budget: &Budget) -> Result<Option<IntersectionArray>> {
    let n = g.vertex_count();
    if n as u64 > budget.exhaustive_vertices {
        return Err(Error::budget("distance-regularity check", budget.exhaustive_vertices));
    }
    // a few spread-out vertices first for a cheap rejection
    let sample: Vec<usize> = (0..8).map(|i| i * n / 8).chain(0..n).collect();
    let mut reference: Option<Vec<(usize, usize, usize)>> = None;
    let mut checked = vec![false; n];
    for v in sample {
        if checked[v] {
            continue;
        }
        checked[v] = true;
        let Some(p) = singleton_profile(g, v) else { return Ok(None) };
        match &reference {
            None => reference = Some(p),
            Some(r) if *r != p => return Ok(None),
            _ => {}
        }
    }
    let r = reference.expect("nonempty graph");
    let d = r.len() - 1;
    Ok(Some(IntersectionArray { b: r[..d].iter().map(|t| t.1).collect(), c: r[1..].iter().map(|t| t.2).collect() }))
}

/// Length of a shortest cycle; `None` for forests.
pub fn girth(g: &Graph) -> Option<usize> {
    let n = g.vertex_count();
    let mut best: Option<usize> = None;
    for s in 0..n {
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        dist[s] = 0;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            if let Some(b) = best {
                if 2 * dist[x] + 1 >= b {
                    break;
                }
            }
            for w in g.neighbors(x) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[x] + 1;
                    parent[w] = x;
                    queue.push_back(w);
                } else if parent[x] != w {
                    let len = dist[x] + dist[w] + 1;
                    best = Some(best.map_or(len, |b| b.min(len)));
                }
            }
        }
    }
    best
}
