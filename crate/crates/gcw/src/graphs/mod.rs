//! Graph families with integer vertex ids, label codecs and neighbour
//! iteration that never materializes the edge set of the large families.

mod bfs;
mod explicit;
mod forms;
mod hamming;
mod incidence;
mod spec;
mod subsets;

use std::sync::Arc;

pub use bfs::{bfs_distances, girth, is_distance_regular, IntersectionArray, UNREACHED};
pub use explicit::ExplicitGraph;
pub use forms::FormsGraph;
pub use hamming::Hamming;
pub use incidence::{build_pg3, build_w3, grassmann, symplectic_form, IncidenceStructure, ProjectiveSpace3};
pub use spec::GraphSpec;
pub use subsets::Subsets;

use crate::{Budget, Error, Result};

/// A graph handle. Hamming, Johnson, Kneser, forms and cycle graphs are
/// implicit; the rest carry adjacency lists.
#[derive(Debug, Clone)]
pub enum Graph {
    Hamming(Hamming),
    Johnson(Subsets),
    Kneser(Subsets),
    Forms(FormsGraph),
    Cycle(usize),
    Explicit(ExplicitGraph),
}

impl Graph {
    pub fn hamming(n: usize, q: usize) -> Result<Graph> {
        Ok(Graph::Hamming(Hamming::new(n, q)?))
    }

    pub fn johnson(v: usize, k: usize) -> Result<Graph> {
        if !(2 <= k && k < v) {
            return Err(Error::InvalidParameter(format!("Johnson J({v},{k}) needs 2 <= k <= v-1")));
        }
        Ok(Graph::Johnson(Subsets::new(v, k)))
    }

    pub fn kneser(v: usize, k: usize) -> Result<Graph> {
        if !(k >= 2 && 2 * k < v) {
            return Err(Error::InvalidParameter(format!("Kneser K({v},{k}) needs 2 <= k <= (v-1)/2")));
        }
        Ok(Graph::Kneser(Subsets::new(v, k)))
    }

    pub fn cycle(m: usize) -> Result<Graph> {
        if m < 3 {
            return Err(Error::InvalidParameter(format!("cycle length {m} < 3")));
        }
        Ok(Graph::Cycle(m))
    }

    pub fn into_arc(self) -> Arc<Graph> {
        Arc::new(self)
    }

    pub fn vertex_count(&self) -> usize {
        match self {
            Graph::Hamming(h) => h.vertex_count(),
            Graph::Johnson(s) | Graph::Kneser(s) => s.count(),
            Graph::Forms(f) => f.vertex_count(),
            Graph::Cycle(m) => *m,
            Graph::Explicit(e) => e.vertex_count(),
        }
    }

    /// Calls `f` on every neighbour of `v`.
    #[inline]
    pub fn for_each_neighbor(&self, v: usize, mut f: impl FnMut(usize)) {
        match self {
            Graph::Hamming(h) => h.for_each_neighbor(v, f),
            Graph::Johnson(s) => s.for_each_johnson_neighbor(v, f),
            Graph::Kneser(s) => s.for_each_kneser_neighbor(v, f),
            Graph::Forms(fg) => fg.for_each_neighbor(v, f),
            Graph::Cycle(m) => {
                f((v + 1) % m);
                f((v + m - 1) % m);
            }
            Graph::Explicit(e) => e.neighbors(v).iter().for_each(|&w| f(w as usize)),
        }
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        let mut out = Vec::new();
        self.for_each_neighbor(v, |w| out.push(w));
        out
    }

    pub fn degree(&self, v: usize) -> usize {
        match self {
            Graph::Hamming(h) => h.n * (h.q - 1),
            Graph::Cycle(_) => 2,
            Graph::Explicit(e) => e.neighbors(v).len(),
            _ => self.neighbors(v).len(),
        }
    }

    /// Whether every automorphism-free argument may assume all vertices look
    /// alike: true for the implicit families.
    pub fn is_vertex_transitive_family(&self) -> bool {
        !matches!(self, Graph::Explicit(_))
    }

    pub fn label(&self, v: usize) -> String {
        match self {
            Graph::Hamming(h) => h.label(v),
            Graph::Johnson(s) | Graph::Kneser(s) => s.label(v),
            Graph::Forms(f) => f.label(v),
            Graph::Cycle(_) => v.to_string(),
            Graph::Explicit(e) => e.label(v),
        }
    }

    pub fn parse_label(&self, text: &str) -> Result<usize> {
        let text = text.trim();
        let v = match self {
            Graph::Hamming(h) => h.parse_label(text)?,
            Graph::Johnson(s) | Graph::Kneser(s) => s.parse_label(text)?,
            Graph::Forms(f) => f.parse_label(text)?,
            Graph::Cycle(_) => text.parse::<usize>().map_err(|e| Error::Parse(format!("{text:?}: {e}")))?,
            Graph::Explicit(e) => e.parse_label(text)?,
        };
        if v >= self.vertex_count() {
            return Err(Error::Parse(format!("vertex {text:?} out of range")));
        }
        Ok(v)
    }

    /// Shortest-path distance; `None` when disconnected.
    pub fn distance(&self, u: usize, v: usize) -> Option<usize> {
        match self {
            Graph::Hamming(h) => Some(h.distance(u, v)),
            Graph::Johnson(s) => Some(s.k - s.intersection_size(u, v)),
            Graph::Forms(f) => Some(f.rank_distance(u, v)),
            Graph::Cycle(m) => {
                let d = u.abs_diff(v);
                Some(d.min(m - d))
            }
            _ => bfs::bfs_distance(self, u, v),
        }
    }

    /// `Γ_i(v)`, sorted.
    pub fn sphere(&self, v: usize, i: usize) -> Vec<usize> {
        if let Graph::Hamming(h) = self {
            return h.sphere(v, i);
        }
        bfs::sphere_by_bfs(self, v, i)
    }

    /// `B_i(v)`, sorted.
    pub fn ball(&self, v: usize, i: usize) -> Vec<usize> {
        let mut out: Vec<usize> = (0..=i).flat_map(|j| self.sphere(v, j)).collect();
        out.sort_unstable();
        out
    }

    /// Family tag and parameters in spec-string form.
    pub fn spec(&self) -> String {
        match self {
            Graph::Hamming(h) => format!("hamming:n={},q={}", h.n, h.q),
            Graph::Johnson(s) => format!("johnson:v={},k={}", s.v, s.k),
            Graph::Kneser(s) => format!("kneser:v={},k={}", s.v, s.k),
            Graph::Forms(f) => format!("forms:m={},n={},q={}", f.m, f.n, f.field.order()),
            Graph::Cycle(m) => format!("cycle:m={m}"),
            Graph::Explicit(e) => e.name().to_string(),
        }
    }

    pub fn as_hamming(&self) -> Option<&Hamming> {
        match self {
            Graph::Hamming(h) => Some(h),
            _ => None,
        }
    }

    /// Diameter by BFS from every vertex (or analytic for Hamming/cycle).
    pub fn diameter(&self, budget: &Budget) -> Result<usize> {
        match self {
            Graph::Hamming(h) => return Ok(h.n),
            Graph::Cycle(m) => return Ok(m / 2),
            _ => {}
        }
        let n = self.vertex_count();
        if n as u64 > budget.exhaustive_vertices {
            return Err(Error::budget("diameter", budget.exhaustive_vertices));
        }
        let mut best = 0;
        for v in 0..n {
            let d = bfs_distances(self, &[v]);
            if d.iter().any(|&x| x == UNREACHED) {
                return Err(Error::Precondition("graph is disconnected".into()));
            }
            best = best.max(*d.iter().max().unwrap() as usize);
        }
        Ok(best)
    }

    /// Whether `Γ_1(u) = Γ_1(v)` forces `u = v`.
    pub fn is_reduced(&self, budget: &Budget) -> Result<bool> {
        let n = self.vertex_count();
        if n as u64 <= budget.exhaustive_vertices.min(10_000) {
            let mut seen = std::collections::HashMap::new();
            for v in 0..n {
                let mut nb = self.neighbors(v);
                nb.sort_unstable();
                if seen.insert(nb, v).is_some() {
                    return Ok(false);
                }
            }
            return Ok(true);
        }
        match self {
            // two vertices with equal neighbourhoods have at most two common
            // neighbours, so the degree would be 2
            Graph::Hamming(h) => Ok(!(h.n == 2 && h.q == 2)),
            // distinct k-sets share a full neighbourhood only in J(2k, k) with k = 2
            Graph::Johnson(s) => Ok(!(s.v == 4 && s.k == 2)),
            Graph::Kneser(_) => Ok(true),
            Graph::Cycle(m) => Ok(*m != 4),
            _ => Err(Error::budget("exhaustive reducedness check", 10_000)),
        }
    }
}
