use itertools::Itertools;

use crate::{Error, Result};

/// k-subsets of `{0..v}` ranked by the combinatorial number system:
/// `{c_0 < .. < c_{k-1}} ↦ Σ C(c_i, i+1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subsets {
    pub v: usize,
    pub k: usize,
    binom: Vec<Vec<usize>>,
}

impl Subsets {
    pub fn new(v: usize, k: usize) -> Self {
        let mut binom = vec![vec![0usize; k + 2]; v + 1];
        for n in 0..=v {
            binom[n][0] = 1;
            for r in 1..=k + 1 {
                binom[n][r] = if n == 0 { 0 } else { binom[n - 1][r - 1] + binom[n - 1][r] };
            }
        }
        Subsets { v, k, binom }
    }

    pub fn count(&self) -> usize {
        self.binom[self.v][self.k]
    }

    pub fn rank(&self, set: &[usize]) -> usize {
        set.iter().enumerate().map(|(i, &c)| self.binom[c][i + 1]).sum()
    }

    pub fn unrank(&self, r: usize) -> Vec<usize> {
        let mut out = vec![0usize; self.k];
        let mut r = r;
        let mut hi = self.v;
        for i in (0..self.k).rev() {
            let mut c = hi - 1;
            while self.binom[c][i + 1] > r {
                c -= 1;
            }
            out[i] = c;
            r -= self.binom[c][i + 1];
            hi = c;
        }
        out
    }

    /// Bitmask of the subset with rank `r` (v ≤ 64).
    pub fn mask(&self, r: usize) -> u64 {
        self.unrank(r).iter().fold(0, |m, &c| m | 1 << c)
    }

    pub fn intersection_size(&self, a: usize, b: usize) -> usize {
        (self.mask(a) & self.mask(b)).count_ones() as usize
    }

    pub fn for_each_johnson_neighbor(&self, r: usize, mut f: impl FnMut(usize)) {
        let set = self.unrank(r);
        let mut inside = vec![false; self.v];
        for &c in &set {
            inside[c] = true;
        }
        for (pos, _) in set.iter().enumerate() {
            for b in 0..self.v {
                if !inside[b] {
                    let mut s = set.clone();
                    s[pos] = b;
                    s.sort_unstable();
                    f(self.rank(&s));
                }
            }
        }
    }

    pub fn for_each_kneser_neighbor(&self, r: usize, mut f: impl FnMut(usize)) {
        let mask = self.mask(r);
        let complement: Vec<usize> = (0..self.v).filter(|&c| mask >> c & 1 == 0).collect();
        for s in complement.into_iter().combinations(self.k) {
            f(self.rank(&s));
        }
    }

    pub fn label(&self, r: usize) -> String {
        format!("{{{}}}", self.unrank(r).iter().join(","))
    }

    pub fn parse_label(&self, text: &str) -> Result<usize> {
        let body = text.trim().trim_start_matches('{').trim_end_matches('}');
        let mut set: Vec<usize> = body
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|s| !s.is_empty())
            .map(|s| s.parse::<usize>().map_err(|e| Error::Parse(format!("{s:?}: {e}"))))
            .collect::<Result<_>>()?;
        set.sort_unstable();
        set.dedup();
        if set.len() != self.k || set.iter().any(|&c| c >= self.v) {
            return Err(Error::Parse(format!("{text:?} is not a {}-subset of {{0..{}}}", self.k, self.v)));
        }
        Ok(self.rank(&set))
    }
}
