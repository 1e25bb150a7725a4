use std::sync::Arc;

use crate::algebra::{linalg, FiniteField};
use crate::{Error, Result};

/// Bilinear forms graph H_q(m, n): m×n matrices over GF(q), adjacent when
/// the difference has rank 1. Vertex id is the row-major radix-q value.
#[derive(Debug, Clone)]
pub struct FormsGraph {
    pub m: usize,
    pub n: usize,
    pub field: Arc<FiniteField>,
    rank_one: Vec<Vec<u32>>,
}

impl FormsGraph {
    pub fn new(m: usize, n: usize, field: Arc<FiniteField>) -> Result<Self> {
        let q = field.order() as u64;
        if m < 1 || n < 1 || q.checked_pow((m * n) as u32).map_or(true, |t| t > 1 << 24) {
            return Err(Error::InvalidParameter(format!("forms graph H_{q}({m},{n}) outside q^(mn) <= 2^24")));
        }
        let mut rank_one = Vec::new();
        for u in linalg::projective_points(&field, m) {
            for w in 1..q.pow(n as u32) {
                let wv = radix_digits(w as usize, q as usize, n);
                let mut mat = Vec::with_capacity(m * n);
                for &a in &u {
                    for &b in &wv {
                        mat.push(field.mul(a, b));
                    }
                }
                rank_one.push(mat);
            }
        }
        Ok(FormsGraph { m, n, field, rank_one })
    }

    pub fn vertex_count(&self) -> usize {
        (self.field.order() as usize).pow((self.m * self.n) as u32)
    }

    pub fn entries(&self, v: usize) -> Vec<u32> {
        radix_digits(v, self.field.order() as usize, self.m * self.n)
    }

    pub fn from_entries(&self, e: &[u32]) -> usize {
        e.iter().fold(0, |acc, &x| acc * self.field.order() as usize + x as usize)
    }

    pub fn matrix(&self, v: usize) -> Vec<Vec<u32>> {
        self.entries(v).chunks(self.n).map(|r| r.to_vec()).collect()
    }

    pub fn from_matrix(&self, m: &[Vec<u32>]) -> usize {
        self.from_entries(&m.concat())
    }

    pub fn for_each_neighbor(&self, v: usize, mut f: impl FnMut(usize)) {
        let e = self.entries(v);
        for r in &self.rank_one {
            let sum: Vec<u32> = e.iter().zip(r).map(|(&a, &b)| self.field.add(a, b)).collect();
            f(self.from_entries(&sum));
        }
    }

    pub fn rank_distance(&self, u: usize, v: usize) -> usize {
        let a = self.entries(u);
        let b = self.entries(v);
        let diff: Vec<u32> = a.iter().zip(&b).map(|(&x, &y)| self.field.sub(x, y)).collect();
        let rows: Vec<Vec<u32>> = diff.chunks(self.n).map(|r| r.to_vec()).collect();
        linalg::rank(&self.field, &rows)
    }

    pub fn label(&self, v: usize) -> String {
        let q = self.field.order();
        self.matrix(v)
            .iter()
            .map(|row| {
                if q <= 10 {
                    row.iter().map(|x| char::from_digit(*x, 10).unwrap()).collect::<String>()
                } else {
                    row.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
                }
            })
            .collect::<Vec<_>>()
            .join("/")
    }

    pub fn parse_label(&self, text: &str) -> Result<usize> {
        let q = self.field.order();
        let rows: Vec<Vec<u32>> = text
            .split('/')
            .map(|r| {
                if q <= 10 && !r.contains(',') {
                    r.trim().chars().map(|c| c.to_digit(10).ok_or_else(|| Error::Parse(format!("bad symbol {c:?}")))).collect()
                } else {
                    r.split(',').map(|s| s.trim().parse::<u32>().map_err(|e| Error::Parse(e.to_string()))).collect()
                }
            })
            .collect::<Result<_>>()?;
        if rows.len() != self.m || rows.iter().any(|r| r.len() != self.n || r.iter().any(|&x| x >= q)) {
            return Err(Error::Parse(format!("{text:?} is not a {}x{} matrix over GF({q})", self.m, self.n)));
        }
        Ok(self.from_matrix(&rows))
    }
}

fn radix_digits(v: usize, q: usize, len: usize) -> Vec<u32> {
    let mut out = vec![0u32; len];
    let mut v = v;
    for x in out.iter_mut().rev() {
        *x = (v % q) as u32;
        v /= q;
    }
    out
}
