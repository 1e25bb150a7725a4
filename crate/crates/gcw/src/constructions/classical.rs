//! Named codes with fixed parameters.

use std::sync::Arc;

use serde::Serialize;

use super::product::rep_nq;
use crate::algebra::FiniteField;
use crate::codecore::{parse_code_text, Code};
use crate::graphs::Graph;
use crate::{Error, Result};

/// `x^11 + x^9 + x^7 + x^6 + x^5 + x + 1`, low degree first.
pub const GOLAY23_POLY: [u32; 12] = [1, 1, 0, 0, 0, 1, 1, 1, 0, 1, 0, 1];
/// `x^5 + x^4 − x^3 + x^2 − 1` over `F_3`, low degree first.
pub const GOLAY11_POLY: [u32; 6] = [2, 0, 1, 2, 1, 1];

const NORDSTROM_ROBINSON16: &str = include_str!("../../data/nordstrom_robinson16.txt");

/// Generator rows of the cyclic code of length `n` generated by `poly`.
pub fn cyclic_generator(n: usize, poly: &[u32]) -> Vec<Vec<u32>> {
    (0..=n - poly.len())
        .map(|s| (0..n).map(|j| if j >= s && j - s < poly.len() { poly[j - s] } else { 0 }).collect())
        .collect()
}

/// Appends a coordinate making every row sum to zero.
fn extend_by_parity(f: &FiniteField, rows: &[Vec<u32>]) -> Vec<Vec<u32>> {
    rows.iter()
        .map(|r| {
            let s = r.iter().fold(0, |acc, &x| f.add(acc, x));
            let mut out = r.clone();
            out.push(f.neg(s));
            out
        })
        .collect()
}

/// Paley order-12 Hadamard matrix from `F_11`, normalized so the first row
/// and column are all `+1`.
pub fn hadamard12_matrix() -> Vec<Vec<i8>> {
    let q = 11i64;
    let chi = |a: i64| -> i8 {
        let a = a.rem_euclid(q);
        if a == 0 {
            0
        } else if (1..q).any(|x| x * x % q == a) {
            1
        } else {
            -1
        }
    };
    let n = 12;
    let mut h = vec![vec![0i8; n]; n];
    for i in 0..n {
        for j in 0..n {
            let s = match (i, j) {
                (0, 0) => 0,
                (0, _) => 1,
                (_, 0) => -1,
                _ => chi(j as i64 - i as i64),
            };
            h[i][j] = s + i8::from(i == j);
        }
    }
    for j in 0..n {
        if h[0][j] < 0 {
            h.iter_mut().for_each(|r| r[j] = -r[j]);
        }
    }
    for r in h.iter_mut() {
        if r[0] < 0 {
            r.iter_mut().for_each(|x| *x = -*x);
        }
    }
    h
}

fn binary_code(n: usize, words: impl IntoIterator<Item = Vec<u32>>) -> Result<Code> {
    let g = Graph::hamming(n, 2)?;
    let h = g.as_hamming().unwrap().clone();
    Code::new(Arc::new(g), words.into_iter().map(|w| h.from_digits(&w)))
}

fn hadamard_words() -> Vec<Vec<u32>> {
    let h = hadamard12_matrix();
    let mut out: Vec<Vec<u32>> = h.iter().map(|r| r.iter().map(|&x| u32::from(x < 0)).collect()).collect();
    out.extend(h.iter().map(|r| r.iter().map(|&x| u32::from(x > 0)).collect::<Vec<u32>>()));
    out
}

pub const CLASSICAL_NAMES: [&str; 9] = [
    "golay23",
    "golay24",
    "golay11",
    "golay12",
    "hadamard12",
    "punct_hadamard11",
    "even_punct_hadamard11",
    "nordstrom_robinson15",
    "nordstrom_robinson16",
];

pub fn classical_code(name: &str) -> Result<Code> {
    let f2 = || FiniteField::of_order(2).map(Arc::new);
    let f3 = || FiniteField::of_order(3).map(Arc::new);
    let code = match name {
        "golay23" => Code::linear(f2()?, cyclic_generator(23, &GOLAY23_POLY))?,
        "golay24" => {
            let f = f2()?;
            let rows = extend_by_parity(&f, &cyclic_generator(23, &GOLAY23_POLY));
            Code::linear(f, rows)?
        }
        "golay11" => Code::linear(f3()?, cyclic_generator(11, &GOLAY11_POLY))?,
        "golay12" => {
            let f = f3()?;
            let rows = extend_by_parity(&f, &cyclic_generator(11, &GOLAY11_POLY));
            Code::linear(f, rows)?
        }
        "hadamard12" => binary_code(12, hadamard_words())?,
        "punct_hadamard11" => binary_code(11, hadamard_words().into_iter().map(|w| w[1..].to_vec()))?,
        "even_punct_hadamard11" => binary_code(
            11,
            hadamard_words().into_iter().map(|w| w[1..].to_vec()).filter(|w| w.iter().sum::<u32>() % 2 == 0),
        )?,
        "nordstrom_robinson16" => parse_code_text(Arc::new(Graph::hamming(16, 2)?), NORDSTROM_ROBINSON16)?,
        "nordstrom_robinson15" => {
            let nr = parse_code_text(Arc::new(Graph::hamming(16, 2)?), NORDSTROM_ROBINSON16)?;
            let h = nr.graph().as_hamming().unwrap().clone();
            binary_code(15, nr.words().iter().map(|&w| h.digits(w)[1..].to_vec()))?
        }
        _ => return Err(Error::InvalidParameter(format!("unknown classical code {name:?}"))),
    };
    Ok(code.with_name(name))
}

/// Expected parameters `(n, |C|, δ, ρ)`.
#[derive(Debug, Clone, Serialize)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub graph: &'static str,
    pub size: u64,
    pub min_distance: usize,
    pub covering_radius: usize,
    pub source: &'static str,
    /// Covering radius quoted in the classification table, when it differs.
    pub quoted_covering_radius: Option<usize>,
}

pub fn catalog() -> Vec<CatalogEntry> {
    let e = |name, graph, size, min_distance, covering_radius, source| CatalogEntry {
        name,
        graph,
        size,
        min_distance,
        covering_radius,
        source,
        quoted_covering_radius: None,
    };
    let mut hadamard = e("hadamard12", "hamming:n=12,q=2", 24, 6, 4, "Paley Hadamard matrix rows and complements");
    hadamard.quoted_covering_radius = Some(3);
    vec![
        e("golay23", "hamming:n=23,q=2", 4096, 7, 3, "cyclic generator polynomial"),
        e("golay24", "hamming:n=24,q=2", 4096, 8, 4, "parity extension of golay23"),
        e("golay11", "hamming:n=11,q=3", 729, 5, 2, "cyclic generator polynomial"),
        e("golay12", "hamming:n=12,q=3", 729, 6, 3, "parity extension of golay11"),
        hadamard,
        e("punct_hadamard11", "hamming:n=11,q=2", 24, 5, 3, "hadamard12 with entry 0 deleted"),
        e("even_punct_hadamard11", "hamming:n=11,q=2", 12, 6, 5, "even-weight words of punct_hadamard11"),
        e("nordstrom_robinson15", "hamming:n=15,q=2", 256, 5, 3, "nordstrom_robinson16 with entry 0 deleted"),
        e("nordstrom_robinson16", "hamming:n=16,q=2", 256, 6, 4, "stored data: Gray image of the octacode"),
    ]
}

/// `Rep_n(q)` with a descriptive name; convenience for catalog users.
pub fn repetition(n: usize, q: usize) -> Result<Code> {
    Ok(rep_nq(n, q)?.with_name(&format!("rep_{n}_{q}")))
}
