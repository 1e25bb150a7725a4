use serde::Serialize;

use super::is_prime;
use crate::{Error, Result};

/// Primitive polynomials used for small fields, low coefficient first.
const POLY_TABLE: &[(u32, u32, &[u32])] = &[
    (2, 2, &[1, 1, 1]),
    (2, 3, &[1, 1, 0, 1]),
    (2, 4, &[1, 1, 0, 0, 1]),
    (2, 5, &[1, 0, 1, 0, 0, 1]),
    (3, 2, &[2, 2, 1]),
    (3, 3, &[1, 2, 0, 1]),
    (5, 2, &[2, 4, 1]),
];

const MAX_ORDER: u32 = 1 << 16;

/// GF(p^d). Elements are indices `0..q`; index `Σ c_j p^j` is the residue
/// `Σ c_j x^j` modulo the recorded primitive polynomial.
#[derive(Debug, Clone, Serialize)]
pub struct FiniteField {
    p: u32,
    d: u32,
    q: u32,
    modulus: Vec<u32>,
    #[serde(skip)]
    exp: Vec<u32>,
    #[serde(skip)]
    log: Vec<u32>,
    #[serde(skip)]
    add: Vec<u16>,
}

impl PartialEq for FiniteField {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.d == other.d && self.modulus == other.modulus
    }
}
impl Eq for FiniteField {}

impl FiniteField {
    pub fn new(p: u32, d: u32) -> Result<Self> {
        if !is_prime(p as u64) {
            return Err(Error::InvalidParameter(format!("{p} is not prime")));
        }
        if d == 0 {
            return Err(Error::InvalidParameter("extension degree must be positive".into()));
        }
        let q = (p as u64).checked_pow(d).filter(|&q| q <= MAX_ORDER as u64).ok_or_else(|| {
            Error::InvalidParameter(format!("field order {p}^{d} exceeds {MAX_ORDER}"))
        })? as u32;
        let modulus = if d == 1 {
            vec![p - smallest_primitive_root(p), 1]
        } else if let Some((_, _, c)) = POLY_TABLE.iter().find(|(pp, dd, _)| *pp == p && *dd == d) {
            c.to_vec()
        } else {
            search_primitive(p, d)
        };
        let mut field = FiniteField { p, d, q, modulus, exp: vec![], log: vec![], add: vec![] };
        field.build_tables()?;
        Ok(field)
    }

    /// GF(q) for a prime power q.
    pub fn of_order(q: u32) -> Result<Self> {
        let (p, d) = super::prime_power(q as u64)
            .ok_or_else(|| Error::InvalidParameter(format!("{q} is not a prime power")))?;
        Self::new(p as u32, d)
    }

    fn build_tables(&mut self) -> Result<()> {
        let (p, d, q) = (self.p, self.d as usize, self.q);
        self.exp = vec![0; q as usize - 1];
        self.log = vec![0; q as usize];
        // coefficient vector of the current power of x
        let mut cur = vec![0u32; d];
        cur[0] = 1;
        for i in 0..(q - 1) as usize {
            let idx = self.encode(&cur);
            if i > 0 && idx == 1 {
                return Err(Error::InvalidParameter("modulus is not primitive".into()));
            }
            self.exp[i] = idx;
            self.log[idx as usize] = i as u32;
            // multiply by x
            if d == 1 {
                cur[0] = cur[0] * (p - self.modulus[0]) % p;
            } else {
                let top = cur[d - 1];
                for j in (1..d).rev() {
                    cur[j] = cur[j - 1];
                }
                cur[0] = 0;
                for j in 0..d {
                    cur[j] = (cur[j] + (p - self.modulus[j]) * top) % p;
                }
            }
        }
        if q <= 256 {
            let mut add = vec![0u16; (q * q) as usize];
            for a in 0..q {
                for b in 0..q {
                    add[(a * q + b) as usize] = self.add_digits(a, b) as u16;
                }
            }
            self.add = add;
        }
        Ok(())
    }

    fn encode(&self, coeffs: &[u32]) -> u32 {
        coeffs.iter().rev().fold(0, |acc, &c| acc * self.p + c)
    }

    /// Coefficient vector of an element, low degree first.
    pub fn coefficients(&self, a: u32) -> Vec<u32> {
        let mut v = Vec::with_capacity(self.d as usize);
        let mut a = a;
        for _ in 0..self.d {
            v.push(a % self.p);
            a /= self.p;
        }
        v
    }

    fn add_digits(&self, a: u32, b: u32) -> u32 {
        if self.p == 2 {
            return a ^ b;
        }
        let (mut a, mut b, mut r, mut w) = (a, b, 0, 1);
        for _ in 0..self.d {
            r += ((a % self.p + b % self.p) % self.p) * w;
            a /= self.p;
            b /= self.p;
            w *= self.p;
        }
        r
    }

    pub fn p(&self) -> u32 {
        self.p
    }
    pub fn degree(&self) -> u32 {
        self.d
    }
    pub fn order(&self) -> u32 {
        self.q
    }
    /// Modulus coefficients, low degree first, leading 1 included.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }
    pub fn zero(&self) -> u32 {
        0
    }
    pub fn one(&self) -> u32 {
        1
    }
    /// The primitive element `x`.
    pub fn generator(&self) -> u32 {
        self.exp[if self.q > 2 { 1 } else { 0 }]
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        if !self.add.is_empty() {
            self.add[(a * self.q + b) as usize] as u32
        } else {
            self.add_digits(a, b)
        }
    }

    pub fn neg(&self, a: u32) -> u32 {
        if self.p == 2 {
            return a;
        }
        let mut a = a;
        let (mut r, mut w) = (0, 1);
        for _ in 0..self.d {
            r += ((self.p - a % self.p) % self.p) * w;
            a /= self.p;
            w *= self.p;
        }
        r
    }

    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        let s = self.log[a as usize] + self.log[b as usize];
        self.exp[(s % (self.q - 1)) as usize]
    }

    pub fn inv(&self, a: u32) -> Option<u32> {
        if a == 0 {
            return None;
        }
        let l = self.log[a as usize];
        Some(self.exp[((self.q - 1 - l) % (self.q - 1)) as usize])
    }

    pub fn div(&self, a: u32, b: u32) -> Option<u32> {
        self.inv(b).map(|bi| self.mul(a, bi))
    }

    pub fn pow(&self, a: u32, e: u64) -> u32 {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let l = self.log[a as usize] as u64 * (e % (self.q as u64 - 1));
        self.exp[(l % (self.q as u64 - 1)) as usize]
    }

    /// Discrete logarithm to the base `generator()`.
    pub fn log(&self, a: u32) -> Option<u32> {
        (a != 0).then(|| self.log[a as usize])
    }

    /// `generator()^k`.
    pub fn exp(&self, k: u64) -> u32 {
        self.exp[(k % (self.q as u64 - 1)) as usize]
    }

    pub fn elements(&self) -> std::ops::Range<u32> {
        0..self.q
    }

    /// Embedding of a subfield `sub` (same characteristic, degree dividing
    /// ours) as a table from `sub` indices to indices of `self`.
    pub fn subfield_embedding(&self, sub: &FiniteField) -> Result<Vec<u32>> {
        if sub.p != self.p || self.d % sub.d != 0 {
            return Err(Error::InvalidParameter(format!(
                "GF({}) is not a subfield of GF({})",
                sub.q, self.q
            )));
        }
        let root = (0..self.q)
            .find(|&r| {
                self.pow(r, sub.q as u64) == r && {
                    let mut acc = 0;
                    for &c in sub.modulus.iter().rev() {
                        acc = self.add(self.mul(acc, r), c);
                    }
                    acc == 0
                }
            })
            .ok_or_else(|| Error::Contradiction("no root of the subfield modulus".into()))?;
        Ok((0..sub.q)
            .map(|a| {
                sub.coefficients(a)
                    .iter()
                    .enumerate()
                    .fold(0, |acc, (j, &c)| self.add(acc, self.mul(c, self.pow(root, j as u64))))
            })
            .collect())
    }
}

fn smallest_primitive_root(p: u32) -> u32 {
    if p == 2 {
        return 1;
    }
    (2..p)
        .find(|&g| {
            let mut x = 1u64;
            for k in 1..p - 1 {
                x = x * g as u64 % p as u64;
                if x == 1 && k < p - 1 {
                    return false;
                }
            }
            true
        })
        .expect("every prime has a primitive root")
}

/// First monic primitive polynomial of degree `d` over GF(p), ordered by
/// coefficient vector read as a base-p integer.
fn search_primitive(p: u32, d: u32) -> Vec<u32> {
    let q = p.pow(d);
    let du = d as usize;
    'cand: for code in 0..q {
        let mut low = vec![0u32; du];
        let mut c = code;
        for x in low.iter_mut() {
            *x = c % p;
            c /= p;
        }
        if low[0] == 0 {
            continue;
        }
        let mut cur = vec![0u32; du];
        cur[0] = 1;
        for i in 1..q {
            let top = cur[du - 1];
            for j in (1..du).rev() {
                cur[j] = cur[j - 1];
            }
            cur[0] = 0;
            for j in 0..du {
                cur[j] = (cur[j] + (p - low[j]) * top) % p;
            }
            let is_one = cur[0] == 1 && cur[1..].iter().all(|&x| x == 0);
            if is_one {
                if i == q - 1 {
                    let mut m = low;
                    m.push(1);
                    return m;
                }
                continue 'cand;
            }
        }
    }
    unreachable!("primitive polynomials exist for every degree")
}


/// GF(q^n) as an n-dimensional space over GF(q) with basis
/// `1, θ, .., θ^{n−1}` for the primitive element θ.
#[derive(Debug, Clone)]
pub struct FieldReduction {
    pub big: FiniteField,
    pub small: FiniteField,
    embedding: Vec<u32>,
    coords: Vec<Vec<u32>>,
}

impl FieldReduction {
    pub fn new(q: u32, n: u32) -> Result<Self> {
        let small = FiniteField::of_order(q)?;
        let order = (q as u64).checked_pow(n).filter(|&o| o <= MAX_ORDER as u64).ok_or_else(|| {
            Error::InvalidParameter(format!("field order {q}^{n} exceeds {MAX_ORDER}"))
        })? as u32;
        let big = FiniteField::of_order(order)?;
        let embedding = big.subfield_embedding(&small)?;
        let theta = big.generator();
        let basis: Vec<u32> = (0..n).map(|j| big.pow(theta, j as u64)).collect();
        let mut coords = vec![Vec::new(); order as usize];
        for code in 0..order {
            let mut c = code;
            let v: Vec<u32> = (0..n)
                .map(|_| {
                    let d = c % q;
                    c /= q;
                    d
                })
                .collect();
            let x = v.iter().zip(&basis).fold(0, |acc, (&a, &b)| big.add(acc, big.mul(embedding[a as usize], b)));
            coords[x as usize] = v;
        }
        if coords.iter().any(|c| c.is_empty()) {
            return Err(Error::Contradiction("powers of the primitive element are not a basis".into()));
        }
        Ok(FieldReduction { big, small, embedding, coords })
    }

    /// Coordinates of an element of the big field over the small one.
    pub fn coords(&self, x: u32) -> &[u32] {
        &self.coords[x as usize]
    }

    /// Image of a small-field element in the big field.
    pub fn embed(&self, a: u32) -> u32 {
        self.embedding[a as usize]
    }
}
