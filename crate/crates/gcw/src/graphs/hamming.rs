use crate::{Error, Result};

/// H(n, q): n-tuples over `{0..q}`. Vertex id is the mixed-radix value with
/// entry 0 most significant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hamming {
    pub n: usize,
    pub q: usize,
    weights: Vec<usize>,
}

impl Hamming {
    pub fn new(n: usize, q: usize) -> Result<Self> {
        if n < 1 || q < 2 {
            return Err(Error::InvalidParameter(format!("H({n},{q}) needs n >= 1, q >= 2")));
        }
        let total = (q as u128).checked_pow(n as u32).filter(|&t| t <= 1u128 << 62);
        if total.is_none() {
            return Err(Error::InvalidParameter(format!("H({n},{q}) exceeds 2^62 vertices")));
        }
        let weights = (0..n).map(|i| q.pow((n - 1 - i) as u32)).collect();
        Ok(Hamming { n, q, weights })
    }

    pub fn vertex_count(&self) -> usize {
        self.q.pow(self.n as u32)
    }

    /// Place value of entry `i`.
    #[inline]
    pub fn weight_of_entry(&self, i: usize) -> usize {
        self.weights[i]
    }

    #[inline]
    pub fn digit(&self, v: usize, i: usize) -> usize {
        v / self.weights[i] % self.q
    }

    pub fn digits(&self, v: usize) -> Vec<u32> {
        let mut out = vec![0u32; self.n];
        let mut v = v;
        for i in (0..self.n).rev() {
            out[i] = (v % self.q) as u32;
            v /= self.q;
        }
        out
    }

    pub fn from_digits(&self, d: &[u32]) -> usize {
        d.iter().fold(0, |acc, &x| acc * self.q + x as usize)
    }

    #[inline]
    pub fn for_each_neighbor(&self, v: usize, mut f: impl FnMut(usize)) {
        if self.q == 2 {
            for i in 0..self.n {
                f(v ^ (1 << i));
            }
            return;
        }
        for i in 0..self.n {
            let w = self.weights[i];
            let d = v / w % self.q;
            let base = v - d * w;
            for a in 0..self.q {
                if a != d {
                    f(base + a * w);
                }
            }
        }
    }

    /// Number of nonzero entries.
    pub fn weight(&self, v: usize) -> usize {
        if self.q == 2 {
            return v.count_ones() as usize;
        }
        let mut v = v;
        let mut w = 0;
        while v > 0 {
            w += usize::from(v % self.q != 0);
            v /= self.q;
        }
        w
    }

    pub fn distance(&self, u: usize, v: usize) -> usize {
        if self.q == 2 {
            return (u ^ v).count_ones() as usize;
        }
        let (mut u, mut v, mut d) = (u, v, 0);
        for _ in 0..self.n {
            d += usize::from(u % self.q != v % self.q);
            u /= self.q;
            v /= self.q;
        }
        d
    }

    /// Vertices differing from `v` in exactly `i` entries, sorted.
    pub fn sphere(&self, v: usize, i: usize) -> Vec<usize> {
        let mut out = Vec::new();
        if i > self.n {
            return out;
        }
        let digits = self.digits(v);
        let mut support: Vec<usize> = (0..i).collect();
        loop {
            // every choice of new symbols on the support
            let mut offs = vec![1usize; i];
            'sym: loop {
                let mut w = v;
                for (k, &pos) in support.iter().enumerate() {
                    let old = digits[pos] as usize;
                    let new = (old + offs[k]) % self.q;
                    w = w - old * self.weights[pos] + new * self.weights[pos];
                }
                out.push(w);
                let mut k = 0;
                loop {
                    if k == i {
                        break 'sym;
                    }
                    offs[k] += 1;
                    if offs[k] < self.q {
                        break;
                    }
                    offs[k] = 1;
                    k += 1;
                }
            }
            // next support in lexicographic order
            let mut k = i;
            loop {
                if k == 0 {
                    out.sort_unstable();
                    return out;
                }
                k -= 1;
                if support[k] < self.n - i + k {
                    support[k] += 1;
                    for j in k + 1..i {
                        support[j] = support[j - 1] + 1;
                    }
                    break;
                }
            }
        }
    }

    pub fn label(&self, v: usize) -> String {
        let d = self.digits(v);
        if self.q <= 10 {
            d.iter().map(|x| char::from_digit(*x, 10).unwrap()).collect()
        } else {
            d.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
        }
    }

    pub fn parse_label(&self, text: &str) -> Result<usize> {
        let digits: Vec<u32> = if text.contains(',') || self.q > 10 {
            text.split(',')
                .map(|s| s.trim().parse::<u32>().map_err(|e| Error::Parse(format!("{s:?}: {e}"))))
                .collect::<Result<_>>()?
        } else {
            text.chars()
                .filter(|c| !c.is_whitespace())
                .map(|c| c.to_digit(10).ok_or_else(|| Error::Parse(format!("bad symbol {c:?}"))))
                .collect::<Result<_>>()?
        };
        if digits.len() != self.n || digits.iter().any(|&x| x as usize >= self.q) {
            return Err(Error::Parse(format!("{text:?} is not a vertex of H({},{})", self.n, self.q)));
        }
        Ok(self.from_digits(&digits))
    }
}
