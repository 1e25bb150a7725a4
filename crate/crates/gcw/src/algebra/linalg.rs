//! Dense linear algebra over a finite field. Matrices are row lists.

use super::FiniteField;

pub type Matrix = Vec<Vec<u32>>;

/// Reduces `rows` to reduced row echelon form in place, dropping zero rows.
/// Returns the pivot columns.
pub fn rref(f: &FiniteField, rows: &mut Matrix) -> Vec<usize> {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(pr) = (r..rows.len()).find(|&i| rows[i][c] != 0) else { continue };
        rows.swap(r, pr);
        let inv = f.inv(rows[r][c]).expect("nonzero pivot");
        for x in rows[r].iter_mut() {
            *x = f.mul(*x, inv);
        }
        for i in 0..rows.len() {
            if i != r && rows[i][c] != 0 {
                let factor = rows[i][c];
                for j in 0..ncols {
                    let t = f.mul(factor, rows[r][j]);
                    rows[i][j] = f.sub(rows[i][j], t);
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

pub fn rank(f: &FiniteField, rows: &[Vec<u32>]) -> usize {
    let mut m = rows.to_vec();
    rref(f, &mut m).len()
}

/// All linear combinations of `rows`, in the order of the coefficient vector
/// read as a base-q integer (first row most significant).
pub fn span(f: &FiniteField, rows: &[Vec<u32>]) -> Matrix {
    let n = rows.first().map_or(0, |r| r.len());
    let q = f.order() as usize;
    let total = q.pow(rows.len() as u32);
    let mut out = Vec::with_capacity(total);
    for code in 0..total {
        let mut v = vec![0u32; n];
        let mut c = code;
        for row in rows.iter().rev() {
            let a = (c % q) as u32;
            c /= q;
            if a != 0 {
                for (x, &y) in v.iter_mut().zip(row) {
                    *x = f.add(*x, f.mul(a, y));
                }
            }
        }
        out.push(v);
    }
    out
}

/// Basis of `{x : M xᵀ = 0}` for an `r × ncols` matrix `M`.
pub fn nullspace(f: &FiniteField, rows: &[Vec<u32>], ncols: usize) -> Matrix {
    let mut m = rows.to_vec();
    let pivots = rref(f, &mut m);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![0u32; ncols];
            v[fc] = 1;
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(m[i][fc]);
            }
            v
        })
        .collect()
}

pub fn mat_mul(f: &FiniteField, a: &[Vec<u32>], b: &[Vec<u32>]) -> Matrix {
    let cols = b.first().map_or(0, |r| r.len());
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| row.iter().zip(b).fold(0, |acc, (&x, brow)| f.add(acc, f.mul(x, brow[j]))))
                .collect()
        })
        .collect()
}

/// Row vector times matrix.
pub fn vec_mat(f: &FiniteField, v: &[u32], m: &[Vec<u32>]) -> Vec<u32> {
    let cols = m.first().map_or(0, |r| r.len());
    (0..cols).map(|j| v.iter().zip(m).fold(0, |acc, (&x, row)| f.add(acc, f.mul(x, row[j])))).collect()
}

pub fn identity(n: usize) -> Matrix {
    (0..n).map(|i| (0..n).map(|j| u32::from(i == j)).collect()).collect()
}

pub fn det(f: &FiniteField, m: &[Vec<u32>]) -> u32 {
    let n = m.len();
    let mut a = m.to_vec();
    let mut d = 1;
    for c in 0..n {
        let Some(pr) = (c..n).find(|&i| a[i][c] != 0) else { return 0 };
        if pr != c {
            a.swap(pr, c);
            d = f.neg(d);
        }
        d = f.mul(d, a[c][c]);
        let inv = f.inv(a[c][c]).expect("nonzero pivot");
        for i in c + 1..n {
            if a[i][c] != 0 {
                let factor = f.mul(a[i][c], inv);
                for j in c..n {
                    let t = f.mul(factor, a[c][j]);
                    a[i][j] = f.sub(a[i][j], t);
                }
            }
        }
    }
    d
}

/// Scales a nonzero vector so that its first nonzero entry is 1.
pub fn normalize(f: &FiniteField, v: &[u32]) -> Vec<u32> {
    let lead = v.iter().copied().find(|&x| x != 0).expect("nonzero vector");
    let inv = f.inv(lead).expect("nonzero");
    v.iter().map(|&x| f.mul(x, inv)).collect()
}

/// Normalized representatives of the 1-spaces of `GF(q)^n`, in
/// lexicographic order (first coordinate most significant).
pub fn projective_points(f: &FiniteField, n: usize) -> Matrix {
    let q = f.order() as usize;
    let mut out = Vec::new();
    for code in 1..q.pow(n as u32) {
        let mut v = vec![0u32; n];
        let mut c = code;
        for x in v.iter_mut().rev() {
            *x = (c % q) as u32;
            c /= q;
        }
        if v.iter().find(|&&x| x != 0) == Some(&1) {
            out.push(v);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_and_nullspace() {
        let f = FiniteField::new(3, 1).unwrap();
        let m = vec![vec![1, 2, 0, 1], vec![2, 1, 0, 2], vec![0, 0, 1, 1]];
        assert_eq!(rank(&f, &m), 2);
        let ns = nullspace(&f, &m, 4);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            for row in &m {
                let dot = row.iter().zip(v).fold(0, |a, (&x, &y)| f.add(a, f.mul(x, y)));
                assert_eq!(dot, 0);
            }
        }
    }

    #[test]
    fn determinant() {
        let f = FiniteField::new(5, 1).unwrap();
        assert_eq!(det(&f, &[vec![1, 2], vec![3, 4]]), f.sub(4, 6 % 5));
        assert_eq!(det(&f, &identity(3)), 1);
    }

    #[test]
    fn projective_point_counts() {
        let f = FiniteField::new(3, 1).unwrap();
        let pts = projective_points(&f, 2);
        assert_eq!(pts, vec![vec![0, 1], vec![1, 0], vec![1, 1], vec![1, 2]]);
        let f4 = FiniteField::new(2, 2).unwrap();
        assert_eq!(projective_points(&f4, 4).len(), 85);
    }
}
