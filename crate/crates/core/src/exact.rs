//! Small exact linear algebra over `Rational64` and `i64`.

use crate::error::{Error, Result};
use num_integer::Integer;
use num_rational::Rational64;
use num_traits::{One, Signed, Zero};

pub type RatMatrix = Vec<Vec<Rational64>>;

pub fn to_rational(a: &[Vec<i64>]) -> RatMatrix {
    a.iter()
        .map(|row| row.iter().map(|&x| Rational64::from_integer(x)).collect())
        .collect()
}

pub fn transpose<T: Clone>(a: &[Vec<T>]) -> Vec<Vec<T>> {
    if a.is_empty() {
        return Vec::new();
    }
    (0..a[0].len())
        .map(|j| a.iter().map(|row| row[j].clone()).collect())
        .collect()
}

pub fn mat_mul_i64(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let inner = b.len();
    let cols = if inner == 0 { 0 } else { b[0].len() };
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| (0..inner).map(|k| row[k] * b[k][j]).sum())
                .collect()
        })
        .collect()
}

pub fn mat_mul(a: &RatMatrix, b: &RatMatrix) -> RatMatrix {
    let inner = b.len();
    let cols = if inner == 0 { 0 } else { b[0].len() };
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| {
                    (0..inner).fold(Rational64::zero(), |acc, k| acc + row[k] * b[k][j])
                })
                .collect()
        })
        .collect()
}

/// Determinant by Gaussian elimination with exact pivots.
pub fn det(a: &RatMatrix) -> Rational64 {
    let n = a.len();
    let mut m = a.clone();
    let mut d = Rational64::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| !m[r][c].is_zero()) else {
            return Rational64::zero();
        };
        if p != c {
            m.swap(p, c);
            d = -d;
        }
        let piv = m[c][c];
        d *= piv;
        for r in c + 1..n {
            if m[r][c].is_zero() {
                continue;
            }
            let f = m[r][c] / piv;
            for k in c..n {
                let v = m[c][k];
                m[r][k] -= f * v;
            }
        }
    }
    d
}

pub fn det_i64(a: &[Vec<i64>]) -> i64 {
    let d = det(&to_rational(a));
    assert!(d.is_integer());
    d.to_integer()
}

/// Solves `a * x = b` for a square nonsingular `a`.
pub fn solve(a: &RatMatrix, b: &RatMatrix) -> Result<RatMatrix> {
    let n = a.len();
    let w = b.first().map_or(0, |r| r.len());
    let mut m: RatMatrix = a
        .iter()
        .zip(b)
        .map(|(ra, rb)| ra.iter().chain(rb).copied().collect())
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&r| !m[r][c].is_zero()).ok_or(Error::Singular)?;
        m.swap(p, c);
        let piv = m[c][c];
        for k in c..n + w {
            m[c][k] /= piv;
        }
        for r in 0..n {
            if r == c || m[r][c].is_zero() {
                continue;
            }
            let f = m[r][c];
            for k in c..n + w {
                let v = m[c][k];
                m[r][k] -= f * v;
            }
        }
    }
    Ok(m.into_iter().map(|row| row[n..].to_vec()).collect())
}

pub fn inverse(a: &RatMatrix) -> Result<RatMatrix> {
    let n = a.len();
    let id = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { Rational64::one() } else { Rational64::zero() })
                .collect()
        })
        .collect();
    solve(a, &id)
}

/// Pivots `d` and unit lower factor `l` of `a = l diag(d) l^T` (no pivoting).
/// Returns `None` when a zero pivot is met.
pub fn ldl(a: &RatMatrix) -> Option<(RatMatrix, Vec<Rational64>)> {
    let n = a.len();
    let mut l = vec![vec![Rational64::zero(); n]; n];
    let mut d = vec![Rational64::zero(); n];
    for j in 0..n {
        let mut s = a[j][j];
        for k in 0..j {
            s -= l[j][k] * l[j][k] * d[k];
        }
        if s.is_zero() {
            return None;
        }
        d[j] = s;
        l[j][j] = Rational64::one();
        for i in j + 1..n {
            let mut t = a[i][j];
            for k in 0..j {
                t -= l[i][k] * l[j][k] * d[k];
            }
            l[i][j] = t / s;
        }
    }
    Some((l, d))
}

pub fn is_symmetric<T: PartialEq>(a: &[Vec<T>]) -> bool {
    (0..a.len()).all(|i| (0..i).all(|j| a[i][j] == a[j][i]))
}

pub fn is_positive_definite(a: &RatMatrix) -> bool {
    is_symmetric(a) && ldl(a).is_some_and(|(_, d)| d.iter().all(|x| x.is_positive()))
}

/// Invariant factors of an integer matrix (Smith normal form diagonal, zeros dropped).
pub fn invariant_factors(a: &[Vec<i64>]) -> Vec<i64> {
    let mut m: Vec<Vec<i64>> = a.to_vec();
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut out = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        // smallest nonzero entry in the trailing block
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if m[i][j] != 0 && best.is_none_or(|(bi, bj)| m[i][j].abs() < m[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((bi, bj)) = best else { break };
        m.swap(t, bi);
        for row in m.iter_mut() {
            row.swap(t, bj);
        }
        loop {
            let p = m[t][t];
            let mut dirty = false;
            for i in t + 1..rows {
                let q = Integer::div_floor(&m[i][t], &p);
                if q != 0 {
                    for j in t..cols {
                        let v = m[t][j];
                        m[i][j] -= q * v;
                    }
                }
                dirty |= m[i][t] != 0;
            }
            for j in t + 1..cols {
                let q = Integer::div_floor(&m[t][j], &p);
                if q != 0 {
                    for i in t..rows {
                        let v = m[i][t];
                        m[i][j] -= q * v;
                    }
                }
                dirty |= m[t][j] != 0;
            }
            if !dirty {
                // divisibility of the trailing block
                let bad = (t + 1..rows)
                    .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
                    .find(|&(i, j)| m[i][j] % p != 0);
                match bad {
                    None => break,
                    Some((i, _)) => {
                        for j in t..cols {
                            let v = m[i][j];
                            m[t][j] += v;
                        }
                        continue;
                    }
                }
            }
            // move the smallest nonzero of row/column t to the pivot
            let mut best = (t, t);
            for i in t..rows {
                if m[i][t] != 0 && m[i][t].abs() < m[best.0][best.1].abs() {
                    best = (i, t);
                }
            }
            for j in t..cols {
                if m[t][j] != 0 && m[t][j].abs() < m[best.0][best.1].abs() {
                    best = (t, j);
                }
            }
            m.swap(t, best.0);
            for row in m.iter_mut() {
                row.swap(t, best.1);
            }
        }
        out.push(m[t][t].abs());
        t += 1;
    }
    out
}
