//! Quivers as skew-symmetric integer matrices, their mutations, and mutation loops.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// `b[i][j] > 0` counts arrows `i -> j`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Quiver {
    pub b: Vec<Vec<i64>>,
}

impl Quiver {
    pub fn new(b: Vec<Vec<i64>>) -> Result<Self> {
        let n = b.len();
        if let Some(row) = b.iter().find(|row| row.len() != n) {
            return Err(Error::Dimension { expected: n, got: row.len() });
        }
        let q = Quiver { b };
        if !q.is_skew() {
            return Err(Error::NotSkew);
        }
        Ok(q)
    }

    pub fn empty(n: usize) -> Self {
        Quiver { b: vec![vec![0; n]; n] }
    }

    /// Adds `count` arrows `i -> j`.
    pub fn add_arrows(&mut self, i: usize, j: usize, count: i64) {
        self.b[i][j] += count;
        self.b[j][i] -= count;
    }

    pub fn n(&self) -> usize {
        self.b.len()
    }

    pub fn arrows(&self, i: usize, j: usize) -> i64 {
        self.b[i][j].max(0)
    }

    pub fn is_skew(&self) -> bool {
        let n = self.n();
        (0..n).all(|i| self.b[i][i] == 0 && (0..i).all(|j| self.b[i][j] == -self.b[j][i]))
    }

    pub fn mutate(&self, k: usize) -> Result<Quiver> {
        let n = self.n();
        if k >= n {
            return Err(Error::VertexOutOfRange { vertex: k, n });
        }
        let b = &self.b;
        let mut out = b.clone();
        for i in 0..n {
            for j in 0..n {
                out[i][j] = if i == k || j == k {
                    -b[i][j]
                } else if b[i][k] > 0 && b[k][j] > 0 {
                    b[i][j] + b[i][k] * b[k][j]
                } else if b[i][k] < 0 && b[k][j] < 0 {
                    b[i][j] - b[i][k] * b[k][j]
                } else {
                    b[i][j]
                };
            }
        }
        let q = Quiver { b: out };
        debug_assert!(q.is_skew());
        Ok(q)
    }

    /// `sigma(Q)_{ij} = Q_{nu^-1(i), nu^-1(j)}`.
    pub fn apply_perm(&self, nu: &Permutation) -> Result<Quiver> {
        let n = self.n();
        if nu.len() != n {
            return Err(Error::Dimension { expected: n, got: nu.len() });
        }
        let inv = nu.inverse();
        let b = (0..n)
            .map(|i| (0..n).map(|j| self.b[inv.images[i]][inv.images[j]]).collect())
            .collect();
        Ok(Quiver { b })
    }
}

/// `images[i] = nu(i)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Permutation {
    pub images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || seen[x] {
                return Err(Error::NotPermutation);
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Self {
        Permutation { images: (0..n).collect() }
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x] = i;
        }
        Permutation { images: inv }
    }

    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation { images: other.images.iter().map(|&i| self.images[i]).collect() }
    }

    /// Orbit index of every point.
    pub fn orbits(&self) -> Vec<usize> {
        let n = self.len();
        let mut id = vec![usize::MAX; n];
        let mut next = 0;
        for s in 0..n {
            if id[s] != usize::MAX {
                continue;
            }
            let mut i = s;
            while id[i] == usize::MAX {
                id[i] = next;
                i = self.images[i];
            }
            next += 1;
        }
        id
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MutationLoop {
    pub quiver: Quiver,
    pub m: Vec<usize>,
    pub nu: Permutation,
}

impl MutationLoop {
    /// Checks closure `nu(Q(T)) = Q(0)`.
    pub fn new(quiver: Quiver, m: Vec<usize>, nu: Permutation) -> Result<Self> {
        let n = quiver.n();
        if nu.len() != n {
            return Err(Error::Dimension { expected: n, got: nu.len() });
        }
        let lp = MutationLoop { quiver, m, nu };
        let last = lp.quivers()?.pop().unwrap();
        if last.apply_perm(&lp.nu)? != lp.quiver {
            return Err(Error::NotALoop);
        }
        Ok(lp)
    }

    pub fn n(&self) -> usize {
        self.quiver.n()
    }

    pub fn len(&self) -> usize {
        self.m.len()
    }

    pub fn is_empty(&self) -> bool {
        self.m.is_empty()
    }

    /// `Q(0), ..., Q(T)`.
    pub fn quivers(&self) -> Result<Vec<Quiver>> {
        let mut out = vec![self.quiver.clone()];
        for &k in &self.m {
            let next = out.last().unwrap().mutate(k)?;
            out.push(next);
        }
        Ok(out)
    }

    /// Every nu-orbit is hit by some `m_t`, and no orbit is hit twice.
    pub fn is_regular(&self) -> bool {
        let orbit = self.nu.orbits();
        let count = orbit.iter().max().map_or(0, |&x| x + 1);
        let mut hit = vec![0usize; count];
        for &k in &self.m {
            hit[orbit[k]] += 1;
        }
        hit.iter().all(|&h| h == 1)
    }
}
