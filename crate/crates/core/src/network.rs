//! Mutation networks, Neumann-Zagier matrices, the closed-form `K`, and the group `H`.

use crate::dynkin::{build_root_system, DynkinType};
use crate::error::{Error, Result};
use crate::exact::{self, RatMatrix};
use crate::family::FamilyLoop;
use crate::quiver::MutationLoop;
use num_rational::Rational64;
use serde::Serialize;

/// Rows are black vertices (classes of `(i, t)`), columns are mutation steps.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MutationNetwork {
    /// `class[t][i]` is the black vertex containing `(i, t)`, `0 <= t <= T`.
    pub class: Vec<Vec<usize>>,
    pub n_classes: usize,
    pub n0: Vec<Vec<i64>>,
    pub nplus: Vec<Vec<i64>>,
    pub nminus: Vec<Vec<i64>>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct NzMatrices {
    pub aplus: Vec<Vec<i64>>,
    pub aminus: Vec<Vec<i64>>,
    /// `A_+^{-1} A_-`, absent when `A_+` is singular.
    pub k: Option<RatMatrix>,
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut y = x;
        while self.0[y] != r {
            let next = self.0[y];
            self.0[y] = r;
            y = next;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }
}

pub fn build_network(lp: &MutationLoop) -> Result<MutationNetwork> {
    let n = lp.n();
    let tt = lp.len();
    let node = |i: usize, t: usize| t * n + i;
    let mut uf = UnionFind((0..n * (tt + 1)).collect());
    for (s, &k) in lp.m.iter().enumerate() {
        let t = s + 1;
        for i in (0..n).filter(|&i| i != k) {
            uf.union(node(i, t - 1), node(i, t));
        }
    }
    for i in 0..n {
        uf.union(node(lp.nu.apply(i), tt), node(i, 0));
    }
    // number classes by first appearance, scanning time then vertex
    let mut id = vec![usize::MAX; n * (tt + 1)];
    let mut class = vec![vec![0; n]; tt + 1];
    let mut next = 0;
    for t in 0..=tt {
        for i in 0..n {
            let root = uf.find(node(i, t));
            if id[root] == usize::MAX {
                id[root] = next;
                next += 1;
            }
            class[t][i] = id[root];
        }
    }
    let quivers = lp.quivers()?;
    let mut n0 = vec![vec![0; tt]; next];
    let mut nplus = vec![vec![0; tt]; next];
    let mut nminus = vec![vec![0; tt]; next];
    for (s, &k) in lp.m.iter().enumerate() {
        let q = &quivers[s];
        n0[class[s][k]][s] += 1;
        n0[class[s + 1][k]][s] += 1;
        for i in 0..n {
            let e = class[s][i];
            nplus[e][s] += q.b[k][i].max(0);
            nminus[e][s] += q.b[i][k].max(0);
        }
    }
    Ok(MutationNetwork { class, n_classes: next, n0, nplus, nminus })
}

pub fn nz_matrices(net: &MutationNetwork) -> NzMatrices {
    let sub = |a: &Vec<Vec<i64>>, b: &Vec<Vec<i64>>| -> Vec<Vec<i64>> {
        a.iter()
            .zip(b)
            .map(|(x, y)| x.iter().zip(y).map(|(p, q)| p - q).collect())
            .collect()
    };
    let aplus = sub(&net.n0, &net.nplus);
    let aminus = sub(&net.n0, &net.nminus);
    let k = if aplus.len() == aplus.first().map_or(0, |r| r.len()) {
        exact::solve(&exact::to_rational(&aplus), &exact::to_rational(&aminus)).ok()
    } else {
        None
    };
    NzMatrices { aplus, aminus, k }
}

impl NzMatrices {
    /// `A_+ A_-^T`.
    pub fn symplectic_product(&self) -> Vec<Vec<i64>> {
        exact::mat_mul_i64(&self.aplus, &exact::transpose(&self.aminus))
    }

    pub fn satisfies_symmetry(&self) -> bool {
        exact::is_symmetric(&self.symplectic_product())
    }
}

/// Network matrices of a family loop with rows and columns identified with `J`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FamilyNetwork {
    pub network: MutationNetwork,
    pub n0: Vec<Vec<i64>>,
    pub nplus: Vec<Vec<i64>>,
    pub nminus: Vec<Vec<i64>>,
    pub nz: NzMatrices,
}

pub fn family_network(fl: &FamilyLoop) -> Result<FamilyNetwork> {
    let net = build_network(&fl.lp)?;
    let nj = fl.j_index.len();
    if net.n_classes != nj || fl.lp.len() != nj {
        return Err(Error::Dimension { expected: nj, got: net.n_classes });
    }
    let mut row = vec![usize::MAX; nj];
    for i in 0..fl.n() {
        row[net.class[0][i]] = fl.j_of_vertex(i);
    }
    let col: Vec<usize> = fl.lp.m.iter().map(|&k| fl.j_of_vertex(k)).collect();
    let permute = |a: &Vec<Vec<i64>>| {
        let mut out = vec![vec![0; nj]; nj];
        for (e, r) in a.iter().enumerate() {
            for (t, &x) in r.iter().enumerate() {
                out[row[e]][col[t]] = x;
            }
        }
        out
    };
    let n0 = permute(&net.n0);
    let nplus = permute(&net.nplus);
    let nminus = permute(&net.nminus);
    let nz = nz_matrices(&MutationNetwork {
        class: Vec::new(),
        n_classes: nj,
        n0: n0.clone(),
        nplus: nplus.clone(),
        nminus: nminus.clone(),
    });
    Ok(FamilyNetwork { network: net, n0, nplus, nminus, nz })
}

/// `K_{ab,mk} = (min(t_b m, t_a k) - mk/l) <alpha_a, alpha_b>` over `J`.
pub fn k_closed_form(typ: DynkinType, level: usize) -> RatMatrix {
    let t_a = typ.t_a();
    let g = typ.gram();
    let j: Vec<(usize, usize)> = (1..=typ.rank)
        .flat_map(|a| (1..t_a[a - 1] * level).map(move |m| (a, m)))
        .collect();
    let l = level as i64;
    j.iter()
        .map(|&(a, m)| {
            j.iter()
                .map(|&(b, k)| {
                    let (m, k) = (m as i64, k as i64);
                    let mn = (t_a[b - 1] as i64 * m).min(t_a[a - 1] as i64 * k);
                    (Rational64::from_integer(mn) - Rational64::new(m * k, l)) * g[a - 1][b - 1]
                })
                .collect()
        })
        .collect()
}

/// Closed-form `A_+ = delta_ab Cbar^a` and `A_- = Cbar^a K`.
pub fn nz_closed_form(typ: DynkinType, level: usize) -> (Vec<Vec<i64>>, RatMatrix) {
    let t_a = typ.t_a();
    let j: Vec<(usize, usize)> = (1..=typ.rank)
        .flat_map(|a| (1..t_a[a - 1] * level).map(move |m| (a, m)))
        .collect();
    let aplus: Vec<Vec<i64>> = j
        .iter()
        .map(|&(a, m)| {
            j.iter()
                .map(|&(b, k)| match (a == b, m.abs_diff(k)) {
                    (true, 0) => 2,
                    (true, 1) => -1,
                    _ => 0,
                })
                .collect()
        })
        .collect();
    let aminus = exact::mat_mul(&exact::to_rational(&aplus), &k_closed_form(typ, level));
    (aplus, aminus)
}

/// Entries where the loop-derived matrices differ from the closed forms.
pub fn cross_validate(fl: &FamilyLoop) -> Result<Vec<String>> {
    let fnet = family_network(fl)?;
    let (ap, am) = nz_closed_form(fl.typ, fl.level);
    let k = k_closed_form(fl.typ, fl.level);
    let mut diffs = Vec::new();
    let j = &fl.j_index;
    for x in 0..j.len() {
        for y in 0..j.len() {
            if fnet.nz.aplus[x][y] != ap[x][y] {
                diffs.push(format!("A+ {:?} {:?}: {} vs {}", j[x], j[y], fnet.nz.aplus[x][y], ap[x][y]));
            }
            if Rational64::from_integer(fnet.nz.aminus[x][y]) != am[x][y] {
                diffs.push(format!("A- {:?} {:?}: {} vs {}", j[x], j[y], fnet.nz.aminus[x][y], am[x][y]));
            }
            match &fnet.nz.k {
                Some(kk) if kk[x][y] != k[x][y] => {
                    diffs.push(format!("K {:?} {:?}: {} vs {}", j[x], j[y], kk[x][y], k[x][y]))
                }
                None if x == 0 && y == 0 => diffs.push("A+ singular".into()),
                _ => {}
            }
        }
    }
    Ok(diffs)
}

pub fn cross_validate_network(fl: &FamilyLoop) -> Result<bool> {
    Ok(cross_validate(fl)?.is_empty())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HGroup {
    /// Nontrivial invariant factors of `Z^Delta / A_+^T Z^E`.
    pub invariant_factors: Vec<i64>,
    pub order: i64,
}

pub fn h_group(nz: &NzMatrices) -> Result<HGroup> {
    let at = exact::transpose(&nz.aplus);
    let f = exact::invariant_factors(&at);
    if f.len() < at.len() {
        return Err(Error::Singular);
    }
    let order = f.iter().product();
    Ok(HGroup { invariant_factors: f.into_iter().filter(|&x| x != 1).collect(), order })
}

/// Residues `(c_1, .., c_r)` with `0 <= c_a < l t_a`, in lexicographic order.
pub fn sigma_classes(typ: DynkinType, level: usize) -> Vec<Vec<i64>> {
    let moduli: Vec<i64> = build_root_system(typ).t_a.iter().map(|&t| (t * level) as i64).collect();
    let mut out = vec![Vec::new()];
    for &md in &moduli {
        out = out
            .into_iter()
            .flat_map(|p: Vec<i64>| {
                (0..md).map(move |c| {
                    let mut q = p.clone();
                    q.push(c);
                    q
                })
            })
            .collect();
    }
    out
}
