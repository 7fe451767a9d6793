//! The level-`l` quivers `Q(X_r, l)` and their mutation loops for every finite type.
//!
//! Vertices are labelled `(a, m)` where `a` is a node of the simply-laced cover
//! `Y_{r'}` and `1 <= m <= kappa_a l - 1`; vertex indices follow the lexicographic
//! order of the labels.

use crate::dynkin::{DynkinType, Family};
use crate::error::{Error, Result};
use crate::quiver::{MutationLoop, Permutation, Quiver};
use std::collections::{BTreeMap, BTreeSet};

#[derive(Debug, Clone)]
pub struct FamilyLoop {
    pub typ: DynkinType,
    pub level: usize,
    pub lp: MutationLoop,
    /// Half-steps, each sorted ascending; `lp.m` is their concatenation.
    pub blocks: Vec<Vec<usize>>,
    pub labels: Vec<(usize, usize)>,
    /// Filled (black) vertices; every vertex is filled for simply-laced types.
    pub filled: Vec<bool>,
    /// `+`/`-` for most vertices, `I`..`VI` for the unfilled vertices of `G2`.
    pub marks: Vec<String>,
    pub cover: DynkinType,
    /// `tau[a-1] = tau(a)`, nodes of the cover to nodes of `X_r`.
    pub tau: Vec<usize>,
    pub kappa: Vec<usize>,
    pub j_index: Vec<(usize, usize)>,
}

impl FamilyLoop {
    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn index_of(&self, label: (usize, usize)) -> Option<usize> {
        self.labels.binary_search(&label).ok()
    }

    /// `tau'(a, m) = (tau(a), m)` as a position in `j_index`.
    pub fn j_of_vertex(&self, v: usize) -> usize {
        let (a, m) = self.labels[v];
        let key = (self.tau[a - 1], m);
        self.j_index.binary_search(&key).expect("tau' maps into J")
    }

    pub fn period(&self) -> usize {
        self.typ.period(self.level)
    }
}

fn cover_of(typ: DynkinType) -> DynkinType {
    let r = typ.rank;
    let mk = |f, n| DynkinType::new(f, n).unwrap();
    match typ.family {
        Family::B => mk(Family::A, 2 * r - 1),
        // D_3 is kept as a diagram (node 1 joined to 2 and 3) even though it is not a valid type
        Family::C => DynkinType { family: Family::D, rank: r + 1 },
        Family::F => mk(Family::E, 6),
        Family::G => mk(Family::D, 4),
        _ => typ,
    }
}

fn tau_of(typ: DynkinType) -> Vec<usize> {
    let r = typ.rank;
    match typ.family {
        Family::B => (1..2 * r).map(|a| if a <= r { a } else { 2 * r - a }).collect(),
        Family::C => (1..=r + 1).map(|a| a.min(r)).collect(),
        Family::F => vec![1, 2, 3, 4, 2, 1],
        Family::G => vec![1, 2, 1, 1],
        _ => (1..=r).collect(),
    }
}

struct Draft {
    labels: Vec<(usize, usize)>,
    filled: Vec<bool>,
    marks: Vec<String>,
    arrows: Vec<((usize, usize), (usize, usize))>,
    blocks: Vec<Vec<(usize, usize)>>,
    nu: BTreeMap<usize, usize>,
}

impl Draft {
    fn new() -> Self {
        Draft {
            labels: Vec::new(),
            filled: Vec::new(),
            marks: Vec::new(),
            arrows: Vec::new(),
            blocks: Vec::new(),
            nu: BTreeMap::new(),
        }
    }

    fn vertex(&mut self, label: (usize, usize), filled: bool, mark: &str) {
        self.labels.push(label);
        self.filled.push(filled);
        self.marks.push(mark.to_string());
    }

    fn has(&self, label: (usize, usize)) -> bool {
        label.1 >= 1 && self.labels.contains(&label)
    }

    /// Arrow `u -> v`, silently dropped when an end lies outside the quiver.
    fn arrow(&mut self, u: (usize, usize), v: (usize, usize)) {
        if self.has(u) && self.has(v) {
            self.arrows.push((u, v));
        }
    }

    fn mark(&self, label: (usize, usize)) -> &str {
        let i = self.labels.iter().position(|&l| l == label).unwrap();
        &self.marks[i]
    }

    fn finish(self, typ: DynkinType, level: usize) -> Result<FamilyLoop> {
        let mut order: Vec<usize> = (0..self.labels.len()).collect();
        order.sort_by_key(|&i| self.labels[i]);
        let labels: Vec<(usize, usize)> = order.iter().map(|&i| self.labels[i]).collect();
        let filled = order.iter().map(|&i| self.filled[i]).collect();
        let marks = order.iter().map(|&i| self.marks[i].clone()).collect();
        let idx = |l: (usize, usize)| labels.binary_search(&l).unwrap();
        let mut q = Quiver::empty(labels.len());
        for &(u, v) in &self.arrows {
            q.add_arrows(idx(u), idx(v), 1);
        }
        let blocks: Vec<Vec<usize>> = self
            .blocks
            .iter()
            .map(|b| {
                let mut v: Vec<usize> = b.iter().map(|&l| idx(l)).collect();
                v.sort_unstable();
                v
            })
            .collect();
        let m = blocks.concat();
        let images = labels
            .iter()
            .map(|&(a, k)| idx((*self.nu.get(&a).unwrap_or(&a), k)))
            .collect();
        let lp = MutationLoop::new(q, m, Permutation::new(images)?)?;
        let cover = cover_of(typ);
        let tau = tau_of(typ);
        let t_a = typ.t_a();
        let kappa = tau.iter().map(|&b| t_a[b - 1]).collect();
        let j_index = (1..=typ.rank)
            .flat_map(|a| (1..t_a[a - 1] * level).map(move |m| (a, m)))
            .collect();
        Ok(FamilyLoop { typ, level, lp, blocks, labels, filled, marks, cover, tau, kappa, j_index })
    }
}

/// Graph distance from `src` in the diagram of `typ`, 1-based nodes.
fn distances(typ: DynkinType, src: usize) -> Vec<usize> {
    let r = typ.rank;
    let edges = typ.edges();
    let mut dist = vec![usize::MAX; r + 1];
    dist[src] = 0;
    let mut frontier = vec![src];
    while let Some(a) = frontier.pop() {
        for &(x, y) in &edges {
            for (p, q) in [(x, y), (y, x)] {
                if p == a && dist[q] > dist[a] + 1 {
                    dist[q] = dist[a] + 1;
                    frontier.push(q);
                }
            }
        }
    }
    dist
}

pub fn build_family_loop(typ: DynkinType, level: usize) -> Result<FamilyLoop> {
    build_family_loop_with(typ, level, false)
}

/// `flip` exchanges the two colour classes of the diagram of a simply-laced type,
/// which swaps `I_+` and `I_-`. It is ignored for the other types.
pub fn build_family_loop_with(typ: DynkinType, level: usize, flip: bool) -> Result<FamilyLoop> {
    if level < 2 {
        return Err(Error::Level { level, min: 2 });
    }
    let draft = match typ.family {
        Family::A | Family::D | Family::E => simply_laced(typ, level, flip),
        Family::B | Family::C | Family::F => folded(typ, level),
        Family::G => g2(level),
    };
    draft.finish(typ, level)
}

fn simply_laced(typ: DynkinType, level: usize, flip: bool) -> Draft {
    let r = typ.rank;
    let c = typ.cartan();
    let dist = distances(typ, 1);
    // node 1 of X_r is coloured -, node 1 of A_{l-1} is coloured +
    let sx = |a: usize| (dist[a] % 2 == 1) != flip;
    let sa = |m: usize| m % 2 == 1;
    let ca = |m: usize, k: usize| -> i64 {
        if m == k {
            2
        } else if m.abs_diff(k) == 1 {
            -1
        } else {
            0
        }
    };
    let mut d = Draft::new();
    let verts: Vec<(usize, usize)> =
        (1..=r).flat_map(|a| (1..level).map(move |m| (a, m))).collect();
    for &(a, m) in &verts {
        d.vertex((a, m), true, if sx(a) == sa(m) { "+" } else { "-" });
    }
    for &(a, m) in &verts {
        for &(b, k) in &verts {
            let (i, j) = ((sx(a), sa(m)), (sx(b), sa(k)));
            let dab = i64::from(a == b);
            let dmk = i64::from(m == k);
            let (p, n) = (true, false);
            let v = if (i == (n, p) && j == (p, p)) || (i == (p, n) && j == (n, n)) {
                -c[a - 1][b - 1] * dmk
            } else if (i == (p, p) && j == (n, p)) || (i == (n, n) && j == (p, n)) {
                c[a - 1][b - 1] * dmk
            } else if (i == (p, p) && j == (p, n)) || (i == (n, n) && j == (n, p)) {
                -dab * ca(m, k)
            } else if (i == (p, n) && j == (p, p)) || (i == (n, p) && j == (n, n)) {
                dab * ca(m, k)
            } else {
                0
            };
            if v > 0 {
                for _ in 0..v {
                    d.arrows.push(((a, m), (b, k)));
                }
            }
        }
    }
    let plus = verts.iter().copied().filter(|&v| d.mark(v) == "+").collect();
    let minus = verts.iter().copied().filter(|&v| d.mark(v) == "-").collect();
    d.blocks = vec![plus, minus];
    d
}

/// B, C, F: filled columns with `2l - 1` rows over the fixed nodes of the cover,
/// unfilled columns with `l - 1` rows (at heights `2m`) over the swapped nodes.
/// Pairs of cover nodes folded onto one node.
type Mirror = Vec<(usize, usize)>;

fn folded(typ: DynkinType, level: usize) -> Draft {
    let r = typ.rank;
    let cover = cover_of(typ);
    let rc = cover.rank;
    // filled nodes, the filled node adjacent to the unfilled part, left unfilled nodes, mirror
    let (black, hub, left, mirror): (Vec<usize>, usize, Vec<usize>, Mirror) =
        match typ.family {
            Family::B => (
                vec![r],
                r,
                (1..r).collect(),
                (1..r).map(|a| (a, 2 * r - a)).collect(),
            ),
            Family::C => ((1..r).collect(), r - 1, vec![r], vec![(r, r + 1)]),
            _ => (vec![3, 4], 3, vec![1, 2], vec![(1, 6), (2, 5)]),
        };
    let is_black = |a: usize| black.contains(&a);
    let dist = distances(cover, hub);
    let mut d = Draft::new();
    for a in 1..=rc {
        if is_black(a) {
            for m in 1..2 * level {
                d.vertex((a, m), true, if (m + dist[a]) % 2 == 1 { "+" } else { "-" });
            }
        } else {
            for m in 1..level {
                let p = (m + dist[a] - 1).is_multiple_of(2);
                let plus = if left.contains(&a) { p } else { !p };
                d.vertex((a, m), false, if plus { "+" } else { "-" });
            }
        }
    }
    let labels = d.labels.clone();
    let plus = |d: &Draft, v: (usize, usize)| d.mark(v) == "+";
    // vertical arrows + -> -
    for &v in &labels {
        if plus(&d, v) {
            d.arrow(v, (v.0, v.1 + 1));
            d.arrow(v, (v.0, v.1 - 1));
        }
    }
    for (x, y) in cover.edges() {
        for (a, b) in [(x, y), (y, x)] {
            for &v in labels.iter().filter(|v| v.0 == a) {
                let minus = !plus(&d, v);
                if is_black(a) == is_black(b) {
                    // horizontal arrows - -> +
                    if minus {
                        d.arrow(v, (b, v.1));
                    }
                } else if is_black(b) {
                    let m = v.1;
                    if minus {
                        d.arrow(v, (b, 2 * m - 1));
                        d.arrow(v, (b, 2 * m + 1));
                    }
                    d.arrow((b, 2 * m), v);
                }
            }
        }
    }
    let p: Vec<_> = labels.iter().copied().filter(|&v| plus(&d, v)).collect();
    let n: Vec<_> = labels.iter().copied().filter(|&v| !plus(&d, v) && is_black(v.0)).collect();
    d.blocks = vec![p, n];
    for (a, b) in mirror {
        d.nu.insert(a, b);
        d.nu.insert(b, a);
    }
    d
}

/// G2 over the cover D4: nodes 1, 3, 4 carry the three unfilled quivers (in the
/// order they are drawn), node 2 the identified filled column with `3l - 1` rows.
fn g2(level: usize) -> Draft {
    let (q1, q2, q3, bk) = (1, 3, 4, 2);
    let mut d = Draft::new();
    for m in 1..level {
        let odd = m % 2 == 1;
        d.vertex((q1, m), false, if odd { "IV" } else { "I" });
        d.vertex((q2, m), false, if odd { "II" } else { "V" });
        d.vertex((q3, m), false, if odd { "VI" } else { "III" });
    }
    for m in 1..3 * level {
        d.vertex((bk, m), true, if m % 2 == 1 { "+" } else { "-" });
    }
    let b = |k: usize| (bk, k);
    for k in (1..3 * level).step_by(2) {
        d.arrow(b(k), b(k + 1));
        d.arrow(b(k), b(k - 1));
    }
    for i in 1..level {
        let h = 3 * i;
        if i % 2 == 0 {
            // I, V, III
            d.arrow((q1, i), (q1, i + 1));
            d.arrow((q1, i), (q1, i - 1));
            d.arrow(b(h), (q1, i));

            d.arrow(b(h), (q2, i));
            d.arrow((q2, i), b(h - 1));
            d.arrow((q2, i), b(h + 1));

            d.arrow((q3, i), (q3, i + 1));
            d.arrow((q3, i), (q3, i - 1));
            for k in [h - 2, h, h + 2] {
                d.arrow(b(k), (q3, i));
            }
            d.arrow((q3, i), b(h - 1));
            d.arrow((q3, i), b(h + 1));
        } else {
            // IV, II, VI
            for k in [h - 2, h, h + 2] {
                d.arrow((q1, i), b(k));
            }
            d.arrow(b(h - 1), (q1, i));
            d.arrow(b(h + 1), (q1, i));

            d.arrow((q2, i), (q2, i + 1));
            d.arrow((q2, i), (q2, i - 1));
            d.arrow((q2, i), b(h));
            d.arrow(b(h - 1), (q2, i));
            d.arrow(b(h + 1), (q2, i));

            d.arrow((q3, i), b(h));
        }
    }
    let labels = d.labels.clone();
    let pick = |d: &Draft, marks: &[&str]| -> Vec<(usize, usize)> {
        labels.iter().copied().filter(|&v| marks.contains(&d.mark(v))).collect()
    };
    let first: BTreeSet<_> = pick(&d, &["I"]).into_iter().chain(blacks(&d, &labels, "+")).collect();
    let second: BTreeSet<_> = pick(&d, &["II"]).into_iter().chain(blacks(&d, &labels, "-")).collect();
    d.blocks = vec![first.into_iter().collect(), second.into_iter().collect()];
    d.nu.insert(q1, q2);
    d.nu.insert(q2, q3);
    d.nu.insert(q3, q1);
    d
}

fn blacks(d: &Draft, labels: &[(usize, usize)], mark: &str) -> Vec<(usize, usize)> {
    labels
        .iter()
        .copied()
        .filter(|&v| v.0 == 2 && d.mark(v) == mark)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fl(s: &str, l: usize) -> FamilyLoop {
        build_family_loop(s.parse().unwrap(), l).unwrap()
    }

    #[test]
    fn a1_level4_shape() {
        let f = fl("A1", 4);
        assert_eq!(f.lp.quiver.b, vec![vec![0, -1, 0], vec![1, 0, 1], vec![0, -1, 0]]);
        assert_eq!(f.blocks, vec![vec![1], vec![0, 2]]);
        assert_eq!(f.lp.nu, Permutation::identity(3));
    }

    #[test]
    fn b3_level2_matches_worked_quiver() {
        let f = fl("B3", 2);
        assert_eq!(f.labels, vec![(1, 1), (2, 1), (3, 1), (3, 2), (3, 3), (4, 1), (5, 1)]);
        let idx = |l| f.index_of(l).unwrap();
        let mut expected = Quiver::empty(7);
        for (u, v) in [
            ((3, 1), (3, 2)),
            ((3, 3), (3, 2)),
            ((2, 1), (3, 1)),
            ((2, 1), (3, 3)),
            ((3, 2), (4, 1)),
            ((3, 2), (2, 1)),
            ((2, 1), (1, 1)),
            ((5, 1), (4, 1)),
        ] {
            expected.add_arrows(idx(u), idx(v), 1);
        }
        assert_eq!(f.lp.quiver, expected);
        assert_eq!(f.lp.nu.apply(idx((1, 1))), idx((5, 1)));
        assert_eq!(f.lp.nu.apply(idx((3, 2))), idx((3, 2)));
    }

    #[test]
    fn every_family_closes_and_is_regular() {
        for s in ["A2", "A4", "D4", "D5", "E6", "B2", "B4", "C2", "C3", "F4", "G2"] {
            for l in 2..=4 {
                let f = fl(s, l);
                assert!(f.lp.is_regular(), "{s} {l}");
                let js: BTreeSet<_> = (0..f.n()).map(|v| f.j_of_vertex(v)).collect();
                assert_eq!(js.len(), f.j_index.len(), "{s} {l}");
            }
        }
    }

    #[test]
    fn level_one_rejected() {
        assert!(matches!(
            build_family_loop("A2".parse().unwrap(), 1),
            Err(Error::Level { .. })
        ));
    }
}
