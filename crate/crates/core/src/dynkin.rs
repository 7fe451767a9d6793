//! Root systems of finite type, normalized so that long roots have squared length 2.
//!
//! Vectors are written in the basis of simple roots; the pairing is the Gram
//! matrix of that basis, so every inner product is an exact rational.

use crate::error::{Error, Result};
use crate::exact;
use num_rational::Rational64;
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DynkinType {
    pub family: Family,
    pub rank: usize,
}

impl DynkinType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(DynkinType { family, rank })
        } else {
            Err(Error::InvalidType { family: family.letter(), rank })
        }
    }

    pub fn is_simply_laced(&self) -> bool {
        matches!(self.family, Family::A | Family::D | Family::E)
    }

    /// Edges of the diagram, 1-based, with node numbering as in the standard figure.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let r = self.rank;
        let chain = |n: usize| (1..n).map(|a| (a, a + 1)).collect::<Vec<_>>();
        match self.family {
            Family::A | Family::B | Family::C => chain(r),
            Family::D => {
                let mut e = chain(r - 1);
                e.push((r - 2, r));
                e
            }
            Family::E => match r {
                6 => vec![(1, 2), (2, 3), (3, 5), (5, 6), (3, 4)],
                7 => {
                    let mut e = chain(6);
                    e.push((3, 7));
                    e
                }
                _ => {
                    let mut e = chain(7);
                    e.push((5, 8));
                    e
                }
            },
            Family::F => chain(4),
            Family::G => vec![(1, 2)],
        }
    }

    /// `t_a = 2 / <alpha_a, alpha_a>`, 1-based node order.
    pub fn t_a(&self) -> Vec<usize> {
        let r = self.rank;
        (1..=r)
            .map(|a| match self.family {
                Family::B if a == r => 2,
                Family::C if a < r => 2,
                Family::F if a >= 3 => 2,
                Family::G if a == 2 => 3,
                _ => 1,
            })
            .collect()
    }

    pub fn t(&self) -> usize {
        match self.family {
            Family::A | Family::D | Family::E => 1,
            Family::B | Family::C | Family::F => 2,
            Family::G => 3,
        }
    }

    pub fn dual_coxeter(&self) -> usize {
        let r = self.rank;
        match self.family {
            Family::A => r + 1,
            Family::B => 2 * r - 1,
            Family::C => r + 1,
            Family::D => 2 * r - 2,
            Family::E => match r {
                6 => 12,
                7 => 18,
                _ => 30,
            },
            Family::F => 9,
            Family::G => 4,
        }
    }

    /// Period `t (l + h^vee)` of the level-`l` Y-system.
    pub fn period(&self, level: usize) -> usize {
        self.t() * (level + self.dual_coxeter())
    }

    pub fn cartan(&self) -> Vec<Vec<i64>> {
        let g = self.gram();
        let r = self.rank;
        (0..r)
            .map(|a| {
                (0..r)
                    .map(|b| {
                        let c = Rational64::from_integer(2) * g[a][b] / g[a][a];
                        assert!(c.is_integer());
                        c.to_integer()
                    })
                    .collect()
            })
            .collect()
    }

    /// Gram matrix `<alpha_a, alpha_b>` of the simple roots.
    pub fn gram(&self) -> Vec<Vec<Rational64>> {
        let r = self.rank;
        let len2: Vec<Rational64> =
            self.t_a().iter().map(|&t| Rational64::new(2, t as i64)).collect();
        let mut g = vec![vec![Rational64::zero(); r]; r];
        for a in 0..r {
            g[a][a] = len2[a];
        }
        for (a, b) in self.edges() {
            let v = -len2[a - 1].max(len2[b - 1]) / 2;
            g[a - 1][b - 1] = v;
            g[b - 1][a - 1] = v;
        }
        g
    }
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }
}

impl fmt::Display for DynkinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

impl FromStr for DynkinType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::ParseType(s.to_string());
        let mut chars = s.chars();
        let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('B') => Family::B,
            Some('C') => Family::C,
            Some('D') => Family::D,
            Some('E') => Family::E,
            Some('F') => Family::F,
            Some('G') => Family::G,
            _ => return Err(bad()),
        };
        let rest = chars.as_str().trim_start_matches('_');
        let rank: usize = rest.parse().map_err(|_| bad())?;
        DynkinType::new(family, rank)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RootSystemData {
    pub typ: DynkinType,
    pub gram: Vec<Vec<Rational64>>,
    /// Simple roots as coordinate vectors (unit vectors in the simple-root basis).
    pub simple_roots: Vec<Vec<Rational64>>,
    pub all_roots: Vec<Vec<Rational64>>,
    pub positive_roots: Vec<Vec<Rational64>>,
    pub rho: Vec<Rational64>,
    pub t: usize,
    pub t_a: Vec<usize>,
    pub dual_coxeter: usize,
    pub cartan: Vec<Vec<i64>>,
}

pub fn build_root_system(typ: DynkinType) -> RootSystemData {
    let r = typ.rank;
    let gram = typ.gram();
    let cartan = typ.cartan();

    // Positive roots by height, in integer simple-root coordinates, via root strings.
    let simple: Vec<Vec<i64>> = (0..r)
        .map(|a| (0..r).map(|b| i64::from(a == b)).collect())
        .collect();
    let mut known: BTreeSet<Vec<i64>> = simple.iter().cloned().collect();
    let mut layer = simple.clone();
    let mut positive: Vec<Vec<i64>> = simple.clone();
    while !layer.is_empty() {
        let mut next = BTreeSet::new();
        for beta in &layer {
            for a in 0..r {
                // <beta, alpha_a^vee> = sum_b beta_b C_ab
                let pairing: i64 = (0..r).map(|b| beta[b] * cartan[a][b]).sum();
                let mut p = 0;
                let mut down = beta.clone();
                loop {
                    down[a] -= 1;
                    if known.contains(&down) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                if p - pairing > 0 {
                    let mut up = beta.clone();
                    up[a] += 1;
                    if !known.contains(&up) {
                        next.insert(up);
                    }
                }
            }
        }
        layer = next.into_iter().collect();
        for v in &layer {
            known.insert(v.clone());
            positive.push(v.clone());
        }
    }

    let to_rat =
        |v: &Vec<i64>| v.iter().map(|&x| Rational64::from_integer(x)).collect::<Vec<_>>();
    let positive_roots: Vec<Vec<Rational64>> = positive.iter().map(to_rat).collect();
    let mut all_roots = positive_roots.clone();
    all_roots.extend(positive_roots.iter().map(|v| v.iter().map(|x| -x).collect::<Vec<_>>()));
    let mut rho = vec![Rational64::zero(); r];
    for v in &positive_roots {
        for (x, y) in rho.iter_mut().zip(v) {
            *x += y / 2;
        }
    }

    RootSystemData {
        typ,
        simple_roots: simple.iter().map(to_rat).collect(),
        all_roots,
        positive_roots,
        rho,
        t: typ.t(),
        t_a: typ.t_a(),
        dual_coxeter: typ.dual_coxeter(),
        cartan,
        gram,
    }
}

impl RootSystemData {
    pub fn rank(&self) -> usize {
        self.typ.rank
    }

    pub fn pairing(&self, x: &[Rational64], y: &[Rational64]) -> Result<Rational64> {
        let r = self.rank();
        for v in [x, y] {
            if v.len() != r {
                return Err(Error::Dimension { expected: r, got: v.len() });
            }
        }
        let mut s = Rational64::zero();
        for a in 0..r {
            if x[a].is_zero() {
                continue;
            }
            for b in 0..r {
                s += x[a] * self.gram[a][b] * y[b];
            }
        }
        Ok(s)
    }

    pub fn is_long(&self, alpha: &[Rational64]) -> bool {
        self.pairing(alpha, alpha).unwrap() == Rational64::from_integer(2)
    }

    pub fn dim_g(&self) -> usize {
        self.rank() + self.all_roots.len()
    }

    /// `|P/Q|`, the determinant of the Cartan matrix.
    pub fn lattice_index_p_mod_q(&self) -> i64 {
        exact::det_i64(&self.cartan).abs()
    }

    /// `|Q/lM| = prod_a l t_a`.
    pub fn lattice_index_q_mod_lm(&self, level: usize) -> i64 {
        self.t_a.iter().map(|&t| (level * t) as i64).product()
    }
}
