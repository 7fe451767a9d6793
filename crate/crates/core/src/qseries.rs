//! Partition q-series `sum q^{u.Ku/2} / prod (q)_{u_i}` over the nonnegative lattice,
//! split into sectors by the class of `sum_m m u_m^(a) alpha_a` in `Q / l M`.

use crate::dynkin::DynkinType;
use crate::error::{Error, Result};
use crate::exact::{self, RatMatrix};
use crate::network::{k_closed_form, sigma_classes};
use num_integer::Integer;
use num_rational::Rational64;
use num_traits::{Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt;

/// Series in `q^{1/denom}`, complete for exponents `<= order`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QSeries {
    pub denom: i64,
    /// Exponent numerator to coefficient; zero coefficients are never stored.
    pub coeffs: BTreeMap<i64, i64>,
    pub order: i64,
}

impl QSeries {
    pub fn zero(order: i64) -> Self {
        QSeries { denom: 1, coeffs: BTreeMap::new(), order }
    }

    pub fn from_parts(denom: i64, coeffs: BTreeMap<i64, i64>, order: i64) -> Self {
        let mut s = QSeries { denom, coeffs, order };
        s.normalize();
        s
    }

    fn normalize(&mut self) {
        let bound = self.order * self.denom;
        self.coeffs.retain(|&e, c| *c != 0 && e <= bound);
        let g = self.coeffs.keys().fold(self.denom, |g, &e| g.gcd(&e));
        if g > 1 {
            self.denom /= g;
            self.coeffs = self.coeffs.iter().map(|(&e, &c)| (e / g, c)).collect();
        }
    }

    pub fn terms(&self) -> Vec<(Rational64, i64)> {
        self.coeffs.iter().map(|(&e, &c)| (Rational64::new(e, self.denom), c)).collect()
    }

    pub fn coefficient(&self, e: Rational64) -> i64 {
        let scaled = e * self.denom;
        if !scaled.is_integer() {
            return 0;
        }
        self.coeffs.get(&scaled.to_integer()).copied().unwrap_or(0)
    }

    /// Coefficients at `offset, offset + 1, .., order` (the printed form of a series).
    pub fn coefficients_from(&self, offset: Rational64) -> Vec<i64> {
        let mut out = Vec::new();
        let mut e = offset;
        while e <= Rational64::from_integer(self.order) {
            out.push(self.coefficient(e));
            e += 1;
        }
        out
    }

    pub fn leading(&self) -> Option<(Rational64, i64)> {
        self.terms().into_iter().next()
    }

    pub fn add(&self, other: &QSeries) -> QSeries {
        let d = self.denom.lcm(&other.denom);
        let mut coeffs = BTreeMap::new();
        for s in [self, other] {
            let f = d / s.denom;
            for (&e, &c) in &s.coeffs {
                *coeffs.entry(e * f).or_insert(0) += c;
            }
        }
        QSeries::from_parts(d, coeffs, self.order.min(other.order))
    }

    /// Value at `q = e^{-eps}` and the magnitude of the last included term.
    pub fn numeric_eval(&self, eps: f64) -> Result<(f64, f64)> {
        if eps.is_nan() || eps <= 0.0 {
            return Err(Error::Range(format!("eps = {eps}")));
        }
        let mut sum = 0.0;
        let mut last = 0.0;
        for (e, c) in self.terms() {
            let t = c as f64 * (-eps * e.to_f64().unwrap_or(f64::NAN)).exp();
            sum += t;
            last = t.abs();
        }
        Ok((sum, last))
    }
}

impl fmt::Display for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0 + O(q^{})", self.order + 1);
        }
        for (i, (e, c)) in self.terms().into_iter().enumerate() {
            let sign = if c < 0 { "-" } else if i > 0 { "+" } else { "" };
            if i > 0 {
                write!(f, " {sign} ")?;
            } else {
                write!(f, "{sign}")?;
            }
            let a = c.abs();
            match (e.is_zero(), a) {
                (true, _) => write!(f, "{a}")?,
                (false, 1) => write!(f, "q^{e}")?,
                (false, _) => write!(f, "{a}q^{e}")?,
            }
        }
        write!(f, " + O(q^{})", self.order + 1)
    }
}

/// `1/(q)_n` in integer powers of `q` up to `q^order`.
fn pochhammer_inverse_coeffs(n: usize, order: usize) -> Vec<i128> {
    let mut c = vec![0i128; order + 1];
    c[0] = 1;
    for k in 1..=n.min(order) {
        // multiply by 1/(1 - q^k)
        for e in k..=order {
            c[e] += c[e - k];
        }
    }
    c
}

pub fn pochhammer_inverse(n: usize, order: i64) -> Result<QSeries> {
    if order <= 0 {
        return Err(Error::Order);
    }
    let c = pochhammer_inverse_coeffs(n, order as usize)
        .into_iter()
        .enumerate()
        .map(|(e, c)| i64::try_from(c).map(|c| (e as i64, c)))
        .collect::<std::result::Result<_, _>>()
        .map_err(|_| Error::Range("coefficient overflow".into()))?;
    Ok(QSeries::from_parts(1, c, order))
}

/// Nonnegative lattice points of a positive definite rational form, enumerated by
/// depth-first search over the coordinates last to first using `K = L D L^T`.
#[derive(Debug, Clone)]
pub struct Lattice {
    /// `u.Ku/2 = (u.W u) / s` with `W` integral.
    pub s: i64,
    w: Vec<Vec<i64>>,
    l: Vec<Vec<f64>>,
    d: Vec<f64>,
}

impl Lattice {
    pub fn new(k: &RatMatrix) -> Result<Self> {
        let n = k.len();
        if !exact::is_symmetric(k) {
            return Err(Error::Range("form is not symmetric".into()));
        }
        let (l, d) = exact::ldl(k).ok_or(Error::Singular)?;
        if d.iter().any(|x| !x.is_positive()) {
            return Err(Error::Range("form is not positive definite".into()));
        }
        let half = Rational64::new(1, 2);
        let mut s = 1i64;
        for i in 0..n {
            s = s.lcm((k[i][i] * half).denom());
            for j in i + 1..n {
                s = s.lcm(k[i][j].denom());
            }
        }
        let scale = Rational64::from_integer(s);
        let w = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let x = if i == j { k[i][i] * half * scale } else { k[i][j] * scale };
                        x.to_integer()
                    })
                    .collect()
            })
            .collect();
        let f = |x: &Rational64| x.to_f64().unwrap_or(f64::NAN);
        Ok(Lattice {
            s,
            w,
            l: l.iter().map(|r| r.iter().map(f).collect()).collect(),
            d: d.iter().map(f).collect(),
        })
    }

    pub fn dim(&self) -> usize {
        self.d.len()
    }

    /// `s * u.Ku/2`, exact.
    pub fn numerator(&self, u: &[i64]) -> i64 {
        let n = u.len();
        (0..n)
            .map(|i| u[i] * (self.w[i][i] * u[i] + (i + 1..n).map(|j| self.w[i][j] * u[j]).sum::<i64>()))
            .sum()
    }

    /// All `u >= 0` with `u.Ku/2 <= order`, paired with their exponent numerators.
    pub fn points(&self, order: i64) -> Vec<(Vec<i64>, i64)> {
        let n = self.dim();
        if n == 0 {
            return vec![(Vec::new(), 0)];
        }
        let bound = 2.0 * order as f64;
        let top = self.range(n - 1, &vec![0; n], 0.0, bound);
        top.into_par_iter()
            .flat_map_iter(|x| {
                let mut u = vec![0; n];
                u[n - 1] = x;
                let part = self.d[n - 1] * (x as f64).powi(2);
                let mut out = Vec::new();
                self.dfs(n - 1, &mut u, part, bound, order, &mut out);
                out
            })
            .collect()
    }

    /// Candidate values of `u_k` given `u_{k+1..}` and the partial form value.
    fn range(&self, k: usize, u: &[i64], partial: f64, bound: f64) -> std::ops::RangeInclusive<i64> {
        let c: f64 = (k + 1..u.len()).map(|i| self.l[i][k] * u[i] as f64).sum();
        let rem = (bound - partial).max(0.0);
        let r = (rem / self.d[k]).sqrt();
        // slack absorbs rounding; the exact exponent test below discards extras
        let slack = 1e-6 * (1.0 + c.abs() + r);
        let lo = (-c - r - slack).ceil().max(0.0) as i64;
        let hi = (-c + r + slack).floor();
        if hi < 0.0 {
            #[allow(clippy::reversed_empty_ranges)]
            return 1..=0;
        }
        lo..=hi as i64
    }

    fn dfs(&self, k: usize, u: &mut Vec<i64>, partial: f64, bound: f64, order: i64, out: &mut Vec<(Vec<i64>, i64)>) {
        if k == 0 {
            let num = self.numerator(u);
            if num <= order * self.s {
                out.push((u.clone(), num));
            }
            return;
        }
        let j = k - 1;
        let c: f64 = (j + 1..u.len()).map(|i| self.l[i][j] * u[i] as f64).sum();
        for x in self.range(j, u, partial, bound) {
            u[j] = x;
            let p = partial + self.d[j] * (x as f64 + c).powi(2);
            self.dfs(j, u, p, bound, order, out);
        }
        u[j] = 0;
    }

    /// Lattice sum grouped by `key`; points with `key == None` are skipped.
    /// Accumulates in `i128` and fails if a coefficient leaves the `i64` range.
    pub fn sum_by<K, F>(&self, order: i64, key: F) -> Result<BTreeMap<K, QSeries>>
    where
        K: Ord + Send,
        F: Fn(&[i64]) -> Option<K> + Sync,
    {
        let pts = self.points(order);
        let max_u = pts.iter().flat_map(|(u, _)| u.iter().copied()).max().unwrap_or(0) as usize;
        let ord = order as usize;
        let poch: Vec<Vec<i128>> = (0..=max_u).map(|n| pochhammer_inverse_coeffs(n, ord)).collect();
        let s = self.s;
        let overflow = || Error::Range("coefficient overflow".into());
        let raw: BTreeMap<K, BTreeMap<i64, i128>> = pts
            .into_par_iter()
            .filter_map(|(u, num)| key(&u).map(|k| (k, u, num)))
            .try_fold(BTreeMap::new, |mut acc: BTreeMap<K, BTreeMap<i64, i128>>, (k, u, num)| {
                let room = ((order * s - num) / s) as usize;
                let mut prod = vec![0i128; room + 1];
                prod[0] = 1;
                for &x in u.iter().filter(|&&x| x > 0) {
                    let p = &poch[x as usize];
                    let mut next = vec![0i128; room + 1];
                    for (i, &a) in prod.iter().enumerate().filter(|(_, a)| **a != 0) {
                        for (j, &b) in p.iter().enumerate().take(room + 1 - i) {
                            next[i + j] = a.checked_mul(b).and_then(|ab| next[i + j].checked_add(ab)).ok_or_else(overflow)?;
                        }
                    }
                    prod = next;
                }
                let bucket = acc.entry(k).or_default();
                for (i, c) in prod.into_iter().enumerate().filter(|(_, c)| *c != 0) {
                    let e = bucket.entry(num + s * i as i64).or_insert(0);
                    *e = e.checked_add(c).ok_or_else(overflow)?;
                }
                Ok(acc)
            })
            .try_reduce(BTreeMap::new, |mut a, b| {
                for (k, m) in b {
                    let bucket = a.entry(k).or_default();
                    for (e, c) in m {
                        let x = bucket.entry(e).or_insert(0);
                        *x = x.checked_add(c).ok_or_else(overflow)?;
                    }
                }
                Ok(a)
            })?;
        raw.into_iter()
            .map(|(k, m)| {
                let m = m
                    .into_iter()
                    .map(|(e, c)| i64::try_from(c).map(|c| (e, c)).map_err(|_| overflow()))
                    .collect::<Result<BTreeMap<i64, i64>>>()?;
                Ok((k, QSeries::from_parts(s, m, order)))
            })
            .collect()
    }

    pub fn sum(&self, order: i64) -> Result<QSeries> {
        Ok(self.sum_by(order, |_| Some(()))?.remove(&()).unwrap_or_else(|| QSeries::zero(order)))
    }
}

/// Unrestricted sum for an arbitrary positive definite `K`.
pub fn lattice_qseries(k: &RatMatrix, order: i64) -> Result<QSeries> {
    if order <= 0 {
        return Err(Error::Order);
    }
    Lattice::new(k)?.sum(order)
}

fn j_labels(typ: DynkinType, level: usize) -> Vec<(usize, usize)> {
    let t_a = typ.t_a();
    (1..=typ.rank).flat_map(|a| (1..t_a[a - 1] * level).map(move |m| (a, m))).collect()
}

/// Residues `sum_m m u_m^(a) mod l t_a`.
fn sector_of(labels: &[(usize, usize)], moduli: &[i64], u: &[i64]) -> Vec<i64> {
    let mut c = vec![0i64; moduli.len()];
    for (&(a, m), &x) in labels.iter().zip(u) {
        c[a - 1] += m as i64 * x;
    }
    c.iter().zip(moduli).map(|(x, md)| x.rem_euclid(*md)).collect()
}

struct Setup {
    lattice: Lattice,
    labels: Vec<(usize, usize)>,
    moduli: Vec<i64>,
}

fn setup(typ: DynkinType, level: usize, order: i64) -> Result<Setup> {
    if level < 2 {
        return Err(Error::Level { level, min: 2 });
    }
    if order <= 0 {
        return Err(Error::Order);
    }
    Ok(Setup {
        lattice: Lattice::new(&k_closed_form(typ, level))?,
        labels: j_labels(typ, level),
        moduli: typ.t_a().iter().map(|&t| (t * level) as i64).collect(),
    })
}

/// `Z^sigma`; residues may be any representatives of their classes.
pub fn partition_qseries(typ: DynkinType, level: usize, sigma: &[i64], order: i64) -> Result<QSeries> {
    if sigma.len() != typ.rank {
        return Err(Error::Dimension { expected: typ.rank, got: sigma.len() });
    }
    let st = setup(typ, level, order)?;
    let target: Vec<i64> = sigma.iter().zip(&st.moduli).map(|(c, md)| c.rem_euclid(*md)).collect();
    let mut m = st
        .lattice
        .sum_by(order, |u| (sector_of(&st.labels, &st.moduli, u) == target).then_some(()))?;
    Ok(m.remove(&()).unwrap_or_else(|| QSeries::zero(order)))
}

/// `Z^sigma` for every class, from one enumeration.
pub fn all_partition_qseries(typ: DynkinType, level: usize, order: i64) -> Result<BTreeMap<Vec<i64>, QSeries>> {
    let st = setup(typ, level, order)?;
    let mut m = st.lattice.sum_by(order, |u| Some(sector_of(&st.labels, &st.moduli, u)))?;
    for c in sigma_classes(typ, level) {
        m.entry(c).or_insert_with(|| QSeries::zero(order));
    }
    Ok(m)
}

/// Unrestricted lattice sum.
pub fn total_partition_qseries(typ: DynkinType, level: usize, order: i64) -> Result<QSeries> {
    setup(typ, level, order)?.lattice.sum(order)
}

#[derive(Debug, Clone, Serialize)]
pub struct TotalReport {
    pub total: QSeries,
    pub sector_sum: QSeries,
    pub sectors: usize,
    pub consistent: bool,
}

pub fn total_with_sector_check(typ: DynkinType, level: usize, order: i64) -> Result<TotalReport> {
    let total = total_partition_qseries(typ, level, order)?;
    let all = all_partition_qseries(typ, level, order)?;
    let sector_sum = all.values().fold(QSeries::zero(order), |acc, s| acc.add(s));
    Ok(TotalReport { consistent: sector_sum == total, sectors: all.len(), total, sector_sum })
}

/// Classes sharing the same series, largest groups first. Reported, not explained.
pub fn sector_groups(all: &BTreeMap<Vec<i64>, QSeries>) -> Vec<(QSeries, Vec<Vec<i64>>)> {
    let mut groups: Vec<(QSeries, Vec<Vec<i64>>)> = Vec::new();
    for (c, s) in all {
        match groups.iter_mut().find(|(g, _)| g == s) {
            Some((_, v)) => v.push(c.clone()),
            None => groups.push((s.clone(), vec![c.clone()])),
        }
    }
    groups.sort_by(|a, b| b.1.len().cmp(&a.1.len()).then_with(|| a.1.cmp(&b.1)));
    groups
}
