//! Conjectural exponents `N / D` from root data, and the closed-form `(A_1, l)` oracles.

use crate::dynkin::{build_root_system, DynkinType, Family};
use crate::error::{Error, Result};
use crate::family::build_family_loop;
use crate::spectral;
use nalgebra::{Complex, DMatrix, DVector};
use num_rational::Rational64;
use serde::Serialize;
use std::collections::BTreeMap;
use std::f64::consts::PI;

/// Exponents `m` standing for roots `exp(2 pi i m / modulus)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExponentMultiset {
    pub modulus: usize,
    pub counts: BTreeMap<usize, usize>,
}

impl ExponentMultiset {
    pub fn new(modulus: usize) -> Self {
        ExponentMultiset { modulus, counts: BTreeMap::new() }
    }

    pub fn from_vec(modulus: usize, v: &[usize]) -> Self {
        let mut s = Self::new(modulus);
        for &m in v {
            s.push(m);
        }
        s
    }

    pub fn push(&mut self, m: usize) {
        *self.counts.entry(m % self.modulus).or_insert(0) += 1;
    }

    pub fn len(&self) -> usize {
        self.counts.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.counts
            .iter()
            .flat_map(|(&m, &c)| std::iter::repeat_n(m, c))
            .collect()
    }

    pub fn difference(&self, other: &Self) -> Result<Self> {
        let mut out = self.clone();
        for (&m, &c) in &other.counts {
            let e = out.counts.get_mut(&m).ok_or(Error::DivisionNotExact)?;
            if *e < c {
                return Err(Error::DivisionNotExact);
            }
            *e -= c;
            if *e == 0 {
                out.counts.remove(&m);
            }
        }
        Ok(out)
    }

    /// `prod (x - exp(2 pi i m / modulus))` evaluated at real `x`.
    pub fn eval(&self, x: f64) -> Complex<f64> {
        let t = self.modulus as f64;
        self.to_vec().iter().fold(Complex::new(1.0, 0.0), |acc, &m| {
            acc * (Complex::new(x, 0.0) - Complex::from_polar(1.0, 2.0 * PI * m as f64 / t))
        })
    }
}

pub fn exponents_n(typ: DynkinType, level: usize) -> Result<ExponentMultiset> {
    if level < 2 {
        return Err(Error::Level { level, min: 2 });
    }
    let t = typ.t();
    let tt = typ.period(level);
    let mut out = ExponentMultiset::new(tt);
    for ta in typ.t_a() {
        let d = t / ta;
        assert_eq!(tt % d, 0);
        let step = tt / d;
        for m in (0..tt).filter(|m| m % step != 0) {
            out.push(m);
        }
    }
    Ok(out)
}

fn residue(x: Rational64, modulus: usize) -> Result<usize> {
    if !x.is_integer() {
        return Err(Error::NonIntegral(x.to_string()));
    }
    Ok(x.to_integer().rem_euclid(modulus as i64) as usize)
}

/// Long and short parts of `D`.
pub fn exponents_d_parts(typ: DynkinType, level: usize) -> Result<(ExponentMultiset, ExponentMultiset)> {
    if level < 2 {
        return Err(Error::Level { level, min: 2 });
    }
    let rs = build_root_system(typ);
    let t = typ.t();
    let base = level + typ.dual_coxeter();
    let tt = t * base;
    let mut long = ExponentMultiset::new(tt);
    let mut short = ExponentMultiset::new(tt);
    for alpha in &rs.all_roots {
        let p = rs.pairing(&rs.rho, alpha)?;
        if rs.is_long(alpha) {
            let r0 = residue(p, base)?;
            for j in 0..t {
                long.push(r0 + j * base);
            }
        } else {
            short.push(residue(p * Rational64::from_integer(t as i64), tt)?);
        }
    }
    Ok((long, short))
}

pub fn exponents_d(typ: DynkinType, level: usize) -> Result<ExponentMultiset> {
    let (mut long, short) = exponents_d_parts(typ, level)?;
    for m in short.to_vec() {
        long.push(m);
    }
    Ok(long)
}

pub fn conjecture_exponents(typ: DynkinType, level: usize) -> Result<ExponentMultiset> {
    exponents_n(typ, level)?.difference(&exponents_d(typ, level)?)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Status {
    #[serde(rename = "PROVEN-MATCH")]
    ProvenMatch,
    #[serde(rename = "EMPIRICAL-MATCH")]
    EmpiricalMatch,
    #[serde(rename = "MISMATCH")]
    Mismatch,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::ProvenMatch => "PROVEN-MATCH",
            Status::EmpiricalMatch => "EMPIRICAL-MATCH",
            Status::Mismatch => "MISMATCH",
        }
    }
}

/// Cases where the conjecture is a theorem: `(A_1, l)` and `(A_r, 2)`.
pub fn is_proven_case(typ: DynkinType, level: usize) -> bool {
    typ.family == Family::A && (typ.rank == 1 || level == 2)
}

#[derive(Debug, Clone, Serialize)]
pub struct ConjectureReport {
    pub computed: Vec<usize>,
    pub conjectured: Vec<usize>,
    pub status: Status,
}

pub fn verify_conjecture(typ: DynkinType, level: usize) -> Result<ConjectureReport> {
    let fl = build_family_loop(typ, level)?;
    let (_, ex) = spectral::exponents(&fl.lp, fl.period())?;
    let conj = conjecture_exponents(typ, level)?;
    let conjectured = conj.to_vec();
    let status = if conjectured != ex.exponents {
        Status::Mismatch
    } else if is_proven_case(typ, level) {
        Status::ProvenMatch
    } else {
        Status::EmpiricalMatch
    };
    Ok(ConjectureReport { computed: ex.exponents, conjectured, status })
}

fn check_a1_range(a: usize, m: usize, level: usize) -> Result<()> {
    if level < 2 {
        return Err(Error::Level { level, min: 2 });
    }
    if !(2..=level).contains(&a) || m > level {
        return Err(Error::Range(format!("a = {a}, m = {m} at level {level}")));
    }
    Ok(())
}

/// `z_m`, `1 <= m <= l - 1`.
pub fn a1_z(m: usize, level: usize) -> f64 {
    let h = (level + 2) as f64;
    let s = |k: usize| (PI * k as f64 / h).sin();
    s(m) * s(m + 2) / (s(m + 1) * s(m + 1))
}

/// Mixed-time fixed-point values `eta~_m`.
pub fn a1_eta_tilde(m: usize, level: usize) -> f64 {
    let h = (level + 2) as f64;
    let s = |k: usize| (PI * k as f64 / h).sin();
    s(1) * s(1) / (s(m) * s(m + 2))
}

pub fn a1_phi(a: usize, m: usize, level: usize) -> Result<f64> {
    check_a1_range(a, m, level)?;
    let h = (level + 2) as f64;
    let (a, m) = (a as f64, m as f64);
    let p11 = 2.0 * (PI * a / h).cos();
    let p12 = 2.0 * (PI * a * (m + 1.0) / h).cos();
    let p21 = (PI * (a - 1.0) / h).sin() / (PI / h).sin();
    let p22 = (PI * (a - 1.0) * (m + 1.0) / h).sin() / (PI * (m + 1.0) / h).sin();
    Ok(p11 * p22 - p12 * p21)
}

/// Vertex `m` of `Q(A_1, l)` is mutated first iff `m` is even.
pub fn a1_in_first_block(m: usize) -> bool {
    m.is_multiple_of(2)
}

/// `L(eta) = L_- L_+` from the closed-form `z_m`.
pub fn a1_l_matrix(level: usize) -> DMatrix<f64> {
    let n = level - 1;
    let build = |first: bool| {
        DMatrix::from_fn(n, n, |mi, ki| {
            let (m, k) = (mi + 1, ki + 1);
            if a1_in_first_block(k) != first {
                f64::from(u8::from(m == k))
            } else if m == k {
                -1.0
            } else if m.abs_diff(k) == 1 {
                a1_z(k, level)
            } else {
                0.0
            }
        })
    };
    build(false) * build(true)
}

/// `|| L(eta)^T psi - lambda^2 psi ||` with `lambda = zeta^a`.
pub fn a1_eigen_check(a: usize, level: usize) -> Result<f64> {
    check_a1_range(a, 0, level)?;
    let n = level - 1;
    let lambda = Complex::from_polar(1.0, PI * a as f64 / (level + 2) as f64);
    let mut psi = DVector::<Complex<f64>>::zeros(n);
    for m in 1..level {
        let phi = Complex::new(a1_phi(a, m, level)?, 0.0);
        psi[m - 1] = if a1_in_first_block(m) { lambda * phi } else { phi };
    }
    let lt = a1_l_matrix(level).transpose().map(|x| Complex::new(x, 0.0));
    Ok((lt * &psi - psi * (lambda * lambda)).norm())
}
