//! Rogers dilogarithm, central charge, `a(0)`, and the two identities at the fixed point.

use crate::dynkin::{build_root_system, DynkinType};
use crate::error::{Error, Result};
use crate::exact;
use crate::family::{build_family_loop, FamilyLoop};
use crate::network::{build_network, family_network, nz_matrices};
use crate::qseries::total_partition_qseries;
use crate::rootpoly::{is_proven_case, Status};
use crate::spectral::{self, FixedPoint};
use crate::yseed::run_loop;
use num_rational::Rational64;
use num_traits::ToPrimitive;
use serde::Serialize;
use std::f64::consts::PI;

const L1: f64 = PI * PI / 6.0;

/// `Li_2(x) + log(x) log(1 - x) / 2` on `[0, 1]`.
pub fn rogers_dilog(x: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&x) {
        return Err(Error::Range(format!("Rogers dilogarithm at {x}")));
    }
    if x > 0.5 {
        return Ok(L1 - rogers_dilog(1.0 - x)?);
    }
    if x == 0.0 {
        return Ok(0.0);
    }
    let mut li2 = 0.0;
    let mut p = 1.0;
    for k in 1..200 {
        p *= x;
        let term = p / (k * k) as f64;
        li2 += term;
        if term < 1e-18 * li2 {
            break;
        }
    }
    Ok(li2 + 0.5 * x.ln() * (-x).ln_1p())
}

/// `(z_+, z_-)` per mutation step, from the Y-value just before the step.
pub fn z_values(lp: &crate::quiver::MutationLoop, eta: &[f64]) -> Result<Vec<(f64, f64)>> {
    let run = run_loop(lp, eta)?;
    Ok(run
        .step_log
        .iter()
        .map(|&(_, y)| (y / (1.0 + y), 1.0 / (1.0 + y)))
        .collect())
}

/// Largest `|sum_t (-A_+^{et} log z_t + A_-^{et} log(1 - z_t))|` over black vertices.
pub fn z_consistency(lp: &crate::quiver::MutationLoop, eta: &[f64]) -> Result<f64> {
    let nz = nz_matrices(&build_network(lp)?);
    let z = z_values(lp, eta)?;
    Ok(nz
        .aplus
        .iter()
        .zip(&nz.aminus)
        .map(|(ap, am)| {
            z.iter()
                .enumerate()
                .map(|(t, &(zp, zm))| -(ap[t] as f64) * zp.ln() + am[t] as f64 * zm.ln())
                .sum::<f64>()
                .abs()
        })
        .fold(0.0, f64::max))
}

pub fn central_charge(typ: DynkinType, level: usize) -> Rational64 {
    let dim = build_root_system(typ).dim_g() as i64;
    Rational64::new(level as i64 * dim, (level + typ.dual_coxeter()) as i64)
}

pub fn asymptotic_dim_zero(typ: DynkinType, level: usize) -> Result<f64> {
    let rs = build_root_system(typ);
    let k = (level + typ.dual_coxeter()) as f64;
    // |P / (l + h) M| = |P/Q| prod (l + h) t_a
    let index = rs.lattice_index_p_mod_q() as f64 * typ.t_a().iter().map(|&t| k * t as f64).product::<f64>();
    let mut prod = 1.0;
    for alpha in &rs.positive_roots {
        let p = rs.pairing(&rs.rho, alpha)?.to_f64().unwrap_or(f64::NAN);
        prod *= 2.0 * (PI * p / k).sin();
    }
    Ok(prod / index.sqrt())
}

#[derive(Debug, Clone, Serialize)]
pub struct EmpiricalPoint {
    pub eps: f64,
    pub value: f64,
    pub last_term: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct AsymptoticsReport {
    pub a_dilog: f64,
    pub c_ell: Rational64,
    pub dilog_residual: f64,
    pub jac_lhs: f64,
    pub jac_rhs: f64,
    pub jac_residual: f64,
    pub jac_status: Status,
    pub z_consistency: f64,
    pub empirical_target: Option<f64>,
    pub empirical_limit: Option<Vec<EmpiricalPoint>>,
}

/// Tolerance under which the identity at `x = 1` counts as matching.
pub const JAC_TOL: f64 = 1e-8;

pub fn check_identities(typ: DynkinType, level: usize) -> Result<AsymptoticsReport> {
    let fl = build_family_loop(typ, level)?;
    let fp = spectral::solve_fixed_point(&fl.lp)?;
    check_identities_at(&fl, &fp)
}

pub fn check_identities_at(fl: &FamilyLoop, fp: &FixedPoint) -> Result<AsymptoticsReport> {
    let (typ, level) = (fl.typ, fl.level);
    let z = z_values(&fl.lp, &fp.eta)?;
    let a_dilog = z.iter().map(|&(zp, _)| rogers_dilog(zp)).sum::<Result<f64>>()?;
    let c_ell = central_charge(typ, level);
    let target = (c_ell - Rational64::from_integer(typ.rank as i64)).to_f64().unwrap_or(f64::NAN);
    let dilog_residual = (6.0 * a_dilog / (PI * PI) - target).abs();

    let j = spectral::jacobian_at(&fl.lp, &fp.eta)?;
    let det = spectral::char_poly_at(&j, 1.0);
    let jac_lhs = 1.0 / det.sqrt();
    let p_mod_q = build_root_system(typ).lattice_index_p_mod_q() as f64;
    let jac_rhs = p_mod_q.sqrt() * asymptotic_dim_zero(typ, level)?;
    let jac_residual = (jac_lhs - jac_rhs).abs();
    let jac_status = if jac_residual.is_nan() || jac_residual > JAC_TOL {
        Status::Mismatch
    } else if is_proven_case(typ, level) {
        Status::ProvenMatch
    } else {
        Status::EmpiricalMatch
    };
    Ok(AsymptoticsReport {
        a_dilog,
        c_ell,
        dilog_residual,
        jac_lhs,
        jac_rhs,
        jac_residual,
        jac_status,
        z_consistency: z_consistency(&fl.lp, &fp.eta)?,
        empirical_target: None,
        empirical_limit: None,
    })
}

/// `Z(e^{-eps}) e^{-a/eps}` for the given `eps`, against `sqrt(det A_+ / det(I - J))`.
pub fn empirical_limit(
    fl: &FamilyLoop,
    report: &mut AsymptoticsReport,
    eps: &[f64],
    order: i64,
) -> Result<()> {
    let nz = family_network(fl)?.nz;
    let det_ap = exact::det_i64(&nz.aplus) as f64;
    let fp = spectral::solve_fixed_point(&fl.lp)?;
    let j = spectral::jacobian_at(&fl.lp, &fp.eta)?;
    let target = (det_ap.abs() / spectral::char_poly_at(&j, 1.0)).sqrt();
    let z = total_partition_qseries(fl.typ, fl.level, order)?;
    let mut pts = Vec::new();
    for &e in eps {
        let (v, last) = z.numeric_eval(e)?;
        pts.push(EmpiricalPoint { eps: e, value: v * (-report.a_dilog / e).exp(), last_term: last });
    }
    report.empirical_target = Some(target);
    report.empirical_limit = Some(pts);
    Ok(())
}
