//! Positive fixed point of `mu_gamma`, the Jacobian there, and its exponents.

use crate::error::{Error, Result};
use crate::quiver::MutationLoop;
use crate::yseed::{run_loop, LoopRun};
use nalgebra::{Complex, DMatrix, DVector};
use serde::Serialize;
use std::f64::consts::PI;

#[derive(Debug, Clone, Serialize)]
pub struct FixedPoint {
    pub eta: Vec<f64>,
    pub residual: f64,
    pub newton_iters: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct ExponentResult {
    pub order: usize,
    pub eigenvalues: Vec<(f64, f64)>,
    pub exponents: Vec<usize>,
    pub snap_error: f64,
    /// Whether the multiset is stable under `m -> order - m`; an observation only.
    pub symmetric: bool,
}

const MAX_ITERS: usize = 200;

fn residual(run: &LoopRun) -> f64 {
    run.final_state
        .y
        .iter()
        .zip(&run.initial.y)
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max)
}

fn tolerance(y: &[f64]) -> f64 {
    1e-12 * (1.0 + y.iter().cloned().fold(0.0, f64::max))
}

pub fn solve_fixed_point(lp: &MutationLoop) -> Result<FixedPoint> {
    solve_fixed_point_from(lp, &vec![1.0; lp.n()])
}

/// Damped Newton on `log mu(e^u) - u`.
pub fn solve_fixed_point_from(lp: &MutationLoop, y0: &[f64]) -> Result<FixedPoint> {
    let n = lp.n();
    let mut u: DVector<f64> = DVector::from_iterator(n, y0.iter().map(|y| y.ln()));
    let eval = |u: &DVector<f64>| -> Result<(LoopRun, DVector<f64>)> {
        let y: Vec<f64> = u.iter().map(|x| x.exp()).collect();
        let run = run_loop(lp, &y)?;
        let f = DVector::from_iterator(
            n,
            run.final_state.y.iter().zip(&y).map(|(m, y)| m.ln() - y.ln()),
        );
        Ok((run, f))
    };
    let (mut run, mut f) = eval(&u)?;
    let mut best = residual(&run);
    for iter in 0..MAX_ITERS {
        if best <= tolerance(&run.initial.y) {
            return Ok(FixedPoint { eta: run.initial.y.clone(), residual: best, newton_iters: iter });
        }
        let y = &run.initial.y;
        let mu = &run.final_state.y;
        let g = DMatrix::from_fn(n, n, |i, j| {
            run.jacobian[(i, j)] * y[j] / mu[i] - if i == j { 1.0 } else { 0.0 }
        });
        let Some(step) = g.lu().solve(&(-&f)) else {
            return Err(Error::NoConvergence { residual: best });
        };
        let fnorm = f.amax();
        let mut lambda = 1.0;
        let mut accepted = None;
        for _ in 0..40 {
            let trial = &u + &step * lambda;
            if let Ok((r, ft)) = eval(&trial) {
                if ft.amax() < fnorm || ft.amax() == 0.0 {
                    accepted = Some((trial, r, ft));
                    break;
                }
            }
            lambda *= 0.5;
        }
        let Some((nu, nr, nf)) = accepted else {
            // no decrease possible at double precision
            break;
        };
        u = nu;
        run = nr;
        f = nf;
        best = residual(&run);
    }
    if best <= tolerance(&run.initial.y) {
        return Ok(FixedPoint { eta: run.initial.y.clone(), residual: best, newton_iters: MAX_ITERS });
    }
    Err(Error::NoConvergence { residual: best })
}

pub fn jacobian_at(lp: &MutationLoop, y: &[f64]) -> Result<DMatrix<f64>> {
    Ok(run_loop(lp, y)?.jacobian)
}

pub fn eigenvalues(j: &DMatrix<f64>) -> Vec<Complex<f64>> {
    j.clone().complex_eigenvalues().iter().copied().collect()
}

/// Snaps eigenvalues to `order`-th roots of unity.
pub fn snap(eigs: &[Complex<f64>], order: usize) -> (Vec<usize>, f64) {
    let t = order as f64;
    let mut err: f64 = 0.0;
    let mut out: Vec<usize> = eigs
        .iter()
        .map(|z| {
            let k = (z.arg() * t / (2.0 * PI)).round().rem_euclid(t) as usize;
            let w = Complex::from_polar(1.0, 2.0 * PI * k as f64 / t);
            err = err.max((z - w).norm());
            k
        })
        .collect();
    out.sort_unstable();
    (out, err)
}

pub fn exponents_of_jacobian(j: &DMatrix<f64>, order: usize) -> Result<ExponentResult> {
    let eigs = eigenvalues(j);
    let (exponents, snap_error) = snap(&eigs, order);
    if snap_error > 1e-4 {
        return Err(Error::NotRootsOfUnity { order, error: snap_error });
    }
    let mut mirrored: Vec<usize> = exponents.iter().map(|&m| (order - m) % order).collect();
    mirrored.sort_unstable();
    Ok(ExponentResult {
        order,
        eigenvalues: eigs.iter().map(|z| (z.re, z.im)).collect(),
        symmetric: mirrored == exponents,
        exponents,
        snap_error,
    })
}

pub fn exponents(lp: &MutationLoop, order: usize) -> Result<(FixedPoint, ExponentResult)> {
    let fp = solve_fixed_point(lp)?;
    let j = jacobian_at(lp, &fp.eta)?;
    Ok((fp, exponents_of_jacobian(&j, order)?))
}

/// `det(x I - J)` by LU with partial pivoting.
pub fn char_poly_at(j: &DMatrix<f64>, x: f64) -> f64 {
    let n = j.nrows();
    (DMatrix::<f64>::identity(n, n) * x - j).lu().determinant()
}

/// Coefficients of `det(x I - J)` from the leading one down, expanded from eigenvalues.
pub fn char_poly_coeffs(j: &DMatrix<f64>) -> Vec<f64> {
    let mut c = vec![Complex::new(1.0, 0.0)];
    for z in eigenvalues(j) {
        let mut next = c.clone();
        next.push(Complex::new(0.0, 0.0));
        for (i, &ci) in c.iter().enumerate() {
            next[i + 1] -= ci * z;
        }
        c = next;
    }
    c.iter().map(|z| z.re).collect()
}

/// Max-norm of `J^p - I`.
pub fn power_defect(j: &DMatrix<f64>, p: usize) -> f64 {
    let n = j.nrows();
    let mut acc = DMatrix::<f64>::identity(n, n);
    for _ in 0..p {
        acc = &acc * j;
    }
    (acc - DMatrix::<f64>::identity(n, n)).amax()
}
