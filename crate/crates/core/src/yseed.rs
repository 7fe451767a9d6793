//! Y-seed mutation over positive reals, with chain-rule Jacobians along a loop.

use crate::error::{Error, Result};
use crate::quiver::{MutationLoop, Quiver};
use nalgebra::DMatrix;

#[derive(Debug, Clone, PartialEq)]
pub struct YState {
    pub quiver: Quiver,
    pub y: Vec<f64>,
}

#[derive(Debug, Clone)]
pub struct LoopRun {
    pub initial: YState,
    pub final_state: YState,
    /// `J_gamma(y0)`, including the final permutation.
    pub jacobian: DMatrix<f64>,
    /// Mutated vertex and its Y-value just before the mutation, per step.
    pub step_log: Vec<(usize, f64)>,
}

fn check_positive(y: &[f64]) -> Result<()> {
    match y.iter().position(|&v| !(v > 0.0 && v.is_finite())) {
        Some(i) => Err(Error::Domain { vertex: i, value: y[i] }),
        None => Ok(()),
    }
}

/// New Y-values after mutating at `k`, plus the factor `d Y~_i / d Y_k` for `i != k`.
fn mutate_values(q: &Quiver, y: &[f64], k: usize) -> (Vec<f64>, Vec<f64>) {
    let yk = y[k];
    let mut out = y.to_vec();
    let mut dk = vec![0.0; y.len()];
    for i in 0..y.len() {
        if i == k {
            out[i] = 1.0 / yk;
            continue;
        }
        let b = q.b[k][i];
        if b == 0 {
            continue;
        }
        let c = b.max(0);
        out[i] = y[i] * yk.powi(c as i32) * (1.0 + yk).powi(-b as i32);
        dk[i] = out[i] * (c as f64 / yk - b as f64 / (1.0 + yk));
    }
    (out, dk)
}

/// One mutation of the Y-seed together with its Jacobian matrix.
pub fn y_mutate(s: &YState, k: usize) -> Result<(YState, DMatrix<f64>)> {
    let n = s.quiver.n();
    if k >= n {
        return Err(Error::VertexOutOfRange { vertex: k, n });
    }
    if s.y.len() != n {
        return Err(Error::Dimension { expected: n, got: s.y.len() });
    }
    check_positive(&s.y)?;
    let (y, dk) = mutate_values(&s.quiver, &s.y, k);
    let mut jac = DMatrix::zeros(n, n);
    for i in 0..n {
        if i == k {
            jac[(k, k)] = -1.0 / (s.y[k] * s.y[k]);
        } else {
            jac[(i, i)] = y[i] / s.y[i];
            jac[(i, k)] = dk[i];
        }
    }
    check_positive(&y)?;
    Ok((YState { quiver: s.quiver.mutate(k)?, y }, jac))
}

/// Runs `mu_gamma` from `y0` and accumulates `J_gamma(y0)`.
pub fn run_loop(lp: &MutationLoop, y0: &[f64]) -> Result<LoopRun> {
    run_sequence(lp, &lp.m, y0)
}

/// As [`run_loop`] but with an explicit mutation order (same multiset of steps).
pub fn run_sequence(lp: &MutationLoop, seq: &[usize], y0: &[f64]) -> Result<LoopRun> {
    let n = lp.n();
    if y0.len() != n {
        return Err(Error::Dimension { expected: n, got: y0.len() });
    }
    check_positive(y0)?;
    let mut q = lp.quiver.clone();
    let mut y = y0.to_vec();
    let mut jac = DMatrix::<f64>::identity(n, n);
    let mut step_log = Vec::with_capacity(seq.len());
    for &k in seq {
        if k >= n {
            return Err(Error::VertexOutOfRange { vertex: k, n });
        }
        step_log.push((k, y[k]));
        let (next, dk) = mutate_values(&q, &y, k);
        // rows i != k: scale by Y~_i/Y_i and add dk_i times old row k
        let row_k = jac.row(k).clone_owned();
        for i in 0..n {
            if i == k {
                continue;
            }
            let scale = next[i] / y[i];
            if scale != 1.0 {
                let mut r = jac.row_mut(i);
                r *= scale;
            }
            if dk[i] != 0.0 {
                for c in 0..n {
                    jac[(i, c)] += dk[i] * row_k[c];
                }
            }
        }
        let mut r = jac.row_mut(k);
        r *= -1.0 / (y[k] * y[k]);
        check_positive(&next)?;
        y = next;
        q = q.mutate(k)?;
    }
    let inv = lp.nu.inverse();
    let mu: Vec<f64> = (0..n).map(|i| y[inv.apply(i)]).collect();
    let jacobian = DMatrix::from_fn(n, n, |i, j| jac[(inv.apply(i), j)]);
    Ok(LoopRun {
        initial: YState { quiver: lp.quiver.clone(), y: y0.to_vec() },
        final_state: YState { quiver: q.apply_perm(&lp.nu)?, y: mu },
        jacobian,
        step_log,
    })
}

/// Largest relative deviation of `mu_gamma` and `J_gamma` when the mutation order inside
/// each block is changed (reversed, and rotated by one).
pub fn block_order_deviation(lp: &MutationLoop, blocks: &[Vec<usize>], y0: &[f64]) -> Result<f64> {
    let base = run_loop(lp, y0)?;
    let mut worst: f64 = 0.0;
    for variant in 0..2 {
        let seq: Vec<usize> = blocks
            .iter()
            .flat_map(|b| {
                let mut b = b.clone();
                if variant == 0 {
                    b.reverse();
                } else if !b.is_empty() {
                    b.rotate_left(1);
                }
                b
            })
            .collect();
        let other = run_sequence(lp, &seq, y0)?;
        worst = worst.max(relative_gap(&base, &other));
    }
    Ok(worst)
}

pub(crate) fn relative_gap(a: &LoopRun, b: &LoopRun) -> f64 {
    let dy = a
        .final_state
        .y
        .iter()
        .zip(&b.final_state.y)
        .map(|(x, y)| (x - y).abs() / x.abs().max(1.0))
        .fold(0.0, f64::max);
    let scale = a.jacobian.amax().max(1.0);
    let dj = (&a.jacobian - &b.jacobian).amax() / scale;
    dy.max(dj)
}

pub fn half_step_order_invariance(lp: &MutationLoop, blocks: &[Vec<usize>], y0: &[f64]) -> Result<bool> {
    Ok(block_order_deviation(lp, blocks, y0)? <= 1e-12)
}
