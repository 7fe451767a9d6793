// Generators and checks shared by the property suite and the acceptance runner.
#![allow(dead_code, clippy::needless_range_loop)]

use nalgebra::DMatrix;
use num_rational::Rational64;
use proptest::prelude::*;
use ysys::cli::default_cases;
use ysys::dynkin::DynkinType;
use ysys::family::{build_family_loop, FamilyLoop};
use ysys::qseries::Lattice;
use ysys::quiver::{MutationLoop, Permutation, Quiver};
use ysys::yseed::run_loop;

pub fn skew(n: usize, upper: &[i64]) -> Quiver {
    let mut b = vec![vec![0; n]; n];
    let mut it = upper.iter();
    for i in 0..n {
        for j in i + 1..n {
            let x = *it.next().unwrap();
            b[i][j] = x;
            b[j][i] = -x;
        }
    }
    Quiver::new(b).unwrap()
}

pub fn quiver_strategy(max_n: usize, max_mult: i64) -> impl Strategy<Value = Quiver> {
    (1..=max_n).prop_flat_map(move |n| {
        prop::collection::vec(-max_mult..=max_mult, n * (n - 1) / 2).prop_map(move |v| skew(n, &v))
    })
}

pub fn perm_strategy(n: usize) -> impl Strategy<Value = Permutation> {
    Just((0..n).collect::<Vec<usize>>()).prop_shuffle().prop_map(|v| Permutation::new(v).unwrap())
}

/// Acyclic quiver mutated at successive sinks, relabelled by a random permutation.
pub fn sink_loop_strategy() -> impl Strategy<Value = MutationLoop> {
    (1usize..=5).prop_flat_map(|n| {
        (prop::collection::vec(0i64..=2, n * (n - 1) / 2), perm_strategy(n)).prop_map(move |(v, pi)| {
            // arrows i -> j for i < j, so n - 1 is a sink
            let q = skew(n, &v);
            let seq: Vec<usize> = (0..n).rev().map(|k| pi.apply(k)).collect();
            MutationLoop::new(q.apply_perm(&pi).unwrap(), seq, Permutation::identity(n)).unwrap()
        })
    })
}

pub fn family_strategy(max_vertices: usize) -> impl Strategy<Value = FamilyLoop> {
    let cases: Vec<(DynkinType, usize)> = default_cases()
        .into_iter()
        .filter(|&(t, l)| build_family_loop(t, l).map(|f| f.n() <= max_vertices).unwrap_or(false))
        .collect();
    prop::sample::select(cases).prop_map(|(t, l)| build_family_loop(t, l).unwrap())
}

pub fn positive_point(n: usize) -> impl Strategy<Value = Vec<f64>> {
    prop::collection::vec(-1.5f64..1.5, n).prop_map(|v| v.into_iter().map(f64::exp).collect())
}

/// Central differences against the accumulated Jacobian, relative tolerance 1e-6.
pub fn check_finite_differences(lp: &MutationLoop, y: &[f64]) -> Result<(), String> {
    let j = run_loop(lp, y).map_err(|e| e.to_string())?.jacobian;
    let n = y.len();
    for c in 0..n {
        let h = 1e-6 * y[c];
        let mut yp = y.to_vec();
        let mut ym = y.to_vec();
        yp[c] += h;
        ym[c] -= h;
        let fp = run_loop(lp, &yp).map_err(|e| e.to_string())?.final_state.y;
        let fm = run_loop(lp, &ym).map_err(|e| e.to_string())?.final_state.y;
        for r in 0..n {
            let fd = (fp[r] - fm[r]) / (2.0 * h);
            let scale = j[(r, c)].abs().max(fp[r].abs() / y[c]).max(1e-3);
            if (fd - j[(r, c)]).abs() > 1e-6 * scale {
                return Err(format!("entry ({r}, {c}): {fd} vs {}", j[(r, c)]));
            }
        }
    }
    Ok(())
}

/// `K = (M^T M + I) / den`, positive definite for any `M`.
pub fn pd_strategy() -> impl Strategy<Value = Vec<Vec<Rational64>>> {
    (1usize..=3)
        .prop_flat_map(|n| (prop::collection::vec(prop::collection::vec(-2i64..=2, n), n), 1i64..=3))
        .prop_map(|(m, den)| {
            let n = m.len();
            (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| {
                            let s: i64 = (0..n).map(|r| m[r][i] * m[r][j]).sum::<i64>() + i64::from(i == j);
                            Rational64::new(s, den)
                        })
                        .collect()
                })
                .collect()
        })
}

/// Enumerated points against every point of `[0, side]^n`, which contains the ellipsoid.
pub fn check_lattice_completeness(k: &[Vec<Rational64>], order: i64) -> Result<(), String> {
    let n = k.len();
    let lat = Lattice::new(&k.to_vec()).map_err(|e| e.to_string())?;
    let mut got: Vec<Vec<i64>> = lat.points(order).into_iter().map(|(u, _)| u).collect();
    got.sort();

    let kf = DMatrix::from_fn(n, n, |i, j| *k[i][j].numer() as f64 / *k[i][j].denom() as f64);
    let lmin = kf.symmetric_eigenvalues().min();
    let side = (2.0 * order as f64 / lmin).sqrt().floor() as i64 + 1;
    let mut want = Vec::new();
    let mut u = vec![0i64; n];
    loop {
        let q: Rational64 = (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .map(|(i, j)| k[i][j] * u[i] * u[j])
            .sum::<Rational64>()
            / 2;
        if q <= Rational64::from_integer(order) {
            want.push(u.clone());
        }
        let mut p = 0;
        while p < n && u[p] == side {
            u[p] = 0;
            p += 1;
        }
        if p == n {
            break;
        }
        u[p] += 1;
    }
    want.sort();
    if got == want {
        Ok(())
    } else {
        Err(format!("{} enumerated, {} in the box", got.len(), want.len()))
    }
}
