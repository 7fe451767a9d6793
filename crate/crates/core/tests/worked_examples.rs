// Frozen reference values for (A_1,4), (A_3,3), (B_3,2) and the A_2 loop.
// Matrices are in J order: (1,1), (1,2), .., (r, t_r l - 1).

use num_rational::Rational64;
use ysys::dynkin::DynkinType;
use ysys::family::build_family_loop;
use ysys::network::{build_network, family_network, h_group, nz_matrices};
use ysys::qseries::{all_partition_qseries, partition_qseries, sector_groups, total_with_sector_check};
use ysys::quiver::{MutationLoop, Permutation, Quiver};
use ysys::rootpoly::{verify_conjecture, Status};
use ysys::spectral;

fn ty(s: &str) -> DynkinType {
    s.parse().unwrap()
}

fn scaled(den: i64, m: &[&[i64]]) -> Vec<Vec<Rational64>> {
    m.iter().map(|r| r.iter().map(|&x| Rational64::new(x, den)).collect()).collect()
}

fn two_i(n: usize) -> Vec<Vec<i64>> {
    (0..n).map(|i| (0..n).map(|j| if i == j { 2 } else { 0 }).collect()).collect()
}

fn rows(m: &[&[i64]]) -> Vec<Vec<i64>> {
    m.iter().map(|r| r.to_vec()).collect()
}

#[test]
fn a1_level4_fixed_point_and_char_poly() {
    let fl = build_family_loop(ty("A1"), 4).unwrap();
    let (fp, ex) = spectral::exponents(&fl.lp, fl.period()).unwrap();
    for (got, want) in fp.eta.iter().zip([2.0, 1.0 / 3.0, 2.0]) {
        assert!((got - want).abs() < 1e-10, "{got} vs {want}");
    }
    let j = spectral::jacobian_at(&fl.lp, &fp.eta).unwrap();
    for (got, want) in spectral::char_poly_coeffs(&j).iter().zip([1.0, 2.0, 2.0, 1.0]) {
        assert!((got - want).abs() < 1e-8);
    }
    assert_eq!(ex.exponents, vec![2, 3, 4]);
    assert!((spectral::char_poly_at(&j, 1.0) - 6.0).abs() < 1e-10);
}

#[test]
fn exponents_a3_level3_and_b3_level2() {
    let r = verify_conjecture(ty("A3"), 3).unwrap();
    assert_eq!(r.computed, vec![2, 3, 3, 4, 4, 5]);
    assert_eq!(r.status, Status::EmpiricalMatch);
    let r = verify_conjecture(ty("B3"), 2).unwrap();
    assert_eq!(r.computed, vec![2, 4, 6, 7, 8, 10, 12]);
    assert_eq!(r.conjectured, r.computed);
}

#[test]
fn a2_loop_network() {
    // 2 -> 1, mutated at 1 then 2
    let q = Quiver::new(vec![vec![0, -1], vec![1, 0]]).unwrap();
    let lp = MutationLoop::new(q, vec![0, 1], Permutation::identity(2)).unwrap();
    let nz = nz_matrices(&build_network(&lp).unwrap());
    assert_eq!(nz.aplus, rows(&[&[2, 0], &[0, 2]]));
    assert_eq!(nz.aminus, rows(&[&[2, -1], &[-1, 2]]));
    assert_eq!(h_group(&nz).unwrap().order, 4);
}

#[test]
fn a3_level3_nz_matrices() {
    let fl = build_family_loop(ty("A3"), 3).unwrap();
    let f = family_network(&fl).unwrap();
    assert_eq!(f.n0, two_i(6));
    let nplus = rows(&[
        &[0, 1, 0, 0, 0, 0],
        &[1, 0, 0, 0, 0, 0],
        &[0, 0, 0, 1, 0, 0],
        &[0, 0, 1, 0, 0, 0],
        &[0, 0, 0, 0, 0, 1],
        &[0, 0, 0, 0, 1, 0],
    ]);
    let nminus = rows(&[
        &[0, 0, 1, 0, 0, 0],
        &[0, 0, 0, 1, 0, 0],
        &[1, 0, 0, 0, 1, 0],
        &[0, 1, 0, 0, 0, 1],
        &[0, 0, 1, 0, 0, 0],
        &[0, 0, 0, 1, 0, 0],
    ]);
    let aplus = rows(&[
        &[2, -1, 0, 0, 0, 0],
        &[-1, 2, 0, 0, 0, 0],
        &[0, 0, 2, -1, 0, 0],
        &[0, 0, -1, 2, 0, 0],
        &[0, 0, 0, 0, 2, -1],
        &[0, 0, 0, 0, -1, 2],
    ]);
    let aminus = rows(&[
        &[2, 0, -1, 0, 0, 0],
        &[0, 2, 0, -1, 0, 0],
        &[-1, 0, 2, 0, -1, 0],
        &[0, -1, 0, 2, 0, -1],
        &[0, 0, -1, 0, 2, 0],
        &[0, 0, 0, -1, 0, 2],
    ]);
    let sym = rows(&[
        &[4, -2, -2, 1, 0, 0],
        &[-2, 4, 1, -2, 0, 0],
        &[-2, 1, 4, -2, -2, 1],
        &[1, -2, -2, 4, 1, -2],
        &[0, 0, -2, 1, 4, -2],
        &[0, 0, 1, -2, -2, 4],
    ]);
    let k = scaled(
        3,
        &[
            &[4, 2, -2, -1, 0, 0],
            &[2, 4, -1, -2, 0, 0],
            &[-2, -1, 4, 2, -2, -1],
            &[-1, -2, 2, 4, -1, -2],
            &[0, 0, -2, -1, 4, 2],
            &[0, 0, -1, -2, 2, 4],
        ],
    );
    assert_eq!(f.nplus, nplus);
    assert_eq!(f.nminus, nminus);
    assert_eq!(f.nz.aplus, aplus);
    assert_eq!(f.nz.aminus, aminus);
    assert_eq!(f.nz.symplectic_product(), sym);
    assert_eq!(f.nz.k.as_ref().unwrap(), &k);
    assert_eq!(h_group(&f.nz).unwrap().order, 27);
}

#[test]
fn b3_level2_nz_matrices() {
    let fl = build_family_loop(ty("B3"), 2).unwrap();
    let f = family_network(&fl).unwrap();
    assert_eq!(f.n0, two_i(5));
    assert_eq!(
        f.nplus,
        rows(&[&[0, 0, 0, 0, 0], &[0, 0, 0, 0, 0], &[0, 0, 0, 1, 0], &[0, 0, 1, 0, 1], &[0, 0, 0, 1, 0]])
    );
    assert_eq!(
        f.nminus,
        rows(&[&[0, 1, 0, 0, 0], &[1, 0, 1, 2, 1], &[0, 0, 0, 0, 0], &[0, 1, 0, 0, 0], &[0, 0, 0, 0, 0]])
    );
    assert_eq!(
        f.nz.aplus,
        rows(&[&[2, 0, 0, 0, 0], &[0, 2, 0, 0, 0], &[0, 0, 2, -1, 0], &[0, 0, -1, 2, -1], &[0, 0, 0, -1, 2]])
    );
    assert_eq!(
        f.nz.aminus,
        rows(&[&[2, -1, 0, 0, 0], &[-1, 2, -1, -2, -1], &[0, 0, 2, 0, 0], &[0, -1, 0, 2, 0], &[0, 0, 0, 0, 2]])
    );
    assert_eq!(
        f.nz.symplectic_product(),
        rows(&[&[4, -2, 0, 0, 0], &[-2, 4, 0, -2, 0], &[0, 0, 4, -2, 0], &[0, -2, -2, 4, -2], &[0, 0, 0, -2, 4]])
    );
    let k = scaled(
        2,
        &[&[2, -1, 0, 0, 0], &[-1, 2, -1, -2, -1], &[0, -1, 3, 2, 1], &[0, -2, 2, 4, 2], &[0, -1, 1, 2, 3]],
    );
    assert_eq!(f.nz.k.as_ref().unwrap(), &k);
    assert_eq!(h_group(&f.nz).unwrap().order, 16);
}

fn assert_series(typ: &str, level: usize, sigma: &[i64], offset: Rational64, coeffs: &[i64]) {
    let order = (offset + (coeffs.len() as i64 - 1)).ceil().to_integer();
    let s = partition_qseries(ty(typ), level, sigma, order).unwrap();
    assert_eq!(s.coefficients_from(offset)[..coeffs.len()], *coeffs, "{typ} {sigma:?}");
    assert_eq!(s.leading().unwrap().0, offset, "{typ} {sigma:?}");
}

#[test]
fn a3_level3_series() {
    let r = |n, d| Rational64::new(n, d);
    assert_series("A3", 3, &[0, 0, 0], r(0, 1), &[1, 0, 6, 20, 54, 144, 360, 804]);
    assert_series("A3", 3, &[1, 0, 0], r(2, 3), &[1, 3, 13, 38, 108, 264, 622, 1364]);
    assert_series("A3", 3, &[2, 1, 0], r(1, 1), &[1, 6, 18, 56, 144, 357, 808, 1767]);
    assert_series("A3", 3, &[1, 0, 1], r(4, 3), &[2, 8, 28, 76, 199, 468, 1060, 2256]);
}

#[test]
fn a3_level3_sector_grouping() {
    let all = all_partition_qseries(ty("A3"), 3, 5).unwrap();
    assert_eq!(all.len(), 27);
    let groups = sector_groups(&all);
    let sizes: Vec<usize> = groups.iter().map(|g| g.1.len()).collect();
    assert_eq!(sizes, vec![12, 8, 6, 1]);
    let parse = |s: &str| s.bytes().map(|b| (b - b'0') as i64).collect::<Vec<i64>>();
    let twelve: Vec<Vec<i64>> =
        "100,200,010,110,020,220,001,011,111,002,022,222".split(',').map(parse).collect();
    let eight: Vec<Vec<i64>> = "210,120,211,021,221,012,112,122".split(',').map(parse).collect();
    let six: Vec<Vec<i64>> = "101,201,121,102,202,212".split(',').map(parse).collect();
    for (want, got) in [twelve, eight, six].iter().zip(&groups) {
        let mut w = want.clone();
        w.sort();
        assert_eq!(&w, &got.1);
    }
}

#[test]
fn b3_level2_series() {
    let r = |n, d| Rational64::new(n, d);
    assert_series("B3", 2, &[0, 0, 0], r(0, 1), &[1, 0, 9, 21, 66, 144, 349, 723]);
    assert_series("B3", 2, &[1, 0, 0], r(1, 2), &[1, 4, 13, 38, 97, 228, 504, 1057]);
    assert_series("B3", 2, &[0, 0, 1], r(3, 4), &[1, 5, 17, 48, 120, 279, 608, 1261]);
    assert_series("B3", 2, &[1, 0, 1], r(5, 4), &[3, 9, 30, 75, 187, 411, 885, 1783]);
    assert_series("B3", 2, &[0, 0, 2], r(1, 1), &[3, 6, 25, 57, 156, 334, 744, 1491]);
}

#[test]
fn b3_level2_sector_grouping() {
    let all = all_partition_qseries(ty("B3"), 2, 5).unwrap();
    assert_eq!(all.len(), 16);
    let first = &all[&vec![1, 0, 0]];
    for c in [[0, 1, 0], [1, 1, 0], [1, 0, 2], [0, 1, 2], [1, 1, 2]] {
        assert_eq!(&all[&c.to_vec()], first);
    }
    let quarter = &all[&vec![0, 0, 1]];
    for c in [[0, 1, 1], [1, 1, 1], [0, 0, 3], [0, 1, 3], [1, 1, 3]] {
        assert_eq!(&all[&c.to_vec()], quarter);
    }
    assert_eq!(all[&vec![1, 0, 1]], all[&vec![1, 0, 3]]);
}

#[test]
fn sector_sums_match_total() {
    for (t, l) in [("A3", 3), ("B3", 2)] {
        let rep = total_with_sector_check(ty(t), l, 5).unwrap();
        assert!(rep.consistent, "{t}");
        assert_eq!(rep.total, rep.sector_sum);
    }
}
