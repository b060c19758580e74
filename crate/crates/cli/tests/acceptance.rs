//! Acceptance gate: nine end-to-end criteria covering the published
//! constants, the bound sweeps, the witness and tail inequalities, the
//! oracle equivalences, and the threshold locations. Each test prints a
//! single PASS line once every assertion in it has held.

use std::process::Command;
use std::time::{Duration, Instant};

use ml_partial::bounds::{check_tail_inequality, raw_bound, w_witness};
use ml_partial::eval::{eval_normalized, eval_normalized_derivative};
use ml_partial::identities::{identity_residual, SpecialCase};
use ml_partial::verify::{
    scan_beta, univalence_spot_check, verify_lemma, verify_theorem, Status, VerifyConfig,
    SERIES_TOL,
};
use ml_partial::{build_table, MLParams, RatioCase, RatioKind};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use statrs::function::gamma::ln_gamma;

const SINH_1: f64 = 1.1752011936438014;

fn corollary_rows() -> Vec<serde_json::Value> {
    let out = Command::new(env!("CARGO_BIN_EXE_ml-partial"))
        .args(["verify", "corollary", "--id", "all", "--samples", "4096"])
        .output()
        .expect("binary runs");
    assert!(out.status.success(), "exit: {:?}", out.status);
    String::from_utf8_lossy(&out.stdout)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect()
}

fn assert_corollary_row(row: &serde_json::Value, case: &str, bound: f64, inf: f64) {
    assert_eq!(row["case"], case);
    assert_eq!(row["status"], "pass", "{case}");
    assert!((row["paper_bound"].as_f64().unwrap() - bound).abs() <= 1e-15, "{case}");
    let margin = row["margin"].as_f64().unwrap();
    assert!(margin > 0.0, "{case}: margin {margin}");
    let empirical = row["empirical_inf"].as_f64().unwrap();
    assert!(
        (empirical - inf).abs() <= 1e-9,
        "{case}: inf {empirical} vs {inf}"
    );
}

#[test]
fn criterion_1_first_corollary_family() {
    let started = Instant::now();
    let rows = corollary_rows();
    assert_eq!(rows.len(), 8);
    assert_corollary_row(&rows[0], "c31a", 0.25, 0.8414709848078965);
    assert_corollary_row(&rows[1], "c31b", 4.0 / 7.0, 0.8509181282393216);
    assert_corollary_row(&rows[2], "c31c", 5.0 / 18.0, 0.4596976941318603);
    assert_corollary_row(&rows[3], "c31d", 18.0 / 13.0, 1.8413471884155845);
    let elapsed = started.elapsed();
    assert!(elapsed < Duration::from_secs(10), "took {elapsed:?}");
    println!("acceptance criterion 1: PASS (c31a-c31d certified in {elapsed:?})");
}

#[test]
fn criterion_2_second_corollary_family() {
    let started = Instant::now();
    let rows = corollary_rows();
    assert_corollary_row(&rows[4], "c32a", 11.0 / 96.0, 0.1585290151921035);
    assert_corollary_row(&rows[5], "c32b", 32.0 / 7.0, 5.707723670154228);
    assert_corollary_row(&rows[6], "c32c", 1.0 / 24.0, 0.3011686789397568);
    assert_corollary_row(&rows[7], "c32d", 8.0 / 5.0, std::f64::consts::E);
    let elapsed = started.elapsed();
    assert!(elapsed < Duration::from_secs(10), "took {elapsed:?}");
    println!("acceptance criterion 2: PASS (c32a-c32d certified in {elapsed:?})");
}

const LEMMA_GRID: [f64; 5] = [1.0, 1.5, 2.0, 3.0, 4.0];

#[test]
fn criterion_3_modulus_bounds_across_the_grid() {
    let cfg = VerifyConfig::default();
    let mut e22_sup = None;
    for &alpha in &LEMMA_GRID {
        for &beta in &LEMMA_GRID {
            let params = MLParams::new(alpha, beta).unwrap();
            let [value, deriv] = verify_lemma(params, &cfg).unwrap();
            assert_eq!(value.status, Status::Pass, "alpha={alpha}, beta={beta}");
            assert_eq!(deriv.status, Status::Pass, "alpha={alpha}, beta={beta}");
            if alpha == 2.0 && beta == 2.0 {
                e22_sup = value.empirical_inf;
            }
        }
    }
    let sup = e22_sup.unwrap();
    assert!((sup - SINH_1).abs() <= 1e-9, "sup {sup}");
    println!("acceptance criterion 3: PASS (25 parameter pairs, sup|NE_22| = sinh 1)");
}

const ALPHAS: [f64; 4] = [1.0, 1.5, 2.0, 3.0];
const MS: [usize; 4] = [0, 1, 2, 5];
const VALUE_BETAS: [f64; 4] = [1.62, 2.0, 3.0, 5.0];
const DERIV_BETAS: [f64; 4] = [3.57, 4.0, 5.0, 8.0];

fn sweep_sets() -> Vec<(RatioKind, f64, usize, f64)> {
    let mut sets = Vec::new();
    for kind in RatioKind::ALL {
        let betas = if kind.is_derivative() {
            &DERIV_BETAS
        } else {
            &VALUE_BETAS
        };
        for &alpha in &ALPHAS {
            for &m in &MS {
                for &beta in betas {
                    sets.push((kind, alpha, m, beta));
                }
            }
        }
    }
    sets
}

#[test]
fn criterion_4_theorem_sweeps() {
    let started = Instant::now();
    let cfg = VerifyConfig::default();
    let sets = sweep_sets();
    assert_eq!(sets.len(), 256);
    for &(kind, alpha, m, beta) in &sets {
        let params = MLParams::new(alpha, beta).unwrap();
        let report = verify_theorem(params, RatioCase::new(kind, m), &cfg).unwrap();
        assert_eq!(
            report.status,
            Status::Pass,
            "{kind:?} alpha={alpha} m={m} beta={beta}: {report:?}"
        );
    }
    let elapsed = started.elapsed();
    assert!(elapsed < Duration::from_secs(300), "took {elapsed:?}");
    println!(
        "acceptance criterion 4: PASS (256 parameter sets certified in {elapsed:?})"
    );
}

#[test]
fn criterion_5_tail_inequalities_and_witness_containment() {
    for &(kind, alpha, m, beta) in &sweep_sets() {
        let params = MLParams::new(alpha, beta).unwrap();
        let table = build_table(params, SERIES_TOL).unwrap();
        let (lhs, ok) = check_tail_inequality(&table, m, kind.is_derivative());
        assert!(
            ok && lhs <= 1.0 + 1e-10,
            "{kind:?} alpha={alpha} m={m} beta={beta}: lhs {lhs}"
        );
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let case = RatioCase::new(kind, m);
        for _ in 0..500 {
            let u: f64 = rng.gen();
            let t: f64 = rng.gen();
            let z = Complex64::from_polar(u.sqrt(), std::f64::consts::TAU * t);
            let w = w_witness(&table, case, z).unwrap();
            assert!(
                w.norm() < 1.0,
                "{kind:?} alpha={alpha} m={m} beta={beta}, z={z}: |w| = {}",
                w.norm()
            );
        }
    }
    println!(
        "acceptance criterion 5: PASS (tail sums and 500-point witness checks, 256 sets)"
    );
}

#[test]
fn criterion_6_oracle_equivalence_and_identities() {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for &alpha in &LEMMA_GRID {
        for &beta in &LEMMA_GRID {
            let table = build_table(MLParams::new(alpha, beta).unwrap(), SERIES_TOL).unwrap();
            // Oracle: statrs log-gamma, per-term powers, smallest first.
            let coeffs: Vec<f64> = (0..=300)
                .map(|n| {
                    if n == 0 {
                        1.0
                    } else {
                        (ln_gamma(beta) - ln_gamma(alpha * n as f64 + beta)).exp()
                    }
                })
                .collect();
            for _ in 0..200 {
                let u: f64 = rng.gen();
                let t: f64 = rng.gen();
                let z = Complex64::from_polar(u.sqrt(), std::f64::consts::TAU * t);
                let mut sum = Complex64::new(0.0, 0.0);
                for n in (0..coeffs.len()).rev() {
                    sum += coeffs[n] * z.powu(n as u32);
                }
                let want = z * sum;
                let got = eval_normalized(&table, z).unwrap();
                let rel = (got - want).norm() / want.norm().max(1.0);
                assert!(rel <= 1e-10, "alpha={alpha}, beta={beta}, z={z}: rel {rel:e}");
            }
        }
    }

    let mut grid = vec![Complex64::new(0.0, 0.0)];
    for _ in 0..100 {
        let u: f64 = rng.gen();
        let t: f64 = rng.gen();
        grid.push(Complex64::from_polar(u.sqrt(), std::f64::consts::TAU * t));
    }
    for case in SpecialCase::ALL {
        let residual = identity_residual(case, &grid).unwrap();
        assert!(residual <= 1e-12, "{case:?}: {residual:e}");
    }
    let table = build_table(MLParams::new(1.0, 1.0).unwrap(), SERIES_TOL).unwrap();
    for &z in &grid {
        let residual = (eval_normalized(&table, z).unwrap() - z * z.exp()).norm();
        assert!(residual <= 1e-12, "z={z}: {residual:e}");
    }
    println!("acceptance criterion 6: PASS (oracle at 5000 points, identities at 101)");
}

#[test]
fn criterion_7_finite_difference_derivative() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let h = 1e-5;
    for &(alpha, beta) in &[(1.0, 1.0), (1.5, 2.5), (2.0, 4.0), (3.0, 2.0), (4.0, 1.5)] {
        let table = build_table(MLParams::new(alpha, beta).unwrap(), SERIES_TOL).unwrap();
        for _ in 0..50 {
            let u: f64 = rng.gen();
            let t: f64 = rng.gen();
            let z = Complex64::from_polar(0.9 * u.sqrt(), std::f64::consts::TAU * t);
            let fd = (eval_normalized(&table, z + Complex64::new(h, 0.0)).unwrap()
                - eval_normalized(&table, z - Complex64::new(h, 0.0)).unwrap())
                / (2.0 * h);
            let exact = eval_normalized_derivative(&table, z).unwrap();
            assert!(
                (fd - exact).norm() <= 1e-6,
                "alpha={alpha}, beta={beta}, z={z}"
            );
        }
    }
    println!("acceptance criterion 7: PASS (central differences at 250 interior points)");
}

#[test]
fn criterion_8_univalence_grid() {
    let cfg = VerifyConfig::default();
    for &alpha in &[1.0, 2.0, 4.0] {
        for &beta in &[3.5616, 4.0, 6.0] {
            let params = MLParams::new(alpha, beta).unwrap();
            let report = univalence_spot_check(params, &cfg).unwrap();
            assert_eq!(report.status, Status::Pass, "alpha={alpha}, beta={beta}");
            assert!(
                report.empirical_inf.unwrap() > 1e-9,
                "alpha={alpha}, beta={beta}"
            );
        }
    }
    println!("acceptance criterion 8: PASS (Re NE' > 0 on the 3x3 grid)");
}

#[test]
fn criterion_9_threshold_crossings() {
    let cfg = VerifyConfig {
        boundary_samples: 512,
        ..VerifyConfig::default()
    };

    // The sweep brackets each bound's sign change; bisection on the bound
    // formula then pins the crossing.
    let locate = |kind: RatioKind, lo: f64, hi: f64| -> f64 {
        let betas: Vec<f64> = (0..=20).map(|i| lo + (hi - lo) * i as f64 / 20.0).collect();
        let reports = scan_beta(kind, 2.0, 0, &betas, &cfg).unwrap();
        let mut bracket = None;
        for pair in reports.windows(2) {
            if pair[0].paper_bound < 0.0 && pair[1].paper_bound >= 0.0 {
                bracket = Some((pair[0].beta, pair[1].beta));
            }
        }
        let (mut a, mut b) = bracket.expect("sweep brackets the sign change");
        for _ in 0..60 {
            let mid = 0.5 * (a + b);
            if raw_bound(kind, mid) < 0.0 {
                a = mid;
            } else {
                b = mid;
            }
        }
        0.5 * (a + b)
    };

    let value_root = locate(RatioKind::FullOverPartial, 1.2, 2.2);
    assert!(
        (value_root - 1.6180340).abs() <= 1e-6,
        "value threshold at {value_root}"
    );
    let deriv_root = locate(RatioKind::DerivFullOverPartial, 3.0, 4.0);
    assert!(
        (deriv_root - 3.5615528).abs() <= 1e-6,
        "derivative threshold at {deriv_root}"
    );

    // The reciprocal bounds cross 1/2 at the same thresholds.
    let pof = raw_bound(RatioKind::PartialOverFull, value_root);
    assert!((pof - 0.5).abs() <= 1e-6);
    let dpof = raw_bound(RatioKind::DerivPartialOverFull, deriv_root);
    assert!((dpof - 0.5).abs() <= 1e-6);
    println!(
        "acceptance criterion 9: PASS (thresholds {value_root:.7} and {deriv_root:.7})"
    );
}
