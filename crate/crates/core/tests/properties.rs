use std::thread;

use approx::assert_abs_diff_eq;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use seec_core::{
    criterion_f, gauss_hermite_rule, hermite_eval, integrate_panels, legendre_rule, marginal_mass,
    shannon_entropy, threshold_eta0, wavefunction, HermiteOrder, ModePair, Side, Space,
    DEFAULT_PANEL_ORDER,
};

#[test]
fn f_is_linear_in_eta() {
    let mut rng = StdRng::seed_from_u64(0x5eec);
    for _ in 0..100 {
        let n = rng.random_range(0..=8);
        let m = rng.random_range(0..=8);
        let eta = rng.random_range(-2.0..=2.0);
        let f = criterion_f(n, m, eta).unwrap().f;
        let f0 = criterion_f(n, m, 0.0).unwrap().f;
        assert!((f - (f0 - eta)).abs() <= 1e-9, "n={n} m={m} eta={eta}");
    }
}

#[test]
fn thresholds_are_symmetric() {
    for n in 0..=8 {
        for m in 0..=8 {
            let d = (threshold_eta0(n, m).unwrap() - threshold_eta0(m, n).unwrap()).abs();
            assert!(d <= 1e-9, "({n},{m}): {d:e}");
        }
    }
}

#[test]
fn thresholds_grow_in_each_quantum_number() {
    for n in 0..=7 {
        for m in 0..=7 {
            let here = threshold_eta0(n, m).unwrap();
            assert!(threshold_eta0(n + 1, m).unwrap() > here, "n step at ({n},{m})");
            assert!(threshold_eta0(n, m + 1).unwrap() > here, "m step at ({n},{m})");
        }
    }
}

#[test]
fn marginals_are_normalized() {
    for n in 0..=5 {
        for m in 0..=5 {
            for eta in [0.0, 0.5, 1.0] {
                for side in [Side::WMinus, Side::VPlus, Side::WPlus, Side::VMinus] {
                    let mass = marginal_mass(side, n, m, eta, DEFAULT_PANEL_ORDER).unwrap();
                    assert!((mass - 1.0).abs() <= 1e-8, "{side:?} ({n},{m},{eta}): {mass}");
                }
            }
        }
    }
}

fn tensor_norm(mode: &ModePair, eta: f64, space: Space) -> f64 {
    let edges: Vec<f64> = (-8..=8).map(|k| 2.0 * f64::from(k)).collect();
    let rule = legendre_rule(20).unwrap().with_panels(edges).unwrap();
    let outer = |up: f64| {
        let inner = |um: f64| wavefunction(mode, eta, space, up, um).unwrap().powi(2);
        integrate_panels(inner, &rule).unwrap()
    };
    0.5 * integrate_panels(outer, &rule).unwrap()
}

#[test]
fn wavefunctions_are_normalized_with_half_jacobian() {
    for n in 0..=3 {
        for m in 0..=3 {
            let mode = ModePair::new(n, m).unwrap();
            for eta in [0.0, 0.5, 1.0] {
                for space in [Space::Position, Space::Momentum] {
                    let norm = tensor_norm(&mode, eta, space);
                    assert!((norm - 1.0).abs() <= 1e-8, "({n},{m},{eta},{space:?}): {norm}");
                }
            }
        }
    }
}

#[test]
fn hermite_polynomials_are_orthogonal() {
    let rule = gauss_hermite_rule(40).unwrap();
    for (j, k) in [(0, 2), (1, 3), (3, 7), (5, 12), (10, 19)] {
        let (hj, hk) = (HermiteOrder::new(j).unwrap(), HermiteOrder::new(k).unwrap());
        let dot = rule
            .integrate_weighted(|z| hermite_eval(hj, z).unwrap() * hermite_eval(hk, z).unwrap())
            .unwrap();
        let scale = rule.integrate_weighted(|z| hermite_eval(hk, z).unwrap().powi(2)).unwrap();
        assert!(dot.abs() / scale <= 1e-12, "<H{j}, H{k}> = {dot:e}");
    }
}

#[test]
fn ground_state_marginal_is_unit_variance_gaussian() {
    // w- at eta = 0 has unit variance, so H = ln(2 pi e) / 2
    let h = 0.5 * (std::f64::consts::TAU * std::f64::consts::E).ln();
    assert_abs_diff_eq!(shannon_entropy(Side::WMinus, 0, 0, 0.0).unwrap(), h, epsilon = 1e-12);
    assert_abs_diff_eq!(shannon_entropy(Side::VPlus, 0, 0, 0.0).unwrap(), h, epsilon = 1e-12);
}

#[test]
fn repeated_and_concurrent_evaluation_agree() {
    let serial: Vec<f64> = (0..=12).map(|n| threshold_eta0(n, 12 - n).unwrap()).collect();
    let handles: Vec<_> = (0..8)
        .map(|_| thread::spawn(|| (0..=12).map(|n| threshold_eta0(n, 12 - n).unwrap()).collect::<Vec<f64>>()))
        .collect();
    for h in handles {
        let got = h.join().unwrap();
        assert!(got.iter().zip(&serial).all(|(a, b)| a.to_bits() == b.to_bits()));
    }
}
