mod common;

use std::f64::consts::PI;

use metaffine::cosmo::*;
use metaffine::geometry::*;
use metaffine::random::rng;
use metaffine::symmetry::*;
use metaffine::tensors::{self, Quantity};
use metaffine::Result;

fn sample(k: i8) -> Vec<Point> {
    halton_points(DEFAULT_SAMPLES, &SampleBox::for_group(Group::Cosmo(k)))
}

#[test]
fn minkowski_and_closed_metric() {
    let flat = CosmoParams::parse("1", "1", ["0"; 5], 0).unwrap();
    let g = cosmo_metric(&flat, &Point::new(0.0, 2.0, PI / 2.0, 0.0).unwrap()).unwrap();
    let diag: Vec<f64> = (0..4).map(|i| g.get(&[i, i])).collect();
    assert_eq!(diag, vec![-1.0, 1.0, 4.0, 4.0]);

    let closed = CosmoParams::parse("1", "1.5", ["0"; 5], 1).unwrap();
    let g = cosmo_metric(&closed, &Point::new(0.0, 0.5, 1.0, 0.0).unwrap()).unwrap();
    assert!((g.get(&[R, R]) - 2.25 / 0.75).abs() < 1e-14);
    assert!(cosmo_metric(&closed, &Point::new(0.0, 1.2, 1.0, 0.0).unwrap()).is_err());
}

#[test]
fn zero_connection_is_the_flat_skeleton() {
    let cp = CosmoParams::parse("1", "1", ["0"; 5], 0).unwrap();
    let g = cosmo_connection(&cp, &Point::new(0.0, 2.0, PI / 4.0, 0.0).unwrap()).unwrap();
    let expect = [
        ([R, TH, TH], -2.0),
        ([R, PH, PH], -1.0),
        ([TH, R, TH], 0.5),
        ([TH, TH, R], 0.5),
        ([PH, R, PH], 0.5),
        ([PH, PH, R], 0.5),
        ([PH, TH, PH], 1.0),
        ([PH, PH, TH], 1.0),
        ([TH, PH, PH], -0.5),
    ];
    let mut want = ComponentArray::zeros(g.variance());
    for (idx, v) in expect {
        want.set(&idx, v);
    }
    assert!(g.max_abs_diff(&want).0 < 1e-14, "{}", g.label(&g.max_abs_diff(&want).1));
}

#[test]
fn k5_entries() {
    let cp = CosmoParams::parse("1", "1", ["0", "0", "0", "0", "1"], 0).unwrap();
    let p = Point::new(0.0, 2.0, 0.9, 0.0).unwrap();
    let g = cosmo_connection(&cp, &p).unwrap();
    assert!((g.get(&[R, PH, TH]) - 4.0 * 0.9f64.sin()).abs() < 1e-14);
    assert!((g.get(&[TH, R, PH]) - 0.9f64.sin()).abs() < 1e-14);
}

#[test]
fn direct_assembly_matches_c_form() {
    for k in [-1, 0, 1] {
        let mut g = rng((42 + i64::from(k)) as u64);
        let cp = common::cosmo(&mut g, k);
        for p in sample(k) {
            let direct = cosmo_connection(&cp, &p).unwrap();
            let via_c = connection_from_jets(&cp.c_jets(p.t, p.r).unwrap(), &p);
            assert!(direct.max_abs_diff(&via_c).0 < 1e-14, "k = {k}");
        }
    }
}

#[test]
fn levi_civita_of_robertson_walker() {
    // K1 = N'/N, K2 = A A'/N^2, K3 = K4 = A'/A for N = 1 + t^2/4, A = exp(t/2).
    let n = "1 + t^2/4";
    let a = "exp(t/2)";
    let k1 = "(t/2)/(1 + t^2/4)";
    let k2 = "exp(t)/2/(1 + t^2/4)^2";
    for k in [-1, 0, 1] {
        let cp = CosmoParams::parse(n, a, [k1, k2, "1/2", "1/2", "0"], k).unwrap();
        let spec = cp.geometry();
        for p in sample(k) {
            let tor = tensors::compute(&spec, Quantity::Torsion, &p).unwrap();
            let q = tensors::compute(&spec, Quantity::Nonmetricity, &p).unwrap();
            assert!(tor.max_abs() < 1e-8);
            assert!(q.max_abs() < 1e-8, "k = {k}: {}", q.max_abs());
        }
    }
}

#[test]
fn curvature_paths_agree() {
    let cp = common::cosmo(&mut rng(44), -1);
    let gamma = |p: &Point| cosmo_connection(&cp, p);
    for p in sample(-1).into_iter().take(6) {
        let explicit = tensors::curvature_from_jets(&cp.c_jets(p.t, p.r).unwrap(), &p);
        let generic = tensors::curvature_generic(&gamma, &p).unwrap();
        assert!(explicit.scaled_diff(&generic) < 1e-6);
    }
}

#[test]
fn random_cosmologies_pass_for_every_k() {
    for k in [-1, 0, 1] {
        for seed in 0..3 {
            let cp = common::cosmo(&mut rng(50 + seed), k);
            let v = cosmo_symmetry_check(&cp, &sample(k), DEFAULT_TOL, false).unwrap();
            assert!(v.pass, "k = {k}: {} {}", v.max_metric_residual, v.max_connection_residual);
            assert_eq!(v.generators.len(), 6);
        }
    }
}

#[test]
fn reflection_needs_k5_zero() {
    let odd = CosmoParams::parse("1", "1", ["0", "0", "0", "0", "0.3"], 0).unwrap();
    let v = cosmo_symmetry_check(&odd, &sample(0), DEFAULT_TOL, true).unwrap();
    assert!(!v.pass);
    assert!(v.violated.contains(&"K5".to_string()));
    let even = CosmoParams::parse("1", "1", ["0.1", "0.2", "0.3", "0.4", "0"], 0).unwrap();
    assert!(cosmo_symmetry_check(&even, &sample(0), DEFAULT_TOL, true).unwrap().pass);
}

#[test]
fn perturbed_entry_fails_under_x3() {
    let cp = common::cosmo(&mut rng(45), 0);
    let metric = |p: &Point| cosmo_metric(&cp, p);
    let broken = |p: &Point| -> Result<ComponentArray> {
        let mut g = cosmo_connection(&cp, p)?;
        g.set(&[T, R, R], g.get(&[T, R, R]) + 0.01);
        Ok(g)
    };
    let v = check_fields(&metric, &broken, Group::Cosmo(0), &sample(0), DEFAULT_TOL).unwrap();
    assert!(!v.pass);
    let x3 = v.generators.iter().find(|g| g.generator == "X_3").unwrap();
    assert!(x3.connection.value > DEFAULT_TOL);
    let xz = v.generators.iter().find(|g| g.generator == "X_z").unwrap();
    assert!(xz.connection.value < DEFAULT_TOL);
}

#[test]
fn time_dependence_only() {
    assert!(CosmoParams::parse("1", "r", ["0"; 5], 0).is_err());
    assert!(CosmoParams::parse("1", "1", ["0"; 5], 2).is_err());
}
