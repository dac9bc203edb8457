mod common;

use std::f64::consts::PI;

use metaffine::geometry::*;
use metaffine::random::{rng, smooth_set};
use metaffine::symmetry::*;
use metaffine::Result;

fn sample() -> Vec<Point> {
    halton_points(DEFAULT_SAMPLES, &SampleBox::default())
}

#[test]
fn rotation_about_the_axis_leaves_the_metric_alone() {
    let mut g = rng(31);
    let spec = GeometrySpec::c_form(common::metric(&mut g), ConnParamsC::zero());
    let metric = |p: &Point| spec.metric(p);
    for _ in 0..5 {
        let p = common::point(&mut g);
        assert!(lie_metric(&metric, &VectorField::Xz, &p).unwrap().max_abs() < 1e-8);
    }
}

#[test]
fn tilted_rotation_leaves_the_metric_alone() {
    let mut g = rng(32);
    let spec = GeometrySpec::c_form(common::metric(&mut g), ConnParamsC::zero());
    let metric = |p: &Point| spec.metric(p);
    let p = Point::new(0.0, 2.0, PI / 3.0, PI / 5.0).unwrap();
    let res = lie_metric(&metric, &VectorField::Xx, &p).unwrap();
    assert!(res.max_abs() < 1e-7, "{}", res.max_abs());
}

#[test]
fn off_block_metric_entry_breaks_rotations() {
    let mut g = rng(33);
    let spec = GeometrySpec::c_form(common::metric(&mut g), ConnParamsC::zero());
    let broken = |p: &Point| -> Result<ComponentArray> {
        let mut m = spec.metric(p)?;
        m.set(&[T, TH], 1.0);
        m.set(&[TH, T], 1.0);
        Ok(m)
    };
    let p = Point::new(0.0, 2.0, PI / 3.0, PI / 5.0).unwrap();
    assert!(lie_metric(&broken, &VectorField::Xx, &p).unwrap().max_abs() > 0.1);
    let connection = |p: &Point| spec.connection(p);
    let v = check_fields(&broken, &connection, Group::So3, &sample(), DEFAULT_TOL).unwrap();
    assert!(!v.pass);
    assert!(v.max_metric_residual > 0.1);
}

#[test]
fn general_connection_is_rotation_invariant() {
    let mut g = rng(34);
    for _ in 0..3 {
        let spec = GeometrySpec::c_form(common::metric(&mut g), common::conn_c(&mut g));
        let gamma = |p: &Point| spec.connection(p);
        for x in VectorField::rotations() {
            for _ in 0..5 {
                let p = common::point(&mut g);
                let res = lie_connection(&gamma, &x, &p).unwrap();
                assert!(res.max_abs() < 1e-6, "{x}: {}", res.max_abs());
            }
        }
    }
}

#[test]
fn axial_rotation_is_minus_phi_derivative() {
    let mut g = rng(35);
    let spec = GeometrySpec::c_form(common::metric(&mut g), common::conn_c(&mut g));
    let gamma = |p: &Point| spec.connection(p);
    let p = common::point(&mut g);
    assert!(lie_connection(&gamma, &VectorField::Xz, &p).unwrap().max_abs() < 1e-9);
}

#[test]
fn cosmological_connection_is_homogeneous() {
    for k in [-1, 0, 1] {
        let cp = common::cosmo(&mut rng(36), k);
        let gamma = |p: &Point| metaffine::cosmo::cosmo_connection(&cp, p);
        let p = Point::new(0.3, 0.6, 1.1, 0.4).unwrap();
        let res = lie_connection(&gamma, &VectorField::X3(k), &p).unwrap();
        assert!(res.max_abs() < 1e-6, "k = {k}: {}", res.max_abs());
    }
}

#[test]
fn rotation_brackets_close() {
    let p = Point::new(0.0, 1.5, 1.1, 0.7).unwrap();
    let cases = [
        (VectorField::Xx, VectorField::Xy, VectorField::Xz),
        (VectorField::Xy, VectorField::Xz, VectorField::Xx),
        (VectorField::Xz, VectorField::Xx, VectorField::Xy),
    ];
    for (a, b, c) in cases {
        let br = lie_bracket_fd(&a, &b, &p).unwrap();
        let expect = c.values(&p).unwrap();
        for mu in 0..4 {
            assert!((br[mu] - expect[mu]).abs() < 1e-8, "[{a}, {b}]");
        }
    }
}

#[test]
fn translations_commute_up_to_rotations() {
    // [X_1, X_2] = k X_z for the homogeneity generators.
    let p = Point::new(0.0, 0.5, 1.1, 0.7).unwrap();
    for k in [-1i8, 0, 1] {
        let br = lie_bracket_fd(&VectorField::X1(k), &VectorField::X2(k), &p).unwrap();
        let z = VectorField::Xz.values(&p).unwrap();
        for mu in 0..4 {
            assert!((br[mu] - f64::from(k) * z[mu]).abs() < 1e-8, "k = {k}: {br:?}");
        }
    }
}

#[test]
fn random_geometries_pass_so3() {
    let mut g = rng(37);
    for _ in 0..3 {
        let spec = GeometrySpec::c_form(common::metric(&mut g), common::conn_c(&mut g));
        let v = check_symmetry(&spec, Group::So3, &sample(), DEFAULT_TOL).unwrap();
        assert!(v.pass, "{} {}", v.max_metric_residual, v.max_connection_residual);
        assert_eq!(v.generators.len(), 3);
    }
}

#[test]
fn c17_breaks_reflection_at_phi_theta_t() {
    let spec = GeometrySpec::c_form(MetricParams::minkowski(), ConnParamsC::with(&[(17, "1")]).unwrap());
    let v = check_symmetry(&spec, Group::O3, &sample(), DEFAULT_TOL).unwrap();
    assert!(!v.pass);
    assert_eq!(v.violated, vec!["C17"]);
    let [_, conn] = v.reflection.unwrap();
    assert!(conn.value > 0.1);
    assert_eq!(conn.component, "phi,theta,t");
    assert!(check_symmetry(&spec, Group::So3, &sample(), DEFAULT_TOL).unwrap().pass);
}

#[test]
fn reflection_even_tq_geometry_passes_o3() {
    let mut g = rng(38);
    let (ts, qs) = (smooth_set::<8>(&mut g, 0.5), smooth_set::<12>(&mut g, 0.5));
    let (mut t, mut q) = (common::strs(&ts), common::strs(&qs));
    for i in [3, 4, 7, 8] {
        t[i - 1] = "0";
    }
    q[10] = "0";
    q[11] = "0";
    let spec = GeometrySpec::tq_form(common::metric(&mut g), TQParams::parse(t, q).unwrap());
    let v = check_symmetry(&spec, Group::O3, &sample(), DEFAULT_TOL).unwrap();
    assert!(v.pass, "{:?}", v.reflection);
    assert!(v.violated.is_empty());
}

#[test]
fn reflection_odd_spin_parameter_fails_o3() {
    let mut s = ["0"; 20];
    s[18] = "0.5";
    let spec = GeometrySpec::s_form(MetricParams::minkowski(), SpinParams::parse(s).unwrap());
    let v = check_symmetry(&spec, Group::O3, &sample(), DEFAULT_TOL).unwrap();
    assert!(!v.pass);
    assert!(v.violated.contains(&"S19".to_string()), "{:?}", v.violated);
    let even = GeometrySpec::s_form(MetricParams::minkowski(), SpinParams::zero());
    assert!(check_symmetry(&even, Group::O3, &sample(), DEFAULT_TOL).unwrap().pass);
}

#[test]
fn metric_is_reflection_invariant() {
    let mut g = rng(39);
    for _ in 0..5 {
        let spec = GeometrySpec::c_form(common::metric(&mut g), ConnParamsC::zero());
        let metric = |p: &Point| spec.metric(p);
        let p = common::point(&mut g);
        let refl = reflect_components(&metric, &p).unwrap();
        assert!(refl.max_abs_diff(&spec.metric(&p).unwrap()).0 < 1e-14);
    }
}

#[test]
fn trig_skeleton_is_reflection_invariant() {
    let spec = GeometrySpec::c_form(MetricParams::minkowski(), ConnParamsC::zero());
    let gamma = |p: &Point| spec.connection(p);
    let p = Point::new(0.0, 1.0, 0.8, 0.0).unwrap();
    let refl = reflect_components(&gamma, &p).unwrap();
    assert!((refl.get(&[TH, PH, PH]) + 0.8f64.sin() * 0.8f64.cos()).abs() < 1e-15);
    assert!(refl.max_abs_diff(&gamma(&p).unwrap()).0 < 1e-14);
}

#[test]
fn c15_flips_under_reflection() {
    let spec = GeometrySpec::c_form(MetricParams::minkowski(), ConnParamsC::with(&[(15, "0.4")]).unwrap());
    let gamma = |p: &Point| spec.connection(p);
    let p = Point::new(0.0, 1.0, 0.8, 0.0).unwrap();
    let refl = reflect_components(&gamma, &p).unwrap();
    assert!((refl.get(&[TH, T, PH]) - 0.4 * 0.8f64.sin()).abs() < 1e-15);
    assert!((gamma(&p).unwrap().get(&[TH, T, PH]) + 0.4 * 0.8f64.sin()).abs() < 1e-15);
}

#[test]
fn verdict_serializes_with_generator_breakdown() {
    let spec = GeometrySpec::c_form(MetricParams::minkowski(), ConnParamsC::zero());
    let v = check_symmetry(&spec, Group::O3, &sample(), DEFAULT_TOL).unwrap();
    let json = serde_json::to_value(&v).unwrap();
    assert_eq!(json["group"], "O3");
    assert_eq!(json["generators"].as_array().unwrap().len(), 3);
    assert_eq!(json["pass"], true);
}
