mod common;

use std::f64::consts::PI;

use metaffine::expr::Expr;
use metaffine::geometry::*;
use metaffine::random::{rng, smooth_set, smooth_tr};
use metaffine::special::*;
use metaffine::tensors::{self, oracle, Quantity};
use rand::Rng;

fn unit() -> FlatParams {
    FlatParams::parse(["1", "1", "0", "0", "r", "0"]).unwrap()
}

fn exprs<const K: usize>(src: &[String; K]) -> [Expr; K] {
    src.each_ref().map(|s| metaffine::expr::parse(s).unwrap())
}

#[test]
fn torsion_free_family() {
    let mut g = rng(61);
    for _ in 0..5 {
        let m = common::metric(&mut g);
        let spec = make_torsion_free(m.clone(), exprs(&smooth_set::<12>(&mut g, 0.5)));
        let p = common::point(&mut g);
        assert!(tensors::compute(&spec, Quantity::Torsion, &p).unwrap().max_abs() < 1e-12);
        let ConnectionSpec::TQ(tq) = spec.connection_spec() else { panic!() };
        assert!(tensors::contortion(&m, tq, &p).unwrap().max_abs() < 1e-12);
        assert!(tensors::decomposition_residual(&m, tq, &p).unwrap().max_abs() < 1e-9);
    }
    let zero = make_torsion_free(MetricParams::minkowski(), std::array::from_fn(|_| Expr::zero()));
    assert_eq!(zero, levi_civita_spec(MetricParams::minkowski()));
}

#[test]
fn metric_compatible_family() {
    let mut g = rng(62);
    for _ in 0..5 {
        let m = common::metric(&mut g);
        let spec = make_metric_compatible(m.clone(), exprs(&smooth_set::<8>(&mut g, 0.5)));
        let p = common::point(&mut g);
        let gamma = spec.connection(&p).unwrap();
        let metric = |q: &Point| spec.metric(q);
        let q = oracle::nonmetricity_fd(&metric, &gamma, &p).unwrap();
        assert!(q.max_abs() < 1e-6, "{}", q.max_abs());
        let ConnectionSpec::TQ(tq) = spec.connection_spec() else { panic!() };
        assert!(tensors::disformation(&m, tq, &p).unwrap().max_abs() < 1e-12);
    }
}

#[test]
fn weitzenboeck_frame_examples() {
    let p = Point::new(0.0, 2.0, PI / 2.0, 0.0).unwrap();
    let th = weitzenboeck_tetrad(&unit(), &p).unwrap();
    assert_eq!(th.get(&[0, T]), 1.0);
    let row1: Vec<f64> = (0..4).map(|mu| th.get(&[1, mu])).collect();
    for (a, b) in row1.iter().zip([0.0, 1.0, 0.0, 0.0]) {
        assert!((a - b).abs() < 1e-15, "{row1:?}");
    }

    let f = FlatParams::parse(["1", "1", "0", "0", "r", "pi/2"]).unwrap();
    let p = Point::new(0.0, 2.0, 0.7, 0.3).unwrap();
    let th = weitzenboeck_tetrad(&f, &p).unwrap();
    assert!((th.get(&[3, PH]) - 2.0 * 0.7f64.sin().powi(2)).abs() < 1e-14);
}

#[test]
fn weitzenboeck_frame_is_nondegenerate() {
    let mut g = rng(63);
    for _ in 0..20 {
        let f = common::flat(&mut g);
        let p = common::point(&mut g);
        assert!(inverse_tetrad(&weitzenboeck_tetrad(&f, &p).unwrap()).is_ok());
    }
    assert!(FlatParams::parse(["1", "1", "0", "0", "0", "0"]).unwrap().jets(0.0, 1.0).is_err());
}

#[test]
fn unit_family_connection() {
    let c = flat_connection_from_f(&unit(), 0.0, 2.0).unwrap();
    for i in 1..=20 {
        let expect = match i {
            12 | 14 => 0.5,
            10 => -2.0,
            _ => 0.0,
        };
        assert!((c.c(i).v - expect).abs() < 1e-15, "C{i} = {}", c.c(i).v);
    }
}

#[test]
fn flat_connection_is_flat_and_matches_oracle() {
    let mut g = rng(64);
    for _ in 0..20 {
        let f = common::flat(&mut g);
        let p = common::point(&mut g);
        let cj = flat_connection_from_f(&f, p.t, p.r).unwrap();
        let rc = tensors::curvature_from_jets(&cj, &p);
        assert!(rc.max_abs() < 1e-8, "{}", rc.max_abs());
        let closed = connection_from_jets(&cj, &p);
        let wb = weitzenboeck_oracle(&f, &p).unwrap();
        assert!(closed.scaled_diff(&wb) < 1e-6, "{}", closed.scaled_diff(&wb));
    }
}

#[test]
fn separable_family_is_torsion_free() {
    let f = FlatParams::parse(["1 + 0.3*sin(t)", "1", "0", "0", "r + 2", "0"]).unwrap();
    let spec = GeometrySpec::flat(MetricParams::minkowski(), f.clone());
    let mut g = rng(65);
    for _ in 0..5 {
        let p = common::point(&mut g);
        let res = flat_torsion_free_residuals(&f, &p).unwrap();
        assert!(res.max_abs() < 1e-12, "{res:?}");
        assert!(tensors::compute(&spec, Quantity::Torsion, &p).unwrap().max_abs() < 1e-10);
    }
}

#[test]
fn constant_areal_function_leaves_radial_torsion() {
    // With F5 constant the second condition reads 0 = F2 cosh F4, which
    // fails, and T^theta_{r theta} picks up exactly that residual.
    let f = FlatParams::parse(["1 + 0.3*sin(t)", "exp(0.2*r)", "0", "0", "2", "0"]).unwrap();
    let spec = GeometrySpec::flat(MetricParams::minkowski(), f.clone());
    let p = Point::new(0.3, 1.2, 1.0, 0.0).unwrap();
    let res = flat_torsion_free_residuals(&f, &p).unwrap();
    assert_eq!((res.i, res.iii, res.iv), (0.0, 0.0, [0.0, 0.0]));
    let tor = tensors::compute(&spec, Quantity::Torsion, &p).unwrap();
    assert!((tor.get(&[TH, R, TH]) - res.ii / 2.0).abs() < 1e-12);
}

#[test]
fn twisted_family_reports_c20() {
    let f = FlatParams::parse(["1", "1", "0.3", "0.1", "r", "pi/4"]).unwrap();
    let p = Point::new(0.0, 1.5, 1.0, 0.0).unwrap();
    let res = flat_torsion_free_residuals(&f, &p).unwrap();
    let (c3, d) = (0.3f64.cosh(), (0.3f64 - 0.1).cosh());
    let expect = 1.5 * c3 * (PI / 4.0).sin() / d;
    assert!((res.c20 - expect).abs() < 1e-14);
}

#[test]
fn torsion_tracks_the_first_residual() {
    let mut g = rng(66);
    for _ in 0..10 {
        let s = smooth_set::<5>(&mut g, 0.2);
        let f = FlatParams::parse([
            &format!("1 + {}", s[0]),
            &format!("1 + {}", s[1]),
            &s[2],
            &s[3],
            &format!("r + {}", s[4]),
            "0",
        ])
        .unwrap();
        let p = common::point(&mut g);
        let res = flat_torsion_free_residuals(&f, &p).unwrap();
        let spec = GeometrySpec::flat(MetricParams::minkowski(), f.clone());
        let tor = tensors::compute(&spec, Quantity::Torsion, &p).unwrap();
        let f5 = f.jets(p.t, p.r).unwrap().f(5).v;
        assert!(res.i.abs() > 1e-6);
        assert!((tor.get(&[TH, T, TH]) - res.i / f5).abs() < 1e-8);
    }
}

#[test]
fn compatible_metric_examples() {
    let mut g = rng(67);
    for _ in 0..5 {
        let s = smooth_set::<5>(&mut g, 0.2);
        let f = FlatParams::parse([
            &format!("1 + {}", s[0]),
            &format!("1 + {}", s[1]),
            &s[2],
            &s[3],
            &format!("r + {}", s[4]),
            "0",
        ])
        .unwrap();
        let p = common::point(&mut g);
        let k = FlatMetricConstants { g1: 1.0, g2: 1.0 };
        let family = flat_metric_compatible_metric(&f, &k, &p).unwrap();
        let tetrad = tetrad_metric(&f, &p).unwrap();
        assert!(family.max_abs_diff(&tetrad).0 < 1e-13);
    }

    let k = FlatMetricConstants { g1: 2.0, g2: 1.0 };
    let p = Point::new(0.0, 1.5, 1.0, 0.0).unwrap();
    let gm = flat_metric_compatible_metric(&unit(), &k, &p).unwrap();
    assert_eq!(gm.get(&[T, T]), -1.0);
    assert_eq!(gm.get(&[R, R]), 2.0);
    assert_eq!(gm.get(&[T, R]), 0.0);
    assert!((gm.get(&[TH, TH]) - 4.5).abs() < 1e-14);

    let twisted = FlatParams::parse(["1", "1", "0", "0", "r", "0.1"]).unwrap();
    assert!(flat_metric_compatible_metric(&twisted, &k, &p).is_err());
}

#[test]
fn compatible_metric_has_no_nonmetricity() {
    let mut g = rng(68);
    for _ in 0..10 {
        let s = smooth_set::<5>(&mut g, 0.2);
        let f = FlatParams::parse([
            &format!("1 + {}", s[0]),
            &format!("1 + {}", s[1]),
            &s[2],
            &s[3],
            &format!("r + {}", s[4]),
            "0",
        ])
        .unwrap();
        let k = FlatMetricConstants { g1: g.gen_range(0.5..2.0), g2: g.gen_range(0.5..2.0) };
        let spec = GeometrySpec::flat_compatible(f.clone(), k).unwrap();
        let p = common::point(&mut g);
        let gamma = spec.connection(&p).unwrap();
        let metric = |q: &Point| flat_metric_compatible_metric(&f, &k, q);
        let q = oracle::nonmetricity_fd(&metric, &gamma, &p).unwrap();
        assert!(q.max_abs() < 1e-6, "{}", q.max_abs());
        let closed = tensors::compute(&spec, Quantity::Nonmetricity, &p).unwrap();
        assert!(closed.max_abs() < 1e-10, "{}", closed.max_abs());
    }
}

#[test]
fn identity_coordinate_map() {
    let c = CoordMapParams::parse("t", "r").unwrap();
    let p = Point::new(0.0, 2.0, 0.8, 0.0).unwrap();
    let g = minkowski_general_coords(&c, &p).unwrap();
    let s2 = 0.8f64.sin().powi(2);
    let expect = [-1.0, 1.0, 4.0, 4.0 * s2];
    for (i, e) in expect.iter().enumerate() {
        assert!((g.get(&[i, i]) - e).abs() < 1e-14);
    }
}

fn lc_curvature(c: &CoordMapParams, p: &Point) -> f64 {
    let gamma = |q: &Point| oracle::christoffel(&c.metric_block(q.t, q.r)?, q);
    tensors::curvature_generic(&gamma, p).unwrap().max_abs()
}

#[test]
fn null_coordinate_map_is_flat() {
    let c = CoordMapParams::parse("t + r", "r").unwrap();
    let p = Point::new(0.0, 1.0, 1.0, 0.0).unwrap();
    let g = minkowski_general_coords(&c, &p).unwrap();
    assert_eq!((g.get(&[T, T]), g.get(&[T, R]), g.get(&[R, R])), (-1.0, -1.0, 0.0));
    assert!(lc_curvature(&c, &p) < 1e-6);
}

#[test]
fn random_coordinate_maps_are_flat() {
    let mut g = rng(69);
    for _ in 0..10 {
        let c = CoordMapParams::parse(
            &format!("t + 0.2*({})", smooth_tr(&mut g, 0.5)),
            &format!("r*(1 + 0.1*sin({}))", smooth_tr(&mut g, 0.5)),
        )
        .unwrap();
        let p = common::point(&mut g);
        assert!(lc_curvature(&c, &p) < 1e-6, "{}", lc_curvature(&c, &p));
    }
    assert!(matches!(
        CoordMapParams::parse("r", "r").unwrap().metric_block(0.0, 1.0),
        Err(metaffine::Error::SingularJacobian { .. })
    ));
}
