#![allow(dead_code)]

use metaffine::geometry::{ConnParamsC, GeometrySpec, MetricParams, Point, SpinParams, TQParams};
use metaffine::cosmo::CosmoParams;
use metaffine::random::{metric_functions, smooth_set, smooth_t, TestRng};
use metaffine::special::FlatParams;
use rand::Rng;

pub fn strs<const K: usize>(s: &[String; K]) -> [&str; K] {
    s.each_ref().map(String::as_str)
}

pub fn metric(rng: &mut TestRng) -> MetricParams {
    MetricParams::parse(strs(&metric_functions(rng))).unwrap()
}

pub fn conn_c(rng: &mut TestRng) -> ConnParamsC {
    ConnParamsC::parse(strs(&smooth_set::<20>(rng, 0.5))).unwrap()
}

pub fn conn_tq(rng: &mut TestRng) -> TQParams {
    TQParams::parse(
        strs(&smooth_set::<8>(rng, 0.5)),
        strs(&smooth_set::<12>(rng, 0.5)),
    )
    .unwrap()
}

pub fn spin(rng: &mut TestRng) -> SpinParams {
    SpinParams::parse(strs(&smooth_set::<20>(rng, 0.5))).unwrap()
}

/// Coframe functions with `F1`, `F2`, `F5` kept away from zero.
pub fn flat(rng: &mut TestRng) -> FlatParams {
    let s = smooth_set::<6>(rng, 0.2);
    FlatParams::parse([
        &format!("1 + {}", s[0]),
        &format!("1 + {}", s[1]),
        &s[2],
        &s[3],
        &format!("r + {}", s[4]),
        &s[5],
    ])
    .unwrap()
}

/// A point with `t` in `[-1, 1]`, `r` in `[0.8, 2.5]` and `theta` well off
/// the axis.
pub fn point(rng: &mut TestRng) -> Point {
    Point::new(
        rng.gen_range(-1.0..1.0),
        rng.gen_range(0.8..2.5),
        rng.gen_range(0.3..2.8),
        rng.gen_range(0.0..6.2),
    )
    .unwrap()
}

/// Random lapse, scale factor and connection functions of `t`.
pub fn cosmo(rng: &mut TestRng, k: i8) -> CosmoParams {
    let n = format!("1 + 0.3*sin({})", smooth_t(rng, 0.5));
    let a = format!("2 + 0.5*sin({})", smooth_t(rng, 0.5));
    let kf: [String; 5] = std::array::from_fn(|_| smooth_t(rng, 0.5));
    CosmoParams::parse(&n, &a, strs(&kf), k).unwrap()
}

/// Schwarzschild metric with unit mass.
pub fn schwarzschild_metric() -> MetricParams {
    MetricParams::parse(["0", "log(1 - 2/r)", "0", "2*log(r)"]).unwrap()
}

/// The Levi-Civita connection of the Schwarzschild metric written out as
/// connection functions, with extra entries appended.
pub fn schwarzschild_c(extra: &[(usize, &str)]) -> GeometrySpec {
    let mut entries = vec![
        (2, "1/(r^2*(1 - 2/r))"),
        (3, "1/(r^2*(1 - 2/r))"),
        (5, "(1 - 2/r)/r^2"),
        (8, "-1/(r^2*(1 - 2/r))"),
        (10, "-(r - 2)"),
        (12, "1/r"),
        (14, "1/r"),
    ];
    entries.extend_from_slice(extra);
    GeometrySpec::c_form(schwarzschild_metric(), ConnParamsC::with(&entries).unwrap())
}
