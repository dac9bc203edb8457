//! Acceptance checks. Prints one PASS or FAIL line per criterion and exits
//! with a failure status if any criterion fails.

mod common;

use std::f64::consts::FRAC_PI_2;
use std::process::ExitCode;
use std::time::Instant;

use metaffine::cosmo::*;
use metaffine::geometry::*;
use metaffine::orbits::*;
use metaffine::random::{rng, smooth_set, smooth_tr, TestRng};
use metaffine::special::*;
use metaffine::symmetry::*;
use metaffine::tensors::{self, oracle, Quantity};
use rand::Rng;

type Outcome = (bool, String);
type Criterion = (&'static str, fn() -> Outcome);

fn points(g: &mut TestRng, n: usize) -> Vec<Point> {
    (0..n).map(|_| common::point(g)).collect()
}

fn rotations() -> Outcome {
    let mut g = rng(1001);
    let mut worst = 0.0f64;
    for _ in 0..20 {
        let spec = GeometrySpec::c_form(common::metric(&mut g), common::conn_c(&mut g));
        let v = check_symmetry(&spec, Group::So3, &points(&mut g, 10), DEFAULT_TOL).unwrap();
        worst = worst.max(v.max_metric_residual).max(v.max_connection_residual);
    }
    (worst < 1e-6, format!("max Lie residual {worst:.2e} over 20 geometries x 10 points"))
}

fn decomposition() -> Outcome {
    let mut g = rng(1002);
    let mut worst = 0.0f64;
    for _ in 0..50 {
        let (m, tq) = (common::metric(&mut g), common::conn_tq(&mut g));
        for p in points(&mut g, 10) {
            worst = worst.max(tensors::decomposition_residual(&m, &tq, &p).unwrap().max_abs());
        }
    }
    (worst < 1e-9, format!("max |Gamma - (LC + K + L)| {worst:.2e}"))
}

fn parameter_round_trips() -> Outcome {
    let mut g = rng(1003);
    let (mut trip, mut values) = (0.0f64, 0.0f64);
    for _ in 0..20 {
        let (m, c, tq) = (common::metric(&mut g), common::conn_c(&mut g), common::conn_tq(&mut g));
        for p in points(&mut g, 10) {
            let mj = m.jets(p.t, p.r).unwrap();
            let cj = c.jets(p.t, p.r).unwrap();
            let back = c_from_tq_jets(&mj, &tq_from_c_jets(&mj, &cj));
            for i in 1..=20 {
                trip = trip.max((cj.c(i).v - back.c(i).v).abs() / (1.0 + cj.c(i).v.abs()));
            }
            let x = tq.jets(p.t, p.r).unwrap();
            let again = tq_from_c_jets(&mj, &c_from_tq_jets(&mj, &x));
            for i in 1..=8 {
                trip = trip.max((x.t(i).v - again.t(i).v).abs());
            }
            for i in 1..=12 {
                trip = trip.max((x.q(i).v - again.q(i).v).abs());
            }

            let spec = GeometrySpec::tq_form(m.clone(), tq.clone());
            let gamma = spec.connection(&p).unwrap();
            let tor = oracle::torsion_of(&gamma);
            let q = oracle::nonmetricity_exact(&spec.metric_block(p.t, p.r).unwrap(), &gamma, &p);
            let s = p.theta.sin();
            let expect = [
                (tor.get(&[T, T, R]), x.t(1).v),
                (tor.get(&[R, T, R]), x.t(2).v),
                (tor.get(&[T, TH, PH]), x.t(3).v * s),
                (tor.get(&[R, TH, PH]), x.t(4).v * s),
                (tor.get(&[TH, T, TH]), x.t(5).v),
                (tor.get(&[PH, R, PH]), x.t(6).v),
                (tor.get(&[TH, T, PH]), x.t(7).v * s),
                (tor.get(&[PH, R, TH]), -x.t(8).v / s),
                (q.get(&[T, T, T]), x.q(1).v),
                (q.get(&[T, R, R]), x.q(2).v),
                (q.get(&[T, T, R]), x.q(3).v),
                (q.get(&[T, TH, TH]), x.q(4).v),
                (q.get(&[R, T, T]), x.q(5).v),
                (q.get(&[R, R, R]), x.q(6).v),
                (q.get(&[R, T, R]), x.q(7).v),
                (q.get(&[R, PH, PH]), x.q(8).v * s * s),
                (q.get(&[TH, T, TH]), x.q(9).v),
                (q.get(&[PH, R, PH]), x.q(10).v * s * s),
                (q.get(&[TH, T, PH]), x.q(11).v * s),
                (q.get(&[PH, R, TH]), -x.q(12).v * s),
            ];
            for (got, want) in expect {
                values = values.max((got - want).abs());
            }
        }
    }
    (
        trip < 1e-10 && values < 1e-10,
        format!("round trip {trip:.2e}, torsion/nonmetricity parameter values {values:.2e}"),
    )
}

fn curvature() -> Outcome {
    let mut g = rng(1004);
    let mut worst = 0.0f64;
    for _ in 0..20 {
        let c = common::conn_c(&mut g);
        let p = common::point(&mut g);
        let explicit = tensors::curvature_explicit(&c, &p).unwrap();
        let gamma = |q: &Point| connection_components(&c, q);
        worst = worst.max(explicit.scaled_diff(&tensors::curvature_generic(&gamma, &p).unwrap()));
    }
    (worst < 1e-6, format!("explicit vs generic {worst:.2e}"))
}

fn flatness() -> Outcome {
    let mut g = rng(1005);
    let (mut curv, mut wb) = (0.0f64, 0.0f64);
    for _ in 0..20 {
        let f = common::flat(&mut g);
        let p = common::point(&mut g);
        let cj = flat_connection_from_f(&f, p.t, p.r).unwrap();
        curv = curv.max(tensors::curvature_from_jets(&cj, &p).max_abs());
        wb = wb.max(connection_from_jets(&cj, &p).scaled_diff(&weitzenboeck_oracle(&f, &p).unwrap()));
    }
    (curv < 1e-8 && wb < 1e-6, format!("max |R| {curv:.2e}, Weitzenboeck oracle {wb:.2e}"))
}

fn reflection_even_flat(g: &mut TestRng) -> FlatParams {
    let s = smooth_set::<5>(g, 0.2);
    FlatParams::parse([
        &format!("1 + {}", s[0]),
        &format!("1 + {}", s[1]),
        &s[2],
        &s[3],
        &format!("r + {}", s[4]),
        "0",
    ])
    .unwrap()
}

fn flat_compatible() -> Outcome {
    let mut g = rng(1006);
    let (mut q_max, mut tetrad) = (0.0f64, 0.0f64);
    for _ in 0..20 {
        let f = reflection_even_flat(&mut g);
        let k = FlatMetricConstants { g1: g.gen_range(0.5..2.0), g2: g.gen_range(0.5..2.0) };
        let p = common::point(&mut g);
        let gamma = connection_from_jets(&flat_connection_from_f(&f, p.t, p.r).unwrap(), &p);
        let metric = |q: &Point| flat_metric_compatible_metric(&f, &k, q);
        q_max = q_max.max(oracle::nonmetricity_fd(&metric, &gamma, &p).unwrap().max_abs());
        let unit = FlatMetricConstants { g1: 1.0, g2: 1.0 };
        let family = flat_metric_compatible_metric(&f, &unit, &p).unwrap();
        tetrad = tetrad.max(family.max_abs_diff(&tetrad_metric(&f, &p).unwrap()).0);
    }
    (
        q_max < 1e-6 && tetrad < 1e-12,
        format!("max |Q| {q_max:.2e}, unit constants vs tetrad metric {tetrad:.2e}"),
    )
}

fn reflection() -> Outcome {
    let mut g = rng(1007);
    let sample = halton_points(DEFAULT_SAMPLES, &SampleBox::default());
    let mut wrong = Vec::new();
    let mut runs = 0;
    let mut verdict = |spec: GeometrySpec, expect: bool, label: String| {
        runs += 1;
        let v = check_symmetry(&spec, Group::O3, &sample, DEFAULT_TOL).unwrap();
        if v.pass != expect {
            wrong.push(label);
        }
    };
    for _ in 0..3 {
        let m = common::metric(&mut g);
        let base = smooth_set::<20>(&mut g, 0.5);
        for odd in std::iter::once(None).chain((15..=20).map(Some)) {
            let mut c = common::strs(&base);
            for i in 15..=20 {
                c[i - 1] = if Some(i) == odd { c[i - 1] } else { "0" };
            }
            let spec = GeometrySpec::c_form(m.clone(), ConnParamsC::parse(c).unwrap());
            verdict(spec, odd.is_none(), format!("C{odd:?}"));
        }
        let (ts, qs) = (smooth_set::<8>(&mut g, 0.5), smooth_set::<12>(&mut g, 0.5));
        let odd_params = ["T3", "T4", "T7", "T8", "Q11", "Q12"];
        for odd in std::iter::once(None).chain(odd_params.iter().copied().map(Some)) {
            let (mut t, mut q) = (common::strs(&ts), common::strs(&qs));
            for name in odd_params {
                if Some(name) == odd {
                    continue;
                }
                let i: usize = name[1..].parse().unwrap();
                if name.starts_with('T') {
                    t[i - 1] = "0";
                } else {
                    q[i - 1] = "0";
                }
            }
            let spec = GeometrySpec::tq_form(m.clone(), TQParams::parse(t, q).unwrap());
            verdict(spec, odd.is_none(), format!("{odd:?}"));
        }
    }
    (wrong.is_empty(), format!("{runs} verdicts, wrong: {wrong:?}"))
}

fn orbits() -> Outcome {
    let spec = common::schwarzschild_c(&[]);
    let mut freq = 0.0f64;
    let mut drift = 0.0f64;
    for r in [4.0, 6.0, 10.0] {
        let sol = solve_orbit_at(&spec, r, ORBIT_TOL).unwrap().unwrap();
        let p = sol.params;
        freq = freq.max((p.omega * p.omega / (p.n * p.n) - r.powi(-3)).abs());
        let states = integrate_autoparallel(&spec, &sol.initial_state(), sol.period() / 1e4, 10_000).unwrap();
        let [dr, dth] = trajectory_drift(&states);
        drift = drift.max(dr).max(dth);
    }
    let c = 0.05;
    let twisted = common::schwarzschild_c(&[(15, "0.05")]);
    let equatorial = OrbitParams { n: 1.0, r: 6.0, theta: FRAC_PI_2, omega: 216f64.sqrt().recip() };
    let blocked = orbit_residuals(&twisted, &equatorial).unwrap()[2].abs() > 1e-3;
    let scan = find_circular_orbits(&twisted, (4.0, 10.0), 7, ORBIT_TOL).unwrap();
    let tilted = !scan.solutions.is_empty()
        && scan.solutions.iter().all(|s| {
            let cos = s.params.theta.cos();
            cos.abs() <= 1.0 && (cos + c / s.params.omega).abs() < 1e-12 && s.max_residual() < ORBIT_TOL
        });
    (
        freq < 1e-9 && drift < 1e-6 && blocked && tilted,
        format!(
            "|Omega^2 - 1/R^3| {freq:.2e}, drift {drift:.2e}, equatorial blocked {blocked}, tilted solutions {tilted}"
        ),
    )
}

fn cosmology() -> Outcome {
    let (mut worst, mut lc) = (0.0f64, 0.0f64);
    let mut k5_ok = true;
    for k in [-1i8, 0, 1] {
        let sample = halton_points(DEFAULT_SAMPLES, &SampleBox::for_group(Group::Cosmo(k)));
        for seed in 0..5 {
            let cp = common::cosmo(&mut rng(1100 + seed), k);
            let v = cosmo_symmetry_check(&cp, &sample, DEFAULT_TOL, false).unwrap();
            worst = worst.max(v.max_metric_residual).max(v.max_connection_residual);
        }
        let rw = CosmoParams::parse(
            "1 + t^2/4",
            "exp(t/2)",
            ["(t/2)/(1 + t^2/4)", "exp(t)/2/(1 + t^2/4)^2", "1/2", "1/2", "0"],
            k,
        )
        .unwrap()
        .geometry();
        for p in &sample {
            lc = lc.max(tensors::compute(&rw, Quantity::Torsion, p).unwrap().max_abs());
            lc = lc.max(tensors::compute(&rw, Quantity::Nonmetricity, p).unwrap().max_abs());
        }
        for k5 in ["0", "0.2", "0.1*sin(t)"] {
            let cp = CosmoParams::parse("1", "1.5", ["0.1", "0.2", "0.3", "0.4", k5], k).unwrap();
            let pass = cosmo_symmetry_check(&cp, &sample, DEFAULT_TOL, true).unwrap().pass;
            k5_ok &= pass == (k5 == "0");
        }
    }
    (
        worst < 1e-6 && lc < 1e-8 && k5_ok,
        format!("six-generator residual {worst:.2e}, LC torsion/nonmetricity {lc:.2e}, reflection iff K5 = 0 {k5_ok}"),
    )
}

fn coordinate_maps() -> Outcome {
    let mut g = rng(1010);
    let mut worst = 0.0f64;
    for _ in 0..10 {
        let c = CoordMapParams::parse(
            &format!("t + 0.2*({})", smooth_tr(&mut g, 0.5)),
            &format!("r*(1 + 0.1*sin({}))", smooth_tr(&mut g, 0.5)),
        )
        .unwrap();
        let p = common::point(&mut g);
        let gamma = |q: &Point| oracle::christoffel(&c.metric_block(q.t, q.r)?, q);
        worst = worst.max(tensors::curvature_generic(&gamma, &p).unwrap().max_abs());
    }
    (worst < 1e-6, format!("max LC curvature {worst:.2e}"))
}

fn spin_path() -> Outcome {
    let mut g = rng(1011);
    let (mut conn, mut post) = (0.0f64, 0.0f64);
    for _ in 0..20 {
        let (m, s) = (common::metric(&mut g), common::spin(&mut g));
        let p = common::point(&mut g);
        let closed = connection_from_jets(&c_from_s(&m, &s, p.t, p.r).unwrap(), &p);
        conn = conn.max(closed.scaled_diff(&affine_connection_oracle(&m, &s, &p).unwrap()));
        post = post.max(tetrad_postulate_residual(&m, &s, &p).unwrap().max_abs());
    }
    (conn < 1e-6 && post < 1e-6, format!("affine connection oracle {conn:.2e}, tetrad postulate {post:.2e}"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("rotational symmetry of the general family", rotations),
        ("connection decomposition", decomposition),
        ("parameter round trips", parameter_round_trips),
        ("explicit vs generic curvature", curvature),
        ("flat connection", flatness),
        ("flat metric-compatible family", flat_compatible),
        ("equatorial reflection", reflection),
        ("circular orbits", orbits),
        ("cosmology", cosmology),
        ("Minkowski space in general coordinates", coordinate_maps),
        ("tetrad and spin connection", spin_path),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let (pass, detail) = run();
        let tag = if pass { "PASS" } else { "FAIL" };
        println!("{tag} {:>2} {name}: {detail} ({:.1} s)", i + 1, start.elapsed().as_secs_f64());
        failed += usize::from(!pass);
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
