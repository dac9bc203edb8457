//! Circular autoparallel orbits `gamma(tau) = (N tau, R, Theta, Omega tau)`
//! in stationary geometries, and an RK4 integrator for the autoparallel
//! equation used to validate them.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{CJets, GeometrySpec, Point};

/// Default acceptance threshold on the component residuals.
pub const ORBIT_TOL: f64 = 1e-9;
/// Bracket width at which bisection stops.
pub const ROOT_TOL: f64 = 1e-12;
/// Largest `|d/dt|` of a parameter expression still counted as stationary.
pub const STATIONARY_TOL: f64 = 1e-12;
const STATIONARY_SAMPLES: usize = 16;
/// Below this `sin(theta)` the integrator stops.
pub const AXIS_TOL: f64 = 1e-6;

/// Constant parameters of a circular orbit candidate.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct OrbitParams {
    #[serde(rename = "N")]
    pub n: f64,
    #[serde(rename = "R")]
    pub r: f64,
    #[serde(rename = "Theta")]
    pub theta: f64,
    #[serde(rename = "Omega")]
    pub omega: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct OrbitSolution {
    #[serde(flatten)]
    pub params: OrbitParams,
    /// The four component equations evaluated on the solution.
    pub residuals: [f64; 4],
    /// Set when the existence conditions hold on the whole scanned range, so
    /// the solution is one member of a continuous family.
    pub continuum: bool,
}

impl OrbitSolution {
    pub fn max_residual(&self) -> f64 {
        self.residuals.iter().fold(0.0, |m, x| m.max(x.abs()))
    }

    /// Period in the curve parameter.
    pub fn period(&self) -> f64 {
        std::f64::consts::TAU / self.params.omega.abs()
    }

    /// State at `tau = 0` with `t = phi = 0`.
    pub fn initial_state(&self) -> TrajectoryState {
        let p = &self.params;
        TrajectoryState {
            tau: 0.0,
            position: Point::from_coords([0.0, p.r, p.theta, 0.0]),
            velocity: [p.n, 0.0, 0.0, p.omega],
        }
    }
}

/// Why a candidate radius produced no orbit.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "reason", content = "detail", rename_all = "snake_case")]
pub enum RejectReason {
    NoOrbit(String),
    NoConvergence(String),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Rejection {
    #[serde(rename = "R")]
    pub r: f64,
    #[serde(flatten)]
    pub reason: RejectReason,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct OrbitScan {
    pub solutions: Vec<OrbitSolution>,
    pub rejected: Vec<Rejection>,
    pub continuum: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct TrajectoryState {
    pub tau: f64,
    pub position: Point,
    pub velocity: [f64; 4],
}

/// Errors with [`Error::NotStationary`] if any parameter expression has a
/// time derivative above [`STATIONARY_TOL`] at one of 16 sample points with
/// `r` in `r_range`. Samples where an expression is undefined are skipped.
pub fn check_stationary(spec: &GeometrySpec, r_range: (f64, f64)) -> Result<()> {
    let (lo, hi) = r_range;
    for i in 0..STATIONARY_SAMPLES {
        let f = i as f64 / (STATIONARY_SAMPLES - 1) as f64;
        let t = -1.0 + 2.0 * f;
        // Reverse order in r so that t and r are not tied together.
        let r = hi - (hi - lo) * f;
        for (field, e) in spec.expressions() {
            if let Ok(j) = e.eval_jet(t, r) {
                if j.dt().abs() >= STATIONARY_TOL {
                    return Err(Error::NotStationary { field, dt: j.dt() });
                }
            }
        }
    }
    Ok(())
}

fn residuals_from(c: &CJets, o: &OrbitParams) -> [f64; 4] {
    let c = |i: usize| c.c(i).v;
    let s2 = o.theta.sin().powi(2);
    let (n2, w2) = (o.n * o.n, o.omega * o.omega);
    [
        c(1) * n2 + c(9) * w2 * s2,
        c(5) * n2 + c(10) * w2 * s2,
        o.omega * o.theta.cos() + c(15) + c(17),
        c(11) + c(13),
    ]
}

/// The `t`, `r`, `theta` and `phi` components of the autoparallel equation
/// on the circular ansatz.
pub fn orbit_residuals(spec: &GeometrySpec, o: &OrbitParams) -> Result<[f64; 4]> {
    if o.theta.sin().abs() < AXIS_TOL {
        return Err(Error::Domain(format!("Theta = {} lies on the axis", o.theta)));
    }
    let span = (0.5 * o.r, 1.5 * o.r);
    check_stationary(spec, span)?;
    Ok(residuals_from(&spec.conn_jets(0.0, o.r)?, o))
}

/// `C11 + C13` and `C1 C10 - C5 C9` at radius `r`.
pub fn existence_functions(spec: &GeometrySpec, r: f64) -> Result<[f64; 2]> {
    let c = spec.conn_jets(0.0, r)?;
    let c = |i: usize| c.c(i).v;
    Ok([c(11) + c(13), c(1) * c(10) - c(5) * c(9)])
}

/// Solve the component equations at a fixed radius with `N = 1`.
///
/// The `r` and `theta` equations combine to `Omega^2 = -C5/C10 + c^2` with
/// `c = C15 + C17`, and then `cos Theta = -c/Omega`. The positive root of
/// `Omega` is reported.
pub fn solve_orbit_at(
    spec: &GeometrySpec,
    r: f64,
    tol: f64,
) -> Result<std::result::Result<OrbitSolution, RejectReason>> {
    let cj = spec.conn_jets(0.0, r)?;
    let c = |i: usize| cj.c(i).v;
    if c(10) == 0.0 {
        return Ok(Err(RejectReason::NoOrbit("C10 vanishes".into())));
    }
    let planar = -c(5) / c(10);
    if !planar.is_finite() || planar <= 0.0 {
        return Ok(Err(RejectReason::NoOrbit(format!(
            "Omega^2 sin^2 Theta = {planar:e} is not positive"
        ))));
    }
    let cc = c(15) + c(17);
    let omega = (planar + cc * cc).sqrt();
    let cos = -cc / omega;
    if cos.abs() > 1.0 {
        return Ok(Err(RejectReason::NoOrbit(format!("|cos Theta| = {} > 1", cos.abs()))));
    }
    let params = OrbitParams {
        n: 1.0,
        r,
        theta: cos.acos(),
        omega,
    };
    let residuals = residuals_from(&cj, &params);
    let sol = OrbitSolution {
        params,
        residuals,
        continuum: false,
    };
    if sol.max_residual() >= tol {
        return Ok(Err(RejectReason::NoConvergence(format!(
            "max residual {:e}",
            sol.max_residual()
        ))));
    }
    Ok(Ok(sol))
}

fn bisect(f: impl Fn(f64) -> Result<f64>, mut a: f64, mut b: f64) -> Result<f64> {
    let mut fa = f(a)?;
    for _ in 0..200 {
        if b - a <= ROOT_TOL {
            break;
        }
        let m = 0.5 * (a + b);
        let fm = f(m)?;
        if fm == 0.0 {
            return Ok(m);
        }
        if (fm > 0.0) == (fa > 0.0) {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
    }
    Ok(0.5 * (a + b))
}

/// Roots of `f` on the grid: exact zeros and bisected sign changes.
fn grid_roots(
    f: impl Fn(f64) -> Result<f64> + Copy,
    grid: &[f64],
    values: &[f64],
) -> Result<Vec<f64>> {
    let mut roots = Vec::new();
    for i in 0..grid.len() {
        if values[i] == 0.0 {
            roots.push(grid[i]);
        } else if i + 1 < grid.len() && values[i + 1] != 0.0 && (values[i] > 0.0) != (values[i + 1] > 0.0) {
            roots.push(bisect(f, grid[i], grid[i + 1])?);
        }
    }
    Ok(roots)
}

/// Scan `r_range` on `grid` points for radii where both existence
/// functions vanish and solve for the orbit there.
///
/// A function whose magnitude stays below `1e-10 (1 + scale)` over the
/// whole grid counts as identically zero. If both do, every grid radius is
/// a candidate and the scan is flagged as a continuum. Radii where the
/// geometry cannot be evaluated are skipped.
pub fn find_circular_orbits(
    spec: &GeometrySpec,
    r_range: (f64, f64),
    grid: usize,
    tol: f64,
) -> Result<OrbitScan> {
    let (lo, hi) = r_range;
    if !(lo > 0.0 && hi > lo) || grid < 2 {
        return Err(Error::Domain(format!(
            "radius range ({lo}, {hi}) with {grid} grid points"
        )));
    }
    check_stationary(spec, r_range)?;
    let mut radii = Vec::with_capacity(grid);
    let mut ex = Vec::with_capacity(grid);
    for i in 0..grid {
        let r = lo + (hi - lo) * i as f64 / (grid - 1) as f64;
        match existence_functions(spec, r) {
            Ok(e) if e.iter().all(|x| x.is_finite()) => {
                radii.push(r);
                ex.push(e);
            }
            Ok(_) | Err(Error::Eval { .. } | Error::Domain(_)) => continue,
            Err(e) => return Err(e),
        }
    }
    let scale = |k: usize| ex.iter().fold(0.0f64, |m, e| m.max(e[k].abs()));
    let cscale = radii
        .iter()
        .filter_map(|&r| spec.conn_jets(0.0, r).ok())
        .flat_map(|c| c.values())
        .fold(0.0f64, |m, x| m.max(x.abs()));
    let zero_tol = 1e-10 * (1.0 + cscale * cscale);
    let identically = [scale(0) <= zero_tol, scale(1) <= zero_tol];

    let mut scan = OrbitScan::default();
    let candidates: Vec<f64> = match identically {
        [true, true] => {
            scan.continuum = true;
            radii.clone()
        }
        _ => {
            let mut cands = Vec::new();
            for k in 0..2 {
                if identically[k] {
                    continue;
                }
                let vals: Vec<f64> = ex.iter().map(|e| e[k]).collect();
                let f = |r: f64| existence_functions(spec, r).map(|e| e[k]);
                for root in grid_roots(f, &radii, &vals)? {
                    let other = existence_functions(spec, root)?[1 - k];
                    if other.abs() <= tol {
                        cands.push(root);
                    } else {
                        scan.rejected.push(Rejection {
                            r: root,
                            reason: RejectReason::NoOrbit(format!(
                                "existence function {} = {other:e} at a root of the other",
                                2 - k
                            )),
                        });
                    }
                }
            }
            cands.sort_by(f64::total_cmp);
            cands.dedup_by(|a, b| (*a - *b).abs() <= 10.0 * ROOT_TOL);
            cands
        }
    };
    for r in candidates {
        match solve_orbit_at(spec, r, tol)? {
            Ok(mut sol) => {
                sol.continuum = scan.continuum;
                scan.solutions.push(sol);
            }
            Err(reason) => scan.rejected.push(Rejection { r, reason }),
        }
    }
    log::debug!(
        "orbit scan: {} solutions, {} rejected, continuum = {}",
        scan.solutions.len(),
        scan.rejected.len(),
        scan.continuum
    );
    Ok(scan)
}

/// True when `theta` is within the axis tolerance or NaN.
fn near_axis(theta: f64) -> bool {
    theta.sin().is_nan() || theta.sin() < AXIS_TOL
}

/// `-Gamma^rho_{mu nu} u^mu u^nu`.
fn acceleration(spec: &GeometrySpec, x: [f64; 4], u: [f64; 4], step: usize) -> Result<[f64; 4]> {
    if near_axis(x[2]) {
        return Err(Error::AxisCrossing { step, theta: x[2] });
    }
    if x[1] <= 0.0 {
        return Err(Error::Domain(format!("r = {} at step {step}", x[1])));
    }
    let g = spec.connection(&Point::from_coords(x))?;
    let mut a = [0.0; 4];
    for (rho, out) in a.iter_mut().enumerate() {
        for mu in 0..4 {
            for nu in 0..4 {
                *out -= g.get(&[rho, mu, nu]) * u[mu] * u[nu];
            }
        }
    }
    Ok(a)
}

fn axpy(x: [f64; 4], h: f64, d: [f64; 4]) -> [f64; 4] {
    std::array::from_fn(|i| x[i] + h * d[i])
}

/// Classical fourth-order Runge-Kutta for the autoparallel equation.
/// Returns `steps + 1` states including the initial one.
pub fn integrate_autoparallel(
    spec: &GeometrySpec,
    s0: &TrajectoryState,
    dtau: f64,
    steps: usize,
) -> Result<Vec<TrajectoryState>> {
    if !s0.velocity.iter().chain(s0.position.coords().iter()).all(|v| v.is_finite()) {
        return Err(Error::Domain("initial state is not finite".into()));
    }
    let mut out = Vec::with_capacity(steps + 1);
    out.push(*s0);
    let (mut x, mut u) = (s0.position.coords(), s0.velocity);
    let h = dtau;
    for step in 0..steps {
        let a1 = acceleration(spec, x, u, step)?;
        let (x2, u2) = (axpy(x, h / 2.0, u), axpy(u, h / 2.0, a1));
        let a2 = acceleration(spec, x2, u2, step)?;
        let (x3, u3) = (axpy(x, h / 2.0, u2), axpy(u, h / 2.0, a2));
        let a3 = acceleration(spec, x3, u3, step)?;
        let (x4, u4) = (axpy(x, h, u3), axpy(u, h, a3));
        let a4 = acceleration(spec, x4, u4, step)?;
        x = std::array::from_fn(|i| x[i] + h / 6.0 * (u[i] + 2.0 * u2[i] + 2.0 * u3[i] + u4[i]));
        u = std::array::from_fn(|i| u[i] + h / 6.0 * (a1[i] + 2.0 * a2[i] + 2.0 * a3[i] + a4[i]));
        if near_axis(x[2]) {
            return Err(Error::AxisCrossing {
                step: step + 1,
                theta: x[2],
            });
        }
        out.push(TrajectoryState {
            tau: s0.tau + (step + 1) as f64 * h,
            position: Point::from_coords(x),
            velocity: u,
        });
    }
    Ok(out)
}

/// Largest relative deviation of `r` and of `theta` from their initial
/// values along a trajectory.
pub fn trajectory_drift(states: &[TrajectoryState]) -> [f64; 2] {
    let Some(first) = states.first() else {
        return [0.0, 0.0];
    };
    let (r0, th0) = (first.position.r, first.position.theta);
    states.iter().fold([0.0f64, 0.0f64], |[dr, dth], s| {
        [
            dr.max(((s.position.r - r0) / r0).abs()),
            dth.max(((s.position.theta - th0) / th0).abs()),
        ]
    })
}
