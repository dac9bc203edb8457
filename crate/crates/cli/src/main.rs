//! Command-line front end: load a geometry spec, evaluate fields and
//! tensors, check symmetries and find circular orbits.
//!
//! Exit status is 0 on success or a passing check, 1 on a failing check and
//! 2 on usage, spec or evaluation errors.

mod output;
mod points;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use metaffine::cosmo::cosmo_symmetry_check;
use metaffine::geometry::{ConnectionSpec, GeometrySpec, Point};
use metaffine::orbits::{find_circular_orbits, integrate_autoparallel, trajectory_drift, OrbitSolution, TrajectoryState, ORBIT_TOL};
use metaffine::symmetry::{check_symmetry, halton_points, Group, SampleBox, SymmetryVerdict, DEFAULT_SAMPLES, DEFAULT_TOL};
use metaffine::tensors::{compute, compute_oracle, Quantity};
use rayon::prelude::*;
use serde_json::{json, Value};

use output::{block, float, object, point_json, pretty, ComponentCsv};

#[derive(Parser)]
#[command(name = "metaffine", version, about = "Spherically symmetric metric-affine geometries")]
struct Cli {
    /// Geometry spec (JSON).
    #[arg(long, global = true)]
    spec: Option<PathBuf>,
    /// Write output here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Tolerance for checks and orbit residuals.
    #[arg(long, global = true)]
    tol: Option<f64>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Args)]
struct PointArgs {
    /// `t,r,theta,phi`; may be repeated.
    #[arg(long = "point")]
    points: Vec<String>,
    /// Point grid such as `t=0; r=1:10:4; theta=0.3:2.8:4; phi=0`.
    #[arg(long)]
    grid: Option<String>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Path {
    Closed,
    Oracle,
    Both,
}

#[derive(Subcommand)]
enum Command {
    /// Metric, connection, tetrad and spin connection at points.
    Eval {
        #[command(flatten)]
        at: PointArgs,
    },
    /// Torsion, nonmetricity, contortion, disformation, Levi-Civita and curvature.
    Tensors {
        #[command(flatten)]
        at: PointArgs,
        /// Tensor to evaluate; may be repeated. Defaults to all six.
        #[arg(long = "tensor")]
        tensors: Vec<String>,
        /// Closed form, definitional recomputation, or both with their discrepancy.
        #[arg(long, value_enum, default_value_t = Path::Closed)]
        oracle: Path,
    },
    /// Symmetry verdict on quasi-random sample points.
    Check {
        /// so3, o3, cosmo or cosmo-o3.
        #[arg(long)]
        group: String,
        /// Spatial curvature sign for the cosmological groups of non-cosmological specs.
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        k: i8,
        #[arg(long, default_value_t = DEFAULT_SAMPLES)]
        samples: usize,
    },
    /// Circular autoparallel orbits in a radius range.
    Orbits {
        /// Radius range `lo:hi`.
        #[arg(long)]
        range: String,
        /// Number of grid radii.
        #[arg(long, default_value_t = 64)]
        grid: usize,
        /// Integrate each solution over one period with this many steps.
        #[arg(long)]
        validate: Option<usize>,
        /// Write validated trajectories as CSV.
        #[arg(long)]
        trajectories: Option<PathBuf>,
    },
    /// Six-generator verdict for a cosmological spec.
    Cosmo {
        /// Also require invariance under the equatorial reflection.
        #[arg(long)]
        reflection: bool,
        #[arg(long, default_value_t = DEFAULT_SAMPLES)]
        samples: usize,
    },
}

/// Failure with its exit status.
struct Fail(u8, String);

impl From<metaffine::Error> for Fail {
    fn from(e: metaffine::Error) -> Self {
        Fail(2, e.to_string())
    }
}

impl From<String> for Fail {
    fn from(e: String) -> Self {
        Fail(2, e)
    }
}

type Run = Result<(String, u8), Fail>;

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    let result = run(&cli).and_then(|(text, code)| {
        match &cli.out {
            Some(path) => fs::write(path, &text).map_err(|e| Fail(2, format!("{}: {e}", path.display())))?,
            None => print!("{text}"),
        }
        Ok(code)
    });
    match result {
        Ok(code) => ExitCode::from(code),
        Err(Fail(code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}

fn load_spec(cli: &Cli) -> Result<GeometrySpec, Fail> {
    let path = cli
        .spec
        .as_ref()
        .ok_or_else(|| Fail(2, "--spec is required".into()))?;
    let src = fs::read_to_string(path).map_err(|e| Fail(2, format!("{}: {e}", path.display())))?;
    GeometrySpec::from_json_str(&src).map_err(|e| Fail(2, format!("{}: {e}", path.display())))
}

fn collect_points(at: &PointArgs) -> Result<Vec<Point>, Fail> {
    let mut pts = at
        .points
        .iter()
        .map(|s| points::parse_point(s))
        .collect::<Result<Vec<_>, _>>()?;
    if let Some(g) = &at.grid {
        pts.extend(points::parse_grid(g)?);
    }
    if pts.is_empty() {
        return Err(Fail(2, "give at least one --point or a --grid".into()));
    }
    Ok(pts)
}

fn run(cli: &Cli) -> Run {
    let spec = load_spec(cli)?;
    match &cli.command {
        Command::Eval { at } => eval(cli, &spec, &collect_points(at)?),
        Command::Tensors { at, tensors, oracle } => run_tensors(cli, &spec, &collect_points(at)?, tensors, *oracle),
        Command::Check { group, k, samples } => {
            // A cosmological spec fixes k and restricts the radial domain.
            let (k, domain) = match spec.connection_spec() {
                ConnectionSpec::Cosmo(cp) => (cp.k, Some(Group::Cosmo(cp.k))),
                _ => (*k, None),
            };
            let group = Group::parse(group, k)?;
            let sample = halton_points(*samples, &SampleBox::for_group(domain.unwrap_or(group)));
            let v = check_symmetry(&spec, group, &sample, cli.tol.unwrap_or(DEFAULT_TOL))?;
            verdict(cli, &v)
        }
        Command::Orbits { range, grid, validate, trajectories } => {
            orbits(cli, &spec, range, *grid, *validate, trajectories.as_ref())
        }
        Command::Cosmo { reflection, samples } => {
            let ConnectionSpec::Cosmo(cp) = spec.connection_spec() else {
                return Err(Fail(2, format!("cosmo needs a `cosmo` spec, found `{}`", spec.kind())));
            };
            let sample = halton_points(*samples, &SampleBox::for_group(Group::Cosmo(cp.k)));
            let v = cosmo_symmetry_check(cp, &sample, cli.tol.unwrap_or(DEFAULT_TOL), *reflection)?;
            verdict(cli, &v)
        }
    }
}

fn eval(cli: &Cli, spec: &GeometrySpec, pts: &[Point]) -> Run {
    let fields = pts
        .par_iter()
        .map(|p| {
            let mut f = vec![("g", spec.metric(p)?), ("Gamma", spec.connection(p)?)];
            if !matches!(spec.connection_spec(), ConnectionSpec::Cosmo(_)) {
                f.push(("tetrad", spec.tetrad(p)?));
            }
            if let Some(w) = spec.spin_connection(p)? {
                f.push(("omega", w));
            }
            Ok(f)
        })
        .collect::<metaffine::Result<Vec<_>>>()?;
    if cli.format == Format::Csv {
        let mut csv = ComponentCsv::new();
        for (i, (p, f)) in pts.iter().zip(&fields).enumerate() {
            for (name, a) in f {
                csv.push(i, p, name, a);
            }
        }
        return Ok((csv.finish(), 0));
    }
    let entries: Vec<Value> = pts
        .iter()
        .zip(&fields)
        .map(|(p, f)| {
            let mut e = vec![("point".to_string(), point_json(p))];
            e.extend(f.iter().map(|(name, a)| (name.to_string(), a.to_json())));
            object(e)
        })
        .collect();
    Ok((pretty(&json!({ "kind": spec.kind(), "points": entries })), 0))
}

const DEFAULT_TENSORS: [Quantity; 6] = [
    Quantity::Torsion,
    Quantity::Nonmetricity,
    Quantity::Contortion,
    Quantity::Disformation,
    Quantity::LeviCivita,
    Quantity::Curvature,
];

fn run_tensors(cli: &Cli, spec: &GeometrySpec, pts: &[Point], names: &[String], path: Path) -> Run {
    let qs: Vec<Quantity> = if names.is_empty() {
        DEFAULT_TENSORS.to_vec()
    } else {
        names.iter().map(|n| n.parse()).collect::<metaffine::Result<_>>()?
    };
    type Pair = (Option<metaffine::geometry::ComponentArray>, Option<metaffine::geometry::ComponentArray>);
    let results = pts
        .par_iter()
        .map(|p| {
            qs.iter()
                .map(|&q| {
                    let closed = matches!(path, Path::Closed | Path::Both).then(|| compute(spec, q, p)).transpose()?;
                    let def = matches!(path, Path::Oracle | Path::Both).then(|| compute_oracle(spec, q, p)).transpose()?;
                    Ok((closed, def))
                })
                .collect::<metaffine::Result<Vec<Pair>>>()
        })
        .collect::<metaffine::Result<Vec<_>>>()?;

    if cli.format == Format::Csv {
        let mut csv = ComponentCsv::new();
        for (i, (p, per_q)) in pts.iter().zip(&results).enumerate() {
            for (q, (closed, def)) in qs.iter().zip(per_q) {
                if let Some(a) = closed {
                    csv.push(i, p, q.name(), a);
                }
                if let Some(a) = def {
                    csv.push(i, p, &format!("{}_oracle", q.name()), a);
                }
            }
        }
        return Ok((csv.finish(), 0));
    }

    let mut worst = 0.0f64;
    let entries: Vec<Value> = pts
        .iter()
        .zip(&results)
        .map(|(p, per_q)| {
            let mut e = vec![("point".to_string(), point_json(p))];
            for (q, pair) in qs.iter().zip(per_q) {
                let v = match pair {
                    (Some(c), Some(d)) => {
                        let diff = c.scaled_diff(d);
                        worst = worst.max(diff);
                        json!({ "closed": block(c), "oracle": block(d), "max_discrepancy": float_json(diff) })
                    }
                    (Some(a), None) | (None, Some(a)) => block(a),
                    (None, None) => unreachable!("one path is always selected"),
                };
                e.push((q.name().to_string(), v));
            }
            object(e)
        })
        .collect();
    let mut top = vec![("kind".to_string(), json!(spec.kind())), ("points".to_string(), Value::Array(entries))];
    if path == Path::Both {
        top.push(("max_discrepancy".to_string(), float_json(worst)));
    }
    Ok((pretty(&object(top)), 0))
}

fn float_json(v: f64) -> Value {
    metaffine::geometry::json_number(v)
}

fn verdict(cli: &Cli, v: &SymmetryVerdict) -> Run {
    let code = if v.pass { 0 } else { 1 };
    if !v.pass {
        let mut msg = format!(
            "{} check failed: metric residual {:e}, connection residual {:e}",
            v.group, v.max_metric_residual, v.max_connection_residual
        );
        if !v.violated.is_empty() {
            msg.push_str(&format!("; nonzero: {}", v.violated.join(", ")));
        }
        eprintln!("{msg}");
    }
    if cli.format == Format::Csv {
        let mut out = String::from("generator,metric_residual,metric_component,connection_residual,connection_component\n");
        let mut row = |name: &str, m: &metaffine::symmetry::Residual, c: &metaffine::symmetry::Residual| {
            out.push_str(&format!(
                "{name},{},{},{},{}\n",
                float(m.value),
                output::field(&m.component),
                float(c.value),
                output::field(&c.component)
            ));
        };
        for g in &v.generators {
            row(&g.generator, &g.metric, &g.connection);
        }
        if let Some([m, c]) = &v.reflection {
            row("reflection", m, c);
        }
        return Ok((out, code));
    }
    let value = serde_json::to_value(v).map_err(|e| Fail(2, e.to_string()))?;
    Ok((pretty(&value), code))
}

fn parse_range(src: &str) -> Result<(f64, f64), Fail> {
    let parse = |s: &str| s.trim().parse::<f64>().map_err(|_| Fail(2, format!("range `{src}` must be lo:hi")));
    match src.split_once(':') {
        Some((lo, hi)) => Ok((parse(lo)?, parse(hi)?)),
        None => Err(Fail(2, format!("range `{src}` must be lo:hi"))),
    }
}

fn orbits(
    cli: &Cli,
    spec: &GeometrySpec,
    range: &str,
    grid: usize,
    validate: Option<usize>,
    trajectories: Option<&PathBuf>,
) -> Run {
    let scan = find_circular_orbits(spec, parse_range(range)?, grid, cli.tol.unwrap_or(ORBIT_TOL))?;
    for r in &scan.rejected {
        log::info!("R = {}: {:?}", r.r, r.reason);
    }
    let runs: Vec<Option<Vec<TrajectoryState>>> = scan
        .solutions
        .par_iter()
        .map(|s| {
            validate
                .map(|steps| integrate_autoparallel(spec, &s.initial_state(), s.period() / steps as f64, steps))
                .transpose()
        })
        .collect::<metaffine::Result<_>>()?;

    if let Some(path) = trajectories {
        let mut csv = String::from("solution,tau,t,r,theta,phi\n");
        for (i, states) in runs.iter().enumerate() {
            for s in states.iter().flatten() {
                let x = s.position.coords();
                csv.push_str(&format!(
                    "{i},{},{},{},{},{}\n",
                    float(s.tau),
                    float(x[0]),
                    float(x[1]),
                    float(x[2]),
                    float(x[3])
                ));
            }
        }
        fs::write(path, csv).map_err(|e| Fail(2, format!("{}: {e}", path.display())))?;
    }

    let drift = |states: &Option<Vec<TrajectoryState>>| states.as_deref().map(trajectory_drift);
    if cli.format == Format::Csv {
        let mut out = String::from("N,R,Theta,Omega,res1,res2,res3,res4,continuum,drift_r,drift_theta\n");
        for (s, states) in scan.solutions.iter().zip(&runs) {
            let p = s.params;
            let d = drift(states).map_or([String::new(), String::new()], |d| d.map(float));
            out.push_str(&format!(
                "{},{},{},{},{},{},{},{},{},{},{}\n",
                float(p.n),
                float(p.r),
                float(p.theta),
                float(p.omega),
                float(s.residuals[0]),
                float(s.residuals[1]),
                float(s.residuals[2]),
                float(s.residuals[3]),
                s.continuum,
                d[0],
                d[1]
            ));
        }
        return Ok((out, 0));
    }
    let mut out = String::new();
    for (s, states) in scan.solutions.iter().zip(&runs) {
        out.push_str(&solution_line(s, drift(states)));
        out.push('\n');
    }
    Ok((out, 0))
}

fn solution_line(s: &OrbitSolution, drift: Option<[f64; 2]>) -> String {
    let mut v = serde_json::to_value(s).expect("orbit solutions serialize");
    if let (Some([dr, dth]), Value::Object(m)) = (drift, &mut v) {
        m.insert("drift".into(), json!({ "r": float_json(dr), "theta": float_json(dth) }));
    }
    v.to_string()
}
