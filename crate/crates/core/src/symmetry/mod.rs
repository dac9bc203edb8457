//! Numerical symmetry verdicts for metric-affine geometries.
//!
//! A geometry is symmetric under a connected group when the Lie derivatives
//! of its metric and connection vanish along every generator. The verdicts
//! here sample that condition on quasi-random points; the orthogonal group
//! additionally checks invariance under the equatorial reflection
//! `theta -> pi - theta`.

mod fields;

use std::f64::consts::PI;
use std::fmt;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

pub use fields::{
    lie_bracket_fd, lie_connection, lie_connection_at, lie_metric, lie_metric_at, VectorField,
};

use crate::error::{Error, Result};
use crate::fd;
use crate::geometry::{ComponentArray, ConnectionSpec, GeometrySpec, Point, TH};

pub const DEFAULT_TOL: f64 = 1e-6;
pub const DEFAULT_SAMPLES: usize = 24;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Group {
    So3,
    O3,
    /// Rotations plus the three generators of spatial homogeneity.
    Cosmo(i8),
    /// As `Cosmo`, together with the equatorial reflection.
    CosmoO3(i8),
}

impl Group {
    pub fn generators(self) -> Vec<VectorField> {
        let mut g = VectorField::rotations();
        if let Group::Cosmo(k) | Group::CosmoO3(k) = self {
            g.extend(VectorField::translations(k));
        }
        g
    }

    pub fn has_reflection(self) -> bool {
        matches!(self, Group::O3 | Group::CosmoO3(_))
    }

    /// `so3`, `o3`, `cosmo` or `cosmo-o3`; the cosmological groups take `k`.
    pub fn parse(name: &str, k: i8) -> Result<Self> {
        match name.to_ascii_lowercase().as_str() {
            "so3" => Ok(Group::So3),
            "o3" => Ok(Group::O3),
            "cosmo" => Ok(Group::Cosmo(k)),
            "cosmo-o3" => Ok(Group::CosmoO3(k)),
            other => Err(Error::Spec(format!(
                "unknown group `{other}` (expected so3, o3, cosmo or cosmo-o3)"
            ))),
        }
    }
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Group::So3 => write!(f, "SO3"),
            Group::O3 => write!(f, "O3"),
            Group::Cosmo(k) => write!(f, "COSMO(k={k})"),
            Group::CosmoO3(k) => write!(f, "COSMO-O3(k={k})"),
        }
    }
}

impl Serialize for Group {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Coordinate box for sampling.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SampleBox {
    pub t: [f64; 2],
    pub r: [f64; 2],
    pub theta: [f64; 2],
    pub phi: [f64; 2],
}

impl Default for SampleBox {
    fn default() -> Self {
        SampleBox {
            t: [-1.0, 1.0],
            r: [0.5, 3.0],
            theta: [0.2, PI - 0.2],
            phi: [0.0, 2.0 * PI],
        }
    }
}

impl SampleBox {
    /// The default box, shrunk to `r < 1` for closed cosmologies.
    pub fn for_group(group: Group) -> Self {
        match group {
            Group::Cosmo(1) | Group::CosmoO3(1) => SampleBox {
                r: [0.1, 0.9],
                ..Default::default()
            },
            _ => SampleBox::default(),
        }
    }
}

fn radical_inverse(mut i: usize, base: usize) -> f64 {
    let mut f = 1.0;
    let mut out = 0.0;
    while i > 0 {
        f /= base as f64;
        out += f * (i % base) as f64;
        i /= base;
    }
    out
}

/// First `n` points of the Halton sequence (bases 2, 3, 5, 7) in `b`.
pub fn halton_points(n: usize, b: &SampleBox) -> Vec<Point> {
    let lerp = |range: [f64; 2], u: f64| range[0] + (range[1] - range[0]) * u;
    (1..=n)
        .map(|i| {
            Point::from_coords([
                lerp(b.t, radical_inverse(i, 2)),
                lerp(b.r, radical_inverse(i, 3)),
                lerp(b.theta, radical_inverse(i, 5)),
                lerp(b.phi, radical_inverse(i, 7)),
            ])
        })
        .collect()
}

/// Multiply every entry by `-1` per `theta` index it carries.
pub fn reflection_signs(a: &ComponentArray) -> ComponentArray {
    let mut out = a.clone();
    for (k, idx) in a.index_iter().enumerate() {
        let odd = idx.iter().zip(a.variance()).filter(|(&i, v)| i == TH && !v.is_frame()).count() % 2 == 1;
        if odd {
            out.data_mut()[k] = -out.data()[k];
        }
    }
    out
}

/// Pullback of a field under the equatorial reflection, evaluated at `p`.
pub fn reflect_components<F>(field: &F, p: &Point) -> Result<ComponentArray>
where
    F: Fn(&Point) -> Result<ComponentArray> + ?Sized,
{
    Ok(reflection_signs(&field(&p.reflected())?))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Residual {
    /// Scaled maximum over the sample.
    pub value: f64,
    /// Label of the component attaining it, e.g. `"phi,theta,t"`.
    pub component: String,
    pub point: [f64; 4],
}

impl Residual {
    fn zero() -> Self {
        Residual {
            value: 0.0,
            component: String::new(),
            point: [0.0; 4],
        }
    }

    fn absorb(&mut self, a: &ComponentArray, scale: f64, p: &Point) {
        let (m, idx) = a.max_abs_diff(&ComponentArray::zeros(a.variance()));
        let v = m / scale;
        if v > self.value || !v.is_finite() {
            self.value = v;
            self.component = a.label(&idx);
            self.point = p.coords();
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GeneratorResidual {
    pub generator: String,
    pub metric: Residual,
    pub connection: Residual,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SymmetryVerdict {
    pub group: Group,
    pub tol: f64,
    pub samples: usize,
    pub max_metric_residual: f64,
    pub max_connection_residual: f64,
    pub generators: Vec<GeneratorResidual>,
    /// Metric and connection residuals of the reflection, when requested.
    pub reflection: Option<[Residual; 2]>,
    /// Parameter functions that must vanish for the requested group but do
    /// not on the sample.
    pub violated: Vec<String>,
    pub pass: bool,
}

struct PointData {
    p: Point,
    g: ComponentArray,
    dg: [ComponentArray; 4],
    gamma: ComponentArray,
    dgamma: [ComponentArray; 4],
    refl: Option<[ComponentArray; 2]>,
}

/// Verdict for arbitrary metric and connection evaluators.
///
/// Residuals are scaled by `1 + max|g|` and `1 + max|Gamma|` over the
/// sample respectively.
pub fn check_fields<G, C>(metric: &G, connection: &C, group: Group, sample: &[Point], tol: f64) -> Result<SymmetryVerdict>
where
    G: Fn(&Point) -> Result<ComponentArray> + Sync + ?Sized,
    C: Fn(&Point) -> Result<ComponentArray> + Sync + ?Sized,
{
    let generators = group.generators();
    let data: Vec<PointData> = sample
        .par_iter()
        .map(|p| {
            let refl = if group.has_reflection() {
                Some([reflect_components(metric, p)?, reflect_components(connection, p)?])
            } else {
                None
            };
            Ok(PointData {
                p: *p,
                g: metric(p)?,
                dg: fd::gradient(metric, p, fd::STEP)?,
                gamma: connection(p)?,
                dgamma: fd::gradient(connection, p, fd::STEP)?,
                refl,
            })
        })
        .collect::<Result<_>>()?;

    let g_scale = 1.0 + data.iter().map(|d| d.g.max_abs()).fold(0.0, f64::max);
    let c_scale = 1.0 + data.iter().map(|d| d.gamma.max_abs()).fold(0.0, f64::max);

    let per_gen: Vec<GeneratorResidual> = generators
        .par_iter()
        .map(|x| {
            let mut metric_res = Residual::zero();
            let mut conn_res = Residual::zero();
            for d in &data {
                let xj = x.jets(&d.p)?;
                metric_res.absorb(&lie_metric_at(&d.g, &d.dg, &xj), g_scale, &d.p);
                conn_res.absorb(&lie_connection_at(&d.gamma, &d.dgamma, &xj), c_scale, &d.p);
            }
            Ok(GeneratorResidual {
                generator: x.name(),
                metric: metric_res,
                connection: conn_res,
            })
        })
        .collect::<Result<_>>()?;

    let reflection = group.has_reflection().then(|| {
        let mut m = Residual::zero();
        let mut c = Residual::zero();
        for d in &data {
            let [rg, rc] = d.refl.as_ref().expect("computed for reflection groups");
            m.absorb(&rg.sub(&d.g), g_scale, &d.p);
            c.absorb(&rc.sub(&d.gamma), c_scale, &d.p);
        }
        [m, c]
    });

    let mut max_m = per_gen.iter().map(|g| g.metric.value).fold(0.0, f64::max);
    let mut max_c = per_gen.iter().map(|g| g.connection.value).fold(0.0, f64::max);
    if let Some([m, c]) = &reflection {
        max_m = max_m.max(m.value);
        max_c = max_c.max(c.value);
    }
    Ok(SymmetryVerdict {
        group,
        tol,
        samples: sample.len(),
        max_metric_residual: max_m,
        max_connection_residual: max_c,
        generators: per_gen,
        reflection,
        violated: Vec::new(),
        pass: max_m < tol && max_c < tol,
    })
}

/// Verdict for a geometry. Reflection groups also report which of the
/// reflection-odd parameter functions fail to vanish.
pub fn check_symmetry(spec: &GeometrySpec, group: Group, sample: &[Point], tol: f64) -> Result<SymmetryVerdict> {
    let metric = |p: &Point| spec.metric(p);
    let connection = |p: &Point| spec.connection(p);
    let mut verdict = check_fields(&metric, &connection, group, sample, tol)?;
    if group.has_reflection() {
        verdict.violated = odd_functions(spec, sample, tol)?;
    }
    Ok(verdict)
}

fn odd_functions(spec: &GeometrySpec, sample: &[Point], tol: f64) -> Result<Vec<String>> {
    let mut max = [0.0f64; 6];
    let mut s_max = [0.0f64; 6];
    let mut k5 = 0.0f64;
    for p in sample {
        let c = spec.conn_jets(p.t, p.r)?.values();
        for i in 0..6 {
            max[i] = max[i].max(c[14 + i].abs());
        }
        match spec.connection_spec() {
            ConnectionSpec::S(s) => {
                let sj = s.jets(p.t, p.r)?;
                for (i, m) in s_max.iter_mut().enumerate() {
                    *m = m.max(sj.s(15 + i).v.abs());
                }
            }
            ConnectionSpec::Cosmo(cp) => {
                k5 = k5.max(cp.k_jets(p.t, p.r)?[4].v.abs());
            }
            _ => {}
        }
    }
    let mut out: Vec<String> = (0..6).filter(|&i| max[i] > tol).map(|i| format!("C{}", 15 + i)).collect();
    out.extend((0..6).filter(|&i| s_max[i] > tol).map(|i| format!("S{}", 15 + i)));
    if k5 > tol {
        out.push("K5".into());
    }
    Ok(out)
}
