//! Special geometries: torsion-free, metric-compatible, Levi-Civita, the
//! flat Weitzenboeck family and Minkowski space in general coordinates.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::expr::{parse, Expr, Jet2};
use crate::fd;
use crate::geometry::{
    eval_all, inverse_tetrad, metric_from_block, CJets, ComponentArray, GeometrySpec, IndexKind,
    MetricBlock, MetricParams, Point, TQParams,
};

/// Smallest admissible `|F1|`, `|F2|`, `|F5|`.
pub const DEGENERACY_FLOOR: f64 = 1e-12;

/// `F1..F6` of the flat (Weitzenboeck) tetrad.
#[derive(Clone, Debug, PartialEq)]
pub struct FlatParams {
    pub f: [Expr; 6],
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FJets(pub [Jet2; 6]);

impl FJets {
    pub fn f(&self, i: usize) -> Jet2 {
        self.0[i - 1]
    }
}

impl FlatParams {
    pub fn new(f: [Expr; 6]) -> Self {
        FlatParams { f }
    }

    pub fn parse(src: [&str; 6]) -> Result<Self> {
        let mut f: [Expr; 6] = std::array::from_fn(|_| Expr::zero());
        for (i, s) in src.iter().enumerate() {
            f[i] = parse(s).map_err(|source| Error::Parse {
                field: format!("F{}", i + 1),
                source,
            })?;
        }
        Ok(FlatParams { f })
    }

    /// Jets of `F1..F6`; fails when `F1`, `F2` or `F5` vanishes.
    pub fn jets(&self, t: f64, r: f64) -> Result<FJets> {
        let j = FJets(eval_all("F", &self.f, t, r)?);
        for i in [1, 2, 5] {
            if j.f(i).v.abs() <= DEGENERACY_FLOOR {
                return Err(Error::DegenerateTetrad(format!(
                    "F{i} = {} at (t, r) = ({t}, {r})",
                    j.f(i).v
                )));
            }
        }
        Ok(j)
    }
}

/// Integration constants of the flat metric-compatible metric family.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct FlatMetricConstants {
    pub g1: f64,
    pub g2: f64,
}

/// Coordinate map `(t, r) -> (t~, r~)` onto Minkowski space.
#[derive(Clone, Debug, PartialEq)]
pub struct CoordMapParams {
    pub t_tilde: Expr,
    pub r_tilde: Expr,
}

impl CoordMapParams {
    pub fn parse(t_tilde: &str, r_tilde: &str) -> Result<Self> {
        let p = |field: &str, s: &str| {
            parse(s).map_err(|source| Error::Parse {
                field: field.into(),
                source,
            })
        };
        Ok(CoordMapParams {
            t_tilde: p("t_tilde", t_tilde)?,
            r_tilde: p("r_tilde", r_tilde)?,
        })
    }

    /// Pulled-back Minkowski metric as jets.
    pub fn metric_block(&self, t: f64, r: f64) -> Result<MetricBlock> {
        let tt = self
            .t_tilde
            .eval_jet(t, r)
            .map_err(|e| Error::eval("t_tilde", e))?;
        let rt = self
            .r_tilde
            .eval_jet(t, r)
            .map_err(|e| Error::eval("r_tilde", e))?;
        let det = tt.dt() * rt.dr() - tt.dr() * rt.dt();
        if det.abs() <= 1e-12 {
            return Err(Error::SingularJacobian { det });
        }
        if rt.v <= 0.0 {
            return Err(Error::Domain(format!("r_tilde = {} must be positive", rt.v)));
        }
        let (t_t, t_r, r_t, r_r) = (tt.d_t(), tt.d_r(), rt.d_t(), rt.d_r());
        Ok(MetricBlock {
            tt: r_t * r_t - t_t * t_t,
            rr: r_r * r_r - t_r * t_r,
            tr: r_t * r_r - t_t * t_r,
            thth: rt * rt,
        })
    }
}

/// `T1 = .. = T8 = 0` with the given nonmetricity functions.
pub fn make_torsion_free(m: MetricParams, q: [Expr; 12]) -> GeometrySpec {
    GeometrySpec::tq_form(
        m,
        TQParams {
            t: std::array::from_fn(|_| Expr::zero()),
            q,
        },
    )
}

/// `Q1 = .. = Q12 = 0` with the given torsion functions.
pub fn make_metric_compatible(m: MetricParams, t: [Expr; 8]) -> GeometrySpec {
    GeometrySpec::tq_form(
        m,
        TQParams {
            t,
            q: std::array::from_fn(|_| Expr::zero()),
        },
    )
}

/// The Levi-Civita connection of `m`, as the TQ-form with all functions zero.
pub fn levi_civita_spec(m: MetricParams) -> GeometrySpec {
    GeometrySpec::tq_form(m, TQParams::zero())
}

/// `Theta^a_mu` of the flat tetrad at `p`.
pub fn weitzenboeck_tetrad(f: &FlatParams, p: &Point) -> Result<ComponentArray> {
    let j = f.jets(p.t, p.r)?;
    let th = weitzenboeck_from_jets(&j, p);
    inverse_tetrad(&th)?;
    Ok(th)
}

fn weitzenboeck_from_jets(j: &FJets, p: &Point) -> ComponentArray {
    let v = |i| j.f(i).v;
    let a = v(1) * v(3).sinh();
    let b = v(2) * v(4).cosh();
    let f5 = v(5);
    let (s6, c6) = v(6).sin_cos();
    let (st, ct) = p.theta.sin_cos();
    let (sp, cp) = p.phi.sin_cos();
    let rows = [
        [v(1) * v(3).cosh(), v(2) * v(4).sinh(), 0.0, 0.0],
        [
            st * cp * a,
            st * cp * b,
            f5 * (c6 * ct * cp - s6 * sp),
            -f5 * st * (c6 * sp + s6 * ct * cp),
        ],
        [
            st * sp * a,
            st * sp * b,
            f5 * (c6 * ct * sp + s6 * cp),
            f5 * st * (c6 * cp - s6 * ct * sp),
        ],
        [ct * a, ct * b, -f5 * c6 * st, f5 * s6 * st * st],
    ];
    ComponentArray::from_fn(&[IndexKind::FrameUp, IndexKind::Down], |i| rows[i[0]][i[1]])
}

/// Connection functions of the Weitzenboeck connection of `f`.
pub fn flat_connection_from_f(f: &FlatParams, t: f64, r: f64) -> Result<CJets> {
    Ok(flat_c_jets(&f.jets(t, r)?))
}

pub fn flat_c_jets(j: &FJets) -> CJets {
    let f = |i| j.f(i);
    let ch = (f(3) - f(4)).cosh();
    let th = (f(3) - f(4)).tanh();
    let (s6, c6) = (f(6).sin(), f(6).cos());
    let (f1t, f1r) = (f(1).d_t(), f(1).d_r());
    let (f2t, f2r) = (f(2).d_t(), f(2).d_r());
    let (f3t, f3r) = (f(3).d_t(), f(3).d_r());
    let (f4t, f4r) = (f(4).d_t(), f(4).d_r());
    let a = f(1) * f(3).sinh();
    let b = f(2) * f(4).cosh();
    let over1 = f(1) * ch;
    let over2 = f(2) * ch;
    CJets([
        f1t / f(1) + f3t * th,
        f1r / f(1) + f3r * th,
        f(2) * f4t / over1,
        f(2) * f4r / over1,
        f(1) * f3t / over2,
        f(1) * f3r / over2,
        f2t / f(2) - f4t * th,
        f2r / f(2) - f4r * th,
        f(5) * f(4).sinh() * c6 / over1,
        -(f(5) * f(3).cosh() * c6 / over2),
        a * c6 / f(5),
        b * c6 / f(5),
        f(5).d_t() / f(5),
        f(5).d_r() / f(5),
        -(a * s6 / f(5)),
        -(b * s6 / f(5)),
        f(6).d_t(),
        f(6).d_r(),
        -(f(5) * f(4).sinh() * s6 / over1),
        f(5) * f(3).cosh() * s6 / over2,
    ])
}

/// `E_a^mu d_rho Theta^a_nu` with the tetrad derivative by central differences.
pub fn weitzenboeck_oracle(f: &FlatParams, p: &Point) -> Result<ComponentArray> {
    let tetrad = |q: &Point| Ok(weitzenboeck_from_jets(&f.jets(q.t, q.r)?, q));
    let th = tetrad(p)?;
    let dth = fd::gradient(&tetrad, p, fd::STEP)?;
    let e = inverse_tetrad(&th)?;
    Ok(ComponentArray::from_fn(
        &[IndexKind::Up, IndexKind::Down, IndexKind::Down],
        |i| {
            (0..4)
                .map(|a| e.get(&[a, i[0]]) * dth[i[2]].get(&[a, i[1]]))
                .sum()
        },
    ))
}

/// Residuals of the conditions for the flat connection to be torsion-free.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct FlatTorsionResiduals {
    /// `F5,t - F1 sinh F3`
    pub i: f64,
    /// `F5,r - F2 cosh F4`
    pub ii: f64,
    /// `d_r(F1 sinh F3) - d_t(F2 cosh F4)`
    pub iii: f64,
    /// The two first-order equations for `F1`, `F2`.
    pub iv: [f64; 2],
    /// `C20`, which vanishes only for `sin F6 = 0`.
    pub c20: f64,
}

impl FlatTorsionResiduals {
    pub fn max_abs(&self) -> f64 {
        [self.i, self.ii, self.iii, self.iv[0], self.iv[1], self.c20]
            .iter()
            .fold(0.0, |m, x| m.max(x.abs()))
    }
}

pub fn flat_torsion_free_residuals(f: &FlatParams, p: &Point) -> Result<FlatTorsionResiduals> {
    let j = f.jets(p.t, p.r)?;
    let f = |i| j.f(i);
    let a = f(1) * f(3).sinh();
    let b = f(2) * f(4).cosh();
    let d = f(3).v - f(4).v;
    Ok(FlatTorsionResiduals {
        i: f(5).dt() - a.v,
        ii: f(5).dr() - b.v,
        iii: a.dr() - b.dt(),
        iv: [
            f(1).dr() * d.cosh() + f(1).v * f(3).dr() * d.sinh() - f(2).v * f(4).dt(),
            f(2).dt() * d.cosh() - f(2).v * f(4).dt() * d.sinh() - f(1).v * f(3).dr(),
        ],
        c20: flat_c_jets(&j).c(20).v,
    })
}

/// Metric compatible with the flat connection; requires `F6 = 0`.
pub fn flat_metric_compatible_metric(
    f: &FlatParams,
    k: &FlatMetricConstants,
    p: &Point,
) -> Result<ComponentArray> {
    check_f6_zero(f)?;
    let block = flat_metric_block(&f.jets(p.t, p.r)?, k);
    let g = metric_from_block(&block, p);
    crate::geometry::inverse_metric(&g)?;
    Ok(g)
}

/// The `(t, r)` and angular metric functions of the compatible family.
/// Callers are responsible for [`check_f6_zero`].
pub fn flat_metric_block(j: &FJets, k: &FlatMetricConstants) -> MetricBlock {
    let f = |i| j.f(i);
    let (g1, g2) = (k.g1, k.g2);
    MetricBlock {
        tt: -(f(1) * f(1) * 0.5 * ((g1 + g2) - (f(3) * 2.0).cosh() * (g1 - g2))),
        rr: f(2) * f(2) * 0.5 * ((g1 + g2) + (f(4) * 2.0).cosh() * (g1 - g2)),
        tr: f(1) * f(2) * (f(3).sinh() * f(4).cosh() * g1 - f(3).cosh() * f(4).sinh() * g2),
        thth: f(5) * f(5) * g1,
    }
}

/// The compatible metric family only exists for `F6 = 0`.
pub fn check_f6_zero(f: &FlatParams) -> Result<()> {
    if f.f[5] != Expr::zero() {
        return Err(Error::Spec(format!(
            "the flat metric-compatible family requires F6 = 0, found `{}`",
            f.f[5]
        )));
    }
    Ok(())
}

/// `eta_ab Theta^a_mu Theta^b_nu`.
pub fn tetrad_metric(f: &FlatParams, p: &Point) -> Result<ComponentArray> {
    Ok(crate::geometry::frame_metric(&weitzenboeck_tetrad(f, p)?))
}

/// Minkowski metric pulled back along `(t, r) -> (t~, r~)`.
pub fn minkowski_general_coords(c: &CoordMapParams, p: &Point) -> Result<ComponentArray> {
    Ok(metric_from_block(&c.metric_block(p.t, p.r)?, p))
}
