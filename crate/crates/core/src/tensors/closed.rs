//! Closed-form component tables.

use crate::error::Result;
use crate::expr::Jet2;
use crate::geometry::{
    c_from_tq_jets, connection_from_jets, inverse_metric, metric_from_block, CJets,
    ComponentArray, ConnParamsC, IndexKind, MetricBlock, MetricJets, MetricParams, Point,
    TQJets, TQParams, PH, R, T, TH,
};

const UDD: [IndexKind; 3] = [IndexKind::Up, IndexKind::Down, IndexKind::Down];
const DDD: [IndexKind; 3] = [IndexKind::Down, IndexKind::Down, IndexKind::Down];

/// Values of the metric functions and their first partials.
struct G {
    e1: f64,
    e2: f64,
    em2: f64,
    e4: f64,
    s3: f64,
    c3: f64,
    t: [f64; 4],
    r: [f64; 4],
}

impl G {
    fn new(m: &MetricJets) -> Self {
        let v = |i: usize| m.g(i).v;
        G {
            e1: v(1).exp(),
            e2: v(2).exp(),
            em2: (-v(2)).exp(),
            e4: v(4).exp(),
            s3: v(3).sin(),
            c3: v(3).cos(),
            t: m.g.map(|g: Jet2| g.dt()),
            r: m.g.map(|g: Jet2| g.dr()),
        }
    }
}

/// `T^rho_{mu nu}` of the connection `C1..C20`.
pub fn torsion(c: &ConnParamsC, p: &Point) -> Result<ComponentArray> {
    Ok(torsion_from_jets(&c.jets(p.t, p.r)?, p))
}

pub fn torsion_from_jets(cj: &CJets, p: &Point) -> ComponentArray {
    let c = |i: usize| cj.c(i).v;
    let s = p.theta.sin();
    let mut out = ComponentArray::zeros(&UDD);
    let mut put = |rho: usize, mu: usize, nu: usize, v: f64| {
        out.set(&[rho, mu, nu], v);
        out.set(&[rho, nu, mu], -v);
    };
    put(T, T, R, c(3) - c(2));
    put(R, T, R, c(7) - c(6));
    put(T, TH, PH, 2.0 * c(19) * s);
    put(R, TH, PH, 2.0 * c(20) * s);
    put(TH, T, TH, c(13) - c(11));
    put(PH, T, PH, c(13) - c(11));
    put(TH, R, TH, c(14) - c(12));
    put(PH, R, PH, c(14) - c(12));
    put(PH, T, TH, (c(17) - c(15)) / s);
    put(TH, T, PH, -(c(17) - c(15)) * s);
    put(PH, R, TH, (c(18) - c(16)) / s);
    put(TH, R, PH, -(c(18) - c(16)) * s);
    out
}

/// `Q_{mu nu rho} = nabla_mu g_{nu rho}` of the metric `G` and connection `C`.
pub fn nonmetricity(m: &MetricParams, c: &ConnParamsC, p: &Point) -> Result<ComponentArray> {
    Ok(nonmetricity_from_jets(&m.jets(p.t, p.r)?, &c.jets(p.t, p.r)?, p))
}

pub fn nonmetricity_from_jets(m: &MetricJets, cj: &CJets, p: &Point) -> ComponentArray {
    let c = |i: usize| cj.c(i).v;
    let g = G::new(m);
    let (e1, e2, em2, e4, s3, c3) = (g.e1, g.e2, g.em2, g.e4, g.s3, g.c3);
    let (gt, gr) = (g.t, g.r);
    let s = p.theta.sin();
    let mut out = ComponentArray::zeros(&DDD);
    let mut put = |mu: usize, nu: usize, rho: usize, v: f64| {
        out.set(&[mu, nu, rho], v);
        out.set(&[mu, rho, nu], v);
    };
    put(T, T, T, -e1 * ((2.0 * c(5) - e2 * gt[2]) * s3 - (2.0 * c(1) - gt[0] - gt[1]) * e2 * c3));
    put(R, T, T, -e1 * ((2.0 * c(6) - e2 * gr[2]) * s3 - (2.0 * c(2) - gr[0] - gr[1]) * e2 * c3));
    put(T, R, R, -e1 * ((2.0 * c(3) + em2 * gt[2]) * s3 + (2.0 * c(7) - gt[0] + gt[1]) * em2 * c3));
    put(R, R, R, -e1 * ((2.0 * c(4) + em2 * gr[2]) * s3 + (2.0 * c(8) - gr[0] + gr[1]) * em2 * c3));
    put(T, T, R, -e1 * ((c(1) + c(7) - gt[0]) * s3 - (c(3) * e2 - c(5) * em2 + gt[2]) * c3));
    put(R, T, R, -e1 * ((c(2) + c(8) - gr[0]) * s3 - (c(4) * e2 - c(6) * em2 + gr[2]) * c3));
    let q_t = e4 * (gt[3] - 2.0 * c(13));
    put(T, TH, TH, q_t);
    put(T, PH, PH, q_t * s * s);
    let q_r = e4 * (gr[3] - 2.0 * c(14));
    put(R, TH, TH, q_r);
    put(R, PH, PH, q_r * s * s);
    let q11 = (c(15) * e4 + (c(20) * s3 - c(19) * e2 * c3) * e1) * s;
    put(PH, T, TH, q11);
    put(TH, T, PH, -q11);
    let q12 = (c(16) * e4 + (c(19) * s3 + c(20) * em2 * c3) * e1) * s;
    put(PH, R, TH, q12);
    put(TH, R, PH, -q12);
    let q9 = -c(11) * e4 - (c(10) * s3 - c(9) * e2 * c3) * e1;
    put(TH, T, TH, q9);
    put(PH, T, PH, q9 * s * s);
    let q10 = -c(12) * e4 - (c(9) * s3 + c(10) * em2 * c3) * e1;
    put(TH, R, TH, q10);
    put(PH, R, PH, q10 * s * s);
    out
}

/// `K_{mu nu rho}` with all indices down, antisymmetric in the first two.
pub fn contortion(m: &MetricParams, tq: &TQParams, p: &Point) -> Result<ComponentArray> {
    Ok(contortion_from_jets(&m.jets(p.t, p.r)?, &tq.jets(p.t, p.r)?, p))
}

pub fn contortion_from_jets(m: &MetricJets, x: &TQJets, p: &Point) -> ComponentArray {
    let t = |i: usize| x.t(i).v;
    let g = G::new(m);
    let (e1, e2, em2, e4, s3, c3) = (g.e1, g.e2, g.em2, g.e4, g.s3, g.c3);
    let s = p.theta.sin();
    let mut out = ComponentArray::zeros(&DDD);
    let mut put = |mu: usize, nu: usize, rho: usize, v: f64| {
        out.set(&[mu, nu, rho], v);
        out.set(&[nu, mu, rho], -v);
    };
    let a = 0.5 * e1 * (t(4) * s3 - t(3) * e2 * c3);
    let b = 0.5 * e1 * (t(3) * s3 + t(4) * em2 * c3);
    put(T, PH, TH, a * s);
    put(T, TH, PH, -a * s);
    put(R, PH, TH, b * s);
    put(R, TH, PH, -b * s);
    put(T, R, T, e1 * (t(2) * s3 - t(1) * e2 * c3));
    put(T, R, R, e1 * (t(1) * s3 + t(2) * em2 * c3));
    put(TH, PH, T, (t(7) * e4 + a) * s);
    put(TH, PH, R, (t(8) * e4 + b) * s);
    put(T, TH, TH, e4 * t(5));
    put(T, PH, PH, e4 * t(5) * s * s);
    put(R, TH, TH, e4 * t(6));
    put(R, PH, PH, e4 * t(6) * s * s);
    out
}

/// `L_{mu nu rho}` with all indices down, symmetric in the last two. The
/// lowered components do not involve the metric.
pub fn disformation(_m: &MetricParams, tq: &TQParams, p: &Point) -> Result<ComponentArray> {
    Ok(disformation_from_jets(&tq.jets(p.t, p.r)?, p))
}

pub fn disformation_from_jets(x: &TQJets, p: &Point) -> ComponentArray {
    let q = |i: usize| x.q(i).v;
    let s = p.theta.sin();
    let mut out = ComponentArray::zeros(&DDD);
    let mut put = |mu: usize, nu: usize, rho: usize, v: f64| {
        out.set(&[mu, nu, rho], v);
        out.set(&[mu, rho, nu], v);
    };
    put(T, T, T, -0.5 * q(1));
    put(T, R, R, 0.5 * q(2) - q(7));
    put(T, TH, TH, 0.5 * q(4) - q(9));
    put(T, PH, PH, (0.5 * q(4) - q(9)) * s * s);
    put(R, R, R, -0.5 * q(6));
    put(R, T, T, 0.5 * q(5) - q(3));
    put(R, TH, TH, 0.5 * q(8) - q(10));
    put(R, PH, PH, (0.5 * q(8) - q(10)) * s * s);
    put(T, T, R, -0.5 * q(5));
    put(R, T, R, -0.5 * q(2));
    put(TH, T, PH, q(11) * s);
    put(PH, T, TH, -q(11) * s);
    put(TH, R, PH, q(12) * s);
    put(PH, R, TH, -q(12) * s);
    put(TH, T, TH, -0.5 * q(4));
    put(PH, T, PH, -0.5 * q(4) * s * s);
    put(TH, R, TH, -0.5 * q(8));
    put(PH, R, PH, -0.5 * q(8) * s * s);
    out
}

/// Levi-Civita connection with all indices down.
pub fn levi_civita(m: &MetricParams, p: &Point) -> Result<ComponentArray> {
    let mj = m.jets(p.t, p.r)?;
    inverse_metric(&metric_from_block(&MetricBlock::from_g(&mj), p))?;
    Ok(levi_civita_from_jets(&mj, p))
}

pub fn levi_civita_from_jets(m: &MetricJets, p: &Point) -> ComponentArray {
    let g = G::new(m);
    let (e1, e2, em2, e4, s3, c3) = (g.e1, g.e2, g.em2, g.e4, g.s3, g.c3);
    let (gt, gr) = (g.t, g.r);
    let (s, co) = p.theta.sin_cos();
    let mut out = ComponentArray::zeros(&DDD);
    let mut put = |mu: usize, nu: usize, rho: usize, v: f64| {
        out.set(&[mu, nu, rho], v);
        out.set(&[mu, rho, nu], v);
    };
    put(T, T, T, 0.5 * e1 * e2 * (gt[2] * s3 - (gt[0] + gt[1]) * c3));
    put(T, T, R, 0.5 * e1 * e2 * (gr[2] * s3 - (gr[0] + gr[1]) * c3));
    put(
        T,
        R,
        R,
        0.5 * e1 * ((2.0 * gr[2] - (gt[0] - gt[1]) * em2) * c3 + (2.0 * gr[0] + gt[2] * em2) * s3),
    );
    put(
        R,
        T,
        T,
        0.5 * e1 * ((2.0 * gt[2] + (gr[0] + gr[1]) * e2) * c3 + (2.0 * gt[0] - gr[2] * e2) * s3),
    );
    put(R, T, R, -0.5 * e1 * em2 * (gt[2] * s3 - (gt[0] - gt[1]) * c3));
    put(R, R, R, -0.5 * e1 * em2 * (gr[2] * s3 - (gr[0] - gr[1]) * c3));
    for (x, dx) in [(T, gt[3]), (R, gr[3])] {
        let v = -0.5 * e4 * dx;
        put(x, TH, TH, v);
        put(TH, x, TH, -v);
        put(x, PH, PH, v * s * s);
        put(PH, x, PH, -v * s * s);
    }
    put(PH, TH, PH, e4 * co * s);
    put(TH, PH, PH, -e4 * co * s);
    out
}

/// `Gamma - (Gamma_LC + K + L)`, every term with the first index up.
pub fn decomposition_residual(m: &MetricParams, tq: &TQParams, p: &Point) -> Result<ComponentArray> {
    let mj = m.jets(p.t, p.r)?;
    let x = tq.jets(p.t, p.r)?;
    let ginv = inverse_metric(&metric_from_block(&MetricBlock::from_g(&mj), p))?;
    let gamma = connection_from_jets(&c_from_tq_jets(&mj, &x), p);
    let sum = levi_civita_from_jets(&mj, p)
        .add(&contortion_from_jets(&mj, &x, p))
        .add(&disformation_from_jets(&x, p))
        .raise(0, &ginv);
    Ok(gamma.sub(&sum))
}
