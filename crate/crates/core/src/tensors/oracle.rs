//! Definitional recomputations from assembled components.
//!
//! These work for any metric source, including the Robertson-Walker and the
//! flat-compatible metrics that have no `G` parametrization.

use crate::error::Result;
use crate::fd;
use crate::geometry::{inverse_metric, metric_from_block, ComponentArray, IndexKind, MetricBlock, Point, PH, TH};

const UDD: [IndexKind; 3] = [IndexKind::Up, IndexKind::Down, IndexKind::Down];
const DDD: [IndexKind; 3] = [IndexKind::Down, IndexKind::Down, IndexKind::Down];

/// `d_mu g_{nu rho}` from the metric jets, indexed by `mu`.
pub fn metric_derivatives(b: &MetricBlock, p: &Point) -> [ComponentArray; 4] {
    let (s, c) = p.theta.sin_cos();
    let part = |f: fn(&crate::expr::Jet2) -> f64| {
        let mut out = ComponentArray::zeros(&[IndexKind::Down, IndexKind::Down]);
        out.set(&[0, 0], f(&b.tt));
        out.set(&[1, 1], f(&b.rr));
        out.set(&[0, 1], f(&b.tr));
        out.set(&[1, 0], f(&b.tr));
        out.set(&[TH, TH], f(&b.thth));
        out.set(&[PH, PH], f(&b.thth) * s * s);
        out
    };
    let mut dth = ComponentArray::zeros(&[IndexKind::Down, IndexKind::Down]);
    dth.set(&[PH, PH], 2.0 * b.thth.v * s * c);
    [
        part(|j| j.dt()),
        part(|j| j.dr()),
        dth,
        ComponentArray::zeros(&[IndexKind::Down, IndexKind::Down]),
    ]
}

/// `1/2 (d_nu g_{mu rho} + d_rho g_{mu nu} - d_mu g_{nu rho})`.
pub fn christoffel_down(b: &MetricBlock, p: &Point) -> ComponentArray {
    let dg = metric_derivatives(b, p);
    ComponentArray::from_fn(&DDD, |i| {
        let (mu, nu, rho) = (i[0], i[1], i[2]);
        0.5 * (dg[nu].get(&[mu, rho]) + dg[rho].get(&[mu, nu]) - dg[mu].get(&[nu, rho]))
    })
}

/// Levi-Civita connection with the first index up.
pub fn christoffel(b: &MetricBlock, p: &Point) -> Result<ComponentArray> {
    let ginv = inverse_metric(&metric_from_block(b, p))?;
    Ok(christoffel_down(b, p).raise(0, &ginv))
}

/// `T^rho_{mu nu} = Gamma^rho_{nu mu} - Gamma^rho_{mu nu}`.
pub fn torsion_of(gamma: &ComponentArray) -> ComponentArray {
    ComponentArray::from_fn(&UDD, |i| gamma.get(&[i[0], i[2], i[1]]) - gamma.get(&[i[0], i[1], i[2]]))
}

/// `d_mu g_{nu rho} - Gamma^s_{nu mu} g_{s rho} - Gamma^s_{rho mu} g_{nu s}`.
pub fn nonmetricity_of(dg: &[ComponentArray; 4], g: &ComponentArray, gamma: &ComponentArray) -> ComponentArray {
    ComponentArray::from_fn(&DDD, |i| {
        let (mu, nu, rho) = (i[0], i[1], i[2]);
        let corr: f64 = (0..4)
            .map(|s| gamma.get(&[s, nu, mu]) * g.get(&[s, rho]) + gamma.get(&[s, rho, mu]) * g.get(&[nu, s]))
            .sum();
        dg[mu].get(&[nu, rho]) - corr
    })
}

/// Nonmetricity with exact (jet) metric derivatives.
pub fn nonmetricity_exact(b: &MetricBlock, gamma: &ComponentArray, p: &Point) -> ComponentArray {
    nonmetricity_of(&metric_derivatives(b, p), &metric_from_block(b, p), gamma)
}

/// Nonmetricity with the metric derivatives by central differences.
pub fn nonmetricity_fd<F>(metric: &F, gamma: &ComponentArray, p: &Point) -> Result<ComponentArray>
where
    F: Fn(&Point) -> Result<ComponentArray> + ?Sized,
{
    let dg = fd::gradient(metric, p, fd::STEP)?;
    Ok(nonmetricity_of(&dg, &metric(p)?, gamma))
}

/// `K_{mu nu rho} = 1/2 (T_{nu mu rho} + T_{rho mu nu} - T_{mu nu rho})` with
/// `T_{mu nu rho} = g_{mu s} T^s_{nu rho}`.
pub fn contortion_of(torsion: &ComponentArray, g: &ComponentArray) -> ComponentArray {
    let tl = torsion.lower(0, g);
    ComponentArray::from_fn(&DDD, |i| {
        let (mu, nu, rho) = (i[0], i[1], i[2]);
        0.5 * (tl.get(&[nu, mu, rho]) + tl.get(&[rho, mu, nu]) - tl.get(&[mu, nu, rho]))
    })
}

/// `L_{mu nu rho} = 1/2 (Q_{mu nu rho} - Q_{nu mu rho} - Q_{rho mu nu})`.
pub fn disformation_of(q: &ComponentArray) -> ComponentArray {
    ComponentArray::from_fn(&DDD, |i| {
        let (mu, nu, rho) = (i[0], i[1], i[2]);
        0.5 * (q.get(&[mu, nu, rho]) - q.get(&[nu, mu, rho]) - q.get(&[rho, mu, nu]))
    })
}
