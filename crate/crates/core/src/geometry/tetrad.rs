//! Tetrad and spin-connection representation of the geometry.

use nalgebra::Matrix4;

use super::components::{ComponentArray, IndexKind};
use super::connection::connection_from_jets;
use super::convert::c_from_s_jets;
use super::metric::SINGULAR_DET;
use super::params::{MetricJets, MetricParams, SJets, SpinParams};
use super::point::{Point, PH, R, T, TH};
use crate::error::{Error, Result};
use crate::fd;

/// Minkowski metric on frame indices.
pub const ETA: [f64; 4] = [-1.0, 1.0, 1.0, 1.0];

/// `theta^a_mu` of the representative tetrad at `p`.
pub fn tetrad_components(m: &MetricParams, p: &Point) -> Result<ComponentArray> {
    Ok(tetrad_from_jets(&m.jets(p.t, p.r)?, p))
}

pub fn tetrad_from_jets(m: &MetricJets, p: &Point) -> ComponentArray {
    let h = m.g.map(|g| 0.5 * g.v);
    let plus = (h[0] + h[1]).exp();
    let minus = (h[0] - h[1]).exp();
    let (s3, c3) = h[2].sin_cos();
    let e4 = h[3].exp();
    let mut th = ComponentArray::zeros(&[IndexKind::FrameUp, IndexKind::Down]);
    th.set(&[0, T], plus * c3);
    th.set(&[0, R], -minus * s3);
    th.set(&[1, T], plus * s3);
    th.set(&[1, R], minus * c3);
    th.set(&[2, TH], e4);
    th.set(&[3, PH], e4 * p.theta.sin());
    th
}

/// `eta_ab theta^a_mu theta^b_nu`.
pub fn frame_metric(tetrad: &ComponentArray) -> ComponentArray {
    ComponentArray::from_fn(&[IndexKind::Down, IndexKind::Down], |i| {
        (0..4)
            .map(|a| ETA[a] * tetrad.get(&[a, i[0]]) * tetrad.get(&[a, i[1]]))
            .sum()
    })
}

/// Inverse tetrad `e_a^mu`, stored with slots `(a, mu)`.
pub fn inverse_tetrad(tetrad: &ComponentArray) -> Result<ComponentArray> {
    let m = Matrix4::from_fn(|a, mu| tetrad.get(&[a, mu]));
    let det = m.determinant();
    if !det.is_finite() || det.abs() < SINGULAR_DET {
        return Err(Error::DegenerateTetrad(format!("det = {det:e}")));
    }
    let inv = m
        .try_inverse()
        .ok_or_else(|| Error::DegenerateTetrad(format!("det = {det:e}")))?;
    Ok(ComponentArray::from_fn(
        &[IndexKind::FrameDown, IndexKind::Up],
        |i| inv[(i[1], i[0])],
    ))
}

/// `omega^a_{b mu}` at `p`.
pub fn spin_connection_components(s: &SpinParams, p: &Point) -> Result<ComponentArray> {
    Ok(spin_connection_from_jets(&s.jets(p.t, p.r)?, p))
}

pub fn spin_connection_from_jets(sj: &SJets, p: &Point) -> ComponentArray {
    let s = |i: usize| sj.s(i).v;
    let (sn, cs) = p.theta.sin_cos();
    let mut w = ComponentArray::zeros(&[IndexKind::FrameUp, IndexKind::FrameDown, IndexKind::Down]);
    let mut put = |a: usize, b: usize, mu: usize, v: f64| w.set(&[a, b, mu], v);
    put(0, 0, T, s(1));
    put(0, 0, R, s(2));
    put(0, 1, T, s(3));
    put(0, 1, R, s(4));
    put(1, 0, T, s(5));
    put(1, 0, R, s(6));
    put(1, 1, T, s(7));
    put(1, 1, R, s(8));
    put(3, 2, PH, cs);
    put(2, 3, PH, -cs);
    put(0, 2, TH, s(9));
    put(0, 3, PH, s(9) * sn);
    put(1, 2, TH, s(10));
    put(1, 3, PH, s(10) * sn);
    put(2, 0, TH, s(11));
    put(3, 0, PH, s(11) * sn);
    put(2, 1, TH, s(12));
    put(3, 1, PH, s(12) * sn);
    put(2, 2, T, s(13));
    put(3, 3, T, s(13));
    put(2, 2, R, s(14));
    put(3, 3, R, s(14));
    put(3, 0, TH, s(15));
    put(2, 0, PH, -s(15) * sn);
    put(3, 1, TH, s(16));
    put(2, 1, PH, -s(16) * sn);
    put(3, 2, T, s(17));
    put(2, 3, T, -s(17));
    put(3, 2, R, s(18));
    put(2, 3, R, -s(18));
    put(0, 3, TH, s(19));
    put(0, 2, PH, -s(19) * sn);
    put(1, 3, TH, s(20));
    put(1, 2, PH, -s(20) * sn);
    w
}

/// `e_a^mu (d_rho theta^a_nu + omega^a_{b rho} theta^b_nu)` with the tetrad
/// derivative taken by central differences.
pub fn affine_connection_oracle(m: &MetricParams, s: &SpinParams, p: &Point) -> Result<ComponentArray> {
    let tetrad = |q: &Point| tetrad_components(m, q);
    let th = tetrad(p)?;
    let dth = fd::gradient(&tetrad, p, fd::STEP)?;
    let e = inverse_tetrad(&th)?;
    let w = spin_connection_components(s, p)?;
    Ok(ComponentArray::from_fn(
        &[IndexKind::Up, IndexKind::Down, IndexKind::Down],
        |i| {
            let (mu, nu, rho) = (i[0], i[1], i[2]);
            (0..4)
                .map(|a| {
                    let w_th: f64 = (0..4).map(|b| w.get(&[a, b, rho]) * th.get(&[b, nu])).sum();
                    e.get(&[a, mu]) * (dth[rho].get(&[a, nu]) + w_th)
                })
                .sum()
        },
    ))
}

/// `D_mu theta^a_nu = d_mu theta^a_nu + omega^a_{b mu} theta^b_nu -
/// Gamma^rho_{nu mu} theta^a_rho`, slots `(a, mu, nu)`, with the connection
/// from the closed-form `S -> C` relations.
pub fn tetrad_postulate_residual(m: &MetricParams, s: &SpinParams, p: &Point) -> Result<ComponentArray> {
    let tetrad = |q: &Point| tetrad_components(m, q);
    let th = tetrad(p)?;
    let dth = fd::gradient(&tetrad, p, fd::STEP)?;
    let mj = m.jets(p.t, p.r)?;
    let sj = s.jets(p.t, p.r)?;
    let w = spin_connection_from_jets(&sj, p);
    let gamma = connection_from_jets(&c_from_s_jets(&mj, &sj), p);
    Ok(ComponentArray::from_fn(
        &[IndexKind::FrameUp, IndexKind::Down, IndexKind::Down],
        |i| {
            let (a, mu, nu) = (i[0], i[1], i[2]);
            let w_th: f64 = (0..4).map(|b| w.get(&[a, b, mu]) * th.get(&[b, nu])).sum();
            let g_th: f64 = (0..4).map(|rho| gamma.get(&[rho, nu, mu]) * th.get(&[a, rho])).sum();
            dth[mu].get(&[a, nu]) + w_th - g_th
        },
    ))
}
