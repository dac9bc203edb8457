use nalgebra::Matrix4;

use super::components::{ComponentArray, IndexKind};
use super::params::{MetricBlock, MetricParams};
use super::point::{Point, PH, R, T, TH};
use crate::error::{Error, Result};

/// Below this `|det g|` a metric is treated as singular.
pub const SINGULAR_DET: f64 = 1e-14;

/// `g_{mu nu}` of the spherically symmetric metric at `p`.
///
/// The `(t, r)` block has determinant `-exp(2 G1)` whatever `G3` is, so this
/// parametrization never degenerates off the axis.
pub fn metric_components(m: &MetricParams, p: &Point) -> Result<ComponentArray> {
    let jets = m.jets(p.t, p.r)?;
    Ok(metric_from_block(&MetricBlock::from_g(&jets), p))
}

pub fn metric_from_block(b: &MetricBlock, p: &Point) -> ComponentArray {
    let mut g = ComponentArray::zeros(&[IndexKind::Down, IndexKind::Down]);
    g.set(&[T, T], b.tt.v);
    g.set(&[R, R], b.rr.v);
    g.set(&[T, R], b.tr.v);
    g.set(&[R, T], b.tr.v);
    g.set(&[TH, TH], b.thth.v);
    g.set(&[PH, PH], b.thth.v * p.theta.sin().powi(2));
    g
}

fn to_matrix(a: &ComponentArray) -> Matrix4<f64> {
    Matrix4::from_fn(|i, j| a.get(&[i, j]))
}

/// Inverse of a rank-2 array with the opposite variance on both slots.
pub fn inverse_metric(g: &ComponentArray) -> Result<ComponentArray> {
    let m = to_matrix(g);
    let det = m.determinant();
    if !det.is_finite() || det.abs() < SINGULAR_DET {
        return Err(Error::SingularMetric { det });
    }
    let inv = m.try_inverse().ok_or(Error::SingularMetric { det })?;
    let flip = |k: IndexKind| match k {
        IndexKind::Down => IndexKind::Up,
        IndexKind::Up => IndexKind::Down,
        IndexKind::FrameUp => IndexKind::FrameDown,
        IndexKind::FrameDown => IndexKind::FrameUp,
    };
    let v = g.variance();
    Ok(ComponentArray::from_fn(&[flip(v[0]), flip(v[1])], |i| {
        inv[(i[0], i[1])]
    }))
}
