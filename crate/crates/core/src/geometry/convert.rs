//! Conversions between the `C`, `(T, Q)` and `S` parametrizations.
//!
//! All conversions run on jets: the result carries exact values and first
//! partials. Where a formula involves a derivative of a metric function
//! (`G1,t` and friends) the second partials of the output are unknown and
//! marked NaN.

use super::params::{CJets, ConnParamsC, MetricBlock, MetricJets, MetricParams, SJets, SpinParams, TQJets, TQParams};
use crate::error::Result;
use crate::expr::Jet2;

/// First partials of the metric functions, as jets.
struct GDerivs {
    t: [Jet2; 4],
    r: [Jet2; 4],
}

impl GDerivs {
    fn new(m: &MetricJets) -> Self {
        GDerivs {
            t: m.g.map(|g| g.d_t()),
            r: m.g.map(|g| g.d_r()),
        }
    }
}

pub fn c_from_tq(m: &MetricParams, tq: &TQParams, t: f64, r: f64) -> Result<CJets> {
    Ok(c_from_tq_jets(&m.jets(t, r)?, &tq.jets(t, r)?))
}

/// `C1..C8`, the connection on the `(t, r)` block, as Levi-Civita plus
/// contortion plus disformation with every index in `{t, r}`. Only
/// `T1`, `T2` and `Q1, Q2, Q3, Q5, Q6, Q7` enter.
fn tr_block(m: &MetricJets, x: &TQJets) -> [Jet2; 8] {
    let b = MetricBlock::from_g(m);
    let g = |i: usize, j: usize| b.two(i, j);
    let dg = |k: usize, i: usize, j: usize| if k == 0 { g(i, j).d_t() } else { g(i, j).d_r() };
    let det = g(0, 0) * g(1, 1) - g(0, 1) * g(0, 1);
    let ginv = |i: usize, j: usize| match (i, j) {
        (0, 0) => g(1, 1) / det,
        (1, 1) => g(0, 0) / det,
        _ => -(g(0, 1) / det),
    };
    // T^a_{tr} = -T^a_{rt}; T^t_{tr} = T1, T^r_{tr} = T2.
    let tup = |a: usize, i: usize, j: usize| match (i, j) {
        (0, 1) => x.t(a + 1),
        (1, 0) => -x.t(a + 1),
        _ => Jet2::zero(),
    };
    let tdown = |a: usize, i: usize, j: usize| g(a, 0) * tup(0, i, j) + g(a, 1) * tup(1, i, j);
    let q = |a: usize, i: usize, j: usize| {
        let k = match (i, j) {
            (0, 0) => 0,
            (1, 1) => 1,
            _ => 2,
        };
        x.q([[1, 2, 3], [5, 6, 7]][a][k])
    };
    // All indices down, the first one being the raised index of Gamma.
    let down = |a: usize, n: usize, r: usize| {
        let lc = (dg(r, a, n) + dg(n, a, r) - dg(a, n, r)) * 0.5;
        let k = (tdown(n, a, r) + tdown(r, a, n) - tdown(a, n, r)) * 0.5;
        let l = (q(a, n, r) - q(n, a, r) - q(r, a, n)) * 0.5;
        lc + k + l
    };
    let up = |a: usize, n: usize, r: usize| ginv(a, 0) * down(0, n, r) + ginv(a, 1) * down(1, n, r);
    [
        up(0, 0, 0),
        up(0, 0, 1),
        up(0, 1, 0),
        up(0, 1, 1),
        up(1, 0, 0),
        up(1, 0, 1),
        up(1, 1, 0),
        up(1, 1, 1),
    ]
}

pub fn c_from_tq_jets(m: &MetricJets, x: &TQJets) -> CJets {
    let d = GDerivs::new(m);
    let (g4t, g4r) = (d.t[3], d.r[3]);
    let e1 = m.g(1).exp();
    let em1 = (-m.g(1)).exp();
    let e2 = m.g(2).exp();
    let em2 = (-m.g(2)).exp();
    let e4 = m.g(4).exp();
    let em4 = (-m.g(4)).exp();
    let (s3, c3) = (m.g(3).sin(), m.g(3).cos());
    let t = |i| x.t(i);
    let q = |i| x.q(i);

    let a = q(8) - q(10) * 2.0 + (t(6) * 2.0 - g4r) * e4;
    let b = q(4) - q(9) * 2.0 + (t(5) * 2.0 - g4t) * e4;
    let c9 = em1 * (a * s3 - b * em2 * c3) * 0.5;
    let c10 = em1 * (b * s3 + a * e2 * c3) * 0.5;
    let c15 = -(em4 * (q(11) * 2.0 + e1 * (t(4) * s3 - t(3) * e2 * c3)) * 0.5);
    let c16 = -(em4 * (q(12) * 2.0 + e1 * (t(3) * s3 + t(4) * em2 * c3)) * 0.5);
    let c13 = (g4t - em4 * q(4)) * 0.5;
    let c14 = (g4r - em4 * q(8)) * 0.5;

    let [c1, c2, c3, c4, c5, c6, c7, c8] = tr_block(m, x);
    CJets([
        c1,
        c2,
        c3,
        c4,
        c5,
        c6,
        c7,
        c8,
        c9,
        c10,
        c13 - t(5),
        c14 - t(6),
        c13,
        c14,
        c15,
        c16,
        c15 - t(7),
        c16 - t(8),
        t(3) * 0.5,
        t(4) * 0.5,
    ])
}

pub fn tq_from_c(m: &MetricParams, c: &ConnParamsC, t: f64, r: f64) -> Result<TQJets> {
    Ok(tq_from_c_jets(&m.jets(t, r)?, &c.jets(t, r)?))
}

pub fn tq_from_c_jets(m: &MetricJets, cj: &CJets) -> TQJets {
    let d = GDerivs::new(m);
    let (g1t, g2t, g3t, g4t) = (d.t[0], d.t[1], d.t[2], d.t[3]);
    let (g1r, g2r, g3r, g4r) = (d.r[0], d.r[1], d.r[2], d.r[3]);
    let e1 = m.g(1).exp();
    let e2 = m.g(2).exp();
    let em2 = (-m.g(2)).exp();
    let e4 = m.g(4).exp();
    let (s3, c3) = (m.g(3).sin(), m.g(3).cos());
    let c = |i| cj.c(i);

    let t = [
        c(3) - c(2),
        c(7) - c(6),
        c(19) * 2.0,
        c(20) * 2.0,
        c(13) - c(11),
        c(14) - c(12),
        c(15) - c(17),
        c(16) - c(18),
    ];

    let q_ttt = -(e1 * ((c(5) * 2.0 - e2 * g3t) * s3 - (c(1) * 2.0 - g1t - g2t) * e2 * c3));
    let q_rtt = -(e1 * ((c(6) * 2.0 - e2 * g3r) * s3 - (c(2) * 2.0 - g1r - g2r) * e2 * c3));
    let q_trr = -(e1 * ((c(3) * 2.0 + em2 * g3t) * s3 + (c(7) * 2.0 - g1t + g2t) * em2 * c3));
    let q_rrr = -(e1 * ((c(4) * 2.0 + em2 * g3r) * s3 + (c(8) * 2.0 - g1r + g2r) * em2 * c3));
    let q_ttr = -(e1 * ((c(1) + c(7) - g1t) * s3 - (c(3) * e2 - c(5) * em2 + g3t) * c3));
    let q_rtr = -(e1 * ((c(2) + c(8) - g1r) * s3 - (c(4) * e2 - c(6) * em2 + g3r) * c3));
    let q_tthth = e4 * (g4t - c(13) * 2.0);
    let q_rthth = e4 * (g4r - c(14) * 2.0);
    let q_thtth = -(c(11) * e4) - (c(10) * s3 - c(9) * e2 * c3) * e1;
    let q_thrth = -(c(12) * e4) - (c(9) * s3 + c(10) * em2 * c3) * e1;
    // Q_{theta t phi} = -Q_{phi t theta}; the table lists the latter.
    let q11 = -(c(15) * e4 + (c(20) * s3 - c(19) * e2 * c3) * e1);
    let q12 = -(c(16) * e4 + (c(19) * s3 + c(20) * em2 * c3) * e1);

    TQJets {
        t,
        q: [
            q_ttt, q_trr, q_ttr, q_tthth, q_rtt, q_rrr, q_rtr, q_rthth, q_thtth, q_thrth, q11, q12,
        ],
    }
}

pub fn c_from_s(m: &MetricParams, s: &SpinParams, t: f64, r: f64) -> Result<CJets> {
    Ok(c_from_s_jets(&m.jets(t, r)?, &s.jets(t, r)?))
}

/// Connection functions induced by the tetrad and the spin connection
/// `S1..S20`. The tetrad uses half the metric functions, `G~ = G/2`.
pub fn c_from_s_jets(m: &MetricJets, sj: &SJets) -> CJets {
    let h = m.g.map(|g| g * 0.5);
    let d = GDerivs::new(&MetricJets { g: h });
    let (h1t, h2t, h3t, h4t) = (d.t[0], d.t[1], d.t[2], d.t[3]);
    let (h1r, h2r, h3r, h4r) = (d.r[0], d.r[1], d.r[2], d.r[3]);
    let (sn, cs) = (h[2].sin(), h[2].cos());
    let (sn2, cs2) = (sn * sn, cs * cs);
    let sin2 = (h[2] * 2.0).sin();
    let s = |i| sj.s(i);
    let x = |a: f64, b: f64, c: f64| (h[0] * a + h[1] * b + h[3] * c).exp();

    let c1 = s(1) * cs2 + (s(3) + s(5)) * sin2 * 0.5 + s(7) * sn2 + h1t + h2t;
    let c2 = s(2) * cs2 + (s(4) + s(6)) * sin2 * 0.5 + s(8) * sn2 + h1r + h2r;
    let c3 = (s(3) * cs2 + (s(7) - s(1)) * sin2 * 0.5 - s(5) * sn2 - h3t) * x(0.0, -2.0, 0.0);
    let c4 = (s(4) * cs2 + (s(8) - s(2)) * sin2 * 0.5 - s(6) * sn2 - h3r) * x(0.0, -2.0, 0.0);
    let c5 = (s(5) * cs2 + (s(7) - s(1)) * sin2 * 0.5 - s(3) * sn2 + h3t) * x(0.0, 2.0, 0.0);
    let c6 = (s(6) * cs2 + (s(8) - s(2)) * sin2 * 0.5 - s(4) * sn2 + h3r) * x(0.0, 2.0, 0.0);
    let c7 = s(7) * cs2 - (s(3) + s(5)) * sin2 * 0.5 + s(1) * sn2 + h1t - h2t;
    let c8 = s(8) * cs2 - (s(4) + s(6)) * sin2 * 0.5 + s(2) * sn2 + h1r - h2r;
    let c9 = (s(10) * sn + s(9) * cs) * x(-1.0, -1.0, 1.0);
    let c10 = (s(10) * cs - s(9) * sn) * x(-1.0, 1.0, 1.0);
    let c11 = (s(11) * cs + s(12) * sn) * x(1.0, 1.0, -1.0);
    let c12 = (s(12) * cs - s(11) * sn) * x(1.0, -1.0, -1.0);
    let c13 = s(13) + h4t;
    let c14 = s(14) + h4r;
    let c15 = (s(15) * cs + s(16) * sn) * x(1.0, 1.0, -1.0);
    let c16 = (s(16) * cs - s(15) * sn) * x(1.0, -1.0, -1.0);
    let c19 = (s(20) * sn + s(19) * cs) * x(-1.0, -1.0, 1.0);
    let c20 = (s(20) * cs - s(19) * sn) * x(-1.0, 1.0, 1.0);

    CJets([
        c1, c2, c3, c4, c5, c6, c7, c8, c9, c10, c11, c12, c13, c14, c15, c16, s(17), s(18), c19, c20,
    ])
}
