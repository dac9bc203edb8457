//! Riemann tensor of the spherically symmetric connection.

use crate::error::Result;
use crate::fd;
use crate::geometry::{CJets, ComponentArray, ConnParamsC, IndexKind, Point, PH, R, T, TH};

const UDDD: [IndexKind; 4] = [IndexKind::Up, IndexKind::Down, IndexKind::Down, IndexKind::Down];

/// `R^rho_{sigma mu nu}` from the component table, derivatives of `C_i` from
/// their jets.
pub fn curvature_explicit(c: &ConnParamsC, p: &Point) -> Result<ComponentArray> {
    Ok(curvature_from_jets(&c.jets(p.t, p.r)?, p))
}

pub fn curvature_from_jets(cj: &CJets, p: &Point) -> ComponentArray {
    let c = |i: usize| cj.c(i).v;
    let ct = |i: usize| cj.c(i).dt();
    let cr = |i: usize| cj.c(i).dr();
    let s = p.theta.sin();
    let s2 = s * s;
    let mut out = ComponentArray::zeros(&UDDD);
    let mut put = |rho: usize, sigma: usize, mu: usize, nu: usize, v: f64| {
        out.set(&[rho, sigma, mu, nu], v);
        out.set(&[rho, sigma, nu, mu], -v);
    };

    // purely algebraic block
    put(T, T, TH, PH, 2.0 * (c(11) * c(19) - c(9) * c(15)) * s);
    put(T, R, TH, PH, 2.0 * (c(12) * c(19) - c(9) * c(16)) * s);
    put(R, T, TH, PH, 2.0 * (c(11) * c(20) - c(10) * c(15)) * s);
    put(R, R, TH, PH, 2.0 * (c(12) * c(20) - c(10) * c(16)) * s);
    let x = (c(9) * c(15) + c(10) * c(16) - c(11) * c(19) - c(12) * c(20)) * s;
    put(TH, TH, TH, PH, x);
    put(PH, PH, TH, PH, x);
    let y = 1.0 + c(9) * c(11) + c(10) * c(12) + c(15) * c(19) + c(16) * c(20);
    put(TH, PH, TH, PH, y * s2);
    put(PH, TH, TH, PH, -y);

    let z = ct(14) - cr(13);
    put(TH, TH, T, R, z);
    put(PH, PH, T, R, z);
    let w = -(ct(18) - cr(17)) * s;
    put(TH, PH, T, R, w);
    put(PH, TH, T, R, -w / s2);

    put(T, T, T, R, ct(2) - cr(1) + c(3) * c(6) - c(4) * c(5));
    put(T, R, T, R, ct(4) - cr(3) + c(4) * (c(1) - c(7)) - c(3) * (c(2) - c(8)));
    put(R, T, T, R, ct(6) - cr(5) + c(6) * (c(7) - c(1)) - c(5) * (c(8) - c(2)));
    put(R, R, T, R, ct(8) - cr(7) + c(4) * c(5) - c(3) * c(6));

    // mixed (t, r) and angular blocks; `d` is the derivative slot t or r
    for d in [T, R] {
        let dc = |i: usize| if d == T { ct(i) } else { cr(i) };
        let (ca, cb, cc, cd, cj2, ck) = if d == T {
            (c(1), c(3), c(5), c(7), c(13), c(17))
        } else {
            (c(2), c(4), c(6), c(8), c(14), c(18))
        };
        let a = dc(9) + cb * c(10) - ck * c(19) + c(9) * (ca - cj2);
        put(T, TH, d, TH, a);
        put(T, PH, d, PH, a * s2);
        let b = dc(10) + cc * c(9) - ck * c(20) + c(10) * (cd - cj2);
        put(R, TH, d, TH, b);
        put(R, PH, d, PH, b * s2);
        let e = dc(11) - cc * c(12) - c(15) * ck + c(11) * (cj2 - ca);
        put(TH, T, d, TH, e);
        put(PH, T, d, PH, e);
        let f = dc(12) - cb * c(11) - c(16) * ck + c(12) * (cj2 - cd);
        put(TH, R, d, TH, f);
        put(PH, R, d, PH, f);
        let g = -(dc(19) + c(9) * ck + cb * c(20) + c(19) * (ca - cj2)) * s;
        put(T, TH, d, PH, g);
        put(T, PH, d, TH, -g);
        let h = -(dc(20) + c(10) * ck + cc * c(19) + c(20) * (cd - cj2)) * s;
        put(R, TH, d, PH, h);
        put(R, PH, d, TH, -h);
        let m = -(dc(15) + c(11) * ck - cc * c(16) + c(15) * (cj2 - ca)) * s;
        put(TH, T, d, PH, m);
        put(PH, T, d, TH, -m / s2);
        let n = -(dc(16) + c(12) * ck - cb * c(15) + c(16) * (cj2 - cd)) * s;
        put(TH, R, d, PH, n);
        put(PH, R, d, TH, -n / s2);
    }
    out
}

/// `R^rho_{sigma mu nu} = d_mu G^rho_{sigma nu} - d_nu G^rho_{sigma mu} +
/// G^rho_{tau mu} G^tau_{sigma nu} - G^rho_{tau nu} G^tau_{sigma mu}` with
/// central differences for the derivatives.
pub fn curvature_generic<F>(gamma: &F, p: &Point) -> Result<ComponentArray>
where
    F: Fn(&Point) -> Result<ComponentArray> + ?Sized,
{
    let g = gamma(p)?;
    let dg = fd::gradient(gamma, p, fd::STEP)?;
    Ok(ComponentArray::from_fn(&UDDD, |i| {
        let (rho, sigma, mu, nu) = (i[0], i[1], i[2], i[3]);
        let quad: f64 = (0..4)
            .map(|tau| {
                g.get(&[rho, tau, mu]) * g.get(&[tau, sigma, nu])
                    - g.get(&[rho, tau, nu]) * g.get(&[tau, sigma, mu])
            })
            .sum();
        dg[mu].get(&[rho, sigma, nu]) - dg[nu].get(&[rho, sigma, mu]) + quad
    }))
}
