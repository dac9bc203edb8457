use super::components::{ComponentArray, IndexKind};
use super::params::{CJets, ConnParamsC};
use super::point::{Point, PH, R, T, TH};
use crate::error::Result;

/// `Gamma^mu_{nu rho}` at `p`; the last index is the derivative index.
pub fn connection_components(c: &ConnParamsC, p: &Point) -> Result<ComponentArray> {
    Ok(connection_from_values(&c.jets(p.t, p.r)?.values(), p))
}

pub fn connection_from_jets(c: &CJets, p: &Point) -> ComponentArray {
    connection_from_values(&c.values(), p)
}

/// Assemble the connection from the values of `C1..C20`.
pub fn connection_from_values(c: &[f64; 20], p: &Point) -> ComponentArray {
    let c = |i: usize| c[i - 1];
    let (s, co) = p.theta.sin_cos();
    let mut g = ComponentArray::zeros(&[IndexKind::Up, IndexKind::Down, IndexKind::Down]);
    let mut put = |mu: usize, nu: usize, rho: usize, v: f64| g.set(&[mu, nu, rho], v);

    put(T, T, T, c(1));
    put(T, T, R, c(2));
    put(T, R, T, c(3));
    put(T, R, R, c(4));
    put(T, TH, TH, c(9));
    put(T, PH, PH, c(9) * s * s);
    put(R, T, T, c(5));
    put(R, T, R, c(6));
    put(R, R, T, c(7));
    put(R, R, R, c(8));
    put(R, TH, TH, c(10));
    put(R, PH, PH, c(10) * s * s);

    put(PH, T, PH, c(11));
    put(TH, T, TH, c(11));
    put(PH, R, PH, c(12));
    put(TH, R, TH, c(12));
    put(PH, PH, T, c(13));
    put(TH, TH, T, c(13));
    put(PH, PH, R, c(14));
    put(TH, TH, R, c(14));

    put(PH, T, TH, c(15) / s);
    put(TH, T, PH, -c(15) * s);
    put(PH, R, TH, c(16) / s);
    put(TH, R, PH, -c(16) * s);
    put(PH, TH, T, c(17) / s);
    put(TH, PH, T, -c(17) * s);
    put(PH, TH, R, c(18) / s);
    put(TH, PH, R, -c(18) * s);

    put(T, PH, TH, c(19) * s);
    put(T, TH, PH, -c(19) * s);
    put(R, PH, TH, c(20) * s);
    put(R, TH, PH, -c(20) * s);

    put(PH, TH, PH, co / s);
    put(PH, PH, TH, co / s);
    put(TH, PH, PH, -s * co);
    g
}
