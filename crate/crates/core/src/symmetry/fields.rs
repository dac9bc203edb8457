//! Generating vector fields and Lie derivatives along them.

use std::fmt;

use crate::error::{Error, Result};
use crate::expr::{parse_with, Expr, Jet4, Variables};
use crate::fd;
use crate::geometry::{ComponentArray, Point};

/// A vector field on `(t, r, theta, phi)`.
#[derive(Clone, Debug, PartialEq)]
pub enum VectorField {
    /// Rotation generators.
    Xx,
    Xy,
    Xz,
    /// Generators of spatial homogeneity with curvature sign `k`.
    X1(i8),
    X2(i8),
    X3(i8),
    /// Components `X^t, X^r, X^theta, X^phi` as expressions in all four
    /// coordinates.
    Custom { name: String, components: Box<[Expr; 4]> },
}

impl VectorField {
    pub fn rotations() -> Vec<VectorField> {
        vec![VectorField::Xx, VectorField::Xy, VectorField::Xz]
    }

    pub fn translations(k: i8) -> Vec<VectorField> {
        vec![VectorField::X1(k), VectorField::X2(k), VectorField::X3(k)]
    }

    pub fn custom(name: &str, src: [&str; 4]) -> Result<Self> {
        let mut components: [Expr; 4] = std::array::from_fn(|_| Expr::zero());
        for (i, s) in src.iter().enumerate() {
            components[i] = parse_with(s, Variables::Spacetime).map_err(|source| Error::Parse {
                field: format!("{name}[{}]", crate::geometry::COORD_NAMES[i]),
                source,
            })?;
        }
        Ok(VectorField::Custom {
            name: name.to_string(),
            components: Box::new(components),
        })
    }

    pub fn name(&self) -> String {
        match self {
            VectorField::Xx => "X_x".into(),
            VectorField::Xy => "X_y".into(),
            VectorField::Xz => "X_z".into(),
            VectorField::X1(_) => "X_1".into(),
            VectorField::X2(_) => "X_2".into(),
            VectorField::X3(_) => "X_3".into(),
            VectorField::Custom { name, .. } => name.clone(),
        }
    }

    /// Components with exact first and second partials at `p`.
    pub fn jets(&self, p: &Point) -> Result<[Jet4; 4]> {
        let x = p.coords();
        let r = Jet4::variable(1, x[1]);
        let th = Jet4::variable(2, x[2]);
        let ph = Jet4::variable(3, x[3]);
        let zero = Jet4::zero();
        let chi = |k: i8| -> Result<Jet4> {
            let w = 1.0 - r * r * f64::from(k);
            if w.v <= 0.0 {
                return Err(Error::Domain(format!(
                    "1 - k r^2 = {} at r = {} with k = {k}",
                    w.v, x[1]
                )));
            }
            Ok(w.sqrt())
        };
        Ok(match self {
            VectorField::Xx => [zero, zero, ph.sin(), ph.cos() / th.tan()],
            VectorField::Xy => [zero, zero, -ph.cos(), ph.sin() / th.tan()],
            VectorField::Xz => [zero, zero, zero, Jet4::constant(-1.0)],
            VectorField::X1(k) => {
                let c = chi(*k)?;
                [
                    zero,
                    c * th.sin() * ph.cos(),
                    c / r * th.cos() * ph.cos(),
                    -(c * ph.sin() / (r * th.sin())),
                ]
            }
            VectorField::X2(k) => {
                let c = chi(*k)?;
                [
                    zero,
                    c * th.sin() * ph.sin(),
                    c / r * th.cos() * ph.sin(),
                    c * ph.cos() / (r * th.sin()),
                ]
            }
            VectorField::X3(k) => {
                let c = chi(*k)?;
                [zero, c * th.cos(), -(c / r * th.sin()), zero]
            }
            VectorField::Custom { name, components } => {
                let mut out = [zero; 4];
                for (i, e) in components.iter().enumerate() {
                    out[i] = e.eval_jet4(x).map_err(|err| {
                        Error::eval(format!("{name}[{}]", crate::geometry::COORD_NAMES[i]), err)
                    })?;
                }
                out
            }
        })
    }

    pub fn values(&self, p: &Point) -> Result<[f64; 4]> {
        Ok(self.jets(p)?.map(|j| j.v))
    }
}

impl fmt::Display for VectorField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// `[X, Y]^mu = X^nu d_nu Y^mu - Y^nu d_nu X^mu`, derivatives by central
/// differences of the component values.
pub fn lie_bracket_fd(x: &VectorField, y: &VectorField, p: &Point) -> Result<[f64; 4]> {
    let h = fd::STEP;
    let xv = x.values(p)?;
    let yv = y.values(p)?;
    let mut out = [0.0; 4];
    for nu in 0..4 {
        let (plus, minus) = (p.shifted(nu, h), p.shifted(nu, -h));
        let (yp, ym) = (y.values(&plus)?, y.values(&minus)?);
        let (xp, xm) = (x.values(&plus)?, x.values(&minus)?);
        for mu in 0..4 {
            let dy = (yp[mu] - ym[mu]) / (2.0 * h);
            let dx = (xp[mu] - xm[mu]) / (2.0 * h);
            out[mu] += xv[nu] * dy - yv[nu] * dx;
        }
    }
    Ok(out)
}

/// `(L_X g)_{mu nu}` given `g` and its coordinate gradient at the point.
pub fn lie_metric_at(g: &ComponentArray, dg: &[ComponentArray; 4], x: &[Jet4; 4]) -> ComponentArray {
    ComponentArray::from_fn(g.variance(), |i| {
        let (mu, nu) = (i[0], i[1]);
        (0..4)
            .map(|rho| {
                x[rho].v * dg[rho].get(&[mu, nu])
                    + x[rho].d[mu] * g.get(&[rho, nu])
                    + x[rho].d[nu] * g.get(&[mu, rho])
            })
            .sum()
    })
}

/// `(L_X Gamma)^mu_{nu rho}` given `Gamma` and its coordinate gradient.
pub fn lie_connection_at(gamma: &ComponentArray, dgamma: &[ComponentArray; 4], x: &[Jet4; 4]) -> ComponentArray {
    ComponentArray::from_fn(gamma.variance(), |i| {
        let (mu, nu, rho) = (i[0], i[1], i[2]);
        let mut acc = x[mu].dd[nu][rho];
        for s in 0..4 {
            acc += x[s].v * dgamma[s].get(&[mu, nu, rho]) - x[mu].d[s] * gamma.get(&[s, nu, rho])
                + x[s].d[nu] * gamma.get(&[mu, s, rho])
                + x[s].d[rho] * gamma.get(&[mu, nu, s]);
        }
        acc
    })
}

/// Lie derivative of a rank-2 covariant field; its derivatives by central
/// differences, those of `X` exact.
pub fn lie_metric<F>(g: &F, x: &VectorField, p: &Point) -> Result<ComponentArray>
where
    F: Fn(&Point) -> Result<ComponentArray> + ?Sized,
{
    let dg = fd::gradient(g, p, fd::STEP)?;
    Ok(lie_metric_at(&g(p)?, &dg, &x.jets(p)?))
}

/// Lie derivative of connection coefficients.
pub fn lie_connection<F>(gamma: &F, x: &VectorField, p: &Point) -> Result<ComponentArray>
where
    F: Fn(&Point) -> Result<ComponentArray> + ?Sized,
{
    let dg = fd::gradient(gamma, p, fd::STEP)?;
    Ok(lie_connection_at(&gamma(p)?, &dg, &x.jets(p)?))
}
