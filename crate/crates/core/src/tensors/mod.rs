//! Torsion, nonmetricity, the connection decomposition and curvature.
//!
//! Every quantity has a closed form in the parameter functions and a
//! definitional recomputation from assembled components ([`oracle`]).

mod closed;
mod curvature;
pub mod oracle;

use std::fmt;
use std::str::FromStr;

pub use closed::{
    contortion, contortion_from_jets, decomposition_residual, disformation, disformation_from_jets,
    levi_civita, levi_civita_from_jets, nonmetricity, nonmetricity_from_jets, torsion,
    torsion_from_jets,
};
pub use curvature::{curvature_explicit, curvature_from_jets, curvature_generic};

use crate::error::{Error, Result};
use crate::geometry::{inverse_metric, ComponentArray, ConnectionSpec, GeometrySpec, IndexKind, Point};

/// A field that can be evaluated for any geometry.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Quantity {
    Metric,
    InverseMetric,
    Connection,
    Torsion,
    Nonmetricity,
    Contortion,
    Disformation,
    LeviCivita,
    Curvature,
    Tetrad,
    SpinConnection,
}

impl Quantity {
    pub const ALL: [Quantity; 11] = [
        Quantity::Metric,
        Quantity::InverseMetric,
        Quantity::Connection,
        Quantity::Torsion,
        Quantity::Nonmetricity,
        Quantity::Contortion,
        Quantity::Disformation,
        Quantity::LeviCivita,
        Quantity::Curvature,
        Quantity::Tetrad,
        Quantity::SpinConnection,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Quantity::Metric => "metric",
            Quantity::InverseMetric => "inverse_metric",
            Quantity::Connection => "connection",
            Quantity::Torsion => "torsion",
            Quantity::Nonmetricity => "nonmetricity",
            Quantity::Contortion => "contortion",
            Quantity::Disformation => "disformation",
            Quantity::LeviCivita => "levi_civita",
            Quantity::Curvature => "curvature",
            Quantity::Tetrad => "tetrad",
            Quantity::SpinConnection => "spin_connection",
        }
    }
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Quantity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Quantity::ALL
            .into_iter()
            .find(|q| q.name() == s)
            .ok_or_else(|| {
                let names: Vec<&str> = Quantity::ALL.iter().map(|q| q.name()).collect();
                Error::Spec(format!("unknown quantity `{s}` (expected one of: {})", names.join(", ")))
            })
    }
}

/// Evaluate `q` for `spec` at `p`.
///
/// Closed forms are used whenever the metric is `G`-parametrized; otherwise
/// the definitional forms with exact metric derivatives. `SpinConnection`
/// is only defined for the `S` parametrization.
pub fn compute(spec: &GeometrySpec, q: Quantity, p: &Point) -> Result<ComponentArray> {
    let (t, r) = (p.t, p.r);
    let g_form = spec.metric_params().is_some();
    match q {
        Quantity::Metric => spec.metric(p),
        Quantity::InverseMetric => inverse_metric(&spec.metric(p)?),
        Quantity::Connection => spec.connection(p),
        Quantity::Torsion => Ok(torsion_from_jets(&spec.conn_jets(t, r)?, p)),
        Quantity::Nonmetricity if g_form => Ok(nonmetricity_from_jets(
            &spec.metric_jets(t, r)?,
            &spec.conn_jets(t, r)?,
            p,
        )),
        Quantity::Nonmetricity => Ok(oracle::nonmetricity_exact(
            &spec.metric_block(t, r)?,
            &spec.connection(p)?,
            p,
        )),
        Quantity::Contortion if g_form => Ok(contortion_from_jets(
            &spec.metric_jets(t, r)?,
            &spec.tq_jets(t, r)?,
            p,
        )),
        Quantity::Contortion => Ok(oracle::contortion_of(
            &torsion_from_jets(&spec.conn_jets(t, r)?, p),
            &spec.metric(p)?,
        )),
        Quantity::Disformation if g_form => Ok(disformation_from_jets(&spec.tq_jets(t, r)?, p)),
        Quantity::Disformation => Ok(oracle::disformation_of(&compute(spec, Quantity::Nonmetricity, p)?)),
        Quantity::LeviCivita if g_form => {
            let mj = spec.metric_jets(t, r)?;
            inverse_metric(&spec.metric(p)?)?;
            Ok(levi_civita_from_jets(&mj, p))
        }
        Quantity::LeviCivita => {
            let b = spec.metric_block(t, r)?;
            inverse_metric(&spec.metric(p)?)?;
            Ok(oracle::christoffel_down(&b, p))
        }
        Quantity::Curvature => Ok(curvature_from_jets(&spec.conn_jets(t, r)?, p)),
        Quantity::Tetrad => spec.tetrad(p),
        Quantity::SpinConnection => match spec.connection_spec() {
            ConnectionSpec::S(_) => Ok(spec.spin_connection(p)?.expect("S parametrization")),
            _ => Err(Error::Unsupported(format!(
                "spin connection requested for a `{}` geometry",
                spec.kind()
            ))),
        },
    }
}

/// Evaluate `q` by its definition from the assembled metric and connection,
/// with metric and connection derivatives by central differences. Fields
/// without a separate definition fall back to [`compute`].
pub fn compute_oracle(spec: &GeometrySpec, q: Quantity, p: &Point) -> Result<ComponentArray> {
    let metric = |x: &Point| spec.metric(x);
    let gamma = || spec.connection(p);
    match q {
        Quantity::Torsion => Ok(oracle::torsion_of(&gamma()?)),
        Quantity::Nonmetricity => oracle::nonmetricity_fd(&metric, &gamma()?, p),
        Quantity::Contortion => Ok(oracle::contortion_of(&oracle::torsion_of(&gamma()?), &spec.metric(p)?)),
        Quantity::Disformation => Ok(oracle::disformation_of(&oracle::nonmetricity_fd(&metric, &gamma()?, p)?)),
        Quantity::LeviCivita => {
            let g = spec.metric(p)?;
            inverse_metric(&g)?;
            let dg = crate::fd::gradient(&metric, p, crate::fd::STEP)?;
            Ok(ComponentArray::from_fn(&[IndexKind::Down; 3], |i| {
                let (mu, nu, rho) = (i[0], i[1], i[2]);
                0.5 * (dg[nu].get(&[mu, rho]) + dg[rho].get(&[mu, nu]) - dg[mu].get(&[nu, rho]))
            }))
        }
        Quantity::Curvature => curvature_generic(&|x: &Point| spec.connection(x), p),
        _ => compute(spec, q, p),
    }
}
