use thiserror::Error;

use crate::expr::{EvalError, ParseError};

#[derive(Debug, Error)]
pub enum Error {
    #[error("{field}: {source}")]
    Parse { field: String, source: ParseError },

    #[error("{field}: {source}")]
    Eval { field: String, source: EvalError },

    #[error("invalid point: {0}")]
    InvalidPoint(String),

    #[error("singular metric: |det g| = {det:e}")]
    SingularMetric { det: f64 },

    #[error("degenerate tetrad: {0}")]
    DegenerateTetrad(String),

    #[error("singular coordinate map: Jacobian determinant {det:e}")]
    SingularJacobian { det: f64 },

    #[error("geometry is not stationary: |d/dt {field}| = {dt:e}")]
    NotStationary { field: String, dt: f64 },

    #[error("trajectory reached the polar axis at step {step} (theta = {theta})")]
    AxisCrossing { step: usize, theta: f64 },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("invalid geometry spec: {0}")]
    Spec(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn eval(field: impl Into<String>, source: EvalError) -> Self {
        Error::Eval {
            field: field.into(),
            source,
        }
    }
}
