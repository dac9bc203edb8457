//! Parameter sets, conversions between them, and component assembly.

mod components;
mod connection;
mod convert;
mod metric;
mod params;
mod point;
mod spec;
mod tetrad;

pub use components::{json_number, ComponentArray, IndexKind};
pub use connection::{connection_components, connection_from_jets, connection_from_values};
pub use convert::{c_from_s, c_from_s_jets, c_from_tq, c_from_tq_jets, tq_from_c, tq_from_c_jets};
pub use metric::{inverse_metric, metric_components, metric_from_block, SINGULAR_DET};
pub use params::{
    CJets, ConnParamsC, MetricBlock, MetricJets, MetricParams, SJets, SpinParams, TQJets, TQParams,
};
pub use point::{Point, COORD_NAMES, PH, R, T, TH};
pub use spec::{ConnectionSpec, GeometrySpec};
pub use tetrad::{
    affine_connection_oracle, frame_metric, inverse_tetrad, spin_connection_components,
    spin_connection_from_jets, tetrad_components, tetrad_from_jets, tetrad_postulate_residual, ETA,
};

pub(crate) use params::eval_all;
