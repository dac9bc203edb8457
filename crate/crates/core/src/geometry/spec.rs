//! A complete geometry: metric plus one connection representation.
//!
//! JSON form:
//!
//! ```json
//! {"metric": {"G1": "0", "G4": "2*log(r)"},
//!  "connection": {"kind": "C", "C12": "1/r", "C14": "1/r"}}
//! ```
//!
//! `kind` is one of `C`, `TQ`, `S`, `flat`, `cosmo`. Missing expression
//! fields default to `"0"`; unknown fields are rejected. The `cosmo` kind and
//! the `flat` kind with integration constants `g1`/`g2` carry their own metric
//! and must not have a `metric` block.

use serde_json::{Map, Value};

use super::components::ComponentArray;
use super::connection::connection_from_jets;
use super::convert::{c_from_s_jets, c_from_tq_jets, tq_from_c_jets};
use super::metric::metric_from_block;
use super::params::{
    CJets, ConnParamsC, MetricBlock, MetricJets, MetricParams, SpinParams, TQJets, TQParams,
};
use super::point::Point;
use super::tetrad::{spin_connection_from_jets, tetrad_from_jets};
use crate::cosmo::CosmoParams;
use crate::error::{Error, Result};
use crate::expr::{parse, Expr};
use crate::special::{FlatMetricConstants, FlatParams};

#[derive(Clone, Debug, PartialEq)]
pub enum ConnectionSpec {
    C(ConnParamsC),
    TQ(TQParams),
    S(SpinParams),
    Flat {
        f: FlatParams,
        constants: Option<FlatMetricConstants>,
    },
    Cosmo(CosmoParams),
}

impl ConnectionSpec {
    pub fn kind(&self) -> &'static str {
        match self {
            ConnectionSpec::C(_) => "C",
            ConnectionSpec::TQ(_) => "TQ",
            ConnectionSpec::S(_) => "S",
            ConnectionSpec::Flat { .. } => "flat",
            ConnectionSpec::Cosmo(_) => "cosmo",
        }
    }

    /// Whether the metric comes from the connection data itself.
    fn owns_metric(&self) -> bool {
        matches!(
            self,
            ConnectionSpec::Cosmo(_)
                | ConnectionSpec::Flat {
                    constants: Some(_),
                    ..
                }
        )
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct GeometrySpec {
    metric: Option<MetricParams>,
    connection: ConnectionSpec,
}

impl GeometrySpec {
    /// `metric` must be present exactly when the connection does not define
    /// its own metric.
    pub fn new(metric: Option<MetricParams>, connection: ConnectionSpec) -> Result<Self> {
        match (&metric, connection.owns_metric()) {
            (Some(_), true) => Err(Error::Spec(format!(
                "connection kind `{}` defines its own metric; remove the metric block",
                connection.kind()
            ))),
            (None, false) => Err(Error::Spec(format!(
                "connection kind `{}` needs a metric",
                connection.kind()
            ))),
            _ => {
                if let ConnectionSpec::Flat {
                    f,
                    constants: Some(_),
                } = &connection
                {
                    crate::special::check_f6_zero(f)?;
                }
                Ok(GeometrySpec { metric, connection })
            }
        }
    }

    pub fn c_form(m: MetricParams, c: ConnParamsC) -> Self {
        GeometrySpec {
            metric: Some(m),
            connection: ConnectionSpec::C(c),
        }
    }

    pub fn tq_form(m: MetricParams, tq: TQParams) -> Self {
        GeometrySpec {
            metric: Some(m),
            connection: ConnectionSpec::TQ(tq),
        }
    }

    pub fn s_form(m: MetricParams, s: SpinParams) -> Self {
        GeometrySpec {
            metric: Some(m),
            connection: ConnectionSpec::S(s),
        }
    }

    /// Weitzenboeck connection of `f` with an independent metric.
    pub fn flat(m: MetricParams, f: FlatParams) -> Self {
        GeometrySpec {
            metric: Some(m),
            connection: ConnectionSpec::Flat { f, constants: None },
        }
    }

    /// Weitzenboeck connection of `f` with the compatible metric family;
    /// requires `F6 = 0`.
    pub fn flat_compatible(f: FlatParams, k: FlatMetricConstants) -> Result<Self> {
        Self::new(
            None,
            ConnectionSpec::Flat {
                f,
                constants: Some(k),
            },
        )
    }

    pub fn cosmo(cp: CosmoParams) -> Self {
        GeometrySpec {
            metric: None,
            connection: ConnectionSpec::Cosmo(cp),
        }
    }

    pub fn metric_params(&self) -> Option<&MetricParams> {
        self.metric.as_ref()
    }

    pub fn connection_spec(&self) -> &ConnectionSpec {
        &self.connection
    }

    pub fn kind(&self) -> &'static str {
        self.connection.kind()
    }

    /// Jets of `G1..G4`; only available when the metric is given in that form.
    pub fn metric_jets(&self, t: f64, r: f64) -> Result<MetricJets> {
        match &self.metric {
            Some(m) => m.jets(t, r),
            None => Err(Error::Unsupported(format!(
                "the `{}` geometry has no G-parametrized metric",
                self.kind()
            ))),
        }
    }

    pub fn metric_block(&self, t: f64, r: f64) -> Result<MetricBlock> {
        match (&self.metric, &self.connection) {
            (Some(m), _) => Ok(MetricBlock::from_g(&m.jets(t, r)?)),
            (None, ConnectionSpec::Cosmo(cp)) => cp.metric_block(t, r),
            (
                None,
                ConnectionSpec::Flat {
                    f,
                    constants: Some(k),
                },
            ) => Ok(crate::special::flat_metric_block(&f.jets(t, r)?, k)),
            (None, _) => unreachable!("metric presence is validated on construction"),
        }
    }

    pub fn conn_jets(&self, t: f64, r: f64) -> Result<CJets> {
        match &self.connection {
            ConnectionSpec::C(c) => c.jets(t, r),
            ConnectionSpec::TQ(tq) => Ok(c_from_tq_jets(&self.metric_jets(t, r)?, &tq.jets(t, r)?)),
            ConnectionSpec::S(s) => Ok(c_from_s_jets(&self.metric_jets(t, r)?, &s.jets(t, r)?)),
            ConnectionSpec::Flat { f, .. } => Ok(crate::special::flat_c_jets(&f.jets(t, r)?)),
            ConnectionSpec::Cosmo(cp) => cp.c_jets(t, r),
        }
    }

    /// Torsion and nonmetricity functions; needs a G-parametrized metric.
    pub fn tq_jets(&self, t: f64, r: f64) -> Result<TQJets> {
        match &self.connection {
            ConnectionSpec::TQ(tq) => tq.jets(t, r),
            _ => Ok(tq_from_c_jets(&self.metric_jets(t, r)?, &self.conn_jets(t, r)?)),
        }
    }

    pub fn metric(&self, p: &Point) -> Result<ComponentArray> {
        Ok(metric_from_block(&self.metric_block(p.t, p.r)?, p))
    }

    pub fn connection(&self, p: &Point) -> Result<ComponentArray> {
        Ok(connection_from_jets(&self.conn_jets(p.t, p.r)?, p))
    }

    pub fn tetrad(&self, p: &Point) -> Result<ComponentArray> {
        Ok(tetrad_from_jets(&self.metric_jets(p.t, p.r)?, p))
    }

    pub fn spin_connection(&self, p: &Point) -> Result<Option<ComponentArray>> {
        match &self.connection {
            ConnectionSpec::S(s) => Ok(Some(spin_connection_from_jets(&s.jets(p.t, p.r)?, p))),
            _ => Ok(None),
        }
    }

    /// Every parameter expression with its field name.
    pub fn expressions(&self) -> Vec<(String, &Expr)> {
        fn push<'a>(out: &mut Vec<(String, &'a Expr)>, prefix: &str, exprs: &'a [Expr]) {
            for (i, e) in exprs.iter().enumerate() {
                out.push((format!("{prefix}{}", i + 1), e));
            }
        }
        let mut out = Vec::new();
        if let Some(m) = &self.metric {
            push(&mut out, "G", &m.g);
        }
        match &self.connection {
            ConnectionSpec::C(c) => push(&mut out, "C", &c.c),
            ConnectionSpec::TQ(tq) => {
                push(&mut out, "T", &tq.t);
                push(&mut out, "Q", &tq.q);
            }
            ConnectionSpec::S(s) => push(&mut out, "S", &s.s),
            ConnectionSpec::Flat { f, .. } => push(&mut out, "F", &f.f),
            ConnectionSpec::Cosmo(cp) => {
                out.push(("N".into(), &cp.n));
                out.push(("A".into(), &cp.a));
                for (i, e) in cp.kf.iter().enumerate() {
                    out.push((format!("K{}", i + 1), e));
                }
            }
        }
        out
    }

    pub fn from_json_str(src: &str) -> Result<Self> {
        let v: Value = serde_json::from_str(src)?;
        Self::from_json(&v)
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let top = as_object(v, "geometry spec")?;
        reject_unknown(top, &["metric", "connection"], "top level")?;
        let conn = top
            .get("connection")
            .ok_or_else(|| Error::Spec("missing `connection` block".into()))?;
        let conn = as_object(conn, "connection")?;
        let kind = conn
            .get("kind")
            .and_then(Value::as_str)
            .ok_or_else(|| Error::Spec("connection.kind must be a string".into()))?;

        let connection = match kind {
            "C" => {
                let names = numbered("C", 20);
                reject_unknown(conn, &with_kind(&names), "connection")?;
                ConnectionSpec::C(ConnParamsC::new(exprs(conn, "connection", "C")?))
            }
            "TQ" => {
                let mut names = numbered("T", 8);
                names.extend(numbered("Q", 12));
                reject_unknown(conn, &with_kind(&names), "connection")?;
                ConnectionSpec::TQ(TQParams {
                    t: exprs(conn, "connection", "T")?,
                    q: exprs(conn, "connection", "Q")?,
                })
            }
            "S" => {
                reject_unknown(conn, &with_kind(&numbered("S", 20)), "connection")?;
                ConnectionSpec::S(SpinParams {
                    s: exprs(conn, "connection", "S")?,
                })
            }
            "flat" => {
                let mut names = numbered("F", 6);
                names.extend(["g1".to_string(), "g2".to_string()]);
                reject_unknown(conn, &with_kind(&names), "connection")?;
                let f = FlatParams::new(exprs(conn, "connection", "F")?);
                let constants = match (conn.get("g1"), conn.get("g2")) {
                    (None, None) => None,
                    (Some(a), Some(b)) => Some(FlatMetricConstants {
                        g1: number(a, "connection.g1")?,
                        g2: number(b, "connection.g2")?,
                    }),
                    _ => {
                        return Err(Error::Spec(
                            "connection.g1 and connection.g2 must be given together".into(),
                        ))
                    }
                };
                ConnectionSpec::Flat { f, constants }
            }
            "cosmo" => {
                let mut names = vec!["N".to_string(), "A".to_string(), "k".to_string()];
                names.extend(numbered("K", 5));
                reject_unknown(conn, &with_kind(&names), "connection")?;
                let k = match conn.get("k") {
                    None => 0,
                    Some(v) => match v.as_i64() {
                        Some(k @ -1..=1) => k as i8,
                        _ => {
                            return Err(Error::Spec(format!(
                                "connection.k must be -1, 0 or 1, found {v}"
                            )))
                        }
                    },
                };
                ConnectionSpec::Cosmo(CosmoParams::new(
                    field_expr(conn, "connection", "N")?,
                    field_expr(conn, "connection", "A")?,
                    exprs(conn, "connection", "K")?,
                    k,
                )?)
            }
            other => {
                return Err(Error::Spec(format!(
                    "unknown connection kind `{other}` (expected C, TQ, S, flat or cosmo)"
                )))
            }
        };

        let metric = match top.get("metric") {
            Some(m) => {
                let m = as_object(m, "metric")?;
                reject_unknown(m, &numbered("G", 4), "metric")?;
                Some(MetricParams::new(exprs(m, "metric", "G")?))
            }
            None if connection.owns_metric() => None,
            None => Some(MetricParams::new(std::array::from_fn(|_| Expr::zero()))),
        };
        GeometrySpec::new(metric, connection)
    }

    pub fn to_json(&self) -> Value {
        let mut top = Map::new();
        if let Some(m) = &self.metric {
            top.insert("metric".into(), Value::Object(expr_map("G", &m.g)));
        }
        let mut c = Map::new();
        c.insert("kind".into(), Value::String(self.kind().into()));
        match &self.connection {
            ConnectionSpec::C(p) => c.extend(expr_map("C", &p.c)),
            ConnectionSpec::TQ(p) => {
                c.extend(expr_map("T", &p.t));
                c.extend(expr_map("Q", &p.q));
            }
            ConnectionSpec::S(p) => c.extend(expr_map("S", &p.s)),
            ConnectionSpec::Flat { f, constants } => {
                c.extend(expr_map("F", &f.f));
                if let Some(k) = constants {
                    c.insert("g1".into(), k.g1.into());
                    c.insert("g2".into(), k.g2.into());
                }
            }
            ConnectionSpec::Cosmo(cp) => {
                c.insert("N".into(), Value::String(cp.n.to_string()));
                c.insert("A".into(), Value::String(cp.a.to_string()));
                c.extend(expr_map("K", &cp.kf));
                c.insert("k".into(), i64::from(cp.k).into());
            }
        }
        top.insert("connection".into(), Value::Object(c));
        Value::Object(top)
    }
}

fn as_object<'a>(v: &'a Value, what: &str) -> Result<&'a Map<String, Value>> {
    v.as_object()
        .ok_or_else(|| Error::Spec(format!("{what} must be a JSON object")))
}

fn numbered(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("{prefix}{i}")).collect()
}

fn with_kind(names: &[String]) -> Vec<String> {
    let mut v = names.to_vec();
    v.push("kind".into());
    v
}

fn reject_unknown<S: AsRef<str>>(obj: &Map<String, Value>, allowed: &[S], place: &str) -> Result<()> {
    for key in obj.keys() {
        if !allowed.iter().any(|a| a.as_ref() == key) {
            let list: Vec<&str> = allowed.iter().map(|a| a.as_ref()).collect();
            return Err(Error::Spec(format!(
                "unknown field `{key}` in {place} (expected one of: {})",
                list.join(", ")
            )));
        }
    }
    Ok(())
}

fn field_expr(obj: &Map<String, Value>, place: &str, name: &str) -> Result<Expr> {
    let field = format!("{place}.{name}");
    let src = match obj.get(name) {
        None => return Ok(Expr::zero()),
        Some(Value::String(s)) => s.clone(),
        Some(Value::Number(n)) => n.to_string(),
        Some(other) => {
            return Err(Error::Spec(format!(
                "{field} must be an expression string, found {other}"
            )))
        }
    };
    parse(&src).map_err(|source| Error::Parse { field, source })
}

fn exprs<const K: usize>(obj: &Map<String, Value>, place: &str, prefix: &str) -> Result<[Expr; K]> {
    let mut out: [Expr; K] = std::array::from_fn(|_| Expr::zero());
    for (i, slot) in out.iter_mut().enumerate() {
        *slot = field_expr(obj, place, &format!("{prefix}{}", i + 1))?;
    }
    Ok(out)
}

fn number(v: &Value, field: &str) -> Result<f64> {
    v.as_f64()
        .ok_or_else(|| Error::Spec(format!("{field} must be a number, found {v}")))
}

fn expr_map(prefix: &str, exprs: &[Expr]) -> Map<String, Value> {
    exprs
        .iter()
        .enumerate()
        .filter(|(_, e)| **e != Expr::zero())
        .map(|(i, e)| (format!("{prefix}{}", i + 1), Value::String(e.to_string())))
        .collect()
}
