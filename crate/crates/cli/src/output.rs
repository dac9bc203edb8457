//! JSON and CSV rendering.
//!
//! Objects keep insertion order and floats use the shortest representation
//! that round-trips, so identical inputs give byte-identical output.

use metaffine::geometry::{json_number, ComponentArray, Point};
use serde_json::{json, Map, Value};

pub fn point_json(p: &Point) -> Value {
    json!({
        "t": json_number(p.t),
        "r": json_number(p.r),
        "theta": json_number(p.theta),
        "phi": json_number(p.phi),
    })
}

/// `{"max_abs": .., "components": {..}}`.
pub fn block(a: &ComponentArray) -> Value {
    json!({ "max_abs": json_number(a.max_abs()), "components": a.to_json() })
}

pub fn float(v: f64) -> String {
    // `Debug` gives the shortest round-trip form and keeps a trailing `.0`.
    if v.is_finite() {
        format!("{v:?}")
    } else {
        v.to_string()
    }
}

/// Minimal CSV quoting for fields that hold commas or quotes.
pub fn field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// Rows `point,t,r,theta,phi,field,component,value` for nonzero entries.
pub struct ComponentCsv {
    out: String,
}

impl ComponentCsv {
    pub fn new() -> Self {
        ComponentCsv {
            out: "point,t,r,theta,phi,field,component,value\n".into(),
        }
    }

    pub fn push(&mut self, index: usize, p: &Point, name: &str, a: &ComponentArray) {
        for idx in a.index_iter() {
            let v = a.get(&idx);
            if v != 0.0 {
                self.out.push_str(&format!(
                    "{index},{},{},{},{},{name},{},{}\n",
                    float(p.t),
                    float(p.r),
                    float(p.theta),
                    float(p.phi),
                    field(&a.label(&idx)),
                    float(v),
                ));
            }
        }
    }

    pub fn finish(self) -> String {
        self.out
    }
}

pub fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values always serialize");
    s.push('\n');
    s
}

pub fn object(entries: impl IntoIterator<Item = (String, Value)>) -> Value {
    Value::Object(entries.into_iter().collect::<Map<_, _>>())
}
