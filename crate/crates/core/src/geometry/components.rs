use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use super::point::COORD_NAMES;

/// Position and kind of one tensor slot.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum IndexKind {
    /// Coordinate index, contravariant.
    Up,
    /// Coordinate index, covariant.
    Down,
    /// Lorentz (frame) index, contravariant.
    FrameUp,
    /// Lorentz (frame) index, covariant.
    FrameDown,
}

impl IndexKind {
    pub fn is_frame(self) -> bool {
        matches!(self, IndexKind::FrameUp | IndexKind::FrameDown)
    }
}

/// Dense array of the components of a rank-`k` object at one point.
///
/// Components are stored row-major with every index running over
/// `(t, r, theta, phi)` (or the frame labels `0..3`), so the array always
/// holds `4^rank` entries.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ComponentArray {
    variance: Vec<IndexKind>,
    data: Vec<f64>,
}

impl ComponentArray {
    pub fn zeros(variance: &[IndexKind]) -> Self {
        assert!(
            (1..=4).contains(&variance.len()),
            "rank must lie in 1..=4"
        );
        ComponentArray {
            variance: variance.to_vec(),
            data: vec![0.0; 4usize.pow(variance.len() as u32)],
        }
    }

    pub fn from_fn(variance: &[IndexKind], mut f: impl FnMut(&[usize]) -> f64) -> Self {
        let mut a = Self::zeros(variance);
        for (k, idx) in a.index_iter().enumerate() {
            a.data[k] = f(&idx);
        }
        a
    }

    pub fn rank(&self) -> usize {
        self.variance.len()
    }

    pub fn variance(&self) -> &[IndexKind] {
        &self.variance
    }

    pub fn data(&self) -> &[f64] {
        &self.data
    }

    pub fn data_mut(&mut self) -> &mut [f64] {
        &mut self.data
    }

    fn offset(&self, idx: &[usize]) -> usize {
        debug_assert_eq!(idx.len(), self.rank());
        idx.iter().fold(0, |acc, &i| {
            debug_assert!(i < 4);
            acc * 4 + i
        })
    }

    pub fn get(&self, idx: &[usize]) -> f64 {
        self.data[self.offset(idx)]
    }

    pub fn set(&mut self, idx: &[usize], v: f64) {
        let k = self.offset(idx);
        self.data[k] = v;
    }

    /// All multi-indices in storage order.
    pub fn index_iter(&self) -> impl Iterator<Item = Vec<usize>> {
        let rank = self.rank();
        (0..self.data.len()).map(move |mut k| {
            let mut idx = vec![0; rank];
            for slot in (0..rank).rev() {
                idx[slot] = k % 4;
                k /= 4;
            }
            idx
        })
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0, |m, x| m.max(x.abs()))
    }

    /// Largest absolute entrywise difference and where it occurs.
    pub fn max_abs_diff(&self, other: &Self) -> (f64, Vec<usize>) {
        assert_eq!(self.variance.len(), other.variance.len(), "rank mismatch");
        let mut best = (0.0, vec![0; self.rank()]);
        for (k, idx) in self.index_iter().enumerate() {
            let d = (self.data[k] - other.data[k]).abs();
            if d > best.0 || d.is_nan() {
                best = (d, idx);
            }
        }
        best
    }

    /// `max|self - reference| / (1 + max|reference|)`.
    pub fn scaled_diff(&self, reference: &Self) -> f64 {
        self.max_abs_diff(reference).0 / (1.0 + reference.max_abs())
    }

    pub fn map(&self, f: impl Fn(f64) -> f64) -> Self {
        ComponentArray {
            variance: self.variance.clone(),
            data: self.data.iter().map(|&x| f(x)).collect(),
        }
    }

    pub fn zip_with(&self, other: &Self, f: impl Fn(f64, f64) -> f64) -> Self {
        assert_eq!(self.rank(), other.rank(), "rank mismatch");
        ComponentArray {
            variance: self.variance.clone(),
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a - b)
    }

    pub fn add(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a + b)
    }

    /// Contract slot `slot` with the matrix `m` (`m[new][old]`), replacing its
    /// kind. Used to raise or lower a single index.
    pub fn transform_slot(&self, slot: usize, m: &ComponentArray, kind: IndexKind) -> Self {
        assert_eq!(m.rank(), 2);
        let mut variance = self.variance.clone();
        variance[slot] = kind;
        let mut out = ComponentArray::zeros(&variance);
        for (k, idx) in out.index_iter().enumerate().collect::<Vec<_>>() {
            let mut src = idx.clone();
            let mut acc = 0.0;
            for s in 0..4 {
                src[slot] = s;
                acc += m.get(&[idx[slot], s]) * self.get(&src);
            }
            out.data[k] = acc;
        }
        out
    }

    /// Lower coordinate slot `slot` with the metric `g`.
    pub fn lower(&self, slot: usize, g: &ComponentArray) -> Self {
        debug_assert_eq!(self.variance[slot], IndexKind::Up);
        self.transform_slot(slot, g, IndexKind::Down)
    }

    /// Raise coordinate slot `slot` with the inverse metric.
    pub fn raise(&self, slot: usize, ginv: &ComponentArray) -> Self {
        debug_assert_eq!(self.variance[slot], IndexKind::Down);
        self.transform_slot(slot, ginv, IndexKind::Up)
    }

    pub fn label(&self, idx: &[usize]) -> String {
        idx.iter()
            .zip(&self.variance)
            .map(|(&i, kind)| {
                if kind.is_frame() {
                    i.to_string()
                } else {
                    COORD_NAMES[i].to_string()
                }
            })
            .collect::<Vec<_>>()
            .join(",")
    }

    /// Nonzero entries keyed by labels like `"t,r,theta"`, in storage order.
    pub fn to_json(&self) -> Value {
        let mut map = Map::new();
        for (k, idx) in self.index_iter().enumerate() {
            let v = self.data[k];
            if v != 0.0 {
                map.insert(self.label(&idx), json_number(v));
            }
        }
        Value::Object(map)
    }
}

/// JSON number, or a string for values JSON cannot carry.
pub fn json_number(v: f64) -> Value {
    serde_json::Number::from_f64(v)
        .map(Value::Number)
        .unwrap_or_else(|| Value::String(v.to_string()))
}
