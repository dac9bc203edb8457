//! Named parameter sets and their jets at a point `(t, r)`.
//!
//! Every parameter set keeps its functions as parsed expressions; evaluation
//! produces a fixed-size bundle of [`Jet2`] values. The bundles expose
//! one-based accessors (`c(15)` is `C15`) so that formulas read like the
//! component tables they transcribe.

use crate::error::{Error, Result};
use crate::expr::{parse, Expr, Jet2};

fn parse_all<const K: usize>(prefix: &str, src: [&str; K]) -> Result<[Expr; K]> {
    let mut out: [Expr; K] = std::array::from_fn(|_| Expr::zero());
    for (i, s) in src.iter().enumerate() {
        out[i] = parse(s).map_err(|source| Error::Parse {
            field: format!("{prefix}{}", i + 1),
            source,
        })?;
    }
    Ok(out)
}

pub(crate) fn eval_all<const K: usize>(
    prefix: &str,
    exprs: &[Expr; K],
    t: f64,
    r: f64,
) -> Result<[Jet2; K]> {
    let mut out = [Jet2::zero(); K];
    for (i, e) in exprs.iter().enumerate() {
        out[i] = e
            .eval_jet(t, r)
            .map_err(|err| Error::eval(format!("{prefix}{}", i + 1), err))?;
    }
    Ok(out)
}

/// `G1..G4` of the spherically symmetric metric.
#[derive(Clone, Debug, PartialEq)]
pub struct MetricParams {
    pub g: [Expr; 4],
}

impl MetricParams {
    pub fn new(g: [Expr; 4]) -> Self {
        MetricParams { g }
    }

    pub fn parse(src: [&str; 4]) -> Result<Self> {
        Ok(MetricParams {
            g: parse_all("G", src)?,
        })
    }

    /// Flat space in spherical coordinates.
    pub fn minkowski() -> Self {
        Self::parse(["0", "0", "0", "2*log(r)"]).expect("valid literal")
    }

    pub fn jets(&self, t: f64, r: f64) -> Result<MetricJets> {
        Ok(MetricJets {
            g: eval_all("G", &self.g, t, r)?,
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MetricJets {
    pub g: [Jet2; 4],
}

impl MetricJets {
    /// `G_i`, one-based.
    pub fn g(&self, i: usize) -> Jet2 {
        self.g[i - 1]
    }
}

/// The twenty connection functions `C1..C20`.
#[derive(Clone, Debug, PartialEq)]
pub struct ConnParamsC {
    pub c: [Expr; 20],
}

impl ConnParamsC {
    pub fn new(c: [Expr; 20]) -> Self {
        ConnParamsC { c }
    }

    pub fn parse(src: [&str; 20]) -> Result<Self> {
        Ok(ConnParamsC {
            c: parse_all("C", src)?,
        })
    }

    pub fn zero() -> Self {
        ConnParamsC {
            c: std::array::from_fn(|_| Expr::zero()),
        }
    }

    /// Parameter set with only the listed (one-based) entries set.
    pub fn with(entries: &[(usize, &str)]) -> Result<Self> {
        let mut src = ["0"; 20];
        for &(i, s) in entries {
            src[i - 1] = s;
        }
        Self::parse(src)
    }

    pub fn jets(&self, t: f64, r: f64) -> Result<CJets> {
        Ok(CJets(eval_all("C", &self.c, t, r)?))
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CJets(pub [Jet2; 20]);

impl CJets {
    /// `C_i`, one-based.
    pub fn c(&self, i: usize) -> Jet2 {
        self.0[i - 1]
    }

    pub fn values(&self) -> [f64; 20] {
        self.0.map(|j| j.v)
    }
}

/// Torsion functions `T1..T8` and nonmetricity functions `Q1..Q12`.
#[derive(Clone, Debug, PartialEq)]
pub struct TQParams {
    pub t: [Expr; 8],
    pub q: [Expr; 12],
}

impl TQParams {
    pub fn parse(t: [&str; 8], q: [&str; 12]) -> Result<Self> {
        Ok(TQParams {
            t: parse_all("T", t)?,
            q: parse_all("Q", q)?,
        })
    }

    pub fn zero() -> Self {
        TQParams {
            t: std::array::from_fn(|_| Expr::zero()),
            q: std::array::from_fn(|_| Expr::zero()),
        }
    }

    pub fn jets(&self, t: f64, r: f64) -> Result<TQJets> {
        Ok(TQJets {
            t: eval_all("T", &self.t, t, r)?,
            q: eval_all("Q", &self.q, t, r)?,
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TQJets {
    pub t: [Jet2; 8],
    pub q: [Jet2; 12],
}

impl TQJets {
    pub fn t(&self, i: usize) -> Jet2 {
        self.t[i - 1]
    }

    pub fn q(&self, i: usize) -> Jet2 {
        self.q[i - 1]
    }
}

/// Spin connection functions `S1..S20`.
#[derive(Clone, Debug, PartialEq)]
pub struct SpinParams {
    pub s: [Expr; 20],
}

impl SpinParams {
    pub fn parse(src: [&str; 20]) -> Result<Self> {
        Ok(SpinParams {
            s: parse_all("S", src)?,
        })
    }

    pub fn zero() -> Self {
        SpinParams {
            s: std::array::from_fn(|_| Expr::zero()),
        }
    }

    pub fn jets(&self, t: f64, r: f64) -> Result<SJets> {
        Ok(SJets(eval_all("S", &self.s, t, r)?))
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SJets(pub [Jet2; 20]);

impl SJets {
    pub fn s(&self, i: usize) -> Jet2 {
        self.0[i - 1]
    }
}

/// The four independent metric components as jets in `(t, r)`.
///
/// This is the common currency of every metric source (the `G`
/// parametrization, the flat-compatible family, Robertson-Walker).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MetricBlock {
    pub tt: Jet2,
    pub tr: Jet2,
    pub rr: Jet2,
    pub thth: Jet2,
}

impl MetricBlock {
    pub fn from_g(m: &MetricJets) -> Self {
        let e1 = m.g(1).exp();
        let e2 = m.g(2).exp();
        let (s3, c3) = (m.g(3).sin(), m.g(3).cos());
        MetricBlock {
            tt: -(e1 * e2 * c3),
            rr: e1 / e2 * c3,
            tr: e1 * s3,
            thth: m.g(4).exp(),
        }
    }

    /// Component `(i, j)` of the `(t, r)` block, `i, j` in `{0, 1}`.
    pub fn two(&self, i: usize, j: usize) -> Jet2 {
        match (i, j) {
            (0, 0) => self.tt,
            (1, 1) => self.rr,
            _ => self.tr,
        }
    }
}
