//! Cosmologically symmetric geometries: Robertson-Walker metric and the
//! five-function connection.

use crate::error::{Error, Result};
use crate::expr::{Expr, Jet2, Var};
use crate::geometry::{
    eval_all, metric_from_block, CJets, ComponentArray, GeometrySpec, IndexKind, MetricBlock,
    Point, PH, R, T, TH,
};
use crate::symmetry::{check_symmetry, Group, SymmetryVerdict};

/// Lapse `N(t)`, scale factor `A(t)`, connection functions `K1(t)..K5(t)`
/// and the sign `k` of the spatial curvature.
#[derive(Clone, Debug, PartialEq)]
pub struct CosmoParams {
    pub n: Expr,
    pub a: Expr,
    pub kf: [Expr; 5],
    pub k: i8,
}

impl CosmoParams {
    pub fn new(n: Expr, a: Expr, kf: [Expr; 5], k: i8) -> Result<Self> {
        if !(-1..=1).contains(&k) {
            return Err(Error::Spec(format!("k must be -1, 0 or 1, found {k}")));
        }
        let named = [("N".to_string(), &n), ("A".to_string(), &a)]
            .into_iter()
            .chain(kf.iter().enumerate().map(|(i, e)| (format!("K{}", i + 1), e)));
        for (name, e) in named {
            if [Var::R, Var::Theta, Var::Phi].iter().any(|&v| e.depends_on(v)) {
                return Err(Error::Spec(format!("{name} = `{e}` must depend on t only")));
            }
        }
        Ok(CosmoParams { n, a, kf, k })
    }

    pub fn parse(n: &str, a: &str, kf: [&str; 5], k: i8) -> Result<Self> {
        let p = |field: String, s: &str| {
            crate::expr::parse(s).map_err(|source| Error::Parse { field, source })
        };
        let mut ks: [Expr; 5] = std::array::from_fn(|_| Expr::zero());
        for (i, s) in kf.iter().enumerate() {
            ks[i] = p(format!("K{}", i + 1), s)?;
        }
        Self::new(p("N".into(), n)?, p("A".into(), a)?, ks, k)
    }

    /// `1 - k r^2`, which must be positive.
    fn one_minus_kr2(&self, r: f64) -> Result<Jet2> {
        let rj = Jet2::r(r);
        let w = 1.0 - rj * rj * f64::from(self.k);
        if w.v <= 0.0 {
            return Err(Error::Domain(format!(
                "1 - k r^2 = {} at r = {r} with k = {}",
                w.v, self.k
            )));
        }
        Ok(w)
    }

    pub fn metric_block(&self, t: f64, r: f64) -> Result<MetricBlock> {
        let w = self.one_minus_kr2(r)?;
        let ev = |name: &str, e: &Expr| e.eval_jet(t, r).map_err(|err| Error::eval(name, err));
        let (n, a) = (ev("N", &self.n)?, ev("A", &self.a)?);
        for (name, j) in [("N", n), ("A", a)] {
            if j.v.abs() <= 1e-12 {
                return Err(Error::Domain(format!("{name} vanishes at t = {t}")));
            }
        }
        let rj = Jet2::r(r);
        Ok(MetricBlock {
            tt: -(n * n),
            tr: Jet2::zero(),
            rr: a * a / w,
            thth: a * a * rj * rj,
        })
    }

    pub fn k_jets(&self, t: f64, r: f64) -> Result<[Jet2; 5]> {
        eval_all("K", &self.kf, t, r)
    }

    /// `C1..C20` of the cosmological connection.
    pub fn c_jets(&self, t: f64, r: f64) -> Result<CJets> {
        let w = self.one_minus_kr2(r)?;
        let chi = w.sqrt();
        let kk = self.k_jets(t, r)?;
        let kf = |i: usize| kk[i - 1];
        let rj = Jet2::r(r);
        let k = f64::from(self.k);
        let mut c = [Jet2::zero(); 20];
        let mut set = |i: usize, v: Jet2| c[i - 1] = v;
        set(1, kf(1));
        set(6, kf(3));
        set(11, kf(3));
        set(7, kf(4));
        set(13, kf(4));
        set(4, kf(2) / w);
        set(9, kf(2) * rj * rj);
        set(8, rj * k / w);
        set(20, kf(5) * rj * rj * chi);
        set(18, kf(5) / chi);
        set(16, -(kf(5) / chi));
        set(12, rj.recip());
        set(14, rj.recip());
        set(10, -(rj * w));
        Ok(CJets(c))
    }

    pub fn geometry(&self) -> GeometrySpec {
        GeometrySpec::cosmo(self.clone())
    }
}

/// Robertson-Walker metric at `p`.
pub fn cosmo_metric(cp: &CosmoParams, p: &Point) -> Result<ComponentArray> {
    Ok(metric_from_block(&cp.metric_block(p.t, p.r)?, p))
}

/// The cosmological connection at `p`, assembled entry by entry.
pub fn cosmo_connection(cp: &CosmoParams, p: &Point) -> Result<ComponentArray> {
    let w = cp.one_minus_kr2(p.r)?.v;
    let chi = w.sqrt();
    let kv = cp.k_jets(p.t, p.r)?.map(|j| j.v);
    let kf = |i: usize| kv[i - 1];
    let r = p.r;
    let k = f64::from(cp.k);
    let (s, co) = p.theta.sin_cos();
    let mut g = ComponentArray::zeros(&[IndexKind::Up, IndexKind::Down, IndexKind::Down]);
    let mut put = |mu: usize, nu: usize, rho: usize, v: f64| g.set(&[mu, nu, rho], v);

    put(T, T, T, kf(1));
    put(R, T, R, kf(3));
    put(TH, T, TH, kf(3));
    put(PH, T, PH, kf(3));
    put(R, R, T, kf(4));
    put(TH, TH, T, kf(4));
    put(PH, PH, T, kf(4));
    put(T, R, R, kf(2) / w);
    put(T, TH, TH, kf(2) * r * r);
    put(T, PH, PH, kf(2) * r * r * s * s);
    put(R, PH, TH, kf(5) * r * r * chi * s);
    put(R, TH, PH, -kf(5) * r * r * chi * s);
    put(TH, R, PH, kf(5) * s / chi);
    put(TH, PH, R, -kf(5) * s / chi);
    put(PH, R, TH, -kf(5) / (chi * s));
    put(PH, TH, R, kf(5) / (chi * s));
    put(R, R, R, k * r / w);
    put(TH, R, TH, 1.0 / r);
    put(TH, TH, R, 1.0 / r);
    put(PH, R, PH, 1.0 / r);
    put(PH, PH, R, 1.0 / r);
    put(PH, TH, PH, co / s);
    put(PH, PH, TH, co / s);
    put(TH, PH, PH, -s * co);
    put(R, TH, TH, r * (k * r * r - 1.0));
    put(R, PH, PH, r * (k * r * r - 1.0) * s * s);
    Ok(g)
}

/// Symmetry under rotations and the three generators of matching `k`;
/// with `reflection`, invariance under the equatorial reflection as well.
pub fn cosmo_symmetry_check(
    cp: &CosmoParams,
    sample: &[Point],
    tol: f64,
    reflection: bool,
) -> Result<SymmetryVerdict> {
    let group = if reflection {
        Group::CosmoO3(cp.k)
    } else {
        Group::Cosmo(cp.k)
    };
    check_symmetry(&cp.geometry(), group, sample, tol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn zero(k: i8) -> CosmoParams {
        CosmoParams::parse("1", "1", ["0"; 5], k).unwrap()
    }

    #[test]
    fn flat_minkowski() {
        let p = Point::new(0.0, 2.0, PI / 2.0, 0.0).unwrap();
        let g = cosmo_metric(&zero(0), &p).unwrap();
        let diag: Vec<f64> = (0..4).map(|i| g.get(&[i, i])).collect();
        assert_eq!(diag, vec![-1.0, 1.0, 4.0, 4.0]);
    }

    #[test]
    fn closed_radial_component() {
        let cp = CosmoParams::parse("1", "2", ["0"; 5], 1).unwrap();
        let p = Point::new(0.0, 0.5, 1.0, 0.0).unwrap();
        let g = cosmo_metric(&cp, &p).unwrap();
        assert!((g.get(&[R, R]) - 4.0 / 0.75).abs() < 1e-14);
    }

    #[test]
    fn closed_outside_domain() {
        let p = Point::new(0.0, 1.2, 1.0, 0.0).unwrap();
        assert!(matches!(cosmo_metric(&zero(1), &p), Err(Error::Domain(_))));
    }

    #[test]
    fn radius_dependence_rejected() {
        let e = CosmoParams::parse("1", "r", ["0"; 5], 0).unwrap_err();
        assert!(e.to_string().contains("A"), "{e}");
    }

    #[test]
    fn skeleton_example() {
        let p = Point::new(0.0, 2.0, PI / 4.0, 0.0).unwrap();
        let g = cosmo_connection(&zero(0), &p).unwrap();
        assert!((g.get(&[R, TH, TH]) + 2.0).abs() < 1e-14);
        assert!((g.get(&[R, PH, PH]) + 1.0).abs() < 1e-14);
        assert!((g.get(&[TH, R, TH]) - 0.5).abs() < 1e-14);
        assert!((g.get(&[PH, TH, PH]) - 1.0).abs() < 1e-14);
        assert!((g.get(&[TH, PH, PH]) + 0.5).abs() < 1e-14);
    }

    #[test]
    fn k5_entries() {
        let cp = CosmoParams::parse("1", "1", ["0", "0", "0", "0", "1"], 0).unwrap();
        let p = Point::new(0.0, 2.0, 0.6, 0.0).unwrap();
        let g = cosmo_connection(&cp, &p).unwrap();
        assert!((g.get(&[R, PH, TH]) - 4.0 * 0.6f64.sin()).abs() < 1e-14);
        assert!((g.get(&[TH, R, PH]) - 0.6f64.sin()).abs() < 1e-14);
    }
}
