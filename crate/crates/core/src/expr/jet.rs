//! Second-order forward-mode jets.
//!
//! A [`Jet`] bundles the value of a scalar function of `N` variables with its
//! gradient and Hessian at one point. Arithmetic and the elementary functions
//! propagate all three exactly (product and chain rule at second order), so
//! composing jets never introduces truncation error.
//!
//! [`Jet2`] is the two-variable case used for every parameter function of
//! `(t, r)`; the four-variable [`Jet4`] is used for vector fields that depend on
//! all coordinates.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};

#[derive(Clone, Copy, PartialEq)]
pub struct Jet<const N: usize> {
    pub v: f64,
    pub d: [f64; N],
    pub dd: [[f64; N]; N],
}

/// Jet in `(t, r)`: index 0 is `t`, index 1 is `r`.
pub type Jet2 = Jet<2>;

/// Jet in `(t, r, theta, phi)`.
pub type Jet4 = Jet<4>;

impl<const N: usize> Jet<N> {
    pub const fn constant(v: f64) -> Self {
        Jet {
            v,
            d: [0.0; N],
            dd: [[0.0; N]; N],
        }
    }

    pub const fn zero() -> Self {
        Self::constant(0.0)
    }

    /// The independent variable with index `i`, evaluated at `v`.
    pub fn variable(i: usize, v: f64) -> Self {
        let mut j = Self::constant(v);
        j.d[i] = 1.0;
        j
    }

    /// Apply a scalar function given its value and first two derivatives at
    /// `self.v`.
    pub fn chain(&self, f0: f64, f1: f64, f2: f64) -> Self {
        let mut out = Self::constant(f0);
        for i in 0..N {
            out.d[i] = f1 * self.d[i];
            for k in 0..N {
                out.dd[i][k] = f2 * self.d[i] * self.d[k] + f1 * self.dd[i][k];
            }
        }
        out
    }

    pub fn scale(&self, s: f64) -> Self {
        let mut out = *self;
        out.v *= s;
        for i in 0..N {
            out.d[i] *= s;
            for k in 0..N {
                out.dd[i][k] *= s;
            }
        }
        out
    }

    /// Partial derivative along variable `i` as a new jet.
    ///
    /// The first derivatives of the result are the second derivatives of
    /// `self`; its second derivatives would need third-order information and
    /// are set to NaN so that any use of them is visible downstream.
    pub fn partial(&self, i: usize) -> Self {
        Jet {
            v: self.d[i],
            d: self.dd[i],
            dd: [[f64::NAN; N]; N],
        }
    }

    pub fn is_finite(&self) -> bool {
        self.v.is_finite()
            && self.d.iter().all(|x| x.is_finite())
            && self.dd.iter().flatten().all(|x| x.is_finite())
    }

    pub fn sin(&self) -> Self {
        let (s, c) = self.v.sin_cos();
        self.chain(s, c, -s)
    }

    pub fn cos(&self) -> Self {
        let (s, c) = self.v.sin_cos();
        self.chain(c, -s, -c)
    }

    /// Caller guarantees `cos(self.v) != 0`.
    pub fn tan(&self) -> Self {
        let t = self.v.tan();
        let sec2 = 1.0 + t * t;
        self.chain(t, sec2, 2.0 * t * sec2)
    }

    pub fn exp(&self) -> Self {
        let e = self.v.exp();
        self.chain(e, e, e)
    }

    /// Caller guarantees `self.v > 0`.
    /// Written out rather than via [`Jet::chain`]: `1/x^2` overflows long
    /// before `(d/x)^2` does.
    pub fn ln(&self) -> Self {
        let x = self.v;
        let mut out = Self::constant(x.ln());
        let g = self.d.map(|d| d / x);
        for i in 0..N {
            out.d[i] = g[i];
            for k in 0..N {
                out.dd[i][k] = self.dd[i][k] / x - g[i] * g[k];
            }
        }
        out
    }

    /// Caller guarantees `self.v > 0`.
    pub fn sqrt(&self) -> Self {
        let s = self.v.sqrt();
        self.chain(s, 0.5 / s, -0.25 / (s * self.v))
    }

    pub fn sinh(&self) -> Self {
        let (s, c) = (self.v.sinh(), self.v.cosh());
        self.chain(s, c, s)
    }

    pub fn cosh(&self) -> Self {
        let (s, c) = (self.v.sinh(), self.v.cosh());
        self.chain(c, s, c)
    }

    pub fn tanh(&self) -> Self {
        let t = self.v.tanh();
        let sech2 = 1.0 - t * t;
        self.chain(t, sech2, -2.0 * t * sech2)
    }

    /// Caller guarantees `self.v != 0`.
    pub fn recip(&self) -> Self {
        let x = self.v;
        self.chain(1.0 / x, -1.0 / (x * x), 2.0 / (x * x * x))
    }

    /// Integer power. Defined for every base when `n >= 0`; negative `n`
    /// requires a nonzero base.
    pub fn powi(&self, n: i32) -> Self {
        match n {
            0 => Self::constant(1.0),
            1 => *self,
            _ if n < 0 => self.recip().powi(-n),
            _ => {
                let x = self.v;
                let nf = f64::from(n);
                let xm2 = x.powi(n - 2);
                self.chain(xm2 * x * x, nf * xm2 * x, nf * (nf - 1.0) * xm2)
            }
        }
    }

    /// Real power `self^e` for a positive base.
    pub fn powf(&self, e: &Self) -> Self {
        (*e * self.ln()).exp()
    }

    pub fn square(&self) -> Self {
        *self * *self
    }
}

impl Jet2 {
    /// Independent variable `t` at `(t, _)`.
    pub fn t(t: f64) -> Self {
        Self::variable(0, t)
    }

    /// Independent variable `r` at `(_, r)`.
    pub fn r(r: f64) -> Self {
        Self::variable(1, r)
    }

    pub fn dt(&self) -> f64 {
        self.d[0]
    }
    pub fn dr(&self) -> f64 {
        self.d[1]
    }
    pub fn dtt(&self) -> f64 {
        self.dd[0][0]
    }
    pub fn dtr(&self) -> f64 {
        self.dd[0][1]
    }
    pub fn drr(&self) -> f64 {
        self.dd[1][1]
    }

    /// `∂_t` as a jet (second-order slots NaN, see [`Jet::partial`]).
    pub fn d_t(&self) -> Self {
        self.partial(0)
    }

    /// `∂_r` as a jet (second-order slots NaN, see [`Jet::partial`]).
    pub fn d_r(&self) -> Self {
        self.partial(1)
    }
}

impl<const N: usize> Default for Jet<N> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<const N: usize> From<f64> for Jet<N> {
    fn from(v: f64) -> Self {
        Self::constant(v)
    }
}

impl<const N: usize> fmt::Debug for Jet<N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Jet")
            .field("v", &self.v)
            .field("d", &self.d)
            .field("dd", &self.dd)
            .finish()
    }
}

impl<const N: usize> Add for Jet<N> {
    type Output = Self;
    fn add(mut self, o: Self) -> Self {
        self.v += o.v;
        for i in 0..N {
            self.d[i] += o.d[i];
            for k in 0..N {
                self.dd[i][k] += o.dd[i][k];
            }
        }
        self
    }
}

impl<const N: usize> Sub for Jet<N> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self + (-o)
    }
}

impl<const N: usize> Neg for Jet<N> {
    type Output = Self;
    fn neg(self) -> Self {
        self.scale(-1.0)
    }
}

impl<const N: usize> Mul for Jet<N> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        let mut out = Self::constant(self.v * o.v);
        for i in 0..N {
            out.d[i] = self.d[i] * o.v + self.v * o.d[i];
            for k in 0..N {
                out.dd[i][k] = self.dd[i][k] * o.v
                    + self.d[i] * o.d[k]
                    + self.d[k] * o.d[i]
                    + self.v * o.dd[i][k];
            }
        }
        out
    }
}

/// Caller guarantees a nonzero divisor.
impl<const N: usize> Div for Jet<N> {
    type Output = Self;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, o: Self) -> Self {
        self * o.recip()
    }
}

impl<const N: usize> AddAssign for Jet<N> {
    fn add_assign(&mut self, o: Self) {
        *self = *self + o;
    }
}

impl<const N: usize> SubAssign for Jet<N> {
    fn sub_assign(&mut self, o: Self) {
        *self = *self - o;
    }
}

impl<const N: usize> Add<f64> for Jet<N> {
    type Output = Self;
    fn add(mut self, o: f64) -> Self {
        self.v += o;
        self
    }
}

impl<const N: usize> Sub<f64> for Jet<N> {
    type Output = Self;
    fn sub(mut self, o: f64) -> Self {
        self.v -= o;
        self
    }
}

impl<const N: usize> Mul<f64> for Jet<N> {
    type Output = Self;
    fn mul(self, o: f64) -> Self {
        self.scale(o)
    }
}

impl<const N: usize> Div<f64> for Jet<N> {
    type Output = Self;
    fn div(self, o: f64) -> Self {
        self.scale(1.0 / o)
    }
}

impl<const N: usize> Add<Jet<N>> for f64 {
    type Output = Jet<N>;
    fn add(self, o: Jet<N>) -> Jet<N> {
        o + self
    }
}

impl<const N: usize> Sub<Jet<N>> for f64 {
    type Output = Jet<N>;
    fn sub(self, o: Jet<N>) -> Jet<N> {
        -o + self
    }
}

impl<const N: usize> Mul<Jet<N>> for f64 {
    type Output = Jet<N>;
    fn mul(self, o: Jet<N>) -> Jet<N> {
        o.scale(self)
    }
}

impl<const N: usize> Div<Jet<N>> for f64 {
    type Output = Jet<N>;
    fn div(self, o: Jet<N>) -> Jet<N> {
        o.recip().scale(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_rule_second_order() {
        // f = t^2 r at (2, 3)
        let t = Jet2::t(2.0);
        let r = Jet2::r(3.0);
        let f = t * t * r;
        assert_eq!(f.v, 12.0);
        assert_eq!(f.dt(), 12.0);
        assert_eq!(f.dr(), 4.0);
        assert_eq!(f.dtt(), 6.0);
        assert_eq!(f.dtr(), 4.0);
        assert_eq!(f.drr(), 0.0);
    }

    #[test]
    fn powi_at_zero_base() {
        let x = Jet2::r(0.0);
        let p = x.powi(2);
        assert_eq!((p.v, p.dr(), p.drr()), (0.0, 0.0, 2.0));
        let p3 = x.powi(3);
        assert_eq!((p3.v, p3.dr(), p3.drr()), (0.0, 0.0, 0.0));
    }

    #[test]
    fn partial_marks_unknown_second_order() {
        let f = Jet2::t(1.5).sin() * Jet2::r(0.5);
        let ft = f.d_t();
        assert!((ft.v - 1.5f64.cos() * 0.5).abs() < 1e-15);
        assert!((ft.dr() - 1.5f64.cos()).abs() < 1e-15);
        assert!(ft.dtt().is_nan());
    }

    #[test]
    fn quotient_matches_closed_form() {
        // f = t / r, f_tr = -1/r^2, f_rr = 2t/r^3
        let f = Jet2::t(2.0) / Jet2::r(4.0);
        assert!((f.dtr() + 1.0 / 16.0).abs() < 1e-15);
        assert!((f.drr() - 4.0 / 64.0).abs() < 1e-15);
    }
}
