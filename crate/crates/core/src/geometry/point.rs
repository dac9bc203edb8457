use std::f64::consts::{PI, TAU};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Coordinate index of `t`.
pub const T: usize = 0;
/// Coordinate index of `r`.
pub const R: usize = 1;
/// Coordinate index of `theta`.
pub const TH: usize = 2;
/// Coordinate index of `phi`.
pub const PH: usize = 3;

pub const COORD_NAMES: [&str; 4] = ["t", "r", "theta", "phi"];

/// A spacetime point in spherical coordinates `(t, r, theta, phi)`.
///
/// [`Point::new`] enforces `r > 0` and `theta` strictly inside `(0, pi)`;
/// the axis is excluded because several connection components carry
/// `1/sin(theta)`. Points built with [`Point::from_coords`] are unchecked and
/// are used for finite-difference stencils.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Point {
    pub t: f64,
    pub r: f64,
    pub theta: f64,
    pub phi: f64,
}

impl Point {
    pub fn new(t: f64, r: f64, theta: f64, phi: f64) -> Result<Self> {
        if ![t, r, theta, phi].iter().all(|x| x.is_finite()) {
            return Err(Error::InvalidPoint("non-finite coordinate".into()));
        }
        if r <= 0.0 {
            return Err(Error::InvalidPoint(format!("r = {r} must be positive")));
        }
        if theta <= 0.0 || theta >= PI || theta.sin() == 0.0 {
            return Err(Error::InvalidPoint(format!(
                "theta = {theta} must lie strictly inside (0, pi)"
            )));
        }
        Ok(Point {
            t,
            r,
            theta,
            phi: phi.rem_euclid(TAU),
        })
    }

    pub fn from_coords(x: [f64; 4]) -> Self {
        Point {
            t: x[0],
            r: x[1],
            theta: x[2],
            phi: x[3],
        }
    }

    pub fn coords(&self) -> [f64; 4] {
        [self.t, self.r, self.theta, self.phi]
    }

    /// Unchecked shift of one coordinate.
    pub fn shifted(&self, axis: usize, h: f64) -> Self {
        let mut x = self.coords();
        x[axis] += h;
        Point::from_coords(x)
    }

    /// Image under the equatorial reflection `theta -> pi - theta`.
    pub fn reflected(&self) -> Self {
        Point {
            theta: PI - self.theta,
            ..*self
        }
    }
}
