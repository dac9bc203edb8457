//! Central finite differences of point-evaluated component arrays.

use crate::error::Result;
use crate::geometry::{ComponentArray, Point};

/// Default step for every finite-difference oracle.
pub const STEP: f64 = 1e-5;

/// `d/dx^axis` of an array-valued field at `p` by a central difference.
pub fn partial<F>(f: &F, p: &Point, axis: usize, h: f64) -> Result<ComponentArray>
where
    F: Fn(&Point) -> Result<ComponentArray> + ?Sized,
{
    let plus = f(&p.shifted(axis, h))?;
    let minus = f(&p.shifted(axis, -h))?;
    Ok(plus.zip_with(&minus, |a, b| (a - b) / (2.0 * h)))
}

/// All four coordinate partials, indexed by axis.
pub fn gradient<F>(f: &F, p: &Point, h: f64) -> Result<[ComponentArray; 4]>
where
    F: Fn(&Point) -> Result<ComponentArray> + ?Sized,
{
    Ok([
        partial(f, p, 0, h)?,
        partial(f, p, 1, h)?,
        partial(f, p, 2, h)?,
        partial(f, p, 3, h)?,
    ])
}

/// Central difference of a scalar function.
pub fn scalar_partial(f: impl Fn(f64) -> f64, x: f64, h: f64) -> f64 {
    (f(x + h) - f(x - h)) / (2.0 * h)
}
