//! Evaluation points from `--point` and `--grid` arguments.

use metaffine::expr::{parse, Var};
use metaffine::geometry::{Point, COORD_NAMES};

fn number(src: &str) -> Result<f64, String> {
    let e = parse(src.trim()).map_err(|e| format!("`{src}`: {e}"))?;
    if e.depends_on(Var::T) || e.depends_on(Var::R) {
        return Err(format!("`{src}` must be a constant"));
    }
    e.eval_value(0.0, 1.0).map_err(|e| format!("`{src}`: {e}"))
}

/// `t,r,theta,phi`; each entry may be a constant expression such as `pi/2`.
pub fn parse_point(src: &str) -> Result<Point, String> {
    let parts: Vec<&str> = src.split(',').collect();
    if parts.len() != 4 {
        return Err(format!("point `{src}` must have four comma-separated coordinates"));
    }
    let mut x = [0.0; 4];
    for (slot, part) in x.iter_mut().zip(&parts) {
        *slot = number(part)?;
    }
    Point::new(x[0], x[1], x[2], x[3]).map_err(|e| format!("point `{src}`: {e}"))
}

/// Values of one axis: a constant or `lo:hi:n` with `n` evenly spaced
/// values including both ends.
fn axis_values(src: &str) -> Result<Vec<f64>, String> {
    let parts: Vec<&str> = src.split(':').collect();
    match parts.as_slice() {
        [v] => Ok(vec![number(v)?]),
        [lo, hi, n] => {
            let (lo, hi) = (number(lo)?, number(hi)?);
            let n: usize = n
                .trim()
                .parse()
                .map_err(|_| format!("`{n}` is not a point count"))?;
            match n {
                0 => Err(format!("axis `{src}` has no points")),
                1 => Ok(vec![lo]),
                _ => Ok((0..n).map(|i| lo + (hi - lo) * i as f64 / (n - 1) as f64).collect()),
            }
        }
        _ => Err(format!("axis `{src}` must be a value or lo:hi:n")),
    }
}

/// Points of a grid such as `t=0; r=1:10:4; theta=0.3:2.8:4; phi=0`, in
/// lexicographic order with `t` outermost. `t` and `phi` default to zero.
pub fn parse_grid(src: &str) -> Result<Vec<Point>, String> {
    let mut axes: [Option<Vec<f64>>; 4] = [None, None, None, None];
    for item in src.split(';').map(str::trim).filter(|s| !s.is_empty()) {
        let (name, range) = item
            .split_once('=')
            .ok_or_else(|| format!("grid entry `{item}` must look like name=range"))?;
        let name = name.trim();
        let i = COORD_NAMES
            .iter()
            .position(|c| *c == name)
            .ok_or_else(|| format!("unknown coordinate `{name}` in grid"))?;
        if axes[i].replace(axis_values(range)?).is_some() {
            return Err(format!("coordinate `{name}` given twice in grid"));
        }
    }
    for i in [0, 3] {
        axes[i].get_or_insert_with(|| vec![0.0]);
    }
    let axes: Vec<Vec<f64>> = axes
        .into_iter()
        .zip(COORD_NAMES)
        .map(|(a, name)| a.ok_or_else(|| format!("grid needs a range for `{name}`")))
        .collect::<Result<_, _>>()?;
    let mut out = Vec::new();
    for &t in &axes[0] {
        for &r in &axes[1] {
            for &th in &axes[2] {
                for &ph in &axes[3] {
                    out.push(Point::new(t, r, th, ph).map_err(|e| format!("grid point: {e}"))?);
                }
            }
        }
    }
    Ok(out)
}
