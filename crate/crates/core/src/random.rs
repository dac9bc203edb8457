//! Seeded generators of random parameter functions.
//!
//! Property tests and cross-checks draw geometries from here so that every
//! run sees the same functions for a given seed.

use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub use rand::SeedableRng;

pub type TestRng = ChaCha8Rng;

pub fn rng(seed: u64) -> TestRng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn coeff(rng: &mut impl Rng, scale: f64) -> String {
    let v: f64 = rng.gen_range(-scale..scale);
    format!("{v:.4}")
}

/// A smooth function of `(t, r)` of order `scale`, regular for `r > 0`.
pub fn smooth_tr(rng: &mut impl Rng, scale: f64) -> String {
    let terms = rng.gen_range(2..=4);
    let mut parts = vec![coeff(rng, scale)];
    for _ in 0..terms {
        let c = coeff(rng, scale);
        let a = coeff(rng, 1.0);
        let b = coeff(rng, 1.0);
        let term = match rng.gen_range(0..8) {
            0 => format!("{c}*t"),
            1 => format!("{c}*r"),
            2 => format!("{c}*t*r"),
            3 => format!("{c}*sin({a}*t + {b}*r)"),
            4 => format!("{c}*cos({a}*t - {b}*r)"),
            5 => format!("{c}*exp({a}*t)"),
            6 => format!("{c}*log(r)"),
            _ => format!("{c}/r"),
        };
        parts.push(term);
    }
    parts.join(" + ")
}

/// A smooth function of `t` alone.
pub fn smooth_t(rng: &mut impl Rng, scale: f64) -> String {
    let c0 = coeff(rng, scale);
    let c1 = coeff(rng, scale);
    let c2 = coeff(rng, scale);
    let a = coeff(rng, 1.0);
    format!("{c0} + {c1}*t + {c2}*sin({a}*t)")
}

/// `K` smooth functions of `(t, r)`.
pub fn smooth_set<const K: usize>(rng: &mut impl Rng, scale: f64) -> [String; K] {
    std::array::from_fn(|_| smooth_tr(rng, scale))
}

/// Metric functions `G1..G4` with `G4` close to `2 log r`, so that the
/// geometry resembles a perturbed flat space.
pub fn metric_functions(rng: &mut impl Rng) -> [String; 4] {
    let g = smooth_set::<4>(rng, 0.3);
    [
        g[0].clone(),
        g[1].clone(),
        g[2].clone(),
        format!("2*log(r) + {}", g[3]),
    ]
}

/// A random expression over the whole grammar, `depth` levels deep.
///
/// The result always parses; it need not be defined everywhere.
pub fn grammar_expr<R: Rng + ?Sized>(rng: &mut R, depth: u32) -> String {
    if depth == 0 {
        return match rng.gen_range(0..5) {
            0 => "t".into(),
            1 => "r".into(),
            2 => "pi".into(),
            3 => format!("{}", rng.gen_range(0..10)),
            _ => format!("{:.3}", rng.gen_range(0.0..5.0)),
        };
    }
    let sub = |rng: &mut R| grammar_expr(rng, depth - 1);
    match rng.gen_range(0..9) {
        0 => format!("({} + {})", sub(rng), sub(rng)),
        1 => format!("({} - {})", sub(rng), sub(rng)),
        2 => format!("({} * {})", sub(rng), sub(rng)),
        3 => format!("({} / {})", sub(rng), sub(rng)),
        4 => format!("({})^{}", sub(rng), rng.gen_range(0..4)),
        5 => format!("-{}", sub(rng)),
        6 => {
            const F: [&str; 9] = ["sin", "cos", "tan", "exp", "log", "sqrt", "sinh", "cosh", "tanh"];
            format!("{}({})", F[rng.gen_range(0..F.len())], sub(rng))
        }
        7 => format!("({})^({})", sub(rng), sub(rng)),
        _ => sub(rng),
    }
}
