//! Brute-force unoriented solver by coordinate elimination, kept apart from
//! the invariant-based solver so that the two can check each other.

use nalgebra::{Matrix3, Vector3};

use crate::circle::{CircleCoeffs, Orientation, Point};
use crate::error::{Error, Result};
use crate::invariants::Triple;

const SIGNS: [[f64; 3]; 8] = [
    [1.0, 1.0, 1.0],
    [1.0, 1.0, -1.0],
    [1.0, -1.0, 1.0],
    [1.0, -1.0, -1.0],
    [-1.0, 1.0, 1.0],
    [-1.0, 1.0, -1.0],
    [-1.0, -1.0, 1.0],
    [-1.0, -1.0, -1.0],
];

/// Every circle tangent to the three inputs regardless of orientation,
/// returned counterclockwise. Inputs must be all circles or all lines.
pub fn oracle_nonoriented(t: &Triple) -> Result<Vec<CircleCoeffs>> {
    let found = if t.iter().all(|k| !k.is_line()) {
        circles_case(t)?
    } else if t.iter().all(|k| k.is_line()) {
        lines_case(t)
    } else {
        return Err(Error::UnsupportedMixed);
    };
    let mut out: Vec<CircleCoeffs> = Vec::new();
    for (c, r) in found {
        let k = CircleCoeffs::from_center_radius(c, r, Orientation::CounterClockwise)?;
        let scale = k.to_array().iter().fold(1.0_f64, |m, x| m.max(x.abs()));
        if !out.iter().any(|o| o.coeff_distance(&k, true) <= 1e-9 * scale) {
            out.push(k);
        }
    }
    Ok(out)
}

/// `(x - f_i)^2 + (y - g_i)^2 = (r + s_i r_i)^2`: differences of the three
/// equations give `(x, y)` affine in `r`, the first one a quadratic in `r`.
fn circles_case(t: &Triple) -> Result<Vec<(Point, f64)>> {
    let centre = t.map(|k| k.center().expect("circle"));
    let radius = t.map(|k| k.radius().expect("circle"));
    let (f, g) = (centre.map(|p| p.x), centre.map(|p| p.y));
    let m = [[f[1] - f[0], g[1] - g[0]], [f[2] - f[0], g[2] - g[0]]];
    let det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
    let span = (1..3).map(|i| centre[i].distance(&centre[0])).fold(0.0, f64::max);
    if det.abs() <= 1e-12 * span * span {
        return Err(Error::CollinearCenters);
    }
    let mut out = Vec::new();
    for s in SIGNS {
        // -2 (m . (x, y)) + h = 2 r (s_i r_i - s_1 r_1) + r_i^2 - r_1^2, i = 2, 3
        let mut c0 = [0.0; 2];
        let mut c1 = [0.0; 2];
        for i in 1..3 {
            let h = f[i] * f[i] + g[i] * g[i] - f[0] * f[0] - g[0] * g[0];
            c0[i - 1] = (h - radius[i] * radius[i] + radius[0] * radius[0]) / 2.0;
            c1[i - 1] = -(s[i] * radius[i] - s[0] * radius[0]);
        }
        // m (x, y) = c0 + c1 r
        let solve = |v: [f64; 2]| {
            (
                (v[0] * m[1][1] - v[1] * m[0][1]) / det,
                (m[0][0] * v[1] - m[1][0] * v[0]) / det,
            )
        };
        let (x0, y0) = solve(c0);
        let (x1, y1) = solve(c1);
        let (px, py) = (x0 - f[0], y0 - g[0]);
        let qa = x1 * x1 + y1 * y1 - 1.0;
        let qb = 2.0 * (px * x1 + py * y1 - s[0] * radius[0]);
        let qc = px * px + py * py - radius[0] * radius[0];
        for r in quadratic(qa, qb, qc) {
            if r > 1e-12 {
                out.push((Point::new(x0 + x1 * r, y0 + y1 * r), r));
            }
        }
    }
    Ok(out)
}

fn quadratic(a: f64, b: f64, c: f64) -> Vec<f64> {
    let scale = a.abs().max(b.abs()).max(c.abs());
    if a.abs() <= 1e-14 * scale {
        return if b == 0.0 { vec![] } else { vec![-c / b] };
    }
    let disc = b * b - 4.0 * a * c;
    let disc = if disc < 0.0 && disc > -1e-12 * (b * b + (4.0 * a * c).abs()) { 0.0 } else { disc };
    if disc < 0.0 {
        return vec![];
    }
    let q = -0.5 * (b + b.signum() * disc.sqrt());
    if q == 0.0 {
        return vec![0.0];
    }
    vec![q / a, c / q]
}

/// Signed distance `n_i . (p - p_i) = s_i r` to every line: linear in
/// `(x, y, r)`.
fn lines_case(t: &Triple) -> Vec<(Point, f64)> {
    let mut out = Vec::new();
    for s in SIGNS {
        let mut m = Matrix3::zeros();
        let mut rhs = Vector3::zeros();
        for (i, k) in t.iter().enumerate() {
            // a line reads 2 b x + 2 c y + d = 0 with b^2 + c^2 = 1
            m[(i, 0)] = k.b();
            m[(i, 1)] = k.c();
            m[(i, 2)] = -s[i];
            rhs[i] = -k.d() / 2.0;
        }
        if let Some(sol) = m.lu().solve(&rhs) {
            if sol.iter().all(|x| x.is_finite()) && sol[2] > 1e-12 {
                out.push((Point::new(sol[0], sol[1]), sol[2]));
            }
        }
    }
    out
}
