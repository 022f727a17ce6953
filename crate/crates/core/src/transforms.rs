//! Inversions, pencils, rigid frames and the family of circles tangent to
//! two given ones.

use std::f64::consts::FRAC_PI_2;

use crate::circle::{CircleCoeffs, Coincidence, CurvatureElement, Point};
use crate::error::{Error, Result};
use crate::invariants::q_value;
use crate::tolerance::{coeff_scale, Tolerances};

/// Image of `k` under inversion in `mirror` (reflection when the mirror is a
/// line). Inverting twice in the same mirror is the identity.
pub fn invert_in_circle(k: &CircleCoeffs, mirror: &CircleCoeffs) -> CircleCoeffs {
    let w = 2.0 * (1.0 - 2.0 * q_value(k, mirror));
    let m = mirror.to_array();
    let v = k.to_array();
    let out: [f64; 4] = std::array::from_fn(|n| w * m[n] - v[n]);
    // Inversion preserves the normalization; the rescale only removes rounding.
    CircleCoeffs::normalize(out[0], out[1], out[2], out[3]).unwrap_or_else(|_| CircleCoeffs::raw(out[0], out[1], out[2], out[3]))
}

/// Member `w1 N1 + w2 N2` of the pencil spanned by `k1`, `k2`, with
/// `w1 = 2(t + cos)/(t^2 + 2t cos + 1)` and `w2 = (t^2 - 1)/(t^2 + 2t cos + 1)`.
/// `t = 1` gives `k1`, `t = -1` its reverse.
pub fn pencil_member(k1: &CircleCoeffs, k2: &CircleCoeffs, t: f64, tol: &Tolerances) -> Result<CircleCoeffs> {
    if k1.coincidence(k2, tol) != Coincidence::Distinct {
        return Err(Error::CoincidentCircles);
    }
    let cos = 1.0 - 2.0 * q_value(k1, k2);
    let den = t * t + 2.0 * t * cos + 1.0;
    if tol.is_zero(den, 1.0 + t * t) {
        return Err(Error::SingularParameter(t));
    }
    let w1 = 2.0 * (t + cos) / den;
    let w2 = (t * t - 1.0) / den;
    debug_assert!((w1 * w1 + w2 * w2 + 2.0 * w1 * w2 * cos - 1.0).abs() <= 1e-8 * (1.0 + w1.abs() + w2.abs()).powi(2));
    let (p, q) = (k1.to_array(), k2.to_array());
    let v: [f64; 4] = std::array::from_fn(|n| w1 * p[n] + w2 * q[n]);
    let v0 = if k1.is_line() && k2.is_line() { 0.0 } else { v[0] };
    CircleCoeffs::normalize(v0, v[1], v[2], v[3])
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    /// World coordinates to frame coordinates.
    Forward,
    /// Frame coordinates back to world coordinates.
    Inverse,
}

/// Rigid motion placing the origin at `origin` with the abscissa along
/// `rotation`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FrameMap {
    pub origin: Point,
    pub rotation: f64,
}

impl FrameMap {
    pub const IDENTITY: FrameMap = FrameMap {
        origin: Point::new(0.0, 0.0),
        rotation: 0.0,
    };

    pub fn forward_point(&self, p: Point) -> Point {
        let (s, c) = self.rotation.sin_cos();
        let (dx, dy) = (p.x - self.origin.x, p.y - self.origin.y);
        Point::new(c * dx + s * dy, -s * dx + c * dy)
    }

    pub fn inverse_point(&self, p: Point) -> Point {
        let (s, c) = self.rotation.sin_cos();
        Point::new(self.origin.x + c * p.x - s * p.y, self.origin.y + s * p.x + c * p.y)
    }

    pub fn forward(&self, k: &CircleCoeffs) -> CircleCoeffs {
        apply_frame(k, self, Direction::Forward)
    }

    pub fn inverse(&self, k: &CircleCoeffs) -> CircleCoeffs {
        apply_frame(k, self, Direction::Inverse)
    }
}

/// Moves a generating curvature element of `k` through the frame and
/// rebuilds the coefficients.
pub fn apply_frame(k: &CircleCoeffs, frame: &FrameMap, direction: Direction) -> CircleCoeffs {
    let e = k.element();
    let (p, tau) = match direction {
        Direction::Forward => (frame.forward_point(Point::new(e.x, e.y)), e.tau - frame.rotation),
        Direction::Inverse => (frame.inverse_point(Point::new(e.x, e.y)), e.tau + frame.rotation),
    };
    let mapped = CircleCoeffs::from_element(&CurvatureElement::new(p.x, p.y, tau, e.k))
        .expect("rigid motion of a normalized circle is normalizable");
    if k.is_line() {
        CircleCoeffs::raw(0.0, mapped.b(), mapped.c(), mapped.d())
    } else {
        mapped
    }
}

/// A pair of circles in the frame where the first is centred at the origin
/// and the second crosses the positive abscissa direction at `x2` with
/// tangent angle `pi/2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CanonicalPair {
    pub a1: f64,
    pub a2: f64,
    pub x2: f64,
    /// `Q` of the pair.
    pub q: f64,
    pub frame: FrameMap,
    /// The inputs were exchanged because the first one was a line.
    pub swapped: bool,
    first: CircleCoeffs,
    second: CircleCoeffs,
}

impl CanonicalPair {
    /// `{0, -1/a1, 0, a1}` as coefficients.
    pub fn first_in_frame(&self) -> CircleCoeffs {
        CircleCoeffs::raw(self.a1, 0.0, 0.0, -1.0 / self.a1)
    }

    /// `{x2, 0, pi/2, a2}` as coefficients.
    pub fn second_in_frame(&self) -> CircleCoeffs {
        CircleCoeffs::from_element(&CurvatureElement::new(self.x2, 0.0, FRAC_PI_2, self.a2))
            .expect("element is always normalizable")
    }

    /// `Q` from the frame data alone.
    pub fn q_closed_form(&self) -> f64 {
        let (a1, a2, x2) = (self.a1, self.a2, self.x2);
        (a1 * x2 - 1.0) * (a1 * a2 * x2 + a2 - 2.0 * a1) / (4.0 * a1)
    }

    /// The (possibly swapped) inputs in world coordinates.
    pub fn circles(&self) -> (CircleCoeffs, CircleCoeffs) {
        (self.first, self.second)
    }
}

pub fn canonical_frame(k1: &CircleCoeffs, k2: &CircleCoeffs, tol: &Tolerances) -> Result<CanonicalPair> {
    let scale = coeff_scale(&[*k1, *k2]);
    let (first, second, swapped) = if !tol.is_zero(k1.a(), 1.0) {
        (*k1, *k2, false)
    } else if !tol.is_zero(k2.a(), 1.0) {
        (*k2, *k1, true)
    } else {
        return Err(Error::BothLines);
    };
    let a1 = first.a();
    let a2 = second.a();
    let (f1, g1) = (-first.b() / a1, -first.c() / a1);
    let (e2, l2) = second.element_nearest_origin();
    let lambda2 = e2.tau;
    let m1 = a2 * g1 - (a2 * l2 + 1.0) * lambda2.cos();
    let m2 = a2 * f1 + (a2 * l2 + 1.0) * lambda2.sin();
    let m0 = m1.hypot(m2);
    let rotation = if tol.is_zero(m0, scale) { 0.0 } else { m1.atan2(m2) };
    let x2 = (a2 * (f1 * f1 + g1 * g1 - l2 * l2) - 2.0 * (f1 * m2 + g1 * m1 + l2)) / (1.0 + m0);
    Ok(CanonicalPair {
        a1,
        a2,
        x2,
        q: q_value(&first, &second),
        frame: FrameMap {
            origin: Point::new(f1, g1),
            rotation,
        },
        swapped,
        first,
        second,
    })
}

/// How a [`TangentFamily`] is parametrized.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyParameter {
    /// Polar angle of the member's centre about the first circle's centre.
    Angle,
    /// Abscissa `l0` of the member's second crossing of the centre line,
    /// used when the two given circles are tangent.
    Offset,
}

/// Circles tangent to two given oriented circles.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TangentFamily {
    pub pair: CanonicalPair,
    /// For tangent inputs: `+1` when the contact lies at `(1/a1, 0)` in the
    /// frame, `-1` when it lies at `(-1/a1, 0)`.
    tangent_side: Option<f64>,
    tol: Tolerances,
}

impl TangentFamily {
    pub fn new(k1: &CircleCoeffs, k2: &CircleCoeffs, tol: &Tolerances) -> Result<Self> {
        if k1.coincidence(k2, tol) != Coincidence::Distinct {
            return Err(Error::CoincidentCircles);
        }
        let pair = canonical_frame(k1, k2, tol)?;
        let s = coeff_scale(&[*k1, *k2]);
        let tangent_side = tol.q_is_zero(pair.q, s * s).then(|| {
            let k2f = pair.second_in_frame();
            let r = 1.0 / pair.a1;
            let right = k2f.evaluate(Point::new(r, 0.0)).abs();
            let left = k2f.evaluate(Point::new(-r, 0.0)).abs();
            if right <= left {
                1.0
            } else {
                -1.0
            }
        });
        Ok(Self {
            pair,
            tangent_side,
            tol: *tol,
        })
    }

    pub fn parameter(&self) -> FamilyParameter {
        if self.tangent_side.is_some() {
            FamilyParameter::Offset
        } else {
            FamilyParameter::Angle
        }
    }

    /// Family member in the canonical frame.
    pub fn member_in_frame(&self, param: f64) -> Result<CircleCoeffs> {
        let CanonicalPair { a1, a2, x2, q, .. } = self.pair;
        match self.tangent_side {
            Some(side) => {
                let den = a1 * param - 1.0;
                if self.tol.is_zero(den, 1.0) {
                    return Err(Error::PoleParameter(param));
                }
                let a0 = -2.0 * a1 / den;
                CircleCoeffs::from_element(&CurvatureElement::new(side * param, 0.0, -side * FRAC_PI_2, a0))
            }
            None => {
                let p0 = a1 * (a2 * x2 - 1.0) * param.cos() + (a1 - a2);
                let p1 = p0 - 2.0 * a1 * q;
                let scale = (a1.abs() * (1.0 + (a2 * x2 - 1.0).abs()) + a2.abs() + (a1 * q).abs()).max(1.0);
                if self.tol.is_zero(p1, scale) {
                    return Err(Error::PoleParameter(param));
                }
                let a0 = if self.tol.is_zero(p0, scale) { 0.0 } else { a1 * p0 / p1 };
                CircleCoeffs::normalize(
                    a0,
                    -2.0 * a1 * q * param.cos() / p1,
                    -2.0 * a1 * q * param.sin() / p1,
                    (4.0 * a1 * q - p0) / (a1 * p1),
                )
            }
        }
    }

    pub fn member(&self, param: f64) -> Result<CircleCoeffs> {
        Ok(self.pair.frame.inverse(&self.member_in_frame(param)?))
    }
}

/// One member of the family of circles tangent to `k1` and `k2`.
pub fn tangent_family(k1: &CircleCoeffs, k2: &CircleCoeffs, param: f64, tol: &Tolerances) -> Result<CircleCoeffs> {
    TangentFamily::new(k1, k2, tol)?.member(param)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConicDegeneracy {
    /// Tangent pair: centres lie on the frame abscissa, `Y = 0`.
    Q1Zero,
    /// Equal curvatures: centres lie on `2 a1 X - a1 x2 + 1 = 0`.
    EqualCurvatures,
}

/// Locus of centres of the tangent family, a conic with a focus at the first
/// circle's centre: `Y^2 + (1 - e^2) X^2 - 2 e p X - p^2 = 0` in the frame.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConicParams {
    pub eccentricity: Option<f64>,
    pub focal_param: Option<f64>,
    pub degenerate: Option<ConicDegeneracy>,
    pub pair: CanonicalPair,
}

impl ConicParams {
    pub fn eccentricity_sq(&self) -> Option<f64> {
        self.eccentricity.map(|e| e * e)
    }

    pub fn focal_param_sq(&self) -> Option<f64> {
        self.focal_param.map(|p| p * p)
    }

    /// Residual of the locus equation at a frame point.
    pub fn residual_in_frame(&self, p: Point) -> f64 {
        let CanonicalPair { a1, x2, .. } = self.pair;
        match (self.degenerate, self.eccentricity, self.focal_param) {
            (Some(ConicDegeneracy::Q1Zero), _, _) => p.y,
            (Some(ConicDegeneracy::EqualCurvatures), _, _) => 2.0 * a1 * p.x - a1 * x2 + 1.0,
            (None, Some(e), Some(f)) => p.y * p.y + (1.0 - e * e) * p.x * p.x - 2.0 * e * f * p.x - f * f,
            (None, _, _) => unreachable!("non-degenerate conic carries both parameters"),
        }
    }

    /// Residual at a world point.
    pub fn residual(&self, p: Point) -> f64 {
        self.residual_in_frame(self.pair.frame.forward_point(p))
    }
}

pub fn conic_params(k1: &CircleCoeffs, k2: &CircleCoeffs, tol: &Tolerances) -> Result<ConicParams> {
    let pair = canonical_frame(k1, k2, tol)?;
    let CanonicalPair { a1, a2, x2, q, .. } = pair;
    let s = coeff_scale(&[*k1, *k2]);
    let degenerate = if tol.q_is_zero(q, s * s) {
        Some(ConicDegeneracy::Q1Zero)
    } else if tol.is_zero(a2 - a1, s) {
        Some(ConicDegeneracy::EqualCurvatures)
    } else {
        None
    };
    let (eccentricity, focal_param) = if degenerate.is_none() {
        (Some(a1 * (a2 * x2 - 1.0) / (a2 - a1)), Some(-2.0 * q / (a2 - a1)))
    } else {
        (None, None)
    };
    Ok(ConicParams {
        eccentricity,
        focal_param,
        degenerate,
        pair,
    })
}
