//! Oriented circles and lines as normalized coefficient quadruples.
//!
//! A circle is the zero set of
//!
//! ```text
//! N(x, y) = a (x^2 + y^2) + 2 b x + 2 c y + d,    b^2 + c^2 - a d = 1.
//! ```
//!
//! The sign of `a` is the signed curvature: counterclockwise circles have
//! `a > 0`, `a = 0` is a directed straight line. Points with `N < 0` lie to
//! the left of the curve, which for a counterclockwise circle is the inside.

use std::f64::consts::PI;
use std::fmt;
use std::ops::Neg;

use crate::error::{Error, Result};
use crate::tolerance::{coeff_scale, Tolerances};

/// Reduces an angle to `(-pi, pi]`.
pub fn canonical_angle(t: f64) -> f64 {
    let mut r = t.rem_euclid(2.0 * PI);
    if r > PI {
        r -= 2.0 * PI;
    }
    r
}

/// True when two angles agree modulo `2 pi`.
pub fn angles_equal(t1: f64, t2: f64, eps: f64) -> bool {
    let d = canonical_angle(t1 - t2);
    d.abs() <= eps || (d.abs() - 2.0 * PI).abs() <= eps
}

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    pub fn distance(&self, other: &Point) -> f64 {
        (self.x - other.x).hypot(self.y - other.y)
    }
}

/// A point of a curve together with its tangent direction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LinearElement {
    pub x: f64,
    pub y: f64,
    pub tau: f64,
}

impl LinearElement {
    pub fn new(x: f64, y: f64, tau: f64) -> Self {
        Self {
            x,
            y,
            tau: canonical_angle(tau),
        }
    }

    pub fn point(&self) -> Point {
        Point::new(self.x, self.y)
    }
}

/// Generator of a circle: a point, the tangent direction there and the
/// signed curvature.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CurvatureElement {
    pub x: f64,
    pub y: f64,
    pub tau: f64,
    pub k: f64,
}

impl CurvatureElement {
    pub fn new(x: f64, y: f64, tau: f64, k: f64) -> Self {
        Self {
            x,
            y,
            tau: canonical_angle(tau),
            k,
        }
    }

    /// The same point set traversed the other way.
    pub fn reversed(&self) -> Self {
        Self::new(self.x, self.y, self.tau + PI, -self.k)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Orientation {
    CounterClockwise,
    Clockwise,
}

/// The four ways to describe an input circle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum CircleSpec {
    CenterRadius {
        center: Point,
        radius: f64,
        orientation: Orientation,
    },
    /// Directed line through `point` with direction angle `angle`.
    Line { point: Point, angle: f64 },
    Element(CurvatureElement),
    Coeffs([f64; 4]),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Coincidence {
    Identical,
    ReversedIdentical,
    Distinct,
}

/// Normalized quadruple `[a, b, c, d]` of an oriented circle or line.
#[derive(Clone, Copy, PartialEq)]
pub struct CircleCoeffs {
    a: f64,
    b: f64,
    c: f64,
    d: f64,
}

impl fmt::Debug for CircleCoeffs {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}, {}, {}]", self.a, self.b, self.c, self.d)
    }
}

impl CircleCoeffs {
    /// Accepts a quadruple that already satisfies the normalization within
    /// `tol.norm` and rescales it onto the constraint exactly.
    pub fn new(a: f64, b: f64, c: f64, d: f64, tol: &Tolerances) -> Result<Self> {
        let n = b * b + c * c - a * d;
        if !n.is_finite() {
            return Err(Error::NonFinite("circle coefficients"));
        }
        if n <= 0.0 {
            return Err(Error::NonNormalizable { a, b, c, d, value: n });
        }
        let scale = [a, b, c, d].iter().fold(1.0_f64, |m, x| m.max(x.abs()));
        let deviation = (n - 1.0).abs();
        let limit = tol.norm * scale * scale;
        if deviation > limit {
            return Err(Error::NotNormalized { deviation, limit });
        }
        Self::normalize(a, b, c, d)
    }

    /// Rescales any quadruple with `b^2 + c^2 - ad > 0` onto the constraint.
    /// The overall sign, hence the orientation, is kept.
    pub fn normalize(a: f64, b: f64, c: f64, d: f64) -> Result<Self> {
        let n = b * b + c * c - a * d;
        if !(a.is_finite() && b.is_finite() && c.is_finite() && d.is_finite()) || !n.is_finite() {
            return Err(Error::NonFinite("circle coefficients"));
        }
        if n <= 0.0 {
            return Err(Error::NonNormalizable { a, b, c, d, value: n });
        }
        // already normalized up to rounding: keep the bits so re-emission is exact
        if (n - 1.0).abs() <= 4.0 * f64::EPSILON * (b * b + c * c + (a * d).abs()) {
            return Ok(Self::raw(a, b, c, d));
        }
        let s = n.sqrt();
        Ok(Self::raw(a / s, b / s, c / s, d / s))
    }

    pub(crate) const fn raw(a: f64, b: f64, c: f64, d: f64) -> Self {
        Self { a, b, c, d }
    }

    pub fn from_array(v: [f64; 4], tol: &Tolerances) -> Result<Self> {
        Self::new(v[0], v[1], v[2], v[3], tol)
    }

    pub fn from_element(e: &CurvatureElement) -> Result<Self> {
        let (s, c) = e.tau.sin_cos();
        let k = e.k;
        Self::normalize(
            k,
            -k * e.x + s,
            -k * e.y - c,
            k * (e.x * e.x + e.y * e.y) - 2.0 * e.x * s + 2.0 * e.y * c,
        )
    }

    pub fn from_center_radius(center: Point, radius: f64, orientation: Orientation) -> Result<Self> {
        if !(radius.is_finite() && radius > 0.0) {
            return Err(Error::InvalidRadius(radius));
        }
        let k = match orientation {
            Orientation::CounterClockwise => 1.0 / radius,
            Orientation::Clockwise => -1.0 / radius,
        };
        let (f, g) = (center.x, center.y);
        Self::normalize(k, -k * f, -k * g, k * (f * f + g * g) - 1.0 / k)
    }

    pub fn line(point: Point, angle: f64) -> Result<Self> {
        Self::from_element(&CurvatureElement::new(point.x, point.y, angle, 0.0))
    }

    pub fn a(&self) -> f64 {
        self.a
    }
    pub fn b(&self) -> f64 {
        self.b
    }
    pub fn c(&self) -> f64 {
        self.c
    }
    pub fn d(&self) -> f64 {
        self.d
    }

    /// Signed curvature.
    pub fn curvature(&self) -> f64 {
        self.a
    }

    pub fn to_array(&self) -> [f64; 4] {
        [self.a, self.b, self.c, self.d]
    }

    pub fn is_line(&self) -> bool {
        self.a == 0.0
    }

    pub fn center(&self) -> Option<Point> {
        (!self.is_line()).then(|| Point::new(-self.b / self.a, -self.c / self.a))
    }

    /// Unsigned radius, `None` for a line.
    pub fn radius(&self) -> Option<f64> {
        (!self.is_line()).then(|| 1.0 / self.a.abs())
    }

    pub fn orientation(&self) -> Option<Orientation> {
        if self.a > 0.0 {
            Some(Orientation::CounterClockwise)
        } else if self.a < 0.0 {
            Some(Orientation::Clockwise)
        } else {
            None
        }
    }

    /// Direction angle of a line (the tangent at every point).
    pub fn line_direction(&self) -> Option<f64> {
        self.is_line().then(|| self.b.atan2(-self.c))
    }

    /// Normalization defect `b^2 + c^2 - ad - 1`.
    pub fn normalization_defect(&self) -> f64 {
        self.b * self.b + self.c * self.c - self.a * self.d - 1.0
    }

    pub fn reverse(&self) -> Self {
        Self::raw(-self.a, -self.b, -self.c, -self.d)
    }

    /// `a (x^2 + y^2) + 2 b x + 2 c y + d`; negative to the left of the curve.
    pub fn evaluate(&self, p: Point) -> f64 {
        self.a * (p.x * p.x + p.y * p.y) + 2.0 * self.b * p.x + 2.0 * self.c * p.y + self.d
    }

    /// Signed distance from `p` to the curve, sign inherited from [`evaluate`].
    ///
    /// At the centre of a circle this returns `N = -1/a`, i.e. minus the signed
    /// radius, which is the correct distance.
    ///
    /// [`evaluate`]: CircleCoeffs::evaluate
    pub fn signed_distance(&self, p: Point) -> f64 {
        let n = self.evaluate(p);
        // 1 + aN = (ax + b)^2 + (ay + c)^2, evaluated without cancellation.
        let root = (self.a * p.x + self.b).hypot(self.a * p.y + self.c);
        n / (1.0 + root)
    }

    /// The element closest to the origin and its signed distance `l`.
    ///
    /// For a circle centred at the origin the angle is arbitrary and set to 0.
    pub fn element_nearest_origin(&self) -> (LinearElement, f64) {
        // 1 + ad = b^2 + c^2 under normalization.
        let root = self.b.hypot(self.c);
        let l = self.d / (1.0 + root);
        let lambda = if self.b == 0.0 && self.c == 0.0 {
            0.0
        } else {
            self.b.atan2(-self.c)
        };
        let (s, c) = lambda.sin_cos();
        (LinearElement::new(-l * s, l * c, lambda), l)
    }

    /// A generating curvature element of this circle.
    pub fn element(&self) -> CurvatureElement {
        let (e, _) = self.element_nearest_origin();
        CurvatureElement::new(e.x, e.y, e.tau, self.a)
    }

    /// Point-set comparison up to orientation.
    pub fn coincidence(&self, other: &CircleCoeffs, tol: &Tolerances) -> Coincidence {
        let limit = tol.coeff * coeff_scale(&[*self, *other]);
        let (p, q) = (self.to_array(), other.to_array());
        if p.iter().zip(&q).all(|(x, y)| (x - y).abs() <= limit) {
            Coincidence::Identical
        } else if p.iter().zip(&q).all(|(x, y)| (x + y).abs() <= limit) {
            Coincidence::ReversedIdentical
        } else {
            Coincidence::Distinct
        }
    }

    /// `max |k_i - l_i|`, optionally minimized over the reversal of `other`.
    pub fn coeff_distance(&self, other: &CircleCoeffs, up_to_reversal: bool) -> f64 {
        let (p, q) = (self.to_array(), other.to_array());
        let same = p.iter().zip(&q).fold(0.0_f64, |m, (x, y)| m.max((x - y).abs()));
        if !up_to_reversal {
            return same;
        }
        let flipped = p.iter().zip(&q).fold(0.0_f64, |m, (x, y)| m.max((x + y).abs()));
        same.min(flipped)
    }
}

impl Neg for CircleCoeffs {
    type Output = CircleCoeffs;

    fn neg(self) -> CircleCoeffs {
        self.reverse()
    }
}

impl TryFrom<CircleSpec> for CircleCoeffs {
    type Error = Error;

    fn try_from(spec: CircleSpec) -> Result<Self> {
        circle_from_spec(&spec, &Tolerances::default())
    }
}

pub fn circle_from_spec(spec: &CircleSpec, tol: &Tolerances) -> Result<CircleCoeffs> {
    match *spec {
        CircleSpec::CenterRadius {
            center,
            radius,
            orientation,
        } => CircleCoeffs::from_center_radius(center, radius, orientation),
        CircleSpec::Line { point, angle } => CircleCoeffs::line(point, angle),
        CircleSpec::Element(e) => CircleCoeffs::from_element(&e),
        CircleSpec::Coeffs(v) => CircleCoeffs::from_array(v, tol),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: [f64; 4], b: [f64; 4], eps: f64) -> bool {
        a.iter().zip(&b).all(|(x, y)| (x - y).abs() <= eps)
    }

    fn unit() -> CircleCoeffs {
        CircleCoeffs::from_center_radius(Point::new(0.0, 0.0), 1.0, Orientation::CounterClockwise).unwrap()
    }

    #[test]
    fn element_examples() {
        let k = CircleCoeffs::from_element(&CurvatureElement::new(1.0, 0.0, PI / 2.0, 1.0)).unwrap();
        assert!(close(k.to_array(), [1.0, 0.0, 0.0, -1.0], 1e-15));
        let x_axis = CircleCoeffs::from_element(&CurvatureElement::new(0.0, 0.0, 0.0, 0.0)).unwrap();
        assert!(close(x_axis.to_array(), [0.0, 0.0, -1.0, 0.0], 1e-15));
    }

    #[test]
    fn center_radius_example() {
        let k = CircleCoeffs::from_center_radius(Point::new(2.0, 1.0), 0.5, Orientation::CounterClockwise).unwrap();
        assert!(close(k.to_array(), [2.0, -4.0, -2.0, 9.5], 1e-12));
        assert!(k.normalization_defect().abs() <= 1e-12);
        let cw = CircleCoeffs::from_center_radius(Point::new(2.0, 1.0), 0.5, Orientation::Clockwise).unwrap();
        assert_eq!(cw.to_array(), k.reverse().to_array());
    }

    #[test]
    fn invalid_inputs() {
        assert_eq!(
            CircleCoeffs::from_center_radius(Point::default(), -1.0, Orientation::Clockwise),
            Err(Error::InvalidRadius(-1.0))
        );
        assert!(matches!(
            CircleCoeffs::from_array([1.0, 0.0, 0.0, 1.0], &Tolerances::default()),
            Err(Error::NonNormalizable { .. })
        ));
        assert!(matches!(
            CircleCoeffs::from_array([1.0, 0.0, 0.0, -1.5], &Tolerances::default()),
            Err(Error::NotNormalized { .. })
        ));
        // within the acceptance band the quadruple is snapped onto the constraint
        let k = CircleCoeffs::from_array([1.0, 0.0, 0.0, -1.0 - 1e-11], &Tolerances::default()).unwrap();
        assert!(k.normalization_defect().abs() <= 1e-15);
    }

    #[test]
    fn nearest_element() {
        let k = CircleCoeffs::from_array([1.0, 0.0, -2.0, 3.0], &Tolerances::default()).unwrap();
        let (e, l) = k.element_nearest_origin();
        assert!((e.x).abs() < 1e-15 && (e.y - 1.0).abs() < 1e-15 && e.tau.abs() < 1e-15);
        assert!((l - 1.0).abs() < 1e-15);

        let x_axis = CircleCoeffs::line(Point::default(), 0.0).unwrap();
        let (e, l) = x_axis.element_nearest_origin();
        assert_eq!((e.x.abs(), e.y.abs(), e.tau, l.abs()), (0.0, 0.0, 0.0, 0.0));

        let (e, l) = unit().element_nearest_origin();
        assert_eq!(l, -1.0);
        assert_eq!(e.tau, 0.0);
        assert_eq!(unit().evaluate(e.point()), 0.0);
    }

    #[test]
    fn reversal() {
        let k = unit();
        assert_eq!(k.reverse().to_array(), [-1.0, 0.0, 0.0, 1.0]);
        assert_eq!(k.reverse().reverse(), k);
        let e = CurvatureElement::new(0.3, -1.2, 0.7, 0.4);
        let via_element = CircleCoeffs::from_element(&e.reversed()).unwrap();
        let via_coeffs = CircleCoeffs::from_element(&e).unwrap().reverse();
        assert!(close(via_element.to_array(), via_coeffs.to_array(), 1e-14));
    }

    #[test]
    fn evaluate_and_distance() {
        let k = unit();
        assert_eq!(k.evaluate(Point::new(0.0, 0.0)), -1.0);
        let x_axis = CircleCoeffs::line(Point::default(), 0.0).unwrap();
        assert_eq!(x_axis.evaluate(Point::new(0.0, 2.0)), -4.0);
        assert!(k.evaluate(Point::new(0.6, 0.8)).abs() < 1e-15);

        assert_eq!(k.signed_distance(Point::new(3.0, 0.0)), 2.0);
        assert_eq!(k.signed_distance(Point::new(0.0, 0.0)), -1.0);
        assert_eq!(x_axis.signed_distance(Point::new(0.0, 2.0)), -2.0);
        // away from the unit circle, the centre value is minus the radius
        let big = CircleCoeffs::from_center_radius(Point::new(1.0, 2.0), 3.0, Orientation::CounterClockwise).unwrap();
        assert!((big.signed_distance(Point::new(1.0, 2.0)) + 3.0).abs() < 1e-14);
    }

    #[test]
    fn coincidence() {
        let tol = Tolerances::default();
        let k = unit();
        assert_eq!(k.coincidence(&k, &tol), Coincidence::Identical);
        assert_eq!(k.coincidence(&k.reverse(), &tol), Coincidence::ReversedIdentical);
        let shifted =
            CircleCoeffs::from_center_radius(Point::new(1e-3, 0.0), 1.0, Orientation::CounterClockwise).unwrap();
        assert_eq!(k.coincidence(&shifted, &tol), Coincidence::Distinct);
    }

    #[test]
    fn angles() {
        assert_eq!(canonical_angle(PI), PI);
        assert_eq!(canonical_angle(-PI), PI);
        assert!((canonical_angle(3.0 * PI / 2.0) + PI / 2.0).abs() < 1e-15);
        assert!(angles_equal(0.1, 0.1 + 4.0 * PI, 1e-12));
        assert!(angles_equal(PI - 1e-14, -PI + 1e-14, 1e-12));
    }

    #[test]
    fn line_accessors() {
        let l = CircleCoeffs::line(Point::new(2.0, 0.0), 3.0 * PI / 4.0).unwrap();
        assert!(l.is_line());
        assert!(l.center().is_none() && l.radius().is_none() && l.orientation().is_none());
        assert!((l.line_direction().unwrap() - 3.0 * PI / 4.0).abs() < 1e-15);
    }
}
