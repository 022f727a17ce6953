#![allow(dead_code)]

use std::f64::consts::PI;

use apollonia::circle::{CircleCoeffs, CurvatureElement, Orientation, Point};
use apollonia::invariants::Triple;
use apollonia::transforms::{invert_in_circle, FrameMap};
use proptest::prelude::*;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn ccw(x: f64, y: f64, r: f64) -> CircleCoeffs {
    CircleCoeffs::from_center_radius(Point::new(x, y), r, Orientation::CounterClockwise).unwrap()
}

pub fn orient(r: &mut impl Rng) -> Orientation {
    if r.gen_bool(0.5) {
        Orientation::CounterClockwise
    } else {
        Orientation::Clockwise
    }
}

pub fn random_circle(r: &mut impl Rng) -> CircleCoeffs {
    let c = Point::new(r.gen_range(-5.0..5.0), r.gen_range(-5.0..5.0));
    CircleCoeffs::from_center_radius(c, r.gen_range(0.2..3.0), orient(r)).unwrap()
}

pub fn random_line(r: &mut impl Rng) -> CircleCoeffs {
    let p = Point::new(r.gen_range(-5.0..5.0), r.gen_range(-5.0..5.0));
    CircleCoeffs::line(p, r.gen_range(-PI..PI)).unwrap()
}

pub fn random_circle_triple(r: &mut impl Rng) -> Triple {
    [random_circle(r), random_circle(r), random_circle(r)]
}

/// Circles with an occasional line mixed in.
pub fn random_mixed_triple(r: &mut impl Rng) -> Triple {
    std::array::from_fn(|_| if r.gen_bool(0.15) { random_line(r) } else { random_circle(r) })
}

pub fn random_line_triple(r: &mut impl Rng) -> Triple {
    [random_line(r), random_line(r), random_line(r)]
}

pub fn random_frame(r: &mut impl Rng) -> FrameMap {
    FrameMap {
        origin: Point::new(r.gen_range(-4.0..4.0), r.gen_range(-4.0..4.0)),
        rotation: r.gen_range(-PI..PI),
    }
}

/// A mirror circle whose centre avoids the given circles, so images stay
/// of moderate size.
pub fn random_mirror(r: &mut impl Rng) -> CircleCoeffs {
    let c = Point::new(r.gen_range(-6.0..6.0), r.gen_range(-6.0..6.0));
    CircleCoeffs::from_center_radius(c, r.gen_range(1.0..4.0), orient(r)).unwrap()
}

/// Three pairwise counter-tangent circles: externally touching circles of
/// equal orientation, moved by a rigid motion and possibly inverted.
pub fn random_counter_tangent_triple(r: &mut impl Rng) -> Triple {
    let (r1, r2, r3): (f64, f64, f64) = (r.gen_range(0.3..2.0), r.gen_range(0.3..2.0), r.gen_range(0.3..2.0));
    let (l12, l13, l23) = (r1 + r2, r1 + r3, r2 + r3);
    let x3 = (l13 * l13 - l23 * l23 + l12 * l12) / (2.0 * l12);
    let y3 = (l13 * l13 - x3 * x3).sqrt();
    let base = [ccw(0.0, 0.0, r1), ccw(l12, 0.0, r2), ccw(x3, y3, r3)];
    let frame = random_frame(r);
    let mut t = base.map(|k| frame.inverse(&k));
    if r.gen_bool(0.5) {
        let m = random_mirror(r);
        t = t.map(|k| invert_in_circle(&k, &m));
    }
    if r.gen_bool(0.5) {
        t = t.map(|k| k.reverse());
    }
    t
}

/// Three circles through one point with distinct tangent angles.
pub fn random_common_point_triple(r: &mut impl Rng) -> Triple {
    let (x, y) = (r.gen_range(-3.0..3.0), r.gen_range(-3.0..3.0));
    let base = r.gen_range(-PI..PI);
    std::array::from_fn(|i| {
        let tau = base + i as f64 * 2.0 * PI / 3.0 + r.gen_range(-0.5..0.5);
        let k = r.gen_range(0.3..2.0) * if r.gen_bool(0.5) { 1.0 } else { -1.0 };
        CircleCoeffs::from_element(&CurvatureElement::new(x, y, tau, k)).unwrap()
    })
}

/// Relative coefficient distance up to reversal.
pub fn rel_distance(a: &CircleCoeffs, b: &CircleCoeffs, up_to_reversal: bool) -> f64 {
    let scale = a.to_array().iter().chain(b.to_array().iter()).fold(1.0_f64, |m, x| m.max(x.abs()));
    a.coeff_distance(b, up_to_reversal) / scale
}

/// Largest distance from a member of one set to its nearest member of the
/// other, both ways.
pub fn hausdorff(a: &[CircleCoeffs], b: &[CircleCoeffs]) -> f64 {
    let one_way = |x: &[CircleCoeffs], y: &[CircleCoeffs]| {
        x.iter()
            .map(|p| y.iter().map(|q| rel_distance(p, q, true)).fold(f64::INFINITY, f64::min))
            .fold(0.0, f64::max)
    };
    if a.is_empty() && b.is_empty() {
        return 0.0;
    }
    one_way(a, b).max(one_way(b, a))
}

pub fn circle_strategy() -> impl Strategy<Value = CircleCoeffs> {
    (-5.0..5.0f64, -5.0..5.0f64, 0.2..3.0f64, any::<bool>()).prop_map(|(x, y, r, ccw)| {
        let o = if ccw {
            Orientation::CounterClockwise
        } else {
            Orientation::Clockwise
        };
        CircleCoeffs::from_center_radius(Point::new(x, y), r, o).unwrap()
    })
}

pub fn line_strategy() -> impl Strategy<Value = CircleCoeffs> {
    (-5.0..5.0f64, -5.0..5.0f64, -PI..PI).prop_map(|(x, y, a)| CircleCoeffs::line(Point::new(x, y), a).unwrap())
}

pub fn curve_strategy() -> impl Strategy<Value = CircleCoeffs> {
    prop_oneof![6 => circle_strategy(), 1 => line_strategy()]
}

pub fn triple_strategy() -> impl Strategy<Value = Triple> {
    [curve_strategy(), curve_strategy(), curve_strategy()]
}

pub fn circle_triple_strategy() -> impl Strategy<Value = Triple> {
    [circle_strategy(), circle_strategy(), circle_strategy()]
}

pub fn line_triple_strategy() -> impl Strategy<Value = Triple> {
    [line_strategy(), line_strategy(), line_strategy()]
}

/// Proptest settings that do not write regression files into the tree.
pub fn config(cases: u32) -> ProptestConfig {
    ProptestConfig {
        cases,
        failure_persistence: None,
        ..ProptestConfig::default()
    }
}
