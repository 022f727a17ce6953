//! Pairwise and triple inversive invariants.
//!
//! Indices of a triple follow the cyclic convention `(i, j, k)` in
//! `{(1,2,3), (2,3,1), (3,1,2)}`: `Q_1 = Q(K1, K2)`, `Q_2 = Q(K2, K3)`,
//! `Q_3 = Q(K3, K1)`. In zero-based arrays pair `i` is `(i, (i + 1) % 3)`.

use crate::circle::{CircleCoeffs, Coincidence, Point};
use crate::error::{Error, Result};
use crate::tolerance::{coeff_scale, q_scale, Tolerances};

pub type Triple = [CircleCoeffs; 3];

/// Zero-based index pairs in the cyclic order used for `Q_1, Q_2, Q_3`.
pub const PAIRS: [(usize, usize); 3] = [(0, 1), (1, 2), (2, 0)];

/// The inversive invariant `Q`: 0 for tangency, 1 for counter-tangency.
pub fn q_value(k1: &CircleCoeffs, k2: &CircleCoeffs) -> f64 {
    (2.0 + k1.a() * k2.d() + k2.a() * k1.d() - 2.0 * (k1.b() * k2.b() + k1.c() * k2.c())) / 4.0
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Tangent,
    CounterTangent,
    Intersecting,
    Disjoint,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PairReport {
    pub q: f64,
    pub cos_psi: f64,
    pub relation: Relation,
    /// `cosh(delta) = |1 - 2Q|`, present when the circles do not intersect.
    pub inversive_distance: Option<f64>,
}

pub fn q_pair(k1: &CircleCoeffs, k2: &CircleCoeffs, tol: &Tolerances) -> PairReport {
    let q = q_value(k1, k2);
    let s = coeff_scale(&[*k1, *k2]);
    let scale = s * s;
    let relation = if tol.q_is_zero(q, scale) {
        Relation::Tangent
    } else if tol.q_is_zero(q - 1.0, scale) {
        Relation::CounterTangent
    } else if q > 0.0 && q < 1.0 {
        Relation::Intersecting
    } else {
        Relation::Disjoint
    };
    let cos_psi = 1.0 - 2.0 * q;
    let inversive_distance = (cos_psi.abs() >= 1.0).then(|| cos_psi.abs().acosh());
    PairReport {
        q,
        cos_psi,
        relation,
        inversive_distance,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairExistence {
    Yes,
    /// Realizable only as two lines or two concentric circles.
    YesNoRadicalAxis,
    No,
}

/// Whether a pair of circles with curvatures `k1`, `k2` and invariant `q`
/// can exist.
pub fn pair_exists(k1: f64, k2: f64, q: f64, tol: &Tolerances) -> PairExistence {
    let e = k1 * k1 + k2 * k2 - 2.0 * k1 * k2 * (1.0 - 2.0 * q);
    let scale = k1.abs().max(k2.abs()).max(1.0).powi(2) * q.abs().max(1.0);
    if k1 == 0.0 && k2 == 0.0 {
        return if (0.0..=1.0).contains(&q) {
            PairExistence::YesNoRadicalAxis
        } else {
            PairExistence::No
        };
    }
    if tol.is_zero(e, scale) {
        PairExistence::YesNoRadicalAxis
    } else if e > 0.0 {
        PairExistence::Yes
    } else {
        PairExistence::No
    }
}

fn det3(c0: [f64; 3], c1: [f64; 3], c2: [f64; 3]) -> f64 {
    c0[0] * (c1[1] * c2[2] - c1[2] * c2[1]) - c1[0] * (c0[1] * c2[2] - c0[2] * c2[1])
        + c2[0] * (c0[1] * c1[2] - c0[2] * c1[1])
}

/// 3x3 minors of the coefficient matrix, with the sign and scale factors
/// used throughout (`d1 = -|b c d|`, `d2 = -|a c d|/2`, `d3 = |a b d|/2`,
/// `d4 = |a b c|`) plus the letter minors with a column of ones.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Minors {
    pub d1: f64,
    pub d2: f64,
    pub d3: f64,
    pub d4: f64,
    pub bc: f64,
    pub ab: f64,
    pub ac: f64,
    pub bd: f64,
    pub cd: f64,
}

pub fn minors(t: &Triple) -> Minors {
    let col = |n: usize| [t[0].to_array()[n], t[1].to_array()[n], t[2].to_array()[n]];
    let (a, b, c, d) = (col(0), col(1), col(2), col(3));
    let one = [1.0; 3];
    Minors {
        d1: -det3(b, c, d),
        d2: -det3(a, c, d) / 2.0,
        d3: det3(a, b, d) / 2.0,
        d4: det3(a, b, c),
        bc: det3(b, c, one),
        ab: det3(a, b, one),
        ac: det3(a, c, one),
        bd: det3(b, d, one),
        cd: det3(c, d, one),
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TripleSummary {
    /// `Q_1 = Q12`, `Q_2 = Q23`, `Q_3 = Q31`.
    pub q: [f64; 3],
    pub minors: Minors,
    pub u: f64,
    /// `v_i = Q_i (Q_i - Q_j - Q_k)`.
    pub v_coeffs: [f64; 3],
    pub v: f64,
    pub w: f64,
    pub g: f64,
    pub p_perp: f64,
    /// Largest absolute input coefficient (at least 1).
    pub coeff_scale: f64,
    /// Largest `|Q_i|` (at least 1).
    pub q_scale: f64,
}

pub fn triple_summary(t: &Triple) -> TripleSummary {
    let q = PAIRS.map(|(i, j)| q_value(&t[i], &t[j]));
    let a = t.map(|k| k.a());
    let cyc = |i: usize| (i, (i + 1) % 3, (i + 2) % 3);

    let mut u = 4.0 * q[0] * q[1] * q[2];
    let mut v_coeffs = [0.0; 3];
    for n in 0..3 {
        let (i, j, k) = cyc(n);
        u += q[i] * (q[i] - 2.0 * q[j]);
        v_coeffs[i] = q[i] * (q[i] - q[j] - q[k]);
    }
    let mut v = 0.0;
    let mut w = 0.0;
    let mut p_perp = 0.0;
    for n in 0..3 {
        let (i, j, k) = cyc(n);
        v += a[i] * v_coeffs[j];
        w += a[i] * q[j] * (a[i] * q[j] - 2.0 * a[j] * q[k]);
        p_perp += a[i] * a[i] * (1.0 - q[j]) * q[j] + a[i] * a[j] * (q[i] - q[k] - q[j] + 2.0 * q[k] * q[j]);
    }
    let g = q[0] * (a[0] - a[2]) * (a[1] - a[2])
        + q[1] * (a[1] - a[0]) * (a[2] - a[0])
        + q[2] * (a[2] - a[1]) * (a[0] - a[1]);

    TripleSummary {
        q,
        minors: minors(t),
        u,
        v_coeffs,
        v,
        w,
        g,
        p_perp,
        coeff_scale: coeff_scale(t),
        q_scale: q_scale(&q),
    }
}

impl TripleSummary {
    pub fn q_product(&self) -> f64 {
        self.q[0] * self.q[1] * self.q[2]
    }

    /// Scale of cubic coefficient quantities (the minors).
    pub fn minor_scale(&self) -> f64 {
        self.coeff_scale.powi(3)
    }

    /// Scale of cubic Q quantities (U, products of three Q).
    pub fn cubic_q_scale(&self) -> f64 {
        self.q_scale.powi(3)
    }

    pub fn u_is_zero(&self, tol: &Tolerances) -> bool {
        tol.is_zero(self.u, self.cubic_q_scale())
    }

    pub fn d4_is_zero(&self, tol: &Tolerances) -> bool {
        tol.is_zero(self.minors.d4, self.minor_scale())
    }

    pub fn g_is_zero(&self, tol: &Tolerances) -> bool {
        tol.is_zero(self.g, self.coeff_scale.powi(2) * self.q_scale)
    }

    /// Rank of the coefficient matrix below three.
    pub fn is_rank_deficient(&self, tol: &Tolerances) -> bool {
        let m = &self.minors;
        [m.d1, m.d2, m.d3, m.d4]
            .iter()
            .all(|x| tol.is_zero(*x, self.minor_scale()))
    }

    /// `sum_i x_i v_j` for every coefficient slot.
    pub fn cyclic_combination(&self, t: &Triple) -> [f64; 4] {
        let mut out = [0.0; 4];
        for (i, k) in t.iter().enumerate() {
            let j = (i + 1) % 3;
            for (n, x) in k.to_array().iter().enumerate() {
                out[n] += x * self.v_coeffs[j];
            }
        }
        out
    }

    /// Minors matched to the coefficient slots `[a, b, c, d]`:
    /// `[d4, d2, d3, d1]`.
    pub fn slot_minors(&self) -> [f64; 4] {
        let m = &self.minors;
        [m.d4, m.d2, m.d3, m.d1]
    }
}

/// The products whose signs decide solvability of the identity class and of
/// the three single-reversal classes.
pub fn class_products(q: [f64; 3]) -> [f64; 4] {
    let [q1, q2, q3] = q;
    [
        q1 * q2 * q3,
        (1.0 - q1) * q2 * (1.0 - q3),
        (1.0 - q1) * (1.0 - q2) * q3,
        q1 * (1.0 - q2) * (1.0 - q3),
    ]
}

/// Radical axis of a pair, normalized as a directed line.
pub fn radical_axis(k1: &CircleCoeffs, k2: &CircleCoeffs, tol: &Tolerances) -> Result<CircleCoeffs> {
    radical_axis_indexed(k1, k2, (0, 1), tol)
}

fn radical_axis_indexed(
    k1: &CircleCoeffs,
    k2: &CircleCoeffs,
    idx: (usize, usize),
    tol: &Tolerances,
) -> Result<CircleCoeffs> {
    let (a1, a2) = (k1.a(), k2.a());
    let q = q_value(k1, k2);
    let e = a1 * a1 + a2 * a2 - 2.0 * a1 * a2 * (1.0 - 2.0 * q);
    let scale = a1.abs().max(a2.abs()).max(1.0).powi(2) * q.abs().max(1.0);
    let degenerate = Error::DegeneratePair {
        first: idx.0,
        second: idx.1,
    };
    if tol.is_zero(e, scale) || e < 0.0 {
        return Err(degenerate);
    }
    let s = e.sqrt();
    CircleCoeffs::normalize(
        0.0,
        (a1 * k2.b() - a2 * k1.b()) / s,
        (a1 * k2.c() - a2 * k1.c()) / s,
        (a1 * k2.d() - a2 * k1.d()) / s,
    )
    .map_err(|_| degenerate)
}

/// Intersection of the radical axes, `(-d2/d4, -d3/d4)`.
pub fn radical_center(t: &Triple, tol: &Tolerances) -> Option<Point> {
    let s = triple_summary(t);
    radical_center_of(&s, tol)
}

pub(crate) fn radical_center_of(s: &TripleSummary, tol: &Tolerances) -> Option<Point> {
    if s.d4_is_zero(tol) {
        None
    } else {
        Some(Point::new(-s.minors.d2 / s.minors.d4, -s.minors.d3 / s.minors.d4))
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadicalStructure {
    /// `None` when `d4` vanishes (three lines or a common perpendicular).
    pub center: Option<Point>,
    /// Radical axes of pairs `Q_1, Q_2, Q_3`; `None` for pairs without one.
    pub axes: [Option<CircleCoeffs>; 3],
}

pub fn radical_center_axis(t: &Triple, tol: &Tolerances) -> RadicalStructure {
    RadicalStructure {
        center: radical_center(t, tol),
        axes: PAIRS.map(|(i, j)| radical_axis_indexed(&t[i], &t[j], (i, j), tol).ok()),
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Similarity {
    /// `x d_ac - y d_ab + d_bc = 0`, undefined when `G` vanishes.
    pub axis: Option<CircleCoeffs>,
    /// Similarity centres of pairs `Q_1, Q_2, Q_3`; undefined for equal
    /// curvatures.
    pub centers: [Option<Point>; 3],
    pub g: f64,
}

pub fn similarity(t: &Triple, tol: &Tolerances) -> Similarity {
    let s = triple_summary(t);
    let m = &s.minors;
    let axis = if s.g_is_zero(tol) {
        None
    } else {
        CircleCoeffs::normalize(0.0, m.ac / 2.0, -m.ab / 2.0, m.bc).ok()
    };
    let centers = PAIRS.map(|(i, j)| {
        let da = t[i].a() - t[j].a();
        if tol.is_zero(da, s.coeff_scale) {
            None
        } else {
            Some(Point::new(-(t[i].b() - t[j].b()) / da, -(t[i].c() - t[j].c()) / da))
        }
    });
    Similarity {
        axis,
        centers,
        g: s.g,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PencilKind {
    /// One common point.
    Parabolic,
    /// Two common points.
    Elliptic,
    /// No common points.
    Hyperbolic,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConfigClass {
    Generic,
    ThreeLines,
    Pencil(PencilKind),
    SingleCommonPoint,
    /// Circles `first` and `second` (zero-based) describe the same point set.
    CoincidentPair {
        kind: Coincidence,
        first: usize,
        second: usize,
    },
}

impl ConfigClass {
    pub fn is_degenerate(&self) -> bool {
        !matches!(self, ConfigClass::Generic)
    }
}

/// Decision tree, first match wins: coincident pair, three lines, pencil,
/// single common point, generic.
pub fn classify_triple(t: &Triple, tol: &Tolerances) -> ConfigClass {
    let s = triple_summary(t);
    classify_with_summary(t, &s, tol)
}

pub(crate) fn classify_with_summary(t: &Triple, s: &TripleSummary, tol: &Tolerances) -> ConfigClass {
    // A reversed pair dominates an identical one: it rules out every solution.
    let mut identical = None;
    for (i, j) in PAIRS {
        match t[i].coincidence(&t[j], tol) {
            Coincidence::ReversedIdentical => {
                return ConfigClass::CoincidentPair {
                    kind: Coincidence::ReversedIdentical,
                    first: i.min(j),
                    second: i.max(j),
                }
            }
            Coincidence::Identical if identical.is_none() => identical = Some((i.min(j), i.max(j))),
            _ => {}
        }
    }
    if let Some((first, second)) = identical {
        return ConfigClass::CoincidentPair {
            kind: Coincidence::Identical,
            first,
            second,
        };
    }
    if t.iter().all(|k| tol.is_zero(k.a(), 1.0)) {
        return ConfigClass::ThreeLines;
    }
    if s.is_rank_deficient(tol) {
        return ConfigClass::Pencil(pencil_kind_of_pair(&t[0], &t[1], tol));
    }
    if s.u_is_zero(tol) {
        if let Some(p) = radical_center_of(s, tol) {
            let reach = 1.0 + p.x.abs() + p.y.abs();
            if t.iter().all(|k| tol.is_zero(k.signed_distance(p), reach)) {
                return ConfigClass::SingleCommonPoint;
            }
        }
    }
    ConfigClass::Generic
}

/// Pencil type from the number of common points of two distinct members.
pub(crate) fn pencil_kind_of_pair(k1: &CircleCoeffs, k2: &CircleCoeffs, tol: &Tolerances) -> PencilKind {
    match q_pair(k1, k2, tol).relation {
        Relation::Tangent | Relation::CounterTangent => PencilKind::Parabolic,
        Relation::Intersecting => PencilKind::Elliptic,
        Relation::Disjoint => PencilKind::Hyperbolic,
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::circle::{CurvatureElement, Orientation};
    use std::f64::consts::{FRAC_1_SQRT_2, PI, SQRT_2};

    fn ccw(x: f64, y: f64, r: f64) -> CircleCoeffs {
        CircleCoeffs::from_center_radius(Point::new(x, y), r, Orientation::CounterClockwise).unwrap()
    }

    fn raw(v: [f64; 4]) -> CircleCoeffs {
        CircleCoeffs::from_array(v, &Tolerances::default()).unwrap()
    }

    fn triangle_lines() -> Triple {
        [
            raw([0.0, 0.0, -1.0, 0.0]),
            raw([0.0, 1.0, 0.0, 0.0]),
            raw([0.0, FRAC_1_SQRT_2, FRAC_1_SQRT_2, -2.0 * SQRT_2]),
        ]
    }

    pub(crate) fn orthogonal_triple() -> Triple {
        [ccw(0.0, 0.0, 1.0), ccw(SQRT_2, 0.0, 1.0), ccw(FRAC_1_SQRT_2, 1.5_f64.sqrt(), 1.0)]
    }

    #[test]
    fn q_examples() {
        let tol = Tolerances::default();
        let k = ccw(0.3, -0.2, 1.7);
        let r = q_pair(&k, &k, &tol);
        assert!(r.q.abs() < 1e-15);
        assert_eq!(r.relation, Relation::Tangent);
        let r = q_pair(&k, &k.reverse(), &tol);
        assert!((r.q - 1.0).abs() < 1e-15);
        assert_eq!(r.relation, Relation::CounterTangent);

        let r = q_pair(&ccw(0.0, 0.0, 1.0), &ccw(0.0, 0.0, 2.0), &tol);
        assert_eq!(r.q, -0.125);
        assert_eq!(r.relation, Relation::Disjoint);
        assert!((r.inversive_distance.unwrap().cosh() - 1.25).abs() < 1e-14);

        let r = q_pair(&ccw(0.0, 0.0, 1.0), &ccw(SQRT_2, 0.0, 1.0), &tol);
        assert!((r.q - 0.5).abs() < 1e-15);
        assert_eq!(r.relation, Relation::Intersecting);
        assert!(r.inversive_distance.is_none());
        assert!((4.0 * r.q * (1.0 - r.q) - (PI / 2.0).sin().powi(2)).abs() < 1e-15);
    }

    #[test]
    fn q_matches_center_distance_form() {
        let (k1, k2) = (ccw(0.5, 1.0, 0.7), CircleCoeffs::from_center_radius(Point::new(-2.0, 3.0), 1.3, Orientation::Clockwise).unwrap());
        let (a1, a2) = (k1.a(), k2.a());
        let l = k1.center().unwrap().distance(&k2.center().unwrap());
        let expected = ((a1 * a2 * l).powi(2) - (a2 - a1).powi(2)) / (4.0 * a1 * a2);
        assert!((q_value(&k1, &k2) - expected).abs() < 1e-13);
    }

    #[test]
    fn existence_examples() {
        let tol = Tolerances::default();
        assert_eq!(pair_exists(1.0, 0.5, -0.125, &tol), PairExistence::YesNoRadicalAxis);
        assert_eq!(pair_exists(0.0, 0.0, -0.5, &tol), PairExistence::No);
        assert_eq!(pair_exists(0.0, 0.0, 0.3, &tol), PairExistence::YesNoRadicalAxis);
        assert_eq!(pair_exists(1.0, 1.0, 1.0, &tol), PairExistence::Yes);
        assert_eq!(pair_exists(1.0, 1.0, -0.5, &tol), PairExistence::No);
    }

    #[test]
    fn minors_of_triangle_lines() {
        let m = minors(&triangle_lines());
        assert!((m.bc - 1.0).abs() < 1e-15);
        assert!((m.d1 - 2.0 * SQRT_2).abs() < 1e-14);
        assert_eq!(m.d4, 0.0);
        assert!((m.cd + 2.0 * SQRT_2).abs() < 1e-14);
        assert!((m.bd + 2.0 * SQRT_2).abs() < 1e-14);
    }

    #[test]
    fn repeated_rows_kill_minors() {
        let k = ccw(1.0, 2.0, 0.5);
        let m = minors(&[k, k, ccw(-1.0, 0.0, 2.0)]);
        for x in [m.d1, m.d2, m.d3, m.d4, m.bc, m.ab, m.ac, m.bd, m.cd] {
            assert_eq!(x, 0.0);
        }
    }

    #[test]
    fn summary_examples() {
        let s = triple_summary(&orthogonal_triple());
        for q in s.q {
            assert!((q - 0.5).abs() < 1e-14);
        }
        assert!((s.u + 0.25).abs() < 1e-13);

        let s = triple_summary(&triangle_lines());
        assert!(s.u.abs() < 1e-14);

        let h = 3.0_f64.sqrt();
        let t = [ccw(0.0, 0.0, 1.0), ccw(2.0, 0.0, 1.0), ccw(1.0, h, 1.0)];
        let s = triple_summary(&t);
        for q in s.q {
            assert!((q - 1.0).abs() < 1e-14);
        }
        assert!((s.u - 1.0).abs() < 1e-13);
        assert!((s.v + 3.0).abs() < 1e-13);
    }

    #[test]
    fn radical_examples() {
        let tol = Tolerances::default();
        let t = [ccw(0.0, 0.0, 1.0), ccw(3.0, 0.0, 1.0), ccw(0.0, 3.0, 1.0)];
        let r = radical_center_axis(&t, &tol);
        let c = r.center.unwrap();
        assert!((c.x - 1.5).abs() < 1e-14 && (c.y - 1.5).abs() < 1e-14);
        let axis = r.axes[0].unwrap();
        assert!(axis.is_line());
        assert!(axis.evaluate(Point::new(1.5, 0.0)).abs() < 1e-14);
        assert!(axis.evaluate(Point::new(1.5, 7.0)).abs() < 1e-13);
        assert!(radical_center(&triangle_lines(), &tol).is_none());
        assert_eq!(
            radical_axis(&ccw(0.0, 0.0, 1.0), &ccw(0.0, 0.0, 2.0), &tol),
            Err(Error::DegeneratePair { first: 0, second: 1 })
        );
    }

    #[test]
    fn similarity_examples() {
        let tol = Tolerances::default();
        let s = similarity(&[ccw(0.0, 0.0, 1.0), ccw(3.0, 0.0, 1.0), ccw(0.0, 3.0, 1.0)], &tol);
        assert!(s.centers.iter().all(Option::is_none));
        assert!(s.axis.is_none());
        assert!(s.g.abs() < 1e-14);

        let s = similarity(&[ccw(0.0, 0.0, 1.0), ccw(3.0, 0.0, 0.5), ccw(0.0, 4.0, 2.0)], &tol);
        let m12 = s.centers[0].unwrap();
        assert!((m12.x - 6.0).abs() < 1e-13 && m12.y.abs() < 1e-13);
        let axis = s.axis.unwrap();
        for c in s.centers {
            assert!(axis.evaluate(c.unwrap()).abs() < 1e-12);
        }
    }

    #[test]
    fn classification_examples() {
        let tol = Tolerances::default();
        assert_eq!(classify_triple(&triangle_lines(), &tol), ConfigClass::ThreeLines);
        assert_eq!(classify_triple(&orthogonal_triple(), &tol), ConfigClass::Generic);
        let common = [(0.4, 0.8), (2.0, -0.5), (-1.3, 1.7)]
            .map(|(tau, k)| CircleCoeffs::from_element(&CurvatureElement::new(0.7, -0.3, tau, k)).unwrap());
        assert_eq!(classify_triple(&common, &tol), ConfigClass::SingleCommonPoint);

        let k = ccw(0.0, 0.0, 1.0);
        assert_eq!(
            classify_triple(&[k, ccw(5.0, 0.0, 1.0), k.reverse()], &tol),
            ConfigClass::CoincidentPair {
                kind: Coincidence::ReversedIdentical,
                first: 0,
                second: 2
            }
        );
        let concentric = [ccw(0.0, 0.0, 1.0), ccw(0.0, 0.0, 2.0), ccw(0.0, 0.0, 3.0)];
        assert_eq!(classify_triple(&concentric, &tol), ConfigClass::Pencil(PencilKind::Hyperbolic));
        // three circles through (0, 1) and (0, -1)
        let elliptic = [ccw(0.0, 0.0, 1.0), ccw(1.0, 0.0, SQRT_2), ccw(-2.0, 0.0, 5.0_f64.sqrt())];
        assert_eq!(classify_triple(&elliptic, &tol), ConfigClass::Pencil(PencilKind::Elliptic));
        // three circles tangent to the y axis at the origin
        let parabolic = [ccw(1.0, 0.0, 1.0), ccw(2.0, 0.0, 2.0), ccw(-3.0, 0.0, 3.0)];
        assert_eq!(classify_triple(&parabolic, &tol), ConfigClass::Pencil(PencilKind::Parabolic));
    }

    #[test]
    fn products_list() {
        let p = class_products([2.0, 3.0, 4.0]);
        assert_eq!(p, [24.0, 9.0, 8.0, 12.0]);
    }
}
