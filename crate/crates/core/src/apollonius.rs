//! The oriented problem of Apollonius: circles tangent to three given
//! oriented circles, with the degenerate `U = 0` configurations, the
//! classical enumeration over reversals, and Descartes' special case.

use std::fmt;

use nalgebra::Vector3;

use crate::circle::{CircleCoeffs, Coincidence, LinearElement, Point};
use crate::error::{Error, Result};
use crate::invariants::{
    class_products, classify_with_summary, q_value, radical_center_of, triple_summary, ConfigClass, PencilKind,
    Triple, TripleSummary,
};
use crate::tolerance::{coeff_scale, q_scale, Tolerances};
use crate::transforms::{pencil_member, TangentFamily};

/// Why a solution set is empty or carries a family.
#[derive(Debug, Clone, PartialEq)]
pub enum Diagnostic {
    /// The discriminant of the curvature equation is negative.
    NegativeDiscriminant(f64),
    /// `V` vanishes in the single-common-point branch.
    VanishingV,
    /// A candidate failed verification or could not be normalized.
    Failure(Error),
    Note(&'static str),
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Diagnostic::NegativeDiscriminant(d) => write!(f, "negative discriminant {d:e}"),
            Diagnostic::VanishingV => f.write_str("V vanishes: no finite solution"),
            Diagnostic::Failure(e) => write!(f, "{e}"),
            Diagnostic::Note(s) => f.write_str(s),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyKind {
    PencilMembers,
    TangentTwoFamily,
    ConcentricFamily,
    AngleTwoFamily,
}

/// Circles meeting two given circles at a common directed angle. With one
/// curvature fixed there are at most two of them.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AngleTwoFamily {
    pub first: CircleCoeffs,
    pub second: CircleCoeffs,
    pub cos_psi: f64,
}

impl AngleTwoFamily {
    /// Members with curvature `a0`.
    pub fn members(&self, a0: f64, tol: &Tolerances) -> Result<Vec<CircleCoeffs>> {
        let row = |k: &CircleCoeffs| Vector3::new(2.0 * k.b(), 2.0 * k.c(), -k.a());
        let (r1, r2) = (row(&self.first), row(&self.second));
        let rhs = [2.0 * self.cos_psi + self.first.d() * a0, 2.0 * self.cos_psi + self.second.d() * a0];
        let n = r1.cross(&r2);
        let det = n.norm_squared();
        let scale = coeff_scale(&[self.first, self.second]);
        if tol.is_zero(det, scale.powi(4)) {
            return Err(Error::UnderdeterminedFamily("the two rows are dependent"));
        }
        let (g11, g12, g22) = (r1.dot(&r1), r1.dot(&r2), r2.dot(&r2));
        let l1 = (g22 * rhs[0] - g12 * rhs[1]) / det;
        let l2 = (g11 * rhs[1] - g12 * rhs[0]) / det;
        let p = r1 * l1 + r2 * l2;

        let alpha = n.x * n.x + n.y * n.y;
        let beta = 2.0 * (p.x * n.x + p.y * n.y) - a0 * n.z;
        let gamma = p.x * p.x + p.y * p.y - a0 * p.z - 1.0;
        let roots = real_roots(alpha, beta, gamma, tol);
        roots
            .into_iter()
            .map(|s| {
                let y = p + n * s;
                CircleCoeffs::normalize(a0, y.x, y.y, y.z)
            })
            .collect()
    }
}

/// Real roots of `alpha s^2 + beta s + gamma`, degenerating to the linear
/// case; a double root is reported once.
fn real_roots(alpha: f64, beta: f64, gamma: f64, tol: &Tolerances) -> Vec<f64> {
    let scale = alpha.abs().max(beta.abs()).max(gamma.abs());
    if tol.is_zero(alpha, scale * tol.zero) || alpha == 0.0 {
        return if beta == 0.0 { vec![] } else { vec![-gamma / beta] };
    }
    let disc = beta * beta - 4.0 * alpha * gamma;
    if tol.is_zero(disc, beta * beta + (4.0 * alpha * gamma).abs()) {
        return vec![-beta / (2.0 * alpha)];
    }
    if disc < 0.0 {
        return vec![];
    }
    let q = -0.5 * (beta + beta.signum() * disc.sqrt());
    let mut r = vec![q / alpha, if q == 0.0 { 0.0 } else { gamma / q }];
    r.sort_by(|x, y| y.total_cmp(x));
    r
}

#[derive(Debug, Clone, PartialEq)]
pub enum Family {
    /// Every member of the pencil spanned by `base`.
    PencilMembers { base: [CircleCoeffs; 2] },
    /// Circles tangent to two given ones.
    TangentTwoFamily(TangentFamily),
    /// Circles centred at `center`.
    ConcentricFamily { center: Point },
    AngleTwoFamily(AngleTwoFamily),
}

impl Family {
    pub fn kind(&self) -> FamilyKind {
        match self {
            Family::PencilMembers { .. } => FamilyKind::PencilMembers,
            Family::TangentTwoFamily(_) => FamilyKind::TangentTwoFamily,
            Family::ConcentricFamily { .. } => FamilyKind::ConcentricFamily,
            Family::AngleTwoFamily(_) => FamilyKind::AngleTwoFamily,
        }
    }

    /// Members at the given parameters: pencil parameter `t`, tangent-family
    /// angle or offset, radius of a concentric member, or curvature `a0`.
    /// Parameters at a pole are skipped.
    pub fn sample(&self, params: &[f64], tol: &Tolerances) -> Vec<CircleCoeffs> {
        let mut out = Vec::new();
        for &p in params {
            match self {
                Family::PencilMembers { base } => out.extend(pencil_member(&base[0], &base[1], p, tol).ok()),
                Family::TangentTwoFamily(fam) => out.extend(fam.member(p).ok()),
                Family::ConcentricFamily { center } => out.extend(
                    CircleCoeffs::from_center_radius(*center, p, crate::circle::Orientation::CounterClockwise).ok(),
                ),
                Family::AngleTwoFamily(fam) => out.extend(fam.members(p, tol).unwrap_or_default()),
            }
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SolutionSet {
    pub class: ConfigClass,
    /// At most two circles, the `+` branch of the radical first.
    pub solutions: Vec<CircleCoeffs>,
    /// Present only for degenerate classes.
    pub family: Option<Family>,
    pub diagnostic: Option<Diagnostic>,
}

impl SolutionSet {
    pub(crate) fn new(class: ConfigClass, solutions: Vec<CircleCoeffs>) -> Self {
        Self {
            class,
            solutions,
            family: None,
            diagnostic: None,
        }
    }

    pub(crate) fn none(class: ConfigClass, diagnostic: Diagnostic) -> Self {
        Self {
            class,
            solutions: Vec::new(),
            family: None,
            diagnostic: Some(diagnostic),
        }
    }

    pub(crate) fn family(class: ConfigClass, family: Family, note: &'static str) -> Self {
        Self {
            class,
            solutions: Vec::new(),
            family: Some(family),
            diagnostic: Some(Diagnostic::Note(note)),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.solutions.is_empty() && self.family.is_none()
    }

    pub fn reversed(&self) -> Self {
        let mut out = self.clone();
        out.solutions = self.solutions.iter().map(CircleCoeffs::reverse).collect();
        out
    }
}

/// Largest `|Q(sol, k_i) - (1 - cos)/2|`, the tangency residual at `cos = 1`.
pub fn angle_residual(sol: &CircleCoeffs, t: &Triple, cos_psi: f64) -> f64 {
    let target = 0.5 * (1.0 - cos_psi);
    t.iter().map(|k| (q_value(sol, k) - target).abs()).fold(0.0, f64::max)
}

pub(crate) fn verify(sol: CircleCoeffs, t: &Triple, cos_psi: f64, tol: &Tolerances) -> Result<CircleCoeffs> {
    let residual = angle_residual(&sol, t, cos_psi);
    let limit = tol.residual * coeff_scale(&[sol]) * coeff_scale(t);
    if residual <= limit {
        Ok(sol)
    } else {
        Err(Error::ResidualTooLarge { residual, limit })
    }
}

/// Snaps a vanishing curvature to an exact line, then renormalizes.
fn finalize(v: [f64; 4], s: &TripleSummary, tol: &Tolerances) -> Result<CircleCoeffs> {
    let a = if tol.is_zero(v[0], s.coeff_scale) { 0.0 } else { v[0] };
    CircleCoeffs::normalize(a, v[1], v[2], v[3])
}

/// Both radical branches `(cos sum_i K_i v_j +- slot sqrt(D))/U`. `disc` is
/// `D`; a vanishing `D` yields one double root.
pub(crate) fn radical_branches(
    t: &Triple,
    s: &TripleSummary,
    cos_psi: f64,
    disc: f64,
    disc_scale: f64,
    signs: &[f64],
    tol: &Tolerances,
) -> std::result::Result<Vec<CircleCoeffs>, Diagnostic> {
    let double = tol.is_zero(disc, disc_scale);
    if disc < 0.0 && !double {
        return Err(Diagnostic::NegativeDiscriminant(disc));
    }
    let root = if double { 0.0 } else { disc.sqrt() };
    let sigma = s.cyclic_combination(t);
    let slot = s.slot_minors();
    let signs: &[f64] = if double { &[1.0] } else { signs };
    signs
        .iter()
        .map(|sign| {
            let v: [f64; 4] = std::array::from_fn(|n| (cos_psi * sigma[n] + sign * slot[n] * root) / s.u);
            finalize(v, s, tol).and_then(|k| verify(k, t, cos_psi, tol))
        })
        .collect::<Result<Vec<_>>>()
        .map_err(Diagnostic::Failure)
}

/// Lone solution of a triple with a single common point: `a0` from the
/// linear curvature equation, the rest by back substitution.
pub(crate) fn common_point_solution(
    t: &Triple,
    s: &TripleSummary,
    cos_psi: f64,
    tol: &Tolerances,
) -> std::result::Result<CircleCoeffs, Diagnostic> {
    let m = &s.minors;
    if tol.is_zero(s.v * cos_psi, s.coeff_scale * s.q_scale * s.q_scale) {
        return Err(Diagnostic::VanishingV);
    }
    let w_prime = s.g * cos_psi * cos_psi - m.d4 * m.d4 / 4.0;
    let a0 = w_prime / (2.0 * s.v * cos_psi);
    let v = [
        a0,
        (a0 * m.d2 - m.ac * cos_psi) / m.d4,
        (a0 * m.d3 + m.ab * cos_psi) / m.d4,
        (a0 * m.d1 - 2.0 * m.bc * cos_psi) / m.d4,
    ];
    finalize(v, s, tol)
        .and_then(|k| verify(k, t, cos_psi, tol))
        .map_err(Diagnostic::Failure)
}

/// Lone circle meeting three lines at the angle `acos(cos_psi)`.
pub(crate) fn three_lines_solution(
    t: &Triple,
    s: &TripleSummary,
    cos_psi: f64,
    tol: &Tolerances,
) -> std::result::Result<CircleCoeffs, Diagnostic> {
    let m = &s.minors;
    let sc = s.coeff_scale;
    if tol.is_zero(m.d1, sc.powi(3)) {
        return Err(Diagnostic::Note("the lines are concurrent or parallel"));
    }
    if tol.is_zero(m.bc, sc.powi(2)) {
        return Err(Diagnostic::Note("two lines are parallel and equally directed"));
    }
    if tol.is_zero(cos_psi, 1.0) {
        return Err(Diagnostic::Note("a right angle needs an infinite radius"));
    }
    let a0 = 2.0 * m.bc * cos_psi / m.d1;
    let b0 = -m.cd * cos_psi / m.d1;
    let c0 = m.bd * cos_psi / m.d1;
    let d0 = (b0 * b0 + c0 * c0 - 1.0) / a0;
    CircleCoeffs::normalize(a0, b0, c0, d0)
        .and_then(|k| verify(k, t, cos_psi, tol))
        .map_err(Diagnostic::Failure)
}

/// Tangent circles of a triple of directed lines.
pub fn solve_three_lines(t: &Triple, tol: &Tolerances) -> SolutionSet {
    let s = triple_summary(t);
    three_lines_with(t, &s, tol)
}

fn three_lines_with(t: &Triple, s: &TripleSummary, tol: &Tolerances) -> SolutionSet {
    let class = ConfigClass::ThreeLines;
    match three_lines_solution(t, s, 1.0, tol) {
        Ok(k) => SolutionSet::new(class, vec![k]),
        Err(d) => {
            let parallel = s.q.iter().all(|q| tol.q_is_zero(*q, 1.0));
            if parallel && t[0].coincidence(&t[1], tol) == Coincidence::Distinct {
                SolutionSet::family(
                    class,
                    Family::PencilMembers { base: [t[0], t[1]] },
                    "every equally directed parallel line is tangent",
                )
            } else {
                SolutionSet::none(class, d)
            }
        }
    }
}

/// The two branches for a triple with `U != 0`.
pub fn solve_general(t: &Triple, tol: &Tolerances) -> Result<SolutionSet> {
    let s = triple_summary(t);
    general_with(t, &s, ConfigClass::Generic, tol)
}

fn general_with(t: &Triple, s: &TripleSummary, class: ConfigClass, tol: &Tolerances) -> Result<SolutionSet> {
    match radical_branches(t, s, 1.0, s.q_product(), s.cubic_q_scale(), &[1.0, -1.0], tol) {
        Ok(sols) => Ok(SolutionSet::new(class, sols)),
        Err(Diagnostic::Failure(e)) => Err(e),
        Err(d) => Ok(SolutionSet::none(class, d)),
    }
}

/// The lone solution when the three circles share one point.
pub fn solve_common_point(t: &Triple, tol: &Tolerances) -> SolutionSet {
    let s = triple_summary(t);
    common_point_with(t, &s, tol)
}

fn common_point_with(t: &Triple, s: &TripleSummary, tol: &Tolerances) -> SolutionSet {
    let class = ConfigClass::SingleCommonPoint;
    if radical_center_of(s, tol).is_none() {
        return SolutionSet::none(class, Diagnostic::Note("no finite common point"));
    }
    match common_point_solution(t, s, 1.0, tol) {
        Ok(k) => SolutionSet::new(class, vec![k]),
        Err(d) => SolutionSet::none(class, d),
    }
}

fn pencil_with(t: &Triple, s: &TripleSummary, kind: PencilKind, tol: &Tolerances) -> SolutionSet {
    let class = ConfigClass::Pencil(kind);
    match kind {
        PencilKind::Parabolic if s.q.iter().all(|q| tol.q_is_zero(*q, s.coeff_scale.powi(2))) => SolutionSet::family(
            class,
            Family::PencilMembers { base: [t[0], t[1]] },
            "all three circles touch at one point with a common tangent direction",
        ),
        PencilKind::Parabolic => SolutionSet::none(class, Diagnostic::Note("tangent pencil with a counter-tangent pair")),
        PencilKind::Elliptic => SolutionSet::none(class, Diagnostic::Note("circles through two common points")),
        PencilKind::Hyperbolic => SolutionSet::none(class, Diagnostic::Note("concentric after inversion")),
    }
}

/// Solves the oriented problem on any triple, dispatching on the
/// configuration class. An empty set means no tangent circle exists;
/// verification failures are reported in the diagnostic.
pub fn solve_oriented(t: &Triple, tol: &Tolerances) -> SolutionSet {
    let s = triple_summary(t);
    let class = classify_with_summary(t, &s, tol);
    match class {
        ConfigClass::Generic => general_with(t, &s, class, tol).unwrap_or_else(|e| SolutionSet::none(class, Diagnostic::Failure(e))),
        ConfigClass::ThreeLines => three_lines_with(t, &s, tol),
        ConfigClass::SingleCommonPoint => common_point_with(t, &s, tol),
        ConfigClass::Pencil(kind) => pencil_with(t, &s, kind, tol),
        ConfigClass::CoincidentPair {
            kind: Coincidence::Identical,
            first,
            second,
        } => {
            let third = 3 - first - second;
            match TangentFamily::new(&t[first], &t[third], tol) {
                Ok(fam) => SolutionSet::family(
                    class,
                    Family::TangentTwoFamily(fam),
                    "every circle tangent to the repeated circle and the third one",
                ),
                Err(e) => SolutionSet::none(class, Diagnostic::Failure(e)),
            }
        }
        ConfigClass::CoincidentPair { .. } => SolutionSet::none(
            class,
            Diagnostic::Note("a circle tangent to one of a reversed pair is counter-tangent to the other"),
        ),
    }
}

/// Curvatures of the two circles tangent to three pairwise counter-tangent
/// circles, larger first.
pub fn descartes_curvatures(t: &Triple, tol: &Tolerances) -> Result<[f64; 2]> {
    let s = triple_summary(t);
    let scale = s.coeff_scale.powi(2);
    if s.q.iter().any(|q| !tol.q_is_zero(q - 1.0, scale)) {
        return Err(Error::NotDescartesConfig { q: s.q });
    }
    let [a1, a2, a3] = t.map(|k| k.a());
    let sum = a1 + a2 + a3;
    let radicand = (a1 * a2 + a2 * a3 + a3 * a1).max(0.0);
    let r = 2.0 * radicand.sqrt();
    Ok([-sum + r, -sum - r])
}

/// The identity class and the three single reversals.
pub const CLASS_LABELS: [&str; 4] = ["identity", "reverse 1", "reverse 2", "reverse 3"];

/// Triple with circle `j` reversed (`None` for the identity class).
pub fn reversal_class(t: &Triple, j: Option<usize>) -> Triple {
    let mut out = *t;
    if let Some(j) = j {
        out[j] = out[j].reverse();
    }
    out
}

#[derive(Debug, Clone, PartialEq)]
pub struct NonOrientedReport {
    /// Identity, then circle 1, 2, 3 reversed.
    pub per_class: [SolutionSet; 4],
    /// Solutions of all classes with reverses identified.
    pub distinct_unoriented: Vec<CircleCoeffs>,
    /// `Q1 Q2 Q3, (1-Q1) Q2 (1-Q3), (1-Q1)(1-Q2) Q3, Q1 (1-Q2)(1-Q3)`.
    pub products: [f64; 4],
    /// `Q1, Q2, Q3` of the identity class.
    pub q: [f64; 3],
}

impl NonOrientedReport {
    /// Expected solution count per class from the sign of its product.
    pub fn predicted_counts(&self, tol: &Tolerances) -> [usize; 4] {
        let [q1, q2, q3] = self.q;
        let scale = q_scale(&[q1, q2, q3, 1.0 - q1, 1.0 - q2, 1.0 - q3]).powi(3);
        self.products.map(|p| count_for_product(p, scale, tol))
    }
}

/// `2` for a positive product, `1` for zero and `0` for negative.
pub fn count_for_product(p: f64, scale: f64, tol: &Tolerances) -> usize {
    if tol.is_zero(p, scale) {
        1
    } else if p > 0.0 {
        2
    } else {
        0
    }
}

/// Keeps the first of every group of circles equal up to reversal.
pub fn dedup_unoriented(circles: impl IntoIterator<Item = CircleCoeffs>, tol: &Tolerances) -> Vec<CircleCoeffs> {
    let mut out: Vec<CircleCoeffs> = Vec::new();
    for k in circles {
        let dup = out
            .iter()
            .any(|o| o.coeff_distance(&k, true) <= tol.coeff * coeff_scale(&[*o, k]));
        if !dup {
            out.push(k);
        }
    }
    out
}

/// Runs the oriented solver on the identity class and on each single
/// reversal; reversing two circles only reproduces reverses.
pub fn enumerate_nonoriented(t: &Triple, tol: &Tolerances) -> NonOrientedReport {
    let per_class = [None, Some(0), Some(1), Some(2)].map(|j| solve_oriented(&reversal_class(t, j), tol));
    let distinct_unoriented = dedup_unoriented(per_class.iter().flat_map(|s| s.solutions.iter().copied()), tol);
    let q = triple_summary(t).q;
    NonOrientedReport {
        per_class,
        distinct_unoriented,
        products: class_products(q),
        q,
    }
}

/// Common linear element of two tangent circles.
pub fn tangency_point(k0: &CircleCoeffs, ki: &CircleCoeffs, tol: &Tolerances) -> Result<LinearElement> {
    let scale = coeff_scale(&[*k0, *ki]);
    let q = q_value(k0, ki);
    if q.abs() > tol.residual * scale * scale {
        return Err(Error::NotTangent(q));
    }
    let da = ki.a() - k0.a();
    if tol.is_zero(da, scale) {
        return Err(Error::NoFiniteElement);
    }
    let x = (k0.b() - ki.b()) / da;
    let y = (k0.c() - ki.c()) / da;
    let sin = k0.b() + k0.a() * x;
    let cos = -k0.c() - k0.a() * y;
    Ok(LinearElement::new(x, y, sin.atan2(cos)))
}
