//! Circles meeting three given circles at one common directed angle `psi0`,
//! for any real `cos psi0` (values beyond one in magnitude stand for
//! imaginary angles).

use nalgebra::{Matrix2, Matrix4, Vector4};

use crate::apollonius::{
    common_point_solution, radical_branches, solve_oriented, three_lines_solution, AngleTwoFamily, Diagnostic,
    Family, SolutionSet,
};
use crate::circle::{CircleCoeffs, Coincidence, Point};
use crate::error::{Error, Result};
use crate::invariants::{classify_with_summary, triple_summary, ConfigClass, Triple, TripleSummary, PAIRS};
use crate::tolerance::Tolerances;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Branch {
    Plus,
    Minus,
    #[default]
    Both,
}

impl Branch {
    fn signs(self) -> &'static [f64] {
        match self {
            Branch::Plus => &[1.0],
            Branch::Minus => &[-1.0],
            Branch::Both => &[1.0, -1.0],
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IsogonalQuery {
    pub cos_psi0: f64,
    pub branch: Branch,
}

impl IsogonalQuery {
    pub fn new(cos_psi0: f64, branch: Branch) -> Result<Self> {
        if !cos_psi0.is_finite() {
            return Err(Error::NonFinite("cos_psi0"));
        }
        Ok(Self { cos_psi0, branch })
    }

    pub fn both(cos_psi0: f64) -> Result<Self> {
        Self::new(cos_psi0, Branch::Both)
    }
}

/// `D = U (1 - cos^2)/4 + Q1 Q2 Q3 cos^2`.
pub fn isogonal_discriminant(s: &TripleSummary, cos_psi0: f64) -> f64 {
    let c2 = cos_psi0 * cos_psi0;
    s.u * (1.0 - c2) / 4.0 + s.q_product() * c2
}

pub fn solve_isogonal(t: &Triple, query: &IsogonalQuery, tol: &Tolerances) -> Result<SolutionSet> {
    let c = query.cos_psi0;
    if !c.is_finite() {
        return Err(Error::NonFinite("cos_psi0"));
    }
    let s = triple_summary(t);
    let class = classify_with_summary(t, &s, tol);
    let right_angle = tol.is_zero(c, 1.0);
    let tangency = tol.is_zero(c - 1.0, 1.0);
    Ok(match class {
        ConfigClass::Generic => {
            let disc = isogonal_discriminant(&s, c);
            let scale = s.cubic_q_scale() * c.abs().max(1.0).powi(2);
            match radical_branches(t, &s, c, disc, scale, query.branch.signs(), tol) {
                Ok(sols) => SolutionSet::new(class, sols),
                Err(d) => SolutionSet::none(class, d),
            }
        }
        ConfigClass::ThreeLines => three_lines_with(t, &s, c, tol),
        ConfigClass::SingleCommonPoint => {
            if right_angle {
                return Err(Error::CosPsiZeroDegenerate);
            }
            match common_point_solution(t, &s, c, tol) {
                Ok(k) => SolutionSet::new(class, vec![k]),
                Err(d) => SolutionSet::none(class, d),
            }
        }
        ConfigClass::Pencil(_) if right_angle => match orthogonal_pencil(t, tol) {
            Ok(base) => SolutionSet::family(class, Family::PencilMembers { base }, "the pencil orthogonal to the given one"),
            Err(e) => SolutionSet::none(class, Diagnostic::Failure(e)),
        },
        ConfigClass::Pencil(_) | ConfigClass::CoincidentPair { kind: Coincidence::Identical, .. } if tangency => {
            solve_oriented(t, tol)
        }
        ConfigClass::Pencil(_) => {
            SolutionSet::none(class, Diagnostic::Note("only right angles are possible for a pencil"))
        }
        ConfigClass::CoincidentPair { kind, first, second } => {
            let third = 3 - first - second;
            if kind == Coincidence::Identical || right_angle {
                let fam = AngleTwoFamily {
                    first: t[first],
                    second: t[third],
                    cos_psi: if right_angle { 0.0 } else { c },
                };
                SolutionSet::family(class, Family::AngleTwoFamily(fam), "one-parameter family indexed by curvature")
            } else {
                SolutionSet::none(
                    class,
                    Diagnostic::Note("a reversed pair admits only right angles"),
                )
            }
        }
    })
}

/// Runs [`solve_isogonal`] for every listed `cos psi0`.
pub fn isogonal_sweep(
    t: &Triple,
    cos_list: &[f64],
    branch: Branch,
    tol: &Tolerances,
) -> Result<Vec<(f64, SolutionSet)>> {
    cos_list
        .iter()
        .map(|&c| Ok((c, solve_isogonal(t, &IsogonalQuery::new(c, branch)?, tol)?)))
        .collect()
}

/// The lone circle meeting three lines at the angle; all such circles share
/// one centre, which is attached as a concentric family.
pub fn isogonal_three_lines(t: &Triple, cos_psi0: f64, tol: &Tolerances) -> SolutionSet {
    let s = triple_summary(t);
    three_lines_with(t, &s, cos_psi0, tol)
}

fn three_lines_with(t: &Triple, s: &TripleSummary, cos_psi0: f64, tol: &Tolerances) -> SolutionSet {
    let class = ConfigClass::ThreeLines;
    let m = &s.minors;
    let center = (!tol.is_zero(m.bc, s.coeff_scale.powi(2)) && !tol.is_zero(m.d1, s.minor_scale()))
        .then(|| Point::new(m.cd / (2.0 * m.bc), -m.bd / (2.0 * m.bc)));
    let mut out = match three_lines_solution(t, s, cos_psi0, tol) {
        Ok(k) => SolutionSet::new(class, vec![k]),
        Err(d) => SolutionSet::none(class, d),
    };
    out.family = center.map(|center| Family::ConcentricFamily { center });
    out
}

/// Two normalized circles spanning the pencil orthogonal to a triple of
/// rank two.
pub fn orthogonal_pencil(t: &Triple, tol: &Tolerances) -> Result<[CircleCoeffs; 2]> {
    let mut m = Matrix4::zeros();
    for (i, k) in t.iter().enumerate() {
        let r = Vector4::new(k.d(), -2.0 * k.b(), -2.0 * k.c(), k.a());
        m.set_row(i, &r.transpose());
    }
    let eig = (m.transpose() * m).symmetric_eigen();
    let mut order = [0usize, 1, 2, 3];
    order.sort_by(|&i, &j| eig.eigenvalues[i].total_cmp(&eig.eigenvalues[j]));
    let largest = eig.eigenvalues[order[3]].abs().max(1.0);
    if !tol.is_zero(eig.eigenvalues[order[1]], largest) {
        return Err(Error::UnderdeterminedFamily("the rows do not have rank two"));
    }
    let n1: Vector4<f64> = eig.eigenvectors.column(order[0]).into();
    let n2: Vector4<f64> = eig.eigenvectors.column(order[1]).into();

    // normalization form b b' + c c' - (a d' + d a')/2
    let form = |x: &Vector4<f64>, y: &Vector4<f64>| x[1] * y[1] + x[2] * y[2] - 0.5 * (x[0] * y[3] + x[3] * y[0]);
    let g = Matrix2::new(form(&n1, &n1), form(&n1, &n2), form(&n1, &n2), form(&n2, &n2));
    let e = g.symmetric_eigen();
    let (hi, lo) = if e.eigenvalues[0] >= e.eigenvalues[1] { (0, 1) } else { (1, 0) };
    let (lh, ll) = (e.eigenvalues[hi], e.eigenvalues[lo]);
    if lh <= 0.0 {
        return Err(Error::UnderdeterminedFamily("no real circle in the orthogonal span"));
    }
    let combo = |w: nalgebra::VectorView2<f64>| n1 * w[0] + n2 * w[1];
    let u = combo(e.eigenvectors.column(hi)) / lh.sqrt();
    let w = combo(e.eigenvectors.column(lo));
    let second = if tol.is_zero(ll, lh) {
        u + w
    } else if ll > 0.0 {
        w / ll.sqrt()
    } else {
        u * 2.0_f64.sqrt() + w / (-ll).sqrt()
    };
    let to_circle = |v: Vector4<f64>| {
        let a = if tol.is_zero(v[0], 1.0) { 0.0 } else { v[0] };
        CircleCoeffs::normalize(a, v[1], v[2], v[3])
    };
    Ok([to_circle(u)?, to_circle(second)?])
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolutionPencil {
    Hyperbolic,
    Parabolic,
    Elliptic,
    Undefined,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PencilGeometry {
    /// `F^2`, a quarter of the squared distance between the common points of
    /// the solution pencil; negative when they are complex.
    pub f_squared: Option<f64>,
    pub pencil_type: SolutionPencil,
}

pub fn pencil_type(t: &Triple, tol: &Tolerances) -> PencilGeometry {
    let s = triple_summary(t);
    if s.g_is_zero(tol) {
        return PencilGeometry {
            f_squared: None,
            pencil_type: SolutionPencil::Undefined,
        };
    }
    let f2 = (s.u - 4.0 * s.q_product()) / (4.0 * s.g);
    let pencil_type = if tol.is_zero(f2, 1.0) {
        SolutionPencil::Parabolic
    } else if f2 > 0.0 {
        SolutionPencil::Elliptic
    } else {
        SolutionPencil::Hyperbolic
    };
    PencilGeometry {
        f_squared: Some(f2),
        pencil_type,
    }
}

/// `(c1/c2 + c2/c1)/2`, the cosine of the angle between the solutions at
/// `cos psi0 = c1` and `c2` for a triple with a single common point.
pub fn cross_angle(cos_psi1: f64, cos_psi2: f64) -> Result<f64> {
    if !cos_psi1.is_finite() || !cos_psi2.is_finite() {
        return Err(Error::NonFinite("cos_psi"));
    }
    if cos_psi1 == 0.0 || cos_psi2 == 0.0 {
        return Err(Error::ZeroAngleParameter);
    }
    Ok(0.5 * (cos_psi1 / cos_psi2 + cos_psi2 / cos_psi1))
}

/// Configurations whose similarity axis is undefined (`G = 0`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GDegeneracy {
    AllCurvaturesEqual,
    TwoParallelSameDirLines,
    CoincidentCenters,
    TangentEqualCurvaturePair,
    /// `G` vanishes but none of the known configurations is recognized.
    Unrecognized,
    NotDegenerate,
}

pub fn g_degenerate_report(t: &Triple, tol: &Tolerances) -> GDegeneracy {
    let s = triple_summary(t);
    if !s.g_is_zero(tol) {
        return GDegeneracy::NotDegenerate;
    }
    let a = t.map(|k| k.a());
    let sc = s.coeff_scale;
    let q_zero = |i: usize| tol.q_is_zero(s.q[i], sc * sc);
    let eq = |x: f64, y: f64| tol.is_zero(x - y, sc);
    for (n, (i, j)) in PAIRS.iter().enumerate() {
        if q_zero(n) && eq(a[*i], a[*j]) && !tol.is_zero(a[*i], 1.0) {
            return GDegeneracy::TangentEqualCurvaturePair;
        }
    }
    for (n, (i, j)) in PAIRS.iter().enumerate() {
        if q_zero(n) && tol.is_zero(a[*i], 1.0) && tol.is_zero(a[*j], 1.0) {
            return GDegeneracy::TwoParallelSameDirLines;
        }
    }
    if eq(a[0], a[1]) && eq(a[1], a[2]) {
        return GDegeneracy::AllCurvaturesEqual;
    }
    coincident_centers(t, &s, tol)
}

/// Three defined similarity centres at one point, certified by the
/// proportionality of the `Q` values and a vanishing `V`.
fn coincident_centers(t: &Triple, s: &TripleSummary, tol: &Tolerances) -> GDegeneracy {
    let a = t.map(|k| k.a());
    let sc = s.coeff_scale;
    if PAIRS.iter().any(|&(i, j)| tol.is_zero(a[i] - a[j], sc)) {
        return GDegeneracy::Unrecognized;
    }
    let centre = |i: usize, j: usize| {
        let da = a[i] - a[j];
        Point::new(-(t[i].b() - t[j].b()) / da, -(t[i].c() - t[j].c()) / da)
    };
    let m = PAIRS.map(|(i, j)| centre(i, j));
    let reach = 1.0 + m[0].x.abs() + m[0].y.abs();
    let same = m[1..].iter().all(|p| tol.is_zero(p.distance(&m[0]), reach));
    let [q1, q2, q3] = s.q;
    let qs = s.q_scale * sc.powi(3);
    let rel2 = q2 * a[2] * (a[0] - a[1]).powi(2) - q1 * a[0] * (a[1] - a[2]).powi(2);
    let rel3 = q3 * a[2] * (a[0] - a[1]).powi(2) - q1 * a[1] * (a[0] - a[2]).powi(2);
    let v_zero = tol.is_zero(s.v, sc * s.q_scale * s.q_scale);
    if same && tol.is_zero(rel2, qs) && tol.is_zero(rel3, qs) && v_zero {
        GDegeneracy::CoincidentCenters
    } else {
        GDegeneracy::Unrecognized
    }
}
