//! Result documents emitted as JSON.
//!
//! Every number in a document is finite. Quantities that are undefined for a
//! configuration are `null` in an `Option` field or an explicit tag.

use apollonia::apollonius::{angle_residual, CLASS_LABELS};
use apollonia::invariants::{radical_center, similarity};
use apollonia::isogonal::{g_degenerate_report, pencil_type, GDegeneracy, SolutionPencil};
use apollonia::tolerance::coeff_scale;
use apollonia::transforms::FamilyParameter;
use apollonia::{
    tangency_point, CircleCoeffs, Coincidence, ConfigClass, Diagnostic, Error, Family, Orientation, PencilKind, Point,
    SolutionSet, Tolerances, Triple, TripleSummary,
};
use serde::{Deserialize, Serialize};
use thiserror::Error as ThisError;

#[derive(Debug, Clone, PartialEq, ThisError)]
pub enum DocumentError {
    #[error("non-finite value in `{0}`")]
    NonFinite(String),
    #[error("solution {index} of `{set}` fails its residual check: {residual:e} > {limit:e}")]
    Residual {
        set: String,
        index: usize,
        residual: f64,
        limit: f64,
    },
}

fn finite(name: &str, v: f64) -> Result<f64, DocumentError> {
    if v.is_finite() {
        Ok(v)
    } else {
        Err(DocumentError::NonFinite(name.to_string()))
    }
}

fn finite_all<const N: usize>(name: &str, v: [f64; N]) -> Result<[f64; N], DocumentError> {
    for x in v {
        finite(name, x)?;
    }
    Ok(v)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MinorsDto {
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

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SummaryDto {
    pub q: [f64; 3],
    pub minors: MinorsDto,
    pub u: f64,
    pub v: f64,
    pub w: f64,
    pub g: f64,
    pub p_perp: f64,
    /// `Q1 Q2 Q3` and the products of the three single reversals.
    pub class_products: [f64; 4],
}

impl SummaryDto {
    pub fn new(s: &TripleSummary) -> Result<Self, DocumentError> {
        let m = &s.minors;
        let [d1, d2, d3, d4, bc, ab, ac, bd, cd] =
            finite_all("summary.minors", [m.d1, m.d2, m.d3, m.d4, m.bc, m.ab, m.ac, m.bd, m.cd])?;
        Ok(Self {
            q: finite_all("summary.q", s.q)?,
            minors: MinorsDto {
                d1,
                d2,
                d3,
                d4,
                bc,
                ab,
                ac,
                bd,
                cd,
            },
            u: finite("summary.u", s.u)?,
            v: finite("summary.v", s.v)?,
            w: finite("summary.w", s.w)?,
            g: finite("summary.g", s.g)?,
            p_perp: finite("summary.p_perp", s.p_perp)?,
            class_products: finite_all("summary.class_products", apollonia::invariants::class_products(s.q))?,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ClassDto {
    Generic,
    ThreeLines,
    Pencil { pencil: String },
    SingleCommonPoint,
    CoincidentPair { coincidence: String, first: usize, second: usize },
}

impl From<ConfigClass> for ClassDto {
    fn from(c: ConfigClass) -> Self {
        match c {
            ConfigClass::Generic => ClassDto::Generic,
            ConfigClass::ThreeLines => ClassDto::ThreeLines,
            ConfigClass::Pencil(k) => ClassDto::Pencil {
                pencil: match k {
                    PencilKind::Parabolic => "parabolic",
                    PencilKind::Elliptic => "elliptic",
                    PencilKind::Hyperbolic => "hyperbolic",
                }
                .into(),
            },
            ConfigClass::SingleCommonPoint => ClassDto::SingleCommonPoint,
            ConfigClass::CoincidentPair { kind, first, second } => ClassDto::CoincidentPair {
                coincidence: match kind {
                    Coincidence::Identical => "identical",
                    Coincidence::ReversedIdentical => "reversed_identical",
                    Coincidence::Distinct => "distinct",
                }
                .into(),
                first,
                second,
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum TangencyDto {
    Point { x: f64, y: f64, tau: f64 },
    /// The two curves touch only at infinity, as parallel lines do.
    AtInfinity,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SolutionDto {
    pub coeffs: [f64; 4],
    /// `null` for a line.
    pub center: Option<[f64; 2]>,
    pub radius: Option<f64>,
    /// `ccw`, `cw` or `line`.
    pub orientation: String,
    /// Largest `|Q(k0, k_i) - (1 - cos psi0)/2|` over the three inputs.
    pub residual: f64,
    /// One entry per input circle; empty for angle problems.
    pub tangency: Vec<TangencyDto>,
}

impl SolutionDto {
    fn new(k: &CircleCoeffs, t: &Triple, cos_psi: f64, tol: &Tolerances, with_tangency: bool) -> Result<Self, DocumentError> {
        let tangency = if with_tangency {
            t.iter()
                .map(|ki| match tangency_point(k, ki, tol) {
                    Ok(e) => Ok(TangencyDto::Point {
                        x: finite("tangency.x", e.x)?,
                        y: finite("tangency.y", e.y)?,
                        tau: finite("tangency.tau", e.tau)?,
                    }),
                    Err(_) => Ok(TangencyDto::AtInfinity),
                })
                .collect::<Result<_, DocumentError>>()?
        } else {
            Vec::new()
        };
        Ok(Self {
            coeffs: finite_all("solution.coeffs", k.to_array())?,
            center: k.center().map(|c| [c.x, c.y]).map(|c| finite_all("solution.center", c)).transpose()?,
            radius: k.radius().map(|r| finite("solution.radius", r)).transpose()?,
            orientation: orientation_tag(k).into(),
            residual: finite("solution.residual", angle_residual(k, t, cos_psi))?,
            tangency,
        })
    }

    pub fn circle(&self) -> Option<CircleCoeffs> {
        let [a, b, c, d] = self.coeffs;
        CircleCoeffs::normalize(a, b, c, d).ok()
    }
}

pub fn orientation_tag(k: &CircleCoeffs) -> &'static str {
    match k.orientation() {
        Some(Orientation::CounterClockwise) => "ccw",
        Some(Orientation::Clockwise) => "cw",
        None => "line",
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FamilyDto {
    /// Every normalized combination of the two base circles.
    PencilMembers { base: [[f64; 4]; 2] },
    /// Circles tangent to `first` and `second`, indexed by an angle or an
    /// offset parameter.
    TangentTwoFamily { first: [f64; 4], second: [f64; 4], parameter: String },
    ConcentricFamily { center: [f64; 2] },
    /// Circles meeting `first` and `second` at the angle with cosine `cos_psi`.
    AngleTwoFamily { first: [f64; 4], second: [f64; 4], cos_psi: f64 },
}

impl FamilyDto {
    fn new(f: &Family) -> Result<Self, DocumentError> {
        let q = |k: &CircleCoeffs| finite_all("family", k.to_array());
        Ok(match f {
            Family::PencilMembers { base } => FamilyDto::PencilMembers {
                base: [q(&base[0])?, q(&base[1])?],
            },
            Family::TangentTwoFamily(fam) => {
                let (first, second) = fam.pair.circles();
                FamilyDto::TangentTwoFamily {
                    first: q(&first)?,
                    second: q(&second)?,
                    parameter: match fam.parameter() {
                        FamilyParameter::Angle => "angle",
                        FamilyParameter::Offset => "offset",
                    }
                    .into(),
                }
            }
            Family::ConcentricFamily { center } => FamilyDto::ConcentricFamily {
                center: finite_all("family.center", [center.x, center.y])?,
            },
            Family::AngleTwoFamily(fam) => FamilyDto::AngleTwoFamily {
                first: q(&fam.first)?,
                second: q(&fam.second)?,
                cos_psi: finite("family.cos_psi", fam.cos_psi)?,
            },
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum DiagnosticDto {
    NegativeDiscriminant { value: f64 },
    VanishingV,
    Failure { message: String },
    Note { message: String },
}

impl From<&Diagnostic> for DiagnosticDto {
    fn from(d: &Diagnostic) -> Self {
        match d {
            // a non-finite discriminant cannot occur for finite inputs
            Diagnostic::NegativeDiscriminant(v) if v.is_finite() => DiagnosticDto::NegativeDiscriminant { value: *v },
            Diagnostic::NegativeDiscriminant(_) => DiagnosticDto::Failure {
                message: "non-finite discriminant".into(),
            },
            Diagnostic::VanishingV => DiagnosticDto::VanishingV,
            Diagnostic::Failure(e) => DiagnosticDto::Failure { message: e.to_string() },
            Diagnostic::Note(s) => DiagnosticDto::Note { message: (*s).into() },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SolutionSetDto {
    /// `identity`, `reverse 1`, `reverse 2`, `reverse 3` or `cos_psi=<c>`.
    pub label: String,
    /// The triple this set solves, after any reversal.
    pub circles: [[f64; 4]; 3],
    pub class: ClassDto,
    /// Present for angle problems; `1` for tangency.
    pub cos_psi: f64,
    /// Count predicted by the sign of the class product, for reversal classes.
    pub predicted_count: Option<usize>,
    pub solutions: Vec<SolutionDto>,
    pub family: Option<FamilyDto>,
    pub diagnostic: Option<DiagnosticDto>,
}

impl SolutionSetDto {
    /// Re-verifies every solution of `set` against `t`.
    pub fn new(
        label: &str,
        t: &Triple,
        set: &SolutionSet,
        cos_psi: f64,
        tol: &Tolerances,
        predicted_count: Option<usize>,
    ) -> Result<Self, DocumentError> {
        let tangent = cos_psi == 1.0;
        let mut solutions = Vec::with_capacity(set.solutions.len());
        for (index, k) in set.solutions.iter().enumerate() {
            let dto = SolutionDto::new(k, t, cos_psi, tol, tangent)?;
            let limit = tol.residual * coeff_scale(&[*k]) * coeff_scale(t);
            if dto.residual > limit {
                return Err(DocumentError::Residual {
                    set: label.into(),
                    index,
                    residual: dto.residual,
                    limit,
                });
            }
            solutions.push(dto);
        }
        Ok(Self {
            label: label.into(),
            circles: quadruples(t)?,
            class: set.class.into(),
            cos_psi: finite("cos_psi", cos_psi)?,
            predicted_count,
            solutions,
            family: set.family.as_ref().map(FamilyDto::new).transpose()?,
            diagnostic: set.diagnostic.as_ref().map(DiagnosticDto::from),
        })
    }
}

fn quadruples(t: &Triple) -> Result<[[f64; 4]; 3], DocumentError> {
    Ok([
        finite_all("circles", t[0].to_array())?,
        finite_all("circles", t[1].to_array())?,
        finite_all("circles", t[2].to_array())?,
    ])
}

pub fn class_label(j: usize) -> &'static str {
    CLASS_LABELS[j]
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GeometryDto {
    pub radical_center: Option<[f64; 2]>,
    /// Similarity axis as a directed-line quadruple; `null` when `G = 0`.
    pub similarity_axis: Option<[f64; 4]>,
    /// Reason for `G = 0`, or `not_degenerate`.
    pub g_degeneracy: String,
    /// `F^2` of the pencil holding the angle-problem solutions.
    pub solution_pencil_f_squared: Option<f64>,
    pub solution_pencil: String,
    /// Observations such as concurrency of three lines.
    pub notes: Vec<String>,
}

impl GeometryDto {
    pub fn new(t: &Triple, s: &TripleSummary, class: ConfigClass, tol: &Tolerances) -> Result<Self, DocumentError> {
        let point = |p: Point| finite_all("geometry", [p.x, p.y]);
        let pencil = pencil_type(t, tol);
        let mut notes = Vec::new();
        if class == ConfigClass::ThreeLines {
            let m = &s.minors;
            if tol.is_zero(m.d1, s.minor_scale()) {
                notes.push("lines are concurrent: d1 = 0".to_string());
            }
            if tol.is_zero(m.bc, s.coeff_scale.powi(2)) {
                notes.push("two lines are parallel: bc = 0".to_string());
            }
        }
        if s.u_is_zero(tol) {
            notes.push("u = 0".to_string());
        }
        if s.d4_is_zero(tol) {
            notes.push("d4 = 0: the radical centre is undefined".to_string());
        }
        Ok(Self {
            radical_center: radical_center(t, tol).map(point).transpose()?,
            similarity_axis: similarity(t, tol)
                .axis
                .map(|k| finite_all("geometry.similarity_axis", k.to_array()))
                .transpose()?,
            g_degeneracy: match g_degenerate_report(t, tol) {
                GDegeneracy::AllCurvaturesEqual => "all_curvatures_equal",
                GDegeneracy::TwoParallelSameDirLines => "two_parallel_same_direction_lines",
                GDegeneracy::CoincidentCenters => "coincident_centers",
                GDegeneracy::TangentEqualCurvaturePair => "tangent_equal_curvature_pair",
                GDegeneracy::Unrecognized => "unrecognized",
                GDegeneracy::NotDegenerate => "not_degenerate",
            }
            .into(),
            solution_pencil_f_squared: pencil.f_squared.map(|f| finite("geometry.f_squared", f)).transpose()?,
            solution_pencil: match pencil.pencil_type {
                SolutionPencil::Hyperbolic => "hyperbolic",
                SolutionPencil::Parabolic => "parabolic",
                SolutionPencil::Elliptic => "elliptic",
                SolutionPencil::Undefined => "undefined",
            }
            .into(),
            notes,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DescartesDto {
    /// `V + |d4|` and `V - |d4|`.
    pub curvatures: [f64; 2],
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResultDocument {
    /// `solve`, `solve --all`, `isogonal`, `invariants` or `descartes`.
    pub command: String,
    /// Normalized quadruples of the three inputs.
    pub inputs: [[f64; 4]; 3],
    pub summary: SummaryDto,
    pub class: ClassDto,
    pub sets: Vec<SolutionSetDto>,
    /// Solutions of all reversal classes with reverses identified
    /// (`solve --all` only).
    pub distinct_unoriented: Option<Vec<[f64; 4]>>,
    pub geometry: Option<GeometryDto>,
    pub descartes: Option<DescartesDto>,
}

impl ResultDocument {
    pub fn new(command: &str, t: &Triple, s: &TripleSummary, class: ConfigClass) -> Result<Self, DocumentError> {
        Ok(Self {
            command: command.into(),
            inputs: quadruples(t)?,
            summary: SummaryDto::new(s)?,
            class: class.into(),
            sets: Vec::new(),
            distinct_unoriented: None,
            geometry: None,
            descartes: None,
        })
    }

    pub fn input_circles(&self) -> Vec<CircleCoeffs> {
        self.inputs
            .iter()
            .filter_map(|&[a, b, c, d]| CircleCoeffs::normalize(a, b, c, d).ok())
            .collect()
    }

    pub fn solution_count(&self) -> usize {
        match &self.distinct_unoriented {
            Some(v) => v.len(),
            None => self.sets.iter().map(|s| s.solutions.len()).sum(),
        }
    }

    pub fn has_family(&self) -> bool {
        self.sets.iter().any(|s| s.family.is_some())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents hold only finite numbers")
    }
}

pub fn set_distinct(doc: &mut ResultDocument, circles: &[CircleCoeffs]) -> Result<(), DocumentError> {
    doc.distinct_unoriented = Some(
        circles
            .iter()
            .map(|k| finite_all("distinct_unoriented", k.to_array()))
            .collect::<Result<_, _>>()?,
    );
    Ok(())
}

/// Error produced by the core solver, kept with context for messages.
pub fn solver_message(context: &str, e: &Error) -> String {
    format!("{context}: {e}")
}
