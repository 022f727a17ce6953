//! Oriented circles in the normalized coefficient form
//! `a (x^2 + y^2) + 2 b x + 2 c y + d` with `b^2 + c^2 - a d = 1`, their
//! inversive invariants, and the tangency and equal-angle problems for three
//! given circles.

pub mod apollonius;
pub mod circle;
pub mod error;
pub mod invariants;
pub mod isogonal;
#[cfg(feature = "oracle")]
pub mod oracle;
pub mod tolerance;
pub mod transforms;

pub use apollonius::{
    descartes_curvatures, enumerate_nonoriented, solve_common_point, solve_general, solve_oriented,
    solve_three_lines, tangency_point, Diagnostic, Family, FamilyKind, NonOrientedReport, SolutionSet,
};
pub use circle::{
    circle_from_spec, CircleCoeffs, CircleSpec, Coincidence, CurvatureElement, LinearElement, Orientation, Point,
};
pub use error::{Error, Result};
pub use invariants::{classify_triple, q_pair, triple_summary, ConfigClass, PencilKind, Triple, TripleSummary};
pub use isogonal::{solve_isogonal, Branch, IsogonalQuery};
pub use tolerance::Tolerances;
