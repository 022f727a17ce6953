use thiserror::Error;

/// Errors produced by the geometry kernel and the solvers built on it.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("quadruple [{a}, {b}, {c}, {d}] cannot be normalized: b^2 + c^2 - ad = {value} <= 0")]
    NonNormalizable { a: f64, b: f64, c: f64, d: f64, value: f64 },

    #[error("quadruple is not normalized: |b^2 + c^2 - ad - 1| = {deviation:e} exceeds {limit:e}")]
    NotNormalized { deviation: f64, limit: f64 },

    #[error("radius must be positive and finite, got {0}")]
    InvalidRadius(f64),

    #[error("non-finite value in {0}")]
    NonFinite(&'static str),

    #[error("circles {first} and {second} have no radical axis (concentric circles or two lines)")]
    DegeneratePair { first: usize, second: usize },

    #[error("solution fails the residual check: {residual:e} > {limit:e}")]
    ResidualTooLarge { residual: f64, limit: f64 },

    #[error("circles have equal curvature, the common element is not finite")]
    NoFiniteElement,

    #[error("circles are not tangent (Q = {0:e})")]
    NotTangent(f64),

    #[error("circles are not pairwise counter-tangent (Q = {q:?})")]
    NotDescartesConfig { q: [f64; 3] },

    #[error("cos psi is zero; the single-common-point branch divides by it")]
    CosPsiZeroDegenerate,

    #[error("angle parameter must be non-zero")]
    ZeroAngleParameter,

    #[error("pencil parameter {0} makes the weight denominator vanish")]
    SingularParameter(f64),

    #[error("both circles are straight lines; the canonical frame needs a curved circle")]
    BothLines,

    #[error("the circles coincide; no canonical frame or pencil exists")]
    CoincidentCircles,

    #[error("family parameter {0} is a pole: the member degenerates to a point")]
    PoleParameter(f64),

    #[error("oracle handles all-circle or all-line triples only")]
    UnsupportedMixed,

    #[error("oracle requires non-collinear centres")]
    CollinearCenters,

    #[error("family cannot be sampled: {0}")]
    UnderdeterminedFamily(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
