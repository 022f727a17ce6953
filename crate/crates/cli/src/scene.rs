//! Scene files: three input circles plus solver options, as JSON.

use apollonia::circle::{CircleSpec, CurvatureElement, Orientation, Point};
use apollonia::{CircleCoeffs, Tolerances, Triple};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OrientationTag {
    #[default]
    Ccw,
    Cw,
}

impl From<OrientationTag> for Orientation {
    fn from(o: OrientationTag) -> Self {
        match o {
            OrientationTag::Ccw => Orientation::CounterClockwise,
            OrientationTag::Cw => Orientation::Clockwise,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase", deny_unknown_fields)]
pub enum CircleEntry {
    Circle {
        center: [f64; 2],
        radius: f64,
        #[serde(default)]
        orientation: OrientationTag,
    },
    Line {
        point: [f64; 2],
        angle: f64,
    },
    /// Any quadruple with `b^2 + c^2 - ad > 0`; it is rescaled on input.
    Coeffs {
        abcd: [f64; 4],
    },
    Element {
        x: f64,
        y: f64,
        tau: f64,
        k: f64,
    },
}

impl CircleEntry {
    pub fn spec(&self) -> CircleSpec {
        match *self {
            CircleEntry::Circle {
                center,
                radius,
                orientation,
            } => CircleSpec::CenterRadius {
                center: Point::new(center[0], center[1]),
                radius,
                orientation: orientation.into(),
            },
            CircleEntry::Line { point, angle } => CircleSpec::Line {
                point: Point::new(point[0], point[1]),
                angle,
            },
            CircleEntry::Coeffs { abcd } => CircleSpec::Coeffs(abcd),
            CircleEntry::Element { x, y, tau, k } => CircleSpec::Element(CurvatureElement::new(x, y, tau, k)),
        }
    }

    fn build(&self, tol: &Tolerances) -> apollonia::Result<CircleCoeffs> {
        match *self {
            CircleEntry::Coeffs { abcd: [a, b, c, d] } => CircleCoeffs::normalize(a, b, c, d),
            _ => apollonia::circle_from_spec(&self.spec(), tol),
        }
    }
}

/// Per-field tolerance overrides.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ToleranceOverrides {
    pub norm: Option<f64>,
    pub coeff: Option<f64>,
    pub q: Option<f64>,
    pub zero: Option<f64>,
    pub residual: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SceneOptions {
    /// One epsilon for every zero test.
    pub tolerance: Option<f64>,
    #[serde(default)]
    pub tolerances: ToleranceOverrides,
    /// Default `cos psi0` list for the `isogonal` command.
    pub cos_psi: Option<Vec<f64>>,
    /// Solve every reversal class, as `solve --all` does.
    #[serde(default)]
    pub enumerate_reversals: bool,
}

impl SceneOptions {
    pub fn tolerances(&self) -> Tolerances {
        let mut t = self.tolerance.map_or_else(Tolerances::default, Tolerances::uniform);
        let o = &self.tolerances;
        for (slot, v) in [
            (&mut t.norm, o.norm),
            (&mut t.coeff, o.coeff),
            (&mut t.q, o.q),
            (&mut t.zero, o.zero),
            (&mut t.residual, o.residual),
        ] {
            if let Some(v) = v {
                *slot = v;
            }
        }
        t
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SceneFile {
    pub circles: Vec<CircleEntry>,
    #[serde(default)]
    pub options: SceneOptions,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Scene {
    pub entries: [CircleEntry; 3],
    pub circles: Triple,
    pub options: SceneOptions,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SceneError {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("schema error at `{path}`: {message}")]
    Schema { path: String, message: String },
    #[error("invalid value at `{path}` (circle {index}): {message}")]
    Value { index: usize, path: String, message: String },
}

pub fn parse_scene(text: &str) -> Result<Scene, SceneError> {
    let value: serde_json::Value = serde_json::from_str(text).map_err(|e| SceneError::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let file: SceneFile = serde_path_to_error::deserialize(value).map_err(|e| SceneError::Schema {
        path: e.path().to_string(),
        message: e.inner().to_string(),
    })?;
    scene_from_file(file)
}

pub fn scene_from_file(file: SceneFile) -> Result<Scene, SceneError> {
    let entries: [CircleEntry; 3] = file.circles.try_into().map_err(|c: Vec<CircleEntry>| SceneError::Schema {
        path: "circles".into(),
        message: format!("expected exactly 3 circles, found {}", c.len()),
    })?;
    for (name, v) in [("options.tolerance", file.options.tolerance)] {
        if let Some(v) = v {
            if !(v.is_finite() && v > 0.0) {
                return Err(SceneError::Schema {
                    path: name.into(),
                    message: format!("tolerance must be positive, got {v}"),
                });
            }
        }
    }
    let tol = file.options.tolerances();
    let mut circles = Vec::with_capacity(3);
    for (index, e) in entries.iter().enumerate() {
        let k = e.build(&tol).map_err(|err| SceneError::Value {
            index,
            path: format!("circles[{index}]"),
            message: err.to_string(),
        })?;
        circles.push(k);
    }
    Ok(Scene {
        entries,
        circles: [circles[0], circles[1], circles[2]],
        options: file.options,
    })
}

/// Scene text for a triple given as quadruples.
pub fn scene_text(circles: &Triple, options: &SceneOptions) -> String {
    let file = SceneFile {
        circles: circles
            .iter()
            .map(|k| CircleEntry::Coeffs { abcd: k.to_array() })
            .collect(),
        options: options.clone(),
    };
    serde_json::to_string_pretty(&file).expect("scene serializes")
}
