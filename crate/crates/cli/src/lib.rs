//! Scene files, result documents, SVG figures and the `apollonia` command.

pub mod command;
pub mod document;
pub mod scene;
pub mod svg;

pub use command::{run_command, ExitStatus, Outcome};
pub use document::ResultDocument;
pub use scene::{parse_scene, Scene, SceneError};
pub use svg::{render_svg, SvgStyle};
