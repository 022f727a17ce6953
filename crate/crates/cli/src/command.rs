//! Command dispatch: argument parsing, solving, and writing outputs.

use std::ffi::OsString;
use std::path::{Path, PathBuf};

use apollonia::apollonius::reversal_class;
use apollonia::{
    classify_triple, descartes_curvatures, enumerate_nonoriented, solve_isogonal, solve_oriented, triple_summary,
    Branch, Error, IsogonalQuery, Tolerances,
};
use clap::{Args, Parser, Subcommand};

use crate::document::{
    class_label, set_distinct, DescartesDto, DocumentError, GeometryDto, ResultDocument, SolutionSetDto,
};
use crate::scene::{parse_scene, Scene};
use crate::svg::{render_svg, SvgStyle};

#[derive(Debug, Parser)]
#[command(name = "apollonia", version, about = "Circles tangent to, or at a fixed angle with, three oriented circles")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Oriented tangent circles.
    Solve {
        #[command(flatten)]
        common: CommonArgs,
        /// Solve all four reversal classes and list the distinct unoriented circles.
        #[arg(long)]
        all: bool,
    },
    /// Circles meeting all three inputs at a common angle.
    Isogonal {
        #[command(flatten)]
        common: CommonArgs,
        /// Comma-separated `cos psi0` values; defaults to the scene's list.
        #[arg(long = "cos-psi", value_delimiter = ',', allow_hyphen_values = true)]
        cos_psi: Vec<f64>,
    },
    /// Invariants, configuration class and derived geometry.
    Invariants {
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Curvatures of the two circles tangent to three mutually counter-tangent ones.
    Descartes {
        #[command(flatten)]
        common: CommonArgs,
    },
}

#[derive(Debug, Args)]
pub struct CommonArgs {
    /// Scene file (JSON).
    pub scene: PathBuf,
    /// Write the result document here instead of stdout.
    #[arg(long)]
    pub json: Option<PathBuf>,
    /// Also write an SVG figure.
    #[arg(long)]
    pub svg: Option<PathBuf>,
    /// One epsilon for every zero test, overriding the scene options.
    #[arg(long)]
    pub tol: Option<f64>,
    /// Exit with status 1 when there is no solution.
    #[arg(long)]
    pub strict: bool,
}

impl Command {
    fn common(&self) -> &CommonArgs {
        match self {
            Command::Solve { common, .. }
            | Command::Isogonal { common, .. }
            | Command::Invariants { common }
            | Command::Descartes { common } => common,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExitStatus {
    Success,
    /// No solution and `--strict` was given.
    NoSolution,
    /// Bad arguments, unreadable or invalid scene, or inputs outside a
    /// command's domain.
    InputError,
    /// A solver step failed or a solution failed re-verification.
    SolverFailure,
    /// An output file could not be written.
    OutputError,
}

impl ExitStatus {
    pub fn code(self) -> i32 {
        match self {
            ExitStatus::Success => 0,
            ExitStatus::NoSolution => 1,
            ExitStatus::InputError => 2,
            ExitStatus::SolverFailure => 3,
            ExitStatus::OutputError => 4,
        }
    }
}

/// Input-domain errors map to status 2, everything else to 3.
pub fn status_for(e: &Error) -> ExitStatus {
    match e {
        Error::NonNormalizable { .. }
        | Error::NotNormalized { .. }
        | Error::InvalidRadius(..)
        | Error::NonFinite(_)
        | Error::NotDescartesConfig { .. }
        | Error::CosPsiZeroDegenerate
        | Error::ZeroAngleParameter
        | Error::SingularParameter(..)
        | Error::UnsupportedMixed
        | Error::BothLines
        | Error::CoincidentCircles
        | Error::CollinearCenters => ExitStatus::InputError,
        Error::DegeneratePair { .. }
        | Error::ResidualTooLarge { .. }
        | Error::NoFiniteElement
        | Error::NotTangent(_)
        | Error::PoleParameter(_)
        | Error::UnderdeterminedFamily(_) => ExitStatus::SolverFailure,
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub status: ExitStatus,
    pub stdout: String,
    pub stderr: String,
    pub document: Option<ResultDocument>,
}

impl Outcome {
    fn fail(status: ExitStatus, message: impl std::fmt::Display) -> Self {
        Self {
            status,
            stdout: String::new(),
            stderr: format!("error: {message}\n"),
            document: None,
        }
    }
}

struct Failure(ExitStatus, String);

impl From<DocumentError> for Failure {
    fn from(e: DocumentError) -> Self {
        Failure(ExitStatus::SolverFailure, e.to_string())
    }
}

fn solver(context: &str, e: Error) -> Failure {
    Failure(status_for(&e), format!("{context}: {e}"))
}

/// Runs one invocation; `argv[0]` is the program name.
pub fn run_command<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    status: ExitStatus::InputError,
                    stdout: String::new(),
                    stderr: text,
                    document: None,
                }
            } else {
                Outcome {
                    status: ExitStatus::Success,
                    stdout: text,
                    stderr: String::new(),
                    document: None,
                }
            };
        }
    };
    let common = cli.command.common();
    let scene = match load_scene(&common.scene) {
        Ok(s) => s,
        Err(e) => return Outcome::fail(ExitStatus::InputError, e),
    };
    let mut tol = scene.options.tolerances();
    if let Some(t) = common.tol {
        if !(t.is_finite() && t > 0.0) {
            return Outcome::fail(ExitStatus::InputError, format!("--tol must be positive, got {t}"));
        }
        tol = Tolerances {
            residual: tol.residual.max(t),
            ..Tolerances::uniform(t)
        };
    }
    let doc = match build_document(&cli.command, &scene, &tol) {
        Ok(d) => d,
        Err(Failure(status, msg)) => return Outcome::fail(status, msg),
    };
    emit(doc, common)
}

fn load_scene(path: &Path) -> Result<Scene, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    parse_scene(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn build_document(command: &Command, scene: &Scene, tol: &Tolerances) -> Result<ResultDocument, Failure> {
    let t = &scene.circles;
    let s = triple_summary(t);
    let class = classify_triple(t, tol);
    match command {
        Command::Solve { all, .. } if *all || scene.options.enumerate_reversals => {
            let mut doc = ResultDocument::new("solve --all", t, &s, class)?;
            let report = enumerate_nonoriented(t, tol);
            let predicted = report.predicted_counts(tol);
            for (j, set) in report.per_class.iter().enumerate() {
                let cls = reversal_class(t, [None, Some(0), Some(1), Some(2)][j]);
                doc.sets
                    .push(SolutionSetDto::new(class_label(j), &cls, set, 1.0, tol, Some(predicted[j]))?);
            }
            set_distinct(&mut doc, &report.distinct_unoriented)?;
            Ok(doc)
        }
        Command::Solve { .. } => {
            let mut doc = ResultDocument::new("solve", t, &s, class)?;
            let set = solve_oriented(t, tol);
            doc.sets.push(SolutionSetDto::new(class_label(0), t, &set, 1.0, tol, None)?);
            Ok(doc)
        }
        Command::Isogonal { cos_psi, .. } => {
            let list = if cos_psi.is_empty() {
                scene.options.cos_psi.clone().unwrap_or_default()
            } else {
                cos_psi.clone()
            };
            if list.is_empty() {
                return Err(Failure(
                    ExitStatus::InputError,
                    "isogonal needs --cos-psi or options.cos_psi in the scene".into(),
                ));
            }
            let mut doc = ResultDocument::new("isogonal", t, &s, class)?;
            for c in list {
                let label = format!("cos_psi={c}");
                let query = IsogonalQuery::new(c, Branch::Both).map_err(|e| solver(&label, e))?;
                let set = solve_isogonal(t, &query, tol).map_err(|e| solver(&label, e))?;
                doc.sets.push(SolutionSetDto::new(&label, t, &set, c, tol, None)?);
            }
            Ok(doc)
        }
        Command::Invariants { .. } => {
            let mut doc = ResultDocument::new("invariants", t, &s, class)?;
            doc.geometry = Some(GeometryDto::new(t, &s, class, tol)?);
            Ok(doc)
        }
        Command::Descartes { .. } => {
            let mut doc = ResultDocument::new("descartes", t, &s, class)?;
            let curvatures = descartes_curvatures(t, tol).map_err(|e| solver("descartes", e))?;
            if !curvatures.iter().all(|v| v.is_finite()) {
                return Err(DocumentError::NonFinite("descartes.curvatures".into()).into());
            }
            doc.descartes = Some(DescartesDto { curvatures });
            Ok(doc)
        }
    }
}

fn expects_solutions(doc: &ResultDocument) -> bool {
    !matches!(doc.command.as_str(), "invariants" | "descartes")
}

fn emit(doc: ResultDocument, common: &CommonArgs) -> Outcome {
    let json = doc.to_json();
    let mut stdout = String::new();
    match &common.json {
        Some(path) => {
            if let Err(e) = std::fs::write(path, format!("{json}\n")) {
                return Outcome::fail(ExitStatus::OutputError, format!("cannot write {}: {e}", path.display()));
            }
        }
        None => {
            stdout.push_str(&json);
            stdout.push('\n');
        }
    }
    if let Some(path) = &common.svg {
        let svg = render_svg(&doc, &SvgStyle::default());
        if let Err(e) = std::fs::write(path, svg) {
            return Outcome::fail(ExitStatus::OutputError, format!("cannot write {}: {e}", path.display()));
        }
    }
    let empty = expects_solutions(&doc) && doc.solution_count() == 0 && !doc.has_family();
    let (status, stderr) = if empty && common.strict {
        (ExitStatus::NoSolution, "no solution\n".to_string())
    } else {
        (ExitStatus::Success, String::new())
    };
    Outcome {
        status,
        stdout,
        stderr,
        document: Some(doc),
    }
}
