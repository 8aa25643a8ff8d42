//! Command-line front end.
//!
//! [`Cli`] is the clap parser, [`RunRequest`] the parsed request and [`run`]
//! executes it without touching the process: it returns the exit status and
//! the text for both output streams. Exit status 0 means success, 2 a
//! violated precondition (invalid configuration, missing or malformed input,
//! a parameter that is not simple) and 1 an I/O or internal failure.

pub mod io;
pub mod report;

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use rayon::prelude::*;
use thiserror::Error;

use crate::family::{self, FamilySpec};
use crate::polytope::{
    face_of, faces, is_pyramid, validate, volume, volume_in_saturation, volume_in_span, Configuration, PolytopeError,
};
use crate::ranking::{volume_lower_bound, Parameter, RankEngine, RankingError};
use crate::semigroup::{delta_bounding_box, hilbert_basis, holes_in_box, MembershipIndex};
use report::*;

/// Environment variable holding the default output format.
pub const FORMAT_ENV: &str = "GKZ_RANK_FORMAT";

#[derive(Debug, Error)]
pub enum CliError {
    #[error("missing parameter: {0}")]
    MissingParameter(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error(transparent)]
    Configuration(#[from] PolytopeError),
    #[error(transparent)]
    Ranking(#[from] RankingError),
    #[error("{0}")]
    Family(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl CliError {
    pub fn status(&self) -> i32 {
        match self {
            CliError::Io(_) => 1,
            _ => 2,
        }
    }

    /// Short machine-readable name.
    pub fn kind(&self) -> String {
        match self {
            CliError::MissingParameter(_) => "MissingParameter".into(),
            CliError::InvalidInput(_) => "InvalidInput".into(),
            CliError::Configuration(e) => format!("{e:?}").split([' ', '{', '(']).next().unwrap_or("Configuration").into(),
            CliError::Ranking(RankingError::NotSimple(_)) => "NotSimple".into(),
            CliError::Ranking(e) => format!("{e:?}").split([' ', '{', '(']).next().unwrap_or("Ranking").into(),
            CliError::Family(_) => "InvalidSpec".into(),
            CliError::Io(_) => "Io".into(),
        }
    }

    pub fn to_json(&self) -> ErrorJson {
        ErrorJson {
            schema: schema("error"),
            error: self.kind(),
            message: self.to_string(),
            status: self.status(),
            ranking: match self {
                CliError::Ranking(RankingError::NotSimple(r)) => Some(NotSimpleJson::from(r.as_ref())),
                _ => None,
            },
        }
    }
}

impl From<family::FamilyError> for CliError {
    fn from(e: family::FamilyError) -> CliError {
        match e {
            family::FamilyError::Ranking(r) => CliError::Ranking(r),
            other => CliError::Family(other.to_string()),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Command {
    Info,
    Volume,
    Faces,
    Normality,
    Holes,
    Rank,
    Bounds,
    FamilyVerify,
    FamilySweep,
}

/// Where the configuration comes from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MatrixSource {
    /// A JSON file `{"columns": [[...], ...]}`.
    File(PathBuf),
    /// Columns separated by `;`, entries by `,`.
    Inline(String),
    /// `A_{d,b}`.
    Family(usize, u64),
}

/// One parsed invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunRequest {
    pub command: Command,
    pub matrix: Option<MatrixSource>,
    pub beta: Option<String>,
    pub bounds_box: Option<String>,
    pub face: Option<String>,
    pub format: OutputFormat,
    pub out: Option<PathBuf>,
    pub d: Option<String>,
    pub b: Option<String>,
    pub samples: usize,
}

impl RunRequest {
    pub fn new(command: Command) -> RunRequest {
        RunRequest {
            command,
            matrix: None,
            beta: None,
            bounds_box: None,
            face: None,
            format: OutputFormat::Json,
            out: None,
            d: None,
            b: None,
            samples: 20,
        }
    }
}

/// Result of [`run`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub status: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Parser, Debug)]
#[command(name = "gkz-rank", version, about = "Volumes, semigroup holes and ranks of A-hypergeometric systems")]
pub struct Cli {
    #[command(subcommand)]
    pub command: CliCommand,
    /// Output format.
    #[arg(long, global = true, value_enum, env = FORMAT_ENV, default_value = "json")]
    pub format: OutputFormat,
    /// Write the report to this file instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug, Clone, Default)]
pub struct MatrixArgs {
    /// JSON file with {"columns": [[...], ...]}.
    #[arg(long, group = "source")]
    pub matrix: Option<PathBuf>,
    /// Inline columns such as "1,0;1,1;0,2;0,3".
    #[arg(long, group = "source", allow_hyphen_values = true)]
    pub columns: Option<String>,
    /// The family matrix A_{d,b}, given as "d,b".
    #[arg(long, group = "source")]
    pub family: Option<String>,
}

#[derive(Subcommand, Debug)]
pub enum CliCommand {
    /// Validate a configuration and summarize it.
    Info(MatrixArgs),
    /// Normalized volume of A, or of a column subset with --face.
    Volume {
        #[command(flatten)]
        matrix: MatrixArgs,
        /// 1-based column indices, e.g. "5".
        #[arg(long)]
        face: Option<String>,
    },
    /// All faces with certificates, volumes and lower bounds.
    Faces(MatrixArgs),
    /// Hilbert basis and normality of NA.
    Normality(MatrixArgs),
    /// Holes of NA in a box (default: the bounding box of conv(0, A)).
    Holes {
        #[command(flatten)]
        matrix: MatrixArgs,
        /// "lo..hi" for every coordinate, or one range per coordinate.
        #[arg(long = "box", allow_hyphen_values = true)]
        bounds_box: Option<String>,
    },
    /// Ranking pairs, simpleness and rank at a parameter.
    Rank {
        #[command(flatten)]
        matrix: MatrixArgs,
        /// Comma-separated rationals, e.g. "0,1/2,-3".
        #[arg(long, allow_hyphen_values = true)]
        beta: Option<String>,
    },
    /// Rank bounds at a parameter and volume lower bounds over all faces.
    Bounds {
        #[command(flatten)]
        matrix: MatrixArgs,
        #[arg(long, allow_hyphen_values = true)]
        beta: Option<String>,
        /// Expected simple face (1-based columns).
        #[arg(long)]
        face: Option<String>,
    },
    /// Compare the engine with the closed forms for A_{d,b}.
    FamilyVerify {
        #[arg(long)]
        d: Option<String>,
        #[arg(long)]
        b: Option<String>,
        /// Number of off-line sample parameters.
        #[arg(long, default_value_t = 20)]
        samples: usize,
    },
    /// CSV of d,b,vol,max_rank,ratio over ranges such as --d 3..6 --b 2..12.
    FamilySweep {
        #[arg(long)]
        d: Option<String>,
        #[arg(long)]
        b: Option<String>,
    },
}

impl MatrixArgs {
    fn source(&self) -> Result<Option<MatrixSource>, CliError> {
        if let Some(p) = &self.matrix {
            return Ok(Some(MatrixSource::File(p.clone())));
        }
        if let Some(c) = &self.columns {
            return Ok(Some(MatrixSource::Inline(c.clone())));
        }
        if let Some(f) = &self.family {
            let v = io::parse_int_list(f)?;
            let [d, b] = v.as_slice() else {
                return Err(CliError::InvalidInput("--family expects \"d,b\"".into()));
            };
            let d = usize::try_from(d).map_err(|_| CliError::InvalidInput("d out of range".into()))?;
            let b = u64::try_from(b).map_err(|_| CliError::InvalidInput("b out of range".into()))?;
            return Ok(Some(MatrixSource::Family(d, b)));
        }
        Ok(None)
    }
}

impl Cli {
    pub fn into_request(self) -> Result<RunRequest, CliError> {
        let mut req = RunRequest::new(Command::Info);
        req.format = self.format;
        req.out = self.out;
        match self.command {
            CliCommand::Info(m) => req.matrix = m.source()?,
            CliCommand::Volume { matrix, face } => {
                req.command = Command::Volume;
                req.matrix = matrix.source()?;
                req.face = face;
            }
            CliCommand::Faces(m) => {
                req.command = Command::Faces;
                req.matrix = m.source()?;
            }
            CliCommand::Normality(m) => {
                req.command = Command::Normality;
                req.matrix = m.source()?;
            }
            CliCommand::Holes { matrix, bounds_box } => {
                req.command = Command::Holes;
                req.matrix = matrix.source()?;
                req.bounds_box = bounds_box;
            }
            CliCommand::Rank { matrix, beta } => {
                req.command = Command::Rank;
                req.matrix = matrix.source()?;
                req.beta = beta;
            }
            CliCommand::Bounds { matrix, beta, face } => {
                req.command = Command::Bounds;
                req.matrix = matrix.source()?;
                req.beta = beta;
                req.face = face;
            }
            CliCommand::FamilyVerify { d, b, samples } => {
                req.command = Command::FamilyVerify;
                req.d = d;
                req.b = b;
                req.samples = samples;
            }
            CliCommand::FamilySweep { d, b } => {
                req.command = Command::FamilySweep;
                req.d = d;
                req.b = b;
            }
        }
        Ok(req)
    }
}

/// Reads and validates the configuration of a request.
pub fn load_configuration(source: &MatrixSource) -> Result<Configuration, CliError> {
    let columns = match source {
        MatrixSource::File(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
            io::parse_matrix_json(&text)?
        }
        MatrixSource::Inline(s) => io::parse_columns(s)?,
        MatrixSource::Family(d, b) => return Ok(FamilySpec::new(*d, *b)?.build()),
    };
    Ok(validate(columns)?)
}

fn configuration(req: &RunRequest) -> Result<Configuration, CliError> {
    let source = req
        .matrix
        .as_ref()
        .ok_or_else(|| CliError::MissingParameter("--matrix, --columns or --family".into()))?;
    load_configuration(source)
}

fn parameter(req: &RunRequest, d: usize) -> Result<Parameter, CliError> {
    let text = req.beta.as_ref().ok_or_else(|| CliError::MissingParameter("--beta".into()))?;
    let beta: Parameter = text.parse()?;
    if beta.dim() != d {
        return Err(RankingError::DimensionMismatch {
            expected: d,
            found: beta.dim(),
        }
        .into());
    }
    Ok(beta)
}

fn single(req_value: &Option<String>, name: &str) -> Result<Vec<u64>, CliError> {
    let text = req_value.as_ref().ok_or_else(|| CliError::MissingParameter(format!("--{name}")))?;
    io::parse_range(text)
}

fn json<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

fn rows(vs: &[Vec<String>]) -> String {
    vs.iter().map(|v| format!("({})", v.join(","))).collect::<Vec<_>>().join(" ")
}

/// Executes a request and renders its report.
pub fn render(req: &RunRequest) -> Result<String, CliError> {
    let text = req.format == OutputFormat::Text;
    match req.command {
        Command::Info => {
            let a = configuration(req)?;
            let r = InfoReport {
                schema: schema("info"),
                d: a.d(),
                n: a.n(),
                columns: a.columns().iter().map(|c| vector(c)).collect(),
                facet_normals: a.facets().iter().map(|c| vector(c)).collect(),
                positivity_functional: vector(a.positivity_functional()),
                face_count: faces(&a).len(),
                vol: int(&volume(&a)),
            };
            Ok(if text {
                format!(
                    "d = {}, n = {}\ncolumns: {}\nfacet normals: {}\npositivity functional: ({})\nfaces: {}\nvol(A) = {}\n",
                    r.d,
                    r.n,
                    rows(&r.columns),
                    rows(&r.facet_normals),
                    r.positivity_functional.join(","),
                    r.face_count,
                    r.vol
                )
            } else {
                json(&r)
            })
        }
        Command::Volume => {
            let a = configuration(req)?;
            let face = match &req.face {
                Some(f) => io::parse_face(f, a.n())?,
                None => (0..a.n()).collect(),
            };
            let span = volume_in_span(&face, &a);
            let sat = volume_in_saturation(&face, &a);
            let index = a.span_lattice(&face).index_in_saturation();
            let r = VolumeReport {
                schema: schema("volume"),
                face: face.iter().map(|j| j + 1).collect(),
                vol_span: int(&span),
                vol_saturation: int(&sat),
                index: int(&index),
            };
            Ok(if text {
                format!(
                    "F = columns {:?}\nvol in ZF = {}\nvol in Z^d ∩ QF = {}\n[Z^d ∩ QF : ZF] = {}\n",
                    r.face, r.vol_span, r.vol_saturation, r.index
                )
            } else {
                json(&r)
            })
        }
        Command::Faces => {
            let a = configuration(req)?;
            let vol = volume(&a);
            let entries: Vec<FaceEntry> = faces(&a)
                .iter()
                .map(|f| FaceEntry {
                    columns: labels(f),
                    normal: vector(&f.normal),
                    dim: f.dim,
                    codim: f.codim,
                    vol_span: int(&volume_in_span(&f.indices, &a)),
                    vol_saturation: int(&volume_in_saturation(&f.indices, &a)),
                    lower_bound: int(&volume_lower_bound(f, &a)),
                    pyramid: is_pyramid(f, &a),
                })
                .collect();
            let r = FacesReport {
                schema: schema("faces"),
                vol: int(&vol),
                faces: entries,
            };
            Ok(if text {
                let mut s = format!("vol(A) = {}\n", r.vol);
                for f in &r.faces {
                    let _ = writeln!(
                        s,
                        "{:?} dim {} codim {} normal ({}) vol_ZF {} vol_sat {} lower bound {}{}",
                        f.columns,
                        f.dim,
                        f.codim,
                        f.normal.join(","),
                        f.vol_span,
                        f.vol_saturation,
                        f.lower_bound,
                        if f.pyramid { " pyramid" } else { "" }
                    );
                }
                s
            } else {
                json(&r)
            })
        }
        Command::Normality => {
            let a = configuration(req)?;
            let hb = hilbert_basis(&a);
            let mut index = MembershipIndex::new(&a);
            let missing: Vec<Vec<String>> = hb.iter().filter(|h| !index.contains(h)).map(|h| vector(h)).collect();
            let r = NormalityReport {
                schema: schema("normality"),
                normal: missing.is_empty(),
                hilbert_basis: hb.iter().map(|h| vector(h)).collect(),
                missing,
            };
            Ok(if text {
                format!(
                    "normal: {}\nHilbert basis: {}\nnot in NA: {}\n",
                    r.normal,
                    rows(&r.hilbert_basis),
                    rows(&r.missing)
                )
            } else {
                json(&r)
            })
        }
        Command::Holes => {
            let a = configuration(req)?;
            let bounds = match &req.bounds_box {
                Some(s) => io::parse_box(s, a.d())?,
                None => delta_bounding_box(&a),
            };
            let holes = holes_in_box(&a, &bounds).map_err(|e| CliError::InvalidInput(e.to_string()))?;
            let r = HolesReport {
                schema: schema("holes"),
                bounds: BoxJson {
                    lower: vector(&bounds.lower),
                    upper: vector(&bounds.upper),
                },
                holes: holes.holes.iter().map(|h| vector(h)).collect(),
            };
            Ok(if text {
                format!(
                    "box: ({}) .. ({})\n{} holes: {}\n",
                    r.bounds.lower.join(","),
                    r.bounds.upper.join(","),
                    r.holes.len(),
                    rows(&r.holes)
                )
            } else {
                json(&r)
            })
        }
        Command::Rank => {
            let a = configuration(req)?;
            let beta = parameter(req, a.d())?;
            let report = RankEngine::new(&a).rank(&beta)?;
            let r = RankJson::from(&report);
            Ok(if text {
                let mut s = format!("beta = ({})\nvol(A) = {}\n", beta, r.vol);
                for p in &r.maximal_pairs {
                    let _ = writeln!(s, "maximal pair: face {:?}, b = ({})", p.face, p.rep.join(","));
                }
                let _ = writeln!(
                    s,
                    "{} (ranking pairs: {}), simple face {:?}, |B| = {}\nrank = {} (jump {})",
                    r.simplicity,
                    r.pairs.len(),
                    r.simple_face.clone().unwrap_or_default(),
                    r.b_count,
                    r.rank,
                    r.jump
                );
                s
            } else {
                json(&r)
            })
        }
        Command::Bounds => {
            let a = configuration(req)?;
            let beta = parameter(req, a.d())?;
            let report = RankEngine::new(&a).rank(&beta)?;
            let g = report.simple_face.as_ref().expect("simple reports carry a face");
            if let Some(f) = &req.face {
                let wanted = io::parse_face(f, a.n())?;
                let wanted = face_of(&a, &wanted).ok_or_else(|| CliError::InvalidInput(format!("columns {f} are not a face")))?;
                if wanted.indices != g.indices {
                    return Err(RankingError::WrongFace {
                        requested: wanted.label(),
                        found: g.label(),
                    }
                    .into());
                }
            }
            let vol = &report.volume;
            let lower: Vec<LowerBoundJson> = faces(&a)
                .iter()
                .map(|f| {
                    let bound = volume_lower_bound(f, &a);
                    LowerBoundJson {
                        face: labels(f),
                        holds: &bound <= vol,
                        equality: &bound == vol,
                        bound: int(&bound),
                        pyramid: is_pyramid(f, &a),
                    }
                })
                .collect();
            let r = BoundsReport {
                schema: schema("bounds"),
                beta: beta.entries().iter().map(rational).collect(),
                vol: int(vol),
                rank: int(&report.rank),
                simple_face: Some(labels(g)),
                all_hold: report.bounds.all_ok() && lower.iter().all(|l| l.holds),
                bounds: report.bounds.all().iter().map(|b| BoundJson::from(*b)).collect(),
                volume_lower_bounds: lower,
            };
            Ok(if text {
                let mut s = format!("rank = {}, vol(A) = {}, simple face {:?}\n", r.rank, r.vol, r.simple_face.clone().unwrap_or_default());
                for b in &r.bounds {
                    let state = if !b.applicable { "n/a" } else if b.holds { "holds" } else { "FAILS" };
                    let _ = writeln!(s, "{}: {} vs {} (slack {}) {}", b.name, b.lhs, b.rhs, b.slack, state);
                }
                for l in &r.volume_lower_bounds {
                    let _ = writeln!(s, "vol(A) >= {} for face {:?}{}", l.bound, l.face, if l.equality { " (equality)" } else { "" });
                }
                s
            } else {
                json(&r)
            })
        }
        Command::FamilyVerify => {
            let d = single(&req.d, "d")?;
            let b = single(&req.b, "b")?;
            let (&[d], &[b]) = (d.as_slice(), b.as_slice()) else {
                return Err(CliError::InvalidInput("family-verify takes a single d and b".into()));
            };
            let spec = FamilySpec::new(d as usize, b)?;
            let report = family::verify(&spec, req.samples)?;
            let r = FamilyJson::from(&report);
            Ok(if text {
                format!(
                    "A_{{{},{}}}: vol {} (expected {}), max rank {} (expected {}), ratio {}\n{} line checks, {} off-line samples, all match: {}\n",
                    r.d,
                    r.b,
                    r.computed_vol,
                    r.expected_vol,
                    r.computed_max_rank,
                    r.expected_max_rank,
                    r.ratio,
                    r.line_checks.len(),
                    r.off_line.len(),
                    r.all_match
                )
            } else {
                json(&r)
            })
        }
        Command::FamilySweep => {
            let ds = single(&req.d, "d")?;
            let bs = single(&req.b, "b")?;
            let specs: Vec<FamilySpec> = ds
                .iter()
                .flat_map(|&d| bs.iter().map(move |&b| (d, b)))
                .map(|(d, b)| FamilySpec::new(d as usize, b))
                .collect::<Result<_, _>>()?;
            let rows: Vec<Result<String, CliError>> = specs.par_iter().map(sweep_row).collect();
            let mut csv = String::from("d,b,vol,max_rank,ratio\n");
            for row in rows {
                csv.push_str(&row?);
            }
            Ok(csv)
        }
    }
}

/// One CSV row: the engine's volume and rank at `β = 0`.
pub fn sweep_row(spec: &FamilySpec) -> Result<String, CliError> {
    let a = spec.build();
    let report = RankEngine::new(&a).rank(&Parameter::zero(spec.d()))?;
    let ratio = BigRational::new(report.rank.clone(), report.volume.clone());
    Ok(format!("{},{},{},{},{}\n", spec.d(), spec.b(), report.volume, report.rank, rational(&ratio)))
}

/// Runs a request: the report goes to `--out` when given, otherwise to the
/// returned standard output; failures produce a JSON error object.
pub fn run(req: &RunRequest) -> Outcome {
    let result = render(req).and_then(|body| match &req.out {
        Some(path) => std::fs::write(path, &body)
            .map(|_| String::new())
            .map_err(|e| CliError::Io(format!("{}: {e}", path.display()))),
        None => Ok(body),
    });
    match result {
        Ok(stdout) => Outcome {
            status: 0,
            stdout,
            stderr: String::new(),
        },
        Err(e) => Outcome {
            status: e.status(),
            stdout: String::new(),
            stderr: json(&e.to_json()),
        },
    }
}

/// Parses process arguments and runs them.
pub fn main_with_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => match cli.into_request() {
            Ok(req) => run(&req),
            Err(e) => Outcome {
                status: e.status(),
                stdout: String::new(),
                stderr: json(&e.to_json()),
            },
        },
        Err(e) => {
            let status = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            if status == 0 {
                Outcome {
                    status,
                    stdout: text,
                    stderr: String::new(),
                }
            } else {
                Outcome {
                    status,
                    stdout: String::new(),
                    stderr: text,
                }
            }
        }
    }
}
