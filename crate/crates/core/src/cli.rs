//! The `polymove` command line.
//!
//! Files are JSON with rationals written as `"p/q"` strings. Triangulations
//! and move scripts use their library encodings; a bare polytope or a
//! candidate point set is `{"points": [[x, y], ...]}`. Exit status is 0 on
//! success, 2 when arguments or files fail to parse, 3 when a geometric
//! precondition fails, and 4 on an internal error.

use std::fmt::Write as _;
use std::io::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::Error;
use crate::kernel::{to_f64, Point, PointSet};
use crate::moves::{bfs_oracle, invert, replay, MoveScript};
use crate::synthesis::theorem1_connect;
use crate::triangulation::{common_refinement, star_polytope, Polyhedron, Polytope, Triangulation};
use crate::valuations::{builtin, extend, tverberg_bsp, BspNode};

#[derive(Parser, Debug)]
#[command(name = "polymove", version, about = "Elementary moves on triangulations of polyhedra")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check that the simplices are non-degenerate and meet properly.
    Validate {
        #[arg(short, long)]
        input: PathBuf,
    },
    /// Star the convex hull of the input at a point.
    Star {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(long, value_parser = parse_point)]
        point: Point,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Common refinement of two triangulations of the same polyhedron.
    Refine {
        first: PathBuf,
        second: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Move script from the first triangulation to the second.
    Connect {
        source: PathBuf,
        target: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Apply a script, checking every step.
    Replay {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(long)]
        script: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Reverse a script.
    Invert {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Evaluate a builtin valuation by inclusion-exclusion.
    Valuate {
        #[arg(short, long)]
        input: PathBuf,
        /// volume, euler, moment:<axis> or mixed
        #[arg(long)]
        valuation: String,
    },
    /// Binary space partition of the convex hull of the input into simplices.
    Bsp {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Shortest script whose splits use only the candidate points.
    Oracle {
        source: PathBuf,
        target: PathBuf,
        #[arg(long)]
        candidates: PathBuf,
        #[arg(long, default_value_t = 6)]
        max_depth: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// SVG of a planar triangulation, or one frame per script step.
    Render {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(long)]
        script: Option<PathBuf>,
        #[arg(long)]
        frames: Option<PathBuf>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

fn parse_point(s: &str) -> Result<Point, String> {
    Point::parse(s).map_err(|e| e.to_string())
}

/// A failed command: the message for standard error and the exit status.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse(_) => 2,
            Error::Internal(_) => 4,
            _ => 3,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn parse_failure(path: &Path, e: impl std::fmt::Display) -> Failure {
    Failure {
        code: 2,
        message: format!("{}: {e}", path.display()),
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| parse_failure(path, e))
}

fn read_triangulation(path: &Path) -> Result<Triangulation, Failure> {
    let text = read(path)?;
    match Triangulation::from_json(&text) {
        Err(Error::Parse(e)) => Err(parse_failure(path, e)),
        other => Ok(other?),
    }
}

fn read_script(path: &Path) -> Result<MoveScript, Failure> {
    MoveScript::from_json(&read(path)?).map_err(|e| parse_failure(path, e))
}

#[derive(Serialize, Deserialize)]
struct PointsFile {
    points: Vec<Point>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum PointsInput {
    Tagged(PointsFile),
    Bare(Vec<Point>),
}

fn read_points(path: &Path) -> Result<Vec<Point>, Failure> {
    match serde_json::from_str::<PointsInput>(&read(path)?) {
        Ok(PointsInput::Tagged(f)) => Ok(f.points),
        Ok(PointsInput::Bare(v)) => Ok(v),
        Err(e) => Err(parse_failure(path, e)),
    }
}

/// A points file, or the convex hull of a triangulation's vertices.
fn read_polytope(path: &Path) -> Result<Polytope, Failure> {
    let text = read(path)?;
    let points = match serde_json::from_str::<PointsFile>(&text) {
        Ok(f) => f.points,
        Err(_) => read_triangulation(path)?.vertices().points().to_vec(),
    };
    Ok(Polytope::new(points)?)
}

fn emit(output: Option<&Path>, text: &str) -> Result<(), Failure> {
    match output {
        Some(p) => fs::write(p, format!("{text}\n")).map_err(|e| Failure {
            code: 4,
            message: format!("{}: {e}", p.display()),
        }),
        None => {
            let mut out = std::io::stdout().lock();
            match writeln!(out, "{text}") {
                Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(Failure {
                    code: 4,
                    message: format!("standard output: {e}"),
                }),
                _ => Ok(()),
            }
        }
    }
}

/// Nested JSON: `{"leaf": simplex}` or
/// `{"cut": hyperplane, "section": [points], "plus": node, "minus": node}`.
pub fn bsp_json(node: &BspNode) -> Value {
    match node {
        BspNode::Leaf(s) => json!({ "leaf": s }),
        BspNode::Inner {
            cut,
            plus,
            minus,
            section,
        } => json!({
            "cut": cut,
            "section": section.vertices(),
            "plus": bsp_json(plus),
            "minus": bsp_json(minus),
        }),
    }
}

/// Frames share one view box so that a sequence lines up.
struct View {
    min: (f64, f64),
    scale: f64,
    height: f64,
}

const CANVAS: f64 = 400.0;
const MARGIN: f64 = 10.0;

impl View {
    fn fit<'a>(points: impl Iterator<Item = &'a Point>) -> View {
        let (mut lo, mut hi) = ((f64::MAX, f64::MAX), (f64::MIN, f64::MIN));
        for p in points {
            let (x, y) = (to_f64(&p.coords()[0]), to_f64(&p.coords()[1]));
            lo = (lo.0.min(x), lo.1.min(y));
            hi = (hi.0.max(x), hi.1.max(y));
        }
        let span = (hi.0 - lo.0).max(hi.1 - lo.1).max(f64::MIN_POSITIVE);
        let scale = (CANVAS - 2.0 * MARGIN) / span;
        View {
            min: lo,
            scale,
            height: (hi.1 - lo.1) * scale + 2.0 * MARGIN,
        }
    }

    fn project(&self, p: &Point) -> (f64, f64) {
        let x = (to_f64(&p.coords()[0]) - self.min.0) * self.scale + MARGIN;
        let y = self.height - ((to_f64(&p.coords()[1]) - self.min.1) * self.scale + MARGIN);
        (x, y)
    }
}

/// SVG with one `<polygon>` per simplex; coordinates are printed to six
/// decimals and are cosmetic only.
pub fn render_svg(t: &Triangulation) -> Result<String, Error> {
    planar(t)?;
    render_in(t, &View::fit(t.iter().flat_map(|s| s.vertices())))
}

fn planar(t: &Triangulation) -> Result<(), Error> {
    if t.ambient() != 2 {
        return Err(Error::Unsupported("only planar triangulations render".into()));
    }
    Ok(())
}

fn render_in(t: &Triangulation, view: &View) -> Result<String, Error> {
    planar(t)?;
    let mut out = format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{CANVAS}\" height=\"{:.6}\">\n",
        view.height
    );
    for s in t.iter() {
        let pts: Vec<String> = s
            .vertices()
            .iter()
            .map(|p| {
                let (x, y) = view.project(p);
                format!("{x:.6},{y:.6}")
            })
            .collect();
        let _ = writeln!(
            out,
            "  <polygon points=\"{}\" fill=\"#dde6f0\" stroke=\"#203040\" stroke-width=\"1\"/>",
            pts.join(" ")
        );
    }
    out.push_str("</svg>");
    Ok(out)
}

fn render_frames(t0: &Triangulation, script: &MoveScript, dir: &Path) -> Result<usize, Failure> {
    planar(t0)?;
    let mut states = vec![t0.clone()];
    for k in 0..script.len() {
        let prefix = MoveScript::new(script.moves()[k..=k].to_vec());
        let next = replay(states.last().expect("nonempty"), &prefix).map_err(|e| match e {
            Error::Replay { reason, .. } => Error::Replay { step: k, reason },
            e => e,
        })?;
        states.push(next);
    }
    let view = View::fit(states.iter().flat_map(|t| t.iter()).flat_map(|s| s.vertices()));
    fs::create_dir_all(dir).map_err(|e| Failure {
        code: 4,
        message: format!("{}: {e}", dir.display()),
    })?;
    for (k, t) in states.iter().enumerate() {
        let path = dir.join(format!("frame_{k:04}.svg"));
        emit(Some(&path), &render_in(t, &view)?)?;
    }
    Ok(states.len())
}

/// Runs one command, printing results or writing them to `--output`.
pub fn run(cmd: Command) -> Result<(), Failure> {
    match cmd {
        Command::Validate { input } => {
            let t = read_triangulation(&input)?;
            let report = t.validate();
            if report.is_valid() {
                println!("valid");
                Ok(())
            } else {
                println!("invalid");
                println!("{}", serde_json::to_string_pretty(&report).expect("serializable"));
                Err(Failure {
                    code: 3,
                    message: format!(
                        "{} overlapping pairs, {} degenerate simplices",
                        report.offending_pairs.len(),
                        report.degenerate.len()
                    ),
                })
            }
        }
        Command::Star {
            input,
            point,
            output,
        } => {
            let p = read_polytope(&input)?;
            emit(output.as_deref(), &star_polytope(&p, &point)?.to_json())
        }
        Command::Refine {
            first,
            second,
            output,
        } => {
            let (a, b) = (read_triangulation(&first)?, read_triangulation(&second)?);
            emit(output.as_deref(), &common_refinement(&a, &b)?.to_json())
        }
        Command::Connect {
            source,
            target,
            output,
        } => {
            let (a, b) = (read_triangulation(&source)?, read_triangulation(&target)?);
            let script = theorem1_connect(&a, &b)?.with_endpoints(&a, &b);
            emit(output.as_deref(), &script.to_json())
        }
        Command::Replay {
            input,
            script,
            output,
        } => {
            let t = read_triangulation(&input)?;
            let s = read_script(&script)?;
            emit(output.as_deref(), &replay(&t, &s)?.to_json())
        }
        Command::Invert { input, output } => {
            emit(output.as_deref(), &invert(&read_script(&input)?)?.to_json())
        }
        Command::Valuate { input, valuation } => {
            let t = read_triangulation(&input)?;
            let mu = builtin(&valuation, t.ambient())?;
            emit(None, &extend(&mu, &Polyhedron::from_triangulation(&t))?.to_string())
        }
        Command::Bsp { input, output } => {
            let p = read_polytope(&input)?;
            let tree = bsp_json(&tverberg_bsp(&p)?);
            emit(output.as_deref(), &serde_json::to_string_pretty(&tree).expect("serializable"))
        }
        Command::Oracle {
            source,
            target,
            candidates,
            max_depth,
            output,
        } => {
            let (a, b) = (read_triangulation(&source)?, read_triangulation(&target)?);
            let c = PointSet::new(read_points(&candidates)?);
            match bfs_oracle(&a, &b, &c, max_depth) {
                Some(s) => emit(output.as_deref(), &s.to_json()),
                None => emit(output.as_deref(), "none"),
            }
        }
        Command::Render {
            input,
            script,
            frames,
            output,
        } => {
            let t = read_triangulation(&input)?;
            if let (Some(s), Some(dir)) = (&script, &frames) {
                let n = render_frames(&t, &read_script(s)?, dir)?;
                eprintln!("wrote {n} frames to {}", dir.display());
            } else if script.is_some() || frames.is_some() {
                return Err(Failure {
                    code: 2,
                    message: "--script and --frames go together".into(),
                });
            }
            if output.is_some() || frames.is_none() {
                emit(output.as_deref(), &render_svg(&t)?)?;
            }
            Ok(())
        }
    }
}

/// Parses `args` (program name first) and runs the command; returns the
/// exit status.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match run(cli.command) {
        Ok(()) => 0,
        Err(f) => {
            eprintln!("error: {}", f.message);
            f.code
        }
    }
}
