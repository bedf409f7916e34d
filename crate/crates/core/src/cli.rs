//! Command-line front end.
//!
//! Exit codes: 0 success, 1 invalid input, 2 verification failed,
//! 3 budget or horizon exhausted.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::geometry::rational::{parse_q, q, zero, Q};
use crate::geometry::{
    build_k, build_m, build_relation_track, build_v, build_w, certified_m, loop_gn, project_scene, slice_scene, Axis,
    GeometryError, Scene4, SceneMeta, SliceResult,
};
use crate::group::{make_group, GroupSpec};
use crate::io::{
    parse_group_file, parse_scene_json, presentation_to_text, read_file, render_svg, scene_to_json, spec_hash,
    write_file, IoError, RenderStyle,
};
use crate::presentation::{build_presentation, Relation, RelationStream, TrianglePresentation, DEFAULT_M_HORIZON};
use crate::verify::{verify_finite_iso, Budget, Verdict, VerifyError};
use crate::Group;

#[derive(Debug, Parser)]
#[command(name = "compactum", version, about = "Triangle presentations and 4D compacta for countable groups")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write the triangle presentation after the given number of rounds.
    Present {
        #[arg(long)]
        group: PathBuf,
        #[arg(long, default_value_t = 10)]
        rounds: usize,
        /// Output file, `-` for standard output.
        #[arg(short, long, default_value = "-")]
        output: PathBuf,
    },
    /// Certify that a finite truncation presents the (finite) group.
    Verify {
        #[arg(long)]
        group: PathBuf,
        #[arg(long, default_value_t = Budget::default().max_cosets)]
        max_cosets: usize,
        #[arg(long, default_value_t = Budget::default().max_rounds)]
        max_rounds: usize,
    },
    /// Build a scene from the first relations of the presentation.
    Build {
        #[arg(long)]
        group: PathBuf,
        #[arg(long)]
        relations: usize,
        #[arg(long, value_enum, default_value_t = Component::K)]
        component: Component,
        #[arg(long, default_value_t = DEFAULT_M_HORIZON)]
        horizon: usize,
        #[arg(short, long, default_value = "-")]
        output: PathBuf,
    },
    /// Render the section of a scene by the plane fixing two coordinates.
    Slice {
        #[arg(long)]
        scene: PathBuf,
        /// Two fixed coordinates, e.g. `x3=1/2,x4=7/8`.
        #[arg(long)]
        fix: String,
        /// The two free coordinates, e.g. `x1,x2`.
        #[arg(long)]
        axes: String,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Render the projection of a scene onto two coordinates.
    Project {
        #[arg(long)]
        scene: PathBuf,
        #[arg(long)]
        axes: String,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Write the standard figure set as SVG files.
    Figures {
        #[arg(short, long)]
        output: PathBuf,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Component {
    V,
    W,
    M,
    K,
}

#[derive(Debug)]
enum Failure {
    Input(String),
    Rejected(String),
    Budget(String),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Input(_) => 1,
            Failure::Rejected(_) => 2,
            Failure::Budget(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Input(m) | Failure::Rejected(m) | Failure::Budget(m) => m,
        }
    }
}

impl From<IoError> for Failure {
    fn from(e: IoError) -> Self {
        match e {
            IoError::Geometry(g) => g.into(),
            other => Failure::Input(other.to_string()),
        }
    }
}

impl From<GeometryError> for Failure {
    fn from(e: GeometryError) -> Self {
        match e {
            GeometryError::UncertifiedM(_) => Failure::Budget(e.to_string()),
            other => Failure::Input(other.to_string()),
        }
    }
}

impl From<VerifyError> for Failure {
    fn from(e: VerifyError) -> Self {
        Failure::Input(e.to_string())
    }
}

/// Runs the command line with process streams.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    run_with(args, &mut std::io::stdout().lock(), &mut std::io::stderr().lock())
}

/// Runs the command line, writing reports to `out` and diagnostics to `err`.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(()) => 0,
        Err(failure) => {
            let _ = writeln!(err, "error: {}", failure.message());
            failure.code()
        }
    }
}

fn emit(path: &Path, text: &str, out: &mut dyn Write) -> Result<(), Failure> {
    if path == Path::new("-") {
        out.write_all(text.as_bytes()).map_err(|e| Failure::Input(e.to_string()))
    } else {
        Ok(write_file(path, text)?)
    }
}

fn execute(command: Command, out: &mut dyn Write) -> Result<(), Failure> {
    match command {
        Command::Present { group, rounds, output } => {
            let loaded = parse_group_file(&group)?;
            let p = build_presentation(&loaded.group, rounds).map_err(|e| Failure::Input(e.to_string()))?;
            emit(&output, &presentation_to_text(&p, &loaded.group), out)
        }
        Command::Verify { group, max_cosets, max_rounds } => {
            let loaded = parse_group_file(&group)?;
            let cert = verify_finite_iso(&loaded.group, Budget { max_cosets, max_rounds })?;
            let _ = writeln!(out, "{cert}");
            match cert.verdict {
                Verdict::Pass => Ok(()),
                Verdict::Fail => Err(Failure::Rejected(format!("verification failed: {cert}"))),
                Verdict::Inconclusive => Err(Failure::Budget(format!("budget exhausted: {cert}"))),
            }
        }
        Command::Build { group, relations, component, horizon, output } => {
            let loaded = parse_group_file(&group)?;
            let mut scene = build_component(&loaded.group, relations, component, horizon)?;
            scene.meta.group = Some(spec_hash(&loaded.spec));
            emit(&output, &scene_to_json(&scene), out)
        }
        Command::Slice { scene, fix, axes, output } => {
            let scene = parse_scene_json(&read_file(&scene)?)?;
            let fixed = parse_fix(&fix)?;
            let axes = parse_axes(&axes)?;
            let result = slice_scene(&scene, fixed)?;
            let result = orient(result, axes)?;
            emit(&output, &render_svg(&result, &RenderStyle::default())?, out)
        }
        Command::Project { scene, axes, output } => {
            let scene = parse_scene_json(&read_file(&scene)?)?;
            let result = project_scene(&scene, parse_axes(&axes)?)?;
            emit(&output, &render_svg(&result, &RenderStyle::default())?, out)
        }
        Command::Figures { output } => {
            std::fs::create_dir_all(&output).map_err(|e| Failure::Input(format!("{}: {e}", output.display())))?;
            for (name, svg) in figure_set()? {
                write_file(&output.join(name), &svg)?;
            }
            Ok(())
        }
    }
}

fn parse_axis(text: &str) -> Result<Axis, Failure> {
    Axis::parse(text).ok_or_else(|| Failure::Input(format!("unknown axis {text:?}, expected x1..x4")))
}

fn parse_axes(text: &str) -> Result<[Axis; 2], Failure> {
    let parts: Vec<&str> = text.split(',').collect();
    let [a, b] = parts.as_slice() else {
        return Err(Failure::Input(format!("expected two axes, got {text:?}")));
    };
    Ok([parse_axis(a)?, parse_axis(b)?])
}

fn parse_fix(text: &str) -> Result<[(Axis, Q); 2], Failure> {
    let mut fixed = Vec::new();
    for part in text.split(',') {
        let (axis, value) =
            part.split_once('=').ok_or_else(|| Failure::Input(format!("expected AXIS=VALUE, got {part:?}")))?;
        let value = parse_q(value).ok_or_else(|| Failure::Input(format!("bad rational {value:?}")))?;
        fixed.push((parse_axis(axis)?, value));
    }
    fixed.try_into().map_err(|_| Failure::Input(format!("expected two fixed coordinates, got {text:?}")))
}

/// Puts the slice in the requested coordinate order.
fn orient(result: SliceResult, axes: [Axis; 2]) -> Result<SliceResult, Failure> {
    if axes == result.axes {
        Ok(result)
    } else if axes == [result.axes[1], result.axes[0]] {
        Ok(result.transposed())
    } else {
        Err(Failure::Input(format!("free axes of this slice are {},{}", result.axes[0], result.axes[1])))
    }
}

/// Builds `V`, `W`, `M` or `K` for the first `relations` relations.
pub fn build_component(
    group: &Group,
    relations: usize,
    component: Component,
    horizon: usize,
) -> Result<Scene4, GeometryError> {
    if component == Component::K {
        return build_k(group, relations, horizon);
    }
    let mut stream = RelationStream::new(group);
    let count = stream.first_relations(relations).max_index();
    let mut scene = match component {
        Component::V => build_v(count),
        Component::W => build_w(&certified_m(&mut stream, count, horizon)?, count)?,
        _ => build_m(&certified_m(&mut stream, count, horizon)?, count)?,
    };
    scene.meta.relations = relations;
    Ok(scene)
}

/// Group, relation count and loop count used by the projection figures.
const FIGURE_RELATIONS: usize = 7;
const FIGURE_LOOPS: usize = 8;

/// The figure set: the loop `g_1`, the graph `V`, five sections of a Pair
/// track and the projections of `W`, `M` and `K` onto `(x3, x4)`.
pub fn figure_set() -> Result<Vec<(String, String)>, IoError> {
    let style = RenderStyle::default();
    let mut figures = Vec::new();
    let z = zero();

    let loop_scene = Scene4::new(SceneMeta::new("loop", 0, 1), loop_gn(1)?.to_vec())?;
    let a = slice_scene(&loop_scene, [(Axis::X3, z.clone()), (Axis::X4, z.clone())])?;
    figures.push(("fig_a_loop.svg".to_string(), render_svg(&a, &style)?));

    let b = project_scene(&build_v(FIGURE_LOOPS), [Axis::X1, Axis::X2])?;
    figures.push(("fig_b_v.svg".to_string(), render_svg(&b, &style)?));

    // the Pair relation g_1 g_2 drawn as relation r_2, so the track sits at x3 = 1/2
    let pair = Relation::new(2, vec![1, 2]).expect("pair");
    let trivial = make_group(&GroupSpec::Cyclic { n: 1 })?;
    let p = TrianglePresentation::from_relations(&trivial, vec![Relation::new(1, vec![1]).expect("unit"), pair], 2);
    let track = build_relation_track(&p, 2)?;
    let h = q(1, 2);
    for (name, t) in [("0", 0), ("1_4", 1), ("1_2", 2), ("3_4", 3), ("1", 4)] {
        let value = q(t, 4);
        let s = slice_scene(&track, [(Axis::X3, h.clone()), (Axis::X4, value)])?;
        figures.push((format!("track_t{name}.svg"), render_svg(&s, &style)?));
    }

    let z2 = make_group(&GroupSpec::Cyclic { n: 2 })?;
    for (name, component) in [("w", Component::W), ("m", Component::M), ("k", Component::K)] {
        let scene = build_component(&z2, FIGURE_RELATIONS, component, DEFAULT_M_HORIZON)?;
        let s = project_scene(&scene, [Axis::X3, Axis::X4])?;
        figures.push((format!("proj_{name}.svg"), render_svg(&s, &style)?));
    }
    Ok(figures)
}
