//! Command-line front end for the tiling decision engine.
//!
//! Five subcommands: `decide`, `verify`, `select`, `subgroup` and
//! `render`. Each takes one self-contained JSON problem file; reports go
//! to stdout as JSON, diagnostics to stderr. Exit codes: 0 for
//! tiles/pass/found/discrete, 1 for does-not-tile/none/dense, 2 for
//! invalid input, 3 for a failed verification.

pub mod svg;

use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use num_rational::BigRational;
use serde_json::{json, Value};

use multitile::decider::{decide, Verdict};
use multitile::json as wire;
use multitile::numfield::FieldSpec;
use multitile::oracle::sample_verify;
use multitile::planar::{edge_pairs, validate_polygon, Polygon, PolygonError};
use multitile::selector::{select_j, selection_certificate, SelectorInstance};
use multitile::subgroup::{is_discrete, LatticeBasis};

#[derive(Parser, Debug)]
#[command(
    name = "multitile",
    about = "Decides multiple lattice tilings of the plane by centrally symmetric convex polygons",
    version
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Decide whether the polygon tiles multiply with some lattice.
    /// Exit 0 when it tiles, 1 when it does not, 2 on invalid input.
    Decide { file: PathBuf },
    /// Check a claimed tiling level by exact multiplicity sampling.
    /// Exit 0 on pass, 3 on fail, 2 on invalid input.
    Verify {
        file: PathBuf,
        /// Expected level; defaults to the level in the file, else to
        /// area/covolume.
        #[arg(long)]
        level: Option<u64>,
        /// Number of samples (default 1000).
        #[arg(long)]
        samples: Option<u64>,
        /// PRNG seed (default 0).
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Find an index set J making the mixed tau/e span discrete.
    /// Exit 0 when some J exists, 1 when none does, 2 on invalid input.
    Select { file: PathBuf },
    /// Ad-hoc discreteness query for a list of generators.
    /// Exit 0 when discrete, 1 when dense, 2 on invalid input.
    Subgroup { file: PathBuf },
    /// Render the polygon (and its tiling, when one is available) as SVG.
    /// Exit 0 on success, 2 on invalid input.
    Render {
        file: PathBuf,
        /// View window "x0,y0,x1,y1" (default: 3x the polygon bounding box).
        #[arg(long)]
        window: Option<String>,
        /// Output path; "-" streams the SVG to stdout.
        #[arg(long, default_value = "out.svg")]
        out: PathBuf,
        /// Draw only the outline with edge and translation arrows.
        #[arg(long)]
        outline: bool,
    },
}

/// A diagnostic with the exit code it maps to.
#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    fn invalid(message: impl Into<String>) -> CliError {
        CliError {
            code: 2,
            message: message.into(),
        }
    }
}

impl From<wire::JsonError> for CliError {
    fn from(e: wire::JsonError) -> CliError {
        CliError::invalid(e.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> CliError {
        CliError::invalid(format!("io error: {e}"))
    }
}

fn polygon_error_code(e: &PolygonError) -> &'static str {
    match e {
        PolygonError::TooFewVertices { .. } => "TooFewVertices",
        PolygonError::OddVertexCount { .. } => "OddVertexCount",
        PolygonError::DegenerateEdge { .. } => "DegenerateEdge",
        PolygonError::NotConvex { .. } => "NotConvex",
        PolygonError::NotSymmetric { .. } => "NotSymmetric",
        PolygonError::MixedFieldSpec { .. } => "MixedFieldSpec",
        PolygonError::ParallelTaus { .. } => "ParallelTaus",
    }
}

impl From<PolygonError> for CliError {
    fn from(e: PolygonError) -> CliError {
        CliError::invalid(format!("{}: {e}", polygon_error_code(&e)))
    }
}

/// A parsed problem file: the field, the polygon, and optional lattice
/// plus command parameters.
struct ProblemFile {
    #[allow(dead_code)]
    spec: FieldSpec,
    polygon: Polygon,
    lattice: Option<LatticeBasis>,
    level: Option<u64>,
    samples: Option<u64>,
    seed: Option<u64>,
    window: Option<svg::Window>,
}

fn read_json(path: &Path) -> Result<Value, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::invalid(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| CliError::invalid(format!("malformed JSON: {e}")))
}

fn parse_field(root: &Value) -> Result<FieldSpec, CliError> {
    let field = root
        .get("field")
        .ok_or_else(|| CliError::invalid("missing field: field"))?;
    Ok(wire::field_spec_from_json(field)?)
}

fn parse_problem(path: &Path) -> Result<ProblemFile, CliError> {
    let root = read_json(path)?;
    let spec = parse_field(&root)?;
    let polygon_v = root
        .get("polygon")
        .ok_or_else(|| CliError::invalid("missing field: polygon"))?;
    let vertices_v = polygon_v
        .get("vertices")
        .ok_or_else(|| CliError::invalid("missing field: polygon.vertices"))?;
    let vertices = wire::vectors_from_json(&spec, vertices_v, "polygon.vertices")?;
    let polygon = validate_polygon(vertices)?;

    let lattice = match root.get("lattice") {
        Some(Value::Null) | None => None,
        Some(v) => Some(wire::lattice_from_json(&spec, v, "lattice")?),
    };
    let opt_u64 = |key: &str| -> Result<Option<u64>, CliError> {
        match root.get(key) {
            Some(Value::Null) | None => Ok(None),
            Some(v) => v
                .as_u64()
                .map(Some)
                .ok_or_else(|| CliError::invalid(format!("{key} must be a non-negative integer"))),
        }
    };
    let window = match root.get("window") {
        Some(Value::Null) | None => None,
        Some(v) => Some(parse_window_json(v)?),
    };
    Ok(ProblemFile {
        spec,
        polygon,
        lattice,
        level: opt_u64("level")?,
        samples: opt_u64("samples")?,
        seed: opt_u64("seed")?,
        window,
    })
}

fn parse_window_json(value: &Value) -> Result<svg::Window, CliError> {
    let list = value
        .as_array()
        .filter(|l| l.len() == 4)
        .ok_or_else(|| CliError::invalid("window must be [x0, y0, x1, y1]"))?;
    let mut values = Vec::with_capacity(4);
    for (i, v) in list.iter().enumerate() {
        values.push(wire::rational_from_json(v, &format!("window[{i}]"))?);
    }
    window_from_values(values)
}

fn parse_window_flag(text: &str) -> Result<svg::Window, CliError> {
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() != 4 {
        return Err(CliError::invalid("window flag must be \"x0,y0,x1,y1\""));
    }
    let mut values = Vec::with_capacity(4);
    for p in parts {
        values.push(
            multitile::numfield::parse_rational(p.trim())
                .map_err(|e| CliError::invalid(format!("window flag: {e}")))?,
        );
    }
    window_from_values(values)
}

fn window_from_values(mut values: Vec<BigRational>) -> Result<svg::Window, CliError> {
    let y1 = values.pop().unwrap();
    let x1 = values.pop().unwrap();
    let y0 = values.pop().unwrap();
    let x0 = values.pop().unwrap();
    if x0 >= x1 || y0 >= y1 {
        return Err(CliError::invalid("window must satisfy x0 < x1 and y0 < y1"));
    }
    Ok(svg::Window { x0, y0, x1, y1 })
}

/// Runs a parsed command; returns the exit code and the stdout payload.
pub fn run(command: &Command) -> Result<(i32, String), CliError> {
    match command {
        Command::Decide { file } => {
            let problem = parse_problem(file)?;
            let verdict = decide(&problem.polygon)?;
            let code = if verdict.tiles() { 0 } else { 1 };
            let out = serde_json::to_string_pretty(&wire::verdict_to_json(&verdict)).unwrap();
            Ok((code, out + "\n"))
        }
        Command::Verify {
            file,
            level,
            samples,
            seed,
        } => {
            let problem = parse_problem(file)?;
            let lattice = problem
                .lattice
                .ok_or_else(|| CliError::invalid("verify needs a lattice in the problem file"))?;
            let level = match level.or(problem.level) {
                Some(k) => k,
                None => implied_level(&problem.polygon, &lattice)?,
            };
            let samples = samples.or(problem.samples).unwrap_or(1000);
            let seed = seed.or(problem.seed).unwrap_or(0);
            let report = sample_verify(&problem.polygon, &lattice, level, samples, seed)
                .map_err(|e| CliError::invalid(e.to_string()))?;
            let code = if report.pass { 0 } else { 3 };
            let out = serde_json::to_string_pretty(&wire::report_to_json(&report)).unwrap();
            Ok((code, out + "\n"))
        }
        Command::Select { file } => {
            let root = read_json(file)?;
            let spec = parse_field(&root)?;
            let e_v = root
                .get("e")
                .ok_or_else(|| CliError::invalid("missing field: e"))?;
            let tau_v = root
                .get("tau")
                .ok_or_else(|| CliError::invalid("missing field: tau"))?;
            let e = wire::vectors_from_json(&spec, e_v, "e")?;
            let tau = wire::vectors_from_json(&spec, tau_v, "tau")?;
            let instance = SelectorInstance::new(e, tau)
                .map_err(|err| CliError::invalid(err.to_string()))?;
            match select_j(&instance) {
                Some(selected) => {
                    let certificate = selection_certificate(&instance, &selected);
                    let coefficients: Value = match certificate.lattice() {
                        Some(basis) => Value::Array(
                            instance
                                .mixed_generators(&selected)
                                .iter()
                                .map(|g| {
                                    let (a, b) = basis.coords_of(g);
                                    json!([
                                        wire::element_to_json(&a),
                                        wire::element_to_json(&b)
                                    ])
                                })
                                .collect(),
                        ),
                        None => Value::Null,
                    };
                    let out = json!({
                        "J": wire::index_set_to_json(&selected),
                        "certificate": wire::discreteness_to_json(&certificate),
                        "coefficients": coefficients,
                    });
                    Ok((0, serde_json::to_string_pretty(&out).unwrap() + "\n"))
                }
                None => {
                    let out = json!({ "J": Value::Null });
                    Ok((1, serde_json::to_string_pretty(&out).unwrap() + "\n"))
                }
            }
        }
        Command::Subgroup { file } => {
            let root = read_json(file)?;
            let spec = parse_field(&root)?;
            let generators_v = root
                .get("generators")
                .ok_or_else(|| CliError::invalid("missing field: generators"))?;
            let generators = wire::vectors_from_json(&spec, generators_v, "generators")?;
            let result = is_discrete(&generators);
            let code = if result.is_discrete() { 0 } else { 1 };
            let out = serde_json::to_string_pretty(&wire::discreteness_to_json(&result)).unwrap();
            Ok((code, out + "\n"))
        }
        Command::Render {
            file,
            window,
            out,
            outline,
        } => {
            let problem = parse_problem(file)?;
            let view = match window {
                Some(text) => parse_window_flag(text)?,
                None => match &problem.window {
                    Some(w) => w.clone(),
                    None => svg::Window::around(&problem.polygon),
                },
            };
            let document = if *outline {
                let pairing = edge_pairs(&problem.polygon)?;
                svg::render_outline(&problem.polygon, &pairing, &view)
            } else if let Some(lattice) = &problem.lattice {
                let level = checked_level(&problem.polygon, lattice);
                svg::render_tiling(&problem.polygon, lattice, level, &view)
            } else {
                match decide(&problem.polygon)? {
                    Verdict::Tiles(witness) => svg::render_tiling(
                        &problem.polygon,
                        &witness.lattice,
                        Some(witness.level),
                        &view,
                    ),
                    Verdict::DoesNotTile { .. } => {
                        let pairing = edge_pairs(&problem.polygon)?;
                        svg::render_outline(&problem.polygon, &pairing, &view)
                    }
                }
            };
            if out.as_os_str() == "-" {
                Ok((0, document))
            } else {
                std::fs::write(out, &document)?;
                Ok((0, String::new()))
            }
        }
    }
}

/// The tiling level `area / covolume` when it is a positive integer.
fn implied_level(polygon: &Polygon, lattice: &LatticeBasis) -> Result<u64, CliError> {
    checked_level(polygon, lattice).ok_or_else(|| {
        CliError::invalid("area/covolume is not a positive integer; pass --level explicitly")
    })
}

fn checked_level(polygon: &Polygon, lattice: &LatticeBasis) -> Option<u64> {
    let quotient = multitile::planar::area(polygon)
        .div(&lattice.covolume())
        .ok()?;
    let n = quotient.to_integer()?;
    u64::try_from(n).ok().filter(|&k| k > 0)
}

/// Entry point used by `main`: parses, runs, prints, exits.
pub fn main_impl() -> i32 {
    let cli = Cli::parse();
    match run(&cli.command) {
        Ok((code, stdout)) => {
            print!("{stdout}");
            code
        }
        Err(e) => {
            eprintln!("error: {}", e.message);
            e.code
        }
    }
}

/// Runs a command, separating exit code, stdout and the diagnostic.
pub fn run_captured(command: &Command) -> (i32, String, String) {
    match run(command) {
        Ok((code, stdout)) => (code, stdout, String::new()),
        Err(e) => (e.code, String::new(), e.message),
    }
}
