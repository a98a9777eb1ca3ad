//! `curvelace`: compile crochet patterns for parametrized surfaces, export
//! meshes and stitch graphs, plan knotted tubes, and verify the numerics.
//!
//! Exit codes: 0 success, 1 verification failure or I/O error, 2 usage or
//! validation error. All output is deterministic: identical invocations
//! produce byte-identical bytes on stdout.

use clap::{Args, Parser, Subcommand};
use curvelace::emitters::{self, MeshSampling};
use curvelace::knots::{self, KnotTable};
use curvelace::pattern::{build_stitch_graph, compile, CompileOptions, Gauge};
use curvelace::surfaces::{Family, SurfaceSpec};
use curvelace::verify;
use serde::Deserialize;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "curvelace",
    version,
    about = "Round-by-round crochet patterns for curved surfaces"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Compile a pattern: `pattern --surface enneper --n 2 --scale 2.11 --gauge 0.5x0.4 --rounds 18`
    Pattern(PatternArgs),
    /// Export a triangulated OBJ mesh: `mesh --surface bour --r-max 1 --samples 200x400 --out bour.obj`
    Mesh(MeshArgs),
    /// Tube lengths for a knot: `knot --name 3_1 --tube-diameter 0.8`
    Knot(KnotArgs),
    /// Run the built-in verification suites
    Verify,
    /// Export the stitch graph of a compiled pattern as JSON
    Graph(PatternArgs),
}

#[derive(Args, Default, Clone)]
struct SurfaceArgs {
    /// Surface family: disc, sphere, hyperbolic, enneper, richmond, bour,
    /// catenoid, helicoid, mobius
    #[arg(long)]
    surface: Option<String>,
    /// Rotational order (enneper >= 2, richmond >= 1)
    #[arg(long)]
    n: Option<u32>,
    /// Sphere or hyperbolic radius S in cm
    #[arg(long)]
    s: Option<f64>,
    /// Catenoid/helicoid neck parameter c
    #[arg(long)]
    c: Option<f64>,
    /// Helicoid turns
    #[arg(long)]
    turns: Option<u32>,
    #[arg(long)]
    r_min: Option<f64>,
    #[arg(long)]
    r_max: Option<f64>,
    /// Band half-width in (0, 1)
    #[arg(long)]
    half_width: Option<f64>,
    /// cm per parameter unit
    #[arg(long)]
    scale: Option<f64>,
}

#[derive(Args, Default)]
struct PatternArgs {
    #[command(flatten)]
    surface: SurfaceArgs,
    /// Stitch gauge as WxH in cm, e.g. 0.5x0.4
    #[arg(long)]
    gauge: Option<String>,
    #[arg(long)]
    rounds: Option<u32>,
    /// Plan rounds up to this intrinsic radius in cm
    #[arg(long)]
    stop_radius: Option<f64>,
    /// Output format: text, json, or csv
    #[arg(long)]
    format: Option<String>,
    /// Write here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
    /// JSON file with the same keys as the flags; flags win
    #[arg(long)]
    config: Option<PathBuf>,
}

#[derive(Args, Default)]
struct MeshArgs {
    #[command(flatten)]
    surface: SurfaceArgs,
    /// Grid resolution as RxT, e.g. 200x400
    #[arg(long)]
    samples: Option<String>,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    config: Option<PathBuf>,
}

#[derive(Args, Default)]
struct KnotArgs {
    /// Catalog name, e.g. 3_1
    #[arg(long)]
    name: Option<String>,
    /// Tube diameter in cm
    #[arg(long)]
    tube_diameter: Option<f64>,
    /// Also print the doubled-and-padded working length
    #[arg(long)]
    recommended: bool,
    /// JSON knot table; overrides CURVELACE_KNOT_TABLE
    #[arg(long)]
    knot_table: Option<PathBuf>,
    #[arg(long)]
    config: Option<PathBuf>,
}

/// File form of the flags; any subset may be present.
#[derive(Deserialize, Default)]
#[serde(deny_unknown_fields)]
struct FileConfig {
    surface: Option<String>,
    n: Option<u32>,
    s: Option<f64>,
    c: Option<f64>,
    turns: Option<u32>,
    r_min: Option<f64>,
    r_max: Option<f64>,
    half_width: Option<f64>,
    scale: Option<f64>,
    gauge: Option<String>,
    rounds: Option<u32>,
    stop_radius: Option<f64>,
    format: Option<String>,
    out: Option<PathBuf>,
    samples: Option<String>,
    name: Option<String>,
    tube_diameter: Option<f64>,
    knot_table: Option<PathBuf>,
}

enum CliError {
    /// Bad flags or values: exit 2.
    Validation(String),
    /// Failure while doing the work: exit 1.
    Runtime(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Validation(_) => 2,
            CliError::Runtime(_) => 1,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Validation(m) | CliError::Runtime(m) => m,
        }
    }
}

fn validation<E: std::fmt::Display>(e: E) -> CliError {
    CliError::Validation(e.to_string())
}

fn load_config(path: &Option<PathBuf>) -> Result<FileConfig, CliError> {
    match path {
        None => Ok(FileConfig::default()),
        Some(p) => {
            let text = std::fs::read_to_string(p)
                .map_err(|e| CliError::Validation(format!("cannot read config {p:?}: {e}")))?;
            serde_json::from_str(&text)
                .map_err(|e| CliError::Validation(format!("cannot parse config {p:?}: {e}")))
        }
    }
}

fn merge_surface(args: &SurfaceArgs, cfg: &FileConfig) -> SurfaceArgs {
    SurfaceArgs {
        surface: args.surface.clone().or_else(|| cfg.surface.clone()),
        n: args.n.or(cfg.n),
        s: args.s.or(cfg.s),
        c: args.c.or(cfg.c),
        turns: args.turns.or(cfg.turns),
        r_min: args.r_min.or(cfg.r_min),
        r_max: args.r_max.or(cfg.r_max),
        half_width: args.half_width.or(cfg.half_width),
        scale: args.scale.or(cfg.scale),
    }
}

fn require<T>(v: Option<T>, flag: &str) -> Result<T, CliError> {
    v.ok_or_else(|| CliError::Validation(format!("{flag} is required for this surface")))
}

fn build_surface(sa: &SurfaceArgs) -> Result<SurfaceSpec, CliError> {
    let name = require(sa.surface.clone(), "--surface")?;
    let family = match name.as_str() {
        "disc" => Family::Disc,
        "sphere" => Family::Sphere {
            radius: require(sa.s, "--s")?,
        },
        "hyperbolic" => Family::Hyperbolic {
            radius: require(sa.s, "--s")?,
        },
        "enneper" => Family::Enneper {
            order: require(sa.n, "--n")?,
        },
        "richmond" => Family::Richmond {
            order: require(sa.n, "--n")?,
            r_min: require(sa.r_min, "--r-min")?,
            r_max: require(sa.r_max, "--r-max")?,
        },
        "bour" => Family::Bour {
            r_max: sa.r_max.unwrap_or(1.0),
        },
        "catenoid" => Family::Catenoid {
            neck: require(sa.c, "--c")?,
            r_max: require(sa.r_max, "--r-max")?,
        },
        "helicoid" => Family::Helicoid {
            neck: require(sa.c, "--c")?,
            turns: sa.turns.unwrap_or(1),
            r_max: require(sa.r_max, "--r-max")?,
        },
        "mobius" => Family::MobiusRuled {
            half_width: require(sa.half_width, "--half-width")?,
        },
        other => {
            return Err(CliError::Validation(format!(
                "unknown surface '{other}'; expected disc, sphere, hyperbolic, enneper, richmond, bour, catenoid, helicoid, or mobius"
            )))
        }
    };
    SurfaceSpec::new(family, sa.scale.unwrap_or(1.0)).map_err(validation)
}

fn parse_gauge(text: &str) -> Result<Gauge, CliError> {
    let (w, h) = text
        .split_once('x')
        .ok_or_else(|| CliError::Validation(format!("gauge must be WxH in cm, got '{text}'")))?;
    let w: f64 = w
        .parse()
        .map_err(|_| CliError::Validation(format!("bad gauge width '{w}'")))?;
    let h: f64 = h
        .parse()
        .map_err(|_| CliError::Validation(format!("bad gauge height '{h}'")))?;
    Gauge::new(w, h).map_err(validation)
}

fn parse_samples(text: &str) -> Result<MeshSampling, CliError> {
    let (r, t) = text
        .split_once('x')
        .ok_or_else(|| CliError::Validation(format!("samples must be RxT, got '{text}'")))?;
    let r: u32 = r
        .parse()
        .map_err(|_| CliError::Validation(format!("bad sample count '{r}'")))?;
    let t: u32 = t
        .parse()
        .map_err(|_| CliError::Validation(format!("bad sample count '{t}'")))?;
    MeshSampling::new(r, t).map_err(validation)
}

fn emit(out: &Option<PathBuf>, content: &str) -> Result<(), CliError> {
    match out {
        None => {
            print!("{content}");
            Ok(())
        }
        Some(p) => std::fs::write(p, content)
            .map_err(|e| CliError::Runtime(format!("cannot write {p:?}: {e}"))),
    }
}

fn compile_from_args(args: &PatternArgs) -> Result<curvelace::Pattern, CliError> {
    let cfg = load_config(&args.config)?;
    let surface = build_surface(&merge_surface(&args.surface, &cfg))?;
    let gauge_text = args
        .gauge
        .clone()
        .or_else(|| cfg.gauge.clone())
        .ok_or_else(|| CliError::Validation("--gauge is required (WxH in cm)".into()))?;
    let gauge = parse_gauge(&gauge_text)?;
    let options = CompileOptions {
        rounds: args.rounds.or(cfg.rounds),
        stop_radius: args.stop_radius.or(cfg.stop_radius),
    };
    compile(&surface, &gauge, options).map_err(validation)
}

fn cmd_pattern(args: &PatternArgs) -> Result<(), CliError> {
    let cfg = load_config(&args.config)?;
    let pattern = compile_from_args(args)?;
    let format = args
        .format
        .clone()
        .or_else(|| cfg.format.clone())
        .unwrap_or_else(|| "text".into());
    let rendered = match format.as_str() {
        "text" => emitters::render_text(&pattern),
        "json" => emitters::render_json(&pattern),
        "csv" => emitters::render_csv(&pattern),
        other => {
            return Err(CliError::Validation(format!(
                "unknown format '{other}'; expected text, json, or csv"
            )))
        }
    };
    emit(&args.out.clone().or(cfg.out), &rendered)
}

fn cmd_graph(args: &PatternArgs) -> Result<(), CliError> {
    let cfg = load_config(&args.config)?;
    let pattern = compile_from_args(args)?;
    let graph = build_stitch_graph(&pattern).map_err(validation)?;
    emit(
        &args.out.clone().or(cfg.out),
        &emitters::export_graph(&graph),
    )
}

fn cmd_mesh(args: &MeshArgs) -> Result<(), CliError> {
    let cfg = load_config(&args.config)?;
    let surface = build_surface(&merge_surface(&args.surface, &cfg))?;
    let samples_text = args
        .samples
        .clone()
        .or_else(|| cfg.samples.clone())
        .unwrap_or_else(|| "64x128".into());
    let sampling = parse_samples(&samples_text)?.with_r_range(
        args.surface.r_min.or(cfg.r_min),
        args.surface.r_max.or(cfg.r_max),
    );
    let obj = emitters::export_obj(&surface, &sampling).map_err(validation)?;
    emit(&args.out.clone().or(cfg.out), &obj)
}

fn cmd_knot(args: &KnotArgs) -> Result<(), CliError> {
    let cfg = load_config(&args.config)?;
    let name = args
        .name
        .clone()
        .or_else(|| cfg.name.clone())
        .ok_or_else(|| CliError::Validation("--name is required".into()))?;
    let diameter = args
        .tube_diameter
        .or(cfg.tube_diameter)
        .ok_or_else(|| CliError::Validation("--tube-diameter is required (cm)".into()))?;
    let table = match args.knot_table.clone().or_else(|| cfg.knot_table.clone()) {
        Some(p) => KnotTable::load(Path::new(&p)).map_err(validation)?,
        None => KnotTable::from_env().map_err(validation)?,
    };
    let entry = table.get(&name).map_err(validation)?;
    let mut out = String::new();
    match knots::min_tube_length(entry, diameter) {
        Ok(min) => out.push_str(&format!(
            "{} ({} crossings): {:.2} cm minimum tube length at {:.2} cm diameter (ropelength {:.2})\n",
            entry.name,
            entry.crossings,
            min,
            diameter,
            entry.min_ropelength.expect("bound present"),
        )),
        Err(e) => {
            if !args.recommended {
                return Err(validation(e));
            }
            out.push_str(&format!(
                "{} ({} crossings): no ropelength bound on record\n",
                entry.name, entry.crossings
            ));
        }
    }
    if args.recommended {
        let rec = knots::recommended_length(entry, diameter).map_err(validation)?;
        out.push_str(&format!(
            "recommended working length: {rec:.2} cm (twice the trefoil minimum plus 10 cm per extra crossing)\n"
        ));
    }
    print!("{out}");
    Ok(())
}

fn cmd_verify() -> Result<(), CliError> {
    let results = verify::run_all();
    let mut failures = 0;
    for r in &results {
        let tag = if r.passed { "PASS" } else { "FAIL" };
        println!("{tag} {} \u{2014} {}", r.name, r.detail);
        if !r.passed {
            failures += 1;
        }
    }
    if failures == 0 {
        println!("all {} checks passed", results.len());
        Ok(())
    } else {
        Err(CliError::Runtime(format!(
            "{failures} of {} checks failed",
            results.len()
        )))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.cmd {
        Cmd::Pattern(a) => cmd_pattern(a),
        Cmd::Mesh(a) => cmd_mesh(a),
        Cmd::Knot(a) => cmd_knot(a),
        Cmd::Verify => cmd_verify(),
        Cmd::Graph(a) => cmd_graph(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.code())
        }
    }
}
