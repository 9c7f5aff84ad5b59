//! Command-line definitions and dispatch.

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use crease_core::surface::PREVIEW_RESOLUTION;

use crate::analyze::{analyze, crease_csv, load};
use crate::error::{exit, CliError, Result};
use crate::obj::to_obj_string;
use crate::shape::{sidecar_path, ShapeSpec, Sidecar};
use crate::sweep::{sweep_csv, Range, SweepParam};
use crate::verify::{self, parse_overrides, Suite};

#[derive(Debug, Parser)]
#[command(name = "creasekit", version, about = "Gaussian curvature of creased and folded surfaces")]
pub struct Cli {
    /// Read angle arguments (alpha, mu and angle sweep ranges) in degrees.
    #[arg(long, global = true)]
    pub degrees: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a surface mesh and write it as OBJ plus a JSON spec sidecar.
    Generate {
        #[command(subcommand)]
        shape: ShapeArgs,
    },
    /// Measure angle defects and compare with the closed forms.
    Analyze(AnalyzeArgs),
    /// Run the verification suites.
    Verify(VerifyArgs),
    /// Tabulate closed forms and oracles over one parameter.
    Sweep(SweepArgs),
}

#[derive(Debug, Args)]
pub struct MeshArgs {
    /// Output OBJ path; the sidecar goes next to it with a .json extension.
    #[arg(long)]
    pub out: PathBuf,
    /// Cells along the first mesh direction.
    #[arg(long, default_value_t = PREVIEW_RESOLUTION)]
    pub nu: usize,
    /// Cells along the second mesh direction.
    #[arg(long, default_value_t = PREVIEW_RESOLUTION)]
    pub nv: usize,
}

#[derive(Debug, Subcommand)]
pub enum ShapeArgs {
    /// Smooth cylinder with helical lines drawn at angle alpha to the axis.
    Cylinder {
        #[arg(long, default_value_t = 1.0)]
        a: f64,
        #[arg(long)]
        alpha: f64,
        /// Spacing of the lines.
        #[arg(long)]
        h: f64,
        #[command(flatten)]
        mesh: MeshArgs,
    },
    /// Twisted-prismatic tube of flat-across strips joined at helical creases.
    Tube {
        #[arg(long, default_value_t = 1.0)]
        a: f64,
        #[arg(long)]
        alpha: f64,
        #[arg(long)]
        strips: usize,
        #[command(flatten)]
        mesh: MeshArgs,
    },
    /// Patch z = kxy x y, optionally folded along the x axis.
    TwistedPatch {
        #[arg(long)]
        kxy: f64,
        #[arg(long, default_value_t = 1.0)]
        a_len: f64,
        #[arg(long, default_value_t = 1.0)]
        b_len: f64,
        #[arg(long, default_value_t = 0.0)]
        mu: f64,
        #[command(flatten)]
        mesh: MeshArgs,
    },
    /// Circular crease flanked by two conical strips.
    CurvedCrease {
        #[arg(long = "R", alias = "radius")]
        radius: f64,
        #[arg(long)]
        mu: f64,
        #[arg(long)]
        width: f64,
        #[command(flatten)]
        mesh: MeshArgs,
    },
    /// Transverse arc swept around an axis.
    Mudguard {
        #[arg(long = "R", alias = "radius")]
        radius: f64,
        #[arg(long = "r")]
        r: f64,
        #[arg(long)]
        mu: f64,
        #[command(flatten)]
        mesh: MeshArgs,
    },
    /// Sphere made of n developable gores.
    GoreSphere {
        #[arg(long)]
        n: usize,
        #[arg(long, alias = "R", default_value_t = 1.0)]
        radius: f64,
        #[command(flatten)]
        mesh: MeshArgs,
    },
}

impl ShapeArgs {
    fn into_parts(self, angle: f64) -> (ShapeSpec, MeshArgs) {
        match self {
            ShapeArgs::Cylinder { a, alpha, h, mesh } => (ShapeSpec::Cylinder { a, alpha: alpha * angle, h }, mesh),
            ShapeArgs::Tube { a, alpha, strips, mesh } => (ShapeSpec::Tube { a, alpha: alpha * angle, strips }, mesh),
            ShapeArgs::TwistedPatch { kxy, a_len, b_len, mu, mesh } => (
                ShapeSpec::TwistedPatch {
                    kxy,
                    a_len,
                    b_len,
                    mu: mu * angle,
                },
                mesh,
            ),
            ShapeArgs::CurvedCrease { radius, mu, width, mesh } => (
                ShapeSpec::CurvedCrease {
                    radius,
                    mu: mu * angle,
                    width,
                },
                mesh,
            ),
            ShapeArgs::Mudguard { radius, r, mu, mesh } => (ShapeSpec::Mudguard { radius, r, mu: mu * angle }, mesh),
            ShapeArgs::GoreSphere { n, radius, mesh } => (ShapeSpec::GoreSphere { n, radius }, mesh),
        }
    }
}

#[derive(Debug, Args)]
pub struct AnalyzeArgs {
    /// OBJ written by `generate`, or its JSON sidecar.
    #[arg(long = "in")]
    pub input: PathBuf,
    /// JSON report path; standard output when omitted.
    #[arg(long)]
    pub report: Option<PathBuf>,
    /// Per-crease CSV table path.
    #[arg(long)]
    pub csv: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value_t = Suite::All)]
    pub suite: Suite,
    /// Tolerance override as name=value; repeatable.
    #[arg(long = "tol", value_name = "NAME=VALUE")]
    pub tol: Vec<String>,
    /// JSON report path.
    #[arg(long, default_value = "verification-report.json")]
    pub report: PathBuf,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[arg(long, value_enum)]
    pub param: SweepParam,
    /// lo:hi:steps, both ends included.
    #[arg(long)]
    pub range: Range,
    /// CSV output path; standard output when omitted.
    #[arg(long)]
    pub csv: Option<PathBuf>,
}

fn write(path: &Path, contents: &str) -> Result<()> {
    fs::write(path, contents).map_err(|source| CliError::Write {
        path: path.to_path_buf(),
        source,
    })
}

fn json<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report serializes");
    s.push('\n');
    s
}

/// Runs a parsed command and returns the exit code.
pub fn run(cli: Cli) -> Result<u8> {
    let angle = if cli.degrees { std::f64::consts::PI / 180.0 } else { 1.0 };
    match cli.command {
        Command::Generate { shape } => {
            let (spec, mesh_args) = shape.into_parts(angle);
            let sidecar = Sidecar::new(spec, mesh_args.nu, mesh_args.nv);
            let mesh = sidecar.build()?;
            let obj = to_obj_string(&mesh, Some(&sidecar.to_json_line())).map_err(|e| CliError::Usage(e.to_string()))?;
            write(&mesh_args.out, &obj)?;
            let side = sidecar_path(&mesh_args.out);
            write(&side, &sidecar.to_json_pretty())?;
            println!(
                "wrote {} ({} vertices, {} triangles, {} creases) and {}",
                mesh_args.out.display(),
                mesh.vertices.len(),
                mesh.triangles.len(),
                mesh.creases.len(),
                side.display()
            );
        }
        Command::Analyze(args) => {
            let (mesh, sidecar, kind) = load(&args.input)?;
            let report = analyze(&mesh, sidecar.as_ref(), kind)?;
            match &args.report {
                Some(p) => write(p, &json(&report))?,
                None => print!("{}", json(&report)),
            }
            if let Some(p) = &args.csv {
                write(p, &crease_csv(&report)?)?;
            }
        }
        Command::Verify(args) => {
            let overrides = parse_overrides(&args.tol)?;
            let reports = verify::run(args.suite, &overrides)?;
            print!("{}", verify::table(&reports));
            write(&args.report, &json(&reports))?;
            if reports.iter().any(|r| !r.passed) {
                return Ok(exit::VERIFICATION_FAILED);
            }
        }
        Command::Sweep(args) => {
            let range = if args.param.is_angle() { args.range.scaled(angle) } else { args.range };
            let csv = sweep_csv(args.param, range)?;
            match &args.csv {
                Some(p) => write(p, &csv)?,
                None => print!("{csv}"),
            }
        }
    }
    Ok(exit::SUCCESS)
}
