//! `twistflow`: evaluate, sample and verify the annulus twist flow.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use annulus_twist::annulus::core_geodesic;
use annulus_twist::trajectory::{format_f64, sample_flow, Projection};
use annulus_twist::twist::{dehn_twist, method, DEFAULT_METHOD};
use annulus_twist::{verify, AnnulusCoords, Error, TwistParameter};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

const EXIT_USAGE: u8 = 1;
const EXIT_VERIFY_FAILED: u8 = 2;

#[derive(Parser)]
#[command(
    name = "twistflow",
    version,
    about = "Fenchel–Nielsen twist flow on annulus cross-ratio coordinates"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Twist a coordinate quadruple by t.
    Twist(TwistArgs),
    /// Sample the flow on [0, t] and write a trajectory.
    Flow(FlowArgs),
    /// Apply the m-fold Dehn twist (rational map).
    Dehn(DehnArgs),
    /// Run the seeded self-check suites.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Args)]
struct TwistArgs {
    /// Coordinates X1,X2,X3,X4 (positive decimals).
    #[arg(long)]
    coords: String,
    /// Twist amount in units of the core length.
    #[arg(long, allow_negative_numbers = true)]
    t: f64,
    /// closed | p-form | oracle
    #[arg(long, default_value = DEFAULT_METHOD)]
    method: String,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Output path (default stdout).
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct FlowArgs {
    #[arg(long)]
    coords: String,
    /// Largest twist amount; samples are taken uniformly on [0, t].
    #[arg(long)]
    t: f64,
    /// Number of intervals; steps + 1 samples are written.
    #[arg(long, default_value_t = 100)]
    steps: usize,
    #[arg(long, default_value = DEFAULT_METHOD)]
    method: String,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Also render the curve as SVG.
    #[arg(long)]
    svg: Option<PathBuf>,
    /// Plotted coordinates: Xi,Xj or logXi,logXj.
    #[arg(long, default_value = "logX1,logX2")]
    proj: String,
    /// Accepted for interface uniformity; the flow is deterministic.
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args)]
struct DehnArgs {
    #[arg(long)]
    coords: String,
    /// Number of Dehn twists (negative for inverse twists).
    #[arg(long, allow_negative_numbers = true, default_value_t = 1)]
    m: i64,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Random cases per suite.
    #[arg(long, default_value_t = 1000)]
    samples: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Maximum accepted relative error.
    #[arg(long, default_value_t = 1e-9)]
    tol: f64,
}

fn parse_coords(s: &str) -> Result<AnnulusCoords, Error> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() != 4 {
        return Err(Error::InvalidArgument(format!(
            "--coords expects 4 comma-separated values, got {}",
            parts.len()
        )));
    }
    let mut x = [0.0; 4];
    for (slot, part) in x.iter_mut().zip(&parts) {
        *slot = part
            .parse()
            .map_err(|_| Error::InvalidArgument(format!("`{part}` is not a number")))?;
    }
    AnnulusCoords::from_array(x)
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), Error> {
    match out {
        Some(path) => fs::write(path, text)
            .map_err(|e| Error::Io(format!("cannot write {}: {e}", path.display()))),
        None => {
            let mut stdout = io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            stdout.flush()?;
            Ok(())
        }
    }
}

/// Four coordinates with the (invariant) core data of the input.
fn render_point(
    input: &AnnulusCoords,
    y: &AnnulusCoords,
    format: Format,
    extra: serde_json::Value,
) -> String {
    let g = core_geodesic(input);
    match format {
        Format::Csv => {
            let row: Vec<String> = y
                .as_array()
                .into_iter()
                .chain([g.length, g.trace_abs])
                .map(format_f64)
                .collect();
            format!("X1,X2,X3,X4,L,trace\n{}\n", row.join(","))
        }
        Format::Json => {
            let v = json!({
                "input": extra,
                "output": y.as_array(),
                "L": g.length,
                "trace": g.trace_abs,
            });
            let mut s = serde_json::to_string_pretty(&v).expect("json value serialises");
            s.push('\n');
            s
        }
    }
}

fn cmd_twist(args: TwistArgs) -> Result<(), Error> {
    let x = parse_coords(&args.coords)?;
    let m = method(&args.method)?;
    let t = TwistParameter::new(args.t)?;
    let y = m.twist(&x, t)?;
    let extra = json!({ "coords": x.as_array(), "t": args.t, "method": m.name() });
    emit(
        args.out.as_deref(),
        &render_point(&x, &y, args.format, extra),
    )
}

fn cmd_flow(args: FlowArgs) -> Result<(), Error> {
    let x = parse_coords(&args.coords)?;
    let m = method(&args.method)?;
    let proj: Projection = args.proj.parse()?;
    let traj = sample_flow(m, &x, args.t, args.steps)?;
    let text = match args.format {
        Format::Csv => traj.to_csv(),
        Format::Json => traj.to_json(),
    };
    emit(args.out.as_deref(), &text)?;
    if let Some(svg) = &args.svg {
        emit(Some(svg), &traj.to_svg(proj))?;
    }
    Ok(())
}

fn cmd_dehn(args: DehnArgs) -> Result<(), Error> {
    let x = parse_coords(&args.coords)?;
    let y = dehn_twist(&x, args.m)?;
    let extra = json!({ "coords": x.as_array(), "m": args.m });
    emit(
        args.out.as_deref(),
        &render_point(&x, &y, args.format, extra),
    )
}

fn cmd_verify(args: VerifyArgs) -> Result<bool, Error> {
    let report = verify::run(args.samples, args.seed, args.tol)?;
    println!("{report}");
    Ok(report.passed())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(EXIT_USAGE)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let result = match cli.command {
        Command::Twist(a) => cmd_twist(a).map(|()| true),
        Command::Flow(a) => cmd_flow(a).map(|()| true),
        Command::Dehn(a) => cmd_dehn(a).map(|()| true),
        Command::Verify(a) => cmd_verify(a),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(EXIT_VERIFY_FAILED),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}
