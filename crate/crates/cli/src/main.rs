//! `unitrack run` computes a run and writes its curves, manifest and plot;
//! `unitrack verify` checks the claims on a fresh or recorded run.
//!
//! Exit codes: 0 success, 1 a claim check failed, 2 bad flags or input
//! files, 3 numerical capacity exhausted.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use unitrack::curve::{SamplingOptions, SeedSpec, DEFAULT_JET_BUDGET};
use unitrack::io::csv::{sha256_hex, write_curve_csv};
use unitrack::io::manifest::{curve_file_name, CurveFile, ManifestError, RunManifest};
use unitrack::io::svg::render_svg;
use unitrack::metrics::MetricsOptions;
use unitrack::verify::{
    first_non_graph_depth, run_unitrack, verify_all, RunConfig, TheoremReport, Tolerances,
    UnitrackRun,
};

const MANIFEST_FILE: &str = "manifest.json";
const SVG_FILE: &str = "unitrack.svg";

#[derive(Parser)]
#[command(
    name = "unitrack",
    version,
    about = "Iterate the bicycle front-track map on a bump"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute depths 0..=depth and write CSV curves, a manifest and an SVG plot.
    Run {
        #[command(flatten)]
        run: RunArgs,
        /// Output directory.
        #[arg(long, default_value = "unitrack_out")]
        out: PathBuf,
        /// Write the SVG plot (the default).
        #[arg(long, overrides_with = "no_svg")]
        svg: bool,
        /// Skip the SVG plot.
        #[arg(long)]
        no_svg: bool,
    },
    /// Print the claim table for a recorded manifest or for a fresh run.
    Verify {
        /// Re-run a recorded manifest and compare curve hashes; run flags are ignored.
        #[arg(long)]
        manifest: Option<PathBuf>,
        #[command(flatten)]
        run: RunArgs,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SeedArg {
    Finn,
    Straight,
    Custom,
}

#[derive(Args)]
struct RunArgs {
    #[arg(long, value_enum, default_value = "finn")]
    seed: SeedArg,
    /// Bump height scale.
    #[arg(long, default_value_t = 4.0, allow_negative_numbers = true)]
    amplitude: f64,
    /// Exponent scale `c` of the custom bump `a exp(-c / (t (1 - t)))`.
    #[arg(long, default_value_t = 1.0)]
    sharpness: f64,
    #[arg(long, default_value_t = 5)]
    depth: usize,
    #[arg(long, default_value_t = SamplingOptions::default().theta_max)]
    theta_max: f64,
    #[arg(long, default_value_t = SamplingOptions::default().min_samples)]
    min_samples: usize,
    #[arg(long, default_value_t = DEFAULT_JET_BUDGET)]
    jet_budget: usize,
    /// Points in the parameter grid of the pointwise checks.
    #[arg(long, default_value_t = 1001)]
    grid: usize,
    #[arg(long, default_value_t = Tolerances::default().algebraic)]
    tol_alg: f64,
    #[arg(long, default_value_t = Tolerances::default().quadrature)]
    tol_quad: f64,
}

impl RunArgs {
    fn config(&self) -> RunConfig {
        let seed = match self.seed {
            SeedArg::Finn => SeedSpec::finn(self.amplitude),
            SeedArg::Straight => SeedSpec::straight(),
            SeedArg::Custom => SeedSpec::custom_bump(self.amplitude, self.sharpness),
        };
        RunConfig {
            seed,
            depth_max: self.depth,
            jet_budget: self.jet_budget,
            sampling: SamplingOptions {
                theta_max: self.theta_max,
                min_samples: self.min_samples,
                ..SamplingOptions::default()
            },
            metrics: MetricsOptions::default(),
            grid: self.grid,
            tolerances: Tolerances {
                algebraic: self.tol_alg,
                quadrature: self.tol_quad,
                ..Tolerances::default()
            },
        }
    }
}

enum Failure {
    Usage(String),
    Numerical(String),
    Io(String),
}

impl Failure {
    fn report(self) -> ExitCode {
        let (code, msg) = match self {
            Failure::Usage(m) | Failure::Io(m) => (2, m),
            Failure::Numerical(m) => (3, m),
        };
        eprintln!("error: {msg}");
        ExitCode::from(code)
    }
}

impl From<unitrack::Error> for Failure {
    fn from(e: unitrack::Error) -> Self {
        if e.is_numerical() {
            Failure::Numerical(e.to_string())
        } else {
            Failure::Usage(e.to_string())
        }
    }
}

impl From<ManifestError> for Failure {
    fn from(e: ManifestError) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn io_err(path: &Path, e: std::io::Error) -> Failure {
    Failure::Io(format!("{}: {e}", path.display()))
}

fn init_threads() -> Result<(), Failure> {
    let Ok(raw) = std::env::var("UNITRACK_THREADS") else {
        return Ok(());
    };
    let n: usize = raw.trim().parse().ok().filter(|&n| n > 0).ok_or_else(|| {
        Failure::Usage(format!(
            "UNITRACK_THREADS must be a positive integer, got `{raw}`"
        ))
    })?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| Failure::Usage(format!("cannot size the thread pool: {e}")))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let outcome = init_threads().and_then(|()| match cli.command {
        Command::Run {
            run, out, no_svg, ..
        } => cmd_run(&run.config(), &out, !no_svg),
        Command::Verify {
            manifest: Some(path),
            ..
        } => cmd_verify_manifest(&path),
        Command::Verify {
            manifest: None,
            run,
        } => cmd_verify(&run.config()),
    });
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(f) => f.report(),
    }
}

struct Outputs {
    csv: Vec<(String, String)>,
    files: Vec<CurveFile>,
}

fn render_outputs(run: &UnitrackRun) -> Outputs {
    let mut csv = Vec::new();
    let mut files = Vec::new();
    for d in &run.depths {
        let name = curve_file_name(d.metrics.depth);
        let text = write_curve_csv(&d.sampled);
        files.push(CurveFile {
            depth: d.metrics.depth,
            file: name.clone(),
            samples: d.sampled.len(),
            sha256: sha256_hex(text.as_bytes()),
        });
        csv.push((name, text));
    }
    Outputs { csv, files }
}

fn cmd_run(cfg: &RunConfig, out: &Path, svg: bool) -> Result<bool, Failure> {
    cfg.validate()?;
    let run = run_unitrack(cfg)?;
    let reports = verify_all(&run)?;
    let outputs = render_outputs(&run);

    fs::create_dir_all(out).map_err(|e| io_err(out, e))?;
    for (name, text) in &outputs.csv {
        let path = out.join(name);
        fs::write(&path, text).map_err(|e| io_err(&path, e))?;
    }
    let manifest = RunManifest::new(&run, reports.clone(), outputs.files);
    let path = out.join(MANIFEST_FILE);
    fs::write(&path, manifest.to_json()).map_err(|e| io_err(&path, e))?;
    if svg {
        let curves: Vec<_> = run.depths.iter().map(|d| &d.sampled).collect();
        let path = out.join(SVG_FILE);
        fs::write(&path, render_svg(&curves)).map_err(|e| io_err(&path, e))?;
    }

    print_summary(&run);
    print_reports(&reports);
    println!(
        "wrote {} depth files to {}",
        run.depths.len(),
        out.display()
    );
    Ok(reports.iter().all(|r| !r.status.is_failure()))
}

fn cmd_verify(cfg: &RunConfig) -> Result<bool, Failure> {
    cfg.validate()?;
    let run = run_unitrack(cfg)?;
    let reports = verify_all(&run)?;
    print_summary(&run);
    print_reports(&reports);
    Ok(reports.iter().all(|r| !r.status.is_failure()))
}

fn cmd_verify_manifest(path: &Path) -> Result<bool, Failure> {
    let text = fs::read_to_string(path).map_err(|e| io_err(path, e))?;
    let manifest = RunManifest::parse(&text)
        .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    let run = run_unitrack(&manifest.config())?;
    let reports = verify_all(&run)?;
    let outputs = render_outputs(&run);
    print_summary(&run);
    print_reports(&reports);

    let dir = path.parent().unwrap_or(Path::new("."));
    let mut reproduced = true;
    for (recorded, fresh) in manifest.curves.iter().zip(&outputs.files) {
        let on_disk = fs::read(dir.join(&recorded.file))
            .ok()
            .map(|b| sha256_hex(&b));
        let verdict = if fresh.sha256 != recorded.sha256 {
            reproduced = false;
            "rerun differs from manifest"
        } else {
            match on_disk {
                Some(h) if h == recorded.sha256 => "identical",
                Some(_) => {
                    reproduced = false;
                    "file differs from manifest"
                }
                None => "file missing, rerun matches manifest",
            }
        };
        println!("{:<14} {verdict}", recorded.file);
    }
    Ok(reproduced && reports.iter().all(|r| !r.status.is_failure()))
}

fn print_summary(run: &UnitrackRun) {
    println!(
        "{:>5} {:>8} {:>14} {:>14} {:>11} {:>11} {:>11} {:>6} {:>6} {:>5}",
        "depth", "samples", "length", "area", "l", "r", "V", "zeros", "cross", "graph"
    );
    for m in run.metrics() {
        let zeros = m.zero_count.map_or("?".to_string(), |z| z.to_string());
        println!(
            "{:>5} {:>8} {:>14.10} {:>14.10e} {:>11.6} {:>11.6} {:>11.6} {:>6} {:>6} {:>5}",
            m.depth,
            m.samples,
            m.length,
            m.area,
            m.l,
            m.r,
            m.v,
            zeros,
            m.self_intersections.len(),
            if m.graph_status { "yes" } else { "no" }
        );
    }
    match first_non_graph_depth(run) {
        Some(n) => println!(
            "first non-graph depth: {n} (theta_max {})",
            run.config.sampling.theta_max
        ),
        None => println!("first non-graph depth: none up to {}", run.config.depth_max),
    }
}

fn print_reports(reports: &[TheoremReport]) {
    println!(
        "{:<24} {:<13} {:>12} {:>10}  note",
        "claim", "status", "violation", "tolerance"
    );
    for r in reports {
        println!(
            "{:<24} {:<13} {:>12.3e} {:>10.1e}  {}",
            r.claim.to_string(),
            r.status.to_string(),
            r.max_violation,
            r.tolerance,
            r.note
        );
    }
}
