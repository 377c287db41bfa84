//! Command-line driver: symbolic checks, numeric sweeps, and curve
//! arithmetic.
//!
//! Exit codes: 0 when every requested check passes, 1 when a check fails
//! (nonzero residual or a numeric counterexample), 2 for usage or input
//! errors.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use grouplaw::curve::{CurveParams, Point};
use grouplaw::field::Prime;
use grouplaw::harness::{
    exhaustive_check, exhaustive_curve_check, randomized_check, sampled_curve_check, HarnessConfig,
    HarnessMode, HarnessReport,
};
use grouplaw::prover::{check_lemma, run_all, CheckResult, LemmaId, VerificationReport};

#[derive(Parser)]
#[command(
    name = "grouplaw",
    version,
    about = "Exact verification of the elliptic-curve group law"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the symbolic identity checks (all of them by default).
    Prove {
        /// Run a single check by id.
        #[arg(long)]
        lemma: Option<String>,
        /// Print the transcription audit's full residuals and deltas.
        #[arg(long)]
        audit: bool,
        /// Write the machine-readable report to this path.
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Exhaustive numeric sweep over all curves for all primes up to a
    /// bound.
    Sweep {
        #[arg(long = "max-p")]
        max_p: u64,
    },
    /// Randomized numeric trials over fresh curves and primes.
    Random {
        #[arg(long, default_value_t = 1000)]
        trials: u64,
        #[arg(long, default_value_t = 31)]
        bits: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Group-axiom suite on one fixed curve.
    Axioms {
        #[command(flatten)]
        curve: CurveArgs,
        /// Check every point tuple instead of sampling.
        #[arg(long)]
        exhaustive: bool,
        #[arg(long, default_value_t = 1000)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Add two points.
    Add {
        #[command(flatten)]
        curve: CurveArgs,
        /// Point as "x,y" or "O"; exactly two.
        #[arg(long = "point", num_args = 1, required = true)]
        points: Vec<String>,
    },
    /// Scalar-multiply a point.
    Mul {
        #[command(flatten)]
        curve: CurveArgs,
        #[arg(long = "point")]
        point: String,
        #[arg(long)]
        scalar: u64,
    },
    /// List every point on a small curve.
    Points {
        #[command(flatten)]
        curve: CurveArgs,
    },
}

#[derive(Args)]
struct CurveArgs {
    #[arg(long)]
    p: u64,
    #[arg(long)]
    a: u64,
    #[arg(long)]
    b: u64,
}

fn parse_curve(args: &CurveArgs) -> Result<CurveParams, String> {
    let prime = Prime::new(args.p).map_err(|e| e.to_string())?;
    CurveParams::new(prime, args.a, args.b).map_err(|e| e.to_string())
}

fn parse_point(text: &str, curve: &CurveParams) -> Result<Point, String> {
    if text == "O" {
        return Ok(Point::Infinity);
    }
    let (x, y) = text
        .split_once(',')
        .ok_or_else(|| format!("point `{text}` is not \"O\" or \"x,y\""))?;
    let x: u64 = x
        .trim()
        .parse()
        .map_err(|_| format!("bad x-coordinate in `{text}`"))?;
    let y: u64 = y
        .trim()
        .parse()
        .map_err(|_| format!("bad y-coordinate in `{text}`"))?;
    curve.point(x, y).map_err(|e| e.to_string())
}

fn print_harness_report(report: &HarnessReport) {
    println!(
        "{}",
        serde_json::to_string_pretty(report).expect("report serializes")
    );
}

fn harness_exit(report: &HarnessReport) -> ExitCode {
    if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn print_check_line(check: &CheckResult) {
    let mut line = format!("{}: {}", check.id, check.status.as_str());
    if !check.residual.is_zero() {
        line.push_str(&format!(" (residual terms: {})", check.residual.len()));
    }
    println!("{line}");
}

fn run_prove(
    lemma: Option<String>,
    audit: bool,
    json: Option<PathBuf>,
) -> Result<ExitCode, String> {
    let report: VerificationReport = match lemma {
        Some(name) => {
            let id = LemmaId::parse(&name).map_err(|e| e.to_string())?;
            VerificationReport {
                checks: vec![check_lemma(id)],
            }
        }
        None => run_all(),
    };
    for check in &report.checks {
        print_check_line(check);
        if audit && !check.diffs.is_empty() {
            for line in &check.diffs {
                println!("  {line}");
            }
        }
    }
    let (pass, fail, flagged) = report.summary();
    println!("summary: {pass} pass, {fail} fail, {flagged} flagged");
    println!("note: addition treats O as the neutral element (A + O = O + A = A)");
    if let Some(path) = json {
        let text = serde_json::to_string_pretty(&report.to_json()).expect("report serializes");
        std::fs::write(&path, text).map_err(|e| format!("writing {}: {e}", path.display()))?;
    }
    if report.overall_pass() {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::from(1))
    }
}

fn run() -> Result<ExitCode, String> {
    let cli = Cli::parse();
    match cli.command {
        Command::Prove { lemma, audit, json } => run_prove(lemma, audit, json),
        Command::Sweep { max_p } => {
            let report = exhaustive_check(max_p).map_err(|e| e.to_string())?;
            print_harness_report(&report);
            Ok(harness_exit(&report))
        }
        Command::Random { trials, bits, seed } => {
            let config = HarnessConfig {
                mode: HarnessMode::Randomized { prime_bits: bits },
                trials,
                seed,
            };
            let report = randomized_check(&config).map_err(|e| e.to_string())?;
            print_harness_report(&report);
            Ok(harness_exit(&report))
        }
        Command::Axioms {
            curve,
            exhaustive,
            trials,
            seed,
        } => {
            let curve = parse_curve(&curve)?;
            let report = if exhaustive {
                exhaustive_curve_check(&curve).map_err(|e| e.to_string())?
            } else {
                sampled_curve_check(&curve, trials, seed)
            };
            print_harness_report(&report);
            Ok(harness_exit(&report))
        }
        Command::Add { curve, points } => {
            let curve = parse_curve(&curve)?;
            if points.len() != 2 {
                return Err(format!(
                    "add needs exactly two --point flags, got {}",
                    points.len()
                ));
            }
            let lhs = parse_point(&points[0], &curve)?;
            let rhs = parse_point(&points[1], &curve)?;
            let sum = lhs.add(&rhs).map_err(|e| e.to_string())?;
            println!("{sum}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Mul {
            curve,
            point,
            scalar,
        } => {
            let curve = parse_curve(&curve)?;
            let point = parse_point(&point, &curve)?;
            println!("{}", point.scalar_mul(scalar));
            Ok(ExitCode::SUCCESS)
        }
        Command::Points { curve } => {
            let curve = parse_curve(&curve)?;
            let points = curve.enumerate_points().map_err(|e| e.to_string())?;
            for point in points {
                println!("{point}");
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
