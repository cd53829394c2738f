//! Command-line front end. Exit codes: 0 success, 1 usage or I/O error,
//! 2 verification failure.

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};

use crate::analysis::{matched_surface, optimal_curve, sweep, LinearAxis, SweepGrid};
use crate::crosscheck::{crosscheck, GENERATOR};
use crate::csv::{write_curve, write_sweep, DEFAULT_PRECISION};
use crate::equivalence::{compare, matched_targets};
use crate::model::{geometry_from_lambda, AlgorithmKind, PhaseParams};
use crate::numerics::EQUIVALENCE_TOL;
use crate::operators::iteration_matrix;
use crate::subspace::run;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_FAILED: i32 = 2;

/// Parses an angle: a plain number, or a multiple/fraction of pi such as
/// `pi`, `-pi/2`, `2pi`, `0.5*pi`, `3pi/4`.
pub fn parse_angle(s: &str) -> Result<f64, String> {
    let t = s.trim().to_ascii_lowercase();
    if let Ok(x) = t.parse::<f64>() {
        return Ok(x);
    }
    let bad = || format!("invalid angle '{s}'");
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n, d.trim().parse::<f64>().map_err(|_| bad())?),
        None => (t.as_str(), 1.0),
    };
    let coef = num
        .trim()
        .strip_suffix("pi")
        .ok_or_else(bad)?
        .trim_end_matches('*')
        .trim();
    let coef = match coef {
        "" | "+" => 1.0,
        "-" => -1.0,
        c => c.parse::<f64>().map_err(|_| bad())?,
    };
    let value = coef * std::f64::consts::PI / den;
    if value.is_finite() {
        Ok(value)
    } else {
        Err(bad())
    }
}

/// `min:max:steps`, with angle syntax allowed for the bounds.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AxisArg(pub LinearAxis);

impl FromStr for AxisArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Vec<&str> = s.split(':').collect();
        let [min, max, steps] = parts.as_slice() else {
            return Err(format!("expected min:max:steps, got '{s}'"));
        };
        let steps = steps
            .trim()
            .parse::<usize>()
            .map_err(|_| format!("invalid step count '{steps}'"))?;
        LinearAxis::new(parse_angle(min)?, parse_angle(max)?, steps)
            .map(AxisArg)
            .map_err(|e| e.to_string())
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "grover-phases",
    version,
    about = "Phase-generalized Grover iterations: figures, sweeps and equivalence checks"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Output {
    /// Output file, or `-` for stdout.
    #[arg(long)]
    pub out: PathBuf,
    /// Significant digits for floating-point cells.
    #[arg(long, default_value_t = DEFAULT_PRECISION as u8, value_parser = clap::value_parser!(u8).range(1..=17))]
    pub precision: u8,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write the data behind figure 1 (optimal-k curve) or 2-5 (k=5 phase surfaces).
    Figure {
        #[arg(value_parser = clap::value_parser!(u8).range(1..=5))]
        index: u8,
        #[command(flatten)]
        output: Output,
    },
    /// Probability over an explicit (lambda, phase) grid.
    Sweep {
        #[arg(long)]
        kind: AlgorithmKind,
        #[arg(long)]
        k: usize,
        /// min:max:steps, within (0, 1].
        #[arg(long, allow_hyphen_values = true)]
        lambda: AxisArg,
        /// min:max:steps in radians; `pi` syntax accepted.
        #[arg(long, allow_hyphen_values = true)]
        phase: AxisArg,
        /// Interpret the phase axis as Long's phi and map it onto `kind`.
        #[arg(long)]
        matched: bool,
        #[command(flatten)]
        output: Output,
    },
    /// Check that the four variants differ only by the predicted global phase.
    CheckEquivalence {
        #[arg(long, value_parser = parse_angle, allow_hyphen_values = true)]
        phi: f64,
        #[arg(long)]
        lambda: f64,
        #[arg(long, default_value_t = 1)]
        k: usize,
        #[arg(long, default_value_t = EQUIVALENCE_TOL)]
        tol: f64,
        /// Offset added to the mapped tau (breaks the condition on purpose).
        #[arg(long, value_parser = parse_angle, allow_hyphen_values = true)]
        perturb: Option<f64>,
    },
    /// Compare the statevector engine against the subspace engine on random cases.
    Crosscheck {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        samples: usize,
        #[arg(long, default_value_t = EQUIVALENCE_TOL)]
        tol: f64,
    },
}

fn usage(stderr: &mut dyn Write, msg: impl std::fmt::Display) -> i32 {
    let _ = writeln!(stderr, "error: {msg}");
    EXIT_USAGE
}

fn write_output(
    path: &Path,
    stdout: &mut dyn Write,
    body: impl FnOnce(&mut dyn Write) -> io::Result<()>,
) -> io::Result<()> {
    if path.as_os_str() == "-" {
        body(stdout)?;
        stdout.flush()
    } else {
        let mut w = BufWriter::new(File::create(path)?);
        body(&mut w)?;
        w.flush()
    }
}

fn cmd_figure(index: u8, output: &Output, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    let digits = usize::from(output.precision);
    let result = match index {
        1 => {
            let curve = optimal_curve();
            write_output(&output.out, stdout, |w| write_curve(w, &curve, digits))
        }
        2..=5 => {
            let kind = AlgorithmKind::VARIANTS[usize::from(index) - 2];
            let surface = matched_surface(kind);
            write_output(&output.out, stdout, |w| write_sweep(w, &surface, digits))
        }
        _ => return usage(stderr, format!("figure index must be 1-5, got {index}")),
    };
    match result {
        Ok(()) => EXIT_OK,
        Err(e) => usage(stderr, format!("cannot write {}: {e}", output.out.display())),
    }
}

fn cmd_sweep(grid: &SweepGrid, matched: bool, output: &Output, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    let result = match sweep(grid, matched) {
        Ok(r) => r,
        Err(e) => return usage(stderr, e),
    };
    match write_output(&output.out, stdout, |w| {
        write_sweep(w, &result, usize::from(output.precision))
    }) {
        Ok(()) => EXIT_OK,
        Err(e) => usage(stderr, format!("cannot write {}: {e}", output.out.display())),
    }
}

fn cmd_check_equivalence(
    phi: f64,
    lambda: f64,
    k: usize,
    tol: f64,
    perturb: Option<f64>,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> io::Result<i32> {
    if tol.is_nan() || tol <= 0.0 || !phi.is_finite() {
        return Ok(usage(stderr, "tol must be positive and phi finite"));
    }
    let g = match geometry_from_lambda(lambda) {
        Ok(g) => g,
        Err(e) => return Ok(usage(stderr, e)),
    };
    let long = PhaseParams::long(phi);
    writeln!(stdout, "phi={phi} lambda={lambda} k={k} tol={tol:e}")?;

    let mut all_hold = true;
    let mut variants = vec![long];
    for (mut target, chi) in matched_targets(phi) {
        if let (Some(offset), PhaseParams::LiDf { tau }) = (perturb, target) {
            target = PhaseParams::lidf(tau + offset);
        }
        let report = compare(&long, &target, chi, &g, tol);
        writeln!(stdout, "{report}")?;
        all_hold &= report.holds;
        variants.push(target);
    }

    let probabilities: Vec<f64> = variants
        .iter()
        .map(|p| run(&iteration_matrix(p, &g), k).success_probability())
        .collect();
    let spread = probabilities
        .iter()
        .fold(0.0f64, |acc, p| acc.max((p - probabilities[0]).abs()));
    let cells: Vec<String> = variants
        .iter()
        .zip(&probabilities)
        .map(|(v, p)| format!("{}={p:.12}", v.kind()))
        .collect();
    writeln!(
        stdout,
        "probability after k={k}: {} spread={spread:.3e}",
        cells.join(" ")
    )?;
    all_hold &= spread <= tol;

    writeln!(stdout, "{}", if all_hold { "ALL HOLD" } else { "FAILED" })?;
    Ok(if all_hold { EXIT_OK } else { EXIT_FAILED })
}

fn cmd_crosscheck(
    n: u32,
    seed: u64,
    samples: usize,
    tol: f64,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> io::Result<i32> {
    if tol.is_nan() || tol <= 0.0 {
        return Ok(usage(stderr, "tol must be positive"));
    }
    let summary = match crosscheck(n, seed, samples) {
        Ok(s) => s,
        Err(e) => return Ok(usage(stderr, e)),
    };
    writeln!(stdout, "generator: {GENERATOR} seed={seed} n={n}")?;
    if summary.cases == 0 {
        writeln!(stdout, "0 cases: nothing to compare")?;
        return Ok(EXIT_OK);
    }
    writeln!(stdout, "cases: {}", summary.cases)?;
    writeln!(
        stdout,
        "max probability deviation: {:.3e}",
        summary.max_probability_deviation
    )?;
    writeln!(stdout, "max subspace residual: {:.3e}", summary.max_residual)?;
    writeln!(
        stdout,
        "max amplitude deviation: {:.3e}",
        summary.max_amplitude_deviation
    )?;
    let pass = summary.max_probability_deviation < tol && summary.max_residual < tol;
    writeln!(stdout, "{}", if pass { "PASS" } else { "FAIL" })?;
    Ok(if pass { EXIT_OK } else { EXIT_FAILED })
}

/// Parses `args` (including the program name) and executes the command.
pub fn run_with<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(stdout, "{}", e.render());
                    EXIT_OK
                }
                _ => {
                    let _ = write!(stderr, "{}", e.render());
                    EXIT_USAGE
                }
            };
        }
    };
    execute(&cli.command, stdout, stderr)
}

pub fn execute(command: &Command, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    let status = match *command {
        Command::Figure { index, ref output } => Ok(cmd_figure(index, output, stdout, stderr)),
        Command::Sweep {
            kind,
            k,
            lambda,
            phase,
            matched,
            ref output,
        } => {
            let grid = SweepGrid {
                lambda: lambda.0,
                phase: phase.0,
                k,
                kind,
            };
            Ok(cmd_sweep(&grid, matched, output, stdout, stderr))
        }
        Command::CheckEquivalence {
            phi,
            lambda,
            k,
            tol,
            perturb,
        } => cmd_check_equivalence(phi, lambda, k, tol, perturb, stdout, stderr),
        Command::Crosscheck { n, seed, samples, tol } => cmd_crosscheck(n, seed, samples, tol, stdout, stderr),
    };
    status.unwrap_or_else(|e| usage(stderr, format!("write failed: {e}")))
}
