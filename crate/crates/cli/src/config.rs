use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use raysearch_core::entanglement::OracleOptions;

use crate::CliError;

/// Largest register simulated by `grover-trace`.
pub const MAX_TRACE_QUBITS: u32 = 20;
/// Largest register handed to the entanglement oracle.
pub const MAX_ORACLE_QUBITS: u32 = 8;
/// Largest register for the coherent-ansatz sweeps.
pub const MAX_SWEEP_QUBITS: u32 = 52;

#[derive(Debug, Clone, PartialEq, Parser)]
#[command(
    name = "raysearch",
    version,
    about = "Geometry of quantum search, as CSV"
)]
pub struct SweepConfig {
    #[command(subcommand)]
    pub command: Command,
}

/// Options shared by every subcommand.
#[derive(Debug, Clone, PartialEq, Args)]
pub struct Common {
    /// Output CSV path, `-` for stdout
    #[arg(long)]
    pub out: PathBuf,
    /// Convergence tolerance of the entanglement oracle
    #[arg(long, default_value_t = OracleOptions::default().tol)]
    pub tol: f64,
    /// Seed of the oracle's random starts
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Exact,
    Approx,
    Oracle,
    All,
}

impl Method {
    pub fn as_str(&self) -> &'static str {
        match self {
            Method::Exact => "exact",
            Method::Approx => "approx",
            Method::Oracle => "oracle",
            Method::All => "all",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Subcommand)]
pub enum Command {
    /// Grover iterates k = 0..=kmax: success, distance to target, speed, separability
    GroverTrace {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        target: u64,
        #[arg(long)]
        kmax: u64,
        #[command(flatten)]
        common: Common,
    },
    /// Geometric entanglement along the Grover path
    EntangleSweep {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        points: usize,
        #[arg(long, value_enum)]
        method: Method,
        /// Grid points per axis of the oracle scan
        #[arg(long, default_value_t = OracleOptions::default().resolution)]
        resolution: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Geometric measure, concurrence and partial entropy for two qubits
    MeasureCompare {
        #[arg(long)]
        points: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Speed, distance and query count of a geodesic search against overlap q
    SearchTime {
        #[arg(long)]
        qmin: f64,
        #[arg(long)]
        qmax: f64,
        #[arg(long)]
        points: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Product-state condition along the Grover path
    Separability {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        points: usize,
        #[command(flatten)]
        common: Common,
    },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::GroverTrace { .. } => "grover-trace",
            Command::EntangleSweep { .. } => "entangle-sweep",
            Command::MeasureCompare { .. } => "measure-compare",
            Command::SearchTime { .. } => "search-time",
            Command::Separability { .. } => "separability",
        }
    }

    pub fn common(&self) -> &Common {
        match self {
            Command::GroverTrace { common, .. }
            | Command::EntangleSweep { common, .. }
            | Command::MeasureCompare { common, .. }
            | Command::SearchTime { common, .. }
            | Command::Separability { common, .. } => common,
        }
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn check_points(points: usize) -> Result<(), CliError> {
    if points < 2 {
        return Err(usage("--points must be at least 2"));
    }
    Ok(())
}

impl SweepConfig {
    pub fn validate(&self) -> Result<(), CliError> {
        let common = self.command.common();
        if !(common.tol > 0.0 && common.tol.is_finite()) {
            return Err(usage("--tol must be positive"));
        }
        match self.command {
            Command::GroverTrace { n, target, .. } => {
                if !(1..=MAX_TRACE_QUBITS).contains(&n) {
                    return Err(usage(format!(
                        "grover-trace needs 1 <= n <= {MAX_TRACE_QUBITS}"
                    )));
                }
                if target >= 1u64 << n {
                    return Err(usage(format!("--target must be below 2^n = {}", 1u64 << n)));
                }
            }
            Command::EntangleSweep {
                n,
                points,
                method,
                resolution,
                ..
            } => {
                check_points(points)?;
                if !(2..=MAX_SWEEP_QUBITS).contains(&n) {
                    return Err(usage(format!(
                        "entangle-sweep needs 2 <= n <= {MAX_SWEEP_QUBITS}"
                    )));
                }
                if matches!(method, Method::Oracle | Method::All) {
                    if n > MAX_ORACLE_QUBITS {
                        return Err(usage(format!(
                            "the oracle is limited to n <= {MAX_ORACLE_QUBITS}"
                        )));
                    }
                    if resolution < 64 {
                        return Err(usage("--resolution must be at least 64"));
                    }
                }
            }
            Command::MeasureCompare { points, .. } => check_points(points)?,
            Command::SearchTime {
                qmin, qmax, points, ..
            } => {
                check_points(points)?;
                if !(qmin > 0.0 && qmin < qmax && qmax <= 1.0) {
                    return Err(usage("need 0 < qmin < qmax <= 1"));
                }
            }
            Command::Separability { n, points, .. } => {
                check_points(points)?;
                if !(2..=MAX_SWEEP_QUBITS).contains(&n) {
                    return Err(usage(format!(
                        "separability needs 2 <= n <= {MAX_SWEEP_QUBITS}"
                    )));
                }
            }
        }
        Ok(())
    }

    /// One `key=value` line with every configuration field.
    pub fn describe(&self) -> String {
        let mut s = format!("command={}", self.command.name());
        match &self.command {
            Command::GroverTrace {
                n, target, kmax, ..
            } => {
                let _ = write!(s, " n={n} target={target} kmax={kmax}");
            }
            Command::EntangleSweep {
                n,
                points,
                method,
                resolution,
                ..
            } => {
                let _ = write!(
                    s,
                    " n={n} points={points} method={} resolution={resolution}",
                    method.as_str()
                );
            }
            Command::MeasureCompare { points, .. } => {
                let _ = write!(s, " points={points}");
            }
            Command::SearchTime {
                qmin, qmax, points, ..
            } => {
                let _ = write!(s, " qmin={qmin:e} qmax={qmax:e} points={points}");
            }
            Command::Separability { n, points, .. } => {
                let _ = write!(s, " n={n} points={points}");
            }
        }
        let c = self.command.common();
        let _ = write!(
            s,
            " tol={:e} seed={} out={}",
            c.tol,
            c.seed,
            c.out.display()
        );
        s
    }
}
