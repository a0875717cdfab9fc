use std::f64::consts::{FRAC_PI_2, PI};
use std::fs::File;
use std::io::{BufWriter, Write};

use rayon::prelude::*;
use raysearch_core::entanglement::{
    concurrence, entanglement_approx_mirrored, entanglement_exact, entanglement_exact_2q,
    entanglement_oracle, grover_path_ray, initial_angle, partial_entropy, EntanglementResult,
    GroverPathPoint, OracleOptions,
};
use raysearch_core::grover::{
    grover_angle, grover_state, search_metrics, success_probability, Mode, SearchInstance,
};
use raysearch_core::ray::fs_distance;
use raysearch_core::segre::{grover_separability_residual, max_quadric_residual};
use raysearch_core::UnitVector;

use crate::config::{Command, Common, Method, SweepConfig};
use crate::table::{io_error, Cell, Table};
use crate::CliError;

type Row = Result<Vec<Cell>, CliError>;

/// Validate, compute and write the table named by `config`.
pub fn execute(config: &SweepConfig) -> Result<Table, CliError> {
    let table = run(config)?;
    let out = &config.command.common().out;
    let path = out.display().to_string();
    let line = config.describe();
    if path == "-" {
        let stdout = std::io::stdout();
        table
            .write_csv(stdout.lock(), &line)
            .map_err(io_error(&path))?;
    } else {
        let file = File::create(out).map_err(io_error(&path))?;
        let mut w = BufWriter::new(file);
        table.write_csv(&mut w, &line).map_err(io_error(&path))?;
        w.flush().map_err(io_error(&path))?;
    }
    Ok(table)
}

/// Compute the table for `config` without writing it.
pub fn run(config: &SweepConfig) -> Result<Table, CliError> {
    config.validate()?;
    match &config.command {
        Command::GroverTrace {
            n, target, kmax, ..
        } => grover_trace(*n, *target, *kmax),
        Command::EntangleSweep {
            n,
            points,
            method,
            resolution,
            common,
        } => entangle_sweep(*n, *points, *method, *resolution, common),
        Command::MeasureCompare { points, .. } => measure_compare(*points),
        Command::SearchTime {
            qmin, qmax, points, ..
        } => search_time(*qmin, *qmax, *points),
        Command::Separability { n, points, .. } => separability(*n, *points),
    }
}

fn collect(mut table: Table, rows: Vec<Row>) -> Result<Table, CliError> {
    table.rows = rows.into_iter().collect::<Result<_, _>>()?;
    Ok(table)
}

/// `points` values from `lo` to `hi` with both ends exact.
fn grid(lo: f64, hi: f64, points: usize) -> Vec<f64> {
    let last = points - 1;
    (0..points)
        .map(|i| match i {
            0 => lo,
            _ if i == last => hi,
            _ => lo + (hi - lo) * i as f64 / last as f64,
        })
        .collect()
}

pub fn grover_trace(n: u32, target: u64, kmax: u64) -> Result<Table, CliError> {
    let inst = SearchInstance::new(n, target)?;
    let dim = inst.dim() as usize;
    let marked = UnitVector::basis(dim, target as usize)?;
    let table = Table::new(vec![
        ("k", "queries"),
        ("success_probability", "probability"),
        ("fs_distance_to_target", "rad"),
        ("step_speed", "rad per query"),
        ("quadric_residual", "dimensionless"),
    ]);
    let rows = (0..=kmax)
        .into_par_iter()
        .map(|k| -> Row {
            let psi = grover_state(&inst, k, Mode::ClosedForm)?;
            let next = grover_state(&inst, k + 1, Mode::ClosedForm)?;
            let residual = if n >= 2 {
                max_quadric_residual(&psi, dim / 2 - 1, 1)?
            } else {
                0.0
            };
            Ok(vec![
                k.into(),
                success_probability(&inst, k).into(),
                fs_distance(&psi, &marked)?.into(),
                fs_distance(&psi, &next)?.into(),
                residual.into(),
            ])
        })
        .collect();
    collect(table, rows)
}

/// Path points on a uniform `t` grid from the average state to the target.
/// The end rows carry `u = 1` and `u = 0` exactly.
pub fn path_grid(n: u32, points: usize) -> Result<Vec<GroverPathPoint>, CliError> {
    let last = points - 1;
    grid(initial_angle(n), FRAC_PI_2, points)
        .into_iter()
        .enumerate()
        .map(|(i, t)| match i {
            0 => GroverPathPoint::from_u(n, 1.0),
            _ if i == last => GroverPathPoint::from_u(n, 0.0),
            _ => GroverPathPoint::from_t(n, t),
        })
        .map(|p| p.map_err(CliError::from))
        .collect()
}

fn exact(n: u32, u: f64) -> Result<EntanglementResult, CliError> {
    Ok(if n == 2 {
        entanglement_exact_2q(u)?
    } else {
        entanglement_exact(n, u)?
    })
}

pub fn entangle_sweep(
    n: u32,
    points: usize,
    method: Method,
    resolution: usize,
    common: &Common,
) -> Result<Table, CliError> {
    let opts = OracleOptions {
        resolution,
        seed: common.seed,
        tol: common.tol,
        ..OracleOptions::default()
    };
    let oracle = |u: f64| -> Result<EntanglementResult, CliError> {
        Ok(entanglement_oracle(&grover_path_ray(n, u)?, n, &opts)?)
    };
    let mut columns = vec![("t", "rad"), ("u", "dimensionless")];
    match method {
        Method::All => {
            columns.extend([("E_exact", "rad"), ("E_approx", "rad"), ("E_oracle", "rad")])
        }
        _ => columns.push(("E", "rad")),
    }
    columns.extend([
        ("r_star", "dimensionless"),
        ("chi_star", "rad"),
        ("root_count", "count"),
    ]);
    let table = Table::new(columns);

    let rows = path_grid(n, points)?
        .into_par_iter()
        .map(|p| -> Row {
            let (t, u) = (p.t(), p.u());
            let mut row: Vec<Cell> = vec![t.into(), u.into()];
            let best = match method {
                Method::Exact => exact(n, u)?,
                Method::Approx => entanglement_approx_mirrored(n, t)?,
                Method::Oracle => oracle(u)?,
                Method::All => {
                    let e = exact(n, u)?;
                    row.push(e.e.into());
                    row.push(entanglement_approx_mirrored(n, t)?.e.into());
                    row.push(oracle(u)?.e.into());
                    e
                }
            };
            if method != Method::All {
                row.push(best.e.into());
            }
            row.extend::<[Cell; 3]>([
                best.r_star.into(),
                best.chi_star.into(),
                best.root_count.into(),
            ]);
            Ok(row)
        })
        .collect();
    collect(table, rows)
}

pub fn measure_compare(points: usize) -> Result<Table, CliError> {
    let table = Table::new(vec![
        ("t", "rad"),
        ("u", "dimensionless"),
        ("E_geometric", "rad"),
        ("concurrence", "dimensionless"),
        ("partial_entropy", "bits"),
    ]);
    let rows = path_grid(2, points)?
        .into_par_iter()
        .map(|p| -> Row {
            let u = p.u();
            Ok(vec![
                p.t().into(),
                u.into(),
                entanglement_exact_2q(u)?.e.into(),
                concurrence(u)?.into(),
                partial_entropy(u)?.into(),
            ])
        })
        .collect();
    collect(table, rows)
}

pub fn search_time(qmin: f64, qmax: f64, points: usize) -> Result<Table, CliError> {
    let table = Table::new(vec![
        ("q", "dimensionless"),
        ("V", "rad per query"),
        ("s_w", "rad"),
        ("T_w", "queries"),
        ("approx_small_q", "queries"),
        ("approx_large_q", "queries"),
    ]);
    let rows = grid(qmin, qmax, points)
        .into_par_iter()
        .map(|q| -> Row {
            let m = search_metrics(q)?;
            Ok(vec![
                q.into(),
                m.speed.into(),
                m.distance.into(),
                m.queries.into(),
                (PI / (4.0 * q)).into(),
                ((2.0 * (1.0 - q)).sqrt() / PI).into(),
            ])
        })
        .collect();
    collect(table, rows)
}

pub fn separability(n: u32, points: usize) -> Result<Table, CliError> {
    let dim = 1u64 << n;
    let table = Table::new(vec![("phi", "rad"), ("residual", "dimensionless")]);
    let rows = grid(grover_angle(dim as f64) / 2.0, FRAC_PI_2, points)
        .into_par_iter()
        .map(|phi| -> Row {
            Ok(vec![
                phi.into(),
                grover_separability_residual(dim, phi).into(),
            ])
        })
        .collect();
    collect(table, rows)
}
