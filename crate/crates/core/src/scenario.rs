//! Time-grid sweeps over a garbage-collection scenario.
//!
//! A sweep assembles the characteristic matrix at every grid point, records
//! the payoff contributions and pure security levels as a plot-ready CSV
//! series, and solves the game at the ends of the grid: once at the first
//! positive instant (quotas are not yet binding there, so the quota column
//! is withdrawn from play) and once at the horizon with the full matrix,
//! where the quota strategy locks the value in.
//!
//! Grid points are independent, so the sweep offers a rayon-parallel
//! evaluator next to the sequential one (behind the `parallel` feature,
//! enabled by default). Both produce identical rows in identical order;
//! `benches/grid.rs` compares their throughput.

use serde::Serialize;
use std::io::{self, Write};
use thiserror::Error;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::game::{self, GameError, GameSolution, PayoffMatrix};
use crate::payoff::{
    characteristic_matrix, PayoffBreakdown, PayoffError, ScenarioParams, CONCEAL_FILES_ROW,
    USER_STRATEGY_LABELS,
};

/// Fixed column order of the emitted series.
pub const CSV_HEADER: &str =
    "t,pi_g,pi_b,pi_u,pi_a_raw,pi_a_clamped,pi_q,maximin,minimax,saddle_exists";

#[derive(Debug, Error)]
pub enum ScenarioError {
    #[error(transparent)]
    Payoff(#[from] PayoffError),
    #[error(transparent)]
    Game(#[from] GameError),
    #[error("time grid invalid: need 0 < dt_hours <= t_max_hours, both finite, got dt={dt} t_max={t_max}")]
    BadGrid { dt: f64, t_max: f64 },
    #[error("csv output failed: {0}")]
    Io(#[from] io::Error),
}

/// Uniform time grid `0, dt, 2 dt, ..` up to and including `t_max` (when
/// divisible).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TimeGrid {
    pub t_max_hours: f64,
    pub dt_hours: f64,
}

impl TimeGrid {
    pub fn new(t_max_hours: f64, dt_hours: f64) -> Result<Self, ScenarioError> {
        if !t_max_hours.is_finite()
            || !dt_hours.is_finite()
            || dt_hours <= 0.0
            || dt_hours > t_max_hours
        {
            return Err(ScenarioError::BadGrid {
                dt: dt_hours,
                t_max: t_max_hours,
            });
        }
        Ok(Self {
            t_max_hours,
            dt_hours,
        })
    }

    /// Number of grid points, including t = 0.
    pub fn len(&self) -> usize {
        (self.t_max_hours / self.dt_hours + 1e-9).floor() as usize + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// The k-th instant, computed as `k * dt` (no accumulation drift).
    pub fn at(&self, k: usize) -> f64 {
        k as f64 * self.dt_hours
    }
}

/// One evaluated grid point.
#[derive(Debug, Clone, Serialize)]
pub struct GridRow {
    pub t: f64,
    pub breakdown: PayoffBreakdown,
    /// Largest row minimum of the full matrix (quota column included).
    pub maximin: f64,
    /// Smallest column maximum of the full matrix.
    pub minimax: f64,
    pub saddle_exists: bool,
    pub saturated: bool,
}

fn evaluate_point(params: &ScenarioParams, t: f64) -> Result<GridRow, ScenarioError> {
    let cm = characteristic_matrix(t, params)?;
    let report = cm.matrix.maximin_minimax();
    Ok(GridRow {
        t,
        breakdown: cm.breakdown,
        maximin: report.maximin,
        minimax: report.minimax,
        saddle_exists: !cm.matrix.saddle_points().is_empty(),
        saturated: cm.saturated,
    })
}

/// Evaluate every grid point sequentially.
pub fn evaluate_grid(
    params: &ScenarioParams,
    grid: &TimeGrid,
) -> Result<Vec<GridRow>, ScenarioError> {
    params.validate()?;
    (0..grid.len())
        .map(|k| evaluate_point(params, grid.at(k)))
        .collect()
}

/// Evaluate grid points in parallel, merging in deterministic t-order.
#[cfg(feature = "parallel")]
pub fn evaluate_grid_parallel(
    params: &ScenarioParams,
    grid: &TimeGrid,
) -> Result<Vec<GridRow>, ScenarioError> {
    params.validate()?;
    (0..grid.len())
        .into_par_iter()
        .map(|k| evaluate_point(params, grid.at(k)))
        .collect()
}

/// Sequential stand-in so callers can request a parallel sweep without the
/// `parallel` feature compiled in.
#[cfg(not(feature = "parallel"))]
pub fn evaluate_grid_parallel(
    params: &ScenarioParams,
    grid: &TimeGrid,
) -> Result<Vec<GridRow>, ScenarioError> {
    evaluate_grid(params, grid)
}

/// Render a value with 9 significant digits (scientific form), the fixed
/// CSV number format. Zero loses its sign so that `-0.0` and `0.0` emit
/// identically.
pub fn format_sig9(x: f64) -> String {
    let x = if x == 0.0 { 0.0 } else { x };
    format!("{x:.8e}")
}

/// Write the series as CSV; returns the number of data rows written.
pub fn write_csv<W: Write>(rows: &[GridRow], mut out: W) -> io::Result<usize> {
    writeln!(out, "{CSV_HEADER}")?;
    for row in rows {
        writeln!(
            out,
            "{},{},{},{},{},{},{},{},{},{}",
            format_sig9(row.t),
            format_sig9(row.breakdown.pi_g),
            format_sig9(row.breakdown.pi_b),
            format_sig9(row.breakdown.pi_u),
            format_sig9(row.breakdown.pi_a_raw),
            format_sig9(row.breakdown.pi_a),
            format_sig9(row.breakdown.pi_q),
            format_sig9(row.maximin),
            format_sig9(row.minimax),
            row.saddle_exists,
        )?;
    }
    Ok(rows.len())
}

/// A solved game at one instant, annotated for the scenario report.
#[derive(Debug, Clone, Serialize)]
pub struct SolutionSummary {
    pub t_hours: f64,
    pub quota_column_included: bool,
    pub saturated: bool,
    pub value: f64,
    pub method: game::SolveMethod,
    pub duality_gap: f64,
    pub row_mix: game::StrategyMixture,
    pub col_mix: game::StrategyMixture,
    pub maximin: f64,
    pub maximin_rows: Vec<usize>,
    pub minimax: f64,
    pub minimax_cols: Vec<usize>,
    pub saddle_exists: bool,
    /// Label of the conceal-files strategy when it sits in the maximin tie
    /// set: the user play the analysis singles out at small times.
    pub noted_user_strategy: Option<String>,
}

fn summarize(
    matrix: &PayoffMatrix,
    t_hours: f64,
    quota_column_included: bool,
    saturated: bool,
    tol: f64,
) -> Result<SolutionSummary, ScenarioError> {
    let solution: GameSolution = game::solve_mixed(matrix, tol)?;
    let report = matrix.maximin_minimax();
    let noted_user_strategy = report
        .maximin_rows
        .contains(&CONCEAL_FILES_ROW)
        .then(|| USER_STRATEGY_LABELS[CONCEAL_FILES_ROW].to_string());
    Ok(SolutionSummary {
        t_hours,
        quota_column_included,
        saturated,
        value: solution.value,
        method: solution.method,
        duality_gap: solution.duality_gap,
        row_mix: solution.row_mix,
        col_mix: solution.col_mix,
        maximin: report.maximin,
        maximin_rows: report.maximin_rows,
        minimax: report.minimax,
        minimax_cols: report.minimax_cols,
        saddle_exists: !matrix.saddle_points().is_empty(),
        noted_user_strategy,
    })
}

/// Scenario outcome: the full series plus solved games at both ends of the
/// grid.
#[derive(Debug, Clone, Serialize)]
pub struct ScenarioOutcome {
    #[serde(skip)]
    pub rows: Vec<GridRow>,
    /// Game at the first positive grid instant, quota column withdrawn
    /// (quotas not yet binding).
    pub small_t_solution: SolutionSummary,
    /// Game at the horizon, full matrix.
    pub large_t_solution: SolutionSummary,
}

/// Evaluate the grid and solve the game at its ends.
///
/// `parallel` requests the rayon evaluator for the sweep (identical output,
/// merged in t-order). The small-t solve drops the quota column: before
/// users reach their quota the fixed slice does not constrain them, and
/// with it the tidying contest, not the quota lock-in, decides the game.
/// The large-t solve keeps all four system strategies.
pub fn run_scenario(
    params: &ScenarioParams,
    grid: &TimeGrid,
    tol: f64,
    parallel: bool,
) -> Result<ScenarioOutcome, ScenarioError> {
    let rows = if parallel {
        evaluate_grid_parallel(params, grid)?
    } else {
        evaluate_grid(params, grid)?
    };

    let t_small = grid.at(1);
    let cm_small = characteristic_matrix(t_small, params)?;
    let small_t_solution = summarize(
        &cm_small.without_quota_column(),
        t_small,
        false,
        cm_small.saturated,
        tol,
    )?;

    let t_large = grid.at(grid.len() - 1);
    let cm_large = characteristic_matrix(t_large, params)?;
    let large_t_solution = summarize(&cm_large.matrix, t_large, true, cm_large.saturated, tol)?;

    Ok(ScenarioOutcome {
        rows,
        small_t_solution,
        large_t_solution,
    })
}
