//! Scenario configuration and matrix input parsing.
//!
//! The scenario config is a single strict JSON document: unknown keys are
//! rejected by name, so a typo in a rate parameter cannot silently produce
//! a wrong reproduction.

use serde::{Deserialize, Serialize};

use idealstate::game::PayoffMatrix;
use idealstate::payoff::ScenarioParams;
use idealstate::scenario::TimeGrid;

use crate::error::CliError;

/// Full scenario run configuration. Fields mirror [`ScenarioParams`] plus
/// the time grid, solver tolerance, seed and output path. Kept flat (no
/// nesting) so `deny_unknown_fields` names any stray key.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioConfig {
    pub n_good: u32,
    pub n_bad: u32,
    pub rate_good: f64,
    pub rate_bad: f64,
    pub rate_auto: f64,
    pub user_period_hours: f64,
    pub auto_period_hours: f64,
    pub threshold_hours: f64,
    pub clamp_auto: bool,
    pub t_max_hours: f64,
    pub dt_hours: f64,
    pub tol: f64,
    pub seed: u64,
    /// CSV output path; may be overridden by `--out`.
    pub output: String,
}

impl ScenarioConfig {
    pub fn from_json(text: &str) -> Result<Self, CliError> {
        let config: ScenarioConfig =
            serde_json::from_str(text).map_err(|e| CliError::Config(e.to_string()))?;
        config.validate()?;
        Ok(config)
    }

    pub fn validate(&self) -> Result<(), CliError> {
        self.params()
            .validate()
            .map_err(|e| CliError::Config(e.to_string()))?;
        TimeGrid::new(self.t_max_hours, self.dt_hours)
            .map_err(|e| CliError::Config(e.to_string()))?;
        if !(self.tol.is_finite() && self.tol > 0.0) {
            return Err(CliError::Config(format!(
                "tol must be positive and finite, got {}",
                self.tol
            )));
        }
        Ok(())
    }

    pub fn params(&self) -> ScenarioParams {
        ScenarioParams {
            n_good: self.n_good,
            n_bad: self.n_bad,
            rate_good: self.rate_good,
            rate_bad: self.rate_bad,
            rate_auto: self.rate_auto,
            user_period_hours: self.user_period_hours,
            auto_period_hours: self.auto_period_hours,
            threshold_hours: self.threshold_hours,
            clamp_auto: self.clamp_auto,
        }
    }

    pub fn grid(&self) -> TimeGrid {
        TimeGrid::new(self.t_max_hours, self.dt_hours).expect("validated")
    }

    /// A ready-to-edit sample: the 1%-mischief worked example over one day.
    #[cfg(test)]
    pub fn sample() -> Self {
        ScenarioConfig {
            n_good: 99,
            n_bad: 1,
            rate_good: 0.01,
            rate_bad: 0.99,
            rate_auto: 0.1,
            user_period_hours: 24.0,
            auto_period_hours: 24.0,
            threshold_hours: 0.0,
            clamp_auto: true,
            t_max_hours: 24.0,
            dt_hours: 1.0,
            tol: 1e-9,
            seed: 42,
            output: "scenario_series.csv".to_string(),
        }
    }
}

/// Read a payoff matrix from text: a JSON 2-D array (`[[...], ...]`) or a
/// headered CSV whose first row names the columns.
pub fn parse_matrix(text: &str) -> Result<PayoffMatrix, CliError> {
    let trimmed = text.trim_start();
    if trimmed.starts_with('[') {
        let rows: Vec<Vec<f64>> =
            serde_json::from_str(trimmed).map_err(|e| CliError::MatrixInput(e.to_string()))?;
        return PayoffMatrix::new(rows).map_err(|e| CliError::MatrixInput(e.to_string()));
    }
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let header = lines
        .next()
        .ok_or_else(|| CliError::MatrixInput("empty matrix input".to_string()))?;
    let col_labels: Vec<String> = header.split(',').map(|s| s.trim().to_string()).collect();
    let mut rows = Vec::new();
    for (i, line) in lines.enumerate() {
        let row: Result<Vec<f64>, _> = line
            .split(',')
            .map(|cell| cell.trim().parse::<f64>())
            .collect();
        let row =
            row.map_err(|e| CliError::MatrixInput(format!("row {} is not numeric: {e}", i + 2)))?;
        rows.push(row);
    }
    let row_labels = (1..=rows.len()).map(|i| format!("r{i}")).collect();
    PayoffMatrix::with_labels(rows, row_labels, col_labels)
        .map_err(|e| CliError::MatrixInput(e.to_string()))
}
