//! CLI error surface: every failure exits nonzero after printing one
//! machine-readable JSON object to stderr.

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("config rejected: {0}")]
    Config(String),
    #[error("matrix input rejected: {0}")]
    MatrixInput(String),
    #[error("invalid {flag}: {message}")]
    BadFlag { flag: &'static str, message: String },
    #[error("cannot write {path}: {source}")]
    Output {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("cannot read {path}: {source}")]
    Input {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error(transparent)]
    Lattice(#[from] idealstate::lattice::LatticeError),
    #[error(transparent)]
    Timescale(#[from] idealstate::timescales::TimescaleError),
    #[error(transparent)]
    Payoff(#[from] idealstate::payoff::PayoffError),
    #[error(transparent)]
    Game(#[from] idealstate::game::GameError),
    #[error(transparent)]
    Metrics(#[from] idealstate::metrics::MetricsError),
    #[error(transparent)]
    Scenario(#[from] idealstate::scenario::ScenarioError),
}

#[derive(Serialize)]
struct ErrorObject<'a> {
    error: ErrorBody<'a>,
}

#[derive(Serialize)]
struct ErrorBody<'a> {
    kind: &'a str,
    message: String,
}

impl CliError {
    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Usage(_) => "usage",
            CliError::Config(_) => "config",
            CliError::MatrixInput(_) => "matrix-input",
            CliError::BadFlag { .. } => "flag",
            CliError::Output { .. } => "output-io",
            CliError::Input { .. } => "input-io",
            CliError::Lattice(_) => "lattice",
            CliError::Timescale(_) => "timescale",
            CliError::Payoff(_) => "payoff",
            CliError::Game(_) => "game",
            CliError::Metrics(_) => "metrics",
            CliError::Scenario(_) => "scenario",
        }
    }

    /// The single-line JSON object printed to stderr.
    pub fn to_error_object(&self) -> String {
        serde_json::to_string(&ErrorObject {
            error: ErrorBody {
                kind: self.kind(),
                message: self.to_string(),
            },
        })
        .unwrap_or_else(|_| format!(r#"{{"error":{{"kind":"internal","message":"unprintable"}}}}"#))
    }
}
