//! Command-line front end for the maintenance-contest models.
//!
//! Subcommands: `scenario` (full time-grid run emitting CSV plus a solved
//! report), `payoff` (matrix at one instant, pretty-printed), `solve` (read
//! a matrix, solve the game), `entropy` (lattice path counts and
//! gradients), `walk` (seeded random walk to CSV), `duel` (agent timing
//! race), `distribution` (density tables and samples).
//!
//! Success prints results to stdout and exits 0; any failure prints one
//! JSON error object to stderr and exits nonzero.

mod config;
mod error;

use std::fs;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::{CommandFactory, Parser, Subcommand};
use serde::Serialize;

use idealstate::game::{self, GameSolution, MaximinReport};
use idealstate::lattice::{random_walk, DeviationVector};
use idealstate::metrics::{planck_gaussian_density, sample_distribution, DistributionParams};
use idealstate::payoff::characteristic_matrix;
use idealstate::scenario::{format_sig9, run_scenario, write_csv, SolutionSummary};
use idealstate::timescales::{duel, AutoAgent, HumanAgent};

use config::{parse_matrix, ScenarioConfig};
use error::CliError;

#[derive(Parser)]
#[command(
    name = "idealstate",
    version,
    about = "Maintenance-contest toolkit: payoff series, zero-sum solving, lattice entropy, timing duels"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a scenario config over its time grid: CSV series + solved games.
    Scenario {
        /// JSON scenario config (strict keys).
        #[arg(long)]
        config: PathBuf,
        /// Override the config's CSV output path.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Override the config's solver tolerance.
        #[arg(long)]
        tol: Option<f64>,
        /// Evaluate grid points concurrently (results merged in t-order).
        #[arg(long)]
        sweep: bool,
    },
    /// Pretty-print the characteristic matrix at one instant.
    Payoff {
        #[arg(long)]
        config: PathBuf,
        /// Time instant, hours.
        #[arg(long, allow_hyphen_values = true)]
        t: f64,
    },
    /// Solve a zero-sum game from a JSON 2-D array or headered CSV.
    Solve {
        #[arg(long)]
        matrix: PathBuf,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
    },
    /// Path-count entropy, gradients and norm of a deviation vector.
    Entropy {
        /// Comma-separated nonnegative components, e.g. "3,2".
        #[arg(long)]
        deviation: String,
    },
    /// Seeded random walk on the deviation lattice, as CSV.
    Walk {
        #[arg(long)]
        dims: usize,
        #[arg(long)]
        steps: usize,
        /// Probability that a step increments (vs decrements) its axis.
        #[arg(long, default_value_t = 0.5)]
        drift_up: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// CSV destination (stdout when omitted).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Race an automatic agent against a human responder.
    Duel {
        /// Automatic agent scheduling period, hours.
        #[arg(long)]
        auto_period: f64,
        /// Automatic agent execution time, hours.
        #[arg(long)]
        auto_exec: f64,
        /// Scheduled iterations needed to fix the incident.
        #[arg(long, default_value_t = 0)]
        auto_iterations: u32,
        /// Human decision time, hours.
        #[arg(long, default_value_t = 0.0)]
        human_decision: f64,
        /// Human execution time, hours.
        #[arg(long, default_value_t = 0.0)]
        human_exec: f64,
        /// Amplitude of the diurnal wait model, hours.
        #[arg(long, default_value_t = 4.0)]
        human_wait_base: f64,
        /// Fixed wait overriding the diurnal model, hours.
        #[arg(long)]
        human_wait_override: Option<f64>,
        /// Incident clock time, hours.
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        t: f64,
    },
    /// Planck+Gaussian density table or seeded samples, as CSV.
    Distribution {
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        gauss_amp: f64,
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        gauss_mean: f64,
        #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
        gauss_sigma: f64,
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        planck_amp: f64,
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        planck_origin: f64,
        #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
        planck_temp: f64,
        /// Emit this many samples instead of a density table.
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Table start (required without --samples).
        #[arg(long, required_unless_present = "samples", allow_hyphen_values = true)]
        from: Option<f64>,
        /// Table end (required without --samples).
        #[arg(long, required_unless_present = "samples", allow_hyphen_values = true)]
        to: Option<f64>,
        /// Number of table points.
        #[arg(long, default_value_t = 201)]
        points: usize,
        /// CSV destination (stdout when omitted).
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() {
    // Die quietly on a closed pipe (`idealstate ... | head`) instead of
    // panicking mid-write.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                std::process::exit(0);
            }
            let err = CliError::Usage(e.to_string());
            eprintln!("{}", err.to_error_object());
            let _ = Cli::command(); // keep clap metadata referenced
            std::process::exit(2);
        }
    };
    if let Err(err) = run(cli.command) {
        eprintln!("{}", err.to_error_object());
        std::process::exit(1);
    }
}

fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::Scenario {
            config,
            out,
            tol,
            sweep,
        } => run_scenario_cmd(&config, out, tol, sweep),
        Command::Payoff { config, t } => run_payoff(&config, t),
        Command::Solve { matrix, tol } => run_solve(&matrix, tol),
        Command::Entropy { deviation } => run_entropy(&deviation),
        Command::Walk {
            dims,
            steps,
            drift_up,
            seed,
            out,
        } => run_walk(dims, steps, drift_up, seed, out),
        Command::Duel {
            auto_period,
            auto_exec,
            auto_iterations,
            human_decision,
            human_exec,
            human_wait_base,
            human_wait_override,
            t,
        } => run_duel(
            auto_period,
            auto_exec,
            auto_iterations,
            human_decision,
            human_exec,
            human_wait_base,
            human_wait_override,
            t,
        ),
        Command::Distribution {
            gauss_amp,
            gauss_mean,
            gauss_sigma,
            planck_amp,
            planck_origin,
            planck_temp,
            samples,
            seed,
            from,
            to,
            points,
            out,
        } => {
            let params = DistributionParams {
                gauss_amp,
                gauss_mean,
                gauss_sigma,
                planck_amp,
                planck_origin,
                planck_temp,
            };
            run_distribution(&params, samples, seed, from, to, points, out)
        }
    }
}

fn read_to_string(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Input {
        path: path.display().to_string(),
        source,
    })
}

fn print_json<T: Serialize>(value: &T) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("report serialization cannot fail")
    );
}

#[derive(Serialize)]
struct ScenarioReport<'a> {
    csv_path: String,
    csv_rows_written: usize,
    seed: u64,
    sweep: bool,
    small_t_solution: &'a SolutionSummary,
    large_t_solution: &'a SolutionSummary,
}

fn run_scenario_cmd(
    config_path: &Path,
    out: Option<PathBuf>,
    tol_override: Option<f64>,
    sweep: bool,
) -> Result<(), CliError> {
    let config = ScenarioConfig::from_json(&read_to_string(config_path)?)?;
    let tol = tol_override.unwrap_or(config.tol);
    if !(tol.is_finite() && tol > 0.0) {
        return Err(CliError::BadFlag {
            flag: "--tol",
            message: format!("must be positive and finite, got {tol}"),
        });
    }
    let out_path = out.unwrap_or_else(|| PathBuf::from(&config.output));

    let outcome = run_scenario(&config.params(), &config.grid(), tol, sweep)?;

    let file = fs::File::create(&out_path).map_err(|source| CliError::Output {
        path: out_path.display().to_string(),
        source,
    })?;
    let mut writer = BufWriter::new(file);
    let rows_written =
        write_csv(&outcome.rows, &mut writer).map_err(|source| CliError::Output {
            path: out_path.display().to_string(),
            source,
        })?;
    writer.flush().map_err(|source| CliError::Output {
        path: out_path.display().to_string(),
        source,
    })?;

    print_json(&ScenarioReport {
        csv_path: out_path.display().to_string(),
        csv_rows_written: rows_written,
        seed: config.seed,
        sweep,
        small_t_solution: &outcome.small_t_solution,
        large_t_solution: &outcome.large_t_solution,
    });
    Ok(())
}

fn run_payoff(config_path: &Path, t: f64) -> Result<(), CliError> {
    let config = ScenarioConfig::from_json(&read_to_string(config_path)?)?;
    let params = config.params();
    let cm = characteristic_matrix(t, &params)?;
    let b = &cm.breakdown;

    println!(
        "t = {} h; threshold tidying {} (threshold {} h); saturated: {}",
        format_sig9(t),
        if cm.threshold_active {
            "active"
        } else {
            "inactive"
        },
        format_sig9(params.threshold_hours),
        if cm.saturated {
            "yes (pi_u > 1/2)"
        } else {
            "no"
        },
    );
    println!(
        "pi_g={} pi_b={} pi_u={} pi_a_raw={} pi_a={} pi_q={}",
        format_sig9(b.pi_g),
        format_sig9(b.pi_b),
        format_sig9(b.pi_u),
        format_sig9(b.pi_a_raw),
        format_sig9(b.pi_a),
        format_sig9(b.pi_q),
    );
    println!();

    let m = &cm.matrix;
    let label_width = m
        .row_labels()
        .iter()
        .map(|l| l.len())
        .max()
        .unwrap_or(0)
        .max("user \\ system".len());
    print!("{:<label_width$}", "user \\ system");
    for label in m.col_labels() {
        print!("  {label:>20}");
    }
    println!();
    for r in 0..m.rows() {
        print!("{:<label_width$}", m.row_labels()[r]);
        for c in 0..m.cols() {
            print!("  {:>20}", format_sig9(m.at(r, c)));
        }
        println!();
    }
    Ok(())
}

#[derive(Serialize)]
struct SolveReport {
    rows: usize,
    cols: usize,
    row_labels: Vec<String>,
    col_labels: Vec<String>,
    #[serde(flatten)]
    security: MaximinReport,
    saddle_points: Vec<(usize, usize)>,
    solution: GameSolution,
}

fn run_solve(matrix_path: &Path, tol: f64) -> Result<(), CliError> {
    let matrix = parse_matrix(&read_to_string(matrix_path)?)?;
    let solution = game::solve_mixed(&matrix, tol)?;
    print_json(&SolveReport {
        rows: matrix.rows(),
        cols: matrix.cols(),
        row_labels: matrix.row_labels().to_vec(),
        col_labels: matrix.col_labels().to_vec(),
        security: matrix.maximin_minimax(),
        saddle_points: matrix.saddle_points(),
        solution,
    });
    Ok(())
}

#[derive(Serialize)]
struct GradientReport {
    axis: usize,
    exact: String,
    value: f64,
}

#[derive(Serialize)]
struct EntropyReport {
    components: Vec<u64>,
    dims: usize,
    total: u64,
    path_count: String,
    log_path_count: f64,
    euclidean_norm: f64,
    relative_gradients: Vec<GradientReport>,
}

fn run_entropy(deviation: &str) -> Result<(), CliError> {
    let components: Result<Vec<u64>, _> = deviation
        .split(',')
        .map(|part| part.trim().parse::<u64>())
        .collect();
    let components = components.map_err(|e| CliError::BadFlag {
        flag: "--deviation",
        message: format!("expected comma-separated nonnegative integers: {e}"),
    })?;
    let d = DeviationVector::new(components)?;
    let gradients = (0..d.dims())
        .map(|axis| {
            let exact = d.relative_gradient(axis).expect("axis in range");
            GradientReport {
                axis,
                exact: exact.to_string(),
                value: d.relative_gradient_f64(axis).expect("axis in range"),
            }
        })
        .collect();
    print_json(&EntropyReport {
        components: d.components().to_vec(),
        dims: d.dims(),
        total: d.total(),
        path_count: d.path_count().to_string(),
        log_path_count: d.log_path_count(),
        euclidean_norm: d.euclidean_norm(),
        relative_gradients: gradients,
    });
    Ok(())
}

fn open_out(out: Option<PathBuf>) -> Result<Box<dyn Write>, CliError> {
    match out {
        Some(path) => {
            let file = fs::File::create(&path).map_err(|source| CliError::Output {
                path: path.display().to_string(),
                source,
            })?;
            Ok(Box::new(BufWriter::new(file)))
        }
        None => Ok(Box::new(io::stdout())),
    }
}

fn run_walk(
    dims: usize,
    steps: usize,
    drift_up: f64,
    seed: u64,
    out: Option<PathBuf>,
) -> Result<(), CliError> {
    if dims == 0 {
        return Err(CliError::BadFlag {
            flag: "--dims",
            message: "must be at least 1".to_string(),
        });
    }
    if !(0.0..=1.0).contains(&drift_up) {
        return Err(CliError::BadFlag {
            flag: "--drift-up",
            message: format!("must lie in [0, 1], got {drift_up}"),
        });
    }
    let walk = random_walk(dims, steps, drift_up, seed)?;
    let writer = open_out(out)?;
    let emit = || -> io::Result<()> {
        let mut w = writer;
        write!(w, "step")?;
        for axis in 1..=dims {
            write!(w, ",d{axis}")?;
        }
        writeln!(w)?;
        for (step, state) in walk.states.iter().enumerate() {
            write!(w, "{step}")?;
            for &component in state.components() {
                write!(w, ",{component}")?;
            }
            writeln!(w)?;
        }
        w.flush()
    };
    emit().map_err(|source| CliError::Output {
        path: "walk csv".to_string(),
        source,
    })
}

#[derive(Serialize)]
struct DuelReport {
    incident_t_hours: f64,
    auto: AutoAgent,
    human: HumanAgent,
    outcome: idealstate::timescales::DuelOutcome,
}

#[allow(clippy::too_many_arguments)]
fn run_duel(
    auto_period: f64,
    auto_exec: f64,
    auto_iterations: u32,
    human_decision: f64,
    human_exec: f64,
    human_wait_base: f64,
    human_wait_override: Option<f64>,
    t: f64,
) -> Result<(), CliError> {
    let auto = AutoAgent::new(auto_period, auto_exec, auto_iterations)?;
    let mut human = HumanAgent::new(human_decision, human_exec, human_wait_base)?;
    if let Some(wait) = human_wait_override {
        human = human.with_wait_override(wait)?;
    }
    let outcome = duel(&auto, &human, t);
    print_json(&DuelReport {
        incident_t_hours: t,
        auto,
        human,
        outcome,
    });
    Ok(())
}

fn run_distribution(
    params: &DistributionParams,
    samples: Option<usize>,
    seed: u64,
    from: Option<f64>,
    to: Option<f64>,
    points: usize,
    out: Option<PathBuf>,
) -> Result<(), CliError> {
    params.validate()?;
    if points == 0 {
        return Err(CliError::BadFlag {
            flag: "--points",
            message: "must be at least 1".to_string(),
        });
    }
    if let (None, Some(from), Some(to)) = (samples, from, to) {
        if !(from.is_finite() && to.is_finite() && from < to) {
            return Err(CliError::BadFlag {
                flag: "--from/--to",
                message: format!("need finite from < to, got {from}..{to}"),
            });
        }
    }
    let mut writer = open_out(out)?;
    let emit = |w: &mut dyn Write| -> io::Result<()> {
        match samples {
            Some(count) => {
                let values = sample_distribution(params, count, seed)
                    .expect("params validated before sampling");
                writeln!(w, "sample")?;
                for value in values {
                    writeln!(w, "{}", format_sig9(value))?;
                }
            }
            None => {
                let (from, to) = (
                    from.expect("required by clap"),
                    to.expect("required by clap"),
                );
                let step = if points > 1 {
                    (to - from) / (points - 1) as f64
                } else {
                    0.0
                };
                writeln!(w, "lambda,density")?;
                for i in 0..points {
                    let x = from + i as f64 * step;
                    writeln!(
                        w,
                        "{},{}",
                        format_sig9(x),
                        format_sig9(planck_gaussian_density(x, params))
                    )?;
                }
            }
        }
        w.flush()
    };
    emit(&mut writer).map_err(|source| CliError::Output {
        path: "distribution csv".to_string(),
        source,
    })
}
