//! Response times of automatic and human maintenance agents.
//!
//! An automatic agent runs on a fixed schedule: its response to an incident
//! lands between its bare execution time and `n` full scheduling periods
//! plus execution (when several runs are needed to converge). A human
//! responder adds decision and execution time on top of a wait that follows
//! the daily availability rhythm. [`duel`] races the two, comparing the
//! automaton's worst case against the human's best case.

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Angular frequency of a 24-hour diurnal cycle, radians per hour.
const DIURNAL_OMEGA: f64 = std::f64::consts::TAU / 24.0;

#[derive(Debug, Error, PartialEq)]
pub enum TimescaleError {
    #[error("period_hours must be positive and finite, got {0}")]
    BadPeriod(f64),
    #[error("{field} must be nonnegative and finite, got {value}")]
    BadDuration { field: &'static str, value: f64 },
    #[error("period_hours ({period}) must be at least exec_hours ({exec})")]
    PeriodShorterThanExec { period: f64, exec: f64 },
}

fn check_duration(field: &'static str, value: f64) -> Result<(), TimescaleError> {
    if !value.is_finite() || value < 0.0 {
        return Err(TimescaleError::BadDuration { field, value });
    }
    Ok(())
}

/// A periodically scheduled repair agent.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AutoAgent {
    /// Scheduling period between regular executions, hours.
    pub period_hours: f64,
    /// Execution time of one run, hours.
    pub exec_hours: f64,
    /// Number of scheduled iterations needed to fix the incident.
    pub iterations: u32,
    /// Decision time, hours. Negligible for an automaton; kept for
    /// completeness and excluded from the response bounds.
    pub decision_hours: f64,
}

impl AutoAgent {
    pub fn new(
        period_hours: f64,
        exec_hours: f64,
        iterations: u32,
    ) -> Result<Self, TimescaleError> {
        if !period_hours.is_finite() || period_hours <= 0.0 {
            return Err(TimescaleError::BadPeriod(period_hours));
        }
        check_duration("exec_hours", exec_hours)?;
        if period_hours < exec_hours {
            return Err(TimescaleError::PeriodShorterThanExec {
                period: period_hours,
                exec: exec_hours,
            });
        }
        Ok(Self {
            period_hours,
            exec_hours,
            iterations,
            decision_hours: 0.0,
        })
    }

    /// Response-time envelope `(lower, upper)` in hours: the best case is a
    /// bare execution, the worst case waits out all scheduled iterations.
    pub fn response_bounds(&self) -> (f64, f64) {
        let lower = self.exec_hours;
        let upper = f64::from(self.iterations) * self.period_hours + self.exec_hours;
        (lower, upper)
    }
}

/// A human responder with a diurnal availability pattern.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct HumanAgent {
    /// Time to decide on the correct response, hours.
    pub decision_hours: f64,
    /// Time to execute the remedy, hours.
    pub exec_hours: f64,
    /// Amplitude of the diurnal wait model, hours. With the conventional
    /// 8-hour sleep pattern this is 4.
    pub wait_base_hours: f64,
    /// Fixed wait overriding the diurnal model, when set.
    pub wait_override_hours: Option<f64>,
}

impl HumanAgent {
    pub fn new(
        decision_hours: f64,
        exec_hours: f64,
        wait_base_hours: f64,
    ) -> Result<Self, TimescaleError> {
        check_duration("decision_hours", decision_hours)?;
        check_duration("exec_hours", exec_hours)?;
        check_duration("wait_base_hours", wait_base_hours)?;
        Ok(Self {
            decision_hours,
            exec_hours,
            wait_base_hours,
            wait_override_hours: None,
        })
    }

    pub fn with_wait_override(mut self, wait_hours: f64) -> Result<Self, TimescaleError> {
        check_duration("wait_override_hours", wait_hours)?;
        self.wait_override_hours = Some(wait_hours);
        Ok(self)
    }

    /// Wait before the human is free to respond to an incident at clock
    /// time `t_hours`: `base * (1 + sin(2*pi*t/24))`, peaking mid-morning
    /// and vanishing at the evening trough, unless a fixed override is set.
    pub fn wait_at(&self, t_hours: f64) -> f64 {
        if let Some(fixed) = self.wait_override_hours {
            return fixed;
        }
        self.wait_base_hours * (1.0 + (DIURNAL_OMEGA * t_hours).sin())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum DuelWinner {
    Auto,
    Human,
    Tie,
}

/// Outcome of one repair duel: the automaton's worst case against the
/// human's best case.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DuelOutcome {
    pub winner: DuelWinner,
    pub auto_worst_hours: f64,
    pub human_best_hours: f64,
}

/// Race an automatic agent against a human for an incident at `t_hours`.
///
/// The comparison is deliberately pessimistic for the automaton (its upper
/// response bound) and optimistic for the human (wait + decision + execute
/// with no queueing), so an `Auto` verdict is robust. Equal totals are
/// reported as a tie rather than broken arbitrarily.
pub fn duel(auto: &AutoAgent, human: &HumanAgent, incident_t_hours: f64) -> DuelOutcome {
    let (_, auto_worst_hours) = auto.response_bounds();
    let human_best_hours =
        human.wait_at(incident_t_hours) + human.decision_hours + human.exec_hours;
    let winner = if auto_worst_hours < human_best_hours {
        DuelWinner::Auto
    } else if auto_worst_hours > human_best_hours {
        DuelWinner::Human
    } else {
        DuelWinner::Tie
    };
    DuelOutcome {
        winner,
        auto_worst_hours,
        human_best_hours,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const TEN_SECONDS: f64 = 10.0 / 3600.0;

    #[test]
    fn bounds_collapse_at_zero_iterations() {
        let agent = AutoAgent::new(0.5, TEN_SECONDS, 0).unwrap();
        let (lo, hi) = agent.response_bounds();
        assert_eq!(lo, TEN_SECONDS);
        assert_eq!(hi, TEN_SECONDS);
    }

    #[test]
    fn bounds_with_iterations() {
        let agent = AutoAgent::new(0.5, TEN_SECONDS, 2).unwrap();
        let (lo, hi) = agent.response_bounds();
        assert!((lo - TEN_SECONDS).abs() < 1e-15);
        assert!((hi - (1.0 + TEN_SECONDS)).abs() < 1e-12);
    }

    #[test]
    fn bounds_with_zero_exec() {
        let agent = AutoAgent::new(1.0, 0.0, 3).unwrap();
        assert_eq!(agent.response_bounds(), (0.0, 3.0));
    }

    #[test]
    fn period_must_cover_exec() {
        assert!(AutoAgent::new(0.1, 0.2, 1).is_err());
    }

    #[test]
    fn wait_peaks_and_troughs() {
        let human = HumanAgent::new(0.0, 0.0, 4.0).unwrap();
        assert!((human.wait_at(6.0) - 8.0).abs() < 1e-12);
        assert!(human.wait_at(18.0).abs() < 1e-12);
        let flat = HumanAgent::new(0.0, 0.0, 0.0).unwrap();
        assert_eq!(flat.wait_at(3.7), 0.0);
    }

    #[test]
    fn wait_override_wins() {
        let human = HumanAgent::new(0.1, 0.1, 4.0)
            .unwrap()
            .with_wait_override(0.25)
            .unwrap();
        assert_eq!(human.wait_at(6.0), 0.25);
    }

    #[test]
    fn duel_fast_automaton_wins_midday() {
        let auto = AutoAgent::new(0.5, 0.0028, 0).unwrap();
        let human = HumanAgent::new(0.05, 0.05, 4.0).unwrap();
        let outcome = duel(&auto, &human, 6.0);
        assert_eq!(outcome.winner, DuelWinner::Auto);
        assert!((outcome.human_best_hours - 8.1).abs() < 1e-12);
        assert!((outcome.auto_worst_hours - 0.0028).abs() < 1e-15);
    }

    #[test]
    fn duel_instant_human_wins() {
        let auto = AutoAgent::new(0.5, 0.01, 0).unwrap();
        let human = HumanAgent::new(0.0, 0.0, 4.0)
            .unwrap()
            .with_wait_override(0.0)
            .unwrap();
        assert_eq!(duel(&auto, &human, 12.0).winner, DuelWinner::Human);
    }

    #[test]
    fn duel_equal_totals_tie() {
        let auto = AutoAgent::new(1.0, 0.5, 0).unwrap();
        let human = HumanAgent::new(0.25, 0.25, 4.0)
            .unwrap()
            .with_wait_override(0.0)
            .unwrap();
        assert_eq!(duel(&auto, &human, 3.0).winner, DuelWinner::Tie);
    }

    #[test]
    fn diurnal_wait_statistics() {
        // min 0, max 2b, mean b over one period, by dense trapezoid sweep.
        let base = 4.0;
        let human = HumanAgent::new(0.0, 0.0, base).unwrap();
        let n = 200_000usize;
        let dt = 24.0 / n as f64;
        let mut min = f64::INFINITY;
        let mut max = f64::NEG_INFINITY;
        let mut sum = 0.0;
        for k in 0..n {
            let w = human.wait_at(k as f64 * dt);
            min = min.min(w);
            max = max.max(w);
            sum += w * dt;
        }
        assert!(min.abs() < 1e-6);
        assert!((max - 2.0 * base).abs() < 1e-6);
        assert!((sum / 24.0 - base).abs() < 1e-6);
    }

    proptest! {
        #[test]
        fn lower_bound_never_exceeds_upper(
            period in 0.01f64..100.0,
            exec_frac in 0.0f64..1.0,
            iterations in 0u32..50,
        ) {
            let agent = AutoAgent::new(period, exec_frac * period, iterations).unwrap();
            let (lo, hi) = agent.response_bounds();
            prop_assert!(lo <= hi);
        }

        #[test]
        fn wait_above_upper_bound_means_auto_wins_all_day(
            wait in 0.0f64..0.1,
            decision in 0.0f64..0.5,
            exec in 0.0f64..0.5,
        ) {
            // If the human wait alone exceeds the automaton's upper bound at
            // every hour, the duel must return Auto at every hour. The
            // diurnal wait vanishes at its trough, so the premise needs a
            // fixed wait floor.
            let auto = AutoAgent::new(0.5, 0.001, 0).unwrap();
            let human = HumanAgent::new(decision, exec, 4.0)
                .unwrap()
                .with_wait_override(wait)
                .unwrap();
            let (_, upper) = auto.response_bounds();
            prop_assume!((0..24).all(|t| human.wait_at(t as f64) > upper));
            for t in 0..24 {
                prop_assert_eq!(duel(&auto, &human, t as f64).winner, DuelWinner::Auto);
            }
        }
    }
}
