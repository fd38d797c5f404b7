//! Time-dependent payoffs of the garbage-collection game.
//!
//! Users create files at a diurnally modulated rate, an automatic tidier
//! reclaims space on its own schedule, and quotas fix each user's slice of
//! the total. Each cumulative payoff is the integral of
//! `r * (sin(2*pi*t/P) + 1) / 2` from 0 to `T` (rates are fractions of the
//! total resource per hour), evaluated in closed form:
//!
//! ```text
//! pi(T) = r/2 * [ T + P/(2*pi) * (1 - cos(2*pi*T/P)) ]
//! ```
//!
//! The tidier's payoff is negative (a transfer from users to the system)
//! and, in a zero-sum reading, can never exceed in magnitude what users
//! have actually consumed; with `clamp_auto` on it saturates at `|pi_u|`.
//!
//! [`characteristic_matrix`] assembles the 4x4 game of user strategies
//! (rows) against system tidying strategies (columns) at a time instant,
//! combining resource payoffs with fixed satisfaction terms of -1/2, 0 or
//! +1/2 per cell.

use serde::{Deserialize, Serialize};
use std::f64::consts::TAU;
use thiserror::Error;

use crate::game::PayoffMatrix;

/// Row labels of the characteristic matrix (user strategies).
pub const USER_STRATEGY_LABELS: [&str; 4] = [
    "tidy-when-asked",
    "never-tidy",
    "conceal-files",
    "change-timestamps",
];

/// Column labels of the characteristic matrix (system strategies).
pub const SYSTEM_STRATEGY_LABELS: [&str; 4] = [
    "ask-to-tidy",
    "tidy-by-date",
    "tidy-above-threshold",
    "quotas",
];

/// Row index of the "conceal files" user strategy.
pub const CONCEAL_FILES_ROW: usize = 2;

/// Column index of the quota system strategy.
pub const QUOTA_COLUMN: usize = 3;

#[derive(Debug, Error, PartialEq)]
pub enum PayoffError {
    #[error("need at least one user (n_good + n_bad >= 1, n_good >= 1)")]
    NoUsers,
    #[error("{field} must be nonnegative and finite, got {value}")]
    BadRate { field: &'static str, value: f64 },
    #[error("{field} must be positive and finite, got {value}")]
    BadPeriod { field: &'static str, value: f64 },
    #[error("time must be nonnegative and finite, got {0}")]
    NegativeTime(f64),
}

/// Parameters of one garbage-collection scenario.
///
/// Rates are expressed as fractions of the total resource per hour, so the
/// normalizing resource total never appears explicitly.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScenarioParams {
    /// Number of well-behaved users (at least 1).
    pub n_good: u32,
    /// Number of mischievous users.
    pub n_bad: u32,
    /// Fill rate of one good user, fraction of total per hour.
    pub rate_good: f64,
    /// Fill rate of one bad user, fraction of total per hour.
    pub rate_bad: f64,
    /// Reclaim rate of the automatic tidier, fraction of total per hour.
    pub rate_auto: f64,
    /// Period of the users' activity cycle, hours (daily rhythm: 24).
    pub user_period_hours: f64,
    /// Scheduling period of the automatic tidier, hours.
    pub auto_period_hours: f64,
    /// Time before threshold-based tidying activates, hours.
    pub threshold_hours: f64,
    /// Cap the tidier's cumulative reclaim at what users have consumed.
    pub clamp_auto: bool,
}

impl ScenarioParams {
    pub fn validate(&self) -> Result<(), PayoffError> {
        if self.n_good == 0 {
            return Err(PayoffError::NoUsers);
        }
        for (field, value) in [
            ("rate_good", self.rate_good),
            ("rate_bad", self.rate_bad),
            ("rate_auto", self.rate_auto),
            ("threshold_hours", self.threshold_hours),
        ] {
            if !value.is_finite() || value < 0.0 {
                return Err(PayoffError::BadRate { field, value });
            }
        }
        for (field, value) in [
            ("user_period_hours", self.user_period_hours),
            ("auto_period_hours", self.auto_period_hours),
        ] {
            if !value.is_finite() || value <= 0.0 {
                return Err(PayoffError::BadPeriod { field, value });
            }
        }
        Ok(())
    }

    pub fn user_count(&self) -> u32 {
        self.n_good + self.n_bad
    }
}

/// Which cumulative payoff to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PayoffKind {
    GoodUsers,
    BadUsers,
    AllUsers,
    Auto,
    Quota,
}

/// Population-weighted mean fill rate over good and bad users.
pub fn combined_user_rate(params: &ScenarioParams) -> f64 {
    let n_good = f64::from(params.n_good);
    let n_bad = f64::from(params.n_bad);
    (n_bad * params.rate_bad + n_good * params.rate_good) / (n_bad + n_good)
}

/// Integral of `r/2 * (sin(2 pi t / period) + 1)` from 0 to `t`.
fn ramp(rate: f64, period: f64, t: f64) -> f64 {
    0.5 * rate * (t + period / TAU * (1.0 - (TAU * t / period).cos()))
}

/// Cumulative payoff of `kind` at time `t_hours`.
///
/// User kinds accumulate on the user period; `Auto` accumulates (negatively)
/// on the tidier period and, when `clamp_auto` is set, saturates at minus
/// the all-users payoff. `Quota` is the constant fair slice `1/2 * 1/n`.
pub fn cumulative_payoff(
    kind: PayoffKind,
    t_hours: f64,
    params: &ScenarioParams,
) -> Result<f64, PayoffError> {
    params.validate()?;
    if !t_hours.is_finite() || t_hours < 0.0 {
        return Err(PayoffError::NegativeTime(t_hours));
    }
    let value = match kind {
        PayoffKind::GoodUsers => ramp(params.rate_good, params.user_period_hours, t_hours),
        PayoffKind::BadUsers => ramp(params.rate_bad, params.user_period_hours, t_hours),
        PayoffKind::AllUsers => ramp(
            combined_user_rate(params),
            params.user_period_hours,
            t_hours,
        ),
        PayoffKind::Auto => {
            let raw = ramp(params.rate_auto, params.auto_period_hours, t_hours);
            if params.clamp_auto {
                let users = ramp(
                    combined_user_rate(params),
                    params.user_period_hours,
                    t_hours,
                );
                -raw.min(users)
            } else {
                -raw
            }
        }
        PayoffKind::Quota => 0.5 / f64::from(params.user_count()),
    };
    Ok(value)
}

/// All cumulative payoff contributions at one time instant.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PayoffBreakdown {
    /// Good users' cumulative consumption payoff.
    pub pi_g: f64,
    /// Bad users' cumulative consumption payoff.
    pub pi_b: f64,
    /// All users combined.
    pub pi_u: f64,
    /// Tidier payoff before clamping (nonpositive).
    pub pi_a_raw: f64,
    /// Effective tidier payoff (clamped to `|pi_u|` when `clamp_auto`).
    pub pi_a: f64,
    /// Constant quota payoff.
    pub pi_q: f64,
}

/// Evaluate every payoff contribution at `t_hours`.
pub fn breakdown(t_hours: f64, params: &ScenarioParams) -> Result<PayoffBreakdown, PayoffError> {
    params.validate()?;
    if !t_hours.is_finite() || t_hours < 0.0 {
        return Err(PayoffError::NegativeTime(t_hours));
    }
    let pi_u = ramp(
        combined_user_rate(params),
        params.user_period_hours,
        t_hours,
    );
    let raw = ramp(params.rate_auto, params.auto_period_hours, t_hours);
    let pi_a = if params.clamp_auto {
        -raw.min(pi_u)
    } else {
        -raw
    };
    Ok(PayoffBreakdown {
        pi_g: ramp(params.rate_good, params.user_period_hours, t_hours),
        pi_b: ramp(params.rate_bad, params.user_period_hours, t_hours),
        pi_u,
        pi_a_raw: -raw,
        pi_a,
        pi_q: 0.5 / f64::from(params.user_count()),
    })
}

/// The characteristic matrix at one time instant, with its ingredients.
#[derive(Debug, Clone, Serialize)]
pub struct CharacteristicMatrix {
    pub matrix: PayoffMatrix,
    pub breakdown: PayoffBreakdown,
    /// Whether threshold-based tidying is active (`t >= threshold_hours`).
    pub threshold_active: bool,
    /// Cumulative user consumption has outgrown the valid payoff range
    /// (`pi_u > 1/2`); entries are still computed but the bounded-payoff
    /// reading no longer applies and quotas dominate the game.
    pub saturated: bool,
}

impl CharacteristicMatrix {
    /// The same game without the quota column: the contest as it stands
    /// while quotas are not binding.
    pub fn without_quota_column(&self) -> PayoffMatrix {
        self.matrix
            .dropping_col(QUOTA_COLUMN)
            .expect("characteristic matrix has four columns")
    }
}

/// Assemble the 4x4 characteristic matrix at `t_hours`.
///
/// Rows (user strategies): tidy when asked, never tidy, conceal files,
/// change timestamps. Columns (system strategies): ask to tidy, tidy by
/// date, tidy above threshold, quotas. Entry structure:
///
/// ```text
/// [ pi_g - 1/2        pi_g - 1/2             pi_g - 1/2                  pi_q ]
/// [ pi_u + 1/2        pi_u + pi_a + 1/2      pi_u + pi_a*theta + 1/2     pi_q ]
/// [ pi_u + 1/2        pi_u + 1/2             pi_u + 1/2                  pi_q ]
/// [ pi_u + 1/2        pi_u + 1/2             pi_u + pi_a*theta + 1/2     pi_q ]
/// ```
///
/// where `theta` is 1 once `t` reaches the threshold time and 0 before.
/// Identical formulas share one computation, so the row and column
/// equalities hold bit-exactly.
pub fn characteristic_matrix(
    t_hours: f64,
    params: &ScenarioParams,
) -> Result<CharacteristicMatrix, PayoffError> {
    let b = breakdown(t_hours, params)?;
    let threshold_active = t_hours >= params.threshold_hours;

    let good = b.pi_g - 0.5;
    let base = 0.5 + b.pi_u;
    let tidied = base + b.pi_a;
    let tidied_after_threshold = if threshold_active { tidied } else { base };
    let quota = b.pi_q;

    let matrix = PayoffMatrix::with_labels(
        vec![
            vec![good, good, good, quota],
            vec![base, tidied, tidied_after_threshold, quota],
            vec![base, base, base, quota],
            vec![base, base, tidied_after_threshold, quota],
        ],
        USER_STRATEGY_LABELS.iter().map(|s| s.to_string()).collect(),
        SYSTEM_STRATEGY_LABELS
            .iter()
            .map(|s| s.to_string())
            .collect(),
    )
    .expect("4x4 assembly from finite payoffs cannot fail");

    Ok(CharacteristicMatrix {
        matrix,
        breakdown: b,
        threshold_active,
        saturated: b.pi_u > 0.5,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// The worked example: 1% mischievous users, fill rates in the same
    /// ratio, daily tidying.
    pub(crate) fn example_params() -> ScenarioParams {
        ScenarioParams {
            n_good: 99,
            n_bad: 1,
            rate_good: 0.01,
            rate_bad: 0.99,
            rate_auto: 0.1,
            user_period_hours: 24.0,
            auto_period_hours: 24.0,
            threshold_hours: 0.0,
            clamp_auto: true,
        }
    }

    #[test]
    fn combined_rate_examples() {
        let p = example_params();
        assert!((combined_user_rate(&p) - 0.0198).abs() < 1e-12);

        let single = ScenarioParams {
            n_bad: 0,
            ..example_params()
        };
        assert_eq!(combined_user_rate(&single), single.rate_good);

        let equal = ScenarioParams {
            rate_bad: 0.3,
            rate_good: 0.3,
            ..example_params()
        };
        assert!((combined_user_rate(&equal) - 0.3).abs() < 1e-15);
    }

    #[test]
    fn combined_rate_is_between_the_rates() {
        let p = example_params();
        let r = combined_user_rate(&p);
        assert!(p.rate_good <= r && r <= p.rate_bad);
    }

    #[test]
    fn quota_payoff_is_half_over_n() {
        let p = example_params();
        assert_eq!(
            cumulative_payoff(PayoffKind::Quota, 7.0, &p).unwrap(),
            0.005
        );
    }

    #[test]
    fn all_users_full_period() {
        // At a full period the cosine term vanishes: pi_u(24) = r_u/2 * 24.
        let p = example_params();
        let v = cumulative_payoff(PayoffKind::AllUsers, 24.0, &p).unwrap();
        assert!((v - 0.2376).abs() < 1e-12);
    }

    #[test]
    fn auto_clamps_to_user_consumption() {
        let p = example_params();
        let clamped = cumulative_payoff(PayoffKind::Auto, 24.0, &p).unwrap();
        assert!((clamped - (-0.2376)).abs() < 1e-12);

        let unclamped = ScenarioParams {
            clamp_auto: false,
            ..example_params()
        };
        let raw = cumulative_payoff(PayoffKind::Auto, 24.0, &unclamped).unwrap();
        assert!((raw - (-1.2)).abs() < 1e-12);
    }

    #[test]
    fn negative_time_rejected() {
        let p = example_params();
        assert_eq!(
            cumulative_payoff(PayoffKind::AllUsers, -1.0, &p),
            Err(PayoffError::NegativeTime(-1.0))
        );
        assert!(breakdown(f64::NAN, &p).is_err());
    }

    #[test]
    fn zero_users_rejected() {
        let p = ScenarioParams {
            n_good: 0,
            n_bad: 0,
            ..example_params()
        };
        assert_eq!(p.validate(), Err(PayoffError::NoUsers));
    }

    #[test]
    fn quota_column_is_constant() {
        let p = example_params();
        for t in [0.0, 5.0, 24.0, 100.0] {
            let cm = characteristic_matrix(t, &p).unwrap();
            for r in 0..4 {
                assert_eq!(cm.matrix.at(r, QUOTA_COLUMN), cm.breakdown.pi_q);
            }
        }
    }

    #[test]
    fn threshold_suppresses_auto_before_t0() {
        let p = ScenarioParams {
            threshold_hours: 48.0,
            ..example_params()
        };
        let cm = characteristic_matrix(24.0, &p).unwrap();
        assert!(!cm.threshold_active);
        assert!((cm.matrix.at(1, 2) - 0.7376).abs() < 1e-12);
    }

    #[test]
    fn clamped_auto_cancels_user_gain() {
        let p = example_params(); // threshold 0: theta active from t = 0
        let cm = characteristic_matrix(24.0, &p).unwrap();
        assert!(cm.threshold_active);
        assert!((cm.matrix.at(1, 1) - 0.5).abs() < 1e-12);
    }

    #[test]
    fn row_and_column_equalities_hold_exactly() {
        let p = ScenarioParams {
            threshold_hours: 10.0,
            ..example_params()
        };
        for t in [0.0, 3.0, 10.0, 17.0, 24.0] {
            let cm = characteristic_matrix(t, &p).unwrap();
            let m = &cm.matrix;
            // Row 1: ask/date/threshold are indistinguishable for compliant users.
            assert_eq!(m.at(0, 0), m.at(0, 1));
            assert_eq!(m.at(0, 1), m.at(0, 2));
            // Unmitigated consumption cells all coincide.
            for (r, c) in [(2, 0), (2, 1), (2, 2), (3, 0), (3, 1)] {
                assert_eq!(m.at(1, 0), m.at(r, c));
            }
            // Threshold tidying hits date-changers and never-tidiers alike.
            assert_eq!(m.at(1, 2), m.at(3, 2));
        }
    }

    #[test]
    fn saturation_reported_past_valid_regime() {
        let p = example_params();
        assert!(!characteristic_matrix(24.0, &p).unwrap().saturated);
        assert!(characteristic_matrix(51.0, &p).unwrap().saturated);
    }

    fn arbitrary_params() -> impl Strategy<Value = ScenarioParams> {
        (
            1u32..200,
            0u32..50,
            0.0f64..1.0,
            0.0f64..1.0,
            0.0f64..1.0,
            1.0f64..48.0,
            1.0f64..48.0,
            0.0f64..100.0,
        )
            .prop_map(
                |(n_good, n_bad, rate_good, rate_bad, rate_auto, up, ap, threshold)| {
                    ScenarioParams {
                        n_good,
                        n_bad,
                        rate_good,
                        rate_bad,
                        rate_auto,
                        user_period_hours: up,
                        auto_period_hours: ap,
                        threshold_hours: threshold,
                        clamp_auto: true,
                    }
                },
            )
    }

    proptest! {
        #[test]
        fn user_payoffs_nondecreasing(params in arbitrary_params(), t1 in 0.0f64..100.0, dt in 0.0f64..100.0) {
            for kind in [PayoffKind::GoodUsers, PayoffKind::BadUsers, PayoffKind::AllUsers] {
                let early = cumulative_payoff(kind, t1, &params).unwrap();
                let late = cumulative_payoff(kind, t1 + dt, &params).unwrap();
                prop_assert!(late >= early - 1e-12);
            }
        }

        #[test]
        fn entry_inequality_chain(params in arbitrary_params(), t in 0.0f64..100.0) {
            let cm = characteristic_matrix(t, &params).unwrap();
            let m = &cm.matrix;
            // never-tidy row: untidied >= threshold-tidied >= always-tidied.
            prop_assert!(m.at(2, 1) >= m.at(1, 2));
            prop_assert!(m.at(1, 2) >= m.at(1, 1));
            // winning users outweigh compliant ones in magnitude.
            if cm.breakdown.pi_u >= cm.breakdown.pi_g {
                prop_assert!(m.at(1, 0).abs() >= m.at(0, 0).abs());
            }
        }

        #[test]
        fn entries_bounded_until_saturation(params in arbitrary_params(), t in 0.0f64..100.0) {
            // Bad users are the aggressive consumers; otherwise pi_g can
            // outgrow pi_u and the bounded-payoff reading never applied.
            let mut params = params;
            if params.rate_bad < params.rate_good {
                std::mem::swap(&mut params.rate_bad, &mut params.rate_good);
            }
            let cm = characteristic_matrix(t, &params).unwrap();
            if !cm.saturated {
                for r in 0..4 {
                    for c in 0..4 {
                        prop_assert!((-1.0..=1.0).contains(&cm.matrix.at(r, c)));
                    }
                }
            }
        }

        #[test]
        fn clamp_keeps_auto_within_user_consumption(params in arbitrary_params(), t in 0.0f64..200.0) {
            let b = breakdown(t, &params).unwrap();
            prop_assert!(b.pi_a <= 0.0);
            prop_assert!(b.pi_a.abs() <= b.pi_u.abs() + 1e-15);
            prop_assert!(b.pi_g >= 0.0 && b.pi_b >= 0.0 && b.pi_u >= 0.0 && b.pi_q >= 0.0);
        }

        #[test]
        fn good_users_never_outconsume_the_mean(params in arbitrary_params(), t in 0.0f64..100.0) {
            prop_assume!(params.rate_bad >= params.rate_good);
            let b = breakdown(t, &params).unwrap();
            // Slack covers the rounding of (n_g r_g + n_b r_b) / n when the
            // mean collapses to r_g itself.
            prop_assert!(b.pi_u >= b.pi_g - 1e-12 * b.pi_g.max(1.0));
        }
    }
}
