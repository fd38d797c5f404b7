//! Measurement formulas for maintenance quality and system fluctuations.
//!
//! Accuracy is the fraction of an agent's actions that were sanctioned by
//! policy; efficiency discounts it by the resources the policy work itself
//! consumed. Fluctuations of periodically driven metrics follow a Planck
//! spectrum with an optional Gaussian noise component, exposed here as an
//! unnormalized density with a seeded sampler.

use std::f64::consts::{PI, TAU};
use thiserror::Error;

use crate::rng::SplitMix64;

#[derive(Debug, Error, PartialEq)]
pub enum MetricsError {
    #[error("total_actions must be at least 1")]
    NoActions,
    #[error("policy_actions ({policy}) exceeds total_actions ({total})")]
    PolicyActionsExceedTotal { policy: u64, total: u64 },
    #[error("resources must be finite, nonnegative, with policy <= total and total > 0")]
    BadResources,
    #[error("gauss_sigma and planck_temp must be positive and finite")]
    BadDistributionParams,
    #[error("at least one of gauss_amp, planck_amp must be positive")]
    ZeroDistribution,
    #[error("sampling envelope construction failed: component masses were not finite")]
    EnvelopeConstruction,
    #[error("window must be between 1 and the series length ({len}), got {window}")]
    BadWindow { window: usize, len: usize },
}

/// Tally of an agent's actions and the resources they consumed.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ActionLog {
    policy_actions: u64,
    total_actions: u64,
    policy_resources: f64,
    total_resources: f64,
}

impl ActionLog {
    pub fn new(
        policy_actions: u64,
        total_actions: u64,
        policy_resources: f64,
        total_resources: f64,
    ) -> Result<Self, MetricsError> {
        if total_actions == 0 {
            return Err(MetricsError::NoActions);
        }
        if policy_actions > total_actions {
            return Err(MetricsError::PolicyActionsExceedTotal {
                policy: policy_actions,
                total: total_actions,
            });
        }
        if !policy_resources.is_finite()
            || !total_resources.is_finite()
            || policy_resources < 0.0
            || total_resources <= 0.0
            || policy_resources > total_resources
        {
            return Err(MetricsError::BadResources);
        }
        Ok(Self {
            policy_actions,
            total_actions,
            policy_resources,
            total_resources,
        })
    }

    /// Fraction of actions within prescribed guidelines: `N_p / N`.
    pub fn accuracy(&self) -> f64 {
        self.policy_actions as f64 / self.total_actions as f64
    }

    /// Accuracy discounted by the resource share the policy work consumed:
    /// `accuracy * (1 - policy_resources / total_resources)`.
    pub fn efficiency(&self) -> f64 {
        self.accuracy() * (1.0 - self.policy_resources / self.total_resources)
    }
}

/// The ten primitive action types every maintenance operation decomposes
/// into; used as strategy and action labels.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PrimitiveAction {
    CreateFile,
    DeleteFile,
    RenameFile,
    EditFile,
    AccessControl,
    RequestResource,
    CopyFile,
    ProcessControl,
    ProcessPriority,
    ConfigureDevice,
}

impl PrimitiveAction {
    pub const ALL: [PrimitiveAction; 10] = [
        PrimitiveAction::CreateFile,
        PrimitiveAction::DeleteFile,
        PrimitiveAction::RenameFile,
        PrimitiveAction::EditFile,
        PrimitiveAction::AccessControl,
        PrimitiveAction::RequestResource,
        PrimitiveAction::CopyFile,
        PrimitiveAction::ProcessControl,
        PrimitiveAction::ProcessPriority,
        PrimitiveAction::ConfigureDevice,
    ];

    pub fn label(&self) -> &'static str {
        match self {
            PrimitiveAction::CreateFile => "create-file",
            PrimitiveAction::DeleteFile => "delete-file",
            PrimitiveAction::RenameFile => "rename-file",
            PrimitiveAction::EditFile => "edit-file",
            PrimitiveAction::AccessControl => "access-control",
            PrimitiveAction::RequestResource => "request-resource",
            PrimitiveAction::CopyFile => "copy-file",
            PrimitiveAction::ProcessControl => "process-control",
            PrimitiveAction::ProcessPriority => "process-priority",
            PrimitiveAction::ConfigureDevice => "configure-device",
        }
    }
}

/// Parameters of the Planck+Gaussian fluctuation density
///
/// ```text
/// D(x) = A exp(-(x - mean)^2 / 2 sigma^2)
///      + B / ((x - origin)^3 (exp(1 / ((x - origin) T)) - 1))
/// ```
///
/// The Planck term is defined as 0 for `x <= origin` (hard lower cutoff).
/// The density is an unnormalized shape: only changes relative to a local
/// norm carry meaning, so no normalization constant is imposed.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DistributionParams {
    pub gauss_amp: f64,
    pub gauss_mean: f64,
    pub gauss_sigma: f64,
    pub planck_amp: f64,
    pub planck_origin: f64,
    pub planck_temp: f64,
}

impl DistributionParams {
    pub fn validate(&self) -> Result<(), MetricsError> {
        let all_finite = [
            self.gauss_amp,
            self.gauss_mean,
            self.gauss_sigma,
            self.planck_amp,
            self.planck_origin,
            self.planck_temp,
        ]
        .iter()
        .all(|v| v.is_finite());
        if !all_finite
            || self.gauss_sigma <= 0.0
            || self.planck_temp <= 0.0
            || self.gauss_amp < 0.0
            || self.planck_amp < 0.0
        {
            return Err(MetricsError::BadDistributionParams);
        }
        if self.gauss_amp == 0.0 && self.planck_amp == 0.0 {
            return Err(MetricsError::ZeroDistribution);
        }
        Ok(())
    }
}

/// Evaluate the Planck+Gaussian density at `x`.
pub fn planck_gaussian_density(x: f64, params: &DistributionParams) -> f64 {
    let dm = x - params.gauss_mean;
    let gauss =
        params.gauss_amp * (-dm * dm / (2.0 * params.gauss_sigma * params.gauss_sigma)).exp();

    let s = x - params.planck_origin;
    let planck = if s <= 0.0 {
        0.0
    } else {
        let exponent = 1.0 / (s * params.planck_temp);
        if exponent > 700.0 {
            // exp would overflow; the term has already vanished.
            0.0
        } else {
            params.planck_amp / (s * s * s * (exponent.exp() - 1.0))
        }
    };
    gauss + planck
}

/// Draw `count` samples of the normalized density, deterministically for a
/// given seed.
///
/// The two components are sampled in proportion to their total masses
/// (`A sigma sqrt(2 pi)` and `B T^2 pi^2/6`). The Gaussian uses Box-Muller.
/// The Planck term is drawn by rejection in the substituted coordinate
/// `u = 1/((x - origin) T)`, where the target `u/(e^u - 1)` sits under the
/// envelope `e^{-u/2}` with acceptance ratio `u / (2 sinh(u/2))`; accepted
/// draws map back through `x = origin + 1/(u T)`.
pub fn sample_distribution(
    params: &DistributionParams,
    count: usize,
    seed: u64,
) -> Result<Vec<f64>, MetricsError> {
    params.validate()?;
    let gauss_mass = params.gauss_amp * params.gauss_sigma * TAU.sqrt();
    let planck_mass = params.planck_amp * params.planck_temp * params.planck_temp * PI * PI / 6.0;
    let total = gauss_mass + planck_mass;
    if !(total.is_finite() && total > 0.0) {
        return Err(MetricsError::EnvelopeConstruction);
    }
    let gauss_share = gauss_mass / total;

    let mut rng = SplitMix64::new(seed);
    let mut samples = Vec::with_capacity(count);
    for _ in 0..count {
        if rng.next_f64() < gauss_share {
            // Box-Muller; 1 - u keeps the log argument in (0, 1].
            let u1 = 1.0 - rng.next_f64();
            let u2 = rng.next_f64();
            let z = (-2.0 * u1.ln()).sqrt() * (TAU * u2).cos();
            samples.push(params.gauss_mean + params.gauss_sigma * z);
        } else {
            let u = loop {
                let draw = -2.0 * (1.0 - rng.next_f64()).ln();
                if draw == 0.0 {
                    continue;
                }
                let accept = draw / (2.0 * (draw / 2.0).sinh());
                if rng.next_f64() < accept {
                    break draw;
                }
            };
            samples.push(params.planck_origin + 1.0 / (u * params.planck_temp));
        }
    }
    Ok(samples)
}

/// Trailing moving average over `window` points.
///
/// Splits each series value into a slow component (this average) and the
/// fast residual around it. Output timestamps are the window end times;
/// output length is `len - window + 1`.
pub fn moving_average(
    series: &[(f64, f64)],
    window: usize,
) -> Result<Vec<(f64, f64)>, MetricsError> {
    if window == 0 || window > series.len() {
        return Err(MetricsError::BadWindow {
            window,
            len: series.len(),
        });
    }
    let inv = 1.0 / window as f64;
    Ok(series
        .windows(window)
        .map(|w| {
            let mean = w.iter().map(|&(_, v)| v).sum::<f64>() * inv;
            (w[w.len() - 1].0, mean)
        })
        .collect())
}

/// Periodic-polynomial resource consumption: `sin(omega t) * sum c_n t^n`,
/// with the polynomial evaluated by Horner's scheme.
pub fn work_consumption(t: f64, omega: f64, coeffs: &[f64]) -> f64 {
    let poly = coeffs.iter().rev().fold(0.0, |acc, &c| acc * t + c);
    (omega * t).sin() * poly
}
