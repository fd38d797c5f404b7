//! Deviations from the ideal state on a nonnegative integer lattice.
//!
//! A system that has drifted from its ideal configuration sits at a point
//! `d = (d_1, .., d_n)` of an n-dimensional lattice, one axis per tracked
//! variable, with the ideal state at the origin. The number of distinct
//! monotone paths from the origin to `d` (each step incrementing one axis)
//! is the multinomial
//!
//! ```text
//! H(d) = (d_1 + .. + d_n)! / (d_1! * .. * d_n!)
//! ```
//!
//! Repairs retrace such paths in reverse, so `H` measures how many equivalent
//! ways the accumulated drift can be undone, a path-count entropy that grows
//! rapidly with distance. `H` is computed exactly in arbitrary precision;
//! [`DeviationVector::log_path_count`] is the overflow-safe companion.
//!
//! Drift itself is modeled as a seeded random walk on the same lattice; see
//! [`random_walk`].

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};
use thiserror::Error;

use crate::rng::SplitMix64;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LatticeError {
    #[error("deviation vector must have at least one component")]
    Empty,
    #[error("axis {axis} out of range for dimension {dims}")]
    AxisOutOfRange { axis: usize, dims: usize },
}

/// Per-axis counts of accumulated drift from the ideal state.
///
/// Components are nonnegative by construction and the dimension is at
/// least 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DeviationVector {
    components: Vec<u64>,
}

impl DeviationVector {
    pub fn new(components: Vec<u64>) -> Result<Self, LatticeError> {
        if components.is_empty() {
            return Err(LatticeError::Empty);
        }
        Ok(Self { components })
    }

    /// The ideal state: all components zero.
    pub fn origin(dims: usize) -> Result<Self, LatticeError> {
        Self::new(vec![0; dims])
    }

    pub fn components(&self) -> &[u64] {
        &self.components
    }

    pub fn dims(&self) -> usize {
        self.components.len()
    }

    /// Sum of all components (the monotone path length back to the origin).
    pub fn total(&self) -> u64 {
        self.components.iter().sum()
    }

    /// The vector with component `axis` incremented by one.
    pub fn bumped(&self, axis: usize) -> Result<Self, LatticeError> {
        self.check_axis(axis)?;
        let mut components = self.components.clone();
        components[axis] += 1;
        Ok(Self { components })
    }

    /// Number of distinct monotone lattice paths from the origin to this
    /// point, exactly: `(sum d_j)! / prod(d_k!)`.
    ///
    /// Evaluated as a product of binomials over prefix sums, which keeps the
    /// intermediate values no larger than the result.
    pub fn path_count(&self) -> BigUint {
        let mut result = BigUint::one();
        let mut prefix: u64 = 0;
        for &d in &self.components {
            prefix += d;
            result *= num_integer::binomial(BigUint::from(prefix), BigUint::from(d));
        }
        result
    }

    /// Natural log of the path count, via log-gamma.
    ///
    /// Relative error is at the level of f64 log-gamma (well under 1e-9 for
    /// any vector with component sums that fit exact evaluation).
    pub fn log_path_count(&self) -> f64 {
        let total = self.total() as f64;
        let mut acc = libm::lgamma(total + 1.0);
        for &d in &self.components {
            acc -= libm::lgamma(d as f64 + 1.0);
        }
        // lgamma noise can leave a tiny negative residue for H = 1.
        acc.max(0.0)
    }

    /// Relative discrete gradient of the path count along `axis`:
    /// `(H(d + e_axis) - H(d)) / H(d)`, exactly, via the closed form
    /// `(sum of the other components) / (d_axis + 1)`.
    pub fn relative_gradient(&self, axis: usize) -> Result<BigRational, LatticeError> {
        self.check_axis(axis)?;
        let others = self.total() - self.components[axis];
        Ok(BigRational::new(
            BigInt::from(others),
            BigInt::from(self.components[axis] + 1),
        ))
    }

    /// [`Self::relative_gradient`] as f64, for display and plotting.
    pub fn relative_gradient_f64(&self, axis: usize) -> Result<f64, LatticeError> {
        self.check_axis(axis)?;
        let others = (self.total() - self.components[axis]) as f64;
        Ok(others / (self.components[axis] + 1) as f64)
    }

    /// Euclidean distance from the ideal state.
    pub fn euclidean_norm(&self) -> f64 {
        self.components
            .iter()
            .map(|&d| {
                let x = d as f64;
                x * x
            })
            .sum::<f64>()
            .sqrt()
    }

    fn check_axis(&self, axis: usize) -> Result<(), LatticeError> {
        if axis >= self.dims() {
            return Err(LatticeError::AxisOutOfRange {
                axis,
                dims: self.dims(),
            });
        }
        Ok(())
    }
}

/// A seeded random walk over the deviation lattice, starting at the origin.
///
/// Consecutive states differ in exactly one component by +1 or -1, except
/// that a decrement drawn at a zero component is recorded as an unchanged
/// state (the walk cannot leave the nonnegative orthant, and re-rolling
/// would bias the step statistics).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WalkTrajectory {
    pub states: Vec<DeviationVector>,
    pub seed: u64,
    pub step_count: usize,
}

impl WalkTrajectory {
    pub fn final_state(&self) -> &DeviationVector {
        self.states
            .last()
            .expect("trajectory has at least the origin")
    }
}

/// Walk `steps` steps on a `dims`-dimensional lattice.
///
/// Each step draws one axis uniformly, then moves +1 with probability
/// `drift_up_prob` and -1 otherwise. Draw order is fixed (axis, then
/// direction) and the generator is [`SplitMix64`], so a `(dims, steps,
/// drift_up_prob, seed)` tuple always reproduces the same trajectory.
pub fn random_walk(
    dims: usize,
    steps: usize,
    drift_up_prob: f64,
    seed: u64,
) -> Result<WalkTrajectory, LatticeError> {
    let mut current = DeviationVector::origin(dims)?;
    let mut rng = SplitMix64::new(seed);
    let mut states = Vec::with_capacity(steps + 1);
    states.push(current.clone());
    for _ in 0..steps {
        let axis = rng.next_below(dims as u64) as usize;
        let up = rng.next_f64() < drift_up_prob;
        if up {
            current.components[axis] += 1;
        } else if current.components[axis] > 0 {
            current.components[axis] -= 1;
        }
        // Blocked decrements fall through and re-record the same state.
        states.push(current.clone());
    }
    Ok(WalkTrajectory {
        states,
        seed,
        step_count: steps,
    })
}

/// Convert an exact path count to f64 (for tests and display; saturates to
/// infinity above f64 range).
pub fn path_count_to_f64(count: &BigUint) -> f64 {
    count.to_f64().unwrap_or(f64::INFINITY)
}
