//! Quantitative models of system maintenance as a contest between users and
//! an administrator.
//!
//! The library covers five areas:
//!
//! - [`lattice`]: deviations from an ideal configuration as points on a
//!   nonnegative integer lattice, with exact path-count entropy, its discrete
//!   gradient and random-walk trajectories.
//! - [`timescales`]: response-time envelopes of automatic and human
//!   maintenance agents and the timing duel between them.
//! - [`payoff`]: time-dependent payoff contributions for the
//!   garbage-collection game and assembly of its 4x4 characteristic matrix.
//! - [`game`]: a general two-person zero-sum solver with maximin/minimax,
//!   saddle points, dominance, and optimal mixed strategies.
//! - [`metrics`]: maintenance-quality measures (accuracy, efficiency), the
//!   Planck+Gaussian fluctuation density with a sampler, moving averages and
//!   the periodic-polynomial work model.
//!
//! [`scenario`] ties the payoff and game modules together into a time-grid
//! sweep producing plot-ready series; the companion CLI crate exposes it as
//! the `scenario` subcommand.
//!
//! All computations are pure functions on immutable values and deterministic
//! for a given seed; see [`rng::SplitMix64`] for the generator contract.

pub mod game;
pub mod lattice;
pub mod metrics;
pub mod payoff;
pub mod rng;
pub mod scenario;
pub mod timescales;
