//! Deterministic pseudo-random generation.
//!
//! Every randomized routine in this crate draws from [`SplitMix64`] so that
//! trajectories and samples are reproducible from a single 64-bit seed, on
//! any platform, across releases. The algorithm is fixed as part of the
//! crate's contract: changing it would silently change every seeded output.

/// SplitMix64 generator (Steele, Lea & Flood's `splitmix64` finalizer).
///
/// State advances by the golden-gamma constant `0x9E3779B97F4A7C15`; output
/// is the two-round mix with multipliers `0xBF58476D1CE4E5B9` and
/// `0x94D049BB133111EB`. Period 2^64, one u64 of state, splittable: a child
/// generator seeded from `next_u64` is statistically independent of the
/// parent stream.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform f64 in `[0, 1)`, using the top 53 bits.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform integer in `[0, n)` without modulo bias (rejection on the
    /// short final interval). `n` must be nonzero.
    pub fn next_below(&mut self, n: u64) -> u64 {
        assert!(n > 0, "next_below requires n > 0");
        let threshold = n.wrapping_neg() % n;
        loop {
            let x = self.next_u64();
            if x >= threshold {
                return x % n;
            }
        }
    }

    /// Child generator with an independent stream.
    pub fn split(&mut self) -> SplitMix64 {
        SplitMix64::new(self.next_u64())
    }
}
