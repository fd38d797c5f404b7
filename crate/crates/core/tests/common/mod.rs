//! Shared oracles for the integration suites. Everything here is an
//! independent route to the quantities under test: path counting by literal
//! enumeration, integrals by adaptive quadrature.

// Each tests/*.rs target compiles its own copy; not every target uses every
// oracle.
#![allow(dead_code)]

use idealstate::payoff::ScenarioParams;

/// Count monotone lattice paths from the origin to `target` by walking
/// every one of them.
pub fn enumerate_monotone_paths(target: &[u64]) -> u128 {
    fn recurse(remaining: &mut Vec<u64>) -> u128 {
        if remaining.iter().all(|&c| c == 0) {
            return 1;
        }
        let mut total = 0u128;
        for i in 0..remaining.len() {
            if remaining[i] > 0 {
                remaining[i] -= 1;
                total += recurse(remaining);
                remaining[i] += 1;
            }
        }
        total
    }
    recurse(&mut target.to_vec())
}

/// Adaptive Simpson quadrature with Richardson correction.
pub fn adaptive_simpson(f: &dyn Fn(f64) -> f64, a: f64, b: f64, tol: f64) -> f64 {
    fn simpson(f: &dyn Fn(f64) -> f64, a: f64, fa: f64, b: f64, fb: f64) -> (f64, f64, f64) {
        let m = 0.5 * (a + b);
        let fm = f(m);
        ((b - a) / 6.0 * (fa + 4.0 * fm + fb), m, fm)
    }
    #[allow(clippy::too_many_arguments)]
    fn recurse(
        f: &dyn Fn(f64) -> f64,
        a: f64,
        fa: f64,
        b: f64,
        fb: f64,
        whole: f64,
        m: f64,
        fm: f64,
        tol: f64,
        depth: u32,
    ) -> f64 {
        let (left, lm, flm) = simpson(f, a, fa, m, fm);
        let (right, rm, frm) = simpson(f, m, fm, b, fb);
        let delta = left + right - whole;
        if depth == 0 || delta.abs() <= 15.0 * tol {
            return left + right + delta / 15.0;
        }
        recurse(f, a, fa, m, fm, left, lm, flm, 0.5 * tol, depth - 1)
            + recurse(f, m, fm, b, fb, right, rm, frm, 0.5 * tol, depth - 1)
    }
    if a == b {
        return 0.0;
    }
    let fa = f(a);
    let fb = f(b);
    let (whole, m, fm) = simpson(f, a, fa, b, fb);
    recurse(f, a, fa, b, fb, whole, m, fm, tol, 48)
}

/// The worked garbage-collection scenario: one percent of users
/// mischievous, fill rates in the same ratio, daily tidying, clamp on.
pub fn example_params() -> ScenarioParams {
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
