//! Throughput of the scenario sweep: sequential vs rayon evaluator.
//!
//! Run with `cargo bench -p idealstate`. Both evaluators produce identical
//! rows in identical order; only wall time should differ.

use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use idealstate::payoff::ScenarioParams;
use idealstate::scenario::{evaluate_grid, evaluate_grid_parallel, TimeGrid};

fn sweep_params() -> ScenarioParams {
    ScenarioParams {
        n_good: 99,
        n_bad: 1,
        rate_good: 0.01,
        rate_bad: 0.99,
        rate_auto: 0.1,
        user_period_hours: 24.0,
        auto_period_hours: 24.0,
        threshold_hours: 12.0,
        clamp_auto: true,
    }
}

fn bench_grid(c: &mut Criterion) {
    let params = sweep_params();
    for (label, t_max, dt) in [("day-fine", 24.0, 0.002), ("month-coarse", 720.0, 0.05)] {
        let grid = TimeGrid::new(t_max, dt).unwrap();
        c.bench_function(&format!("grid/{label}/sequential"), |b| {
            b.iter(|| evaluate_grid(black_box(&params), black_box(&grid)).unwrap())
        });
        c.bench_function(&format!("grid/{label}/parallel"), |b| {
            b.iter(|| evaluate_grid_parallel(black_box(&params), black_box(&grid)).unwrap())
        });
    }
}

criterion_group!(benches, bench_grid);
criterion_main!(benches);
