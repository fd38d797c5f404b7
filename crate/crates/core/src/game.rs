//! Two-person zero-sum games: pure security levels, saddle points,
//! dominance, and optimal mixed strategies.
//!
//! Rows belong to the maximizer (users), columns to the minimizer (the
//! system). [`solve_mixed`] resolves a game by the cheapest sufficient
//! means: a pure saddle point when one exists, otherwise exact support
//! enumeration for small matrices, otherwise fictitious play. Every
//! returned solution carries a duality gap certificate: the spread between
//! the column player's exposure and the row player's guarantee, which
//! bounds how far the reported value can sit from the true game value.

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest min(rows, cols) handled by exact support enumeration before
/// [`solve_mixed`] falls back to fictitious play.
pub const SUPPORT_ENUMERATION_MAX_DIM: usize = 6;

/// Iteration cap for fictitious play.
pub const FICTITIOUS_PLAY_CAP: usize = 1_000_000;

#[derive(Debug, Error)]
pub enum GameError {
    #[error("payoff matrix must have at least one row and one column")]
    EmptyMatrix,
    #[error("payoff matrix rows must all have the same length")]
    RaggedMatrix,
    #[error("payoff matrix entries must be finite")]
    NonFiniteEntry,
    #[error("expected {expected} labels, got {got}")]
    LabelCountMismatch { expected: usize, got: usize },
    #[error("column {col} out of range for {cols} columns")]
    ColumnOutOfRange { col: usize, cols: usize },
    #[error("cannot drop the only column")]
    WouldBeEmpty,
    #[error("solver tolerance must be positive, got {0}")]
    BadTolerance(f64),
    #[error("mixture weights must be nonnegative and sum to 1 within 1e-12")]
    BadMixture,
    #[error(
        "no convergence after {iterations} iterations (duality gap {gap:.3e}); best iterate attached"
    )]
    NonConvergence {
        iterations: usize,
        gap: f64,
        best: Box<GameSolution>,
    },
}

/// Dense payoff matrix; rows are maximizer strategies, columns minimizer
/// strategies.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PayoffMatrix {
    entries: Vec<f64>,
    rows: usize,
    cols: usize,
    row_labels: Vec<String>,
    col_labels: Vec<String>,
}

impl PayoffMatrix {
    pub fn new(rows_data: Vec<Vec<f64>>) -> Result<Self, GameError> {
        let rows = rows_data.len();
        let cols = rows_data.first().map_or(0, Vec::len);
        let row_labels = (1..=rows).map(|i| format!("r{i}")).collect();
        let col_labels = (1..=cols).map(|j| format!("c{j}")).collect();
        Self::with_labels(rows_data, row_labels, col_labels)
    }

    pub fn with_labels(
        rows_data: Vec<Vec<f64>>,
        row_labels: Vec<String>,
        col_labels: Vec<String>,
    ) -> Result<Self, GameError> {
        let rows = rows_data.len();
        let cols = rows_data.first().map_or(0, Vec::len);
        if rows == 0 || cols == 0 {
            return Err(GameError::EmptyMatrix);
        }
        if rows_data.iter().any(|r| r.len() != cols) {
            return Err(GameError::RaggedMatrix);
        }
        if row_labels.len() != rows {
            return Err(GameError::LabelCountMismatch {
                expected: rows,
                got: row_labels.len(),
            });
        }
        if col_labels.len() != cols {
            return Err(GameError::LabelCountMismatch {
                expected: cols,
                got: col_labels.len(),
            });
        }
        let entries: Vec<f64> = rows_data.into_iter().flatten().collect();
        if entries.iter().any(|x| !x.is_finite()) {
            return Err(GameError::NonFiniteEntry);
        }
        Ok(Self {
            entries,
            rows,
            cols,
            row_labels,
            col_labels,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, row: usize, col: usize) -> f64 {
        self.entries[row * self.cols + col]
    }

    pub fn row_labels(&self) -> &[String] {
        &self.row_labels
    }

    pub fn col_labels(&self) -> &[String] {
        &self.col_labels
    }

    fn row(&self, r: usize) -> &[f64] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    /// The same game with one column removed (e.g. withdrawing a system
    /// strategy from play).
    pub fn dropping_col(&self, col: usize) -> Result<Self, GameError> {
        if col >= self.cols {
            return Err(GameError::ColumnOutOfRange {
                col,
                cols: self.cols,
            });
        }
        if self.cols == 1 {
            return Err(GameError::WouldBeEmpty);
        }
        let rows_data = (0..self.rows)
            .map(|r| {
                (0..self.cols)
                    .filter(|&c| c != col)
                    .map(|c| self.at(r, c))
                    .collect()
            })
            .collect();
        let col_labels = (0..self.cols)
            .filter(|&c| c != col)
            .map(|c| self.col_labels[c].clone())
            .collect();
        Self::with_labels(rows_data, self.row_labels.clone(), col_labels)
    }

    /// Security levels of both players, with every tying pure strategy.
    ///
    /// `maximin` is the largest row minimum (the least the maximizer can
    /// guarantee); `minimax` the smallest column maximum. `maximin <=
    /// minimax` always; equality signals a pure saddle point.
    pub fn maximin_minimax(&self) -> MaximinReport {
        let row_mins: Vec<f64> = (0..self.rows)
            .map(|r| self.row(r).iter().copied().fold(f64::INFINITY, f64::min))
            .collect();
        let col_maxs: Vec<f64> = (0..self.cols)
            .map(|c| {
                (0..self.rows)
                    .map(|r| self.at(r, c))
                    .fold(f64::NEG_INFINITY, f64::max)
            })
            .collect();
        let maximin = row_mins.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        let minimax = col_maxs.iter().copied().fold(f64::INFINITY, f64::min);
        MaximinReport {
            maximin,
            maximin_rows: indices_equal(&row_mins, maximin),
            minimax,
            minimax_cols: indices_equal(&col_maxs, minimax),
        }
    }

    /// Cells that are simultaneously a row minimum and a column maximum.
    /// Nonempty exactly when maximin equals minimax.
    pub fn saddle_points(&self) -> Vec<(usize, usize)> {
        let row_mins: Vec<f64> = (0..self.rows)
            .map(|r| self.row(r).iter().copied().fold(f64::INFINITY, f64::min))
            .collect();
        let col_maxs: Vec<f64> = (0..self.cols)
            .map(|c| {
                (0..self.rows)
                    .map(|r| self.at(r, c))
                    .fold(f64::NEG_INFINITY, f64::max)
            })
            .collect();
        let mut points = Vec::new();
        for r in 0..self.rows {
            for c in 0..self.cols {
                let v = self.at(r, c);
                if v == row_mins[r] && v == col_maxs[c] {
                    points.push((r, c));
                }
            }
        }
        points
    }

    /// Strict and weak dominance among one side's pure strategies.
    pub fn dominance(&self, side: Side) -> DominanceReport {
        let count = match side {
            Side::Row => self.rows,
            Side::Col => self.cols,
        };
        // "i beats j at k": for rows, a larger payoff; for columns (the
        // minimizer), a smaller one.
        let beats = |i: usize, j: usize| -> (bool, bool, bool) {
            // (all_geq, any_strict, all_strict) of i over j
            let mut all_geq = true;
            let mut any_strict = false;
            let mut all_strict = true;
            let opposite = match side {
                Side::Row => self.cols,
                Side::Col => self.rows,
            };
            for k in 0..opposite {
                let (a, b) = match side {
                    Side::Row => (self.at(i, k), self.at(j, k)),
                    Side::Col => (self.at(k, j), self.at(k, i)),
                };
                if a < b {
                    all_geq = false;
                }
                if a > b {
                    any_strict = true;
                } else {
                    all_strict = false;
                }
            }
            (all_geq, any_strict, all_strict)
        };
        let mut weak_pairs = Vec::new();
        let mut strict = None;
        for i in 0..count {
            let mut strict_over_all = true;
            for j in 0..count {
                if i == j {
                    continue;
                }
                let (all_geq, any_strict, all_strict) = beats(i, j);
                if all_geq && any_strict {
                    weak_pairs.push((i, j));
                }
                if !all_strict {
                    strict_over_all = false;
                }
            }
            if strict_over_all && strict.is_none() {
                strict = Some(i);
            }
        }
        DominanceReport { strict, weak_pairs }
    }

    /// Payoff of every pure row against a column mixture.
    pub fn row_payoffs_against(&self, col_mix: &StrategyMixture) -> Vec<f64> {
        assert_eq!(col_mix.len(), self.cols, "column mixture length mismatch");
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(col_mix.weights())
                    .map(|(a, w)| a * w)
                    .sum()
            })
            .collect()
    }

    /// Payoff of a row mixture against every pure column.
    pub fn col_payoffs_against(&self, row_mix: &StrategyMixture) -> Vec<f64> {
        assert_eq!(row_mix.len(), self.rows, "row mixture length mismatch");
        (0..self.cols)
            .map(|c| {
                (0..self.rows)
                    .map(|r| self.at(r, c) * row_mix.weights()[r])
                    .sum()
            })
            .collect()
    }

    /// Expected payoff when both sides play the given mixtures.
    pub fn mixed_value(&self, row_mix: &StrategyMixture, col_mix: &StrategyMixture) -> f64 {
        self.col_payoffs_against(row_mix)
            .iter()
            .zip(col_mix.weights())
            .map(|(v, w)| v * w)
            .sum()
    }

    fn scale(&self) -> f64 {
        1.0 + self
            .entries
            .iter()
            .copied()
            .fold(0.0f64, |acc, x| acc.max(x.abs()))
    }
}

fn indices_equal(values: &[f64], target: f64) -> Vec<usize> {
    values
        .iter()
        .enumerate()
        .filter(|(_, &v)| v == target)
        .map(|(i, _)| i)
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Row,
    Col,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MaximinReport {
    pub maximin: f64,
    pub maximin_rows: Vec<usize>,
    pub minimax: f64,
    pub minimax_cols: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct DominanceReport {
    /// A strategy strictly better than every alternative against every
    /// counter-strategy, if one exists.
    pub strict: Option<usize>,
    /// `(dominator, dominated)` pairs under weak dominance: at least as
    /// good everywhere and strictly better somewhere.
    pub weak_pairs: Vec<(usize, usize)>,
}

/// Probability weights over one side's pure strategies.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(transparent)]
pub struct StrategyMixture {
    weights: Vec<f64>,
}

impl StrategyMixture {
    pub fn new(weights: Vec<f64>) -> Result<Self, GameError> {
        if weights.is_empty() {
            return Err(GameError::BadMixture);
        }
        let sum: f64 = weights.iter().sum();
        if weights
            .iter()
            .any(|&w| !w.is_finite() || w < -1e-12 || w > 1.0 + 1e-12)
            || (sum - 1.0).abs() > 1e-12
        {
            return Err(GameError::BadMixture);
        }
        let weights = weights.into_iter().map(|w| w.clamp(0.0, 1.0)).collect();
        Ok(Self { weights })
    }

    /// Point mass on a single strategy.
    pub fn pure(index: usize, len: usize) -> Self {
        let mut weights = vec![0.0; len];
        weights[index] = 1.0;
        Self { weights }
    }

    /// Normalize raw nonnegative weights (tiny negative roundoff is
    /// clamped to zero first).
    fn from_raw(raw: Vec<f64>) -> Result<Self, GameError> {
        let cleaned: Vec<f64> = raw.into_iter().map(|w| w.max(0.0)).collect();
        let sum: f64 = cleaned.iter().sum();
        if !(sum.is_finite() && sum > 0.0) {
            return Err(GameError::BadMixture);
        }
        Self::new(cleaned.into_iter().map(|w| w / sum).collect())
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    /// Indices with non-negligible probability.
    pub fn support(&self) -> Vec<usize> {
        self.weights
            .iter()
            .enumerate()
            .filter(|(_, &w)| w > 1e-9)
            .map(|(i, _)| i)
            .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SolveMethod {
    PureSaddle,
    SupportEnumeration,
    FictitiousPlay,
}

/// A solved game: optimal (or tolerance-optimal) mixtures for both sides.
#[derive(Debug, Clone, Serialize)]
pub struct GameSolution {
    pub row_mix: StrategyMixture,
    pub col_mix: StrategyMixture,
    pub value: f64,
    pub method: SolveMethod,
    /// Exposure minus guarantee of the returned mixtures; bounds the error
    /// of `value` against the true game value.
    pub duality_gap: f64,
}

/// Solve a zero-sum game to within `tol` on the duality gap.
///
/// Dispatch: a pure saddle point gives the degenerate pure solution; games
/// with `min(rows, cols) <= SUPPORT_ENUMERATION_MAX_DIM` are solved exactly
/// by support enumeration; larger games run fictitious play up to
/// [`FICTITIOUS_PLAY_CAP`] iterations, returning a
/// [`GameError::NonConvergence`] carrying the best iterate if the gap never
/// reaches `tol`.
pub fn solve_mixed(matrix: &PayoffMatrix, tol: f64) -> Result<GameSolution, GameError> {
    if !(tol.is_finite() && tol > 0.0) {
        return Err(GameError::BadTolerance(tol));
    }
    let saddles = matrix.saddle_points();
    if let Some(&(r, c)) = saddles.first() {
        return Ok(GameSolution {
            row_mix: StrategyMixture::pure(r, matrix.rows()),
            col_mix: StrategyMixture::pure(c, matrix.cols()),
            value: matrix.at(r, c),
            method: SolveMethod::PureSaddle,
            duality_gap: 0.0,
        });
    }
    if matrix.rows().min(matrix.cols()) <= SUPPORT_ENUMERATION_MAX_DIM {
        if let Some(solution) = enumerate_supports(matrix, tol) {
            return Ok(solution);
        }
        // Enumeration only fails on numerically degenerate inputs; let
        // fictitious play have a go before giving up.
    }
    solve_fictitious_play(matrix, tol, FICTITIOUS_PLAY_CAP)
}

/// Exact solve by support enumeration, without the saddle shortcut.
pub fn solve_support_enumeration(
    matrix: &PayoffMatrix,
    tol: f64,
) -> Result<GameSolution, GameError> {
    if !(tol.is_finite() && tol > 0.0) {
        return Err(GameError::BadTolerance(tol));
    }
    enumerate_supports(matrix, tol).ok_or_else(|| {
        // Surface the best pure-strategy fallback rather than nothing.
        let report = matrix.maximin_minimax();
        let r = report.maximin_rows[0];
        let c = report.minimax_cols[0];
        let best = build_solution(
            matrix,
            StrategyMixture::pure(r, matrix.rows()),
            StrategyMixture::pure(c, matrix.cols()),
            SolveMethod::SupportEnumeration,
        );
        let gap = best.duality_gap;
        GameError::NonConvergence {
            iterations: 0,
            gap,
            best: Box::new(best),
        }
    })
}

/// Iterative best-response dynamics; the time-averaged strategies converge
/// to optimal mixtures in zero-sum games.
///
/// Play alternates: the row player responds to the columns seen so far, the
/// column player responds with the row's newest play already on the board.
/// Because the averaged mixtures oscillate around the optimum, the solver
/// keeps the best row mixture (highest guarantee) and best column mixture
/// (lowest exposure) seen so far and stops once that pair's duality gap
/// reaches `tol`, which takes orders of magnitude fewer iterations than
/// waiting for the current averages to settle.
pub fn solve_fictitious_play(
    matrix: &PayoffMatrix,
    tol: f64,
    max_iterations: usize,
) -> Result<GameSolution, GameError> {
    if !(tol.is_finite() && tol > 0.0) {
        return Err(GameError::BadTolerance(tol));
    }
    let rows = matrix.rows();
    let cols = matrix.cols();
    let mut row_counts = vec![0u64; rows];
    let mut col_counts = vec![0u64; cols];
    // row_scores[r] = sum of A[r][c_t] over column plays so far;
    // col_scores[c] = sum of A[r_t][c] over row plays so far.
    let mut row_scores = vec![0.0f64; rows];
    let mut col_scores = vec![0.0f64; cols];

    let mut best_exposure = f64::INFINITY;
    let mut best_guarantee = f64::NEG_INFINITY;
    let mut best_col_counts = col_counts.clone();
    let mut best_row_counts = row_counts.clone();

    let finish = |iterations: usize,
                  best_row_counts: &[u64],
                  best_col_counts: &[u64],
                  best_guarantee: f64,
                  best_exposure: f64|
     -> Result<GameSolution, GameError> {
        let row_mix =
            StrategyMixture::from_raw(best_row_counts.iter().map(|&c| c as f64).collect())?;
        let col_mix =
            StrategyMixture::from_raw(best_col_counts.iter().map(|&c| c as f64).collect())?;
        let report = matrix.maximin_minimax();
        let gap = (best_exposure - best_guarantee).max(0.0);
        let solution = GameSolution {
            row_mix,
            col_mix,
            value: (0.5 * (best_guarantee + best_exposure)).clamp(report.maximin, report.minimax),
            method: SolveMethod::FictitiousPlay,
            duality_gap: gap,
        };
        if gap <= tol {
            Ok(solution)
        } else {
            Err(GameError::NonConvergence {
                iterations,
                gap,
                best: Box::new(solution),
            })
        }
    };

    // At least one alternation, so the best-iterate snapshots are populated.
    let max_iterations = max_iterations.max(1);
    for t in 1..=max_iterations {
        let r = argmax(&row_scores);
        row_counts[r] += 1;
        for c in 0..cols {
            col_scores[c] += matrix.at(r, c);
        }
        let c = argmin(&col_scores);
        col_counts[c] += 1;
        for rr in 0..rows {
            row_scores[rr] += matrix.at(rr, c);
        }

        let plays = t as f64;
        let exposure = row_scores.iter().copied().fold(f64::NEG_INFINITY, f64::max) / plays;
        let guarantee = col_scores.iter().copied().fold(f64::INFINITY, f64::min) / plays;
        if exposure < best_exposure {
            best_exposure = exposure;
            best_col_counts.copy_from_slice(&col_counts);
        }
        if guarantee > best_guarantee {
            best_guarantee = guarantee;
            best_row_counts.copy_from_slice(&row_counts);
        }
        if best_exposure - best_guarantee <= tol {
            return finish(
                t,
                &best_row_counts,
                &best_col_counts,
                best_guarantee,
                best_exposure,
            );
        }
    }
    finish(
        max_iterations,
        &best_row_counts,
        &best_col_counts,
        best_guarantee,
        best_exposure,
    )
}

/// Assemble a solution from mixtures, computing value and gap from the
/// guarantee/exposure certificate and clamping the value into the pure
/// security bracket.
fn build_solution(
    matrix: &PayoffMatrix,
    row_mix: StrategyMixture,
    col_mix: StrategyMixture,
    method: SolveMethod,
) -> GameSolution {
    let report = matrix.maximin_minimax();
    let guarantee = matrix
        .col_payoffs_against(&row_mix)
        .into_iter()
        .fold(f64::INFINITY, f64::min);
    let exposure = matrix
        .row_payoffs_against(&col_mix)
        .into_iter()
        .fold(f64::NEG_INFINITY, f64::max);
    let value = (0.5 * (guarantee + exposure)).clamp(report.maximin, report.minimax);
    GameSolution {
        row_mix,
        col_mix,
        value,
        method,
        duality_gap: (exposure - guarantee).max(0.0),
    }
}

fn enumerate_supports(matrix: &PayoffMatrix, tol: f64) -> Option<GameSolution> {
    let rows = matrix.rows();
    let cols = matrix.cols();
    let max_k = rows.min(cols);
    for k in 1..=max_k {
        for row_support in combinations(rows, k) {
            'cols: for col_support in combinations(cols, k) {
                // Row mixture x on the support: indifferent across the
                // column support, weights summing to one.
                let mut a = vec![vec![0.0; k + 1]; k + 1];
                let mut b = vec![0.0; k + 1];
                for (eq, &c) in col_support.iter().enumerate() {
                    for (i, &r) in row_support.iter().enumerate() {
                        a[eq][i] = matrix.at(r, c);
                    }
                    a[eq][k] = -1.0; // minus the value v
                }
                for i in 0..k {
                    a[k][i] = 1.0;
                }
                b[k] = 1.0;
                let Some(x) = solve_linear(a, b) else {
                    continue;
                };

                let mut a = vec![vec![0.0; k + 1]; k + 1];
                let mut b = vec![0.0; k + 1];
                for (eq, &r) in row_support.iter().enumerate() {
                    for (j, &c) in col_support.iter().enumerate() {
                        a[eq][j] = matrix.at(r, c);
                    }
                    a[eq][k] = -1.0;
                }
                for j in 0..k {
                    a[k][j] = 1.0;
                }
                b[k] = 1.0;
                let Some(y) = solve_linear(a, b) else {
                    continue;
                };

                let neg_slack = 1e-9 * matrix.scale();
                for i in 0..k {
                    if x[i] < -neg_slack || y[i] < -neg_slack {
                        continue 'cols;
                    }
                }

                let mut row_weights = vec![0.0; rows];
                for (i, &r) in row_support.iter().enumerate() {
                    row_weights[r] = x[i];
                }
                let mut col_weights = vec![0.0; cols];
                for (j, &c) in col_support.iter().enumerate() {
                    col_weights[c] = y[j];
                }
                let Ok(row_mix) = StrategyMixture::from_raw(row_weights) else {
                    continue;
                };
                let Ok(col_mix) = StrategyMixture::from_raw(col_weights) else {
                    continue;
                };
                let solution =
                    build_solution(matrix, row_mix, col_mix, SolveMethod::SupportEnumeration);
                if solution.duality_gap <= tol {
                    return Some(solution);
                }
            }
        }
    }
    None
}

/// All k-element subsets of `0..n` in lexicographic order.
fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    fn recurse(
        start: usize,
        n: usize,
        k: usize,
        current: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        let remaining = k - current.len();
        for i in start..=(n - remaining) {
            current.push(i);
            recurse(i + 1, n, k, current, out);
            current.pop();
        }
    }
    if k <= n {
        recurse(0, n, k, &mut current, &mut out);
    }
    out
}

/// Gaussian elimination with partial pivoting; `None` when singular.
fn solve_linear(mut a: Vec<Vec<f64>>, mut b: Vec<f64>) -> Option<Vec<f64>> {
    let n = b.len();
    let scale: f64 = a.iter().flatten().fold(1.0f64, |acc, x| acc.max(x.abs()));
    for col in 0..n {
        let pivot_row = (col..n)
            .max_by(|&i, &j| a[i][col].abs().total_cmp(&a[j][col].abs()))
            .unwrap();
        if a[pivot_row][col].abs() < 1e-12 * scale {
            return None;
        }
        a.swap(col, pivot_row);
        b.swap(col, pivot_row);
        for row in (col + 1)..n {
            let factor = a[row][col] / a[col][col];
            if factor == 0.0 {
                continue;
            }
            for k in col..n {
                a[row][k] -= factor * a[col][k];
            }
            b[row] -= factor * b[col];
        }
    }
    let mut x = vec![0.0; n];
    for row in (0..n).rev() {
        let mut acc = b[row];
        for k in (row + 1)..n {
            acc -= a[row][k] * x[k];
        }
        x[row] = acc / a[row][row];
    }
    x.iter().all(|v| v.is_finite()).then_some(x)
}

fn argmax(values: &[f64]) -> usize {
    let mut best = 0;
    for (i, &v) in values.iter().enumerate() {
        if v > values[best] {
            best = i;
        }
    }
    best
}

fn argmin(values: &[f64]) -> usize {
    let mut best = 0;
    for (i, &v) in values.iter().enumerate() {
        if v < values[best] {
            best = i;
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::SplitMix64;
    use proptest::prelude::*;

    fn matrix(rows: &[&[f64]]) -> PayoffMatrix {
        PayoffMatrix::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn matching_pennies() -> PayoffMatrix {
        matrix(&[&[1.0, -1.0], &[-1.0, 1.0]])
    }

    fn random_matrix(
        rng: &mut SplitMix64,
        rows: usize,
        cols: usize,
        integer: bool,
    ) -> PayoffMatrix {
        let data = (0..rows)
            .map(|_| {
                (0..cols)
                    .map(|_| {
                        if integer {
                            rng.next_below(7) as f64 - 3.0
                        } else {
                            rng.next_f64() * 2.0 - 1.0
                        }
                    })
                    .collect()
            })
            .collect();
        PayoffMatrix::new(data).unwrap()
    }

    #[test]
    fn construction_rejects_bad_input() {
        assert!(PayoffMatrix::new(vec![]).is_err());
        assert!(PayoffMatrix::new(vec![vec![]]).is_err());
        assert!(PayoffMatrix::new(vec![vec![1.0], vec![1.0, 2.0]]).is_err());
        assert!(PayoffMatrix::new(vec![vec![f64::NAN]]).is_err());
    }

    #[test]
    fn maximin_minimax_examples() {
        let report = matching_pennies().maximin_minimax();
        assert_eq!(report.maximin, -1.0);
        assert_eq!(report.minimax, 1.0);

        let report = matrix(&[&[1.0, 2.0], &[3.0, 4.0]]).maximin_minimax();
        assert_eq!(report.maximin, 3.0);
        assert_eq!(report.maximin_rows, vec![1]);
        assert_eq!(report.minimax, 3.0);
        assert_eq!(report.minimax_cols, vec![0]);
    }

    #[test]
    fn saddle_point_examples() {
        assert_eq!(
            matrix(&[&[0.0, 0.0], &[0.0, 0.0]]).saddle_points(),
            vec![(0, 0), (0, 1), (1, 0), (1, 1)]
        );
        assert_eq!(
            matrix(&[&[1.0, 2.0], &[3.0, 4.0]]).saddle_points(),
            vec![(1, 0)]
        );
        assert!(matching_pennies().saddle_points().is_empty());
    }

    #[test]
    fn dominance_examples() {
        let report = matrix(&[&[2.0, 2.0], &[1.0, 1.0]]).dominance(Side::Row);
        assert_eq!(report.strict, Some(0));

        let report = matching_pennies().dominance(Side::Row);
        assert_eq!(report.strict, None);
        assert!(report.weak_pairs.is_empty());

        // For the minimizer, smaller is better.
        let report = matrix(&[&[2.0, 1.0], &[3.0, 2.0]]).dominance(Side::Col);
        assert_eq!(report.strict, Some(1));
    }

    #[test]
    fn solve_matching_pennies() {
        let solution = solve_mixed(&matching_pennies(), 1e-9).unwrap();
        assert_eq!(solution.method, SolveMethod::SupportEnumeration);
        assert!((solution.value).abs() < 1e-9);
        for w in solution.row_mix.weights() {
            assert!((w - 0.5).abs() < 1e-9);
        }
        for w in solution.col_mix.weights() {
            assert!((w - 0.5).abs() < 1e-9);
        }
    }

    #[test]
    fn solve_saddle_degenerate() {
        let solution = solve_mixed(&matrix(&[&[1.0, 2.0], &[3.0, 4.0]]), 1e-9).unwrap();
        assert_eq!(solution.method, SolveMethod::PureSaddle);
        assert_eq!(solution.value, 3.0);
        assert_eq!(solution.row_mix.weights(), &[0.0, 1.0]);
        assert_eq!(solution.col_mix.weights(), &[1.0, 0.0]);
        assert_eq!(solution.duality_gap, 0.0);
    }

    #[test]
    fn solve_two_by_two_mixed() {
        let m = matrix(&[&[3.0, -1.0], &[-2.0, 4.0]]);
        let solution = solve_mixed(&m, 1e-9).unwrap();
        assert!((solution.value - 1.0).abs() < 1e-9);
        assert!((solution.row_mix.weights()[0] - 0.6).abs() < 1e-9);
        assert!((solution.row_mix.weights()[1] - 0.4).abs() < 1e-9);
        assert!((solution.col_mix.weights()[0] - 0.5).abs() < 1e-9);
        assert!((solution.col_mix.weights()[1] - 0.5).abs() < 1e-9);
    }

    #[test]
    fn one_by_n_reduces_to_column_minimum() {
        let m = matrix(&[&[4.0, -2.0, 7.0]]);
        let solution = solve_mixed(&m, 1e-9).unwrap();
        assert_eq!(solution.method, SolveMethod::PureSaddle);
        assert_eq!(solution.value, -2.0);
        assert_eq!(solution.col_mix.weights(), &[0.0, 1.0, 0.0]);
    }

    #[test]
    fn fictitious_play_handles_matching_pennies() {
        let solution = solve_fictitious_play(&matching_pennies(), 1e-3, 1_000_000).unwrap();
        assert!(solution.value.abs() < 1e-3);
        assert!(solution.duality_gap <= 1e-3);
        assert!((solution.row_mix.weights()[0] - 0.5).abs() < 1e-2);
    }

    #[test]
    fn fictitious_play_nonconvergence_carries_best_iterate() {
        // This game needs five alternations to close the gap; a cap of
        // three cannot converge at any meaningful tolerance.
        let m = matrix(&[&[3.0, -1.0], &[-2.0, 4.0]]);
        let err = solve_fictitious_play(&m, 1e-9, 3).unwrap_err();
        match err {
            GameError::NonConvergence {
                iterations,
                gap,
                best,
            } => {
                assert_eq!(iterations, 3);
                assert!(gap > 0.0);
                assert_eq!(best.row_mix.len(), 2);
                assert!(best.value.is_finite());
            }
            other => panic!("expected NonConvergence, got {other:?}"),
        }
    }

    #[test]
    fn enumeration_and_fictitious_play_agree_on_random_3x3() {
        let mut rng = SplitMix64::new(0x5EED_0003);
        let tol = 1e-4;
        for _ in 0..50 {
            let m = random_matrix(&mut rng, 3, 3, false);
            let exact = solve_support_enumeration(&m, 1e-9).unwrap();
            let fp = solve_fictitious_play(&m, tol, FICTITIOUS_PLAY_CAP).unwrap();
            assert!(
                (exact.value - fp.value).abs() <= 10.0 * tol,
                "values diverged: {} vs {}",
                exact.value,
                fp.value
            );
        }
    }

    #[test]
    fn weak_duality_and_saddle_iff_on_random_matrices() {
        let mut rng = SplitMix64::new(0xD00D);
        for i in 0..500 {
            let rows = 1 + rng.next_below(6) as usize;
            let cols = 1 + rng.next_below(6) as usize;
            let m = random_matrix(&mut rng, rows, cols, i % 2 == 0);
            let report = m.maximin_minimax();
            assert!(report.maximin <= report.minimax);
            assert_eq!(
                !m.saddle_points().is_empty(),
                report.maximin == report.minimax
            );
        }
    }

    proptest! {
        #[test]
        fn scale_shift_equivariance(
            seed in any::<u64>(),
            a in 0.1f64..5.0,
            b in -3.0f64..3.0,
        ) {
            let mut rng = SplitMix64::new(seed);
            let m = random_matrix(&mut rng, 3, 3, false);
            let scaled = PayoffMatrix::new(
                (0..3).map(|r| (0..3).map(|c| a * m.at(r, c) + b).collect()).collect()
            ).unwrap();
            let s1 = solve_mixed(&m, 1e-10).unwrap();
            let s2 = solve_mixed(&scaled, 1e-10).unwrap();
            prop_assert!((s2.value - (a * s1.value + b)).abs() < 1e-6 * (1.0 + a));
            for (w1, w2) in s1.row_mix.weights().iter().zip(s2.row_mix.weights()) {
                prop_assert!((w1 - w2).abs() < 1e-5);
            }
        }

        #[test]
        fn solutions_admit_no_profitable_deviation(seed in any::<u64>()) {
            let mut rng = SplitMix64::new(seed);
            let rows = 1 + rng.next_below(5) as usize;
            let cols = 1 + rng.next_below(5) as usize;
            let m = random_matrix(&mut rng, rows, cols, false);
            let tol = 1e-8;
            let solution = solve_mixed(&m, tol).unwrap();
            for payoff in m.row_payoffs_against(&solution.col_mix) {
                prop_assert!(payoff <= solution.value + tol);
            }
            for payoff in m.col_payoffs_against(&solution.row_mix) {
                prop_assert!(payoff >= solution.value - tol);
            }
        }
    }
}
