//! Seeded random patterns.

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{AnalysisError, Result};
use crate::pattern::{PolyPattern, StateSpacePattern};

/// Uniformly random `rows x cols` pattern with exactly `edges` distinct
/// entries, degrees uniform in `0..=max_degree`.
pub fn gen_random_pattern(rows: usize, cols: usize, edges: usize, max_degree: u32, seed: u64) -> Result<PolyPattern> {
    if rows == 0 || cols == 0 {
        return Err(AnalysisError::InvalidParameter("dimensions must be positive".into()));
    }
    let cells = rows.checked_mul(cols).ok_or_else(|| AnalysisError::InvalidParameter("pattern too large".into()))?;
    if edges > cells {
        return Err(AnalysisError::InvalidParameter(format!(
            "{edges} entries do not fit in a {rows}x{cols} pattern"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut picked = sample(&mut rng, cells, edges).into_vec();
    picked.sort_unstable();
    let mut p = PolyPattern::new(rows, cols);
    for cell in picked {
        p.insert(cell / cols, cell % cols, rng.gen_range(0..=max_degree));
    }
    Ok(p)
}

/// Random `(A, B)` pattern with exactly `a_count` entries in `A` and
/// `b_count` in `B`.
pub fn gen_random_statespace(n: usize, m: usize, a_count: usize, b_count: usize, seed: u64) -> Result<StateSpacePattern> {
    if n == 0 || m == 0 || a_count > n * n || b_count > n * m {
        return Err(AnalysisError::InvalidParameter(format!(
            "cannot place {a_count} A entries and {b_count} B entries with n = {n}, m = {m}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let a = sample(&mut rng, n * n, a_count).into_iter().map(|c| (c / n, c % n)).collect::<Vec<_>>();
    let b = sample(&mut rng, n * m, b_count).into_iter().map(|c| (c / m, c % m)).collect::<Vec<_>>();
    Ok(StateSpacePattern::from_positions(n, m, a, b))
}

/// Small random patterns: at most `max_rows x max_cols`, between 1 and
/// `max_edges` entries, degrees up to `max_degree`. Instance `i` depends
/// only on `(seed, i)`.
pub fn small_pattern_family(
    count: usize,
    max_rows: usize,
    max_cols: usize,
    max_edges: usize,
    max_degree: u32,
    seed: u64,
) -> Vec<PolyPattern> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let rows = rng.gen_range(1..=max_rows);
            let cols = rng.gen_range(1..=max_cols);
            let edges = rng.gen_range(1..=max_edges.min(rows * cols));
            gen_random_pattern(rows, cols, edges, max_degree, rng.gen()).expect("parameters are in range")
        })
        .collect()
}

/// Random state-space patterns with `n <= max_states` and
/// `m <= max_inputs`, densities drawn per instance.
pub fn small_statespace_family(count: usize, max_states: usize, max_inputs: usize, seed: u64) -> Vec<StateSpacePattern> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(1..=max_states);
            let m = rng.gen_range(1..=max_inputs);
            let a_count = rng.gen_range(0..=n * n / 2);
            let b_count = rng.gen_range(0..=n.min(3) * m).min(n * m);
            gen_random_statespace(n, m, a_count, b_count, rng.gen()).expect("parameters are in range")
        })
        .collect()
}
