//! Wall-clock measurements of the analysis on random sparse patterns.

use std::time::{Duration, Instant};

use crate::bigraph::build_graph;
use crate::decision::{report_from_reduced, Verdict};
use crate::error::Result;
use crate::generate::gen_random_pattern;
use crate::reduction::{remove_redundant_edges_with, ReductionOptions};

#[derive(Debug, Clone, PartialEq)]
pub struct BenchConfig {
    /// Row counts to run, one table row each.
    pub sizes: Vec<usize>,
    /// Entries per row: `E = edges_factor * p`.
    pub edges_factor: usize,
    /// Columns per row: `v = cols_factor * p`.
    pub cols_factor: usize,
    pub max_degree: u32,
    pub seed: u64,
    pub timeout: Duration,
    pub parallel: bool,
}

impl Default for BenchConfig {
    fn default() -> Self {
        Self {
            sizes: vec![50, 100, 200, 400],
            edges_factor: 3,
            cols_factor: 2,
            max_degree: 2,
            seed: 0,
            timeout: Duration::from_secs(10),
            parallel: false,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Timing {
    pub reduce: Duration,
    pub total: Duration,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BenchResult {
    pub rows: usize,
    pub cols: usize,
    pub edge_count: usize,
    pub plain: Timing,
    /// Same analysis with the marking optimization.
    pub marking: Timing,
    /// `None` if the pattern had no matching at all.
    pub verdict: Option<Verdict>,
    pub within_timeout: bool,
}

fn timed_analysis(p: &crate::pattern::PolyPattern, opts: ReductionOptions) -> (Timing, Option<Verdict>) {
    let start = Instant::now();
    let g = build_graph(p);
    let reduce_start = Instant::now();
    let reduced = remove_redundant_edges_with(&g, opts);
    let reduce = reduce_start.elapsed();
    let verdict = report_from_reduced(&reduced).ok().map(|r| r.verdict);
    (
        Timing {
            reduce,
            total: start.elapsed(),
        },
        verdict,
    )
}

pub fn run_row(config: &BenchConfig, rows: usize, seed: u64) -> Result<BenchResult> {
    let cols = rows * config.cols_factor;
    let edges = rows * config.edges_factor;
    let p = gen_random_pattern(rows, cols, edges, config.max_degree, seed)?;
    let (plain, verdict) = timed_analysis(
        &p,
        ReductionOptions {
            marking: false,
            parallel: config.parallel,
        },
    );
    let (marking, marked_verdict) = timed_analysis(
        &p,
        ReductionOptions {
            marking: true,
            parallel: false,
        },
    );
    assert_eq!(verdict, marked_verdict, "marking changed the verdict at p = {rows}");
    Ok(BenchResult {
        rows,
        cols,
        edge_count: p.len(),
        plain,
        marking,
        verdict,
        within_timeout: plain.total <= config.timeout && marking.total <= config.timeout,
    })
}

/// One result per entry of `config.sizes`, row `i` seeded with
/// `config.seed + i`.
pub fn run_bench(config: &BenchConfig) -> Result<Vec<BenchResult>> {
    config
        .sizes
        .iter()
        .enumerate()
        .map(|(i, &p)| run_row(config, p, config.seed + i as u64))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_ladder() {
        let config = BenchConfig {
            sizes: vec![5, 10, 20],
            ..BenchConfig::default()
        };
        let rows = run_bench(&config).unwrap();
        assert_eq!(rows.len(), 3);
        for (r, &p) in rows.iter().zip(&config.sizes) {
            assert_eq!(r.rows, p);
            assert_eq!(r.edge_count, 3 * p);
            assert_eq!(r.cols, 2 * p);
            assert!(r.plain.reduce <= r.plain.total);
            assert!(r.within_timeout);
        }
    }
}
