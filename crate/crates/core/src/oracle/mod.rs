//! Exact ground truth for the structural verdicts.
//!
//! A pattern is instantiated with random nonzero integer coefficients; the
//! zero set of the resulting matrix is empty exactly when the gcd of all
//! `r1 x r1` minors is a nonzero constant. Random integer points avoid any
//! fixed proper algebraic variety with overwhelming probability, so one
//! instance with a constant gcd witnesses the generic answer.

mod matrix;
mod poly;

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub use matrix::{bareiss_determinant, integer_rank, minor_determinant, ExactMatrix};
pub use poly::{poly_gcd, ExactPoly};

use crate::bigraph::{build_graph, term_rank};
use crate::error::{AnalysisError, Result};
use crate::pattern::{PolyPattern, StateSpacePattern};

pub const DEFAULT_SEED_COUNT: u64 = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleConfig {
    /// Coefficients are drawn from `[-bound, -1] ∪ [1, bound]`.
    pub coeff_bound: i64,
    /// Largest admissible `min(rows, cols)` for minor enumeration.
    pub max_min_dim: usize,
    /// Largest state count for the controllability-matrix test.
    pub max_states: usize,
}

impl Default for OracleConfig {
    fn default() -> Self {
        Self {
            coeff_bound: 99,
            max_min_dim: 6,
            max_states: 12,
        }
    }
}

/// Entries whose polynomial is fixed in shape rather than fully random.
/// Used to instantiate `[sI - A  B]` faithfully.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct StrictShape {
    /// Exactly `s^d`.
    pub monomial: BTreeSet<(usize, usize)>,
    /// Leading coefficient 1, lower coefficients random.
    pub monic: BTreeSet<(usize, usize)>,
}

impl StrictShape {
    /// Diagonal of `sI - A`: exactly `s` where `A_ii` is structurally zero,
    /// `s - a_ii` otherwise.
    pub fn for_statespace(ss: &StateSpacePattern) -> Self {
        let mut shape = Self::default();
        for i in 0..ss.states() {
            if ss.has_a(i, i) {
                shape.monic.insert((i, i));
            } else {
                shape.monomial.insert((i, i));
            }
        }
        shape
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub enum InstantiationMode {
    /// Every coefficient of every entry is an independent random draw.
    #[default]
    Generic,
    StatespaceStrict(StrictShape),
}

fn draw_nonzero(rng: &mut ChaCha8Rng, bound: i64) -> BigInt {
    let magnitude = rng.gen_range(1..=bound);
    BigInt::from(if rng.gen_bool(0.5) { magnitude } else { -magnitude })
}

/// Random integer-coefficient matrix with the sparsity and degrees of `p`.
pub fn instantiate(p: &PolyPattern, seed: u64, mode: &InstantiationMode, config: &OracleConfig) -> ExactMatrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut m = ExactMatrix::zeros(p.rows(), p.cols());
    for (i, j, d) in p.entries() {
        let d = d as usize;
        let mut coeffs: Vec<BigInt> = (0..=d).map(|_| draw_nonzero(&mut rng, config.coeff_bound)).collect();
        if let InstantiationMode::StatespaceStrict(shape) = mode {
            if shape.monomial.contains(&(i, j)) {
                m.set(i, j, ExactPoly::monomial(d));
                continue;
            }
            if shape.monic.contains(&(i, j)) {
                coeffs[d] = BigInt::from(1);
            }
        }
        m.set(i, j, ExactPoly::new(coeffs));
    }
    m
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for x in start..n {
            if n - x < k - cur.len() {
                break;
            }
            cur.push(x);
            rec(x + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::with_capacity(k), &mut out);
    out
}

/// Gcd of all nonzero `k x k` minors, stopping early once it is constant.
/// `None` when every such minor vanishes.
pub fn minors_gcd(m: &ExactMatrix, k: usize) -> Result<Option<ExactPoly>> {
    let mut acc: Option<ExactPoly> = None;
    for rows in subsets(m.rows(), k) {
        for cols in subsets(m.cols(), k) {
            let d = minor_determinant(m, &rows, &cols)?;
            if d.is_zero() {
                continue;
            }
            let g = match &acc {
                None => d.primitive_part(),
                Some(a) => poly_gcd(a, &d)?,
            };
            if g.is_nonzero_constant() {
                return Ok(Some(g));
            }
            acc = Some(g);
        }
    }
    Ok(acc)
}

/// Gcd of the instantiated minors for one seed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeedOutcome {
    pub seed: u64,
    /// `None` if all `r1 x r1` minors vanished at this point.
    pub gcd_degree: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleReport {
    pub term_rank: usize,
    pub per_seed: Vec<SeedOutcome>,
    /// Some seed produced a constant gcd.
    pub zero_set_empty: bool,
}

fn check_guard(p: &PolyPattern, config: &OracleConfig) -> Result<usize> {
    let min_dim = p.rows().min(p.cols());
    if min_dim > config.max_min_dim {
        return Err(AnalysisError::GuardExceeded {
            what: "min(rows, cols)",
            actual: min_dim,
            limit: config.max_min_dim,
        });
    }
    match term_rank(&build_graph(p)) {
        0 => Err(AnalysisError::ZeroTermRank),
        r => Ok(r),
    }
}

/// Runs every seed and reports each gcd degree.
pub fn oracle_report(
    p: &PolyPattern,
    seeds: &[u64],
    mode: &InstantiationMode,
    config: &OracleConfig,
) -> Result<OracleReport> {
    let r1 = check_guard(p, config)?;
    let mut per_seed = Vec::with_capacity(seeds.len());
    for &seed in seeds {
        let m = instantiate(p, seed, mode, config);
        let gcd = minors_gcd(&m, r1)?;
        per_seed.push(SeedOutcome {
            seed,
            gcd_degree: gcd.and_then(|g| g.degree()),
        });
    }
    let zero_set_empty = per_seed.iter().any(|s| s.gcd_degree == Some(0));
    Ok(OracleReport {
        term_rank: r1,
        per_seed,
        zero_set_empty,
    })
}

/// True iff, for at least one seed, the gcd of all `r1 x r1` minors of the
/// instantiated matrix is a nonzero constant.
pub fn oracle_zero_set_empty(
    p: &PolyPattern,
    seeds: &[u64],
    mode: &InstantiationMode,
    config: &OracleConfig,
) -> Result<bool> {
    let r1 = check_guard(p, config)?;
    for &seed in seeds {
        let m = instantiate(p, seed, mode, config);
        if minors_gcd(&m, r1)?.is_some_and(|g| g.is_nonzero_constant()) {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Classical check: `[B AB ... A^(n-1)B]` has rank `n` for random nonzero
/// integer values at the pattern positions, for at least one seed.
pub fn kalman_rank_oracle(ss: &StateSpacePattern, seeds: &[u64], config: &OracleConfig) -> Result<bool> {
    let n = ss.states();
    if n > config.max_states {
        return Err(AnalysisError::GuardExceeded {
            what: "state count",
            actual: n,
            limit: config.max_states,
        });
    }
    let m = ss.inputs();
    for &seed in seeds {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut a = vec![vec![BigInt::zero(); n]; n];
        let mut b = vec![vec![BigInt::zero(); m]; n];
        for &(i, j) in ss.a_entries() {
            a[i][j] = draw_nonzero(&mut rng, config.coeff_bound);
        }
        for &(i, k) in ss.b_entries() {
            b[i][k] = draw_nonzero(&mut rng, config.coeff_bound);
        }
        // rows of the controllability matrix, built block by block
        let mut ctrb = vec![Vec::with_capacity(n * m); n];
        let mut block = b;
        for step in 0..n {
            for (row, blk) in ctrb.iter_mut().zip(&block) {
                row.extend(blk.iter().cloned());
            }
            if step + 1 < n {
                block = (0..n)
                    .map(|i| {
                        (0..m)
                            .map(|k| (0..n).fold(BigInt::zero(), |acc, j| acc + &a[i][j] * &block[j][k]))
                            .collect()
                    })
                    .collect();
            }
        }
        if integer_rank(&ctrb) == n {
            return Ok(true);
        }
    }
    Ok(false)
}

/// `count` consecutive seeds starting at `base`.
pub fn seed_range(base: u64, count: u64) -> Vec<u64> {
    (base..base + count).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pattern::parse_statespace;
    use crate::statespace::build_sia_b;

    fn pat(rows: usize, cols: usize, cells: &[(usize, usize, u32)]) -> PolyPattern {
        PolyPattern::from_entries(rows, cols, cells.iter().copied())
    }

    fn reinschke() -> StateSpacePattern {
        parse_statespace("statespace 3 1\na 1 2\na 2 2\na 3 2\nb 2 1").unwrap()
    }

    #[test]
    fn instantiation_respects_degrees_and_bounds() {
        let cfg = OracleConfig::default();
        let p = pat(2, 2, &[(0, 0, 0), (1, 1, 2)]);
        for seed in 0..20 {
            let m = instantiate(&p, seed, &InstantiationMode::Generic, &cfg);
            assert!(m.get(0, 0).is_nonzero_constant());
            assert_eq!(m.get(1, 1).degree(), Some(2));
            assert!(m.get(0, 1).is_zero());
            for c in m.get(1, 1).coeffs() {
                assert!(!c.is_zero() && c.magnitude() <= &99u32.into());
            }
        }
        assert_eq!(
            instantiate(&p, 3, &InstantiationMode::Generic, &cfg),
            instantiate(&p, 3, &InstantiationMode::Generic, &cfg)
        );
    }

    #[test]
    fn strict_mode_fixes_zero_diagonal() {
        let ss = reinschke();
        let mode = InstantiationMode::StatespaceStrict(StrictShape::for_statespace(&ss));
        let m = instantiate(&build_sia_b(&ss), 1, &mode, &OracleConfig::default());
        assert_eq!(m.get(0, 0), &ExactPoly::monomial(1));
        assert_eq!(m.get(2, 2), &ExactPoly::monomial(1));
        let q = m.get(1, 1);
        assert_eq!(q.degree(), Some(1));
        assert_eq!(q.leading(), Some(&BigInt::from(1)));
        assert!(!q.coeffs()[0].is_zero());

        // det over the state columns is s * (s - q) * s
        let det = minor_determinant(&m, &[0, 1, 2], &[0, 1, 2]).unwrap();
        assert_eq!(det.degree(), Some(3));
        assert!(det.exact_div(&ExactPoly::monomial(2)).is_some());
    }

    #[test]
    fn zero_set_examples() {
        let cfg = OracleConfig::default();
        let seeds = seed_range(0, 5);
        let g = InstantiationMode::Generic;
        assert!(oracle_zero_set_empty(&pat(1, 2, &[(0, 0, 2), (0, 1, 3)]), &seeds, &g, &cfg).unwrap());
        assert!(!oracle_zero_set_empty(&pat(1, 1, &[(0, 0, 1)]), &seeds, &g, &cfg).unwrap());
        assert_eq!(
            oracle_zero_set_empty(&PolyPattern::new(2, 2), &seeds, &g, &cfg),
            Err(AnalysisError::ZeroTermRank)
        );
        let big = PolyPattern::from_entries(7, 7, (0..7).map(|i| (i, i, 0)));
        assert!(matches!(
            oracle_zero_set_empty(&big, &seeds, &g, &cfg),
            Err(AnalysisError::GuardExceeded { .. })
        ));
    }

    #[test]
    fn reinschke_both_modes() {
        let cfg = OracleConfig::default();
        let seeds = seed_range(0, 5);
        let ss = reinschke();
        let p = build_sia_b(&ss);
        let strict = InstantiationMode::StatespaceStrict(StrictShape::for_statespace(&ss));
        assert!(!oracle_zero_set_empty(&p, &seeds, &strict, &cfg).unwrap());
        assert!(oracle_zero_set_empty(&p, &seeds, &InstantiationMode::Generic, &cfg).unwrap());
        let report = oracle_report(&p, &seeds, &strict, &cfg).unwrap();
        assert!(report.per_seed.iter().all(|s| s.gcd_degree == Some(1)));
        assert!(!kalman_rank_oracle(&ss, &seeds, &cfg).unwrap());
    }

    #[test]
    fn kalman_examples() {
        let cfg = OracleConfig::default();
        let seeds = seed_range(0, 5);
        let canonical = crate::statespace::gen_controller_canonical(3);
        assert!(kalman_rank_oracle(&canonical, &seeds, &cfg).unwrap());
        let split = StateSpacePattern::from_positions(2, 1, [], [(0, 0)]);
        assert!(!kalman_rank_oracle(&split, &seeds, &cfg).unwrap());
        let huge = StateSpacePattern::new(13, 1);
        assert!(kalman_rank_oracle(&huge, &seeds, &cfg).is_err());
    }

    #[test]
    fn random_cubics_are_coprime() {
        let cfg = OracleConfig::default();
        let p = pat(1, 2, &[(0, 0, 3), (0, 1, 3)]);
        for seed in 0..10 {
            let m = instantiate(&p, seed, &InstantiationMode::Generic, &cfg);
            assert_eq!(poly_gcd(m.get(0, 0), m.get(0, 1)).unwrap(), ExactPoly::one(), "seed {seed}");
        }
    }

    #[test]
    fn enumerates_subsets() {
        assert_eq!(subsets(4, 2).len(), 6);
        assert_eq!(subsets(3, 0), vec![Vec::<usize>::new()]);
        assert_eq!(subsets(3, 3), vec![vec![0, 1, 2]]);
    }
}
