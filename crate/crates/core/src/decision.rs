//! Structural verdicts on a polynomial pattern.
//!
//! [`analyze`] is the polynomial-time test: drop redundant edges, split the
//! rest into connected components, and require every square component to
//! carry only weight-zero edges. [`property_p_holds`] is the exhaustive
//! forced-subset test it is checked against.

use crate::bigraph::{build_graph, enumerate_matchings_guarded, term_rank, Edge, ENUMERATION_ROW_LIMIT};
use crate::error::{AnalysisError, Result};
use crate::pattern::PolyPattern;
use crate::reduction::{connected_components, remove_redundant_edges_with, ReducedGraph, ReductionOptions};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    StructurallyControllable,
    StructurallyUncontrollable,
}

impl Verdict {
    pub fn is_controllable(self) -> bool {
        self == Verdict::StructurallyControllable
    }

    /// `structurally controllable` / `structurally uncontrollable`.
    pub fn phrase(self) -> &'static str {
        match self {
            Verdict::StructurallyControllable => "structurally controllable",
            Verdict::StructurallyUncontrollable => "structurally uncontrollable",
        }
    }

    /// Snake-case identifier used in machine-readable output.
    pub fn key(self) -> &'static str {
        match self {
            Verdict::StructurallyControllable => "structurally_controllable",
            Verdict::StructurallyUncontrollable => "structurally_uncontrollable",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentSummary {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
    /// `None` for an isolated vertex.
    pub max_weight: Option<u32>,
}

impl ComponentSummary {
    pub fn is_square(&self) -> bool {
        self.rows.len() == self.cols.len()
    }
}

/// A square component holding an edge of positive weight.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Witness {
    /// Index into [`AnalysisReport::components`].
    pub component: usize,
    pub edge: Edge,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnalysisReport {
    pub verdict: Verdict,
    /// Term rank equals the row count.
    pub minimal: bool,
    pub term_rank: usize,
    pub redundant_edges: Vec<Edge>,
    pub components: Vec<ComponentSummary>,
    pub witness: Option<Witness>,
}

pub fn analyze(p: &PolyPattern) -> Result<AnalysisReport> {
    analyze_with(p, ReductionOptions::default())
}

pub fn analyze_with(p: &PolyPattern, opts: ReductionOptions) -> Result<AnalysisReport> {
    let reduced = remove_redundant_edges_with(&build_graph(p), opts);
    report_from_reduced(&reduced)
}

/// Component check on an already reduced graph.
pub fn report_from_reduced(reduced: &ReducedGraph) -> Result<AnalysisReport> {
    if reduced.base_rank == 0 {
        return Err(AnalysisError::ZeroTermRank);
    }
    let comps = connected_components(reduced);

    let witness = comps.iter().enumerate().find_map(|(idx, c)| {
        if !c.is_square() {
            return None;
        }
        // edges are (row, col)-sorted, so the first hit is the smallest
        c.edges
            .iter()
            .find(|e| e.weight >= 1)
            .map(|&edge| Witness { component: idx, edge })
    });

    Ok(AnalysisReport {
        verdict: if witness.is_some() {
            Verdict::StructurallyUncontrollable
        } else {
            Verdict::StructurallyControllable
        },
        minimal: reduced.base_rank == reduced.graph.row_count(),
        term_rank: reduced.base_rank,
        redundant_edges: reduced.redundant.clone(),
        components: comps
            .iter()
            .map(|c| ComponentSummary {
                rows: c.rows.clone(),
                cols: c.cols.clone(),
                max_weight: c.max_weight(),
            })
            .collect(),
        witness,
    })
}

fn require_square(p: &PolyPattern) -> Result<()> {
    if p.is_square() {
        Ok(())
    } else {
        Err(AnalysisError::NonSquare {
            rows: p.rows(),
            cols: p.cols(),
        })
    }
}

/// Square pattern whose determinant is not identically zero for generic
/// coefficients, i.e. the graph has a perfect matching.
pub fn generic_nonsingular(p: &PolyPattern) -> Result<bool> {
    require_square(p)?;
    Ok(term_rank(&build_graph(p)) == p.rows())
}

/// Square pattern whose determinant is a nonzero constant for generic
/// coefficients: nonsingular, and every non-redundant edge has weight zero.
pub fn generic_unimodular(p: &PolyPattern) -> Result<bool> {
    if !generic_nonsingular(p)? {
        return Ok(false);
    }
    let reduced = remove_redundant_edges_with(&build_graph(p), ReductionOptions::default());
    Ok(reduced.graph.edges().iter().all(|e| e.weight == 0))
}

/// Exhaustive forced-subset test: whenever every row-saturating matching
/// sends a row set `r` onto one and the same column set, every
/// non-redundant edge at `r` must have weight zero.
///
/// Requires full row term rank and at most [`ENUMERATION_ROW_LIMIT`] rows.
pub fn property_p_holds(p: &PolyPattern) -> Result<bool> {
    if p.rows() > ENUMERATION_ROW_LIMIT {
        return Err(AnalysisError::GuardExceeded {
            what: "row count",
            actual: p.rows(),
            limit: ENUMERATION_ROW_LIMIT,
        });
    }
    let g = build_graph(p);
    let rows = p.rows();
    let saturating = enumerate_matchings_guarded(&g, rows, ENUMERATION_ROW_LIMIT)?;
    if saturating.is_empty() {
        return Err(AnalysisError::RankDeficient {
            term_rank: term_rank(&g),
            rows,
        });
    }

    // Non-redundant edges are exactly those used by some saturating matching.
    let mut used = vec![false; g.edge_count()];
    for m in &saturating {
        for &(r, c) in m.pairs() {
            used[g.edge_id(r, c).unwrap()] = true;
        }
    }

    // Sorted column image of a row subset under a saturating matching.
    let image = |m: &crate::bigraph::Matching, subset: u32| -> Vec<usize> {
        let mut cols: Vec<usize> = m
            .pairs()
            .iter()
            .filter(|&&(r, _)| subset >> r & 1 == 1)
            .map(|&(_, c)| c)
            .collect();
        cols.sort_unstable();
        cols
    };

    for subset in 1u32..(1 << rows) {
        let first = image(&saturating[0], subset);
        let forced = saturating.iter().all(|m| image(m, subset) == first);
        if !forced {
            continue;
        }
        let heavy = g
            .edges()
            .iter()
            .enumerate()
            .any(|(id, e)| used[id] && subset >> e.row & 1 == 1 && e.weight > 0);
        if heavy {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Whether the exhaustive test and [`analyze`] agree on `p`.
pub fn forced_subset_equiv_check(p: &PolyPattern) -> Result<bool> {
    let exhaustive = property_p_holds(p)?;
    let report = analyze(p)?;
    Ok(exhaustive == report.verdict.is_controllable())
}
