//! Edge-weighted bipartite graph of a polynomial pattern, maximum matching
//! and matching enumeration.
//!
//! Row vertices form `R`, column vertices form `C`. An edge joins row `i`
//! and column `j` when entry `(i, j)` is nonzero; its weight is the entry
//! degree. Weights never influence matching, they are only labels.

use std::collections::VecDeque;

use crate::error::{AnalysisError, Result};
use crate::pattern::PolyPattern;

/// Default row-count guard for exhaustive matching enumeration.
pub const ENUMERATION_ROW_LIMIT: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub row: usize,
    pub col: usize,
    pub weight: u32,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedBigraph {
    rows: usize,
    cols: usize,
    /// Sorted by `(row, col)`; an edge id is an index into this list.
    edges: Vec<Edge>,
    /// Edge ids per row, ascending by column.
    row_adj: Vec<Vec<usize>>,
    /// Edge ids per column, ascending by row.
    col_adj: Vec<Vec<usize>>,
}

impl WeightedBigraph {
    /// Builds the graph from arbitrary-order edges. Panics on a repeated
    /// `(row, col)` pair or an out-of-range endpoint.
    pub fn from_edges(rows: usize, cols: usize, edges: impl IntoIterator<Item = Edge>) -> Self {
        let mut edges: Vec<Edge> = edges.into_iter().collect();
        edges.sort();
        for w in edges.windows(2) {
            assert!(
                (w[0].row, w[0].col) != (w[1].row, w[1].col),
                "duplicate edge ({}, {})",
                w[0].row,
                w[0].col
            );
        }
        let mut row_adj = vec![Vec::new(); rows];
        let mut col_adj = vec![Vec::new(); cols];
        for (id, e) in edges.iter().enumerate() {
            assert!(e.row < rows && e.col < cols, "edge endpoint out of range");
            row_adj[e.row].push(id);
            col_adj[e.col].push(id);
        }
        Self {
            rows,
            cols,
            edges,
            row_adj,
            col_adj,
        }
    }

    pub fn row_count(&self) -> usize {
        self.rows
    }

    pub fn col_count(&self) -> usize {
        self.cols
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edge(&self, id: usize) -> Edge {
        self.edges[id]
    }

    pub fn row_edges(&self, row: usize) -> &[usize] {
        &self.row_adj[row]
    }

    pub fn col_edges(&self, col: usize) -> &[usize] {
        &self.col_adj[col]
    }

    pub fn edge_id(&self, row: usize, col: usize) -> Option<usize> {
        self.edges
            .binary_search_by(|e| (e.row, e.col).cmp(&(row, col)))
            .ok()
    }

    /// Subgraph on the same vertex sets keeping the edges for which `keep`
    /// returns true.
    pub fn filter_edges(&self, mut keep: impl FnMut(&Edge) -> bool) -> Self {
        Self::from_edges(
            self.rows,
            self.cols,
            self.edges.iter().copied().filter(|e| keep(e)),
        )
    }

    pub fn to_pattern(&self) -> PolyPattern {
        PolyPattern::from_entries(
            self.rows,
            self.cols,
            self.edges.iter().map(|e| (e.row, e.col, e.weight)),
        )
    }
}

/// One edge per pattern entry, weighted by its degree.
pub fn build_graph(p: &PolyPattern) -> WeightedBigraph {
    WeightedBigraph::from_edges(
        p.rows(),
        p.cols(),
        p.entries().map(|(row, col, weight)| Edge { row, col, weight }),
    )
}

/// A set of vertex-disjoint `(row, col)` pairs, kept sorted by row.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Matching {
    pairs: Vec<(usize, usize)>,
}

impl Matching {
    /// Panics if two pairs share a row or a column.
    pub fn new(mut pairs: Vec<(usize, usize)>) -> Self {
        pairs.sort_unstable();
        for w in pairs.windows(2) {
            assert_ne!(w[0].0, w[1].0, "row {} matched twice", w[0].0);
        }
        let mut cols: Vec<usize> = pairs.iter().map(|p| p.1).collect();
        cols.sort_unstable();
        for w in cols.windows(2) {
            assert_ne!(w[0], w[1], "column {} matched twice", w[0]);
        }
        Self { pairs }
    }

    fn from_row_assignment(row_to_col: &[Option<usize>]) -> Self {
        Self {
            pairs: row_to_col
                .iter()
                .enumerate()
                .filter_map(|(r, c)| c.map(|c| (r, c)))
                .collect(),
        }
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn contains(&self, row: usize, col: usize) -> bool {
        self.pairs.binary_search(&(row, col)).is_ok()
    }

    pub fn col_of(&self, row: usize) -> Option<usize> {
        self.pairs
            .binary_search_by_key(&row, |p| p.0)
            .ok()
            .map(|i| self.pairs[i].1)
    }
}

/// Restrictions applied to a graph while matching, without rebuilding it.
#[derive(Debug, Clone, Copy, Default)]
pub(crate) struct Mask<'a> {
    pub banned_row: Option<usize>,
    pub banned_col: Option<usize>,
    /// `removed[id]` disables edge `id`.
    pub removed: Option<&'a [bool]>,
}

impl Mask<'_> {
    #[inline]
    fn allows(&self, g: &WeightedBigraph, id: usize) -> bool {
        let e = &g.edges[id];
        Some(e.row) != self.banned_row
            && Some(e.col) != self.banned_col
            && !self.removed.is_some_and(|r| r[id])
    }
}

const INF: u32 = u32::MAX;

/// Hopcroft–Karp on the masked graph. Returns the row → column assignment.
pub(crate) fn hopcroft_karp(g: &WeightedBigraph, mask: Mask<'_>) -> Vec<Option<usize>> {
    let mut row_to_col: Vec<Option<usize>> = vec![None; g.rows];
    let mut col_to_row: Vec<Option<usize>> = vec![None; g.cols];
    let mut dist = vec![INF; g.rows];
    let mut cursor = vec![0usize; g.rows];
    let mut queue = VecDeque::new();

    loop {
        // Layer rows by alternating-path distance from the free rows.
        queue.clear();
        for r in 0..g.rows {
            if row_to_col[r].is_none() && Some(r) != mask.banned_row {
                dist[r] = 0;
                queue.push_back(r);
            } else {
                dist[r] = INF;
            }
        }
        let mut found = false;
        while let Some(r) = queue.pop_front() {
            for &id in &g.row_adj[r] {
                if !mask.allows(g, id) {
                    continue;
                }
                match col_to_row[g.edges[id].col] {
                    None => found = true,
                    Some(r2) if dist[r2] == INF => {
                        dist[r2] = dist[r] + 1;
                        queue.push_back(r2);
                    }
                    Some(_) => {}
                }
            }
        }
        if !found {
            break;
        }

        cursor.iter_mut().for_each(|c| *c = 0);
        for r in 0..g.rows {
            if row_to_col[r].is_none() && dist[r] == 0 {
                augment(g, &mask, r, &mut row_to_col, &mut col_to_row, &mut dist, &mut cursor);
            }
        }
    }
    row_to_col
}

fn augment(
    g: &WeightedBigraph,
    mask: &Mask<'_>,
    r: usize,
    row_to_col: &mut [Option<usize>],
    col_to_row: &mut [Option<usize>],
    dist: &mut [u32],
    cursor: &mut [usize],
) -> bool {
    while cursor[r] < g.row_adj[r].len() {
        let id = g.row_adj[r][cursor[r]];
        cursor[r] += 1;
        if !mask.allows(g, id) {
            continue;
        }
        let c = g.edges[id].col;
        let ok = match col_to_row[c] {
            None => true,
            Some(r2) => {
                dist[r2] == dist[r] + 1
                    && augment(g, mask, r2, row_to_col, col_to_row, dist, cursor)
            }
        };
        if ok {
            row_to_col[r] = Some(c);
            col_to_row[c] = Some(r);
            return true;
        }
    }
    dist[r] = INF;
    false
}

/// A maximum-cardinality matching. Deterministic: ties follow ascending
/// adjacency order.
pub fn max_matching(g: &WeightedBigraph) -> Matching {
    Matching::from_row_assignment(&hopcroft_karp(g, Mask::default()))
}

pub(crate) fn masked_matching(g: &WeightedBigraph, mask: Mask<'_>) -> Matching {
    Matching::from_row_assignment(&hopcroft_karp(g, mask))
}

/// Size of a maximum matching, the generic rank of the pattern.
pub fn term_rank(g: &WeightedBigraph) -> usize {
    hopcroft_karp(g, Mask::default())
        .iter()
        .filter(|c| c.is_some())
        .count()
}

/// Every matching of exactly `k` edges, sorted lexicographically by their
/// row-sorted pair lists. Exponential; refuses graphs with more than
/// [`ENUMERATION_ROW_LIMIT`] rows.
pub fn enumerate_saturating_matchings(g: &WeightedBigraph, k: usize) -> Result<Vec<Matching>> {
    enumerate_matchings_guarded(g, k, ENUMERATION_ROW_LIMIT)
}

pub fn enumerate_matchings_guarded(
    g: &WeightedBigraph,
    k: usize,
    row_limit: usize,
) -> Result<Vec<Matching>> {
    if g.rows > row_limit {
        return Err(AnalysisError::GuardExceeded {
            what: "row count",
            actual: g.rows,
            limit: row_limit,
        });
    }
    let mut out = Vec::new();
    if k > g.rows.min(g.cols) {
        return Ok(out);
    }
    let mut used = vec![false; g.cols];
    let mut current = Vec::with_capacity(k);
    enumerate_rec(g, 0, k, &mut used, &mut current, &mut out);
    out.sort();
    Ok(out)
}

fn enumerate_rec(
    g: &WeightedBigraph,
    row: usize,
    k: usize,
    used: &mut [bool],
    current: &mut Vec<(usize, usize)>,
    out: &mut Vec<Matching>,
) {
    if current.len() == k {
        out.push(Matching {
            pairs: current.clone(),
        });
        return;
    }
    // Not enough rows left to reach k.
    if g.rows - row < k - current.len() {
        return;
    }
    for &id in &g.row_adj[row] {
        let c = g.edges[id].col;
        if !used[c] {
            used[c] = true;
            current.push((row, c));
            enumerate_rec(g, row + 1, k, used, current, out);
            current.pop();
            used[c] = false;
        }
    }
    enumerate_rec(g, row + 1, k, used, current, out);
}
