//! Redundant-edge removal and connected components of the reduced graph.
//!
//! An edge is redundant when it lies in no matching of cardinality `r1`,
//! where `r1` is the term rank. Dropping such edges leaves every
//! `r1 x r1` minor unchanged, so the reduced graph carries the same
//! zero set as the original.

use rayon::prelude::*;

use crate::bigraph::{hopcroft_karp, masked_matching, term_rank, Edge, Mask, WeightedBigraph};
use crate::error::{AnalysisError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct ReductionOptions {
    /// Once an edge completes to an `r1`-matching, mark every edge of that
    /// matching non-redundant; drop redundant edges as soon as they are
    /// found. Same output, fewer matching runs.
    pub marking: bool,
    /// Classify edges on the rayon pool. Ignored when `marking` is set,
    /// since marking is inherently sequential.
    pub parallel: bool,
}

/// The graph with all redundant edges removed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducedGraph {
    pub graph: WeightedBigraph,
    pub redundant: Vec<Edge>,
    pub base_rank: usize,
}

/// True iff edge `(row, col)` of `g` is in no matching of size `r1`.
pub fn classify_edge(g: &WeightedBigraph, row: usize, col: usize, r1: usize) -> Result<bool> {
    g.edge_id(row, col)
        .ok_or(AnalysisError::EdgeNotPresent { row, col })?;
    Ok(completion_size(g, row, col, None) + 1 < r1)
}

/// Maximum matching size of `g` without vertices `row` and `col`.
fn completion_size(g: &WeightedBigraph, row: usize, col: usize, removed: Option<&[bool]>) -> usize {
    let mask = Mask {
        banned_row: Some(row),
        banned_col: Some(col),
        removed,
    };
    hopcroft_karp(g, mask).iter().filter(|c| c.is_some()).count()
}

pub fn remove_redundant_edges(g: &WeightedBigraph) -> ReducedGraph {
    remove_redundant_edges_with(g, ReductionOptions::default())
}

pub fn remove_redundant_edges_with(g: &WeightedBigraph, opts: ReductionOptions) -> ReducedGraph {
    let r1 = term_rank(g);
    let redundant_flags = if opts.marking {
        classify_with_marking(g, r1)
    } else if opts.parallel {
        (0..g.edge_count())
            .into_par_iter()
            .map(|id| {
                let e = g.edge(id);
                completion_size(g, e.row, e.col, None) + 1 < r1
            })
            .collect()
    } else {
        (0..g.edge_count())
            .map(|id| {
                let e = g.edge(id);
                completion_size(g, e.row, e.col, None) + 1 < r1
            })
            .collect::<Vec<bool>>()
    };

    let redundant: Vec<Edge> = g
        .edges()
        .iter()
        .zip(&redundant_flags)
        .filter(|(_, &r)| r)
        .map(|(e, _)| *e)
        .collect();
    let mut flags = redundant_flags.iter();
    let graph = g.filter_edges(|_| !*flags.next().unwrap());
    ReducedGraph {
        graph,
        redundant,
        base_rank: r1,
    }
}

fn classify_with_marking(g: &WeightedBigraph, r1: usize) -> Vec<bool> {
    let n = g.edge_count();
    let mut known = vec![false; n];
    let mut removed = vec![false; n];
    for id in 0..n {
        if known[id] {
            continue;
        }
        known[id] = true;
        let e = g.edge(id);
        let mask = Mask {
            banned_row: Some(e.row),
            banned_col: Some(e.col),
            removed: Some(&removed),
        };
        let rest = masked_matching(g, mask);
        if rest.len() + 1 < r1 {
            // Removing a redundant edge leaves the set of r1-matchings intact.
            removed[id] = true;
        } else {
            for &(r, c) in rest.pairs() {
                let other = g.edge_id(r, c).expect("matched pair is an edge");
                known[other] = true;
            }
        }
    }
    removed
}

/// A connected component of the reduced graph. Vertex lists ascend; an
/// isolated vertex forms a component with no edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
    pub edges: Vec<Edge>,
}

impl Component {
    pub fn is_square(&self) -> bool {
        self.rows.len() == self.cols.len()
    }

    pub fn max_weight(&self) -> Option<u32> {
        self.edges.iter().map(|e| e.weight).max()
    }
}

struct DisjointSet {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl DisjointSet {
    fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (mut a, mut b) = (self.find(a), self.find(b));
        if a == b {
            return;
        }
        if self.size[a] < self.size[b] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a;
        self.size[a] += self.size[b];
    }
}

/// Components of `rg.graph`, ordered by smallest vertex where rows precede
/// columns (row `i` is vertex `i`, column `j` is vertex `rows + j`).
pub fn connected_components(rg: &ReducedGraph) -> Vec<Component> {
    components_of(&rg.graph)
}

pub fn components_of(g: &WeightedBigraph) -> Vec<Component> {
    let (p, v) = (g.row_count(), g.col_count());
    let mut dsu = DisjointSet::new(p + v);
    for e in g.edges() {
        dsu.union(e.row, p + e.col);
    }
    let mut slot = vec![usize::MAX; p + v];
    let mut comps: Vec<Component> = Vec::new();
    for vertex in 0..p + v {
        let root = dsu.find(vertex);
        if slot[root] == usize::MAX {
            slot[root] = comps.len();
            comps.push(Component {
                rows: Vec::new(),
                cols: Vec::new(),
                edges: Vec::new(),
            });
        }
        let comp = &mut comps[slot[root]];
        if vertex < p {
            comp.rows.push(vertex);
        } else {
            comp.cols.push(vertex - p);
        }
    }
    for e in g.edges() {
        let root = dsu.find(e.row);
        comps[slot[root]].edges.push(*e);
    }
    comps
}
