//! State-space systems `dx/dt = Ax + Bu` through the pattern of
//! `[sI - A  B]`, plus generators for canonical forms and SISO
//! interconnections.
//!
//! Row `i` of the pattern is the equation for `dx_i/dt`; column `j < n` is
//! state `x_j`, column `n + k` is input `u_k`. The diagonal ("parallel")
//! entries are always present with degree 1.

use std::fmt;
use std::str::FromStr;

use crate::decision::{analyze, AnalysisReport};
use crate::error::{AnalysisError, Result};
use crate::pattern::{PolyPattern, StateSpacePattern};

/// Pattern of `[sI - A  B]`.
pub fn build_sia_b(ss: &StateSpacePattern) -> PolyPattern {
    let n = ss.states();
    let mut p = PolyPattern::new(n, n + ss.inputs());
    for i in 0..n {
        p.insert(i, i, 1);
    }
    for &(i, j) in ss.a_entries() {
        if i != j {
            p.insert(i, j, 0);
        }
    }
    for &(i, k) in ss.b_entries() {
        p.insert(i, n + k, 0);
    }
    p
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StateSpaceReport {
    pub base: AnalysisReport,
    /// `state_connectivity[i]`: state `x_i` shares a reduced-graph component
    /// with some input vertex.
    pub state_connectivity: Vec<bool>,
}

impl StateSpaceReport {
    pub fn all_states_connected(&self) -> bool {
        self.state_connectivity.iter().all(|&c| c)
    }
}

pub fn statespace_analyze(ss: &StateSpacePattern) -> Result<StateSpaceReport> {
    let base = analyze(&build_sia_b(ss))?;
    let state_connectivity = state_connectivity(ss, &base);
    Ok(StateSpaceReport {
        base,
        state_connectivity,
    })
}

/// Per-state flag: does the state column share a component of `report`
/// (an analysis of [`build_sia_b`]) with an input column?
pub fn state_connectivity(ss: &StateSpacePattern, report: &AnalysisReport) -> Vec<bool> {
    let n = ss.states();
    let mut connected = vec![false; n];
    for comp in &report.components {
        let has_input = comp.cols.iter().any(|&c| c >= n);
        for &c in comp.cols.iter().filter(|&&c| c < n) {
            connected[c] = has_input;
        }
    }
    connected
}

/// Controller canonical form: ones on the superdiagonal, a full last row of
/// `A`, and `B = e_n`.
pub fn gen_controller_canonical(n: usize) -> StateSpacePattern {
    assert!(n >= 1, "need at least one state");
    let super_diag = (0..n - 1).map(|i| (i, i + 1));
    let last_row = (0..n).map(|j| (n - 1, j));
    StateSpacePattern::from_positions(n, 1, super_diag.chain(last_row), [(n - 1, 0)])
}

/// Jordan-type form with one 2x2 block on states 1-2 and scalar blocks
/// after it; the input enters state 2 only.
pub fn gen_gilbert(n: usize) -> StateSpacePattern {
    assert!(n >= 2, "Gilbert form needs at least two states");
    let diag = (0..n).map(|i| (i, i));
    StateSpacePattern::from_positions(n, 1, diag.chain([(0, 1)]), [(1, 0)])
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum InterconnectionKind {
    Series,
    Parallel,
    Feedback,
}

impl InterconnectionKind {
    pub const ALL: [InterconnectionKind; 3] = [Self::Series, Self::Parallel, Self::Feedback];
}

impl fmt::Display for InterconnectionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Series => "series",
            Self::Parallel => "parallel",
            Self::Feedback => "feedback",
        })
    }
}

impl FromStr for InterconnectionKind {
    type Err = AnalysisError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "series" => Ok(Self::Series),
            "parallel" => Ok(Self::Parallel),
            "feedback" => Ok(Self::Feedback),
            other => Err(AnalysisError::InvalidParameter(format!(
                "unknown interconnection kind {other:?}"
            ))),
        }
    }
}

/// Pattern of two SISO systems `p_k(d/dt) y_k = q_k(d/dt) u_k` joined in
/// series, parallel or feedback. Denominators `p_k` have degree `n_k`,
/// numerators `q_k` degree `n_k - 1`.
pub fn gen_interconnection(kind: InterconnectionKind, n1: u32, n2: u32) -> Result<PolyPattern> {
    if n1 == 0 || n2 == 0 {
        return Err(AnalysisError::InvalidParameter(format!(
            "subsystem orders must be at least 1, got ({n1}, {n2})"
        )));
    }
    let (p1, q1, p2, q2) = (n1, n1 - 1, n2, n2 - 1);
    Ok(match kind {
        // w = (r, v, y)
        InterconnectionKind::Series => {
            PolyPattern::from_entries(2, 3, [(0, 0, q1), (0, 1, p1), (1, 1, q2), (1, 2, p2)])
        }
        // w = (u, v, r, y)
        InterconnectionKind::Parallel => PolyPattern::from_entries(
            3,
            4,
            [(0, 0, p1), (0, 2, q1), (1, 1, p2), (1, 2, q2), (2, 0, 0), (2, 1, 0), (2, 3, 0)],
        ),
        // w = (y, e, v, r)
        InterconnectionKind::Feedback => PolyPattern::from_entries(
            3,
            4,
            [(0, 1, 0), (0, 2, 0), (0, 3, 0), (1, 0, p1), (1, 1, q1), (2, 0, q2), (2, 2, p2)],
        ),
    })
}
