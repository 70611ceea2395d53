//! Sparsity/degree patterns of polynomial matrices and state-space pairs,
//! with their line-oriented text formats.
//!
//! Indices are 1-based in text and 0-based in memory. An absent entry is an
//! identically zero polynomial; a present entry of degree 0 is a nonzero
//! constant.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: duplicate entry ({row}, {col})")]
    Duplicate { line: usize, row: usize, col: usize },
    #[error("line {line}: index ({row}, {col}) out of range for {rows}x{cols}")]
    OutOfRange {
        line: usize,
        row: usize,
        col: usize,
        rows: usize,
        cols: usize,
    },
    #[error("line {line}: negative degree {degree}")]
    NegativeDegree { line: usize, degree: i64 },
}

/// Pattern of a `rows x cols` polynomial matrix: which entries are nonzero
/// and the degree of each.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyPattern {
    rows: usize,
    cols: usize,
    entries: BTreeMap<(usize, usize), u32>,
}

impl PolyPattern {
    /// An all-zero pattern. Panics if either dimension is zero.
    pub fn new(rows: usize, cols: usize) -> Self {
        assert!(rows > 0 && cols > 0, "pattern dimensions must be positive");
        Self {
            rows,
            cols,
            entries: BTreeMap::new(),
        }
    }

    /// Builds a pattern from 0-based `(row, col, degree)` triples.
    pub fn from_entries(
        rows: usize,
        cols: usize,
        entries: impl IntoIterator<Item = (usize, usize, u32)>,
    ) -> Self {
        let mut p = Self::new(rows, cols);
        for (i, j, d) in entries {
            let prev = p.insert(i, j, d);
            assert!(prev.is_none(), "duplicate entry ({i}, {j})");
        }
        p
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Degree of entry `(row, col)`, `None` if the entry is identically zero.
    pub fn degree(&self, row: usize, col: usize) -> Option<u32> {
        self.entries.get(&(row, col)).copied()
    }

    /// Sets an entry and returns the previous degree. Panics on an
    /// out-of-range index.
    pub fn insert(&mut self, row: usize, col: usize, degree: u32) -> Option<u32> {
        assert!(
            row < self.rows && col < self.cols,
            "entry ({row}, {col}) outside {}x{}",
            self.rows,
            self.cols
        );
        self.entries.insert((row, col), degree)
    }

    pub fn remove(&mut self, row: usize, col: usize) -> Option<u32> {
        self.entries.remove(&(row, col))
    }

    /// Entries in row-major order as `(row, col, degree)`.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, u32)> + '_ {
        self.entries.iter().map(|(&(i, j), &d)| (i, j, d))
    }

    /// Restriction to the given columns, renumbered in the order given.
    pub fn select_columns(&self, cols: &[usize]) -> PolyPattern {
        let mut out = PolyPattern::new(self.rows, cols.len());
        for (new_j, &j) in cols.iter().enumerate() {
            for i in 0..self.rows {
                if let Some(d) = self.degree(i, j) {
                    out.insert(i, new_j, d);
                }
            }
        }
        out
    }

    /// Permutes rows and columns: entry `(i, j)` moves to
    /// `(row_perm[i], col_perm[j])`.
    pub fn permuted(&self, row_perm: &[usize], col_perm: &[usize]) -> PolyPattern {
        assert_eq!(row_perm.len(), self.rows);
        assert_eq!(col_perm.len(), self.cols);
        PolyPattern::from_entries(
            self.rows,
            self.cols,
            self.entries().map(|(i, j, d)| (row_perm[i], col_perm[j], d)),
        )
    }

    /// Appends a copy of row `row` as a new last row.
    pub fn with_duplicated_row(&self, row: usize) -> PolyPattern {
        assert!(row < self.rows);
        let mut out = PolyPattern::new(self.rows + 1, self.cols);
        for (i, j, d) in self.entries() {
            out.insert(i, j, d);
            if i == row {
                out.insert(self.rows, j, d);
            }
        }
        out
    }
}

/// Pattern of a state-space pair `(A, B)` with `A` of size `n x n` and `B`
/// of size `n x m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StateSpacePattern {
    n: usize,
    m: usize,
    a: BTreeSet<(usize, usize)>,
    b: BTreeSet<(usize, usize)>,
}

impl StateSpacePattern {
    pub fn new(n: usize, m: usize) -> Self {
        assert!(n > 0 && m > 0, "state and input counts must be positive");
        Self {
            n,
            m,
            a: BTreeSet::new(),
            b: BTreeSet::new(),
        }
    }

    /// Builds a pair from 0-based positions.
    pub fn from_positions(
        n: usize,
        m: usize,
        a: impl IntoIterator<Item = (usize, usize)>,
        b: impl IntoIterator<Item = (usize, usize)>,
    ) -> Self {
        let mut ss = Self::new(n, m);
        for (i, j) in a {
            ss.insert_a(i, j);
        }
        for (i, k) in b {
            ss.insert_b(i, k);
        }
        ss
    }

    pub fn states(&self) -> usize {
        self.n
    }

    pub fn inputs(&self) -> usize {
        self.m
    }

    pub fn insert_a(&mut self, i: usize, j: usize) -> bool {
        assert!(i < self.n && j < self.n, "A entry ({i}, {j}) out of range");
        self.a.insert((i, j))
    }

    pub fn insert_b(&mut self, i: usize, k: usize) -> bool {
        assert!(i < self.n && k < self.m, "B entry ({i}, {k}) out of range");
        self.b.insert((i, k))
    }

    pub fn a_entries(&self) -> &BTreeSet<(usize, usize)> {
        &self.a
    }

    pub fn b_entries(&self) -> &BTreeSet<(usize, usize)> {
        &self.b
    }

    pub fn has_a(&self, i: usize, j: usize) -> bool {
        self.a.contains(&(i, j))
    }
}

struct Lines<'a> {
    inner: std::iter::Enumerate<std::str::Lines<'a>>,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        Self {
            inner: text.lines().enumerate(),
        }
    }
}

impl<'a> Iterator for Lines<'a> {
    /// (1-based line number, whitespace-separated tokens)
    type Item = (usize, Vec<&'a str>);

    fn next(&mut self) -> Option<Self::Item> {
        for (idx, raw) in self.inner.by_ref() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            return Some((idx + 1, line.split_whitespace().collect()));
        }
        None
    }
}

fn syntax(line: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        line,
        message: message.into(),
    }
}

fn parse_int(line: usize, tok: &str) -> Result<i64, ParseError> {
    tok.parse::<i64>()
        .map_err(|_| syntax(line, format!("expected integer, found {tok:?}")))
}

fn parse_dim(line: usize, tok: &str) -> Result<usize, ParseError> {
    match parse_int(line, tok)? {
        v if v >= 1 => Ok(v as usize),
        v => Err(syntax(line, format!("dimension must be positive, found {v}"))),
    }
}

/// Parses a 1-based index, checking `1 <= idx <= bound`. Returns it 0-based.
fn parse_index(
    line: usize,
    row_tok: &str,
    col_tok: &str,
    rows: usize,
    cols: usize,
) -> Result<(usize, usize), ParseError> {
    let row = parse_int(line, row_tok)?;
    let col = parse_int(line, col_tok)?;
    if row < 1 || col < 1 || row as usize > rows || col as usize > cols {
        return Err(ParseError::OutOfRange {
            line,
            row: row.max(0) as usize,
            col: col.max(0) as usize,
            rows,
            cols,
        });
    }
    Ok((row as usize - 1, col as usize - 1))
}

fn parse_header<'a>(
    lines: &mut Lines<'a>,
    keyword: &str,
) -> Result<(usize, usize), ParseError> {
    let (line, toks) = lines
        .next()
        .ok_or_else(|| syntax(1, format!("missing `{keyword}` header")))?;
    match toks.as_slice() {
        [kw, a, b] if *kw == keyword => Ok((parse_dim(line, a)?, parse_dim(line, b)?)),
        _ => Err(syntax(
            line,
            format!("expected `{keyword} <rows> <cols>`"),
        )),
    }
}

/// Parses the `pattern` text format.
pub fn parse_pattern(text: &str) -> Result<PolyPattern, ParseError> {
    let mut lines = Lines::new(text);
    let (rows, cols) = parse_header(&mut lines, "pattern")?;
    let mut p = PolyPattern::new(rows, cols);
    for (line, toks) in lines {
        let [kw, i, j, d] = toks.as_slice() else {
            return Err(syntax(line, "expected `entry <i> <j> <degree>`"));
        };
        if *kw != "entry" {
            return Err(syntax(line, format!("unknown directive {kw:?}")));
        }
        let (row, col) = parse_index(line, i, j, rows, cols)?;
        let degree = parse_int(line, d)?;
        if degree < 0 {
            return Err(ParseError::NegativeDegree { line, degree });
        }
        let degree = u32::try_from(degree).map_err(|_| syntax(line, "degree too large"))?;
        if p.insert(row, col, degree).is_some() {
            return Err(ParseError::Duplicate {
                line,
                row: row + 1,
                col: col + 1,
            });
        }
    }
    Ok(p)
}

/// Canonical text of a pattern: header, then entries in row-major order.
pub fn emit_pattern(p: &PolyPattern) -> String {
    let mut out = format!("pattern {} {}\n", p.rows, p.cols);
    for (i, j, d) in p.entries() {
        writeln!(out, "entry {} {} {}", i + 1, j + 1, d).unwrap();
    }
    out
}

/// Parses the `statespace` text format.
pub fn parse_statespace(text: &str) -> Result<StateSpacePattern, ParseError> {
    let mut lines = Lines::new(text);
    let (n, m) = parse_header(&mut lines, "statespace")?;
    let mut ss = StateSpacePattern::new(n, m);
    for (line, toks) in lines {
        let [kw, i, j] = toks.as_slice() else {
            return Err(syntax(line, "expected `a <i> <j>` or `b <i> <k>`"));
        };
        let fresh = match *kw {
            "a" => {
                let (i, j) = parse_index(line, i, j, n, n)?;
                ss.a.insert((i, j))
            }
            "b" => {
                let (i, k) = parse_index(line, i, j, n, m)?;
                ss.b.insert((i, k))
            }
            other => return Err(syntax(line, format!("unknown directive {other:?}"))),
        };
        if !fresh {
            return Err(ParseError::Duplicate {
                line,
                row: i.parse().unwrap_or(0),
                col: j.parse().unwrap_or(0),
            });
        }
    }
    Ok(ss)
}

/// Canonical text of a state-space pattern: `a` lines then `b` lines, each
/// in row-major order.
pub fn emit_statespace(ss: &StateSpacePattern) -> String {
    let mut out = format!("statespace {} {}\n", ss.n, ss.m);
    for &(i, j) in &ss.a {
        writeln!(out, "a {} {}", i + 1, j + 1).unwrap();
    }
    for &(i, k) in &ss.b {
        writeln!(out, "b {} {}", i + 1, k + 1).unwrap();
    }
    out
}
