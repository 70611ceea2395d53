//! Text and JSON rendering. Every index shown to the user is 1-based.

use std::fmt::Write;

use serde_json::{json, Value};
use structctl::bench::BenchResult;
use structctl::oracle::OracleReport;
use structctl::AnalysisReport;

use crate::CrossCheck;

fn one_based(v: &[usize]) -> Vec<usize> {
    v.iter().map(|i| i + 1).collect()
}

fn list(v: &[usize]) -> String {
    let parts: Vec<String> = v.iter().map(|i| (i + 1).to_string()).collect();
    format!("{{{}}}", parts.join(","))
}

pub fn report_json(r: &AnalysisReport) -> Value {
    json!({
        "verdict": r.verdict.key(),
        "minimal": r.minimal,
        "term_rank": r.term_rank,
        "redundant_edges": r.redundant_edges.iter().map(|e| [e.row + 1, e.col + 1]).collect::<Vec<_>>(),
        "components": r.components.iter().map(|c| json!({
            "rows": one_based(&c.rows),
            "cols": one_based(&c.cols),
            "max_weight": c.max_weight,
        })).collect::<Vec<_>>(),
        "witness": r.witness.map_or(Value::Null, |w| json!({
            "component": w.component + 1,
            "edge": [w.edge.row + 1, w.edge.col + 1],
            "weight": w.edge.weight,
        })),
    })
}

pub fn report_text(r: &AnalysisReport, quiet: bool) -> String {
    let mut out = format!("{}\n", r.verdict.phrase());
    if quiet {
        return out;
    }
    let minimal = if r.minimal { "minimal" } else { "not minimal" };
    writeln!(out, "term rank: {} ({minimal})", r.term_rank).unwrap();
    if r.redundant_edges.is_empty() {
        writeln!(out, "redundant edges: none").unwrap();
    } else {
        let edges: Vec<String> = r
            .redundant_edges
            .iter()
            .map(|e| format!("({},{})", e.row + 1, e.col + 1))
            .collect();
        writeln!(out, "redundant edges: {}", edges.join(" ")).unwrap();
    }
    writeln!(out, "components:").unwrap();
    for (i, c) in r.components.iter().enumerate() {
        let weight = c.max_weight.map_or("-".to_string(), |w| w.to_string());
        let shape = if c.is_square() { "square" } else { "non-square" };
        writeln!(
            out,
            "  {}: rows {} cols {} max weight {weight} ({shape})",
            i + 1,
            list(&c.rows),
            list(&c.cols)
        )
        .unwrap();
    }
    match r.witness {
        Some(w) => writeln!(
            out,
            "witness: component {}, edge ({},{}) weight {}",
            w.component + 1,
            w.edge.row + 1,
            w.edge.col + 1,
            w.edge.weight
        )
        .unwrap(),
        None => writeln!(out, "witness: none").unwrap(),
    }
    out
}

pub fn connectivity_text(connected: &[bool]) -> String {
    let mut out = String::from("state\tconnected to input\n");
    for (i, &c) in connected.iter().enumerate() {
        writeln!(out, "x{}\t{}", i + 1, if c { "yes" } else { "no" }).unwrap();
    }
    out
}

pub fn cross_check_json(c: &CrossCheck) -> Value {
    json!({
        "kalman_full_rank": c.kalman,
        "oracle_generic": c.generic,
        "oracle_statespace_strict": c.strict,
    })
}

pub fn cross_check_text(c: &CrossCheck, controllable: bool) -> String {
    let mut out = String::from("cross-check:\n");
    writeln!(out, "  controllability matrix full rank: {}", c.kalman).unwrap();
    writeln!(out, "  oracle, independent generic entries: {}", c.generic).unwrap();
    writeln!(out, "  oracle, diagonal fixed to s - a_ii: {}", c.strict).unwrap();
    if [c.kalman, c.generic, c.strict].iter().any(|&b| b != controllable) {
        out.push_str(
            "note: the routes disagree. The pattern verdict treats every entry of [sI - A  B] as an\n\
             independent generic polynomial, which the generic oracle reproduces. Fixing each diagonal\n\
             entry to s - a_ii (or s where a_ii is absent) ties the entries together, and the\n\
             controllability-matrix rank test and the strict oracle decide that narrower question.\n",
        );
    }
    out
}

pub fn oracle_json(r: &OracleReport) -> Value {
    json!({
        "term_rank": r.term_rank,
        "seeds": r.per_seed.iter().map(|s| json!({
            "seed": s.seed,
            "gcd_degree": s.gcd_degree,
        })).collect::<Vec<_>>(),
        "zero_set_empty": r.zero_set_empty,
    })
}

pub fn oracle_text(r: &OracleReport, quiet: bool) -> String {
    let verdict = if r.zero_set_empty {
        "zero set empty"
    } else {
        "zero set nonempty"
    };
    let mut out = format!("{verdict}\n");
    if quiet {
        return out;
    }
    writeln!(out, "term rank: {}", r.term_rank).unwrap();
    for s in &r.per_seed {
        match s.gcd_degree {
            Some(d) => writeln!(out, "seed {}: gcd degree {d}", s.seed).unwrap(),
            None => writeln!(out, "seed {}: all minors vanish", s.seed).unwrap(),
        }
    }
    out
}

fn ms(d: std::time::Duration) -> String {
    format!("{:.3}", d.as_secs_f64() * 1e3)
}

pub fn bench_tsv(results: &[BenchResult]) -> String {
    let mut out = String::from("p\tv\tE\treduce_ms\ttotal_ms\treduce_ms_optimized\ttotal_ms_optimized\tverdict\tstatus\n");
    for r in results {
        writeln!(
            out,
            "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
            r.rows,
            r.cols,
            r.edge_count,
            ms(r.plain.reduce),
            ms(r.plain.total),
            ms(r.marking.reduce),
            ms(r.marking.total),
            r.verdict.map_or("none", |v| v.key()),
            if r.within_timeout { "ok" } else { "timeout" }
        )
        .unwrap();
    }
    out
}

pub fn bench_json(results: &[BenchResult]) -> Value {
    Value::Array(
        results
            .iter()
            .map(|r| {
                json!({
                    "p": r.rows,
                    "v": r.cols,
                    "edge_count": r.edge_count,
                    "reduce_ms": r.plain.reduce.as_secs_f64() * 1e3,
                    "total_ms": r.plain.total.as_secs_f64() * 1e3,
                    "reduce_ms_optimized": r.marking.reduce.as_secs_f64() * 1e3,
                    "total_ms_optimized": r.marking.total.as_secs_f64() * 1e3,
                    "verdict": r.verdict.map(|v| v.key()),
                    "within_timeout": r.within_timeout,
                })
            })
            .collect(),
    )
}
