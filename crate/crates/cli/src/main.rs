use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use structctl::bench::{run_bench, BenchConfig};
use structctl::generate::gen_random_pattern;
use structctl::oracle::{
    kalman_rank_oracle, oracle_report, oracle_zero_set_empty, seed_range, InstantiationMode, OracleConfig,
    StrictShape, DEFAULT_SEED_COUNT,
};
use structctl::reduction::ReductionOptions;
use structctl::statespace::{build_sia_b, gen_controller_canonical, gen_gilbert, gen_interconnection, InterconnectionKind};
use structctl::{analyze_with, emit_pattern, emit_statespace, parse_pattern, parse_statespace, PolyPattern, StateSpacePattern};

mod render;

/// Largest state count for which `statespace` cross-checks its verdict
/// against the numeric oracles.
const CROSS_CHECK_STATES: usize = 6;

#[derive(Parser, Debug)]
#[command(name = "structctl", version, about = "Structural controllability of polynomial matrix patterns")]
struct Cli {
    /// Machine-readable JSON output.
    #[arg(long, global = true)]
    json: bool,
    /// Base seed for random instantiation and generation.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Print only the verdict line.
    #[arg(long, global = true)]
    quiet: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide structural controllability of a pattern file.
    Analyze {
        path: PathBuf,
        /// Reuse completed matchings to skip edge tests.
        #[arg(long)]
        optimized: bool,
    },
    /// Analyze a state-space pattern through [sI - A  B].
    Statespace {
        path: PathBuf,
        #[arg(long)]
        optimized: bool,
    },
    /// Exact check on random integer instantiations.
    Oracle {
        path: PathBuf,
        #[arg(long, default_value_t = DEFAULT_SEED_COUNT)]
        seeds: u64,
        /// Coefficients are drawn from [-C, -1] and [1, C].
        #[arg(long, default_value_t = 99)]
        coeff_range: i64,
        #[arg(long, value_enum, default_value_t = OracleMode::Generic)]
        mode: OracleMode,
    },
    /// Write a fixture pattern to standard output.
    Gen {
        #[arg(value_enum)]
        kind: GenKind,
        /// State count for canonical and gilbert.
        #[arg(long, default_value_t = 3)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        n1: u32,
        #[arg(long, default_value_t = 1)]
        n2: u32,
        #[arg(long, default_value_t = 4)]
        rows: usize,
        #[arg(long, default_value_t = 6)]
        cols: usize,
        #[arg(long, default_value_t = 12)]
        density_edges: usize,
        #[arg(long, default_value_t = 2)]
        max_degree: u32,
    },
    /// Time the analysis over a ladder of random patterns.
    Bench {
        #[arg(long, value_delimiter = ',', default_values_t = [50, 100, 200, 400])]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 3)]
        edges_factor: usize,
        #[arg(long, default_value_t = 2)]
        cols_factor: usize,
        #[arg(long, default_value_t = 2)]
        max_degree: u32,
        #[arg(long, default_value_t = 10)]
        timeout_secs: u64,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum OracleMode {
    Generic,
    #[value(name = "statespace_strict", alias = "statespace-strict")]
    StatespaceStrict,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum GenKind {
    Canonical,
    Gilbert,
    Series,
    Parallel,
    Feedback,
    Random,
}

enum Input {
    Pattern(PolyPattern),
    StateSpace(StateSpacePattern),
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn is_statespace_text(text: &str) -> bool {
    text.lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'))
        .is_some_and(|l| l.split_whitespace().next() == Some("statespace"))
}

fn read_input(path: &Path) -> Result<Input> {
    let text = read(path)?;
    if is_statespace_text(&text) {
        let ss = parse_statespace(&text).with_context(|| format!("in {}", path.display()))?;
        Ok(Input::StateSpace(ss))
    } else {
        let p = parse_pattern(&text).with_context(|| format!("in {}", path.display()))?;
        Ok(Input::Pattern(p))
    }
}

fn reduction_options(optimized: bool) -> ReductionOptions {
    ReductionOptions {
        marking: optimized,
        parallel: false,
    }
}

/// Exit status: 0 controllable, 1 uncontrollable. Errors map to 2 in `main`.
fn run(cli: &Cli) -> Result<u8> {
    match &cli.command {
        Command::Analyze { path, optimized } => {
            let p = parse_pattern(&read(path)?).with_context(|| format!("in {}", path.display()))?;
            let report = analyze_with(&p, reduction_options(*optimized))?;
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&render::report_json(&report))?);
            } else {
                print!("{}", render::report_text(&report, cli.quiet));
            }
            Ok(u8::from(!report.verdict.is_controllable()))
        }
        Command::Statespace { path, optimized } => {
            let ss = parse_statespace(&read(path)?).with_context(|| format!("in {}", path.display()))?;
            let p = build_sia_b(&ss);
            let report = analyze_with(&p, reduction_options(*optimized))?;
            let connectivity = structctl::statespace::state_connectivity(&ss, &report);
            let cross = if ss.states() <= CROSS_CHECK_STATES {
                Some(cross_check(&ss, &p, cli.seed)?)
            } else {
                None
            };
            if cli.json {
                let mut v = render::report_json(&report);
                v["state_connectivity"] = serde_json::json!(connectivity);
                v["cross_check"] = cross.as_ref().map_or(serde_json::Value::Null, render::cross_check_json);
                println!("{}", serde_json::to_string_pretty(&v)?);
            } else {
                print!("{}", render::report_text(&report, cli.quiet));
                if !cli.quiet {
                    print!("{}", render::connectivity_text(&connectivity));
                    if let Some(c) = &cross {
                        print!("{}", render::cross_check_text(c, report.verdict.is_controllable()));
                    }
                }
            }
            Ok(u8::from(!report.verdict.is_controllable()))
        }
        Command::Oracle {
            path,
            seeds,
            coeff_range,
            mode,
        } => {
            if *coeff_range < 1 {
                bail!("--coeff-range must be at least 1");
            }
            if *seeds == 0 {
                bail!("--seeds must be at least 1");
            }
            let (p, inst) = match (read_input(path)?, mode) {
                (Input::Pattern(p), OracleMode::Generic) => (p, InstantiationMode::Generic),
                (Input::Pattern(_), OracleMode::StatespaceStrict) => {
                    bail!("statespace_strict mode needs a state-space file")
                }
                (Input::StateSpace(ss), OracleMode::Generic) => (build_sia_b(&ss), InstantiationMode::Generic),
                (Input::StateSpace(ss), OracleMode::StatespaceStrict) => (
                    build_sia_b(&ss),
                    InstantiationMode::StatespaceStrict(StrictShape::for_statespace(&ss)),
                ),
            };
            let config = OracleConfig {
                coeff_bound: *coeff_range,
                ..OracleConfig::default()
            };
            let report = oracle_report(&p, &seed_range(cli.seed, *seeds), &inst, &config)?;
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&render::oracle_json(&report))?);
            } else {
                print!("{}", render::oracle_text(&report, cli.quiet));
            }
            Ok(u8::from(!report.zero_set_empty))
        }
        Command::Gen {
            kind,
            n,
            n1,
            n2,
            rows,
            cols,
            density_edges,
            max_degree,
        } => {
            let text = match kind {
                GenKind::Canonical | GenKind::Gilbert => {
                    if *n == 0 || (*kind == GenKind::Gilbert && *n < 2) {
                        bail!("--n is too small for {kind:?}");
                    }
                    let ss = if *kind == GenKind::Canonical {
                        gen_controller_canonical(*n)
                    } else {
                        gen_gilbert(*n)
                    };
                    emit_statespace(&ss)
                }
                GenKind::Series => emit_pattern(&gen_interconnection(InterconnectionKind::Series, *n1, *n2)?),
                GenKind::Parallel => emit_pattern(&gen_interconnection(InterconnectionKind::Parallel, *n1, *n2)?),
                GenKind::Feedback => emit_pattern(&gen_interconnection(InterconnectionKind::Feedback, *n1, *n2)?),
                GenKind::Random => emit_pattern(&gen_random_pattern(*rows, *cols, *density_edges, *max_degree, cli.seed)?),
            };
            print!("{text}");
            Ok(0)
        }
        Command::Bench {
            sizes,
            edges_factor,
            cols_factor,
            max_degree,
            timeout_secs,
        } => {
            let config = BenchConfig {
                sizes: sizes.clone(),
                edges_factor: *edges_factor,
                cols_factor: *cols_factor,
                max_degree: *max_degree,
                seed: cli.seed,
                timeout: Duration::from_secs(*timeout_secs),
                parallel: false,
            };
            let results = run_bench(&config)?;
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&render::bench_json(&results))?);
            } else {
                print!("{}", render::bench_tsv(&results));
            }
            Ok(0)
        }
    }
}

pub struct CrossCheck {
    pub kalman: bool,
    pub generic: bool,
    pub strict: bool,
}

fn cross_check(ss: &StateSpacePattern, p: &PolyPattern, base_seed: u64) -> Result<CrossCheck> {
    let seeds = seed_range(base_seed, DEFAULT_SEED_COUNT);
    let config = OracleConfig::default();
    let strict = InstantiationMode::StatespaceStrict(StrictShape::for_statespace(ss));
    Ok(CrossCheck {
        kalman: kalman_rank_oracle(ss, &seeds, &config)?,
        generic: oracle_zero_set_empty(p, &seeds, &InstantiationMode::Generic, &config)?,
        strict: oracle_zero_set_empty(p, &seeds, &strict, &config)?,
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
