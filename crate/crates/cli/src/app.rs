//! Argument parsing and command execution.
//!
//! Exit codes: 0 on success, 1 when a law or the td/bu equivalence fails,
//! 2 on usage errors.

use std::io::{self, Write};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use sublists_core::combinatorics::ch;
use sublists_core::instances::{lookup, BuiltinProblem, InputKind, ProblemInput, Value};
use sublists_core::level::up;
use sublists_core::{Algorithm, RunStats};

use crate::bench::{self, CSV_HEADER, MAX_BENCH_N};
use crate::treedoc::{self, word_groups, words};
use crate::verify::{self, Verifier, MAX_SWEEP_LEN};

pub const EXIT_OK: u8 = 0;
pub const EXIT_LAW_FAILURE: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

/// Longest input `run` accepts.
pub const MAX_RUN_LEN: usize = 20;
/// Longest input the top-down evaluator is run on (`n <= 12`).
pub const MAX_TOP_DOWN_LEN: usize = MAX_BENCH_N + 1;
/// `trace` output grows roughly like `len!` characters.
pub const MAX_TRACE_LEN: usize = 10;

#[derive(Debug, Parser)]
#[command(name = "sublists", version, about = "Top-down and bottom-up sublist recurrences")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Solve a built-in problem on one input.
    Run(RunArgs),
    /// Check the lifting, shape, and equivalence laws exhaustively.
    Verify(VerifyArgs),
    /// Print `ch k input` (or its lift) as TreeDoc JSON.
    Dump(DumpArgs),
    /// Emit call counts and timings as CSV.
    Bench(BenchArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum AlgoChoice {
    Td,
    Bu,
    Both,
}

impl AlgoChoice {
    fn algorithms(self) -> &'static [Algorithm] {
        match self {
            AlgoChoice::Td => &[Algorithm::TopDown],
            AlgoChoice::Bu => &[Algorithm::BottomUp],
            AlgoChoice::Both => &[Algorithm::TopDown, Algorithm::BottomUp],
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Stage {
    Ch,
    AfterUp,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mutant {
    UpClause4,
}

#[derive(Debug, clap::Args)]
pub struct RunArgs {
    #[arg(long)]
    pub problem: String,
    /// Symbols for `trace`; comma-separated integers for `modsum` and `maxmin`.
    #[arg(long, allow_hyphen_values = true)]
    pub input: String,
    #[arg(long, value_enum, default_value_t = AlgoChoice::Both)]
    pub algo: AlgoChoice,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, clap::Args)]
pub struct VerifyArgs {
    #[arg(long, default_value_t = 9)]
    pub max_len: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Swap in a known-broken lift to exercise failure reporting.
    #[arg(long, value_enum, hide = true)]
    pub mutant: Option<Mutant>,
}

#[derive(Debug, clap::Args)]
pub struct DumpArgs {
    #[arg(long)]
    pub k: usize,
    #[arg(long)]
    pub input: String,
    #[arg(long, value_enum, default_value_t = Stage::Ch)]
    pub stage: Stage,
}

#[derive(Debug, clap::Args)]
pub struct BenchArgs {
    /// Largest `n` (input length `n + 1`) to measure.
    #[arg(long, default_value_t = 9)]
    pub max_len: usize,
    #[arg(long, default_value = "modsum")]
    pub problem: String,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Io(#[from] io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Io(_) => EXIT_LAW_FAILURE,
        }
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

/// Runs one parsed command, writing its report to `out`.
pub fn execute(cli: &Cli, out: &mut dyn Write) -> Result<u8, CliError> {
    match &cli.command {
        Command::Run(args) => cmd_run(args, out),
        Command::Verify(args) => cmd_verify(args, out),
        Command::Dump(args) => cmd_dump(args, out),
        Command::Bench(args) => cmd_bench(args, out),
    }
}

fn find_problem(name: &str) -> Result<BuiltinProblem, CliError> {
    lookup(name).ok_or_else(|| usage(format!("unknown problem `{name}` (try trace, modsum, maxmin)")))
}

pub fn parse_input(kind: InputKind, raw: &str) -> Result<ProblemInput, CliError> {
    match kind {
        InputKind::Symbols => Ok(ProblemInput::Symbols(raw.to_string())),
        InputKind::Numbers => {
            if raw.trim().is_empty() {
                return Ok(ProblemInput::Numbers(Vec::new()));
            }
            raw.split(',')
                .map(|s| {
                    s.trim()
                        .parse::<u64>()
                        .map_err(|_| usage(format!("`{}` is not a non-negative integer", s.trim())))
                })
                .collect::<Result<Vec<_>, _>>()
                .map(ProblemInput::Numbers)
        }
    }
}

#[derive(Serialize)]
struct RunResult {
    value: Value,
    stats: RunStats,
}

fn cmd_run(args: &RunArgs, out: &mut dyn Write) -> Result<u8, CliError> {
    let problem = find_problem(&args.problem)?;
    let input = parse_input(problem.input_kind(), &args.input)?;
    let len = input.len();
    if len == 0 {
        return Err(usage("input is empty; the recurrence is defined on non-empty lists"));
    }
    if len > MAX_RUN_LEN {
        return Err(usage(format!("input length {len} exceeds {MAX_RUN_LEN}")));
    }
    if problem == BuiltinProblem::Trace && len > MAX_TRACE_LEN {
        return Err(usage(format!(
            "trace output is too large beyond length {MAX_TRACE_LEN}"
        )));
    }
    if args.algo != AlgoChoice::Bu && len > MAX_TOP_DOWN_LEN {
        return Err(usage(format!(
            "top-down evaluation is limited to inputs of length {MAX_TOP_DOWN_LEN}; use --algo bu"
        )));
    }

    let mut results = Vec::new();
    for &algo in args.algo.algorithms() {
        let (value, stats) = problem
            .run(algo, &input)
            .map_err(|e| usage(e.to_string()))?;
        results.push(RunResult { value, stats });
    }
    let verdict = match results.as_slice() {
        [a, b] => Some(if a.value == b.value { "EQUAL" } else { "DIFFER" }),
        _ => None,
    };

    match args.format {
        Format::Json => {
            let doc = json!({
                "problem": problem.name(),
                "input": input.to_string(),
                "results": results,
                "verdict": verdict,
            });
            writeln!(out, "{doc}")?;
        }
        Format::Text => {
            for r in &results {
                writeln!(out, "{}: {}", r.stats.algorithm.short_name(), r.value)?;
                writeln!(
                    out,
                    "  f_calls={} g_calls={} peak_level_tips={}",
                    r.stats.f_calls, r.stats.g_calls, r.stats.peak_level_tips
                )?;
            }
            if let Some(v) = verdict {
                writeln!(out, "verdict: {v}")?;
            }
        }
    }
    Ok(if verdict == Some("DIFFER") {
        EXIT_LAW_FAILURE
    } else {
        EXIT_OK
    })
}

fn cmd_verify(args: &VerifyArgs, out: &mut dyn Write) -> Result<u8, CliError> {
    if args.max_len == 0 || args.max_len > MAX_SWEEP_LEN {
        return Err(usage(format!(
            "--max-len must be between 1 and {MAX_SWEEP_LEN}"
        )));
    }
    let mut verifier = Verifier::new(args.max_len);
    if let Some(Mutant::UpClause4) = args.mutant {
        verifier = verifier.with_lift(verify::up_clause4_mutant::<Vec<char>>);
    }
    let report = verifier.run();
    match args.format {
        Format::Json => writeln!(out, "{}", serde_json::to_string(&report).expect("report"))?,
        Format::Text => write!(out, "{}", verify::render_text(&report))?,
    }
    Ok(if report.ok { EXIT_OK } else { EXIT_LAW_FAILURE })
}

fn cmd_dump(args: &DumpArgs, out: &mut dyn Write) -> Result<u8, CliError> {
    let xs: Vec<char> = args.input.chars().collect();
    let tree = ch(args.k, &xs).map_err(|e| usage(e.to_string()))?;
    let doc = match args.stage {
        Stage::Ch => treedoc::to_string(&words(&tree)),
        Stage::AfterUp => {
            if args.k == 0 || args.k >= xs.len() {
                return Err(usage(format!(
                    "--stage after-up needs 1 <= k < {}, got k = {}",
                    xs.len(),
                    args.k
                )));
            }
            let lifted = up(&tree).map_err(|e| usage(e.to_string()))?;
            treedoc::to_string(&word_groups(&lifted))
        }
    };
    writeln!(out, "{doc}")?;
    Ok(EXIT_OK)
}

fn cmd_bench(args: &BenchArgs, out: &mut dyn Write) -> Result<u8, CliError> {
    if args.max_len > MAX_BENCH_N {
        return Err(usage(format!(
            "--max-len {} exceeds {MAX_BENCH_N}; top-down cost grows factorially",
            args.max_len
        )));
    }
    let problem = find_problem(&args.problem)?;
    if problem == BuiltinProblem::Trace && args.max_len + 1 > MAX_TRACE_LEN {
        return Err(usage(format!(
            "trace output is too large beyond length {MAX_TRACE_LEN}"
        )));
    }
    writeln!(out, "{CSV_HEADER}")?;
    for n in 0..=args.max_len {
        let row = bench::measure(problem, n).map_err(|e| usage(e.to_string()))?;
        writeln!(out, "{}", row.to_csv())?;
    }
    Ok(EXIT_OK)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn exec(args: &[&str]) -> (Result<u8, CliError>, String) {
        let cli = Cli::try_parse_from(std::iter::once("sublists").chain(args.iter().copied()))
            .expect("arguments parse");
        let mut buf = Vec::new();
        let code = execute(&cli, &mut buf);
        (code, String::from_utf8(buf).unwrap())
    }

    #[test]
    fn run_both_agrees() {
        let (code, out) = exec(&["run", "--problem", "trace", "--input", "abc"]);
        assert_eq!(code.unwrap(), EXIT_OK);
        assert!(out.contains("td: ((ab)(ac)(bc))"));
        assert!(out.contains("bu: ((ab)(ac)(bc))"));
        assert!(out.contains("verdict: EQUAL"));
    }

    #[test]
    fn run_single_symbol_bottom_up() {
        let (code, out) = exec(&["run", "--problem", "trace", "--input", "a", "--algo", "bu"]);
        assert_eq!(code.unwrap(), EXIT_OK);
        assert!(out.starts_with("bu: a\n"));
        assert!(out.contains("g_calls=0"));
    }

    #[test]
    fn run_rejects_bad_inputs() {
        for args in [
            &["run", "--problem", "trace", "--input", ""][..],
            &["run", "--problem", "nope", "--input", "abc"],
            &["run", "--problem", "modsum", "--input", "1,x"],
            &["run", "--problem", "modsum", "--input", "1,2,3,4,5,6,7,8,9,10,11,12,13,14"],
        ] {
            let (code, _) = exec(args);
            assert_eq!(code.unwrap_err().exit_code(), EXIT_USAGE, "{args:?}");
        }
    }

    #[test]
    fn run_json_numbers() {
        let (code, out) = exec(&[
            "run", "--problem", "modsum", "--input", "1,2,3,4,5", "--format", "json",
        ]);
        assert_eq!(code.unwrap(), EXIT_OK);
        let doc: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(doc["verdict"], "EQUAL");
        assert_eq!(doc["results"][0]["value"], 11704);
        assert_eq!(doc["results"][0]["stats"]["g_calls"], 86);
        assert_eq!(doc["results"][1]["stats"]["g_calls"], 26);
    }

    #[test]
    fn dump_examples() {
        let (_, out) = exec(&["dump", "--k", "1", "--input", "yz"]);
        assert_eq!(out, "{\"node\":[{\"tip\":\"y\"},{\"tip\":\"z\"}]}\n");
        let (_, out) = exec(&["dump", "--k", "2", "--input", "ab"]);
        assert_eq!(out, "{\"tip\":\"ab\"}\n");
        let (code, _) = exec(&["dump", "--k", "3", "--input", "ab"]);
        assert_eq!(code.unwrap_err().exit_code(), EXIT_USAGE);
        let (code, _) = exec(&["dump", "--k", "2", "--input", "ab", "--stage", "after-up"]);
        assert_eq!(code.unwrap_err().exit_code(), EXIT_USAGE);
    }

    #[test]
    fn bench_guard() {
        let (code, _) = exec(&["bench", "--max-len", "13"]);
        assert_eq!(code.unwrap_err().exit_code(), EXIT_USAGE);
    }

    #[test]
    fn verify_bounds() {
        let (code, _) = exec(&["verify", "--max-len", "11"]);
        assert_eq!(code.unwrap_err().exit_code(), EXIT_USAGE);
        let (code, out) = exec(&["verify", "--max-len", "4", "--mutant", "up-clause4"]);
        assert_eq!(code.unwrap(), EXIT_LAW_FAILURE);
        assert!(out.contains("counterexample"));
    }
}
