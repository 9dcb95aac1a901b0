//! Command-line front end.
//!
//! [`run`] takes the full argument vector and returns the exit status with
//! the captured stdout and stderr, so the binary is a thin wrapper and tests
//! can drive the CLI in-process.
//!
//! Exit status: 0 success, 1 usage error, 2 parse or validation error,
//! 3 guard violation (brute-force limits or table budget).

mod parse;

use std::fmt::Write as _;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

pub use parse::{parse_family, parse_graph, parse_weighted_family, ParseError};

use crate::disjoint_sum::{disjoint_sum_counted, OpCounter};
use crate::error::CountError;
use crate::packings::{count_packings, PackingAlgo, UniformSetFamily};
use crate::par::with_threads;
use crate::paths::{count_paths, Graph, PathAlgo};
use crate::{CountValue, Measured};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_GUARD: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "pathpack", version, about = "Exact counts of k-edge paths and m-set k-packings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Count k-edge simple paths in a graph.
    Paths(PathsArgs),
    /// Count k-packings in a uniform set family.
    Packings(PackingsArgs),
    /// Evaluate Σ α(A)·β(B) over disjoint pairs of two weighted families.
    DisjointSum(DisjointSumArgs),
}

#[derive(Debug, Args)]
struct Common {
    /// Number of parts (edges or packed sets).
    #[arg(long)]
    k: usize,
    /// Print a key=value report after the count.
    #[arg(long)]
    stats: bool,
    /// Worker threads.
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..))]
    threads: u16,
}

#[derive(Debug, Args)]
#[command(group(clap::ArgGroup::new("input").required(true).args(["graph", "demo"])))]
struct PathsArgs {
    /// Graph file: header "n edges", then one "u v" pair per line.
    #[arg(long)]
    graph: Option<PathBuf>,
    /// Built-in graph: complete:N, path:N or cycle:N.
    #[arg(long)]
    demo: Option<String>,
    #[arg(long, default_value = "mitm", value_parser = parse_path_algo)]
    algo: PathAlgo,
    #[command(flatten)]
    common: Common,
}

#[derive(Debug, Args)]
#[command(group(clap::ArgGroup::new("input").required(true).args(["family", "demo"])))]
struct PackingsArgs {
    /// Family file: header "n m f", then f lines of m elements.
    #[arg(long)]
    family: Option<PathBuf>,
    /// Built-in family of all M-subsets of N elements: complete:N:M.
    #[arg(long)]
    demo: Option<String>,
    #[arg(long, default_value = "mitm", value_parser = parse_packing_algo)]
    algo: PackingAlgo,
    #[command(flatten)]
    common: Common,
}

#[derive(Debug, Args)]
struct DisjointSumArgs {
    /// Weighted family file: header "n", then lines "weight s e1 ... es".
    #[arg(long)]
    alpha: PathBuf,
    #[arg(long)]
    beta: PathBuf,
    #[arg(long)]
    stats: bool,
}

fn parse_path_algo(s: &str) -> Result<PathAlgo, String> {
    s.parse()
}

fn parse_packing_algo(s: &str) -> Result<PackingAlgo, String> {
    s.parse()
}

/// Outcome of one CLI invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliOutput {
    pub status: i32,
    pub stdout: String,
    pub stderr: String,
}

impl CliOutput {
    fn failure(status: i32, message: impl std::fmt::Display) -> Self {
        CliOutput {
            status,
            stdout: String::new(),
            stderr: format!("error: {message}\n"),
        }
    }
}

/// Everything `--stats` reports about a run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunReport {
    pub problem: &'static str,
    pub algo: String,
    pub n: usize,
    pub k: Option<usize>,
    pub m: Option<usize>,
    pub count: CountValue,
    pub elapsed_millis: u128,
    pub ring_ops: u64,
    pub peak_table_entries: u64,
}

impl RunReport {
    /// One `key=value` line per field, in a fixed order.
    pub fn to_stats_text(&self) -> String {
        let opt = |v: Option<usize>| v.map_or_else(|| "none".to_string(), |x| x.to_string());
        let mut out = String::new();
        let _ = writeln!(out, "problem={}", self.problem);
        let _ = writeln!(out, "algo={}", self.algo);
        let _ = writeln!(out, "n={}", self.n);
        let _ = writeln!(out, "k={}", opt(self.k));
        let _ = writeln!(out, "m={}", opt(self.m));
        let _ = writeln!(out, "count={}", self.count);
        let _ = writeln!(out, "elapsedMillis={}", self.elapsed_millis);
        let _ = writeln!(out, "ringOps={}", self.ring_ops);
        let _ = writeln!(out, "peakTableEntries={}", self.peak_table_entries);
        out
    }
}

enum Failure {
    Invalid(String),
    Guard(String),
}

impl From<CountError> for Failure {
    fn from(e: CountError) -> Self {
        match e {
            CountError::GuardExceeded(_) | CountError::OverBudget { .. } => Failure::Guard(e.to_string()),
            other => Failure::Invalid(other.to_string()),
        }
    }
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Self {
        Failure::Invalid(e.to_string())
    }
}

fn read(path: &PathBuf) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Invalid(format!("{}: {e}", path.display())))
}

fn demo_parts(spec: &str) -> Result<(&str, Vec<usize>), Failure> {
    let bad = || Failure::Invalid(format!("unrecognised demo '{spec}'"));
    let mut it = spec.split(':');
    let kind = it.next().ok_or_else(bad)?;
    let nums = it.map(|t| t.parse().map_err(|_| bad())).collect::<Result<Vec<usize>, _>>()?;
    Ok((kind, nums))
}

fn demo_graph(spec: &str) -> Result<Graph, Failure> {
    let (kind, nums) = demo_parts(spec)?;
    let g = match (kind, nums.as_slice()) {
        ("complete", &[n]) => Graph::complete(n),
        ("path", &[n]) => Graph::path(n),
        ("cycle", &[n]) => Graph::cycle(n),
        _ => {
            return Err(Failure::Invalid(format!(
                "unrecognised demo '{spec}' (expected complete:N, path:N or cycle:N)"
            )))
        }
    };
    Ok(g?)
}

fn demo_family(spec: &str) -> Result<UniformSetFamily, Failure> {
    match demo_parts(spec)? {
        ("complete", nums) if nums.len() == 2 => Ok(UniformSetFamily::complete(nums[0], nums[1])?),
        _ => Err(Failure::Invalid(format!(
            "unrecognised demo '{spec}' (expected complete:N:M)"
        ))),
    }
}

fn timed<F: FnOnce() -> crate::Result<Measured>>(f: F) -> Result<(Measured, u128), Failure> {
    let start = Instant::now();
    let m = f()?;
    Ok((m, start.elapsed().as_millis()))
}

fn run_paths(a: &PathsArgs) -> Result<RunReport, Failure> {
    let g = match (&a.graph, &a.demo) {
        (Some(p), _) => parse_graph(&read(p)?)?,
        (None, Some(d)) => demo_graph(d)?,
        (None, None) => unreachable!("clap enforces one input"),
    };
    let k = a.common.k;
    let (m, elapsed) = timed(|| with_threads(a.common.threads.into(), || count_paths(&g, k, a.algo)))?;
    Ok(RunReport {
        problem: "paths",
        algo: a.algo.name().to_string(),
        n: g.n(),
        k: Some(k),
        m: None,
        count: m.count,
        elapsed_millis: elapsed,
        ring_ops: m.ops.ring_ops,
        peak_table_entries: m.peak_table_entries,
    })
}

fn run_packings(a: &PackingsArgs) -> Result<RunReport, Failure> {
    let fam = match (&a.family, &a.demo) {
        (Some(p), _) => parse_family(&read(p)?)?,
        (None, Some(d)) => demo_family(d)?,
        (None, None) => unreachable!("clap enforces one input"),
    };
    let k = a.common.k;
    let (m, elapsed) =
        timed(|| with_threads(a.common.threads.into(), || count_packings(&fam, k, a.algo)))?;
    Ok(RunReport {
        problem: "packings",
        algo: a.algo.name().to_string(),
        n: fam.universe().len(),
        k: Some(k),
        m: Some(fam.member_size()),
        count: m.count,
        elapsed_millis: elapsed,
        ring_ops: m.ops.ring_ops,
        peak_table_entries: m.peak_table_entries,
    })
}

fn run_disjoint_sum(a: &DisjointSumArgs) -> Result<RunReport, Failure> {
    let alpha = parse_weighted_family(&read(&a.alpha)?)?;
    let beta = parse_weighted_family(&read(&a.beta)?)?;
    let (m, elapsed) = timed(|| {
        let mut ops = OpCounter::new();
        let (count, peak) = disjoint_sum_counted(
            &alpha,
            &beta,
            alpha.max_member_size(),
            beta.max_member_size(),
            &mut ops,
        )?;
        Ok(Measured {
            count,
            ops,
            peak_table_entries: peak,
        })
    })?;
    Ok(RunReport {
        problem: "disjoint-sum",
        algo: "trimmed".to_string(),
        n: alpha.universe().len(),
        k: None,
        m: None,
        count: m.count,
        elapsed_millis: elapsed,
        ring_ops: m.ops.ring_ops,
        peak_table_entries: m.peak_table_entries,
    })
}

/// Runs the CLI on `argv` (including the program name).
pub fn run<I, T>(argv: I) -> CliOutput
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                CliOutput {
                    status: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                CliOutput {
                    status: EXIT_OK,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    let (result, stats) = match &cli.command {
        Command::Paths(a) => (run_paths(a), a.common.stats),
        Command::Packings(a) => (run_packings(a), a.common.stats),
        Command::DisjointSum(a) => (run_disjoint_sum(a), a.stats),
    };
    match result {
        Ok(report) => {
            let mut stdout = format!("{}\n", report.count);
            if stats {
                stdout.push_str(&report.to_stats_text());
            }
            CliOutput {
                status: EXIT_OK,
                stdout,
                stderr: String::new(),
            }
        }
        Err(Failure::Invalid(msg)) => CliOutput::failure(EXIT_INVALID, msg),
        Err(Failure::Guard(msg)) => CliOutput::failure(EXIT_GUARD, msg),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn go(args: &str) -> CliOutput {
        run(std::iter::once("pathpack").chain(args.split_whitespace()))
    }

    #[test]
    fn demo_counts() {
        assert_eq!(go("paths --demo path:3 --k 2 --algo mitm").stdout, "1\n");
        assert_eq!(go("paths --demo complete:4 --k 2").stdout, "12\n");
        assert_eq!(go("packings --demo complete:4:2 --k 2 --algo mitm-lowmem").stdout, "3\n");
    }

    #[test]
    fn exit_codes() {
        assert_eq!(go("paths --demo path:3 --k 5 --algo dp").status, EXIT_INVALID);
        assert_eq!(go("paths --k 2").status, EXIT_USAGE);
        assert_eq!(go("paths --demo path:3 --k 2 --algo fast").status, EXIT_USAGE);
        assert_eq!(go("frobnicate").status, EXIT_USAGE);
        assert_eq!(go("paths --demo star:3 --k 1").status, EXIT_INVALID);
        assert_eq!(go("paths --demo complete:20 --k 3 --algo brute").status, EXIT_GUARD);
        assert_eq!(go("--help").status, EXIT_OK);
    }

    #[test]
    fn stats_block() {
        let out = go("packings --demo complete:6:2 --k 3 --stats --algo dp");
        let lines: Vec<&str> = out.stdout.lines().collect();
        assert_eq!(lines[0], "15");
        let keys: Vec<&str> = lines[1..].iter().map(|l| l.split('=').next().unwrap()).collect();
        assert_eq!(
            keys,
            ["problem", "algo", "n", "k", "m", "count", "elapsedMillis", "ringOps", "peakTableEntries"]
        );
        assert!(lines.contains(&"m=2"));
        assert!(lines.contains(&"count=15"));
    }
}
