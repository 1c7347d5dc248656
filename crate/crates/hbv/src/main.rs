//! `hbv`: runs the identity catalog, the special-function battery, the table
//! integrals, the arithmetic oracles and the limit checks, and reports the results.

mod output;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use hecke_bessel::arith::oracle_checks;
use hecke_bessel::engine::{catalog, limit_checks, run_suite, specfun_battery, EvalOptions};
use hecke_bessel::quad::run_table_integrals;
use output::{CheckLine, Emitter};
use std::process::ExitCode;

const MIN_TOL: f64 = 1e-12;
const MAX_TOL: f64 = 1e-2;
const MIN_TABLE_SIZE: usize = 64;

#[derive(Parser, Debug)]
#[command(name = "hbv", version, about = "Dual-side verification of Bessel-series identities")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the identity catalog.
    List(OutputArgs),
    /// Evaluate both sides of every matching identity at random in-box points.
    Run(RunArgs),
    /// Run the special-function invariant battery.
    SpecfunCheck(OutputArgs),
    /// Verify the four table integrals by quadrature.
    Integrals(IntegralArgs),
    /// Compare the fast arithmetic tables with brute-force generators.
    Oracle(OutputArgs),
    /// Extrapolate the alpha -> beta and nu -> -1 limits.
    Limits(OutputArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    JsonLines,
    Csv,
}

#[derive(Args, Debug)]
struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Write the report to this file instead of stdout.
    #[arg(long)]
    out: Option<std::path::PathBuf>,
}

#[derive(Args, Debug)]
struct SuiteArgs {
    /// Random parameter points per variant.
    #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u64).range(1..))]
    draws: u64,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Absolute tolerance on |lhs - rhs| beyond the certified error bounds.
    #[arg(long, default_value_t = 1e-7, value_parser = parse_tol)]
    tol: f64,
    /// Worker threads (a count or "auto"); HB_THREADS overrides it.
    #[arg(long, default_value = "auto", value_parser = parse_threads)]
    threads: Threads,
    /// Append per-case wall time in milliseconds (makes output run-dependent).
    #[arg(long)]
    timing: bool,
}

#[derive(Args, Debug)]
struct RunArgs {
    /// Glob over identity ids, e.g. 'TAU-*'.
    #[arg(long, default_value = "*")]
    filter: String,
    /// Length of the arithmetic coefficient tables.
    #[arg(long = "table-size", short = 'N', default_value_t = 4096, value_parser = parse_table_size)]
    table_size: usize,
    #[command(flatten)]
    suite: SuiteArgs,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args, Debug)]
struct IntegralArgs {
    #[command(flatten)]
    suite: SuiteArgs,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Clone, Copy, Debug)]
enum Threads {
    Auto,
    Count(usize),
}

/// Tolerances above the range are usage errors; tolerances below it are accepted and
/// fail wherever the certified error bounds cannot reach them.
fn parse_tol(s: &str) -> std::result::Result<f64, String> {
    let tol: f64 = s.parse().map_err(|e| format!("{e}"))?;
    if !(tol > 0.0 && tol <= MAX_TOL) {
        return Err(format!("tolerance must lie in (0, {MAX_TOL:e}]"));
    }
    Ok(tol)
}

fn parse_table_size(s: &str) -> std::result::Result<usize, String> {
    let n: usize = s.parse().map_err(|e| format!("{e}"))?;
    if n < MIN_TABLE_SIZE {
        return Err(format!("table size must be at least {MIN_TABLE_SIZE}"));
    }
    Ok(n)
}

fn parse_threads(s: &str) -> std::result::Result<Threads, String> {
    if s.eq_ignore_ascii_case("auto") {
        return Ok(Threads::Auto);
    }
    match s.parse::<usize>() {
        Ok(n) if n >= 1 => Ok(Threads::Count(n)),
        _ => Err("expected a positive integer or \"auto\"".into()),
    }
}

fn thread_pool(requested: Threads) -> Result<rayon::ThreadPool> {
    let threads = match std::env::var("HB_THREADS") {
        Ok(v) => parse_threads(v.trim()).map_err(anyhow::Error::msg).context("invalid HB_THREADS")?,
        Err(_) => requested,
    };
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Threads::Count(n) = threads {
        builder = builder.num_threads(n);
    }
    Ok(builder.build()?)
}

fn warn_below_range(tol: f64) {
    if tol < MIN_TOL {
        eprintln!("warning: tolerance {tol:e} is below {MIN_TOL:e}; cases whose error bounds exceed it will fail");
    }
}

fn execute(command: Command) -> Result<bool> {
    match command {
        Command::List(out) => {
            let entries = catalog();
            let mut em = Emitter::open(out.format, out.out.as_deref())?;
            em.catalog(&entries)?;
            em.finish()?;
            Ok(true)
        }
        Command::Run(args) => {
            let s = &args.suite;
            warn_below_range(s.tol);
            let opts = EvalOptions { table_size: args.table_size, ..Default::default() };
            let pool = thread_pool(s.threads)?;
            let reports = pool.install(|| run_suite(&args.filter, s.draws as usize, s.seed, s.tol, &opts));
            if reports.is_empty() {
                bail!("no catalog entry matches filter {:?}", args.filter);
            }
            let mut em = Emitter::open(args.output.format, args.output.out.as_deref())?;
            em.reports(&reports, s.timing)?;
            em.finish()?;
            Ok(output::diagnose_reports(&reports))
        }
        Command::Integrals(args) => {
            let s = &args.suite;
            warn_below_range(s.tol);
            let pool = thread_pool(s.threads)?;
            let reports = pool.install(|| run_table_integrals(s.draws as usize, s.seed, s.tol));
            let mut em = Emitter::open(args.output.format, args.output.out.as_deref())?;
            em.reports(&reports, s.timing)?;
            em.finish()?;
            Ok(output::diagnose_reports(&reports))
        }
        Command::SpecfunCheck(out) => {
            let checks = specfun_battery();
            emit_checks(&out, &checks, checks.iter().map(CheckLine::from).collect())
        }
        Command::Oracle(out) => {
            let checks = oracle_checks();
            emit_checks(&out, &checks, checks.iter().map(CheckLine::from).collect())
        }
        Command::Limits(out) => {
            let checks = limit_checks();
            emit_checks(&out, &checks, checks.iter().map(CheckLine::from).collect())
        }
    }
}

fn emit_checks<T: serde::Serialize>(out: &OutputArgs, raw: &[T], lines: Vec<CheckLine>) -> Result<bool> {
    let mut em = Emitter::open(out.format, out.out.as_deref())?;
    em.checks(raw, &lines)?;
    em.finish()?;
    Ok(output::diagnose_checks(&lines))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(2),
            };
        }
    };
    match execute(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
