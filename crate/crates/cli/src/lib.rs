//! The `supercong` command line: `verify` runs a case suite over a prime
//! range and writes a report; `coeffs` dumps eta-product coefficients.

pub mod report;

use std::collections::BTreeMap;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use supercong_core::exact::is_prime;
use supercong_core::harness::{run_suite, CaseKind, CaseRegistry, Context, SuitePlan, VerificationRecord};
use supercong_core::modular::{eta_product_expansion, DEFAULT_BUDGET};

use report::{entries, render, Format};

/// Environment variable overriding the eta-expansion budget.
pub const BUDGET_VAR: &str = "SUPERCONG_BUDGET";

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_IO: i32 = 3;

const DEFAULT_PMIN: u64 = 5;
const DEFAULT_PMAX: u64 = 97;

#[derive(Debug, Parser)]
#[command(name = "supercong", version, about = "Prime-by-prime verification of hypergeometric supercongruences")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run cases over a prime range and write a report.
    Verify(VerifyArgs),
    /// Print `n a_n` for the eta-product coefficients up to a bound.
    Coeffs(CoeffsArgs),
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Comma-separated case names, or `all`.
    #[arg(long, value_delimiter = ',', default_value = "all")]
    pub cases: Vec<String>,
    #[arg(long)]
    pub pmin: Option<u64>,
    #[arg(long)]
    pub pmax: Option<u64>,
    /// r-parameterized cases run for every `r` in `1..=R`.
    #[arg(long = "r", default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
    pub r: u32,
    /// Report path; the report goes to stdout when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct CoeffsArgs {
    #[arg(long)]
    pub n: i64,
    #[arg(long)]
    pub primes_only: bool,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// 1 if any non-conjectural record failed, else 0.
pub fn exit_code(records: &[VerificationRecord]) -> i32 {
    if records.iter().any(|r| !r.pass && !r.conjectural) {
        EXIT_FAILED
    } else {
        EXIT_OK
    }
}

/// Budget from `SUPERCONG_BUDGET`, falling back to the default.
pub fn budget_from_env() -> Result<u64, String> {
    match std::env::var(BUDGET_VAR) {
        Ok(v) => v.trim().parse().map_err(|_| format!("{BUDGET_VAR} must be a nonnegative integer, got {v:?}")),
        Err(std::env::VarError::NotPresent) => Ok(DEFAULT_BUDGET),
        Err(e) => Err(format!("{BUDGET_VAR}: {e}")),
    }
}

/// `kind: N records, P passed, F failed (C conjectural)` per case class.
pub fn summary_lines(registry: &CaseRegistry, records: &[VerificationRecord]) -> Vec<String> {
    let mut tally: BTreeMap<&'static str, [usize; 4]> = BTreeMap::new();
    for r in records {
        let kind = registry.get(&r.case).map(|c| c.kind()).unwrap_or(CaseKind::Exact);
        let kind = match kind {
            CaseKind::Congruence => "congruence",
            CaseKind::Exact => "exact",
            CaseKind::Series => "series",
        };
        let t = tally.entry(kind).or_default();
        t[0] += 1;
        t[if r.pass { 1 } else { 2 }] += 1;
        t[3] += usize::from(r.conjectural);
    }
    tally
        .into_iter()
        .map(|(kind, [n, ok, bad, conj])| {
            format!("{kind}: {n} records, {ok} passed, {bad} failed ({conj} conjectural)")
        })
        .collect()
}

fn write_output(out: Option<&PathBuf>, text: &str) -> io::Result<()> {
    match out {
        Some(path) => std::fs::write(path, text),
        None => io::stdout().lock().write_all(text.as_bytes()),
    }
}

pub fn cmd_verify(args: &VerifyArgs) -> i32 {
    if let (Some(lo), Some(hi)) = (args.pmin, args.pmax) {
        if lo > hi {
            eprintln!("error: --pmin {lo} exceeds --pmax {hi}");
            return EXIT_USAGE;
        }
    }
    let budget = match budget_from_env() {
        Ok(b) => b,
        Err(msg) => {
            eprintln!("error: {msg}");
            return EXIT_USAGE;
        }
    };
    let registry = CaseRegistry::standard();
    let cases = match registry.select(&args.cases) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}; known cases: {}", registry.names().join(", "));
            return EXIT_USAGE;
        }
    };
    let (lo, hi) = (args.pmin.unwrap_or(DEFAULT_PMIN), args.pmax.unwrap_or(DEFAULT_PMAX));
    let plan = SuitePlan::up_to_r(args.r);
    let records = run_suite(&cases, lo..=hi, &plan, &Context::new(budget));
    if records.is_empty() {
        eprintln!("warning: no applicable cases for primes in {lo}..={hi}");
    }
    let text = match render(&entries(&records), args.format) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_IO;
        }
    };
    if let Err(e) = write_output(args.out.as_ref(), &text) {
        eprintln!("error: cannot write report: {e}");
        return EXIT_IO;
    }
    for line in summary_lines(&registry, &records) {
        if args.out.is_some() {
            println!("{line}");
        } else {
            eprintln!("{line}");
        }
    }
    exit_code(&records)
}

pub fn cmd_coeffs(args: &CoeffsArgs) -> i32 {
    if args.n < 1 {
        eprintln!("error: --n must be at least 1");
        return EXIT_USAGE;
    }
    let n = args.n as u64;
    let expansion = match eta_product_expansion(n) {
        Ok(e) => e,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_USAGE;
        }
    };
    let mut text = String::new();
    for (i, a) in expansion.iter() {
        if !args.primes_only || is_prime(i) {
            text.push_str(&format!("{i} {a}\n"));
        }
    }
    match write_output(args.out.as_ref(), &text) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            eprintln!("error: cannot write coefficients: {e}");
            EXIT_IO
        }
    }
}

/// Parses `argv` and dispatches; returns the process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    match &cli.command {
        Command::Verify(a) => cmd_verify(a),
        Command::Coeffs(a) => cmd_coeffs(a),
    }
}
