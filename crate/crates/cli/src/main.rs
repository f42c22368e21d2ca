//! Command-line front end for batch verification runs.
//!
//! Exit codes: 0 when every check passes, 1 when any check fails, 2 on
//! usage or configuration errors.

mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use report::{ConfigEcho, Report};

#[derive(Parser)]
#[command(
    name = "qc-cartan",
    version,
    about = "Exact verification of the qc Cartan-connection exterior differential system"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Full involutivity analysis: counts, characters, nullity, Cartan test.
    Analyze(CommonArgs),
    /// Targeted verification of one part of the construction.
    Verify {
        #[command(subcommand)]
        target: Target,
    },
    /// Dump the generated system (catalog, bases, derivation table) as text.
    Dump(CommonArgs),
}

#[derive(Subcommand)]
enum Target {
    /// Covariant-derivative parameterization annihilates the three-forms.
    Bianchi(CommonArgs),
    /// d² of every structure equation, with a corruption negative control.
    Dsquared(CommonArgs),
    /// Shift invariance of the three-form set under seeded constants.
    Shift(CommonArgs),
    /// Circulant nondegeneracy for a range of ranks.
    Circulant(CommonArgs),
    /// Closed-form counts and their internal identities.
    Counts(CommonArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Args, Clone)]
struct CommonArgs {
    /// Rank n, or an inclusive range like 1..200.
    #[arg(long, value_parser = parse_range)]
    n: NRange,

    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Seed for the randomized checks.
    #[arg(long, default_value_t = 0)]
    seed: u64,

    /// Worker threads (0 = automatic).
    #[arg(long, default_value_t = 0)]
    jobs: usize,

    /// Write the report to this path instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,

    /// Include wall-clock timings in the JSON report (off by default so
    /// identical configurations serialize byte-identically).
    #[arg(long)]
    timings: bool,
}

#[derive(Clone, Debug)]
struct NRange(Vec<u16>);

fn parse_range(s: &str) -> Result<NRange, String> {
    let parse_one = |t: &str| -> Result<u16, String> {
        let v: u16 = t.parse().map_err(|_| format!("invalid rank value `{t}`"))?;
        if v == 0 {
            return Err("rank must be at least 1".into());
        }
        Ok(v)
    };
    if let Some((a, b)) = s.split_once("..") {
        let (lo, hi) = (parse_one(a)?, parse_one(b)?);
        if lo > hi {
            return Err(format!("empty range {lo}..{hi}"));
        }
        Ok(NRange((lo..=hi).collect()))
    } else {
        Ok(NRange(vec![parse_one(s)?]))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Cmd::Dump(a) = &cli.cmd {
        let mut body = String::new();
        for &n in &a.n.0 {
            body.push_str(&qc_cartan_core::qc::build_system(n).dump());
        }
        return match &a.out {
            Some(path) => match std::fs::write(path, &body) {
                Ok(()) => ExitCode::SUCCESS,
                Err(e) => {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    ExitCode::from(2)
                }
            },
            None => {
                print!("{body}");
                ExitCode::SUCCESS
            }
        };
    }
    let (name, args, checks) = match &cli.cmd {
        Cmd::Analyze(a) => (
            "analyze",
            a.clone(),
            run_per_n(a, commands::analyze_checks_seeded),
        ),
        Cmd::Verify { target } => match target {
            Target::Bianchi(a) => (
                "verify:bianchi",
                a.clone(),
                run_per_n(a, commands::bianchi_checks),
            ),
            Target::Dsquared(a) => (
                "verify:dsquared",
                a.clone(),
                run_per_n(a, |n, _| commands::dsquared_checks(n)),
            ),
            Target::Shift(a) => (
                "verify:shift",
                a.clone(),
                run_per_n(a, commands::shift_checks),
            ),
            Target::Circulant(a) => {
                configure_pool(a.jobs);
                (
                    "verify:circulant",
                    a.clone(),
                    commands::circulant_checks(&a.n.0),
                )
            }
            Target::Counts(a) => (
                "verify:counts",
                a.clone(),
                run_per_n(a, |n, _| commands::counts_checks(n)),
            ),
        },
        Cmd::Dump(_) => unreachable!("handled above"),
    };

    let config = ConfigEcho {
        command: name.into(),
        n: args.n.0.clone(),
        format: format!("{:?}", args.format).to_lowercase(),
        seed: args.seed,
        jobs: args.jobs,
    };
    let report = Report::new(config, checks, args.timings);
    let rendered = match args.format {
        Format::Json => report.to_json(),
        Format::Text => report.to_text(),
    };
    if let Some(path) = &args.out {
        if let Err(e) = std::fs::write(path, &rendered) {
            eprintln!("error: cannot write {}: {e}", path.display());
            return ExitCode::from(2);
        }
    } else {
        print!("{rendered}");
    }
    if report.any_fail() {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}

fn configure_pool(jobs: usize) {
    if jobs > 0 {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global();
    }
}

fn run_per_n(
    args: &CommonArgs,
    f: impl Fn(u16, u64) -> Vec<report::CheckRecord>,
) -> Vec<report::CheckRecord> {
    configure_pool(args.jobs);
    args.n.0.iter().flat_map(|&n| f(n, args.seed)).collect()
}
