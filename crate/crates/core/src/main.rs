//! `urd` command-line tool.
//!
//! Exit codes: 0 success / FOUND / passed, 1 verification failed or search
//! exhausted, 2 bad flags or unreadable input, 3 inadmissible or invalid
//! request, 4 admissible but not reached by the construction, 5 internal
//! construction failure, 6 search budget exceeded.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};

use urd_core::admissibility::{admissible_pairs, check_pair, CoverageStatus};
use urd_core::assembler::{construct, BuildRequest};
use urd_core::format::{from_json, to_json, to_text};
use urd_core::search::{exhaustive_urd, SearchBudget, SearchStatus};
use urd_core::verifier::verify;
use urd_core::{Decomposition, UrdError};

const EXIT_OK: u8 = 0;
const EXIT_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_INADMISSIBLE: u8 = 3;
const EXIT_UNRESOLVED: u8 = 4;
const EXIT_INTERNAL: u8 = 5;
const EXIT_BUDGET: u8 = 6;

#[derive(Parser)]
#[command(
    name = "urd",
    version,
    about = "Uniformly resolvable decompositions of K_v into 1-factors and n-star factors"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List admissible (r, s) pairs, or classify one pair.
    Check(CheckArgs),
    /// Construct a decomposition and write it out.
    Build(BuildArgs),
    /// Audit a decomposition file.
    Verify(VerifyArgs),
    /// Backtracking search for a decomposition.
    Search(SearchArgs),
}

#[derive(Args)]
struct CheckArgs {
    #[arg(long)]
    v: usize,
    #[arg(long)]
    n: usize,
    #[arg(long, requires = "s")]
    r: Option<usize>,
    #[arg(long, requires = "r")]
    s: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Args)]
struct BuildArgs {
    #[arg(long)]
    v: usize,
    #[arg(long)]
    n: usize,
    #[arg(long, conflicts_with_all = ["r", "s"], required_unless_present = "r")]
    ell: Option<usize>,
    #[arg(long, requires = "s")]
    r: Option<usize>,
    #[arg(long, requires = "r")]
    s: Option<usize>,
    /// Output file; standard output when absent.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long = "in")]
    input: PathBuf,
}

#[derive(Args)]
struct SearchArgs {
    #[arg(long)]
    v: usize,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    r: usize,
    #[arg(long)]
    s: usize,
    #[arg(long)]
    max_nodes: Option<u64>,
    /// Time limit in seconds.
    #[arg(long)]
    timeout: Option<f64>,
    /// Where to write the witness (JSON) when one is found.
    #[arg(long)]
    out: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { EXIT_OK });
        }
    };
    ExitCode::from(match cli.command {
        Command::Check(a) => check(a),
        Command::Build(a) => build(a),
        Command::Verify(a) => verify_file(a),
        Command::Search(a) => search(a),
    })
}

fn usage(msg: impl std::fmt::Display) -> u8 {
    eprintln!("error: {msg}");
    EXIT_USAGE
}

fn check_n(n: usize) -> Result<(), u8> {
    if n < 3 || n.is_multiple_of(2) {
        return Err(usage(format!("n = {n} must be an odd integer >= 3")));
    }
    Ok(())
}

fn check(a: CheckArgs) -> u8 {
    if let Err(code) = check_n(a.n) {
        return code;
    }
    if a.v == 0 {
        return usage("v must be positive");
    }
    match (a.r, a.s) {
        (Some(r), Some(s)) => {
            let verdict = match check_pair(a.v, a.n, r, s) {
                Ok(v) => v,
                Err(e) => return usage(e),
            };
            println!("v={} n={} r={r} s={s}: {verdict}", a.v, a.n);
            match verdict.status {
                CoverageStatus::Constructive => EXIT_OK,
                CoverageStatus::Inadmissible => EXIT_INADMISSIBLE,
                CoverageStatus::AdmissibleUnresolved => EXIT_UNRESOLVED,
            }
        }
        _ => {
            let pairs = match admissible_pairs(a.v, a.n) {
                Ok(p) => p,
                Err(e) => return usage(e),
            };
            println!("{:>6} {:>6} {:>4}  verdict", "r", "s", "x");
            for p in pairs {
                let verdict = check_pair(a.v, a.n, p.r, p.s).expect("n already validated");
                let ell = verdict.ell.map(|l| format!(" ell={l}")).unwrap_or_default();
                println!("{:>6} {:>6} {:>4}  {}{ell}", p.r, p.s, p.x, verdict.status);
            }
            EXIT_OK
        }
    }
}

/// Writes the whole payload or nothing.
fn emit(out: Option<&Path>, payload: &str) -> Result<(), String> {
    match out {
        None => {
            print!("{payload}");
            Ok(())
        }
        Some(path) => {
            let tmp = path.with_extension("partial");
            fs::write(&tmp, payload)
                .and_then(|_| fs::rename(&tmp, path))
                .map_err(|e| {
                    let _ = fs::remove_file(&tmp);
                    format!("cannot write {}: {e}", path.display())
                })
        }
    }
}

fn build(a: BuildArgs) -> u8 {
    if let Err(code) = check_n(a.n) {
        return code;
    }
    let result = match (a.ell, a.r, a.s) {
        (Some(ell), _, _) => construct(&BuildRequest::new(a.v, a.n, ell)),
        (None, Some(r), Some(s)) => urd_core::assembler::construct_pair(a.v, a.n, r, s),
        _ => return usage("give --ell or both --r and --s"),
    };
    let d = match result {
        Ok(d) => d,
        Err(e @ UrdError::Construction { .. }) => {
            eprintln!("error: {e}");
            return EXIT_INTERNAL;
        }
        Err(UrdError::Rejected(verdict))
            if verdict.status == CoverageStatus::AdmissibleUnresolved =>
        {
            eprintln!("error: {verdict}");
            return EXIT_UNRESOLVED;
        }
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_INADMISSIBLE;
        }
    };
    let report = verify(&d);
    if !report.passed {
        eprintln!("error: constructed decomposition failed verification");
        for v in &report.violations {
            eprintln!("{v}");
        }
        return EXIT_INTERNAL;
    }
    let payload = match a.format {
        Format::Json => to_json(&d) + "\n",
        Format::Text => to_text(&d),
    };
    if let Err(e) = emit(a.out.as_deref(), &payload) {
        eprintln!("error: {e}");
        return EXIT_INTERNAL;
    }
    if a.out.is_some() {
        eprintln!(
            "wrote v={} n={} r={} s={} ({} classes)",
            d.params().v(),
            d.params().n(),
            d.r(),
            d.s(),
            d.classes().len()
        );
    }
    EXIT_OK
}

fn verify_file(a: VerifyArgs) -> u8 {
    let text = match fs::read_to_string(&a.input) {
        Ok(t) => t,
        Err(e) => return usage(format!("cannot read {}: {e}", a.input.display())),
    };
    let d: Decomposition = match from_json(&text) {
        Ok(d) => d,
        Err(e) => return usage(e),
    };
    let report = verify(&d);
    if report.passed {
        println!("PASSED");
        EXIT_OK
    } else {
        println!("FAILED");
        for v in &report.violations {
            println!("{v}");
        }
        EXIT_FAILED
    }
}

fn search(a: SearchArgs) -> u8 {
    if let Err(code) = check_n(a.n) {
        return code;
    }
    let timeout = match a.timeout {
        Some(t) if !(t.is_finite() && t >= 0.0) => {
            return usage("timeout must be a nonnegative number")
        }
        Some(t) => Some(Duration::from_secs_f64(t)),
        None => None,
    };
    let budget = SearchBudget {
        max_nodes: a.max_nodes,
        timeout,
    };
    let outcome = match exhaustive_urd(a.v, a.n, a.r, a.s, budget) {
        Ok(o) => o,
        Err(e) => return usage(e),
    };
    println!("status: {}", outcome.status);
    println!("nodes: {}", outcome.nodes_explored);
    println!("elapsed: {:.3}s", outcome.elapsed.as_secs_f64());
    if let Some(reason) = &outcome.reason {
        println!("reason: {reason}");
    }
    match outcome.status {
        SearchStatus::Found => {
            let witness = outcome.witness.as_ref().expect("found carries a witness");
            if let Some(path) = &a.out {
                if let Err(e) = emit(Some(path), &(to_json(witness) + "\n")) {
                    eprintln!("error: {e}");
                    return EXIT_INTERNAL;
                }
                println!("witness: {}", path.display());
            }
            EXIT_OK
        }
        SearchStatus::NotFoundExhausted => EXIT_FAILED,
        SearchStatus::BudgetExceeded => EXIT_BUDGET,
    }
}
