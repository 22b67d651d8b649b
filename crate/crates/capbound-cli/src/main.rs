//! capbound: bounds, tables, tuple counts, verification suites and witness
//! searches for m-general sets (generalized caps) in AG(n,q).
//!
//! Exit codes: 0 success, 1 usage or parameter error (and failed
//! verification checks), 2 parity-unsupported parameters (q even with m
//! odd), 3 budget or space limit hit on an operation that needs exactness.

mod output;
mod pointset_io;

use std::path::PathBuf;
use std::process::ExitCode;

use capbound::search::DEFAULT_NODE_BUDGET;
use capbound::{
    asymptotic_table, greedy_m_general, lambda_exact, max_m_general_exact, mu_table, run_suite,
    theorem_bound, BoundError, GeometryError, LambdaQuery, SearchError,
};
use clap::error::ErrorKind;
use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Style {
    Exact,
    Asymptotic,
}

#[derive(Args)]
struct OutOpts {
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write output to this file instead of stdout
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Parser)]
#[command(
    name = "capbound",
    version,
    about = "Bounds and searches for m-general sets (generalized caps) in AG(n,q)"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Evaluate the upper bound 2m + m*h_min^n on m-general sets in AG(n,q)
    Bound {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        q: u32,
        #[arg(long)]
        m: u32,
        #[command(flatten)]
        out: OutOpts,
    },
    /// Growth-exponent table over an (m, q) grid
    Table {
        /// m values, e.g. "3..8" or "3,4,6"
        #[arg(long, default_value = "3..8")]
        ms: String,
        /// q values (prime powers), e.g. "2,3,4,5,7,8,9,11"
        #[arg(long, default_value = "2,3,4,5,7,8,9,11")]
        qs: String,
        #[arg(long, value_enum, default_value_t = Style::Exact)]
        style: Style,
        #[command(flatten)]
        out: OutOpts,
    },
    /// Count alpha-tuples over {0..beta} with sum at most gamma, exactly
    Lambda {
        #[arg(long)]
        alpha: u64,
        #[arg(long)]
        beta: u64,
        #[arg(long)]
        gamma: u64,
        #[command(flatten)]
        out: OutOpts,
    },
    /// Search for large m-general sets (exact backtracking or seeded greedy)
    #[command(group(ArgGroup::new("mode").required(true).args(["exact", "greedy"])))]
    Search {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        q: u32,
        #[arg(long)]
        m: u32,
        /// Exhaustive backtracking (spaces of at most 128 points)
        #[arg(long)]
        exact: bool,
        /// Seeded greedy growth over shuffled point orders
        #[arg(long)]
        greedy: bool,
        /// Seed for the greedy point shuffles
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Greedy restarts
        #[arg(long, default_value_t = 20)]
        restarts: u32,
        /// Node budget for exact search (default CAPBOUND_BUDGET or 50000000)
        #[arg(long)]
        budget: Option<u64>,
        /// Also write the witness in the point-set file format
        #[arg(long)]
        witness_out: Option<PathBuf>,
        #[command(flatten)]
        out: OutOpts,
    },
    /// Run a named verification suite
    Verify {
        /// One of: fields, indicators, char2, lambda, analysis, all
        #[arg(long)]
        suite: String,
        /// Cap on tuple sweeps (default CAPBOUND_BUDGET or the library cap)
        #[arg(long)]
        budget: Option<u64>,
        #[command(flatten)]
        out: OutOpts,
    },
}

struct CmdError {
    code: u8,
    msg: String,
}

impl CmdError {
    fn usage(msg: impl Into<String>) -> CmdError {
        CmdError {
            code: 1,
            msg: msg.into(),
        }
    }
}

fn bound_error(e: BoundError) -> CmdError {
    let code = match e {
        BoundError::ParityUnsupported { .. } => 2,
        _ => 1,
    };
    CmdError {
        code,
        msg: e.to_string(),
    }
}

fn search_error(e: SearchError) -> CmdError {
    let code = match &e {
        SearchError::Bound(BoundError::ParityUnsupported { .. }) => 2,
        SearchError::SpaceTooLarge { .. } => 3,
        SearchError::Geometry(GeometryError::BudgetExceeded { .. }) => 3,
        _ => 1,
    };
    CmdError {
        code,
        msg: e.to_string(),
    }
}

/// Parses "3..8", "2,3,5" or a mix of both.
fn parse_list(text: &str) -> Result<Vec<u32>, CmdError> {
    let mut out = Vec::new();
    for part in text.split(',') {
        let part = part.trim();
        if part.is_empty() {
            return Err(CmdError::usage(format!("empty entry in list {text:?}")));
        }
        if let Some((lo, hi)) = part.split_once("..") {
            let lo: u32 = lo
                .parse()
                .map_err(|_| CmdError::usage(format!("bad range start {part:?}")))?;
            let hi: u32 = hi
                .parse()
                .map_err(|_| CmdError::usage(format!("bad range end {part:?}")))?;
            if lo > hi {
                return Err(CmdError::usage(format!("empty range {part:?}")));
            }
            out.extend(lo..=hi);
        } else {
            out.push(
                part.parse()
                    .map_err(|_| CmdError::usage(format!("bad value {part:?}")))?,
            );
        }
    }
    if out.is_empty() {
        return Err(CmdError::usage("list must not be empty"));
    }
    Ok(out)
}

fn env_budget() -> Result<Option<u64>, CmdError> {
    match std::env::var("CAPBOUND_BUDGET") {
        Ok(v) => v
            .parse::<u64>()
            .map(Some)
            .map_err(|_| CmdError::usage(format!("CAPBOUND_BUDGET is not a number: {v:?}"))),
        Err(_) => Ok(None),
    }
}

fn run(cli: Cli) -> Result<(String, Option<PathBuf>, u8), CmdError> {
    match cli.cmd {
        Cmd::Bound { n, q, m, out } => {
            let report = theorem_bound(n, q, m).map_err(bound_error)?;
            let rendered = match out.format {
                Format::Json => output::bound_json(&report),
                Format::Csv => output::bound_csv(&report),
                Format::Text => output::bound_text(&report),
            };
            Ok((rendered, out.output, 0))
        }
        Cmd::Table { ms, qs, style, out } => {
            let ms = parse_list(&ms)?;
            let qs = parse_list(&qs)?;
            match style {
                Style::Exact => {
                    let cells = mu_table(&ms, &qs).map_err(bound_error)?;
                    let rendered = match out.format {
                        Format::Json => output::mu_table_json(&cells),
                        Format::Csv => output::mu_table_csv(&cells),
                        Format::Text => output::mu_table_text(&cells, &ms, &qs),
                    };
                    Ok((rendered, out.output, 0))
                }
                Style::Asymptotic => {
                    let rows = asymptotic_table(&ms).map_err(bound_error)?;
                    let rendered = match out.format {
                        Format::Json => output::asymptotic_table_json(&rows),
                        Format::Csv => output::asymptotic_table_csv(&rows),
                        Format::Text => output::asymptotic_table_text(&rows),
                    };
                    Ok((rendered, out.output, 0))
                }
            }
        }
        Cmd::Lambda {
            alpha,
            beta,
            gamma,
            out,
        } => {
            let query =
                LambdaQuery::new(alpha, beta, gamma).map_err(|e| CmdError::usage(e.to_string()))?;
            let count = lambda_exact(&query).to_string();
            let rendered = match out.format {
                Format::Json => output::lambda_json(alpha, beta, gamma, &count),
                Format::Csv => output::lambda_csv(alpha, beta, gamma, &count),
                Format::Text => format!("{count}\n"),
            };
            Ok((rendered, out.output, 0))
        }
        Cmd::Search {
            n,
            q,
            m,
            exact,
            greedy: _,
            seed,
            restarts,
            budget,
            witness_out,
            out,
        } => {
            let budget = match budget {
                Some(b) => b,
                None => env_budget()?.unwrap_or(DEFAULT_NODE_BUDGET),
            };
            let (result, mode) = if exact {
                (
                    max_m_general_exact(n, q, m, budget).map_err(search_error)?,
                    "exact",
                )
            } else {
                (
                    greedy_m_general(n, q, m, seed, restarts).map_err(search_error)?,
                    "greedy",
                )
            };
            if let Some(path) = witness_out {
                std::fs::write(&path, pointset_io::write_pointset(&result.witness))
                    .map_err(|e| CmdError::usage(format!("cannot write {path:?}: {e}")))?;
                // read back: guards the witness file against format drift
                let text = std::fs::read_to_string(&path)
                    .map_err(|e| CmdError::usage(format!("cannot re-read {path:?}: {e}")))?;
                let back = pointset_io::read_pointset(&text)
                    .map_err(|e| CmdError::usage(format!("witness file corrupt: {e}")))?;
                if back != result.witness {
                    return Err(CmdError::usage("witness file did not round-trip"));
                }
            }
            let rendered = match out.format {
                Format::Json => output::search_json(&result, mode),
                Format::Csv => output::search_csv(&result, mode),
                Format::Text => output::search_text(&result, mode),
            };
            Ok((rendered, out.output, 0))
        }
        Cmd::Verify { suite, budget, out } => {
            let budget = match budget {
                Some(b) => Some(b),
                None => env_budget()?,
            };
            let reports = run_suite(&suite, budget)
                .ok_or_else(|| CmdError::usage(format!("unknown suite {suite:?}")))?;
            let all_pass = reports.iter().all(|r| r.passed());
            let rendered = match out.format {
                Format::Json => output::verify_output(&reports, output::VerifyStyle::Json),
                Format::Csv => output::verify_output(&reports, output::VerifyStyle::Csv),
                Format::Text => output::verify_output(&reports, output::VerifyStyle::Text),
            };
            Ok((rendered, out.output, if all_pass { 0 } else { 1 }))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    print!("{e}");
                    ExitCode::SUCCESS
                }
                _ => {
                    eprint!("{e}");
                    ExitCode::from(1)
                }
            };
        }
    };
    match run(cli) {
        Ok((rendered, path, code)) => {
            if let Some(path) = path {
                if let Err(e) = std::fs::write(&path, rendered) {
                    eprintln!("error: cannot write {path:?}: {e}");
                    return ExitCode::from(1);
                }
            } else {
                print!("{rendered}");
            }
            ExitCode::from(code)
        }
        Err(e) => {
            eprintln!("error: {}", e.msg);
            ExitCode::from(e.code)
        }
    }
}
