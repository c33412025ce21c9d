//! Command-line front door for the exact q-series toolkit.
//!
//! Exit codes: 0 when every requested check passes, 1 when a verification
//! failure or inequality violation was found (the report is still emitted),
//! 2 for usage or configuration errors.

mod output;
mod selectors;
mod suite;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use qtrunc::inequalities::scan_with_table;
use qtrunc::partitions::{pf_by_recurrence, pf_crosscheck};
use qtrunc::verify;

use output::{emit, identity_csv, identity_json, json_to_string, scan_csv, scan_json, table_csv, table_json};
use selectors::{parse_family, parse_function, parse_identity, Params};

#[derive(Parser)]
#[command(
    name = "qtrunc",
    version,
    about = "Exact q-series toolkit: partition tables, identity verification, inequality scans"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Args)]
struct SelectorFlags {
    /// Parameter k (truncation depth), where the selector takes one
    #[arg(long)]
    k: Option<u32>,
    /// Parameter n (summation depth), where the selector takes one
    #[arg(long)]
    n: Option<u32>,
    /// Modulus m for the (m, r) selectors
    #[arg(long)]
    m: Option<u32>,
    /// Residue r for the (m, r) selectors
    #[arg(long)]
    r: Option<u32>,
}

impl SelectorFlags {
    fn params(&self) -> Params {
        Params { k: self.k, n: self.n, m: self.m, r: self.r }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Compute a partition-function value table (cross-checked before emission)
    Table {
        /// Counting function: p, overp, pod, jmr, t3
        #[arg(long)]
        function: String,
        /// Largest index to tabulate
        #[arg(long = "n-max")]
        n_max: usize,
        #[command(flatten)]
        selector: SelectorFlags,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        /// Write to this file instead of standard output
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Verify one identity coefficientwise to a truncation order
    Verify {
        /// Identity selector (e.g. euler_pent, thm1, jtp_special)
        #[arg(long)]
        identity: String,
        /// Truncation order: coefficients of q^0 .. q^{order-1} are compared
        #[arg(long)]
        order: usize,
        #[command(flatten)]
        selector: SelectorFlags,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Scan an inequality family over the grid 1 <= k <= k_max, 1 <= n <= n_max
    Scan {
        /// Family selector: am, cor2, cor4, conj1, conj2, rr1, rr2, conj3
        #[arg(long)]
        family: String,
        #[arg(long = "k-max")]
        k_max: u32,
        #[arg(long = "n-max")]
        n_max: usize,
        #[command(flatten)]
        selector: SelectorFlags,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Run the full verification battery and print a summary
    Suite {
        /// Master truncation order for the identity groups
        #[arg(long, default_value_t = 200)]
        order: usize,
    },
}

fn usage_error(message: &str) -> ExitCode {
    eprintln!("error: {message}");
    ExitCode::from(2)
}

fn configure_threads() -> Result<(), String> {
    match std::env::var("QTRUNC_THREADS") {
        Err(_) => Ok(()),
        Ok(raw) => {
            let threads: usize = raw
                .parse()
                .map_err(|_| format!("QTRUNC_THREADS must be a positive integer, got '{raw}'"))?;
            if threads == 0 {
                return Err("QTRUNC_THREADS must be a positive integer".into());
            }
            rayon::ThreadPoolBuilder::new()
                .num_threads(threads)
                .build_global()
                .map_err(|e| format!("could not configure the worker pool: {e}"))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(message) = configure_threads() {
        return usage_error(&message);
    }

    match cli.command {
        Command::Table { function, n_max, selector, format, output: out } => {
            let id = match parse_function(&function, &selector.params()) {
                Ok(id) => id,
                Err(e) => return usage_error(&e),
            };
            // Never emit unverified numbers: both routes must agree first.
            let crosscheck = pf_crosscheck(id, n_max);
            if let Some(n) = crosscheck.first_mismatch {
                eprintln!("error: table routes disagree for {function} at n = {n}");
                return ExitCode::from(1);
            }
            let table = pf_by_recurrence(id, n_max);
            let content = match format {
                Format::Csv => table_csv(&table),
                Format::Json => json_to_string(&table_json(&table)),
            };
            if let Err(e) = emit(out.as_deref(), &content) {
                return usage_error(&format!("cannot write output: {e}"));
            }
            ExitCode::SUCCESS
        }
        Command::Verify { identity, order, selector, format, output: out } => {
            if order == 0 {
                return usage_error("--order must be positive");
            }
            let id = match parse_identity(&identity, &selector.params()) {
                Ok(id) => id,
                Err(e) => return usage_error(&e),
            };
            let report = verify(id, order);
            let content = match format {
                Format::Csv => identity_csv(&report),
                Format::Json => json_to_string(&identity_json(&report)),
            };
            if let Err(e) = emit(out.as_deref(), &content) {
                return usage_error(&format!("cannot write output: {e}"));
            }
            if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Command::Scan { family, k_max, n_max, selector, format, output: out } => {
            if k_max == 0 || n_max == 0 {
                return usage_error("--k-max and --n-max must be positive");
            }
            let id = match parse_family(&family, &selector.params()) {
                Ok(id) => id,
                Err(e) => return usage_error(&e),
            };
            let table = pf_by_recurrence(id.table_id(), n_max);
            let report = scan_with_table(id, k_max, n_max, &table);
            let content = match format {
                Format::Csv => scan_csv(&report),
                Format::Json => json_to_string(&scan_json(&report)),
            };
            if let Err(e) = emit(out.as_deref(), &content) {
                return usage_error(&format!("cannot write output: {e}"));
            }
            if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Command::Suite { order } => {
            if order == 0 {
                return usage_error("--order must be positive");
            }
            ExitCode::from(suite::run(order))
        }
    }
}
