//! `omega`: command-line front end for the order-poset library.
//!
//! Exit codes: 0 success, 1 a verification check failed, 2 bad input or
//! usage.

use std::io::{self, BufWriter, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::json;

use omega_core::format::{parse_order, to_canonical_json};
use omega_core::topology::{interval_complex, reduced_homology};
use omega_core::verify::{run_suite, Suite, VerifyOptions, MAX_VERIFY_N};
use omega_core::{
    classify_upper, covers_above, enumerate_orders, frattini, mobius_closed, mobius_recursive,
    EnumerationCap, IntervalSpec, OmegaError, OrderRelation, Strategy,
};

#[derive(Parser)]
#[command(
    name = "omega",
    version,
    about = "Orders on a finite set, ordered by inclusion"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print every order on n points, one canonical JSON relation per line.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "brute", value_parser = ["brute", "covers"])]
        strategy: String,
        /// Print only the number of orders.
        #[arg(long)]
        count_only: bool,
        /// Raise the enumeration cap from 5 to 6.
        #[arg(long)]
        allow_n6: bool,
    },
    /// Möbius function of the interval [LOWER, UPPER].
    Mobius { lower: PathBuf, upper: PathBuf },
    /// Frattini subrelation: the intersection of all maximal suborders.
    Frattini { order: PathBuf },
    /// Orders covering the given one, one per line.
    Covers { order: PathBuf },
    /// Homotopy type of the set of orders strictly containing the given one.
    ClassifyUpper { order: PathBuf },
    /// Reduced integral homology of the open interval ]LOWER, UPPER[.
    IntervalHomology {
        lower: PathBuf,
        upper: PathBuf,
        /// Print the order complex (one line per dimension) instead.
        #[arg(long)]
        complex: bool,
    },
    /// Run a battery of checks on all orders of size n.
    Verify {
        #[arg(long, value_parser = clap::value_parser!(u64).range(0..=MAX_VERIFY_N as u64))]
        n: u64,
        #[arg(long, default_value = "all", value_parser = ["all", "mobius", "intervals", "covers", "upper", "global"])]
        suite: String,
        /// Full homology everywhere instead of Euler characteristics at n = 4.
        #[arg(long)]
        exhaustive: bool,
        /// Full homology on a random sample of this many intervals at n = 4.
        #[arg(long)]
        sample: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Debug)]
enum CliError {
    Input(String),
    Io(io::Error),
}

impl From<OmegaError> for CliError {
    fn from(e: OmegaError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

type CliResult = Result<ExitCode, CliError>;

/// Reads a path, or standard input for `-`.
fn read_input(path: &PathBuf) -> Result<String, CliError> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        std::fs::read_to_string(path)
            .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
    }
}

fn read_order(path: &PathBuf) -> Result<OrderRelation, CliError> {
    parse_order(&read_input(path)?).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn read_pair(lower: &PathBuf, upper: &PathBuf) -> Result<(OrderRelation, OrderRelation), CliError> {
    if lower.as_os_str() == "-" && upper.as_os_str() == "-" {
        return Err(CliError::Input(
            "only one input may be read from stdin".into(),
        ));
    }
    Ok((read_order(lower)?, read_order(upper)?))
}

fn print_line(line: &str) -> io::Result<()> {
    let mut out = io::stdout().lock();
    writeln!(out, "{line}")
}

fn enumerate(n: usize, strategy: &str, count_only: bool, allow_n6: bool) -> CliResult {
    let fallback = if allow_n6 {
        EnumerationCap::OVERRIDE
    } else {
        EnumerationCap::DEFAULT
    };
    let cap = EnumerationCap::from_env_or(fallback)?;
    if cap.max_n() > EnumerationCap::OVERRIDE.max_n() {
        eprintln!("warning: enumeration caps above 6 are unsupported");
    }
    let orders = enumerate_orders(n, strategy.parse::<Strategy>()?, cap)?;
    if count_only {
        print_line(&orders.len().to_string())?;
    } else {
        let mut out = BufWriter::new(io::stdout().lock());
        for o in &orders {
            writeln!(out, "{}", to_canonical_json(o.relation()))?;
        }
        out.flush()?;
    }
    Ok(ExitCode::SUCCESS)
}

fn mobius(lower: &PathBuf, upper: &PathBuf) -> CliResult {
    let (r, s) = read_pair(lower, upper)?;
    let closed = mobius_closed(&r, &s)?;
    let recursive = mobius_recursive(&r, &s)?;
    print_line(
        &json!({ "value": closed, "closed_form": closed, "recursive": recursive }).to_string(),
    )?;
    if closed == recursive {
        Ok(ExitCode::SUCCESS)
    } else {
        eprintln!("mismatch: closed form {closed}, recursion {recursive}");
        Ok(ExitCode::from(1))
    }
}

fn interval_homology(lower: &PathBuf, upper: &PathBuf, dump: bool) -> CliResult {
    let (r, s) = read_pair(lower, upper)?;
    let complex = interval_complex(&IntervalSpec::new(r, s)?)?;
    if dump {
        io::stdout()
            .lock()
            .write_all(complex.to_json_lines().as_bytes())?;
    } else {
        print_line(&reduced_homology(&complex).to_json().to_string())?;
    }
    Ok(ExitCode::SUCCESS)
}

fn verify(n: usize, suite: &str, options: VerifyOptions) -> CliResult {
    let report = run_suite(n, suite.parse::<Suite>()?, &options)?;
    print_line(&serde_json::to_string(&report).expect("reports always serialize"))?;
    Ok(if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn run(cli: Cli) -> CliResult {
    match cli.command {
        Command::Enumerate {
            n,
            strategy,
            count_only,
            allow_n6,
        } => enumerate(n, &strategy, count_only, allow_n6),
        Command::Mobius { lower, upper } => mobius(&lower, &upper),
        Command::Frattini { order } => {
            let s = read_order(&order)?;
            print_line(&to_canonical_json(&frattini(&s)))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Covers { order } => {
            let r = read_order(&order)?;
            let mut covers = covers_above(&r);
            covers.sort();
            for c in covers {
                print_line(&to_canonical_json(c.relation()))?;
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::ClassifyUpper { order } => {
            let r = read_order(&order)?;
            print_line(&classify_upper(&r).to_json().to_string())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::IntervalHomology {
            lower,
            upper,
            complex,
        } => interval_homology(&lower, &upper, complex),
        Command::Verify {
            n,
            suite,
            exhaustive,
            sample,
            seed,
        } => verify(
            n as usize,
            &suite,
            VerifyOptions {
                exhaustive,
                sample,
                seed,
            },
        ),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(CliError::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(CliError::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(CliError::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
