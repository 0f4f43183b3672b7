//! `denumerant` — count partitions whose parts come from a fixed finite set,
//! and inspect how those counts track their polynomial leading term.
//!
//! Subcommands:
//! - `count`     exact count of one target, with leading-term diagnostics
//! - `table`     the same per-target record swept over `n = 0..=max-n`
//! - `verify`    cross-check the independent counting routes against each other
//! - `asym`      exact-versus-leading-term report at one target
//! - `fit`       empirical growth exponent of the approximation error
//! - `frobenius` largest unrepresentable target, threshold, and Apéry set
//!
//! Exit codes: 0 success, 1 domain or verification failure, 2 usage error.
//! All data output goes to standard output; diagnostics go to the error
//! stream, and identical invocations produce byte-identical output.

mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_traits::Zero;

use denumerant::{
    count_any, count_dp, enumerate_partitions, error_slope, frobenius, report, BigUint, Error,
    Method, PartSet, RecursiveCounter, ENUMERATION_BOUND, ENUMERATION_CAP,
};
use output::{
    build_row, sig12, AsymRecord, CountRecord, FitRecord, FrobeniusRecord, VerifySummary,
    CSV_HEADER,
};

/// Count partitions with parts from a fixed set of positive integers.
#[derive(Parser)]
#[command(name = "denumerant", version, disable_help_subcommand = true)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count the partitions of a single target
    Count(CountArgs),
    /// Emit count and leading-term diagnostics for every n up to a bound
    Table(TableArgs),
    /// Cross-check the counting routes against each other
    Verify(VerifyArgs),
    /// Compare the exact count with the leading term at one target
    Asym(AsymArgs),
    /// Fit the growth exponent of the leading-term error on a range
    Fit(FitArgs),
    /// Largest unrepresentable target, threshold, and Apéry set
    Frobenius(FrobeniusArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    /// Generating-function dynamic programming
    Dp,
    /// Residue-class recursion
    Recursive,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Dp => Method::Dp,
            MethodArg::Recursive => Method::Recursive,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Csv,
    Json,
}

/// The one argument every subcommand shares.
#[derive(Args)]
struct PartsArg {
    /// Parts, comma separated (e.g. 3,5,7)
    #[arg(
        long,
        value_delimiter = ',',
        allow_negative_numbers = true,
        required = true,
        value_name = "A1,A2,..."
    )]
    parts: Vec<i64>,
}

#[derive(Args)]
struct CountArgs {
    #[command(flatten)]
    parts: PartsArg,
    /// Target to count partitions of
    #[arg(long)]
    n: u64,
    /// Counting route
    #[arg(long, value_enum, default_value_t = MethodArg::Dp)]
    method: MethodArg,
}

#[derive(Args)]
struct TableArgs {
    #[command(flatten)]
    parts: PartsArg,
    /// Largest target; rows run n = 0..=max-n
    #[arg(long)]
    max_n: u64,
    #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
    format: FormatArg,
    /// Write to a file instead of standard output
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    parts: PartsArg,
    /// Check every target up to this bound
    #[arg(long)]
    max_n: u64,
    /// Also cross-check against full enumeration for n up to this bound
    #[arg(long, default_value_t = 40)]
    enum_max: u64,
}

#[derive(Args)]
struct AsymArgs {
    #[command(flatten)]
    parts: PartsArg,
    /// Target; the comparison is defined for n >= 1
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    n: u64,
}

#[derive(Args)]
struct FitArgs {
    #[command(flatten)]
    parts: PartsArg,
    /// Lower end of the fit range (at least 16)
    #[arg(long)]
    n_min: u64,
    /// Upper end of the fit range (at least 8 * n-min)
    #[arg(long)]
    n_max: u64,
    /// Number of geometric windows (at least 4)
    #[arg(long)]
    windows: usize,
}

#[derive(Args)]
struct FrobeniusArgs {
    #[command(flatten)]
    parts: PartsArg,
}

/// A failed command: what to print on the error stream and how to exit.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    /// Bad invocation — exit 2.
    fn usage(message: impl Into<String>) -> Self {
        Self { code: 2, message: message.into() }
    }

    /// Well-formed invocation whose mathematics rejects the input, or a
    /// verification/I-O failure — exit 1.
    fn domain(message: impl Into<String>) -> Self {
        Self { code: 1, message: message.into() }
    }
}

/// Library errors split the same way: violated preconditions are usage
/// errors, while a non-coprime set fed to an operation that needs coprimality
/// (or a fit with too few usable points) is a domain rejection.
fn classify(err: Error) -> Failure {
    match err {
        Error::NotCoprime { .. } | Error::DegenerateFit { .. } => Failure::domain(err.to_string()),
        _ => Failure::usage(err.to_string()),
    }
}

fn parse_parts(arg: &PartsArg) -> Result<PartSet, Failure> {
    PartSet::new(&arg.parts).map_err(|e| Failure::usage(e.to_string()))
}

fn emit_json<T: serde::Serialize>(record: &T) {
    println!(
        "{}",
        serde_json::to_string_pretty(record).expect("records contain no non-serializable values")
    );
}

fn cmd_count(args: &CountArgs) -> Result<(), Failure> {
    let a = parse_parts(&args.parts)?;
    let count = count_any(&a, args.n, args.method.into());
    let row = build_row(&a, args.n, &count);
    emit_json(&CountRecord {
        parts: a.parts().to_vec(),
        n: row.n,
        count: row.count,
        leading_num: row.leading_num,
        leading_den: row.leading_den,
        ratio: row.ratio,
        abs_err_num: row.abs_err_num,
        abs_err_den: row.abs_err_den,
        norm_err: row.norm_err,
        reduced_by: a.gcd(),
    });
    Ok(())
}

fn cmd_table(args: &TableArgs) -> Result<(), Failure> {
    let a = parse_parts(&args.parts)?;
    // one sweep over the reduced set covers every row: gcd-multiples map
    // down, everything else counts 0
    let (reduced, g) = a.reduce_gcd();
    let table = count_dp(&reduced, args.max_n / g);
    let zero = BigUint::zero();
    let rows: Vec<_> = (0..=args.max_n)
        .map(|n| {
            let count = if n % g == 0 { table.get(n / g) } else { &zero };
            build_row(&a, n, count)
        })
        .collect();

    let mut text = String::new();
    match args.format {
        FormatArg::Csv => {
            text.push_str(CSV_HEADER);
            text.push('\n');
            for row in &rows {
                text.push_str(&row.to_csv());
                text.push('\n');
            }
        }
        FormatArg::Json => {
            text = serde_json::to_string_pretty(&rows).expect("rows serialize");
            text.push('\n');
        }
    }
    match &args.out {
        Some(path) => std::fs::write(path, &text)
            .map_err(|e| Failure::domain(format!("cannot write {}: {e}", path.display())))?,
        None => print!("{text}"),
    }
    Ok(())
}

fn cmd_verify(args: &VerifyArgs) -> Result<(), Failure> {
    let a = parse_parts(&args.parts)?;
    if args.enum_max > ENUMERATION_BOUND {
        return Err(Failure::usage(format!(
            "--enum-max {} exceeds the enumeration bound {ENUMERATION_BOUND}",
            args.enum_max
        )));
    }
    let (reduced, g) = a.reduce_gcd();
    let table = count_dp(&reduced, args.max_n / g);
    let mut counter = RecursiveCounter::new();
    let zero = BigUint::zero();
    let mut enumerated = 0u64;
    for n in 0..=args.max_n {
        let dp = if n % g == 0 { table.get(n / g) } else { &zero };
        let recursive = if n % g == 0 {
            counter.count(&reduced, n / g).map_err(classify)?
        } else {
            zero.clone()
        };
        if *dp != recursive {
            return Err(Failure::domain(format!(
                "count mismatch for {a} at n = {n}: dynamic programming {dp}, recursion {recursive}"
            )));
        }
        if n <= args.enum_max {
            match enumerate_partitions(&a, n, ENUMERATION_CAP) {
                Ok(listed) => {
                    if BigUint::from(listed.len()) != *dp {
                        return Err(Failure::domain(format!(
                            "count mismatch for {a} at n = {n}: dynamic programming {dp}, \
                             enumeration {}",
                            listed.len()
                        )));
                    }
                    enumerated += 1;
                }
                // too many partitions to list: skip the cross-check, the
                // table routes were still compared
                Err(Error::CapExceeded { .. }) => {}
                Err(e) => return Err(classify(e)),
            }
        }
    }
    emit_json(&VerifySummary {
        parts: a.parts().to_vec(),
        max_n: args.max_n,
        enum_max: args.enum_max,
        checked: args.max_n + 1,
        enumerated,
        status: "ok",
    });
    Ok(())
}

fn cmd_asym(args: &AsymArgs) -> Result<(), Failure> {
    let a = parse_parts(&args.parts)?;
    let rep = report(&a, args.n).map_err(classify)?;
    emit_json(&AsymRecord {
        parts: a.parts().to_vec(),
        n: rep.n,
        exact: rep.exact.to_string(),
        leading_num: rep.leading.numer().to_string(),
        leading_den: rep.leading.denom().to_string(),
        ratio: sig12(rep.ratio),
        abs_err_num: rep.abs_err.numer().to_string(),
        abs_err_den: rep.abs_err.denom().to_string(),
        norm_err: rep.norm_err.map(sig12),
    });
    Ok(())
}

fn cmd_fit(args: &FitArgs) -> Result<(), Failure> {
    let a = parse_parts(&args.parts)?;
    let fit = error_slope(&a, args.n_min, args.n_max, args.windows).map_err(classify)?;
    emit_json(&FitRecord {
        parts: a.parts().to_vec(),
        n_min: args.n_min,
        n_max: args.n_max,
        windows: fit.windows.iter().map(|&(c, e)| (sig12(c), sig12(e))).collect(),
        slope: sig12(fit.slope),
        intercept: sig12(fit.intercept),
    });
    Ok(())
}

fn cmd_frobenius(args: &FrobeniusArgs) -> Result<(), Failure> {
    let a = parse_parts(&args.parts)?;
    let result = frobenius(&a).map_err(|e| match e {
        Error::NotCoprime { gcd } => Failure::domain(format!(
            "parts share the common divisor {gcd}, so infinitely many targets are \
             unrepresentable and no largest one exists"
        )),
        other => classify(other),
    })?;
    emit_json(&FrobeniusRecord {
        parts: a.parts().to_vec(),
        frobenius: result.frobenius,
        threshold: result.threshold,
        apery: result.apery,
    });
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Count(args) => cmd_count(args),
        Command::Table(args) => cmd_table(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Asym(args) => cmd_asym(args),
        Command::Fit(args) => cmd_fit(args),
        Command::Frobenius(args) => cmd_frobenius(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}
