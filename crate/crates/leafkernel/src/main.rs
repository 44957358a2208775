//! `leafkernel`: evaluate the leaf functions, reproduce the reference
//! table, print the period constants, and run the verification suites.
//!
//! Exit codes: 0 on success, 1 on verification failure, 2 on usage errors
//! (including out-of-domain arguments).

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use leafkernel::{
    constants_rows, eval_output, render_constants, render_table, render_verify, run_verify,
    table_row_count, table_rows, EvalFunction, OutputFormat, OutputSpec, VerifySuite,
};
use leafkernel_core::LeafOrder;

#[derive(Parser)]
#[command(
    name = "leafkernel",
    version,
    about = "Leaf functions sleaf_n / cleaf_n: evaluation, tables, constants, verification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate sleaf, cleaf, or arcsleaf at one point
    Eval(EvalArgs),
    /// Tabulate sleaf_n and cleaf_n on a grid (defaults reproduce the
    /// six-decimal reference table)
    Table(TableArgs),
    /// Print the period constants for n = 1, 2, 3
    Constants(ConstantsArgs),
    /// Run the verification suites and exit nonzero on any failure
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum FunctionArg {
    Sleaf,
    Cleaf,
    Arcsleaf,
}

impl From<FunctionArg> for EvalFunction {
    fn from(f: FunctionArg) -> Self {
        match f {
            FunctionArg::Sleaf => EvalFunction::Sleaf,
            FunctionArg::Cleaf => EvalFunction::Cleaf,
            FunctionArg::Arcsleaf => EvalFunction::Arcsleaf,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Csv,
    Json,
    Pretty,
}

impl From<FormatArg> for OutputFormat {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Csv => OutputFormat::Csv,
            FormatArg::Json => OutputFormat::Json,
            FormatArg::Pretty => OutputFormat::Pretty,
        }
    }
}

#[derive(Args)]
struct OutputArgs {
    /// Output encoding
    #[arg(long, value_enum, default_value = "pretty")]
    format: FormatArg,
    /// Digits after the decimal point
    #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u8).range(1..=17))]
    precision: u8,
    /// Write to this file instead of standard output
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

impl OutputArgs {
    fn spec(&self) -> OutputSpec {
        OutputSpec {
            format: self.format.into(),
            precision: self.precision as usize,
            out: self.out.clone(),
        }
    }
}

#[derive(Args)]
#[command(allow_negative_numbers = true)]
struct EvalArgs {
    /// Leaf order
    #[arg(long = "n", default_value_t = 3)]
    n: u32,
    /// Which function to evaluate
    #[arg(long = "fn", value_enum)]
    function: FunctionArg,
    /// The argument (l for sleaf/cleaf, r for arcsleaf)
    value: f64,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
#[command(allow_negative_numbers = true)]
struct TableArgs {
    /// Leaf order
    #[arg(long = "n", default_value_t = 3)]
    n: u32,
    #[arg(long, default_value_t = 0.0)]
    start: f64,
    #[arg(long, default_value_t = 4.1)]
    end: f64,
    #[arg(long, default_value_t = 0.1)]
    step: f64,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct ConstantsArgs {
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Identities,
    Symbolic,
    Oracle,
    All,
}

#[derive(Args)]
struct VerifyArgs {
    /// Which suite to run
    #[arg(value_enum, default_value = "all")]
    suite: SuiteArg,
    #[command(flatten)]
    output: OutputArgs,
}

const USAGE_ERROR: u8 = 2;
const VERIFY_FAILURE: u8 = 1;

fn usage_error(message: &str) -> ExitCode {
    eprintln!("error: {message}");
    ExitCode::from(USAGE_ERROR)
}

fn emit(text: &str, spec: &OutputSpec) -> std::io::Result<()> {
    match &spec.out {
        Some(path) => std::fs::write(path, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn parse_order(n: u32) -> Result<LeafOrder, ExitCode> {
    LeafOrder::new(n).ok_or_else(|| usage_error(&format!("leaf order must be >= 1 (got {n})")))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Eval(args) => {
            let spec = args.output.spec();
            let n = match parse_order(args.n) {
                Ok(n) => n,
                Err(code) => return code,
            };
            match eval_output(n, args.function.into(), args.value, &spec) {
                Ok(text) => match emit(&text, &spec) {
                    Ok(()) => ExitCode::SUCCESS,
                    Err(e) => usage_error(&format!("cannot write output: {e}")),
                },
                Err(e) => usage_error(&e.to_string()),
            }
        }
        Command::Table(args) => {
            let spec = args.output.spec();
            let n = match parse_order(args.n) {
                Ok(n) => n,
                Err(code) => return code,
            };
            if args.step.is_nan() || args.step <= 0.0 {
                return usage_error("--step must be > 0");
            }
            if args.end < args.start {
                return usage_error("--end must be >= --start");
            }
            if table_row_count(args.start, args.end, args.step) > 10_000_000 {
                return usage_error("grid has more than 10 million rows; choose a larger --step");
            }
            match table_rows(n, args.start, args.end, args.step) {
                Ok(rows) => {
                    let text = render_table(&rows, &spec);
                    match emit(&text, &spec) {
                        Ok(()) => ExitCode::SUCCESS,
                        Err(e) => usage_error(&format!("cannot write output: {e}")),
                    }
                }
                Err(e) => usage_error(&e.to_string()),
            }
        }
        Command::Constants(args) => {
            let spec = args.output.spec();
            match constants_rows() {
                Ok(rows) => {
                    let text = render_constants(&rows, &spec);
                    match emit(&text, &spec) {
                        Ok(()) => ExitCode::SUCCESS,
                        Err(e) => usage_error(&format!("cannot write output: {e}")),
                    }
                }
                Err(e) => usage_error(&e.to_string()),
            }
        }
        Command::Verify(args) => {
            let spec = args.output.spec();
            let suite = match args.suite {
                SuiteArg::Identities => VerifySuite::Identities,
                SuiteArg::Symbolic => VerifySuite::Symbolic,
                SuiteArg::Oracle => VerifySuite::Oracle,
                SuiteArg::All => VerifySuite::All,
            };
            match run_verify(suite) {
                Ok(checks) => {
                    let text = render_verify(&checks, &spec);
                    if let Err(e) = emit(&text, &spec) {
                        eprintln!("error: cannot write output: {e}");
                        return ExitCode::from(VERIFY_FAILURE);
                    }
                    if checks.iter().all(|c| c.passed) {
                        ExitCode::SUCCESS
                    } else {
                        ExitCode::from(VERIFY_FAILURE)
                    }
                }
                Err(e) => {
                    eprintln!("error: verification could not run: {e}");
                    ExitCode::from(VERIFY_FAILURE)
                }
            }
        }
    }
}
