//! Command implementations for the `leafkernel` binary.
//!
//! Everything that produces output lives here as ordinary functions
//! returning `String`s, so the CLI surface is testable without spawning a
//! process. Output is deterministic: identical invocations produce
//! byte-identical bytes.

pub mod checks;

use std::fmt::Write as _;
use std::path::PathBuf;

use leafkernel_core::{arcsleaf, cleaf, period_constants, sleaf, LeafOrder, PeriodConstants, Result};

pub use checks::{identity_checks, oracle_checks, symbolic_checks, CheckOutcome};

/// Output encodings.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Csv,
    Json,
    Pretty,
}

/// Where and how to print.
#[derive(Debug, Clone)]
pub struct OutputSpec {
    pub format: OutputFormat,
    /// Digits after the decimal point, 1..=17.
    pub precision: usize,
    /// Destination path; standard output when absent.
    pub out: Option<PathBuf>,
}

impl Default for OutputSpec {
    fn default() -> Self {
        OutputSpec {
            format: OutputFormat::Pretty,
            precision: 6,
            out: None,
        }
    }
}

/// Fixed-point rendering; negative zero is normalized so output never
/// depends on the sign of a rounded-away residue.
pub fn fmt_f64(value: f64, precision: usize) -> String {
    let v = if value == 0.0 { 0.0 } else { value };
    format!("{v:.precision$}")
}

/// The functions exposed by `eval`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EvalFunction {
    Sleaf,
    Cleaf,
    Arcsleaf,
}

impl EvalFunction {
    fn name(self) -> &'static str {
        match self {
            EvalFunction::Sleaf => "sleaf",
            EvalFunction::Cleaf => "cleaf",
            EvalFunction::Arcsleaf => "arcsleaf",
        }
    }
}

/// Evaluate one function at one point and render it.
pub fn eval_output(
    n: LeafOrder,
    function: EvalFunction,
    value: f64,
    spec: &OutputSpec,
) -> Result<String> {
    let result = match function {
        EvalFunction::Sleaf => sleaf(n, value)?.r,
        EvalFunction::Cleaf => cleaf(n, value)?.r,
        EvalFunction::Arcsleaf => arcsleaf(n, value)?,
    };
    let p = spec.precision;
    Ok(match spec.format {
        OutputFormat::Pretty => format!("{}\n", fmt_f64(result, p)),
        OutputFormat::Csv => format!("argument,value\n{},{}\n", fmt_f64(value, p), fmt_f64(result, p)),
        OutputFormat::Json => format!(
            "{{\"n\":{},\"fn\":\"{}\",\"argument\":{},\"value\":{}}}\n",
            n.get(),
            function.name(),
            fmt_f64(value, p),
            fmt_f64(result, p)
        ),
    })
}

/// One table row.
#[derive(Debug, Clone, Copy)]
pub struct TableRow {
    pub l: f64,
    pub sleaf: f64,
    pub cleaf: f64,
}

/// Number of rows `start, start+step, …` up to and including `end` (with a
/// relative guard against accumulated rounding in `end/step`).
pub fn table_row_count(start: f64, end: f64, step: f64) -> usize {
    (((end - start) / step) + 1e-6) as usize + 1
}

/// Evaluate the grid. Arguments are assumed validated (`step > 0`,
/// `end >= start`).
pub fn table_rows(n: LeafOrder, start: f64, end: f64, step: f64) -> Result<Vec<TableRow>> {
    let count = table_row_count(start, end, step);
    let mut rows = Vec::with_capacity(count);
    for k in 0..count {
        let l = start + k as f64 * step;
        rows.push(TableRow {
            l,
            sleaf: sleaf(n, l)?.r,
            cleaf: cleaf(n, l)?.r,
        });
    }
    Ok(rows)
}

/// Render table rows in the requested format. CSV uses the fixed header
/// `l,sleaf,cleaf`; JSON is an array of objects with those keys.
pub fn render_table(rows: &[TableRow], spec: &OutputSpec) -> String {
    let p = spec.precision;
    match spec.format {
        OutputFormat::Csv => {
            let mut out = String::from("l,sleaf,cleaf\n");
            for row in rows {
                let _ = writeln!(
                    out,
                    "{},{},{}",
                    fmt_f64(row.l, p),
                    fmt_f64(row.sleaf, p),
                    fmt_f64(row.cleaf, p)
                );
            }
            out
        }
        OutputFormat::Json => {
            let mut out = String::from("[\n");
            for (i, row) in rows.iter().enumerate() {
                let sep = if i + 1 == rows.len() { "" } else { "," };
                let _ = writeln!(
                    out,
                    "  {{\"l\":{},\"sleaf\":{},\"cleaf\":{}}}{sep}",
                    fmt_f64(row.l, p),
                    fmt_f64(row.sleaf, p),
                    fmt_f64(row.cleaf, p)
                );
            }
            out.push_str("]\n");
            out
        }
        OutputFormat::Pretty => {
            let width = p + 6;
            let mut out = format!("{:>width$} {:>width$} {:>width$}\n", "l", "sleaf", "cleaf");
            for row in rows {
                let _ = writeln!(
                    out,
                    "{:>width$} {:>width$} {:>width$}",
                    fmt_f64(row.l, p),
                    fmt_f64(row.sleaf, p),
                    fmt_f64(row.cleaf, p)
                );
            }
            out
        }
    }
}

/// The constants for `n = 1, 2, 3`.
pub fn constants_rows() -> Result<Vec<PeriodConstants>> {
    [LeafOrder::N1, LeafOrder::N2, LeafOrder::N3]
        .into_iter()
        .map(period_constants)
        .collect()
}

pub fn render_constants(rows: &[PeriodConstants], spec: &OutputSpec) -> String {
    let p = spec.precision;
    match spec.format {
        OutputFormat::Csv => {
            let mut out = String::from("n,half_pi,pi,period\n");
            for c in rows {
                let _ = writeln!(
                    out,
                    "{},{},{},{}",
                    c.n.get(),
                    fmt_f64(c.half_pi, p),
                    fmt_f64(c.pi, p),
                    fmt_f64(c.period, p)
                );
            }
            out
        }
        OutputFormat::Json => {
            let mut out = String::from("[\n");
            for (i, c) in rows.iter().enumerate() {
                let sep = if i + 1 == rows.len() { "" } else { "," };
                let _ = writeln!(
                    out,
                    "  {{\"n\":{},\"half_pi\":{},\"pi\":{},\"period\":{}}}{sep}",
                    c.n.get(),
                    fmt_f64(c.half_pi, p),
                    fmt_f64(c.pi, p),
                    fmt_f64(c.period, p)
                );
            }
            out.push_str("]\n");
            out
        }
        OutputFormat::Pretty => {
            let mut out = String::new();
            for c in rows {
                let _ = writeln!(
                    out,
                    "half_pi({n}) = {}   pi({n}) = {}   period({n}) = {}",
                    fmt_f64(c.half_pi, p),
                    fmt_f64(c.pi, p),
                    fmt_f64(c.period, p),
                    n = c.n.get()
                );
            }
            out
        }
    }
}

/// Verification suites.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VerifySuite {
    Identities,
    Symbolic,
    Oracle,
    All,
}

/// Run the selected suite(s).
pub fn run_verify(suite: VerifySuite) -> Result<Vec<CheckOutcome>> {
    let mut checks = Vec::new();
    if matches!(suite, VerifySuite::Identities | VerifySuite::All) {
        checks.extend(identity_checks()?);
    }
    if matches!(suite, VerifySuite::Symbolic | VerifySuite::All) {
        checks.extend(symbolic_checks());
    }
    if matches!(suite, VerifySuite::Oracle | VerifySuite::All) {
        checks.extend(oracle_checks()?);
    }
    Ok(checks)
}

pub fn render_verify(checks: &[CheckOutcome], spec: &OutputSpec) -> String {
    match spec.format {
        OutputFormat::Pretty => {
            let mut out = String::new();
            for check in checks {
                out.push_str(&check.line());
                out.push('\n');
            }
            let failed = checks.iter().filter(|c| !c.passed).count();
            if failed == 0 {
                let _ = writeln!(out, "summary: all {} checks passed", checks.len());
            } else {
                let _ = writeln!(out, "summary: {failed} of {} checks FAILED", checks.len());
            }
            out
        }
        OutputFormat::Csv => {
            let mut out = String::from("name,passed,residual,tol\n");
            for c in checks {
                let _ = writeln!(out, "{},{},{:e},{:e}", c.name, c.passed, c.residual, c.tol);
            }
            out
        }
        OutputFormat::Json => {
            let mut out = String::from("[\n");
            for (i, c) in checks.iter().enumerate() {
                let sep = if i + 1 == checks.len() { "" } else { "," };
                let _ = writeln!(
                    out,
                    "  {{\"name\":\"{}\",\"passed\":{},\"residual\":{:e},\"tol\":{:e}}}{sep}",
                    c.name, c.passed, c.residual, c.tol
                );
            }
            out.push_str("]\n");
            out
        }
    }
}
