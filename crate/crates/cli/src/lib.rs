//! Argument parsing and output formatting for the `sincpow` binary.
//!
//! [`run_command`] is the whole program minus process plumbing, so tests can
//! drive it with an argv and capture both streams.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use sincpow_core::bell::{bell_partial, bell_sinc_closed, exp_sinc_series_with, BellArgs};
use sincpow_core::identities::{
    check_alternating_t_sum, check_odd_blocks, check_parity_vanishing, check_symfun,
    check_t_s_relations, default_symfun_weights, IdentityReport,
};
use sincpow_core::numbers::{central_factorial_t, scaled_t, stirling2, weighted_stirling};
use sincpow_core::numeric::convergence_report;
use sincpow_core::{
    parse_rational, Cardinal, ClosedForm, Error, ExpansionRequest, Method, Rational,
    TruncatedSeries,
};

/// Successful run.
pub const EXIT_OK: i32 = 0;
/// An identity sweep found a counterexample inside its claimed range.
pub const EXIT_COUNTEREXAMPLE: i32 = 1;
/// Bad arguments or a request outside an operation's domain.
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "sincpow",
    version,
    about = "Exact central factorial numbers, Bell polynomials and sinc/sinhc power series"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Stirling number of the second kind S(n, k).
    Stirling2(Indices),
    /// Weighted Stirling number R(n, k, r).
    Weighted {
        #[command(flatten)]
        idx: Indices,
        #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
        r: Rational,
    },
    /// Central factorial number T(n, k), or 2^(n-k) T(n, k) with --scaled.
    Cfn {
        #[command(flatten)]
        idx: Indices,
        #[arg(long)]
        scaled: bool,
    },
    /// Partial Bell polynomial B_{n,k}.
    Bell {
        #[command(flatten)]
        idx: Indices,
        /// Comma-separated rationals x1,x2,...
        #[arg(
            long,
            allow_hyphen_values = true,
            conflicts_with = "sinc_args",
            required_unless_present = "sinc_args"
        )]
        args: Option<String>,
        /// Use the derivatives of sinc at zero: 0, -1/3, 0, 1/5, ...
        #[arg(long)]
        sinc_args: bool,
        #[arg(long, value_enum, default_value_t = BellMethod::Recurrence)]
        method: BellMethod,
    },
    /// Taylor coefficients of sinc^r, sinhc^r or exp(sinc z - 1).
    Series {
        #[arg(long, value_enum)]
        function: SeriesFunction,
        /// Required for sinc and sinhc.
        #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
        exponent: Option<Rational>,
        #[arg(long)]
        order: usize,
        #[arg(long, value_enum, default_value_t = SeriesMethod::Cfn)]
        method: SeriesMethod,
        #[arg(long, value_enum, default_value_t = OutputFormat::Plain)]
        format: OutputFormat,
    },
    /// Sweep an identity and report counterexamples.
    Verify {
        #[arg(long, value_enum)]
        identity: IdentityId,
        #[arg(long)]
        max: u32,
    },
    /// Partial sums of the expansion at a real point against direct evaluation.
    Eval {
        #[arg(long, value_enum)]
        function: CardinalArg,
        #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
        exponent: Rational,
        #[arg(long, allow_hyphen_values = true)]
        z: f64,
        #[arg(long)]
        order: usize,
    },
}

#[derive(Debug, Args)]
struct Indices {
    #[arg(long)]
    n: u32,
    #[arg(long)]
    k: u32,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum BellMethod {
    Recurrence,
    Cfn,
    Stirling,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SeriesFunction {
    Sinc,
    Sinhc,
    ExpSinc,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum CardinalArg {
    Sinc,
    Sinhc,
}

impl From<CardinalArg> for Cardinal {
    fn from(c: CardinalArg) -> Self {
        match c {
            CardinalArg::Sinc => Cardinal::Sinc,
            CardinalArg::Sinhc => Cardinal::Sinhc,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SeriesMethod {
    Cfn,
    Stirling,
    Oracle,
}

impl From<SeriesMethod> for Method {
    fn from(m: SeriesMethod) -> Self {
        match m {
            SeriesMethod::Cfn => Method::Cfn,
            SeriesMethod::Stirling => Method::Stirling,
            SeriesMethod::Oracle => Method::Oracle,
        }
    }
}

/// How `series` prints coefficients.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Plain,
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum IdentityId {
    Parity,
    TsRelations,
    AltSum,
    OddBlocks,
    Symfun,
}

fn rational_arg(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

enum Failure {
    Usage(String),
    Counterexample,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(format!("write failed: {e}"))
    }
}

/// Parses `argv` (including the program name), runs the subcommand and
/// returns the process exit code.
pub fn run_command<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = out.write_all(rendered.as_bytes());
                    EXIT_OK
                }
                _ => {
                    let _ = err.write_all(rendered.as_bytes());
                    EXIT_USAGE
                }
            };
        }
    };
    match execute(cli.command, out) {
        Ok(()) => EXIT_OK,
        Err(Failure::Counterexample) => EXIT_COUNTEREXAMPLE,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
    }
}

fn execute(command: Command, out: &mut dyn Write) -> Result<(), Failure> {
    match command {
        Command::Stirling2(Indices { n, k }) => writeln!(out, "{}", stirling2(n, k))?,
        Command::Weighted { idx, r } => writeln!(out, "{}", weighted_stirling(idx.n, idx.k, &r))?,
        Command::Cfn { idx, scaled } => {
            if scaled {
                writeln!(out, "{}", scaled_t(idx.n, idx.k)?)?;
            } else {
                writeln!(out, "{}", central_factorial_t(idx.n, idx.k))?;
            }
        }
        Command::Bell {
            idx,
            args,
            sinc_args,
            method,
        } => {
            let value = match method {
                BellMethod::Recurrence => {
                    let bell_args = match args {
                        Some(list) => parse_list(&list)?,
                        None => BellArgs::sinc_derivatives(idx.n as usize),
                    };
                    bell_partial(idx.n, idx.k, &bell_args)?
                }
                BellMethod::Cfn | BellMethod::Stirling => {
                    if !sinc_args {
                        return Err(Failure::Usage(
                            "--method cfn|stirling evaluates the closed form and needs --sinc-args"
                                .into(),
                        ));
                    }
                    let form = match method {
                        BellMethod::Cfn => ClosedForm::Cfn,
                        _ => ClosedForm::Stirling,
                    };
                    bell_sinc_closed(idx.n, idx.k, form)?
                }
            };
            writeln!(out, "{value}")?;
        }
        Command::Series {
            function,
            exponent,
            order,
            method,
            format,
        } => {
            let series = match function {
                SeriesFunction::ExpSinc => exp_sinc_series_with(order, method.into()),
                SeriesFunction::Sinc | SeriesFunction::Sinhc => {
                    let exponent = exponent.ok_or_else(|| {
                        Failure::Usage("--exponent is required for sinc and sinhc".into())
                    })?;
                    let function = match function {
                        SeriesFunction::Sinc => Cardinal::Sinc,
                        _ => Cardinal::Sinhc,
                    };
                    ExpansionRequest {
                        function,
                        exponent,
                        order,
                        method: method.into(),
                    }
                    .expand()?
                }
            };
            write_series(out, &series, format)?;
        }
        Command::Verify { identity, max } => {
            let report = match identity {
                IdentityId::Parity => check_parity_vanishing(max, max),
                IdentityId::TsRelations => check_t_s_relations(max, max),
                IdentityId::AltSum => check_alternating_t_sum(max),
                IdentityId::OddBlocks => check_odd_blocks(max)?,
                IdentityId::Symfun => check_symfun(max, &default_symfun_weights()),
            };
            write_report(out, &report)?;
            if report_exit_code(&report) == EXIT_COUNTEREXAMPLE {
                return Err(Failure::Counterexample);
            }
        }
        Command::Eval {
            function,
            exponent,
            z,
            order,
        } => {
            let records = convergence_report(function.into(), &exponent, z, order)?;
            writeln!(out, "order,partial_sum,reference,abs_error")?;
            for r in records {
                writeln!(
                    out,
                    "{},{:e},{:e},{:e}",
                    r.order, r.partial_sum, r.reference, r.abs_error
                )?;
            }
        }
    }
    Ok(())
}

fn parse_list(list: &str) -> Result<BellArgs, Failure> {
    let values = list
        .split(',')
        .filter(|s| !s.trim().is_empty())
        .map(parse_rational)
        .collect::<Result<Vec<_>, _>>()?;
    Ok(BellArgs::new(values))
}

/// Writes the even-power coefficients (plain, csv) or the dense coefficient
/// array (json). Every supported function is even, so odd powers are zero.
pub fn write_series(
    out: &mut dyn Write,
    series: &TruncatedSeries,
    format: OutputFormat,
) -> std::io::Result<()> {
    let even = series.coeffs().iter().enumerate().step_by(2);
    match format {
        OutputFormat::Plain => {
            for (p, c) in even {
                writeln!(out, "z^{p}\t{c}")?;
            }
        }
        OutputFormat::Csv => {
            writeln!(out, "power,coefficient")?;
            for (p, c) in even {
                writeln!(out, "{p},{c}")?;
            }
        }
        OutputFormat::Json => {
            let coeffs: Vec<String> = series.coeffs().iter().map(ToString::to_string).collect();
            let doc = json!({ "order": series.order(), "coefficients": coeffs });
            writeln!(out, "{doc}")?;
        }
    }
    Ok(())
}

/// Exit code for a finished sweep: out-of-range cases never fail it.
pub fn report_exit_code(report: &IdentityReport) -> i32 {
    if report.is_verified() {
        EXIT_OK
    } else {
        EXIT_COUNTEREXAMPLE
    }
}

fn write_report(out: &mut dyn Write, report: &IdentityReport) -> std::io::Result<()> {
    writeln!(out, "{}", report.summary())?;
    for case in report.counterexamples.iter().take(20) {
        writeln!(out, "counterexample {case}")?;
    }
    Ok(())
}
