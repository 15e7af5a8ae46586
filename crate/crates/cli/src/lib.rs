//! Library surface of the `incpoly` binary: argument types, command
//! models, and renderers, kept separate from `main` so integration tests
//! can drive everything in-process.

pub mod evalcmd;
pub mod opts;
pub mod render;
pub mod seriescmd;
pub mod table;
pub mod verifycmd;

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use incpoly_core::{FamilyParams, Polynomial};
use num_bigint::BigInt;

pub use opts::{Cli, Command, EvalKind, Format, SeriesKind, TableKind, VariantArg};

/// User-input failures; all map to exit code 2.
#[derive(Debug)]
pub enum CliError {
    BadPolynomial { input: String, message: String },
    BadInteger { input: String },
    MissingL(&'static str),
    OrderTooSmall { order: usize, min: u64 },
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::BadPolynomial { input, message } => {
                write!(f, "cannot parse polynomial {input:?}: {message}")
            }
            CliError::BadInteger { input } => write!(f, "cannot parse integer {input:?}"),
            CliError::MissingL(kind) => write!(f, "--l is required for kind {kind}"),
            CliError::OrderTooSmall { order, min } => {
                write!(f, "--order {order} is below the support start {min}")
            }
        }
    }
}

impl std::error::Error for CliError {}

/// Rendered output plus the exit-status decision.
pub struct Outcome {
    pub text: String,
    /// True when the run found a falsification: a failed identity sweep,
    /// or a series comparison where no requested variant matches.
    pub falsified: bool,
    pub out: Option<PathBuf>,
}

fn parse_h(text: &str) -> Result<FamilyParams, CliError> {
    Polynomial::parse(text)
        .map(FamilyParams::new)
        .map_err(|e| CliError::BadPolynomial {
            input: text.to_string(),
            message: e.to_string(),
        })
}

/// Default h sample for `verify`: the constants 1 and 2, the identity
/// polynomial, and two nonlinear shapes.
pub const DEFAULT_VERIFY_SAMPLE: [&str; 5] = ["1", "2", "x", "x^2+1", "3x"];

pub fn run(cli: Cli) -> Result<Outcome, CliError> {
    match cli.command {
        Command::Table {
            kind,
            h,
            n_max,
            format,
            literal_var,
            out,
        } => {
            let params = parse_h(&h)?;
            let n_max = n_max.unwrap_or(match kind {
                TableKind::Fib => 10,
                TableKind::Lucas => 9,
            });
            let model = table::build_table(kind, &params, n_max, literal_var);
            Ok(Outcome {
                text: model.render(format),
                falsified: false,
                out,
            })
        }
        Command::Eval {
            kind,
            h,
            n_max,
            l,
            at,
            format,
            out,
        } => {
            let params = parse_h(&h)?;
            let at = BigInt::from_str(at.trim())
                .map_err(|_| CliError::BadInteger { input: at.clone() })?;
            let model = evalcmd::build_eval(kind, &params, &at, l, n_max)?;
            Ok(Outcome {
                text: model.render(format),
                falsified: false,
                out,
            })
        }
        Command::Verify {
            h,
            n_max,
            format,
            out,
        } => {
            let texts: Vec<String> = if h.is_empty() {
                DEFAULT_VERIFY_SAMPLE
                    .iter()
                    .map(|s| s.to_string())
                    .collect()
            } else {
                h
            };
            let samples = texts
                .iter()
                .map(|t| parse_h(t))
                .collect::<Result<Vec<_>, _>>()?;
            let model = verifycmd::build_verify(&samples, n_max);
            let falsified = !model.all_pass();
            Ok(Outcome {
                text: model.render(format),
                falsified,
                out,
            })
        }
        Command::Series {
            kind,
            h,
            l,
            order,
            variant,
            format,
            out,
        } => {
            let params = parse_h(&h)?;
            let model = seriescmd::build_series(kind, &params, l, order, variant)?;
            let falsified = !model.any_match();
            Ok(Outcome {
                text: model.render(format),
                falsified,
                out,
            })
        }
    }
}
