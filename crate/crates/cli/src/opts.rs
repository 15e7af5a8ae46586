//! Command-line surface.
//!
//! `incpoly <command> [--h EXPR] [--n-max N] [--l L] [--order N] [--at INT]
//! [--format markdown|latex|json|csv] [--variant printed|candidate|both]
//! [--out PATH]`. Exit codes: 0 success / all-pass, 1 falsification found,
//! 2 usage or parse error.

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "incpoly",
    version,
    about = "Exact tables, identities and generating functions of incomplete h(x)-Fibonacci/Lucas polynomials"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Render the triangular table of incomplete polynomials
    Table {
        #[arg(value_enum)]
        kind: TableKind,
        /// Generating polynomial h(x), e.g. "x", "2", "x^2+1"
        #[arg(long, default_value = "x")]
        h: String,
        /// Largest row index n (defaults: 10 for fib, 9 for lucas)
        #[arg(long = "n-max", value_parser = clap::value_parser!(u64).range(1..))]
        n_max: Option<u64>,
        #[arg(long, value_enum, default_value_t = Format::Markdown)]
        format: Format,
        /// Print cells with the literal variable letter instead of `h`
        #[arg(long)]
        literal_var: bool,
        /// Write output to a file instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Evaluate a family at an integer point and print exact values
    Eval {
        #[arg(value_enum)]
        kind: EvalKind,
        #[arg(long, default_value = "x")]
        h: String,
        #[arg(long = "n-max", default_value_t = 10, value_parser = clap::value_parser!(u64).range(1..))]
        n_max: u64,
        /// Superscript l (required for the incomplete kinds)
        #[arg(long)]
        l: Option<u64>,
        /// Integer evaluation point for x
        #[arg(long, allow_hyphen_values = true)]
        at: String,
        #[arg(long, value_enum, default_value_t = Format::Markdown)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Sweep the full identity catalog over a sample of h
    Verify {
        /// h sample; repeatable (default: 1, 2, x, x^2+1, 3x)
        #[arg(long = "h")]
        h: Vec<String>,
        #[arg(long = "n-max", default_value_t = 30, value_parser = clap::value_parser!(u64).range(1..))]
        n_max: u64,
        #[arg(long, value_enum, default_value_t = Format::Markdown)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Expand a closed-form generating function and compare it against the
    /// direct sequence
    Series {
        #[arg(value_enum)]
        kind: SeriesKind,
        #[arg(long, default_value = "x")]
        h: String,
        /// Superscript l (required for the incomplete kinds)
        #[arg(long)]
        l: Option<u64>,
        /// Truncation order (default 2l + 26)
        #[arg(long)]
        order: Option<usize>,
        /// Which incomplete-Lucas numerator to expand
        #[arg(long, value_enum, default_value_t = VariantArg::Both)]
        variant: VariantArg,
        #[arg(long, value_enum, default_value_t = Format::Markdown)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableKind {
    Fib,
    Lucas,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EvalKind {
    Fib,
    Lucas,
    #[value(name = "fib_incomplete")]
    FibIncomplete,
    #[value(name = "lucas_incomplete")]
    LucasIncomplete,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SeriesKind {
    #[value(name = "fib_complete")]
    FibComplete,
    #[value(name = "fib_incomplete")]
    FibIncomplete,
    #[value(name = "lucas_incomplete")]
    LucasIncomplete,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Markdown,
    Latex,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum VariantArg {
    Printed,
    Candidate,
    Both,
}
