//! The `ffl` command line.
//!
//! [`run`] parses arguments, renders the whole report into memory and only
//! then writes it, so a failing command leaves the data sink untouched.

pub mod error;
pub mod parse;
mod report;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

pub use error::CliError;
pub use parse::{parse_class, parse_range, parse_tolerance, ClassArg, ToleranceArg};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
    Dot,
}

#[derive(Debug, Parser)]
#[command(
    name = "ffl",
    version,
    about = "Fibered classes of the magic manifold: invariants, graphs and sequences"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Root and convergence tolerance, e.g. 1e-12 or 1/1000.
    #[arg(long, global = true, value_parser = tolerance_value)]
    pub tolerance: Option<ToleranceArg>,

    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Norm, fiber topology, polynomial and dilatation of a class.
    Info {
        /// `x,y,z`, `i,j,k:+`, `i,j,k:-` or `j,k:0`
        #[arg(allow_hyphen_values = true)]
        class: String,
    },
    /// Dilatation polynomial with its root brackets.
    Poly {
        #[arg(allow_hyphen_values = true)]
        class: String,
    },
    /// The train-track digraph of a class.
    Graph {
        /// A class, or `i,j,k` when `--family` is given.
        #[arg(allow_hyphen_values = true)]
        class: String,
        /// Build from the named family instead of routing the class.
        #[arg(long)]
        family: Option<String>,
        /// Subdivide every edge to unit length.
        #[arg(long)]
        expand: bool,
    },
    /// Curve complex and clique polynomial of a class's digraph.
    Complex {
        #[arg(allow_hyphen_values = true)]
        class: String,
        #[arg(long)]
        family: Option<String>,
    },
    /// Growth rate times smallest clique root, over both signs of 1..=n cubed.
    Verify {
        #[arg(long, default_value_t = 4)]
        grid: i64,
    },
    /// Members of a named sequence.
    Sequence {
        name: String,
        /// Genus range, `A..B` or a single value.
        #[arg(long)]
        g: Option<String>,
        /// Index range for the braid and Whitehead families.
        #[arg(long)]
        n: Option<String>,
        /// Puncture range for tsai.
        #[arg(long)]
        p: Option<String>,
    },
    /// Primitive classes up to a norm bound, ranked by normalized entropy.
    Scan {
        #[arg(long, default_value_t = 20)]
        norm_max: i64,
        #[arg(long, default_value_t = ffl_core::atlas::DEFAULT_NORM_CAP)]
        cap: i64,
        #[arg(long, conflicts_with = "non_orientable")]
        orientable: bool,
        #[arg(long)]
        non_orientable: bool,
        #[arg(long)]
        genus: Option<u64>,
        /// `cusp:slope`, e.g. `beta:-1/2`.
        #[arg(long, allow_hyphen_values = true)]
        section: Option<String>,
    },
    /// Fill one cusp and describe the fiber of the filled manifold.
    Fill {
        /// `cusp:slope`
        #[arg(allow_hyphen_values = true)]
        section: String,
        #[arg(allow_hyphen_values = true)]
        class: String,
    },
    /// Known minimal dilatations, recomputed.
    Catalogue,
}

fn tolerance_value(s: &str) -> Result<ToleranceArg, String> {
    parse_tolerance(s).map_err(|e| e.to_string())
}

/// Runs the CLI; returns the exit status.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    let _ = write!(stdout, "{e}");
                    return 0;
                }
                _ => 64,
            };
            let _ = write!(stderr, "{e}");
            return code;
        }
    };
    match execute(&cli) {
        Ok(text) => {
            let written = match &cli.out {
                Some(path) => std::fs::write(path, &text),
                None => stdout.write_all(text.as_bytes()),
            };
            match written {
                Ok(()) => 0,
                Err(e) => {
                    let e = CliError::Io(e);
                    let _ = writeln!(stderr, "ffl: {e}");
                    e.exit_code()
                }
            }
        }
        Err(e) => {
            let _ = writeln!(stderr, "ffl: {e}");
            e.exit_code()
        }
    }
}

/// Renders the report for `cli` without writing anything.
pub fn execute(cli: &Cli) -> Result<String, CliError> {
    let tol = cli.tolerance.clone().unwrap_or_default();
    report::dispatch(&cli.command, cli.format, &tol)
}
