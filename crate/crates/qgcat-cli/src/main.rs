mod commands;
mod report;
mod spec;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use qgcat::Error;

#[derive(Parser, Debug)]
#[command(name = "qgcat", version, about = "Representation categories of compact matrix quantum groups")]
pub struct Cli {
    #[command(subcommand)]
    pub cmd: Cmd,
    /// Spec file (JSON, scalars as strings).
    #[arg(long, global = true)]
    pub spec: Option<PathBuf>,
    /// Use a built-in generator set instead of a spec file: O+, U+, S+, B+.
    #[arg(long, global = true, conflicts_with = "spec")]
    pub preset: Option<String>,
    /// Dimension for --preset.
    #[arg(long = "n", global = true, default_value_t = 2)]
    pub n: usize,
    /// Report cutoff (overrides the spec).
    #[arg(long, global = true)]
    pub cutoff: Option<usize>,
    /// Work cutoff (overrides the spec).
    #[arg(long, global = true)]
    pub work: Option<usize>,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub json: Option<PathBuf>,
    /// Include wall time in the report (makes it non-deterministic).
    #[arg(long, global = true)]
    pub timing: bool,
}

#[derive(Subcommand, Debug)]
pub enum Cmd {
    /// Fixed-space dimensions of all words up to the report cutoff.
    Dims,
    /// Dimension and basis of Mor(from, to).
    Mor {
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
    },
    /// Degree of reflection certificate.
    Degree,
    /// Evaluate a structural predicate.
    Check {
        #[arg(long, value_enum)]
        predicate: Predicate,
    },
    /// Tensor or free complexification.
    Complexify {
        #[arg(long, conflicts_with = "free", required_unless_present = "free")]
        tensor: Option<u32>,
        #[arg(long)]
        free: Option<u32>,
        /// Adjoin the odd witness for degree-1 inputs.
        #[arg(long)]
        with_odd_witness: bool,
    },
    /// Glue an extended product table down to a two-coloured table.
    Glue {
        #[arg(long, value_enum, default_value_t = Product::Free)]
        product: Product,
        /// Modulus of the free factor, or half the exponent of the
        /// product relation for `times` (defaults to the spec modulus).
        #[arg(long)]
        k: Option<u32>,
    },
    /// Maximal or canonical ungluing.
    Unglue {
        #[arg(long, conflicts_with = "canonical", required_unless_present = "canonical")]
        maximal: Option<u32>,
        #[arg(long)]
        canonical: bool,
        /// Tensor-complexify the input by this modulus first.
        #[arg(long)]
        tensor: Option<u32>,
    },
    /// Check a theorem on the spec's table.
    Verify {
        #[arg(long, value_enum)]
        theorem: Theorem,
        /// Moduli for theorem A.
        #[arg(long, value_delimiter = ',', default_values_t = [0, 2, 3])]
        k: Vec<u32>,
        /// Free moduli for theorem C.
        #[arg(long, value_delimiter = ',', default_values_t = [0, 2, 3])]
        l: Vec<u32>,
        /// Theorem B for a finite modulus (evidence only).
        #[arg(long)]
        modulus: Option<u32>,
        /// Theorem E: tensor-complexify the input by this modulus first.
        #[arg(long)]
        tensor: Option<u32>,
    },
    /// Polynomial relations from a basis of Mor(from, to).
    Relations {
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Predicate {
    Global,
    Inversion,
    Alternating,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Product {
    Free,
    Times,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Theorem {
    A,
    B,
    C,
    D,
    E,
}

/// Failures with their exit codes.
#[derive(Debug)]
pub enum Failure {
    Lib(Error),
    Io(String),
    Verification,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        Failure::Lib(e)
    }
}

fn exit_code(f: &Failure) -> u8 {
    match f {
        Failure::Lib(Error::Cutoff(_)) => 3,
        Failure::Lib(Error::NotApplicable(_)) => 4,
        Failure::Lib(Error::TableMismatch(_)) | Failure::Verification => 1,
        Failure::Lib(_) | Failure::Io(_) => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = std::env::var("QGCAT_THREADS").ok().and_then(|s| s.parse().ok()) {
        qgcat::par::set_max_threads(n);
    }
    match commands::run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            match &f {
                Failure::Lib(e) => eprintln!("error: {e}"),
                Failure::Io(m) => eprintln!("error: {m}"),
                Failure::Verification => eprintln!("verification failed"),
            }
            ExitCode::from(exit_code(&f))
        }
    }
}
