//! Command-line front end: tableau enumeration, weight-space bases,
//! transition matrices, dimension tables, and the verification suites.
//!
//! Exit codes: 0 success, 1 verification failure, 2 invalid input,
//! 3 capacity exceeded.

mod output;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use output::{dims_payload, render, weight_from_counts, Format, Payload};
use pfb_core::basis::{build_basis, transition_matrix};
use pfb_core::error::Error;
use pfb_core::tableaux::enumerate_ssyt;
use pfb_core::verify::{
    verify_adjointness, verify_basis, verify_character, verify_triple_relations,
    DEFAULT_CAPACITY_BITS,
};

/// Environment variable overriding the mp+p capacity guard of the
/// exhaustive verification suites.
const CAPACITY_ENV: &str = "PFB_CAPACITY_BITS";

#[derive(Parser)]
#[command(
    name = "pfb",
    version,
    about = "Exact Grassmann-Clifford computations: tableau bases of the polynomial module and exhaustive identity verification"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "ascii")]
    format: Format,
    /// Write output to this file instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate and order semistandard tableaux.
    Tableaux {
        #[command(subcommand)]
        command: TableauxCommand,
    },
    /// Build weight-space bases and their transition matrices.
    Basis {
        #[command(subcommand)]
        command: BasisCommand,
    },
    /// Run an exhaustive verification suite.
    Verify {
        #[command(subcommand)]
        command: VerifyCommand,
    },
    /// Tabulate weight-space dimensions for all weights up to a degree.
    Dims {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        p: usize,
        #[arg(long = "max-degree")]
        max_degree: usize,
    },
}

#[derive(Subcommand)]
enum TableauxCommand {
    /// All semistandard tableaux of the given weight.
    Enumerate {
        /// Weight as comma-separated counts, e.g. 2,1,1,1.
        #[arg(long)]
        weight: String,
        /// Keep only diagrams with at most this many columns.
        #[arg(long = "max-columns")]
        max_columns: Option<usize>,
    },
    /// The same tableaux, emphasizing the total order: the sorted chain.
    Order {
        #[arg(long)]
        weight: String,
    },
}

#[derive(Args)]
struct BasisArgs {
    #[arg(long)]
    m: usize,
    #[arg(long)]
    p: usize,
    /// Weight as comma-separated counts of length m.
    #[arg(long)]
    weight: String,
}

#[derive(Subcommand)]
enum BasisCommand {
    /// Construct the ordered basis of one weight space.
    Build(BasisArgs),
    /// The probe matrix of the weight space with its verdict flags.
    Transition(BasisArgs),
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    m: usize,
    #[arg(long)]
    p: usize,
    /// Largest |mu| to sweep (character and basis suites).
    #[arg(long = "max-degree")]
    max_degree: Option<usize>,
}

#[derive(Subcommand)]
enum VerifyCommand {
    /// The six double-commutator relations on every basis monomial.
    Relations(VerifyArgs),
    /// Adjointness of the vector variables and Dirac operators.
    Adjoint(VerifyArgs),
    /// Dimension consistency: word-span rank vs tableau counts.
    Character(VerifyArgs),
    /// Basis structure: diagonal, triangularity, support, rank,
    /// eigenvalues, construction routes.
    Basis(VerifyArgs),
}

fn parse_weight(text: &str) -> Result<Vec<usize>, Error> {
    let counts: Result<Vec<usize>, _> = text
        .split(',')
        .map(|part| part.trim().parse::<usize>())
        .collect();
    match counts {
        Ok(v) if !v.is_empty() => Ok(v),
        _ => Err(Error::InvalidArgument(format!(
            "weight must be a comma-separated list of nonnegative integers, got `{}`",
            text
        ))),
    }
}

fn weight_of_length(text: &str, m: usize) -> Result<pfb_core::tableaux::Weight, Error> {
    let counts = parse_weight(text)?;
    if counts.len() != m {
        return Err(Error::InvalidArgument(format!(
            "weight has {} entries, expected m = {}",
            counts.len(),
            m
        )));
    }
    Ok(weight_from_counts(counts))
}

fn capacity_bits() -> Result<usize, Error> {
    match std::env::var(CAPACITY_ENV) {
        Ok(text) => text.trim().parse::<usize>().map_err(|_| {
            Error::InvalidArgument(format!(
                "{} must be a nonnegative integer, got `{}`",
                CAPACITY_ENV, text
            ))
        }),
        Err(_) => Ok(DEFAULT_CAPACITY_BITS),
    }
}

/// Default sweep degree for the character and basis suites.
fn default_degree(m: usize, p: usize) -> usize {
    (m * p).min(4)
}

fn run(cli: &Cli) -> Result<(Payload, u8), Error> {
    match &cli.command {
        Command::Tableaux { command } => {
            let (weight, max_columns) = match command {
                TableauxCommand::Enumerate {
                    weight,
                    max_columns,
                } => (weight, *max_columns),
                TableauxCommand::Order { weight } => (weight, None),
            };
            let mu = weight_from_counts(parse_weight(weight)?);
            Ok((Payload::Tableaux(enumerate_ssyt(&mu, max_columns)), 0))
        }
        Command::Basis { command } => match command {
            BasisCommand::Build(args) => {
                let mu = weight_of_length(&args.weight, args.m)?;
                let report = build_basis(args.m, args.p, &mu)?;
                Ok((Payload::Basis(report), 0))
            }
            BasisCommand::Transition(args) => {
                let mu = weight_of_length(&args.weight, args.m)?;
                let report = transition_matrix(args.m, args.p, &mu)?;
                let ok = report.diag_ones && report.triangular && report.support_ok;
                Ok((Payload::Transition(report), u8::from(!ok)))
            }
        },
        Command::Verify { command } => {
            let bits = capacity_bits()?;
            let report = match command {
                VerifyCommand::Relations(args) => verify_triple_relations(args.m, args.p, bits)?,
                VerifyCommand::Adjoint(args) => verify_adjointness(args.m, args.p, bits)?,
                VerifyCommand::Character(args) => {
                    let degree = args
                        .max_degree
                        .unwrap_or_else(|| default_degree(args.m, args.p));
                    verify_character(args.m, args.p, degree)?
                }
                VerifyCommand::Basis(args) => {
                    let degree = args
                        .max_degree
                        .unwrap_or_else(|| default_degree(args.m, args.p));
                    verify_basis(args.m, args.p, degree, bits)?
                }
            };
            let code = u8::from(!report.passed());
            Ok((Payload::Verify(report), code))
        }
        Command::Dims { m, p, max_degree } => {
            pfb_core::algebra::Space::new(*m, *p)?;
            Ok((dims_payload(*m, *p, *max_degree), 0))
        }
    }
}

fn emit(cli: &Cli, text: &str) -> Result<(), Error> {
    match &cli.output {
        None => {
            print!("{}", text);
            Ok(())
        }
        Some(path) => fs::write(path, text).map_err(|err| {
            Error::InvalidArgument(format!("cannot write {}: {}", path.display(), err))
        }),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((payload, code)) => {
            let text = render(&payload, cli.format);
            if let Err(err) = emit(&cli, &text) {
                eprintln!("error: {}", err);
                return ExitCode::from(2);
            }
            ExitCode::from(code)
        }
        Err(err) => {
            eprintln!("error: {}", err);
            match err {
                Error::InvalidArgument(_) => ExitCode::from(2),
                Error::Capacity(_) => ExitCode::from(3),
            }
        }
    }
}
