//! `charblock`: character tables, blocks and decomposition matrices from the
//! command line.

mod commands;
mod render;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Parser, Debug)]
#[command(name = "charblock", version, about = "Exact character tables and p-modular blocks of finite groups")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Seed for the randomized eigenspace splitting.
    #[arg(long, default_value_t = 0, global = true)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Conjugacy classes of a permutation group.
    Classes { group: String },
    /// Ordinary character table of a permutation group.
    Chartab { group: String },
    /// Check a character table file.
    Verify { table: String },
    /// Block partition, defects and heights.
    Blocks {
        /// Character table file or permutation group file.
        input: String,
        #[arg(short)]
        p: u64,
    },
    /// Decomposition and Cartan matrices from a Brauer table.
    Decompose { table: String, brauer: String },
    /// Induce a class function of a subgroup.
    Induce {
        group: String,
        /// Generator file, or generators separated by `;`.
        subgroup: String,
        /// Class function file of the subgroup.
        charfile: String,
    },
    /// Blocks of the group induced from blocks of a subgroup.
    InducedBlock {
        group: String,
        subgroup: String,
        #[arg(short)]
        p: u64,
    },
    /// Brauer homomorphism for a p-subgroup, on class sums.
    BrauerHom { group: String, psubgroup: String },
    /// Number of blocks with a given normal defect group.
    Robinson {
        group: String,
        #[arg(short)]
        p: u64,
        /// Generators of the normal p-subgroup.
        #[arg(short = 'D')]
        d: String,
    },
    /// Kernel of a Frobenius group from its complement.
    FrobeniusKernel { group: String, subgroup: String },
    /// Check block idempotents and the radical of the center in the group algebra.
    Oracle {
        group: String,
        #[arg(short)]
        p: u64,
    },
    /// Structure read off a character table.
    Report { table: String },
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Lib(charblock::Error),
}

impl From<charblock::Error> for CliError {
    fn from(e: charblock::Error) -> Self {
        CliError::Lib(e)
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(1),
            };
        }
    };
    match commands::run(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(CliError::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
        Err(CliError::Lib(e)) => {
            eprintln!("error: {e}");
            if e.is_verification_failure() {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
    }
}
