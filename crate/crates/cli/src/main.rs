//! `qlab`: Schur Q-functions, the BKP hierarchy and their verifiers.

mod commands;
mod input;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(
    name = "qlab",
    version,
    about = "Exact Schur Q-functions and the BKP hierarchy"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Basis {
    /// Power sums p1, p3, ...
    P,
    /// Times x_n = 2 p_n / n
    X,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Classical Q_λ = φ_{λ1}⋯φ_{λl}(1)
    Q {
        /// Comma-separated integers, e.g. 3,1
        #[arg(allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, value_enum, default_value = "p")]
        basis: Basis,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Multiparameter Q_α^(a)
    Qa {
        /// Comma-separated positive integers
        alpha: String,
        /// zero, factorial, an inline list 0,a1,a2,... or a file with one
        #[arg(long)]
        params: String,
        #[arg(long, value_enum, default_value = "p")]
        basis: Basis,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// List the BKP equations up to a weight, one per y-monomial
    Hierarchy {
        #[arg(long)]
        max_weight: u32,
        /// Print coefficients before dropping odd D-degree monomials
        #[arg(long)]
        raw: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Apply every nontrivial hierarchy equation to τ·τ
    CheckBkp {
        /// q:LAMBDA, qa:ALPHA@PARAMS, or a JSON polynomial file
        #[arg(long)]
        tau: String,
        #[arg(long, default_value_t = 10)]
        max_weight: u32,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Check Ω(τ⊗τ) = τ⊗τ
    CheckBilinear {
        /// q:LAMBDA, qa:ALPHA@PARAMS, or a JSON polynomial file
        #[arg(long)]
        tau: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Compare vertex-operator results with the symmetrization oracle
    OracleCompare {
        /// Largest |λ| (or Σα) to compare
        #[arg(long, default_value_t = 6)]
        max_size: u32,
        /// Number of variables N
        #[arg(long, default_value_t = 6)]
        vars: usize,
        /// Random rational point sets per function
        #[arg(long, default_value_t = 3)]
        points: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Compare multiparameter functions for these parameters instead
        #[arg(long)]
        params: Option<String>,
        /// Symmetrize into a polynomial first instead of evaluating pointwise
        #[arg(long)]
        polynomial: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Q {
            lambda,
            basis,
            format,
        } => commands::q(&lambda, basis, format),
        Command::Qa {
            alpha,
            params,
            basis,
            format,
        } => commands::qa(&alpha, &params, basis, format),
        Command::Hierarchy {
            max_weight,
            raw,
            format,
        } => commands::hierarchy(max_weight, raw, format),
        Command::CheckBkp {
            tau,
            max_weight,
            format,
        } => commands::check_bkp(&tau, max_weight, format),
        Command::CheckBilinear { tau, format } => commands::check_bilinear(&tau, format),
        Command::OracleCompare {
            max_size,
            vars,
            points,
            seed,
            params,
            polynomial,
        } => commands::oracle_compare(&commands::OracleJob {
            max_size,
            vars,
            points,
            seed,
            params,
            polynomial,
        }),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
