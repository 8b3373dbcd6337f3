use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;

mod commands;

use commands::CliError;

/// Construct and verify symmetric designs, test their automorphism groups,
/// and rerun the arithmetic eliminations.
#[derive(Parser, Debug)]
#[command(name = "symdesign", version)]
struct Cli {
    /// Seed for the randomised factorisation steps.
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a design: a catalog name, `pg N Q`, or `diffset`.
    Construct(commands::ConstructArgs),
    /// Check that a design file is a symmetric design.
    Verify {
        design: std::path::PathBuf,
    },
    /// Report on a permutation group file.
    Group {
        action: GroupAction,
        group: std::path::PathBuf,
        /// 1-based point for subdegrees.
        #[arg(long, default_value_t = 1)]
        point: usize,
    },
    /// Flag-transitivity and primitivity of a group acting on a design.
    Flagtest {
        group: std::path::PathBuf,
        design: std::path::PathBuf,
    },
    /// Divisor scan for admissible (k, λ), over catalog rows or one (v, bound).
    Eliminate {
        /// Row id, source table (e.g. T6) or `all`.
        #[arg(long, conflicts_with_all = ["v", "bound", "lambda"])]
        table: Option<String>,
        #[arg(long, required_unless_present = "table")]
        v: Option<BigUint>,
        /// k must divide this number.
        #[arg(long, required_unless_present = "table")]
        bound: Option<BigUint>,
        /// Only keep pairs with this λ.
        #[arg(long)]
        lambda: Option<BigUint>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Parameter tuples of the imprimitive families for a prime λ.
    Families {
        #[arg(long)]
        lambda: u64,
    },
    /// Run the acceptance suite.
    Selftest {
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum GroupAction {
    Order,
    Orbits,
    Primitive,
    Subdegrees,
}

fn run(cli: Cli) -> Result<(), CliError> {
    let seed = cli.seed;
    match cli.command {
        Command::Construct(args) => commands::construct(&args),
        Command::Verify { design } => commands::verify(&design),
        Command::Group { action, group, point } => {
            let g = commands::read_group(&group)?;
            match action {
                GroupAction::Order => commands::group_order(&g),
                GroupAction::Orbits => commands::group_orbits(&g),
                GroupAction::Primitive => commands::group_primitive(&g),
                GroupAction::Subdegrees => commands::group_subdegrees(&g, point),
            }
        }
        Command::Flagtest { group, design } => commands::flagtest(&group, &design),
        Command::Eliminate {
            table,
            v,
            bound,
            lambda,
            jobs,
        } => match table {
            Some(t) => commands::eliminate_table(&t, jobs, seed),
            // clap guarantees both when there is no table
            None => commands::eliminate_one(&v.unwrap(), &bound.unwrap(), lambda.as_ref(), seed),
        },
        Command::Families { lambda } => commands::families(lambda),
        Command::Selftest { jobs } => commands::selftest(jobs, seed),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("symdesign: {e}");
            ExitCode::from(e.code())
        }
    }
}
